#include "cli.hpp"

#include <cctype>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "braid/amplifier.hpp"

namespace braid::cli {

namespace {

using nlohmann::json;

// Accepts both the integer format ("1 -2 1") and letter shorthand ("aBa",
// a = sigma_1, A = sigma_1^{-1}); letters are normalized to integers.
BraidWord parse_flexible(const std::string& text, int n) {
  std::string normalized;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    bool alpha = true;
    for (char c : tok)
      if (!std::isalpha(static_cast<unsigned char>(c))) alpha = false;
    if (alpha && !tok.empty()) {
      for (char c : tok) {
        int v = std::islower(static_cast<unsigned char>(c)) ? (c - 'a' + 1) : -(c - 'A' + 1);
        normalized += std::to_string(v) + " ";
      }
    } else {
      normalized += tok + " ";
    }
  }
  return parse_word(normalized, n);
}

json certificate_json(const OrderCertificate& c) {
  return json{{"verdict", to_string(c.verdict)}, {"witness", format_word(c.witness)}};
}

json conjugate_product_json(const ConjugateProduct& cp) {
  json terms = json::array();
  for (const auto& t : cp.terms)
    terms.push_back({{"conjugator", format_word(t.conjugator)}, {"exponent", t.exponent}});
  return json{{"base", format_word(cp.base)}, {"terms", terms}};
}

json genus_json(const GenusCertificate& g) {
  json j{{"verdict", to_string(g.floor_receipt.verdict)},
         {"witness", format_word(g.floor_receipt.witness)},
         {"floor", g.floor},
         {"strict_at_floor", g.strict_at_floor}};
  if (g.genus_bound)
    j["genus_bound"] = *g.genus_bound;
  else
    j["genus_bound"] = nullptr;
  return j;
}

struct Ctx {
  bool json_out = false;
  ReduceOptions reduce;
  std::ostream* out = nullptr;
};

void emit(const Ctx& ctx, const json& j, const std::string& text) {
  if (ctx.json_out)
    *ctx.out << j.dump() << "\n";
  else
    *ctx.out << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"braid group computations: canonical forms, the Dehornoy ordering,"
               " alternating decompositions, normal-closure amplification and"
               " knot genus certificates"};
  app.require_subcommand(1);

  Ctx ctx;
  ctx.out = &out;
  app.add_flag("--json", ctx.json_out, "emit one machine-readable JSON record");
  long long max_steps = 10'000'000;
  app.add_option("--max-steps", max_steps, "handle reduction step cap");

  std::function<void()> action;

  // ---- normalize ----
  {
    auto* c = app.add_subcommand("normalize", "left-greedy canonical form of a word");
    c->fallthrough();
    auto n = std::make_shared<int>(0);
    auto w = std::make_shared<std::string>();
    c->add_option("--strands", *n, "strand count")->required();
    c->add_option("word", *w, "braid word")->required();
    c->callback([&ctx, n, w, &action]() {
      action = [&ctx, n, w]() {
        BraidWord u = parse_flexible(*w, *n);
        CanonicalForm cf = canonical_form(u);
        json factors = json::array();
        std::string text = "infimum: " + std::to_string(cf.inf) + "\n";
        text += "canonical length: " + std::to_string(cf.canonical_length()) + "\n";
        for (const auto& f : cf.factors) {
          BraidWord fw(u.strands, positive_letters(f));
          factors.push_back(format_word(fw));
          text += "factor: " + format_word(fw) + "\n";
        }
        BraidWord round = cf.to_word();
        text += "word: " + format_word(round) + "\n";
        emit(ctx,
             json{{"strands", *n},
                  {"infimum", cf.inf},
                  {"canonical_length", cf.canonical_length()},
                  {"factors", factors},
                  {"word", format_word(round)}},
             text);
      };
    });
  }

  // ---- equal ----
  {
    auto* c = app.add_subcommand("equal", "decide equality of two words");
    c->fallthrough();
    auto n = std::make_shared<int>(0);
    auto w1 = std::make_shared<std::string>();
    auto w2 = std::make_shared<std::string>();
    c->add_option("--strands", *n, "strand count")->required();
    c->add_option("u", *w1)->required();
    c->add_option("v", *w2)->required();
    c->callback([&ctx, n, w1, w2, &action]() {
      action = [&ctx, n, w1, w2]() {
        bool eq = equals(parse_flexible(*w1, *n), parse_flexible(*w2, *n));
        emit(ctx, json{{"equal", eq}}, eq ? "equal\n" : "not equal\n");
      };
    });
  }

  // ---- positive ----
  {
    auto* c = app.add_subcommand("positive", "membership in the positive monoid");
    c->fallthrough();
    auto n = std::make_shared<int>(0);
    auto w = std::make_shared<std::string>();
    c->add_option("--strands", *n, "strand count")->required();
    c->add_option("word", *w)->required();
    c->callback([&ctx, n, w, &action]() {
      action = [&ctx, n, w]() {
        CanonicalForm cf = canonical_form(parse_flexible(*w, *n));
        bool pos = cf.inf >= 0;
        emit(ctx, json{{"positive", pos}, {"infimum", cf.inf}},
             pos ? "positive\n" : "not positive\n");
      };
    });
  }

  // ---- meet ----
  {
    auto* c = app.add_subcommand("meet", "maximal parabolic right divisor of a positive word");
    c->fallthrough();
    auto n = std::make_shared<int>(0);
    auto w = std::make_shared<std::string>();
    auto side = std::make_shared<std::string>("B");
    c->add_option("--strands", *n, "strand count")->required();
    c->add_option("--side", *side, "A or B")->check(CLI::IsMember({"A", "B"}));
    c->add_option("word", *w)->required();
    c->callback([&ctx, n, w, side, &action]() {
      action = [&ctx, n, w, side]() {
        Side s = (*side == "A") ? Side::A : Side::B;
        BraidWord d = parabolic_max_right_divisor(parse_flexible(*w, *n), s);
        emit(ctx, json{{"side", *side}, {"divisor", format_word(d)}},
             "divisor: " + format_word(d) + "\n");
      };
    });
  }

  // ---- decompose ----
  {
    auto* c = app.add_subcommand("decompose", "alternating decomposition of a positive word");
    c->fallthrough();
    auto n = std::make_shared<int>(0);
    auto w = std::make_shared<std::string>();
    c->add_option("--strands", *n, "strand count")->required();
    c->add_option("word", *w)->required();
    c->callback([&ctx, n, w, &action]() {
      action = [&ctx, n, w]() {
        AltDecomposition d = alt_decompose(parse_flexible(*w, *n));
        json factors = json::array();
        std::string text;
        for (const auto& r : d.records()) {
          std::string side = r.side == Side::A ? "A" : "B";
          factors.push_back({{"side", side}, {"index", r.index}, {"word", format_word(r.word)}});
          text += side + "[" + std::to_string(r.index) + "]: " + format_word(r.word) + "\n";
        }
        text += "top index: " + std::to_string(d.top_index) + "\n";
        text += "length: " + std::to_string(d.length()) + "\n";
        emit(ctx,
             json{{"strands", *n},
                  {"length", d.length()},
                  {"top_index", d.top_index},
                  {"factors", factors}},
             text);
      };
    });
  }

  // ---- length ----
  {
    auto* c = app.add_subcommand("length", "alternating length of a positive word");
    c->fallthrough();
    auto n = std::make_shared<int>(0);
    auto w = std::make_shared<std::string>();
    c->add_option("--strands", *n, "strand count")->required();
    c->add_option("word", *w)->required();
    c->callback([&ctx, n, w, &action]() {
      action = [&ctx, n, w]() {
        int l = alt_length(parse_flexible(*w, *n));
        emit(ctx, json{{"length", l}}, "length: " + std::to_string(l) + "\n");
      };
    });
  }

  // ---- compare ----
  {
    auto* c = app.add_subcommand("compare", "decide the Dehornoy ordering of two words");
    c->fallthrough();
    auto n = std::make_shared<int>(0);
    auto w1 = std::make_shared<std::string>();
    auto w2 = std::make_shared<std::string>();
    c->add_option("--strands", *n, "strand count")->required();
    c->add_option("u", *w1)->required();
    c->add_option("v", *w2)->required();
    c->callback([&ctx, n, w1, w2, &action]() {
      action = [&ctx, n, w1, w2]() {
        BraidWord u = parse_flexible(*w1, *n), v = parse_flexible(*w2, *n);
        OrderCertificate oc = compare(u, v, ctx.reduce);
        std::string rel = oc.verdict == Ordering::Less
                              ? " <_D "
                              : (oc.verdict == Ordering::Greater ? " >_D " : " = ");
        std::string text = std::string(to_string(oc.verdict)) + " (" + format_word(u) + rel +
                           format_word(v) + "), witness: " + format_word(oc.witness) + "\n";
        emit(ctx, certificate_json(oc), text);
      };
    });
  }

  // ---- floor ----
  {
    auto* c = app.add_subcommand("floor", "Dehornoy floor of a word");
    c->fallthrough();
    auto n = std::make_shared<int>(0);
    auto w = std::make_shared<std::string>();
    c->add_option("--strands", *n, "strand count")->required();
    c->add_option("word", *w)->required();
    c->callback([&ctx, n, w, &action]() {
      action = [&ctx, n, w]() {
        long long f = dehornoy_floor(parse_flexible(*w, *n), ctx.reduce);
        emit(ctx, json{{"floor", f}}, "floor: " + std::to_string(f) + "\n");
      };
    });
  }

  // ---- certify-genus ----
  {
    auto* c = app.add_subcommand("certify-genus", "knot genus lower bound from the ordering");
    c->fallthrough();
    auto n = std::make_shared<int>(0);
    auto w = std::make_shared<std::string>();
    c->add_option("--strands", *n, "strand count")->required();
    c->add_option("word", *w)->required();
    c->callback([&ctx, n, w, &action]() {
      action = [&ctx, n, w]() {
        GenusCertificate g = genus_certificate(parse_flexible(*w, *n), ctx.reduce);
        std::string text = g.genus_bound
                               ? "genus >= " + std::to_string(*g.genus_bound) + "\n"
                               : "no certificate (bound below 1)\n";
        text += "floor: " + std::to_string(g.floor) + "\n";
        emit(ctx, genus_json(g), text);
      };
    });
  }

  // ---- amplify ----
  {
    auto* c = app.add_subcommand(
        "amplify", "element of the normal closure of gamma exceeding Delta^{2 target}");
    c->fallthrough();
    auto n = std::make_shared<int>(0);
    auto gw = std::make_shared<std::string>();
    auto target = std::make_shared<long long>(1);
    auto cap = std::make_shared<int>(64);
    c->add_option("--strands", *n, "strand count")->required();
    c->add_option("--gamma", *gw, "closure generator")->required();
    c->add_option("--target", *target, "central power to exceed")->required();
    c->add_option("--cap", *cap, "escalation cap for the iteration branch");
    c->callback([&ctx, n, gw, target, cap, &action]() {
      action = [&ctx, n, gw, target, cap]() {
        AmplifyOptions opts;
        opts.reduce = ctx.reduce;
        opts.escalation_cap = *cap;
        AmplifyResult r = amplify(parse_flexible(*gw, *n), *target, opts);
        std::string text = "element: " + format_word(r.element) + "\n";
        text += "receipt: Delta^{2*" + std::to_string(*target) +
                "} <_D element, witness: " + format_word(r.order_receipt.witness) + "\n";
        text += "certificate terms: " + std::to_string(r.certificate.terms.size()) + "\n";
        for (const auto& line : r.branch_trace) text += "trace: " + line + "\n";
        emit(ctx,
             json{{"element", format_word(r.element)},
                  {"target", r.target},
                  {"certificate", conjugate_product_json(r.certificate)},
                  {"order_receipt", certificate_json(r.order_receipt)},
                  {"branch_trace", r.branch_trace}},
             text);
      };
    });
  }

  // ---- pipeline ----
  {
    auto* c = app.add_subcommand(
        "pipeline", "build a knot braid alpha*beta with a certified genus bound");
    c->fallthrough();
    auto n = std::make_shared<int>(0);
    auto aw = std::make_shared<std::string>();
    auto gw = std::make_shared<std::string>();
    auto genus = std::make_shared<long long>(1);
    c->add_option("--strands", *n, "strand count")->required();
    c->add_option("--alpha", *aw, "braid whose closure is a knot")->required();
    c->add_option("--gamma", *gw, "normal closure generator")->required();
    c->add_option("--genus", *genus, "requested genus lower bound")->required();
    c->callback([&ctx, n, aw, gw, genus, &action]() {
      action = [&ctx, n, aw, gw, genus]() {
        AmplifyOptions opts;
        opts.reduce = ctx.reduce;
        PipelineResult r =
            main_pipeline(parse_flexible(*aw, *n), parse_flexible(*gw, *n), *genus, opts);
        std::string text = "knot braid: " + format_word(r.knot_braid) + "\n";
        text += "genus bound: >= " + std::to_string(r.genus_bound) + "\n";
        text += "beta: " + format_word(r.beta) + "\n";
        text += "membership certificate terms: " + std::to_string(r.membership.terms.size()) +
                "\n";
        for (const auto& line : r.branch_trace) text += "trace: " + line + "\n";
        text += "not certified: hyperbolicity, braid index\n";
        emit(ctx,
             json{{"knot_braid", format_word(r.knot_braid)},
                  {"beta", format_word(r.beta)},
                  {"genus_bound", r.genus_bound},
                  {"membership", conjugate_product_json(r.membership)},
                  {"receipts",
                   {{"beta_exceeds", certificate_json(r.receipts.beta_exceeds)},
                    {"genus", genus_json(r.receipts.genus)}}},
                  {"branch_trace", r.branch_trace},
                  {"not_certified", r.not_certified}},
             text);
      };
    });
  }

  // ---- oracle-divisors ----
  {
    auto* c = app.add_subcommand("oracle-divisors",
                                 "all positive right divisors, by exhaustive search");
    c->fallthrough();
    auto n = std::make_shared<int>(0);
    auto w = std::make_shared<std::string>();
    auto cap = std::make_shared<int>(12);
    c->add_option("--strands", *n, "strand count")->required();
    c->add_option("--max-len", *cap, "length cap on the input word");
    c->add_option("word", *w)->required();
    c->callback([&ctx, n, w, cap, &action]() {
      action = [&ctx, n, w, cap]() {
        auto ds = brute_force_right_divisors(parse_flexible(*w, *n), *cap);
        json arr = json::array();
        std::string text;
        for (const auto& d : ds) {
          arr.push_back(format_word(d));
          text += format_word(d) + "\n";
        }
        emit(ctx, json{{"divisors", arr}}, text);
      };
    });
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  ctx.reduce.max_steps = max_steps;

  try {
    action();
  } catch (const braid_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace braid::cli
