// Acceptance suite: every criterion prints one pass/fail line; the binary
// exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <unordered_set>

#include "braid/amplifier.hpp"
#include "oracles.hpp"

using namespace braid;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int id;
  std::string name;
  std::function<bool(std::string&)> body;
};

// ---------------------------------------------------------------- 1 --------
bool golden_decompositions(std::string& detail) {
  int cases = 0;
  for (int n : {3, 4, 5}) {
    for (int N : {1, 2, 3}) {
      AltDecomposition d = alt_decompose(delta_power(n, 2 * N));
      if (d.top_index != N + 1 || d.b_led) {
        detail = "shape mismatch at n=" + std::to_string(n) + " N=" + std::to_string(N);
        return false;
      }
      std::vector<int> stair;
      for (int i = n - 2; i >= 1; --i) stair.push_back(i);
      auto expect_b = [&](int i) -> BraidWord {
        if (i == 0) return power(named_constant(Named::DeltaB, n), 2 * N);
        if (i <= N) return named_constant(Named::BPrime, n);
        return BraidWord::identity(n);
      };
      auto expect_a = [&](int i) -> BraidWord {
        if (i == 1) return BraidWord(n, stair);
        if (i <= N) return named_constant(Named::APrime, n);
        return BraidWord(n, {1});
      };
      for (int i = 0; i <= N + 1; ++i) {
        if (!equals(d.b_factor[i], expect_b(i))) {
          detail = "B-factor " + std::to_string(i) + " mismatch at n=" + std::to_string(n) +
                   " N=" + std::to_string(N);
          return false;
        }
      }
      for (int i = 1; i <= N + 1; ++i) {
        if (!equals(d.a_factor[i], expect_a(i))) {
          detail = "A-factor " + std::to_string(i) + " mismatch at n=" + std::to_string(n) +
                   " N=" + std::to_string(N);
          return false;
        }
      }
      ++cases;
    }
  }
  detail = std::to_string(cases) + " exact factorizations";
  return true;
}

// ---------------------------------------------------------------- 2 --------
bool sandwich(std::string& detail) {
  std::mt19937 rng(1002);
  std::uniform_int_distribution<int> pick_n(3, 5), pick_len(1, 25);
  int checked = 0;
  for (int it = 0; it < 1000; ++it) {
    int n = pick_n(rng);
    BraidWord x = oracle::random_word(rng, n, pick_len(rng), true);
    int l = alt_length(x);
    if (!less(delta_power(n, 2 * l - 4), x) || !less(x, delta_power(n, 2 * l))) {
      detail = "violation at word " + format_word(x) + " (n=" + std::to_string(n) + ")";
      return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + " random positive braids, zero violations";
  return true;
}

// ---------------------------------------------------------------- 3 --------
bool top_factor_rule(std::string& detail) {
  std::mt19937 rng(1003);
  std::uniform_int_distribution<int> pick_n(3, 4), pick_len(1, 10), pick_blen(1, 3);
  int checked = 0, attempts = 0;
  while (checked < 500 && attempts < 200000) {
    ++attempts;
    int n = pick_n(rng);
    BraidWord x = oracle::random_word(rng, n, pick_len(rng), true);
    AltDecomposition dx = alt_decompose(x);
    if (!dx.b_led) continue;
    // multiply by a word of the B-parabolic on the left
    std::uniform_int_distribution<int> gen(2, n - 1);
    std::vector<int> bl(pick_blen(rng));
    for (auto& e : bl) e = gen(rng);
    BraidWord y = concat(BraidWord(n, bl), x);
    AltDecomposition dy = alt_decompose(y);
    if (!dy.b_led || dy.top_index != dx.top_index) continue;
    const BraidWord& bx = dx.b_factor[dx.top_index];
    const BraidWord& by = dy.b_factor[dy.top_index];
    if (equals(bx, by) || !right_divides(bx, by)) continue;
    auto fast = fast_compare(x, y);
    if (fast.verdict != FastVerdict::Less || fast.rule != FastRule::TopFactor) {
      detail = "fast comparator did not fire on a constructed pair";
      return false;
    }
    if (compare(x, y).verdict != Ordering::Less) {
      detail = "contradiction with the order engine at " + format_word(x) + " vs " +
               format_word(y);
      return false;
    }
    ++checked;
  }
  if (checked < 500) {
    detail = "only constructed " + std::to_string(checked) + " pairs";
    return false;
  }
  detail = std::to_string(checked) + " aligned pairs, zero contradictions";
  return true;
}

// ---------------------------------------------------------------- 4 --------
bool drop(std::string& detail) {
  std::mt19937 rng(1004);
  std::uniform_int_distribution<int> pick_n(3, 5), pick_len(1, 16), pick_k(1, 3), coin(0, 1);
  int checked = 0, attempts = 0;
  while (checked < 200 && attempts < 100000) {
    ++attempts;
    int n = pick_n(rng);
    BraidWord x;
    if (coin(rng)) {
      x = oracle::random_word(rng, n, pick_len(rng), true);
    } else {
      // biased family: central power times the inverse of a B-parabolic word,
      // kept when positive; these sit low under their threshold
      int k = pick_k(rng);
      std::uniform_int_distribution<int> gen(2, n - 1);
      std::vector<int> bl(pick_len(rng) % 5 + 1);
      for (auto& e : bl) e = gen(rng);
      BraidWord cand = concat(delta_power(n, 2 * k), invert(BraidWord(n, bl)));
      if (!is_positive(cand)) continue;
      x = canonical_form(cand).to_word();
    }
    AltDecomposition d = alt_decompose(x);
    if (!less(x, delta_power(n, 2 * d.top_index - 2))) continue;
    try {
      BraidWord dropped = parabolic_drop(x);
      if (!lives_in_parabolic(dropped, Side::A)) {
        detail = "drop output escaped the parabolic at " + format_word(x);
        return false;
      }
    } catch (const braid_error& e) {
      detail = std::string("drop failed: ") + e.what() + " at " + format_word(x);
      return false;
    }
    ++checked;
  }
  if (checked < 200) {
    detail = "only sampled " + std::to_string(checked) + " admissible words";
    return false;
  }
  detail = std::to_string(checked) + " drops, all inside the A-parabolic";
  return true;
}

// ---------------------------------------------------------------- 5 --------
bool pump(std::string& detail) {
  std::mt19937 rng(1005);
  int checked = 0;
  for (int n : {3, 4}) {
    BraidWord da4 = power(parabolic_half_twist(n, Side::A), 4);
    std::uniform_int_distribution<int> gen(1, n - 2), pick_len(1, 6);
    for (int it = 0; it < 50; ++it) {
      std::vector<int> tail(pick_len(rng));
      for (auto& e : tail) e = gen(rng);
      BraidWord beta = concat(da4, BraidWord(n, tail));
      if (!less(da4, beta)) {
        detail = "constructed beta does not exceed Delta_A^4";
        return false;
      }
      for (long long N = 1; N <= 5; ++N) {
        try {
          lemma_ind_pump(beta, N);  // verifies Delta^{2N} <_D result internally
        } catch (const braid_error& e) {
          detail = std::string("pump failed: ") + e.what();
          return false;
        }
        ++checked;
      }
    }
  }
  detail = std::to_string(checked) + " pumped inequalities verified";
  return true;
}

// ---------------------------------------------------------------- 6 --------
bool meet_oracle(std::string& detail) {
  long long elements = 0;
  for (int n = 2; n <= 4; ++n) {
    std::unordered_set<std::string> seen;
    std::vector<BraidWord> reps;
    for (int len = 0; len <= 8; ++len) {
      oracle::enumerate_positive_words(n, len, [&](const BraidWord& w) {
        std::string k = canonical_form(w).key();
        if (seen.insert(k).second) reps.push_back(w);
      });
    }
    for (const auto& x : reps) {
      auto divisors = brute_force_right_divisors(x);
      for (Side side : {Side::A, Side::B}) {
        BraidWord got = parabolic_max_right_divisor(x, side);
        if (!right_divides(got, x) || !lives_in_parabolic(got, side)) {
          detail = "meet is not a parabolic divisor at " + format_word(x);
          return false;
        }
        for (const auto& d : divisors) {
          if (!lives_in_parabolic(d, side)) continue;
          if (!right_divides(d, got)) {
            detail = "meet misses divisor " + format_word(d) + " of " + format_word(x);
            return false;
          }
        }
      }
      ++elements;
    }
  }
  detail = std::to_string(elements) + " positive elements, exhaustive, zero mismatches";
  return true;
}

// ---------------------------------------------------------------- 7 --------
bool order_cross_validation(std::string& detail) {
  oracle::SignTable table(3);
  long long words = 0;
  for (int len = 0; len <= 6; ++len) {
    bool ok = true;
    std::string bad;
    oracle::enumerate_signed_words(3, len, [&](const BraidWord& w) {
      if (!ok) return;
      int expected = table.sign_of(w);
      auto c = compare(BraidWord::identity(3), w);
      int got = c.verdict == Ordering::Less ? 1 : (c.verdict == Ordering::Greater ? -1 : 0);
      if (got != expected) {
        ok = false;
        bad = format_word(w);
      }
      ++words;
    });
    if (!ok) {
      detail = "disagreement at " + bad;
      return false;
    }
  }
  // second half: fast_compare never disagrees where it speaks
  std::mt19937 rng(1007);
  std::uniform_int_distribution<int> pick_n(3, 5), pick_len(1, 12);
  int verdicts = 0;
  for (int it = 0; it < 3000; ++it) {
    int n = pick_n(rng);
    BraidWord x = oracle::random_word(rng, n, pick_len(rng), true);
    BraidWord y = oracle::random_word(rng, n, pick_len(rng), true);
    auto fast = fast_compare(x, y);
    if (fast.verdict == FastVerdict::Unknown) continue;
    ++verdicts;
    Ordering expect = fast.verdict == FastVerdict::Less ? Ordering::Less : Ordering::Greater;
    if (compare(x, y).verdict != expect) {
      detail = "fast comparator contradiction at " + format_word(x) + " vs " + format_word(y);
      return false;
    }
  }
  detail = std::to_string(words) + " words against the sign oracle; " +
           std::to_string(verdicts) + " fast verdicts confirmed";
  return true;
}

// ---------------------------------------------------------------- 8 --------
bool amplifier_end_to_end(std::string& detail) {
  int runs = 0;
  for (int n : {3, 4}) {
    std::vector<BraidWord> gammas = {parse_word("-1 -1", n), delta_power(n, -2),
                                     normalize_generator(parse_word("-2 -1", n))};
    for (const auto& g : gammas) {
      for (long long N : {1, 2, 3}) {
        auto t0 = Clock::now();
        AmplifyResult r;
        try {
          r = amplify(g, N);  // internal receipts assert the branch inequalities
        } catch (const braid_error& e) {
          detail = std::string("amplify failed: ") + e.what();
          return false;
        }
        if (!equals(r.certificate.evaluate(), r.element)) {
          detail = "certificate mismatch";
          return false;
        }
        if (r.order_receipt.verdict != Ordering::Less ||
            compare(delta_power(n, 2 * N), r.element).verdict != Ordering::Less) {
          detail = "order receipt failed";
          return false;
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (secs > 120.0) {
          detail = "case exceeded 2 minutes";
          return false;
        }
        ++runs;
      }
    }
  }
  detail = std::to_string(runs) + " amplifier runs, certificates and receipts verified";
  return true;
}

// ---------------------------------------------------------------- 9 --------
bool pipeline(std::string& detail) {
  PipelineResult r;
  try {
    r = main_pipeline(parse_word("1 2", 3), parse_word("1 1", 3), 2);
  } catch (const braid_error& e) {
    detail = std::string("pipeline failed: ") + e.what();
    return false;
  }
  if (!underlying_permutation(r.knot_braid).is_cycle()) {
    detail = "closure is not a knot";
    return false;
  }
  if (r.genus_bound < 2) {
    detail = "genus bound below 2";
    return false;
  }
  if (r.receipts.beta_exceeds.verdict != Ordering::Less) {
    detail = "precondition receipt beta >_D alpha^{-1} Delta^4 failed";
    return false;
  }
  if (!equals(r.membership.evaluate(), r.beta)) {
    detail = "membership certificate mismatch";
    return false;
  }
  bool hyp = false;
  for (const auto& s : r.not_certified)
    if (s == "hyperbolicity") hyp = true;
  if (!hyp) {
    detail = "hyperbolicity must be reported as not certified";
    return false;
  }
  detail = "genus bound " + std::to_string(r.genus_bound) +
           ", receipts verified, hyperbolicity not certified";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "golden decompositions of central powers", golden_decompositions},
      {2, "ordering sandwich on random positive braids", sandwich},
      {3, "top-factor comparison rule soundness", top_factor_rule},
      {4, "parabolic drop lands in the A-parabolic", drop},
      {5, "pump inequality Delta^{2N} <_D beta(D beta D^{-1} beta)^N", pump},
      {6, "parabolic meet equals the brute-force divisor maximum", meet_oracle},
      {7, "order engine cross-validation", order_cross_validation},
      {8, "amplifier end-to-end with certificates", amplifier_end_to_end},
      {9, "knot pipeline with genus certificate", pipeline},
  };

  int failures = 0;
  for (auto& c : criteria) {
    auto t0 = Clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " (" << secs << "s)";
    if (!detail.empty()) line << " - " << detail;
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
  }
  return failures;
}
