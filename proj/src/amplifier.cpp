#include "braid/amplifier.hpp"

#include <algorithm>

namespace braid {

BraidWord ConjugateProduct::evaluate() const {
  BraidWord r = BraidWord::identity(base.strands);
  for (const auto& t : terms) {
    BraidWord mid = t.exponent > 0 ? base : invert(base);
    r = concat(r, conjugate(t.conjugator, mid));
  }
  return free_reduce(r);
}

ConjugateProduct ConjugateProduct::conjugated(const BraidWord& c) const {
  ConjugateProduct r;
  r.base = base;
  r.terms.reserve(terms.size());
  for (const auto& t : terms) r.terms.push_back({free_reduce(concat(c, t.conjugator)), t.exponent});
  return r;
}

ConjugateProduct ConjugateProduct::inverse() const {
  ConjugateProduct r;
  r.base = base;
  r.terms.reserve(terms.size());
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    r.terms.push_back({it->conjugator, -it->exponent});
  return r;
}

ConjugateProduct ConjugateProduct::times(const ConjugateProduct& other) const {
  if (!(base == other.base)) throw braid_error("certificate bases differ");
  ConjugateProduct r = *this;
  r.terms.insert(r.terms.end(), other.terms.begin(), other.terms.end());
  return r;
}

ConjugateProduct ConjugateProduct::repeat(long long k) const {
  if (k < 1) throw braid_error("repeat count must be positive");
  ConjugateProduct r;
  r.base = base;
  r.terms.reserve(terms.size() * k);
  for (long long i = 0; i < k; ++i) r.terms.insert(r.terms.end(), terms.begin(), terms.end());
  return r;
}

BraidWord normalize_generator(const BraidWord& g, const ReduceOptions& opts) {
  auto c = compare(g, BraidWord::identity(g.strands), opts);
  if (c.verdict == Ordering::Equal) throw braid_error("generator must be non-trivial");
  return c.verdict == Ordering::Less ? g : invert(g);
}

AlignResult conjugate_align(const BraidWord& g, const ReduceOptions& opts) {
  int n = g.strands;
  BraidWord one = BraidWord::identity(n);
  if (compare(g, one, opts).verdict != Ordering::Less)
    throw braid_error("conjugate_align requires gamma <_D 1");

  AlignResult al;
  al.strands = n;
  al.base = g;
  al.base_sign = 1;
  al.N = min_central_power_to_positive(g);
  BraidWord x = free_reduce(concat(delta_power(n, 2 * al.N), g));
  AltDecomposition d = alt_decompose(x);
  al.m = d.top_index;
  al.conjugator = d.b_led ? d.b_factor[d.top_index] : one;
  al.gamma0 = free_reduce(concat(concat(invert(al.conjugator), g), al.conjugator));
  al.certificate.base = g;
  al.certificate.terms = {{invert(al.conjugator), 1}};

  if (al.m - al.N > 1) throw receipt_error("alignment violated m - N <= 1");
  if (compare(al.gamma0, g, opts).verdict == Ordering::Greater)
    throw receipt_error("alignment violated gamma0 <=_D gamma");
  return al;
}

namespace {

std::string trace_line(int n, const std::string& msg) {
  return "B" + std::to_string(n) + ": " + msg;
}

// certificate whose terms conjugate base^{sign} by the given words
ConjugateProduct rebased_terms(const BraidWord& base, int sign,
                               const std::vector<BraidWord>& conjugators) {
  ConjugateProduct cp;
  cp.base = base;
  for (const auto& c : conjugators) cp.terms.push_back({c, sign});
  return cp;
}

AmplifyResult amplify_impl(const BraidWord& g, long long target, const AmplifyOptions& opts);

}  // namespace

AmplifyResult case_b_iterate(const AlignResult& al, long long target, const AmplifyOptions& opts) {
  if (al.m - al.N > 0) throw braid_error("iteration branch requires m - N <= 0");
  const int n = al.strands;
  const auto& ro = opts.reduce;
  BraidWord dlt = half_twist(n);
  BraidWord gp = free_reduce(concat(delta_power(n, 2 * al.N), al.gamma0));
  if (!is_positive(gp)) throw receipt_error("Delta^{2N} gamma0 is not positive");
  BraidWord tgp = free_reduce(conjugate(invert(dlt), gp));
  BraidWord block = concat(gp, tgp);

  for (long long i = std::max<long long>(target, 0);; ++i) {
    if (i - std::max<long long>(target, 0) > opts.escalation_cap)
      throw braid_error("iteration branch exceeded the escalation cap");
    BraidWord gamma_i = concat(power(block, i), gp);
    if (al.m >= 1) {
      long long la = alt_length(gamma_i);
      if (la > (2 * i + 1) * al.m - i)
        throw receipt_error("alternating length bound failed in the iteration branch");
    }
    BraidWord h = free_reduce(concat(delta_power(n, -2 * (2 * i + 1) * al.N), gamma_i));
    if (compare(h, delta_power(n, -2 * i), ro).verdict != Ordering::Less)
      throw receipt_error("smallness receipt failed in the iteration branch");
    BraidWord element = free_reduce(invert(h));
    auto receipt = compare(delta_power(n, 2 * target), element, ro);
    if (receipt.verdict != Ordering::Less) continue;  // escalate i

    // h = product over k = 1..2i+1 of e_k gamma0 e_k^{-1} with e_k
    // alternating between 1 and Delta^{-1}; the element is h^{-1}
    std::vector<BraidWord> conjs;
    BraidWord dinv = invert(dlt);
    BraidWord bm_inv = invert(al.conjugator);
    for (long long k = 1; k <= 2 * i + 1; ++k) {
      BraidWord e = (k % 2 == 0) ? dinv : BraidWord::identity(n);
      conjs.push_back(free_reduce(concat(e, bm_inv)));
    }
    ConjugateProduct h_cert = rebased_terms(al.base, al.base_sign, conjs);

    AmplifyResult res;
    res.element = element;
    res.certificate = h_cert.inverse();
    res.target = target;
    res.order_receipt = receipt;
    res.branch_trace.push_back(trace_line(
        n, "case B (m=" + std::to_string(al.m) + ", N=" + std::to_string(al.N) +
               "): i=" + std::to_string(i) + ", inverted small element"));
    return res;
  }
}

BraidWord lemma_ind_pump(const BraidWord& beta, long long N, const ReduceOptions& opts) {
  int n = beta.strands;
  if (N < 0) throw braid_error("pump exponent must be non-negative");
  if (!lives_in_parabolic(beta, Side::A))
    throw braid_error("pump requires an element of the A-parabolic");
  BraidWord da4 = power(parabolic_half_twist(n, Side::A), 4);
  if (compare(da4, beta, opts).verdict != Ordering::Less)
    throw braid_error("pump requires Delta_A^4 <_D beta");
  BraidWord dlt = half_twist(n);
  BraidWord round = concat(conjugate(dlt, beta), beta);
  BraidWord result = free_reduce(concat(beta, power(round, N)));
  if (compare(delta_power(n, 2 * N), result, opts).verdict != Ordering::Less)
    throw receipt_error("pump receipt Delta^{2N} <_D result failed");
  return result;
}

AmplifyResult case_a_descend(const AlignResult& al, long long target, const AmplifyOptions& opts) {
  if (al.m - al.N != 1) throw braid_error("descent branch requires m - N = 1");
  const int n = al.strands;
  const auto& ro = opts.reduce;
  BraidWord dlt = half_twist(n);
  BraidWord gamma_prime = free_reduce(conjugate(invert(dlt), al.gamma0));
  if (!lives_in_parabolic(gamma_prime, Side::A))
    throw receipt_error("descent conjugate did not land in the A-parabolic");

  // recurse one strand down aiming for the fixed threshold Delta_A^4
  BraidWord down = remove_strand(gamma_prime, n);
  AmplifyResult sub = amplify_impl(down, 2, opts);
  BraidWord gamma1 = embed(sub.element, n);
  BraidWord da4 = power(parabolic_half_twist(n, Side::A), 4);
  if (compare(da4, gamma1, ro).verdict != Ordering::Less)
    throw receipt_error("recursive element does not exceed Delta_A^4");

  BraidWord pumped = lemma_ind_pump(gamma1, target, ro);
  auto receipt = compare(delta_power(n, 2 * target), pumped, ro);
  if (receipt.verdict != Ordering::Less) throw receipt_error("descent pump receipt failed");

  // lift the recursive certificate: its base is `down`, which equals
  // c0 gamma^{sign} c0^{-1} in B_n with c0 = Delta^{-1} B_m^{-1}
  BraidWord c0 = free_reduce(concat(invert(dlt), invert(al.conjugator)));
  ConjugateProduct gamma1_cert;
  gamma1_cert.base = al.base;
  for (const auto& t : sub.certificate.terms) {
    gamma1_cert.terms.push_back(
        {free_reduce(concat(embed(t.conjugator, n), c0)), t.exponent * al.base_sign});
  }
  // pumped = gamma1 (Delta gamma1 Delta^{-1} gamma1)^target
  ConjugateProduct cert = gamma1_cert;
  ConjugateProduct twisted = gamma1_cert.conjugated(dlt);
  for (long long k = 0; k < target; ++k) cert = cert.times(twisted).times(gamma1_cert);

  AmplifyResult res;
  res.element = pumped;
  res.certificate = cert;
  res.target = target;
  res.order_receipt = receipt;
  res.branch_trace.push_back(trace_line(
      n, "case A (m=" + std::to_string(al.m) + ", N=" + std::to_string(al.N) +
             "): dropped conjugate to the A-parabolic, recursing on the normal closure"));
  for (const auto& line : sub.branch_trace) res.branch_trace.push_back("  " + line);
  res.branch_trace.push_back(
      trace_line(n, "pumped recursive element with N=" + std::to_string(target)));
  return res;
}

namespace {

AmplifyResult amplify_impl(const BraidWord& g, long long target, const AmplifyOptions& opts) {
  const int n = g.strands;
  const auto& ro = opts.reduce;
  if (target < 0) throw braid_error("amplification target must be non-negative");
  BraidWord one = BraidWord::identity(n);
  auto c0 = compare(g, one, ro);
  if (c0.verdict == Ordering::Equal) throw braid_error("generator must be non-trivial");
  int sign = c0.verdict == Ordering::Less ? 1 : -1;
  BraidWord gw = sign == 1 ? g : invert(g);

  if (n == 2) {
    // B_2 is infinite cyclic and the ordering is exponent order
    long long k = exponent_sum(gw);  // k < 0 since gw <_D 1
    long long t = (2 * target) / (-k) + 1;
    BraidWord element = power(gw, -t);
    auto receipt = compare(delta_power(2, 2 * target), element, ro);
    if (receipt.verdict != Ordering::Less) throw receipt_error("B_2 base case receipt failed");
    AmplifyResult res;
    res.element = element;
    res.certificate.base = g;
    for (long long i = 0; i < t; ++i) res.certificate.terms.push_back({one, -sign});
    res.target = target;
    res.order_receipt = receipt;
    res.branch_trace.push_back(
        trace_line(2, "base case: exponent arithmetic, power " + std::to_string(t)));
    return res;
  }

  AlignResult al = conjugate_align(gw, ro);
  al.base = g;
  al.base_sign = sign;
  al.certificate.base = g;
  al.certificate.terms = {{invert(al.conjugator), sign}};

  AmplifyResult res = (al.m - al.N == 1) ? case_a_descend(al, target, opts)
                                         : case_b_iterate(al, target, opts);
  if (!equals(res.certificate.evaluate(), res.element))
    throw receipt_error("certificate does not evaluate to the element");
  return res;
}

}  // namespace

AmplifyResult amplify(const BraidWord& g, long long target, const AmplifyOptions& opts) {
  return amplify_impl(g, target, opts);
}

AmplifyResult purify(const AmplifyResult& in, long long target, const AmplifyOptions& opts) {
  const auto& ro = opts.reduce;
  AmplifyResult cur = in;
  for (int tries = 0;; ++tries) {
    int k = underlying_permutation(cur.element).order();
    if (k == 1) {
      if (!is_pure(cur.element)) throw receipt_error("purified element is not pure");
      return cur;
    }
    BraidWord powered = free_reduce(power(cur.element, k));
    auto receipt = compare(delta_power(powered.strands, 2 * target), powered, ro);
    if (receipt.verdict == Ordering::Less) {
      AmplifyResult res;
      res.element = powered;
      res.certificate = cur.certificate.repeat(k);
      res.target = target;
      res.order_receipt = receipt;
      res.branch_trace = cur.branch_trace;
      res.branch_trace.push_back("purify: raised to permutation order " + std::to_string(k));
      if (!is_pure(res.element)) throw receipt_error("purified element is not pure");
      if (!equals(res.certificate.evaluate(), res.element))
        throw receipt_error("certificate does not evaluate to the purified element");
      return res;
    }
    if (tries >= 4) throw receipt_error("purification receipt kept failing");
    cur = amplify(cur.certificate.base, target + 1 + tries, opts);
  }
}

CommutatorCandidate commutator_candidate(const BraidWord& beta, const BraidWord& theta,
                                         long long N) {
  int n = beta.strands;
  if (theta.strands != n) throw braid_error("strand count mismatch");
  bool central = true;
  for (int i = 1; i < n && central; ++i) {
    BraidWord gen(n, {i});
    if (!equals(concat(beta, gen), concat(gen, beta))) central = false;
  }
  if (central) throw braid_error("commutator candidate requires a non-central element");

  BraidWord tn = power(theta, N);
  CommutatorCandidate cc;
  cc.word = concat(concat(tn, beta), concat(invert(tn), invert(beta)));
  cc.certificate.base = beta;
  cc.certificate.terms = {{tn, 1}, {BraidWord::identity(n), -1}};
  return cc;
}

CommutatorCandidate commutator_candidate(const BraidWord& beta, long long N) {
  int n = beta.strands;
  std::vector<int> rotation;
  for (int i = 1; i < n; ++i) rotation.push_back(i);
  return commutator_candidate(beta, BraidWord(n, rotation), N);
}

PipelineResult main_pipeline(const BraidWord& alpha, const BraidWord& g, long long N,
                             const AmplifyOptions& opts) {
  const int n = alpha.strands;
  const auto& ro = opts.reduce;
  if (g.strands != n) throw braid_error("strand count mismatch");
  if (!underlying_permutation(alpha).is_cycle())
    throw braid_error("closure of alpha is not a knot: permutation is not an n-cycle");
  if (equals(g, BraidWord::identity(n))) throw braid_error("gamma must be non-trivial");
  if (N < 0) throw braid_error("genus target must be non-negative");

  BraidWord bound = free_reduce(concat(invert(alpha), delta_power(n, 2 * N)));
  long long target = std::max<long long>(dehornoy_floor(bound, ro) + 1, 0);

  AmplifyResult amp = amplify(g, target, opts);
  AmplifyResult pure = purify(amp, target, opts);
  const BraidWord& beta = pure.element;

  PipelineResult res;
  res.receipts.beta_exceeds = compare(bound, beta, ro);
  if (res.receipts.beta_exceeds.verdict != Ordering::Less)
    throw receipt_error("pipeline receipt beta >_D alpha^{-1} Delta^{2N} failed");

  res.knot_braid = free_reduce(concat(alpha, beta));
  if (!underlying_permutation(res.knot_braid).is_cycle())
    throw receipt_error("closure of alpha beta is not a knot");
  res.receipts.genus = genus_certificate(res.knot_braid, ro);
  res.genus_bound = res.receipts.genus.genus_bound.value_or(0);
  if (res.genus_bound < N) throw receipt_error("genus certificate fell below the requested bound");

  res.beta = beta;
  res.membership = pure.certificate;
  res.branch_trace = pure.branch_trace;
  res.not_certified = {"hyperbolicity", "braid_index"};
  return res;
}

}  // namespace braid
