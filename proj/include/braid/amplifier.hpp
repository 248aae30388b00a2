#pragma once

#include <string>

#include "braid/alternating.hpp"

namespace braid {

// Formal product of conjugates c_k * base^{e_k} * c_k^{-1} with e_k = +-1.
// Whatever the terms are, the evaluated element lies in the normal closure
// of the base; the terms are a checkable membership certificate.
struct ConjugateProduct {
  BraidWord base;
  struct Term {
    BraidWord conjugator;
    int exponent;  // +1 or -1
  };
  std::vector<Term> terms;

  BraidWord evaluate() const;
  ConjugateProduct conjugated(const BraidWord& c) const;  // c P c^{-1}
  ConjugateProduct inverse() const;
  ConjugateProduct times(const ConjugateProduct& other) const;
  ConjugateProduct repeat(long long k) const;  // k >= 1 concatenated copies
};

struct AmplifyOptions {
  int escalation_cap = 64;
  ReduceOptions reduce;
};

struct AmplifyResult {
  BraidWord element;
  ConjugateProduct certificate;
  long long target = 0;
  OrderCertificate order_receipt;  // Delta^{2 target} <_D element
  std::vector<std::string> branch_trace;
};

// gamma or gamma^{-1}, whichever is <_D 1; error on the identity
BraidWord normalize_generator(const BraidWord& g, const ReduceOptions& opts = {});

// Conjugation data for a generator gamma <_D 1: N is the smallest central
// power making Delta^{2N} gamma positive, m the top index of its alternating
// decomposition, and gamma0 = B_m^{-1} gamma B_m (gamma itself when the
// decomposition is led by an A-factor).  Checks gamma0 <=_D gamma <_D 1 and
// m - N <= 1 before returning.
struct AlignResult {
  int strands = 3;
  BraidWord base;      // certificate base (defaults to gamma)
  int base_sign = 1;   // gamma = base^{base_sign}
  BraidWord gamma0;
  ConjugateProduct certificate;  // evaluates to gamma0
  BraidWord conjugator;          // B_m (identity when trivial)
  long long m = 0;
  long long N = 0;
};

AlignResult conjugate_align(const BraidWord& g, const ReduceOptions& opts = {});

// m - N <= 0 branch: gamma_i = [gamma+ (Delta^{-1} gamma+ Delta)]^i gamma+
// with gamma+ = Delta^{2N} gamma0 produces arbitrarily small elements
// Delta^{-2(2i+1)N} gamma_i of the closure; the returned element is the
// inverse of the first one whose receipt Delta^{2 target} <_D element passes.
AmplifyResult case_b_iterate(const AlignResult& al, long long target,
                             const AmplifyOptions& opts = {});

// m - N = 1 branch: Delta^{-1} gamma0 Delta lands in the A-parabolic
// (checked), the construction recurses on one strand fewer until the
// recursive element exceeds Delta_A^4, then pumps it back up.
AmplifyResult case_a_descend(const AlignResult& al, long long target,
                             const AmplifyOptions& opts = {});

// beta (Delta beta Delta^{-1} beta)^N for beta in the A-parabolic with
// Delta_A^4 <_D beta; the receipt Delta^{2N} <_D result is verified
BraidWord lemma_ind_pump(const BraidWord& beta, long long N, const ReduceOptions& opts = {});

// From any nontrivial gamma, an element of its normal closure exceeding
// Delta^{2 target}, with membership certificate and order receipt.
AmplifyResult amplify(const BraidWord& g, long long target, const AmplifyOptions& opts = {});

// Raise the element to the order of its permutation so it becomes pure; the
// order receipt is re-verified (re-amplifying at a higher target if needed).
AmplifyResult purify(const AmplifyResult& in, long long target, const AmplifyOptions& opts = {});

struct CommutatorCandidate {
  BraidWord word;  // theta^N beta theta^{-N} beta^{-1}
  ConjugateProduct certificate;
};

// Candidate pseudo-Anosov element of the closure of beta.  No dynamical
// property is verified here; the output is a candidate only.  The overload
// without theta uses the rotation word sigma_1 sigma_2 ... sigma_{n-1}.
CommutatorCandidate commutator_candidate(const BraidWord& beta, const BraidWord& theta,
                                         long long N);
CommutatorCandidate commutator_candidate(const BraidWord& beta, long long N);

struct PipelineReceipts {
  OrderCertificate beta_exceeds;  // alpha^{-1} Delta^{2N} <_D beta
  GenusCertificate genus;         // for the knot braid alpha beta
};

struct PipelineResult {
  BraidWord knot_braid;  // alpha beta
  BraidWord beta;
  long long genus_bound = 0;
  ConjugateProduct membership;  // beta as a product of conjugates of gamma
  PipelineReceipts receipts;
  std::vector<std::string> branch_trace;
  std::vector<std::string> not_certified;  // hyperbolicity, braid index
};

// alpha must close to a knot; gamma must be nontrivial.  Produces a pure
// beta in the closure of gamma with beta >_D alpha^{-1} Delta^{2N}, so the
// closure of alpha beta is a knot of genus at least N.
PipelineResult main_pipeline(const BraidWord& alpha, const BraidWord& g, long long N,
                             const AmplifyOptions& opts = {});

}  // namespace braid
