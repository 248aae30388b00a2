#pragma once

#include <string>
#include <vector>

#include "braid/word.hpp"

namespace braid {

// Left-greedy canonical form Delta^inf x_1 ... x_k: the x_i are simple,
// non-trivial, non-Delta, and every adjacent pair is left-weighted.  Two
// words are equal in the group iff their canonical forms are identical, and
// the element is positive iff inf >= 0.
struct CanonicalForm {
  int strands = 2;
  long long inf = 0;
  std::vector<Perm> factors;

  long long sup() const { return inf + static_cast<long long>(factors.size()); }
  int canonical_length() const { return static_cast<int>(factors.size()); }
  bool is_identity() const { return inf == 0 && factors.empty(); }
  bool operator==(const CanonicalForm&) const = default;

  std::string key() const;  // injective serialization, usable as a hash key
  BraidWord to_word() const;
};

CanonicalForm canonical_form(const BraidWord& u);
bool equals(const BraidWord& u, const BraidWord& v);
bool is_positive(const BraidWord& u);

// x >= y in the prefix order on the right: x * y^{-1} is positive
bool right_divides(const BraidWord& y, const BraidWord& x);

// smallest N >= 0 with Delta^{2N} u positive
long long min_central_power_to_positive(const BraidWord& u);

// the >=-maximal right divisor of positive x lying in the side's parabolic
// submonoid (x /\ M_A or x /\ M_B)
BraidWord parabolic_max_right_divisor(const BraidWord& x, Side side);

// membership of an arbitrary braid in the parabolic subgroup of the side
bool lives_in_parabolic(const BraidWord& u, Side side);

// test oracle: all positive right divisors of x, by exhaustive search
std::vector<BraidWord> brute_force_right_divisors(const BraidWord& x, int max_len = 12);

// delete one strand (1-based top position) from a braid whose permutation
// fixes it; the result lives on n-1 strands
BraidWord remove_strand(const BraidWord& u, int strand);
// re-embed an (n-1)-strand word into n strands, letters shifted up by `shift`
BraidWord embed(const BraidWord& u, int n, int shift = 0);

// positive element lies in the side's parabolic submonoid (canonical factors
// all avoid the omitted strand)
bool positive_in_parabolic(const CanonicalForm& cf, Side side);

// Peels maximal parabolic right divisors off the right end of a positive
// braid.  Internally keeps the canonical form of the reversed word, so each
// peel is a left division there.
class RightEndStripper {
 public:
  explicit RightEndStripper(const BraidWord& x);  // x must be positive
  bool exhausted() const;
  BraidWord residual() const;  // remaining left part, original orientation
  // strip x /\ M_side off the right end and return it (identity if trivial)
  BraidWord strip_parabolic(Side side);

 private:
  int n_;
  CanonicalForm rev_;
};

}  // namespace braid
