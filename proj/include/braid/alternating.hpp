#pragma once

#include "braid/dehornoy.hpp"

namespace braid {

// Factorization B_t A_t ... B_1 A_1 B_0 of a positive braid, peeled off the
// right end by maximal parabolic right divisors, alternating the B side and
// the A side.  Interior factors are automatically nontrivial; only B_0 and
// the top factor can be trivial.
//
// Two counts live on a decomposition.  top_index is the slot index t of the
// leftmost factor.  length() is the alternating length: equal to t when the
// leading factor is an A-factor, and t+1 when it is a B-factor.  The shifted
// count is what makes the central-power sandwich
//     Delta^{2(len-2)} <_D x <_D Delta^{2 len}
// hold for every nontrivial positive x, including elements of M_B alone.
struct AltDecomposition {
  int strands = 3;
  int top_index = 0;
  bool b_led = false;  // leftmost nontrivial factor is b_factor[top_index]
  std::vector<BraidWord> a_factor;  // slots 1..top_index ([0] unused)
  std::vector<BraidWord> b_factor;  // slots 0..top_index

  int length() const;
  bool trivial() const;
  BraidWord product() const;  // B_t A_t ... A_1 B_0

  struct Record {
    Side side;
    int index;
    BraidWord word;
  };
  std::vector<Record> records() const;  // nontrivial factors, product order
};

AltDecomposition alt_decompose(const BraidWord& x);
int alt_length(const BraidWord& x);

enum class FastVerdict { Less, Greater, Unknown };
enum class FastRule { None, LengthGap, TopFactor };
const char* to_string(FastVerdict v);
const char* to_string(FastRule r);

struct FastCompareResult {
  FastVerdict verdict = FastVerdict::Unknown;
  FastRule rule = FastRule::None;
};

// Sound-but-incomplete comparator over positive braids: a verdict is emitted
// only when an alternating-length gap of at least 2 decides it, or when the
// lengths and top indices agree and one top B-factor strictly right-divides
// the other.  Anything else is Unknown; callers fall back to compare().
FastCompareResult fast_compare(const BraidWord& x, const BraidWord& y);

// For positive x with top index t and x <_D Delta^{2t-2}: returns
// Delta (x^{-1} Delta^{2t-2}) Delta^{-1}, which lands in the A-parabolic
// subgroup (checked; failure is a hard error).
BraidWord parabolic_drop(const BraidWord& x, const ReduceOptions& opts = {});

}  // namespace braid
