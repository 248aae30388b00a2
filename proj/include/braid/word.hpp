#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "braid/perm.hpp"

namespace braid {

struct braid_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A verified inequality or certificate check failed.  This is never an input
// problem: it means an internal invariant broke, so it must surface loudly.
struct receipt_error : braid_error {
  using braid_error::braid_error;
};

// A braid word: strand count plus signed generator letters.  Letter e > 0 is
// sigma_e, letter e < 0 is sigma_{-e}^{-1}.  Words are immutable values;
// every operation returns a new word.  operator== is letter-by-letter; use
// equals() for equality in the group.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> ls);
  static BraidWord identity(int n) { return BraidWord(n, {}); }

  int length() const { return static_cast<int>(letters.size()); }
  bool empty_word() const { return letters.empty(); }
  bool operator==(const BraidWord&) const = default;
};

// text format: whitespace- or comma-separated nonzero integers
BraidWord parse_word(const std::string& text, int n);
std::string format_word(const BraidWord& w);

BraidWord concat(const BraidWord& u, const BraidWord& v);
BraidWord invert(const BraidWord& u);
BraidWord conjugate(const BraidWord& c, const BraidWord& u);  // c u c^{-1}
BraidWord power(const BraidWord& u, long long k);
BraidWord free_reduce(const BraidWord& u);
long long exponent_sum(const BraidWord& u);

using StrandPermutation = Perm;
StrandPermutation underlying_permutation(const BraidWord& u);
bool is_pure(const BraidWord& u);

// Delta, the positive half twist
BraidWord half_twist(int n);
// Delta^k for any sign of k
BraidWord delta_power(int n, long long k);

// parabolic submonoids: side A is generated by sigma_1..sigma_{n-2},
// side B by sigma_2..sigma_{n-1}
enum class Side { A, B };
// half twist of the parabolic, as a word (empty when the side is trivial)
BraidWord parabolic_half_twist(int n, Side side);
// 0-based position of the strand the side's parabolic leaves untouched
int omitted_strand(int n, Side side);

enum class Named { DeltaB, DeltaA, APrime, BPrime };
// the fixed constant words: Delta_B, Delta_A, A' = sigma_{n-2}..sigma_2 sigma_1^2,
// B' = sigma_2..sigma_{n-2} sigma_{n-1}^2.  Delta_A is the half twist of the
// A-parabolic and is checked against Delta Delta_B Delta^{-1} on every call.
BraidWord named_constant(Named which, int n);

}  // namespace braid
