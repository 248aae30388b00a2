#pragma once

#include <optional>

#include "braid/canonical.hpp"

namespace braid {

struct ReduceOptions {
  long long max_steps = 10'000'000;
};

enum class Ordering { Less, Equal, Greater };
const char* to_string(Ordering o);

// sign of a word under the left ordering: +1 when the lowest-index generator
// occurring appears only positively, -1 when only negatively, 0 when empty
struct SigmaSign {
  int sign = 0;        // -1, 0, +1
  int main_index = 0;  // 0 when the word is empty
};

// syntactic sign of the word as written; throws if the main generator
// occurs with both signs
SigmaSign sigma_sign_of_word(const BraidWord& w);

// Handle reduction, always reducing the handle that ends first.  Stops as
// soon as the main generator occurs with a single sign (that is stable under
// further reduction), so the result is empty, sigma-positive or
// sigma-negative.  The step cap turns pathological blowup into an error
// instead of a wrong answer.
BraidWord handle_reduce(const BraidWord& u, const ReduceOptions& opts = {});

struct OrderCertificate {
  Ordering verdict = Ordering::Equal;
  BraidWord witness;  // reduced word equal to u^{-1} v
};

OrderCertificate compare(const BraidWord& u, const BraidWord& v, const ReduceOptions& opts = {});
bool less(const BraidWord& u, const BraidWord& v, const ReduceOptions& opts = {});
bool less_or_equal(const BraidWord& u, const BraidWord& v, const ReduceOptions& opts = {});

// the unique m with Delta^{2m} <=_D u <_D Delta^{2m+2}
long long dehornoy_floor(const BraidWord& u, const ReduceOptions& opts = {});

struct GenusCertificate {
  long long floor = 0;
  bool strict_at_floor = false;
  std::optional<long long> genus_bound;  // set iff the bound is >= 1
  OrderCertificate floor_receipt;        // comparison Delta^{2 floor} vs u
};

// closure of u must be a knot (permutation is an n-cycle); the certified
// bound is the largest N with Delta^{2N} strictly below u
GenusCertificate genus_certificate(const BraidWord& u, const ReduceOptions& opts = {});

}  // namespace braid
