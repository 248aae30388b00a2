#include "braid/alternating.hpp"

namespace braid {

const char* to_string(FastVerdict v) {
  switch (v) {
    case FastVerdict::Less: return "Less";
    case FastVerdict::Greater: return "Greater";
    case FastVerdict::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(FastRule r) {
  switch (r) {
    case FastRule::None: return "none";
    case FastRule::LengthGap: return "length-gap";
    case FastRule::TopFactor: return "top-factor";
  }
  return "?";
}

int AltDecomposition::length() const {
  if (trivial()) return 0;
  return b_led ? top_index + 1 : top_index;
}

bool AltDecomposition::trivial() const {
  return top_index == 0 && b_factor[0].empty_word();
}

BraidWord AltDecomposition::product() const {
  BraidWord p = BraidWord::identity(strands);
  for (int i = top_index; i >= 1; --i) {
    p = concat(p, b_factor[i]);
    p = concat(p, a_factor[i]);
  }
  return concat(p, b_factor[0]);
}

std::vector<AltDecomposition::Record> AltDecomposition::records() const {
  std::vector<Record> rs;
  for (int i = top_index; i >= 1; --i) {
    if (!b_factor[i].empty_word()) rs.push_back({Side::B, i, b_factor[i]});
    if (!a_factor[i].empty_word()) rs.push_back({Side::A, i, a_factor[i]});
  }
  if (!b_factor[0].empty_word()) rs.push_back({Side::B, 0, b_factor[0]});
  return rs;
}

AltDecomposition alt_decompose(const BraidWord& x) {
  if (x.strands < 3) throw braid_error("alternating decomposition needs at least 3 strands");
  RightEndStripper st(x);

  AltDecomposition d;
  d.strands = x.strands;
  d.a_factor.push_back(BraidWord::identity(x.strands));  // slot 0 placeholder
  d.b_factor.push_back(st.strip_parabolic(Side::B));
  if (st.exhausted()) {
    d.top_index = 0;
    d.b_led = !d.b_factor[0].empty_word();
    return d;
  }
  for (int i = 1;; ++i) {
    BraidWord ai = st.strip_parabolic(Side::A);
    if (ai.empty_word()) throw braid_error("internal: alternating extraction stalled on side A");
    d.a_factor.push_back(std::move(ai));
    if (st.exhausted()) {
      d.b_factor.push_back(BraidWord::identity(x.strands));
      d.top_index = i;
      d.b_led = false;
      return d;
    }
    BraidWord bi = st.strip_parabolic(Side::B);
    if (bi.empty_word()) throw braid_error("internal: alternating extraction stalled on side B");
    d.b_factor.push_back(std::move(bi));
    if (st.exhausted()) {
      d.top_index = i;
      d.b_led = true;
      return d;
    }
  }
}

int alt_length(const BraidWord& x) { return alt_decompose(x).length(); }

FastCompareResult fast_compare(const BraidWord& x, const BraidWord& y) {
  if (x.strands != y.strands) throw braid_error("strand count mismatch");
  AltDecomposition dx = alt_decompose(x);
  AltDecomposition dy = alt_decompose(y);
  int lx = dx.length(), ly = dy.length();
  if (ly - lx >= 2) return {FastVerdict::Less, FastRule::LengthGap};
  if (lx - ly >= 2) return {FastVerdict::Greater, FastRule::LengthGap};
  if (lx == ly && dx.top_index == dy.top_index) {
    const BraidWord& bx = dx.b_factor[dx.top_index];
    const BraidWord& by = dy.b_factor[dy.top_index];
    if (!equals(bx, by)) {
      if (right_divides(bx, by)) return {FastVerdict::Less, FastRule::TopFactor};
      if (right_divides(by, bx)) return {FastVerdict::Greater, FastRule::TopFactor};
    }
  }
  return {FastVerdict::Unknown, FastRule::None};
}

BraidWord parabolic_drop(const BraidWord& x, const ReduceOptions& opts) {
  AltDecomposition d = alt_decompose(x);  // also rejects non-positive x
  int n = x.strands;
  long long t = d.top_index;
  BraidWord threshold = delta_power(n, 2 * t - 2);
  if (compare(x, threshold, opts).verdict != Ordering::Less)
    throw braid_error("parabolic drop requires x <_D Delta^{2t-2}");
  BraidWord dlt = half_twist(n);
  BraidWord result = free_reduce(
      concat(concat(dlt, invert(x)), concat(threshold, invert(dlt))));
  if (!lives_in_parabolic(result, Side::A))
    throw receipt_error("parabolic drop did not land in the A-parabolic");
  return result;
}

}  // namespace braid
