#include "braid/dehornoy.hpp"

#include <algorithm>
#include <cmath>

namespace braid {

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

SigmaSign sigma_sign_of_word(const BraidWord& w) {
  SigmaSign s;
  if (w.letters.empty()) return s;
  int main_index = w.strands;
  for (int e : w.letters) main_index = std::min(main_index, std::abs(e));
  bool pos = false, neg = false;
  for (int e : w.letters) {
    if (std::abs(e) != main_index) continue;
    (e > 0 ? pos : neg) = true;
  }
  if (pos && neg) throw braid_error("word is not sigma-definite");
  s.main_index = main_index;
  s.sign = pos ? 1 : -1;
  return s;
}

namespace {

// true when the smallest index present occurs with one sign only (or the
// word is empty); such a word already decides the ordering
bool main_generator_definite(const std::vector<int>& w, int n) {
  std::vector<char> pos(n, 0), neg(n, 0);
  for (int e : w) (e > 0 ? pos[e] : neg[-e]) = 1;
  for (int i = 1; i < n; ++i) {
    if (pos[i] || neg[i]) return !(pos[i] && neg[i]);
  }
  return true;
}

}  // namespace

BraidWord handle_reduce(const BraidWord& u, const ReduceOptions& opts) {
  const int n = u.strands;
  std::vector<int> w = free_reduce(u).letters;
  if (main_generator_definite(w, n)) return BraidWord(n, std::move(w));

  long long steps = 0;
  // last[i]: position of the most recent letter of index i before the scan
  // point; valid for the prefix [0, q)
  std::vector<long long> last(n, -1);
  size_t q = 0;
  while (q < w.size()) {
    int i = std::abs(w[q]);
    long long p = -1;
    int pidx = 0;
    for (int j = 1; j <= i; ++j) {
      if (last[j] > p) {
        p = last[j];
        pidx = j;
      }
    }
    if (p >= 0 && pidx == i && w[p] == -w[q]) {
      // handle w[p] ... w[q]: delete the ends, rewrite the sigma_{i+1}
      // letters in between
      if (++steps > opts.max_steps)
        throw braid_error("handle reduction exceeded the step cap");
      int e = w[p] > 0 ? 1 : -1;
      std::vector<int> repl;
      repl.reserve(3 * (q - p));
      for (size_t r = p + 1; r < q; ++r) {
        int a = std::abs(w[r]);
        if (a == i + 1) {
          int d = w[r] > 0 ? 1 : -1;
          repl.push_back(-e * (i + 1));
          repl.push_back(d * i);
          repl.push_back(e * (i + 1));
        } else {
          repl.push_back(w[r]);
        }
      }
      w.erase(w.begin() + p, w.begin() + q + 1);
      w.insert(w.begin() + p, repl.begin(), repl.end());
      if (main_generator_definite(w, n)) return BraidWord(n, std::move(w));
      // no handle can end before p; rebuild the scan state up to there
      q = p;
      std::fill(last.begin(), last.end(), -1);
      int found = 0;
      for (long long r = static_cast<long long>(q) - 1; r >= 0 && found < n - 1; --r) {
        int a = std::abs(w[r]);
        if (last[a] < 0) {
          last[a] = r;
          ++found;
        }
      }
    } else {
      last[i] = q;
      ++q;
    }
  }
  return BraidWord(n, std::move(w));
}

OrderCertificate compare(const BraidWord& u, const BraidWord& v, const ReduceOptions& opts) {
  if (u.strands != v.strands) throw braid_error("strand count mismatch");
  BraidWord w = handle_reduce(concat(invert(u), v), opts);
  OrderCertificate cert;
  cert.witness = w;
  SigmaSign s = sigma_sign_of_word(w);
  cert.verdict = s.sign == 0 ? Ordering::Equal : (s.sign > 0 ? Ordering::Less : Ordering::Greater);
  return cert;
}

bool less(const BraidWord& u, const BraidWord& v, const ReduceOptions& opts) {
  return compare(u, v, opts).verdict == Ordering::Less;
}

bool less_or_equal(const BraidWord& u, const BraidWord& v, const ReduceOptions& opts) {
  return compare(u, v, opts).verdict != Ordering::Greater;
}

long long dehornoy_floor(const BraidWord& u, const ReduceOptions& opts) {
  CanonicalForm cf = canonical_form(u);
  // Delta^inf <=_D u <=_D Delta^sup brackets the floor
  long long lo = cf.inf >= 0 ? cf.inf / 2 : -((-cf.inf + 1) / 2);
  long long hi = cf.sup() >= 0 ? (cf.sup() + 1) / 2 : -(-cf.sup() / 2);
  int n = u.strands;
  if (!less_or_equal(delta_power(n, 2 * lo), u, opts))
    throw receipt_error("floor bracket lower bound failed");
  // binary search for the largest m with Delta^{2m} <=_D u
  while (lo < hi) {
    long long mid = lo + (hi - lo + 1) / 2;
    if (less_or_equal(delta_power(n, 2 * mid), u, opts))
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

GenusCertificate genus_certificate(const BraidWord& u, const ReduceOptions& opts) {
  if (!underlying_permutation(u).is_cycle())
    throw braid_error("closure is not a knot: permutation is not an n-cycle");
  GenusCertificate g;
  g.floor = dehornoy_floor(u, opts);
  g.floor_receipt = compare(delta_power(u.strands, 2 * g.floor), u, opts);
  g.strict_at_floor = g.floor_receipt.verdict == Ordering::Less;
  long long bound = g.strict_at_floor ? g.floor : g.floor - 1;
  if (bound >= 1) g.genus_bound = bound;
  return g;
}

}  // namespace braid
