#include "braid/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace braid {

namespace {

// Remove trivial factors and absorb half twists into the Delta power.  A
// half twist at position j moves left across the factors before it, flipping
// each one.
bool absorb_and_clean(long long& p, std::vector<Perm>& fs) {
  bool changed = false;
  std::vector<Perm> out;
  out.reserve(fs.size());
  for (auto& f : fs) {
    if (f.is_identity()) {
      changed = true;
      continue;
    }
    if (f.is_half_twist()) {
      p += 1;
      for (auto& g : out) g = flip(g);
      changed = true;
      continue;
    }
    out.push_back(std::move(f));
  }
  fs.swap(out);
  return changed;
}

// Left-greedy normalization: slide material leftwards until every adjacent
// pair (x, y) satisfies left_gcd(x^{-1} Delta, y) = 1.  Each slide strictly
// moves crossings toward lower positions, so the loop terminates.
void normalize_factors(int /*n*/, long long& p, std::vector<Perm>& fs) {
  for (;;) {
    bool changed = absorb_and_clean(p, fs);
    for (size_t i = 0; i + 1 < fs.size(); ++i) {
      Perm c = left_gcd(right_complement(fs[i]), fs[i + 1]);
      if (!c.is_identity()) {
        fs[i] = fs[i].then(c);
        fs[i + 1] = c.inverse().then(fs[i + 1]);
        changed = true;
      }
    }
    if (!changed) break;
  }
}

CanonicalForm make_form(int n, long long p, std::vector<Perm> fs) {
  normalize_factors(n, p, fs);
  CanonicalForm cf;
  cf.strands = n;
  cf.inf = p;
  cf.factors = std::move(fs);
  return cf;
}

Perm parabolic_half_twist_perm(int n, Side side) {
  Perm p = Perm::identity(n);
  int lo = side == Side::A ? 0 : 1;
  int hi = side == Side::A ? n - 2 : n - 1;
  for (int i = lo; i <= hi; ++i) p.img[i] = hi - (i - lo);
  return p;
}

// largest simple left divisor of the element of a canonical form
Perm max_left_simple(const CanonicalForm& cf) {
  if (cf.inf >= 1) return Perm::half_twist(cf.strands);
  if (cf.factors.empty()) return Perm::identity(cf.strands);
  return cf.factors.front();
}

// divide a left-dividing simple off the front and renormalize
void left_divide_by(CanonicalForm& cf, const Perm& c) {
  if (c.is_identity()) return;
  long long p = cf.inf;
  std::vector<Perm> fs = cf.factors;
  if (p >= 1) {
    // c^{-1} Delta^p X = Delta^{p-1} flip^{p-1}(c^{-1} Delta) X
    Perm f0 = right_complement(c);
    if ((p - 1) & 1) f0 = flip(f0);
    p -= 1;
    fs.insert(fs.begin(), f0);
  } else {
    fs.front() = c.inverse().then(fs.front());
  }
  normalize_factors(cf.strands, p, fs);
  cf.inf = p;
  cf.factors = std::move(fs);
}

BraidWord reversed(const BraidWord& w) {
  BraidWord r = w;
  std::reverse(r.letters.begin(), r.letters.end());
  return r;
}

}  // namespace

std::string CanonicalForm::key() const {
  std::string k = std::to_string(strands) + "|" + std::to_string(inf);
  for (const auto& f : factors) {
    k += '|';
    for (int v : f.img) {
      k += static_cast<char>('0' + v % 64);
      if (v >= 64) k += static_cast<char>('A' + v / 64);
    }
  }
  return k;
}

BraidWord CanonicalForm::to_word() const {
  BraidWord w = delta_power(strands, inf);
  for (const auto& f : factors)
    for (int l : positive_letters(f)) w.letters.push_back(l);
  return w;
}

CanonicalForm canonical_form(const BraidWord& u) {
  int n = u.strands;
  if (n == 1) return make_form(1, 0, {});
  std::vector<Perm> fs;
  std::vector<char> neg;
  fs.reserve(u.letters.size());
  neg.reserve(u.letters.size());
  for (int e : u.letters) {
    if (e > 0) {
      fs.push_back(Perm::transposition(n, e));
      neg.push_back(0);
    } else {
      // sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1})
      fs.push_back(left_complement(Perm::transposition(n, -e)));
      neg.push_back(1);
    }
  }
  // move every Delta^{-1} to the far left; a factor is flipped once per
  // Delta^{-1} that crosses it from the right
  int acc = 0;
  for (int j = static_cast<int>(fs.size()) - 1; j >= 0; --j) {
    if (acc & 1) fs[j] = flip(fs[j]);
    acc += neg[j];
  }
  return make_form(n, -static_cast<long long>(acc), std::move(fs));
}

bool equals(const BraidWord& u, const BraidWord& v) {
  if (u.strands != v.strands) throw braid_error("strand count mismatch");
  return canonical_form(u) == canonical_form(v);
}

bool is_positive(const BraidWord& u) { return canonical_form(u).inf >= 0; }

bool right_divides(const BraidWord& y, const BraidWord& x) {
  if (y.strands != x.strands) throw braid_error("strand count mismatch");
  return is_positive(concat(x, invert(y)));
}

long long min_central_power_to_positive(const BraidWord& u) {
  long long inf = canonical_form(u).inf;
  if (inf >= 0) return 0;
  return (-inf + 1) / 2;
}

RightEndStripper::RightEndStripper(const BraidWord& x) : n_(x.strands) {
  rev_ = canonical_form(reversed(x));
  if (rev_.inf < 0) throw braid_error("operation requires a positive braid");
}

bool RightEndStripper::exhausted() const { return rev_.is_identity(); }

BraidWord RightEndStripper::residual() const { return reversed(rev_.to_word()); }

BraidWord RightEndStripper::strip_parabolic(Side side) {
  // Right divisors of the element correspond to left divisors of the
  // reversed element, and reversal fixes the parabolic half twist.  Chunks
  // c_1, c_2, ... peeled off the left of rev give the divisor
  // rev(c_k) ... rev(c_1), and rev of a simple is the simple of the inverse
  // permutation.
  if (n_ == 1) return BraidWord::identity(1);
  const Perm dpar = parabolic_half_twist_perm(n_, side);
  std::vector<Perm> chunks;
  for (;;) {
    Perm c = left_gcd(max_left_simple(rev_), dpar);
    if (c.is_identity()) break;
    left_divide_by(rev_, c);
    chunks.push_back(std::move(c));
  }
  BraidWord d = BraidWord::identity(n_);
  for (auto it = chunks.rbegin(); it != chunks.rend(); ++it)
    for (int l : positive_letters(it->inverse())) d.letters.push_back(l);
  return d;
}

BraidWord parabolic_max_right_divisor(const BraidWord& x, Side side) {
  if (!is_positive(x)) throw braid_error("maximal parabolic divisor requires a positive braid");
  RightEndStripper st(x);
  return st.strip_parabolic(side);
}

BraidWord remove_strand(const BraidWord& u, int strand) {
  int n = u.strands;
  if (strand < 1 || strand > n) throw braid_error("strand out of range");
  int pos = strand - 1;
  std::vector<int> out;
  out.reserve(u.letters.size());
  for (int e : u.letters) {
    int i = std::abs(e) - 1;  // crossing occupies slots i, i+1
    if (pos == i) {
      pos = i + 1;
      continue;
    }
    if (pos == i + 1) {
      pos = i;
      continue;
    }
    if (pos > i + 1)
      out.push_back(e);
    else
      out.push_back(e > 0 ? e - 1 : e + 1);
  }
  if (pos != strand - 1)
    throw braid_error("strand removal requires the permutation to fix the strand");
  return BraidWord(n - 1, std::move(out));
}

BraidWord embed(const BraidWord& u, int n, int shift) {
  std::vector<int> out;
  out.reserve(u.letters.size());
  for (int e : u.letters) out.push_back(e > 0 ? e + shift : e - shift);
  return BraidWord(n, std::move(out));
}

bool lives_in_parabolic(const BraidWord& u, Side side) {
  int n = u.strands;
  if (n == 1) return true;
  int pos = omitted_strand(n, side);  // 0-based
  if (!underlying_permutation(u).fixes(pos)) return false;
  BraidWord dropped = remove_strand(u, pos + 1);
  BraidWord back = embed(dropped, n, side == Side::A ? 0 : 1);
  return equals(u, back);
}

bool positive_in_parabolic(const CanonicalForm& cf, Side side) {
  if (cf.is_identity()) return true;
  if (cf.inf != 0) return false;  // Delta touches every strand
  int pos = omitted_strand(cf.strands, side);
  for (const auto& f : cf.factors)
    if (!f.fixes(pos)) return false;
  return true;
}

std::vector<BraidWord> brute_force_right_divisors(const BraidWord& x, int max_len) {
  CanonicalForm cf = canonical_form(x);
  if (cf.inf < 0) throw braid_error("divisor search requires a positive braid");
  long long len = exponent_sum(x);
  if (len > max_len) throw braid_error("length cap exceeded");
  int n = x.strands;

  std::vector<BraidWord> result;
  std::unordered_set<std::string> seen;
  BraidWord id = BraidWord::identity(n);
  seen.insert(canonical_form(id).key());
  result.push_back(id);
  std::vector<BraidWord> frontier{id};
  while (!frontier.empty()) {
    std::vector<BraidWord> next;
    for (const auto& d : frontier) {
      for (int j = 1; j < n; ++j) {
        BraidWord cand = concat(BraidWord(n, {j}), d);
        std::string k = canonical_form(cand).key();
        if (seen.count(k)) continue;
        if (!right_divides(cand, x)) continue;
        seen.insert(k);
        BraidWord rep = canonical_form(cand).to_word();
        result.push_back(rep);
        next.push_back(std::move(cand));
      }
    }
    frontier = std::move(next);
  }
  return result;
}

}  // namespace braid
