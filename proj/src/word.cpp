#include "braid/word.hpp"

#include <cmath>
#include <sstream>

#include "braid/canonical.hpp"

namespace braid {

namespace {

void check_letter(int e, int n) {
  if (e == 0) throw braid_error("letter 0 is not a generator");
  int a = std::abs(e);
  if (a < 1 || a > n - 1) {
    throw braid_error("letter " + std::to_string(e) + " out of range for " + std::to_string(n) +
                      " strands");
  }
}

}  // namespace

BraidWord::BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
  if (n < 1) throw braid_error("strand count must be at least 1");
  for (int e : letters) check_letter(e, n);
}

BraidWord parse_word(const std::string& text, int n) {
  if (n < 2) throw braid_error("strand count must be at least 2");
  std::string cleaned = text;
  for (auto& c : cleaned)
    if (c == ',') c = ' ';
  std::istringstream in(cleaned);
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw braid_error("malformed token '" + tok + "'");
    }
    if (used != tok.size()) throw braid_error("malformed token '" + tok + "'");
    check_letter(e, n);
    letters.push_back(e);
  }
  return BraidWord(n, std::move(letters));
}

std::string format_word(const BraidWord& w) {
  std::string out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.letters[i]);
  }
  return out;
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (u.strands != v.strands) throw braid_error("strand count mismatch");
  BraidWord r = u;
  r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
  return r;
}

BraidWord invert(const BraidWord& u) {
  BraidWord r;
  r.strands = u.strands;
  r.letters.reserve(u.letters.size());
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

BraidWord conjugate(const BraidWord& c, const BraidWord& u) {
  return concat(concat(c, u), invert(c));
}

BraidWord power(const BraidWord& u, long long k) {
  BraidWord base = k < 0 ? invert(u) : u;
  long long reps = k < 0 ? -k : k;
  BraidWord r = BraidWord::identity(u.strands);
  r.letters.reserve(base.letters.size() * reps);
  for (long long i = 0; i < reps; ++i)
    r.letters.insert(r.letters.end(), base.letters.begin(), base.letters.end());
  return r;
}

BraidWord free_reduce(const BraidWord& u) {
  BraidWord r;
  r.strands = u.strands;
  for (int e : u.letters) {
    if (!r.letters.empty() && r.letters.back() == -e)
      r.letters.pop_back();
    else
      r.letters.push_back(e);
  }
  return r;
}

long long exponent_sum(const BraidWord& u) {
  long long s = 0;
  for (int e : u.letters) s += e > 0 ? 1 : -1;
  return s;
}

// Image of i is the starting position of the strand that ends at position i
// (the braid read bottom-up); sigma_1 sigma_2 on three strands gives the
// cycle 1 -> 2 -> 3 -> 1.  Products compose contravariantly under then():
// underlying_permutation(concat(u, v)) = perm(v).then(perm(u)).
StrandPermutation underlying_permutation(const BraidWord& u) {
  Perm p = Perm::identity(u.strands);
  for (int e : u.letters) {
    int i = std::abs(e);
    std::swap(p.img[i - 1], p.img[i]);
  }
  return p;
}

bool is_pure(const BraidWord& u) { return underlying_permutation(u).is_identity(); }

BraidWord half_twist(int n) {
  if (n < 2) throw braid_error("half twist needs at least 2 strands");
  std::vector<int> ls;
  for (int k = n - 1; k >= 1; --k)
    for (int i = 1; i <= k; ++i) ls.push_back(i);
  return BraidWord(n, std::move(ls));
}

BraidWord delta_power(int n, long long k) { return power(half_twist(n), k); }

int omitted_strand(int n, Side side) { return side == Side::A ? n - 1 : 0; }

BraidWord parabolic_half_twist(int n, Side side) {
  if (n < 2) throw braid_error("parabolic half twist needs at least 2 strands");
  int lo = side == Side::A ? 1 : 2;
  int hi = side == Side::A ? n - 2 : n - 1;
  std::vector<int> ls;
  for (int k = hi; k >= lo; --k)
    for (int i = lo; i <= k; ++i) ls.push_back(i);
  return BraidWord(n, std::move(ls));
}

BraidWord named_constant(Named which, int n) {
  if (n < 3) throw braid_error("named constants need at least 3 strands");
  switch (which) {
    case Named::DeltaB:
      return parabolic_half_twist(n, Side::B);
    case Named::DeltaA: {
      BraidWord da = parabolic_half_twist(n, Side::A);
      BraidWord conj = conjugate(half_twist(n), parabolic_half_twist(n, Side::B));
      if (!equals(da, conj))
        throw receipt_error("Delta_A does not match Delta Delta_B Delta^{-1}");
      return da;
    }
    case Named::APrime: {
      std::vector<int> ls;
      for (int i = n - 2; i >= 2; --i) ls.push_back(i);
      ls.push_back(1);
      ls.push_back(1);
      return BraidWord(n, std::move(ls));
    }
    case Named::BPrime: {
      std::vector<int> ls;
      for (int i = 2; i <= n - 2; ++i) ls.push_back(i);
      ls.push_back(n - 1);
      ls.push_back(n - 1);
      return BraidWord(n, std::move(ls));
    }
  }
  throw braid_error("unknown named constant");
}

}  // namespace braid
