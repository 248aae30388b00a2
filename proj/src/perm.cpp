#include "braid/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace braid {

Perm Perm::identity(int n) {
  Perm p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

Perm Perm::transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("transposition index out of range");
  Perm p = identity(n);
  std::swap(p.img[i - 1], p.img[i]);
  return p;
}

Perm Perm::half_twist(int n) {
  Perm p;
  p.img.resize(n);
  for (int i = 0; i < n; ++i) p.img[i] = n - 1 - i;
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img[i] != i) return false;
  return true;
}

bool Perm::is_half_twist() const {
  int n = size();
  for (int i = 0; i < n; ++i)
    if (img[i] != n - 1 - i) return false;
  return true;
}

Perm Perm::then(const Perm& b) const {
  Perm r;
  r.img.resize(size());
  for (int i = 0; i < size(); ++i) r.img[i] = b.img[img[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img.resize(size());
  for (int i = 0; i < size(); ++i) r.img[img[i]] = i;
  return r;
}

int Perm::order() const {
  int n = size();
  std::vector<char> seen(n, 0);
  long long ord = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = img[j];
      ++len;
    }
    ord = std::lcm(ord, (long long)len);
  }
  return static_cast<int>(ord);
}

bool Perm::is_cycle() const {
  int n = size();
  int j = 0, len = 0;
  do {
    j = img[j];
    ++len;
  } while (j != 0 && len <= n);
  return len == n;
}

std::vector<int> Perm::one_based() const {
  std::vector<int> v(size());
  for (int i = 0; i < size(); ++i) v[i] = img[i] + 1;
  return v;
}

int inversions(const Perm& p) {
  int n = p.size(), count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.img[i] > p.img[j]) ++count;
  return count;
}

bool atom_divides_left(const Perm& p, int i) { return p.img[i - 1] > p.img[i]; }

bool atom_divides_right(const Perm& p, int i) {
  // strands ending at positions i, i+1 cross: value i-1 sits right of value i
  int pos_lo = -1, pos_hi = -1;
  for (int k = 0; k < p.size(); ++k) {
    if (p.img[k] == i - 1) pos_lo = k;
    if (p.img[k] == i) pos_hi = k;
  }
  return pos_lo > pos_hi;
}

namespace {

// strip sigma_i off the left: p := s_i then p
inline void strip_left(Perm& p, int i) { std::swap(p.img[i - 1], p.img[i]); }

// strip sigma_i off the right: p := p then s_i
inline void strip_right(Perm& p, int i) {
  for (auto& v : p.img) {
    if (v == i - 1)
      v = i;
    else if (v == i)
      v = i - 1;
  }
}

}  // namespace

Perm left_gcd(Perm a, Perm b) {
  int n = a.size();
  Perm d = Perm::identity(n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i < n; ++i) {
      if (atom_divides_left(a, i) && atom_divides_left(b, i)) {
        strip_left(a, i);
        strip_left(b, i);
        // d := d * sigma_i
        for (auto& v : d.img) {
          if (v == i - 1)
            v = i;
          else if (v == i)
            v = i - 1;
        }
        changed = true;
      }
    }
  }
  return d;
}

Perm right_gcd(Perm a, Perm b) {
  int n = a.size();
  Perm d = Perm::identity(n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i < n; ++i) {
      if (atom_divides_right(a, i) && atom_divides_right(b, i)) {
        strip_right(a, i);
        strip_right(b, i);
        // d := sigma_i * d
        std::swap(d.img[i - 1], d.img[i]);
        changed = true;
      }
    }
  }
  return d;
}

Perm right_complement(const Perm& a) { return a.inverse().then(Perm::half_twist(a.size())); }

Perm left_complement(const Perm& a) { return Perm::half_twist(a.size()).then(a.inverse()); }

Perm flip(const Perm& a) {
  Perm w0 = Perm::half_twist(a.size());
  return w0.then(a).then(w0);
}

std::vector<int> positive_letters(Perm p) {
  std::vector<int> out;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i < p.size(); ++i) {
      if (p.img[i - 1] > p.img[i]) {
        out.push_back(i);
        strip_left(p, i);
        changed = true;
      }
    }
  }
  return out;
}

}  // namespace braid
