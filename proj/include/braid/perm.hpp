#pragma once

#include <string>
#include <vector>

namespace braid {

// Permutation on n strands, 0-based table: img[i] is the exit position of the
// strand entering at position i.  Composition is left-to-right, matching the
// way braid words read: a.then(b) is "a first, then b".
//
// Permutations double as simple braids (permutation braids): the positive
// braid in which strands entering at i < j cross exactly when img[i] > img[j].
struct Perm {
  std::vector<int> img;

  Perm() = default;
  static Perm identity(int n);
  static Perm transposition(int n, int i);  // the atom sigma_i, 1 <= i <= n-1
  static Perm half_twist(int n);            // i -> n-1-i

  int size() const { return static_cast<int>(img.size()); }
  bool is_identity() const;
  bool is_half_twist() const;
  bool operator==(const Perm&) const = default;

  Perm then(const Perm& b) const;  // this, then b
  Perm inverse() const;
  int order() const;           // order as a group element
  bool is_cycle() const;       // one cycle through all strands
  bool fixes(int pos) const { return img[pos] == pos; }
  std::vector<int> one_based() const;
};

// number of crossings of the simple braid, i.e. its positive word length
int inversions(const Perm& p);

// sigma_i is a left/right divisor of the simple braid of p (1-based i)
bool atom_divides_left(const Perm& p, int i);
bool atom_divides_right(const Perm& p, int i);

// greatest common left/right divisor of two simple braids
Perm left_gcd(Perm a, Perm b);
Perm right_gcd(Perm a, Perm b);

// the simple s with a*s = Delta, resp. s*a = Delta
Perm right_complement(const Perm& a);
Perm left_complement(const Perm& a);

// conjugation by the half twist (the flip sigma_i -> sigma_{n-i})
Perm flip(const Perm& a);

// a shortest positive word (1-based letters) realizing the simple braid of p
std::vector<int> positive_letters(Perm p);

}  // namespace braid
