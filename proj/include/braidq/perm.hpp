#ifndef BRAIDQ_PERM_HPP
#define BRAIDQ_PERM_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidq/common.hpp"

namespace braidq {

// Permutation of {1,...,n}, stored as the image list img[x-1] = p(x).
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> images) : img(std::move(images)) {}

  int n() const { return static_cast<int>(img.size()); }
  int operator()(int x) const { return img[x - 1]; }
  bool is_identity() const;

  static Perm identity(int n);

  friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
  friend bool operator!=(const Perm& a, const Perm& b) { return a.img != b.img; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img < b.img; }
};

// compose(p,q)(x) = p(q(x)): q acts first.
Perm compose(const Perm& p, const Perm& q);
// mul(p,q)(x) = q(p(x)): "apply p, then q".  This is the group product used
// throughout (it matches concatenation of braid words under perm_of).
Perm mul(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
Perm perm_pow(const Perm& p, Int e);

struct CycleProfile {
  std::vector<int> lengths;  // all cycle lengths >= 2, sorted ascending
  int fixed_points = 0;
  Int order = 1;  // lcm of cycle lengths
};
CycleProfile cycle_profile(const Perm& p);

// ----- canonical bases ---------------------------------------------------
// Pairs {i,j}, i<j, and triples {i,j,k}, i<j<k, in lexicographic order.

struct PairIdx {
  int i = 0, j = 0;  // i < j
  friend bool operator==(const PairIdx& a, const PairIdx& b) {
    return a.i == b.i && a.j == b.j;
  }
  friend bool operator<(const PairIdx& a, const PairIdx& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  }
};

struct TripleIdx {
  int i = 0, j = 0, k = 0;  // i < j < k
  friend bool operator==(const TripleIdx& a, const TripleIdx& b) {
    return a.i == b.i && a.j == b.j && a.k == b.k;
  }
  friend bool operator<(const TripleIdx& a, const TripleIdx& b) {
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return a.k < b.k;
  }
};

struct SignedTriple {
  TripleIdx t;
  int sign = 1;  // +1 or -1
  friend bool operator==(const SignedTriple& a, const SignedTriple& b) {
    return a.t == b.t && a.sign == b.sign;
  }
};

PairIdx make_pair_idx(int a, int b);          // sorts, rejects a == b
TripleIdx make_triple_idx(int a, int b, int c);

int pair_count(int n);                         // n(n-1)/2
int triple_count(int n);                       // n(n-1)(n-2)/6
int pair_rank(int n, PairIdx e);               // position in lex order
int triple_rank(int n, TripleIdx t);
PairIdx pair_unrank(int n, int r);
TripleIdx triple_unrank(int n, int r);

// Action of t in S_n on basis labels: t . A_{i,j} = A_{t^{-1}(i), t^{-1}(j)}.
PairIdx act_pair(const Perm& t, PairIdx e);

// Sign and carrier of [A_e, A_f] modulo the next lower-central term:
// zero when e, f are equal or disjoint, otherwise (+/-1, union triple)
// following the cyclic rule on a sorted triple (i,j,k):
//   [A_ij, A_jk] = [A_jk, A_ik] = [A_ik, A_ij] = +a_ijk,
// with reversed arguments giving -a_ijk.
std::optional<std::pair<TripleIdx, int>> comm_sign(PairIdx e, PairIdx f);

// t . [A_ij, A_jk] re-expressed in the canonical signed-triple basis.
SignedTriple act_triple(const Perm& t, const SignedTriple& a);

// BFS orbit closure: seeds expanded by the generators in the given order;
// element order within the orbit is discovery order.
std::vector<PairIdx> pair_orbit(const std::vector<Perm>& gens, PairIdx seed);
std::vector<SignedTriple> triple_orbit(const std::vector<Perm>& gens,
                                       SignedTriple seed);

// Cycle notation: "(1,2,3)(4,5,6)"; identity is "()"; whitespace ignored.
Perm parse_perm(std::string_view s, int n);
std::string to_cycles(const Perm& p);

}  // namespace braidq

#endif
