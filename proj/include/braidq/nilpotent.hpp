#ifndef BRAIDQ_NILPOTENT_HPP
#define BRAIDQ_NILPOTENT_HPP

#include "braidq/words.hpp"

namespace braidq {

// Normal form of an element of the degree-k nilpotent quotient of the pure
// braid group on n strands (k = 2 or 3):
//   a = exponent vector over the pairs A_{i,j} in lexicographic order,
//   c = exponent vector over the central basis a_{i,j,k} = [A_{i,j}, A_{j,k}]
//       (k = 3 only; empty when k = 2).
// Products follow the frozen pair order: the class-2 group law is
//   (a1,c1)(a2,c2) = (a1+a2, c1+c2+Q(a1,a2)),
// where Q(a1,a2) = sum over lex-ranked pairs e > f of a1[e] a2[f] [A_e, A_f].
struct PureNF {
  int n = 0;
  int k = 2;
  IVec a;  // size pair_count(n)
  IVec c;  // size triple_count(n) when k == 3, else 0

  friend bool operator==(const PureNF& x, const PureNF& y) {
    return x.n == y.n && x.k == y.k && x.a == y.a && x.c == y.c;
  }
  bool is_identity() const { return a.isZero() && c.isZero(); }
};

PureNF nf_identity(int n, int k);

// [A_e, A_f] as a triple-indexed vector (zero for equal/disjoint pairs).
IVec comm_pairs(int n, PairIdx e, PairIdx f);

// Collection of an A-word into the normal form.
PureNF collect(const AWord& w, int k);

PureNF nf_mul(const PureNF& x, const PureNF& y);
PureNF nf_inv(const PureNF& x);
PureNF nf_pow(const PureNF& x, Int e);

// Basis translation by t: an automorphism of the nilpotent quotient.
PureNF act_nf(const Perm& t, const PureNF& p);

// Combing: rewrite a pure braid word as an A-word, peeling the last strand
// through the split exact sequence  F_{n-1} -> P_n -> P_{n-1}  (the fibre is
// free on A_{1,n},...,A_{n-1,n}) and recursing.  Fibre coordinates are read
// off the Artin action.
AWord pure_to_aword(const BraidWord& w);

// Normal form of a pure word: crossing numbers at k = 2; combing followed by
// collection at k = 3 (the a-part is cross-checked against crossing numbers).
PureNF nf_of_pure_word(const BraidWord& w, int k);

}  // namespace braidq

#endif
