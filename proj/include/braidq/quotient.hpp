#ifndef BRAIDQ_QUOTIENT_HPP
#define BRAIDQ_QUOTIENT_HPP

#include <optional>

#include "braidq/nilpotent.hpp"

namespace braidq {

// Element of B_n modulo the degree-k lower-central term of P_n, represented
// as p * s(pi) with the pure part on the left of the canonical section lift.
struct QElem {
  Perm pi;
  PureNF p;

  int n() const { return p.n; }
  int k() const { return p.k; }
  friend bool operator==(const QElem& x, const QElem& y) {
    return x.pi == y.pi && x.p == y.p;
  }
  friend bool operator!=(const QElem& x, const QElem& y) { return !(x == y); }
};

QElem q_identity(int n, int k);

// Section cocycle f(pi, rho) = nf of s(pi) s(rho) s(pi rho)^{-1}; memoised
// process-wide per (n, k, pi, rho).
PureNF quotient_cocycle(int n, int k, const Perm& pi, const Perm& rho);

QElem q_of_word(const BraidWord& w, int k);
QElem q_mul(const QElem& x, const QElem& y);
QElem q_inv(const QElem& x);
QElem q_pow(const QElem& x, Int e);

// Exact order; nullopt encodes an infinite order (a value, not a fault).
std::optional<Int> q_order(const QElem& x);

// Optional persistent spill of the cocycle memo (CLI convenience): plain text
// rows "n k perm perm nf...", keyed by the convention tag.
void load_cocycle_cache(const std::string& dir);
void save_cocycle_cache(const std::string& dir);

}  // namespace braidq

#endif
