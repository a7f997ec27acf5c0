#ifndef BRAIDQ_CONSTRUCTIONS_HPP
#define BRAIDQ_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "braidq/cert.hpp"
#include "braidq/splitting.hpp"

namespace braidq {

// Z_n x| Z_m with the action of the Z_m generator given by multiplication
// by t on Z_n.
struct SemidirectSpec {
  int n = 0;
  int m = 0;
  int t = 0;
};

// Validates n >= 3, m >= 1, 1 <= t < n, gcd(t,n) = 1, t^m = 1 (mod n).
SemidirectSpec make_semidirect_spec(int n, int m, int t);

// Group of order n*m; element (u, v) at index u*m + v, identity first.
// The product follows the artifact-wide word order:
// (u1,v1)(u2,v2) = (t^{v2} u1 + u2, v1 + v2).
FinGroup semidirect_group(const SemidirectSpec& spec);

struct AffineRep {
  PermRep rep;          // (u,v) acts on residues {1..n} as z |-> t^v z + u
  bool injective = false;
};

AffineRep affine_perm_rep(const SemidirectSpec& spec);

// Regular representation + staged splitting into B_{|G|}/Gamma_k.
// Throws obstruction(Gcd) when gcd(|G|, k!) != 1.
EmbeddingCert cayley_embed(const FinGroup& g, int k);

// Affine representation + staged splitting into B_n/Gamma_k.  Throws
// obstruction(Hypothesis) naming the failing condition: some
// gcd(t^l - 1, n) != 1 for 1 <= l < m, or the order parity/coprimality
// requirement (mn odd for k = 2, gcd(mn, 6) = 1 for k = 3).
EmbeddingCert semidirect_embed(const SemidirectSpec& spec, int k);

// Z_{p^r} x| Z_{d1} with t the smallest residue of multiplicative order
// exactly d1 mod p^r; requires p an odd prime and d1 an odd divisor of p-1.
// The returned spec is re-verified to satisfy gcd(t^l - 1, p^r) = 1 for
// 0 < l < d1.
SemidirectSpec prime_power_spec(int p, int r, int d1);

// Searches for an element of exact order m in B_n/Gamma_k, one canonical
// permutation per cycle type of order m (splittability is a class function).
// nullopt = exhausted all cycle types (a proof of nonexistence).
std::optional<QElem> torsion_element(int n, int k, int m);

// The two order-27 reproductions in B_9/Gamma_2: (a) Z_9 x| Z_3 with t = 4,
// (b) the Heisenberg group mod 3.  Verifies the quoted permutation
// identities, the orbit decomposition, the braid-word relations in the
// rank-9 quotient model, then splits over the free complement module and
// emits a fully verified certificate.  Any mismatch with the expected
// identity aborts with the failing check named.
EmbeddingCert example27(char variant);

// Group input file: {"name": ..., "n": N, "perm_gens": ["(1,2,3)", ...]} or
// {"name": ..., "table": [[...]], "gens": [...]}.
FinGroup group_from_json_text(const std::string& text);

}  // namespace braidq

#endif
