#ifndef BRAIDQ_SPLITTING_HPP
#define BRAIDQ_SPLITTING_HPP

#include <optional>
#include <vector>

#include "braidq/groups.hpp"
#include "braidq/quotient.hpp"

namespace braidq {

// Z[G]-module structure on a G-stable subset of the pair or triple basis of
// B_n.  Coordinate i corresponds to full-basis rank labels[i].
struct GModule {
  int n = 0;
  BasisLevel level = BasisLevel::pairs;
  std::vector<int> labels;
  FinGroup group;
  // action[g][i] = (j, sign): g carries basis element i to sign * element j.
  std::vector<std::vector<std::pair<int, int>>> action;

  int dim() const { return static_cast<int>(labels.size()); }
  IVec act(int g, const IVec& v) const;
};

// Module on the given full-basis ranks (all of them when labels is empty).
// Throws error("ModuleNotInvariant...") when the span is not G-stable.
GModule make_module(const PermRep& rep, BasisLevel level,
                    std::vector<int> labels = {});

// Normalised 2-cocycle over a GModule, stored as val[g * |G| + h].
struct Cocycle {
  int order = 0;
  std::vector<IVec> val;
  const IVec& operator()(int g, int h) const { return val[g * order + h]; }
  IVec& operator()(int g, int h) { return val[g * order + h]; }
};

struct Cochain {
  std::vector<IVec> d;  // per group element; d[0] = 0
};

// g . f(h,l) - f(gh,l) + f(g,hl) - f(g,h) = 0 for all triples.
bool cocycle_identity_holds(const GModule& m, const Cocycle& f);

// f(g,h) = d(g) + g . d(h) - d(gh) for all pairs.
bool is_coboundary_of(const GModule& m, const Cocycle& f, const Cochain& d);

// f(g,h) = module coordinates of lift(g) lift(h) lift(gh)^{-1}.  The lifts'
// permutation parts must equal the rep images; each product must be pure and
// supported on the module labels (pair part at k=2, triple part at k=3 with
// vanishing pair part).  Verifies normalisation and the cocycle identity
// exhaustively before returning.
Cocycle restricted_cocycle(const PermRep& rep, const GModule& m,
                           const std::vector<QElem>& lifts);

struct SolveStats {
  int free_blocks = 0;     // solved by the coinduction contraction
  int generic_blocks = 0;  // solved by integer elimination
};

// Integral solve of f = (coboundary of d), decomposed over orbit blocks:
// free blocks (orbit length = |G|) by the explicit contraction, the rest by
// exact Smith-style elimination.  nullopt = no integral solution exists.
// Any returned cochain is re-verified against f before being returned.
std::optional<Cochain> solve_coboundary(const GModule& m, const Cocycle& f,
                                        SolveStats* stats = nullptr);

struct SectionResult {
  std::vector<QElem> images;  // per group element, a verified homomorphism
  SolveStats pair_stats;
  SolveStats triple_stats;  // k = 3 only
};

// Homomorphic section of the pullback extension over rep: images project to
// rep.images and satisfy the full multiplication table (exhaustively
// re-verified, along with injectivity).  k = 3 is staged: split over the
// pair module, lift, then split over the signed triple module.  nullopt when
// some coboundary equation has no integral solution.
std::optional<SectionResult> build_section(const PermRep& rep, int k);

// Pair-level variant with caller-supplied lifts (e.g. verified generator
// words extended along gen_word) and the coboundary solved over the span of
// the given pair ranks, onto which the lifts' cocycle must project.
std::optional<SectionResult> build_section_over(const PermRep& rep,
                                                const std::vector<QElem>& lifts,
                                                std::vector<int> pair_labels);

}  // namespace braidq

#endif
