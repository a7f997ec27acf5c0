#ifndef BRAIDQ_GROUPS_HPP
#define BRAIDQ_GROUPS_HPP

#include <string>
#include <vector>

#include "braidq/perm.hpp"

namespace braidq {

// Finite group as a multiplication table over element indices 0..order-1,
// index 0 the identity.  gen_word[g] is a product of generator positions
// reaching g (breadth-first, identity empty), used to transport images of
// generators to the whole group.
struct FinGroup {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[a][b] = a * b
  std::vector<int> gens;                // element indices of the generators
  std::vector<int> inv;
  std::vector<std::vector<int>> gen_word;
  std::string name;

  int mul(int a, int b) const { return table[a][b]; }
  Int element_order(int g) const;
};

inline constexpr int kGroupOrderCap = 10000;

// Closure of permutation generators under the word-order product; element 0
// is the identity and elements are numbered in discovery order.
struct PermRep;
std::pair<FinGroup, PermRep> from_perm_gens(int n, const std::vector<Perm>& gens,
                                            const std::string& name = "",
                                            int cap = kGroupOrderCap);

// Validates identity/inverses/associativity (full check for small tables,
// dense sampling above 300 elements).
FinGroup group_from_table(std::vector<std::vector<int>> table,
                          std::vector<int> gens, const std::string& name = "");

FinGroup cyclic_group(int m);
FinGroup direct_product(const FinGroup& a, const FinGroup& b);

// Homomorphism G -> S_degree consistent with the group table:
// images[mul(g,h)] == mul(images[g], images[h]).
struct PermRep {
  FinGroup group;
  int degree = 0;
  std::vector<Perm> images;
};

void validate_rep(const PermRep& rep);  // table consistency + degree

// Regular representation: right translation x -> x*g on the element set
// (fixed-point free and transitive; an injective homomorphism under the
// word-order product).
PermRep regular_rep(const FinGroup& g);

// Maximum fixed-point count over non-identity images.
int fixed_point_profile(const PermRep& rep);

enum class BasisLevel { pairs, triples };

// Orbit decomposition of the pair or signed-triple basis of B_degree.
// Entries store basis ranks; sign is meaningful at triples level only.
struct OrbitBasis {
  struct Entry {
    int rank = 0;
    int sign = 1;
  };
  struct Orbit {
    int rep_rank = 0;                // lexicographically smallest member
    std::vector<Entry> elements;     // discovery order from the representative
    bool free = false;               // orbit size == |G|
  };
  BasisLevel level = BasisLevel::pairs;
  int n = 0;
  std::vector<Orbit> orbits;
};

// Throws obstruction(Sign) at triples level when some group element carries a
// triple to its own negative.
OrbitBasis orbit_basis(const PermRep& rep, BasisLevel level);

}  // namespace braidq

#endif
