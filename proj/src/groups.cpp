#include "braidq/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "braidq/common.hpp"

namespace braidq {

Int FinGroup::element_order(int g) const {
  Int r = 1;
  int cur = g;
  while (cur != 0) {
    cur = table[cur][g];
    ++r;
  }
  return r;
}

namespace {

// gen_word[g]: generator positions whose in-order product is g (BFS, so the
// words are shortest).  Throws if the generators do not reach every element.
std::vector<std::vector<int>> gen_words_from_table(
    const std::vector<std::vector<int>>& table, const std::vector<int>& gens) {
  const int order = static_cast<int>(table.size());
  std::vector<std::vector<int>> words(order);
  std::vector<char> seen(order, 0);
  seen[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
      const int y = table[x][gens[gi]];
      if (seen[y]) continue;
      seen[y] = 1;
      words[y] = words[x];
      words[y].push_back(gi);
      queue.push_back(y);
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw error("group generators do not generate the whole group");
  return words;
}

}  // namespace

std::pair<FinGroup, PermRep> from_perm_gens(int n, const std::vector<Perm>& gens,
                                            const std::string& name, int cap) {
  for (const Perm& g : gens)
    if (g.n() != n) throw error("from_perm_gens: generator degree mismatch");
  std::vector<Perm> elems{Perm::identity(n)};
  std::map<std::vector<int>, int> index{{elems[0].img, 0}};
  std::vector<std::vector<int>> words(1);
  std::size_t next = 0;
  while (next < elems.size()) {
    const Perm cur = elems[next];
    for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
      const Perm img = mul(cur, gens[gi]);
      if (index.emplace(img.img, static_cast<int>(elems.size())).second) {
        if (static_cast<int>(elems.size()) >= cap)
          throw error("CapExceeded: permutation closure larger than " +
                      std::to_string(cap));
        elems.push_back(img);
        words.push_back(words[next]);
        words.back().push_back(gi);
      }
    }
    ++next;
  }
  const int order = static_cast<int>(elems.size());
  FinGroup g;
  g.order = order;
  g.name = name;
  g.table.assign(order, std::vector<int>(order, 0));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      g.table[a][b] = index.at(mul(elems[a], elems[b]).img);
  g.inv.resize(order);
  for (int a = 0; a < order; ++a) g.inv[a] = index.at(inverse(elems[a]).img);
  g.gens.reserve(gens.size());
  for (const Perm& s : gens) g.gens.push_back(index.at(s.img));
  g.gen_word = std::move(words);
  PermRep rep{g, n, std::move(elems)};
  return {std::move(g), std::move(rep)};
}

FinGroup group_from_table(std::vector<std::vector<int>> table,
                          std::vector<int> gens, const std::string& name) {
  const int order = static_cast<int>(table.size());
  if (order == 0) throw error("group_from_table: empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != order)
      throw error("group_from_table: table is not square");
    for (int v : row)
      if (v < 0 || v >= order)
        throw error("group_from_table: entry out of range");
  }
  for (int b = 0; b < order; ++b)
    if (table[0][b] != b || table[b][0] != b)
      throw error("group_from_table: element 0 is not an identity");
  // Latin square: rows and columns are bijections.
  for (int a = 0; a < order; ++a) {
    std::vector<char> row_seen(order, 0), col_seen(order, 0);
    for (int b = 0; b < order; ++b) {
      if (row_seen[table[a][b]]++) throw error("group_from_table: repeated entry in row");
      if (col_seen[table[b][a]]++) throw error("group_from_table: repeated entry in column");
    }
  }
  FinGroup g;
  g.order = order;
  g.table = std::move(table);
  g.name = name;
  g.inv.assign(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b)
      if (g.table[a][b] == 0) {
        if (g.table[b][a] != 0)
          throw error("group_from_table: one-sided inverse");
        g.inv[a] = b;
        break;
      }
    if (g.inv[a] < 0) throw error("group_from_table: missing inverse");
  }
  if (gens.empty()) {
    // Greedy generating set so associativity can be checked via Light's test.
    std::vector<char> reached(order, 0);
    reached[0] = 1;
    int covered = 1;
    while (covered < order) {
      int pick = -1;
      for (int x = 1; x < order; ++x)
        if (!reached[x]) {
          pick = x;
          break;
        }
      gens.push_back(pick);
      // close under multiplication by existing reached set and new generator
      std::deque<int> queue;
      for (int x = 0; x < order; ++x)
        if (reached[x]) queue.push_back(x);
      while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (int s : gens) {
          const int y = g.table[x][s];
          if (!reached[y]) {
            reached[y] = 1;
            ++covered;
            queue.push_back(y);
          }
        }
      }
    }
  }
  for (int s : gens)
    if (s < 0 || s >= order) throw error("group_from_table: generator out of range");
  g.gens = std::move(gens);
  // Light's associativity test: with a Latin square it suffices to check
  // (a*s)*c == a*(s*c) for s ranging over a generating set.
  for (int s : g.gens)
    for (int a = 0; a < order; ++a)
      for (int c = 0; c < order; ++c)
        if (g.table[g.table[a][s]][c] != g.table[a][g.table[s][c]])
          throw error("group_from_table: associativity fails");
  g.gen_word = gen_words_from_table(g.table, g.gens);
  return g;
}

FinGroup cyclic_group(int m) {
  if (m < 1) throw error("cyclic_group: order must be positive");
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[a][b] = (a + b) % m;
  std::vector<int> gens;
  if (m > 1) gens.push_back(1);
  return group_from_table(std::move(table), std::move(gens),
                          "Z" + std::to_string(m));
}

FinGroup direct_product(const FinGroup& a, const FinGroup& b) {
  const int order = a.order * b.order;
  auto pack = [&](int ia, int ib) { return ia * b.order + ib; };
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int ia = 0; ia < a.order; ++ia)
    for (int ib = 0; ib < b.order; ++ib)
      for (int ja = 0; ja < a.order; ++ja)
        for (int jb = 0; jb < b.order; ++jb)
          table[pack(ia, ib)][pack(ja, jb)] =
              pack(a.table[ia][ja], b.table[ib][jb]);
  std::vector<int> gens;
  for (int s : a.gens) gens.push_back(pack(s, 0));
  for (int s : b.gens) gens.push_back(pack(0, s));
  return group_from_table(std::move(table), std::move(gens),
                          a.name + "x" + b.name);
}

void validate_rep(const PermRep& rep) {
  const FinGroup& g = rep.group;
  if (static_cast<int>(rep.images.size()) != g.order)
    throw error("validate_rep: image count mismatch");
  for (const Perm& p : rep.images)
    if (p.n() != rep.degree) throw error("validate_rep: image degree mismatch");
  for (std::size_t a = 0; a < rep.images.size(); ++a)
    for (std::size_t b = a + 1; b < rep.images.size(); ++b)
      if (rep.images[a] == rep.images[b])
        throw error("validate_rep: images are not distinct");
  if (!(rep.images[0] == Perm::identity(rep.degree)))
    throw error("validate_rep: identity image not identity");
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      if (!(rep.images[g.mul(x, y)] == mul(rep.images[x], rep.images[y])))
        throw error("validate_rep: image table is not a homomorphism");
}

PermRep regular_rep(const FinGroup& g) {
  PermRep rep;
  rep.group = g;
  rep.degree = g.order;
  rep.images.reserve(g.order);
  for (int e = 0; e < g.order; ++e) {
    Perm p = Perm::identity(g.order);
    for (int x = 0; x < g.order; ++x) p.img[x] = g.table[x][e] + 1;
    rep.images.push_back(std::move(p));
  }
  return rep;
}

int fixed_point_profile(const PermRep& rep) {
  int best = 0;
  for (int e = 1; e < rep.group.order; ++e) {
    int fixed = 0;
    for (int x = 1; x <= rep.degree; ++x)
      if (rep.images[e](x) == x) ++fixed;
    best = std::max(best, fixed);
  }
  return best;
}

OrbitBasis orbit_basis(const PermRep& rep, BasisLevel level) {
  const int n = rep.degree;
  const Int count =
      level == BasisLevel::pairs ? pair_count(n) : triple_count(n);
  OrbitBasis out;
  out.level = level;
  out.n = n;
  std::vector<int> gen_elems = rep.group.gens;
  if (gen_elems.empty())
    for (int e = 1; e < rep.group.order; ++e) gen_elems.push_back(e);
  // sign[rank]: 0 unvisited, else +1/-1 relative to the orbit representative.
  std::vector<int> sign(static_cast<std::size_t>(count), 0);
  for (Int start = 0; start < count; ++start) {
    if (sign[start] != 0) continue;
    OrbitBasis::Orbit orbit;
    orbit.rep_rank = static_cast<int>(start);
    sign[start] = 1;
    orbit.elements.push_back({static_cast<int>(start), 1});
    std::size_t next = 0;
    while (next < orbit.elements.size()) {
      const OrbitBasis::Entry cur = orbit.elements[next++];
      for (int ge : gen_elems) {
        const Perm& u = rep.images[ge];
        int new_rank;
        int new_sign = cur.sign;
        if (level == BasisLevel::pairs) {
          const PairIdx moved = act_pair(u, pair_unrank(n, cur.rank));
          new_rank = static_cast<int>(pair_rank(n, moved));
        } else {
          const SignedTriple moved =
              act_triple(u, SignedTriple{triple_unrank(n, cur.rank), 1});
          new_rank = triple_rank(n, moved.t);
          new_sign *= moved.sign;
        }
        if (sign[new_rank] == 0) {
          sign[new_rank] = new_sign;
          orbit.elements.push_back({new_rank, new_sign});
        } else if (sign[new_rank] != new_sign) {
          throw obstruction(ObstructionKind::Sign,
                            "SignObstruction: group element maps a basis "
                            "triple to its own negative");
        }
      }
    }
    orbit.free =
        static_cast<int>(orbit.elements.size()) == rep.group.order;
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace braidq
