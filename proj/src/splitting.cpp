#include "braidq/splitting.hpp"

#include <algorithm>
#include <map>

#include "braidq/snf.hpp"

namespace braidq {

IVec GModule::act(int g, const IVec& v) const {
  IVec out = IVec::Zero(dim());
  for (int i = 0; i < dim(); ++i) {
    const auto& [j, sign] = action[g][i];
    out[j] += sign * v[i];
  }
  return out;
}

GModule make_module(const PermRep& rep, BasisLevel level,
                    std::vector<int> labels) {
  const int n = rep.degree;
  const int count = level == BasisLevel::pairs ? pair_count(n) : triple_count(n);
  GModule m;
  m.n = n;
  m.level = level;
  m.group = rep.group;
  if (labels.empty()) {
    labels.resize(count);
    for (int i = 0; i < count; ++i) labels[i] = i;
  }
  std::map<int, int> coord_of;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if (labels[i] < 0 || labels[i] >= count)
      throw error("make_module: basis rank out of range");
    if (!coord_of.emplace(labels[i], i).second)
      throw error("make_module: repeated basis rank");
  }
  m.labels = std::move(labels);
  m.action.resize(rep.group.order);
  for (int g = 0; g < rep.group.order; ++g) {
    m.action[g].resize(m.dim());
    for (int i = 0; i < m.dim(); ++i) {
      int rank, sign = 1;
      if (level == BasisLevel::pairs) {
        rank = pair_rank(n, act_pair(rep.images[g], pair_unrank(n, m.labels[i])));
      } else {
        const SignedTriple moved = act_triple(
            rep.images[g], SignedTriple{triple_unrank(n, m.labels[i]), 1});
        rank = triple_rank(n, moved.t);
        sign = moved.sign;
      }
      auto it = coord_of.find(rank);
      if (it == coord_of.end())
        throw error("ModuleNotInvariant: selected basis is not stable under "
                    "the group action");
      m.action[g][i] = {it->second, sign};
    }
  }
  return m;
}

bool cocycle_identity_holds(const GModule& m, const Cocycle& f) {
  const int order = m.group.order;
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      for (int l = 0; l < order; ++l) {
        const IVec lhs = m.act(g, f(h, l)) - f(m.group.mul(g, h), l) +
                         f(g, m.group.mul(h, l)) - f(g, h);
        if (!lhs.isZero()) return false;
      }
  return true;
}

bool is_coboundary_of(const GModule& m, const Cocycle& f, const Cochain& d) {
  const int order = m.group.order;
  if (static_cast<int>(d.d.size()) != order) return false;
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h) {
      const IVec rhs = d.d[g] + m.act(g, d.d[h]) - d.d[m.group.mul(g, h)];
      if (f(g, h) != rhs) return false;
    }
  return true;
}

Cocycle restricted_cocycle(const PermRep& rep, const GModule& m,
                           const std::vector<QElem>& lifts) {
  const int order = rep.group.order;
  const int expected_k = m.level == BasisLevel::pairs ? 2 : 3;
  if (static_cast<int>(lifts.size()) != order)
    throw error("restricted_cocycle: one lift per group element required");
  for (int g = 0; g < order; ++g) {
    if (lifts[g].n() != rep.degree || lifts[g].k() != expected_k)
      throw error("restricted_cocycle: lift in the wrong quotient");
    if (!(lifts[g].pi == rep.images[g]))
      throw error("restricted_cocycle: lift does not project to rep");
  }
  if (!(lifts[0] == q_identity(rep.degree, expected_k)))
    throw error("restricted_cocycle: lift of the identity must be trivial");

  std::map<int, int> coord_of;
  for (int i = 0; i < m.dim(); ++i) coord_of.emplace(m.labels[i], i);

  Cocycle f;
  f.order = order;
  f.val.resize(static_cast<std::size_t>(order) * order);
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h) {
      const QElem q =
          q_mul(q_mul(lifts[g], lifts[h]), q_inv(lifts[m.group.mul(g, h)]));
      if (!q.pi.is_identity())
        throw error("restricted_cocycle: lift products are not pure");
      const IVec& src = m.level == BasisLevel::pairs ? q.p.a : q.p.c;
      if (m.level == BasisLevel::triples && !q.p.a.isZero())
        throw error("restricted_cocycle: pair part must vanish at the triple "
                    "stage");
      IVec v = IVec::Zero(m.dim());
      for (Eigen::Index r = 0; r < src.size(); ++r) {
        if (src[r] == 0) continue;
        auto it = coord_of.find(static_cast<int>(r));
        if (it == coord_of.end())
          throw error("restricted_cocycle: product not supported on the "
                      "module basis");
        v[it->second] = src[r];
      }
      f(g, h) = std::move(v);
    }
  for (int g = 0; g < order; ++g)
    if (!f(0, g).isZero() || !f(g, 0).isZero())
      throw error("restricted_cocycle: cocycle is not normalised");
  if (!cocycle_identity_holds(m, f))
    throw error("restricted_cocycle: cocycle identity fails");
  return f;
}

namespace {

struct Block {
  std::vector<std::pair<int, int>> elems;  // (module coord, sign vs rep)
  int rep_coord = 0;
  bool free = false;
};

std::vector<Block> module_blocks(const GModule& m) {
  const int order = m.group.order;
  std::vector<int> gens = m.group.gens;
  if (gens.empty())
    for (int e = 1; e < order; ++e) gens.push_back(e);
  std::vector<int> seen(m.dim(), 0);
  std::vector<Block> blocks;
  for (int start = 0; start < m.dim(); ++start) {
    if (seen[start]) continue;
    Block blk;
    blk.rep_coord = start;
    seen[start] = 1;
    blk.elems.push_back({start, 1});
    bool consistent = true;
    std::size_t next = 0;
    while (next < blk.elems.size()) {
      const auto [coord, sign] = blk.elems[next++];
      for (int ge : gens) {
        const auto& [j, s] = m.action[ge][coord];
        if (!seen[j]) {
          seen[j] = 1;
          blk.elems.push_back({j, sign * s});
        } else {
          // cross edge: sign labels may disagree (non-free twisting)
          for (const auto& [c2, s2] : blk.elems)
            if (c2 == j && s2 != sign * s) consistent = false;
        }
      }
    }
    blk.free = consistent && static_cast<int>(blk.elems.size()) == order;
    blocks.push_back(std::move(blk));
  }
  return blocks;
}

// Free-block contraction: with e_b the block representative and
// phi = coefficient at e_b, any block vector v equals
// sum_x phi(x^{-1} v) (x e_b), and d(g) = sum_x phi(f(x^{-1}, g)) (x e_b)
// trivialises any cocycle with values in the block.
void solve_free_block(const GModule& m, const Cocycle& f, const Block& blk,
                      std::vector<IVec>& d) {
  const int order = m.group.order;
  for (int g = 0; g < order; ++g)
    for (int x = 0; x < order; ++x) {
      const Int coeff = f(m.group.inv[x], g)[blk.rep_coord];
      if (coeff == 0) continue;
      const auto& [j, s] = m.action[x][blk.rep_coord];  // x . e_b
      d[g][j] += s * coeff;
    }
}

// Generic block: exact integer solve of the full coboundary system on the
// block coordinates (unknowns d(g)[c], equations over all pairs (g,h)).
bool solve_generic_block(const GModule& m, const Cocycle& f, const Block& blk,
                         std::vector<IVec>& d) {
  const int order = m.group.order;
  const int s = static_cast<int>(blk.elems.size());
  std::map<int, int> local;
  for (int l = 0; l < s; ++l) local.emplace(blk.elems[l].first, l);
  const Eigen::Index rows = static_cast<Eigen::Index>(order) * order * s;
  const Eigen::Index cols = static_cast<Eigen::Index>(order) * s;
  IMat A = IMat::Zero(rows, cols);
  IVec b = IVec::Zero(rows);
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h) {
      const Eigen::Index rb = (static_cast<Eigen::Index>(g) * order + h) * s;
      const int gh = m.group.mul(g, h);
      for (int l = 0; l < s; ++l) {
        A(rb + l, static_cast<Eigen::Index>(g) * s + l) += 1;
        A(rb + l, static_cast<Eigen::Index>(gh) * s + l) -= 1;
        b(rb + l) = f(g, h)[blk.elems[l].first];
      }
      for (int l = 0; l < s; ++l) {
        const auto& [j, sg] = m.action[g][blk.elems[l].first];
        A(rb + local.at(j), static_cast<Eigen::Index>(h) * s + l) += sg;
      }
    }
  const std::optional<IVec> x = solve_linear(std::move(A), std::move(b));
  if (!x) return false;
  for (int g = 0; g < order; ++g)
    for (int l = 0; l < s; ++l)
      d[g][blk.elems[l].first] = (*x)(static_cast<Eigen::Index>(g) * s + l);
  return true;
}

}  // namespace

std::optional<Cochain> solve_coboundary(const GModule& m, const Cocycle& f,
                                        SolveStats* stats) {
  const int order = m.group.order;
  Cochain out;
  out.d.assign(order, IVec::Zero(m.dim()));
  for (const Block& blk : module_blocks(m)) {
    if (blk.free) {
      solve_free_block(m, f, blk, out.d);
      if (stats) ++stats->free_blocks;
    } else {
      if (!solve_generic_block(m, f, blk, out.d)) return std::nullopt;
      if (stats) ++stats->generic_blocks;
    }
  }
  if (!out.d[0].isZero())
    throw error("solve_coboundary: normalisation lost");  // unreachable
  if (!is_coboundary_of(m, f, out))
    throw error("solve_coboundary: produced cochain fails re-verification");
  return out;
}

namespace {

// Full table + kernel + projection check; the section is injective because a
// homomorphism with trivial kernel is.
void verify_section(const PermRep& rep, const std::vector<QElem>& im) {
  const int order = rep.group.order;
  const int n = rep.degree;
  const int k = im[0].k();
  if (!(im[0] == q_identity(n, k)))
    throw error("verify_section: identity image not trivial");
  for (int g = 0; g < order; ++g) {
    if (!(im[g].pi == rep.images[g]))
      throw error("verify_section: wrong projection");
    if (g != 0 && im[g] == q_identity(n, k))
      throw error("verify_section: nontrivial kernel");
  }
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      if (!(q_mul(im[g], im[h]) == im[rep.group.mul(g, h)]))
        throw error("verify_section: multiplication table fails");
}

// Left-multiplies each lift by the kernel correction -d(g) scattered over the
// module labels (pair part at k=2, central part at k=3).
std::vector<QElem> apply_correction(const GModule& m,
                                    const std::vector<QElem>& lifts,
                                    const Cochain& d) {
  std::vector<QElem> out = lifts;
  for (int g = 0; g < m.group.order; ++g) {
    IVec& target = m.level == BasisLevel::pairs ? out[g].p.a : out[g].p.c;
    for (int i = 0; i < m.dim(); ++i) target[m.labels[i]] -= d.d[g][i];
  }
  return out;
}

}  // namespace

std::optional<SectionResult> build_section_over(const PermRep& rep,
                                                const std::vector<QElem>& lifts,
                                                std::vector<int> pair_labels) {
  validate_rep(rep);
  SectionResult res;
  GModule m = make_module(rep, BasisLevel::pairs, std::move(pair_labels));
  const Cocycle f = restricted_cocycle(rep, m, lifts);
  const std::optional<Cochain> d = solve_coboundary(m, f, &res.pair_stats);
  if (!d) return std::nullopt;
  res.images = apply_correction(m, lifts, *d);
  verify_section(rep, res.images);
  return res;
}

std::optional<SectionResult> build_section(const PermRep& rep, int k) {
  if (k != 2 && k != 3) throw error("build_section: k must be 2 or 3");
  const int order = rep.group.order;
  std::vector<QElem> lifts;
  lifts.reserve(order);
  for (int g = 0; g < order; ++g)
    lifts.push_back(QElem{rep.images[g], nf_identity(rep.degree, 2)});
  std::optional<SectionResult> pair_stage =
      build_section_over(rep, lifts, {});
  if (!pair_stage || k == 2) return pair_stage;

  // Stage two: lift the pair-level section to k = 3 (central part zero) and
  // correct over the signed triple module.  The pair part of the lifted
  // cocycle vanishes because stage one already splits modulo the centre.
  SectionResult res;
  res.pair_stats = pair_stage->pair_stats;
  std::vector<QElem> lifts3;
  lifts3.reserve(order);
  for (int g = 0; g < order; ++g) {
    PureNF p = nf_identity(rep.degree, 3);
    p.a = pair_stage->images[g].p.a;
    lifts3.push_back(QElem{rep.images[g], std::move(p)});
  }
  GModule m3 = make_module(rep, BasisLevel::triples);
  const Cocycle f3 = restricted_cocycle(rep, m3, lifts3);
  const std::optional<Cochain> d3 = solve_coboundary(m3, f3, &res.triple_stats);
  if (!d3) return std::nullopt;
  res.images = apply_correction(m3, lifts3, *d3);
  verify_section(rep, res.images);
  return res;
}

}  // namespace braidq
