#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "braidq/perm.hpp"

using namespace braidq;

TEST_CASE("parse, print and identity basics") {
  const Perm id = Perm::identity(5);
  CHECK(id.is_identity());
  CHECK(to_cycles(id) == "()");
  const Perm p = parse_perm("(1,2,3)(4,5,6)", 9);
  CHECK(p(1) == 2);
  CHECK(p(3) == 1);
  CHECK(p(7) == 7);
  CHECK(parse_perm(to_cycles(p), 9) == p);
  CHECK_THROWS(parse_perm("(1,2", 3));
  CHECK_THROWS(parse_perm("(1,1)", 3));
  CHECK_THROWS(parse_perm("(1,4)", 3));
}

TEST_CASE("compose applies right factor first; mul is word order") {
  const Perm a = parse_perm("(1,2)", 3);
  const Perm b = parse_perm("(2,3)", 3);
  // compose(p,q)(x) = p(q(x)): (1,2) after (2,3) is the 3-cycle (1,2,3).
  CHECK(compose(a, b) == parse_perm("(1,2,3)", 3));
  // mul(p,q) = "apply p, then q" = compose(q,p).
  CHECK(mul(a, b) == parse_perm("(1,3,2)", 3));
  CHECK(mul(a, b) == compose(b, a));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    Perm p{v}, q{v}, r{v};
    std::shuffle(p.img.begin(), p.img.end(), rng);
    std::shuffle(q.img.begin(), q.img.end(), rng);
    std::shuffle(r.img.begin(), r.img.end(), rng);
    CHECK(mul(mul(p, q), r) == mul(p, mul(q, r)));
    CHECK(mul(p, inverse(p)).is_identity());
    for (int x = 1; x <= n; ++x) CHECK(mul(p, q)(x) == q(p(x)));
  }
}

TEST_CASE("cycle profile: cycle types and orders") {
  // (1)(2)(3)(4,5,6)(7,9,8): cycle lengths {3,3}, three fixed points.
  const auto cp1 = cycle_profile(parse_perm("(4,5,6)(7,9,8)", 9));
  CHECK(cp1.lengths == std::vector<int>{3, 3});
  CHECK(cp1.fixed_points == 3);
  CHECK(cp1.order == 3);
  // (1,4,7,3,5,8,2,6,9): one 9-cycle, no fixed points.
  const auto cp2 = cycle_profile(parse_perm("(1,4,7,3,5,8,2,6,9)", 9));
  CHECK(cp2.lengths == std::vector<int>{9});
  CHECK(cp2.fixed_points == 0);
  CHECK(cp2.order == 9);
  const auto cp3 = cycle_profile(Perm::identity(4));
  CHECK(cp3.lengths.empty());
  CHECK(cp3.fixed_points == 4);
  CHECK(cp3.order == 1);
}

TEST_CASE("pair and triple ranking is a lexicographic bijection") {
  for (int n : {2, 3, 5, 9}) {
    CHECK(pair_count(n) == n * (n - 1) / 2);
    CHECK(triple_count(n) == n * (n - 1) * (n - 2) / 6);
    int prev_i = 0, prev_j = 0;
    for (int r = 0; r < pair_count(n); ++r) {
      const PairIdx e = pair_unrank(n, r);
      CHECK(pair_rank(n, e) == r);
      CHECK(e.i < e.j);
      CHECK(e.j <= n);
      if (r > 0) CHECK((e.i > prev_i || (e.i == prev_i && e.j > prev_j)));
      prev_i = e.i;
      prev_j = e.j;
    }
    for (int r = 0; r < triple_count(n); ++r) {
      const TripleIdx t = triple_unrank(n, r);
      CHECK(triple_rank(n, t) == r);
      CHECK((t.i < t.j && t.j < t.k && t.k <= n));
    }
  }
  CHECK(pair_rank(9, PairIdx{1, 2}) == 0);
  CHECK(pair_rank(9, PairIdx{8, 9}) == 35);
}

TEST_CASE("pair action is a left action matching the word-order product") {
  const Perm beta = parse_perm("(1,4,7,3,5,8,2,6,9)", 9);
  // Successive powers of beta carry {1,2} around its 9-element orbit.
  PairIdx e{1, 2};
  e = act_pair(beta, e);
  CHECK((e.i == 8 && e.j == 9));
  std::set<std::pair<int, int>> seen;
  PairIdx cur{1, 2};
  for (int i = 0; i < 9; ++i) {
    seen.insert({cur.i, cur.j});
    cur = act_pair(beta, cur);
  }
  CHECK((cur.i == 1 && cur.j == 2));
  CHECK(seen.size() == 9);
  const std::set<std::pair<int, int>> expect = {{1, 2}, {8, 9}, {5, 6},
                                                {2, 3}, {7, 8}, {4, 5},
                                                {1, 3}, {7, 9}, {4, 6}};
  CHECK(seen == expect);

  // Left action: act(mul(s,t), e) = act(s, act(t, e)).
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Perm s = Perm::identity(6), t = Perm::identity(6);
    std::shuffle(s.img.begin(), s.img.end(), rng);
    std::shuffle(t.img.begin(), t.img.end(), rng);
    const PairIdx f = pair_unrank(6, static_cast<int>(rng() % pair_count(6)));
    const PairIdx lhs = act_pair(mul(s, t), f);
    const PairIdx rhs = act_pair(s, act_pair(t, f));
    CHECK((lhs.i == rhs.i && lhs.j == rhs.j));
  }
  // identity action
  const PairIdx g = act_pair(Perm::identity(9), PairIdx{3, 7});
  CHECK((g.i == 3 && g.j == 7));
}

TEST_CASE("commutator sign table: cyclic +, reversed -, disjoint none") {
  auto sgn = [](PairIdx e, PairIdx f) { return comm_sign(e, f); };
  // [A_{1,2}, A_{2,3}] = +a_{1,2,3}
  auto s1 = sgn(PairIdx{1, 2}, PairIdx{2, 3});
  REQUIRE(s1.has_value());
  CHECK(s1->first.i == 1);
  CHECK(s1->first.j == 2);
  CHECK(s1->first.k == 3);
  CHECK(s1->second == 1);
  // cyclic: [A_{1,3}, A_{1,2}] = +a_{1,2,3}
  auto s2 = sgn(PairIdx{1, 3}, PairIdx{1, 2});
  REQUIRE(s2.has_value());
  CHECK(s2->second == 1);
  CHECK(s2->first.k == 3);
  // reversed: [A_{2,3}, A_{1,2}] = -a_{1,2,3}
  auto s3 = sgn(PairIdx{2, 3}, PairIdx{1, 2});
  REQUIRE(s3.has_value());
  CHECK(s3->second == -1);
  // disjoint pairs commute
  CHECK_FALSE(sgn(PairIdx{1, 2}, PairIdx{3, 4}).has_value());
  // equal pairs commute
  CHECK_FALSE(sgn(PairIdx{1, 2}, PairIdx{1, 2}).has_value());
  // antisymmetry over all sharing pairs in B_5
  for (int r = 0; r < pair_count(5); ++r)
    for (int s = 0; s < pair_count(5); ++s) {
      const auto ef = sgn(pair_unrank(5, r), pair_unrank(5, s));
      const auto fe = sgn(pair_unrank(5, s), pair_unrank(5, r));
      CHECK(ef.has_value() == fe.has_value());
      if (ef) {
        CHECK(triple_rank(5, ef->first) == triple_rank(5, fe->first));
        CHECK(ef->second == -fe->second);
      }
    }
}

TEST_CASE("triple action: orientation flips recorded in the sign") {
  const SignedTriple base{TripleIdx{1, 2, 3}, 1};
  // Transpositions that reverse the cyclic order of (1,2,3) flip the sign.
  const auto t13 = act_triple(parse_perm("(1,3)", 4), base);
  CHECK(triple_rank(4, t13.t) == triple_rank(4, TripleIdx{1, 2, 3}));
  CHECK(t13.sign == -1);
  const auto t12 = act_triple(parse_perm("(1,2)", 4), base);
  CHECK(triple_rank(4, t12.t) == triple_rank(4, TripleIdx{1, 2, 3}));
  CHECK(t12.sign == -1);
  // A 3-cycle preserves it.
  const auto rot = act_triple(parse_perm("(1,2,3)", 4), base);
  CHECK(triple_rank(4, rot.t) == triple_rank(4, TripleIdx{1, 2, 3}));
  CHECK(rot.sign == 1);
  // Left action with signs, randomised.
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    Perm s = Perm::identity(6), t = Perm::identity(6);
    std::shuffle(s.img.begin(), s.img.end(), rng);
    std::shuffle(t.img.begin(), t.img.end(), rng);
    const SignedTriple x{triple_unrank(6, static_cast<int>(rng() % triple_count(6))),
                         rng() % 2 ? 1 : -1};
    const SignedTriple lhs = act_triple(mul(s, t), x);
    const SignedTriple rhs = act_triple(s, act_triple(t, x));
    CHECK(triple_rank(6, lhs.t) == triple_rank(6, rhs.t));
    CHECK(lhs.sign == rhs.sign);
  }
}

TEST_CASE("orbit helpers") {
  // gens = {identity} leaves the seed alone
  const auto o1 = pair_orbit({Perm::identity(4)}, PairIdx{1, 2});
  CHECK(o1.size() == 1);
  // the 9-element orbit of A_{1,2} under the order-27 metacyclic group
  const Perm alpha = parse_perm("(1,2,3)(4,5,6)", 9);
  const Perm beta = parse_perm("(1,4,7,3,5,8,2,6,9)", 9);
  const auto o2 = pair_orbit({alpha, beta}, PairIdx{1, 2});
  CHECK(o2.size() == 9);
  const auto o3 = pair_orbit({alpha, beta}, PairIdx{5, 9});
  CHECK(o3.size() == 27);
}

TEST_CASE("perm_pow and order agree") {
  const Perm beta = parse_perm("(1,4,7,3,5,8,2,6,9)", 9);
  CHECK(perm_pow(beta, 9).is_identity());
  CHECK_FALSE(perm_pow(beta, 3).is_identity());
  CHECK(perm_pow(beta, -1) == inverse(beta));
  CHECK(perm_pow(beta, 4) == mul(mul(mul(beta, beta), beta), beta));
  CHECK(cycle_profile(beta).order == 9);
}
