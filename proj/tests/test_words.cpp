#include <doctest.h>

#include <algorithm>
#include <random>

#include "braidq/words.hpp"

using namespace braidq;

namespace {

BraidWord rand_word(std::mt19937& rng, int n, int len) {
  BraidWord w;
  w.n = n;
  for (int i = 0; i < len; ++i)
    w.letters.push_back(
        {1 + static_cast<int>(rng() % (n - 1)), rng() % 2 ? 1 : -1});
  return w;
}

}  // namespace

TEST_CASE("parse, print, concat, inverse") {
  const BraidWord w = parse_word("s1 s2^-1 s1", 3);
  REQUIRE(w.letters.size() == 3);
  CHECK(w.letters[1].index == 2);
  CHECK(w.letters[1].exp == -1);
  CHECK(parse_word(print_word(w), 3) == w);
  CHECK(print_word(parse_word("", 5)).empty());
  CHECK_THROWS(parse_word("s0", 3));
  CHECK_THROWS(parse_word("s3", 3));   // only sigma_1, sigma_2 exist in B_3
  CHECK_THROWS(parse_word("x1", 3));
  CHECK_THROWS(parse_word("s1^2", 3));  // exponents limited to +-1 per token
  const BraidWord uv = concat(parse_word("s1", 3), parse_word("s2", 3));
  CHECK(uv == parse_word("s1 s2", 3));
  CHECK(inverse_word(uv) == parse_word("s2^-1 s1^-1", 3));
  CHECK(word_pow(parse_word("s1", 3), 3) == parse_word("s1 s1 s1", 3));
  CHECK(word_pow(uv, -1) == inverse_word(uv));
  CHECK(word_pow(uv, 0).letters.empty());
}

TEST_CASE("perm_of: generators, inverses, homomorphism") {
  CHECK(perm_of(parse_word("s1", 2)) == parse_perm("(1,2)", 2));
  CHECK(perm_of(parse_word("s1 s1^-1", 2)).is_identity());
  // homomorphism for word-order products
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const BraidWord u = rand_word(rng, 5, 8), v = rand_word(rng, 5, 8);
    CHECK(perm_of(concat(u, v)) == mul(perm_of(u), perm_of(v)));
  }
  // a longer mixed word round-trips through the printer
  const BraidWord wp = parse_word("s3 s2 s4 s6 s5 s4 s3 s7 s6", 9);
  CHECK(perm_of(parse_word(print_word(wp), 9)) == perm_of(wp));
}

TEST_CASE("crossing numbers: half the signed label crossings") {
  // full twist of B_3: every pair crosses twice positively
  const BraidWord delta2 = word_pow(parse_word("s1 s2", 3), 3);
  REQUIRE(perm_of(delta2).is_identity());
  const IVec cn = crossing_numbers(delta2);
  REQUIRE(cn.size() == 3);
  CHECK(cn[0] == 1);
  CHECK(cn[1] == 1);
  CHECK(cn[2] == 1);
  // sigma_1^2 touches only the first pair
  const IVec cn2 = crossing_numbers(parse_word("s1 s1", 9));
  CHECK(cn2[pair_rank(9, PairIdx{1, 2})] == 1);
  CHECK(cn2.cwiseAbs().sum() == 1);
  // non-pure words are rejected
  CHECK_THROWS(crossing_numbers(parse_word("s1", 3)));
}

TEST_CASE("A-letter expansion") {
  // A_{1,2} = sigma_1^2
  CHECK(a_letter_expand(3, PairIdx{1, 2}, 1) == parse_word("s1 s1", 3));
  // A_{1,3} = sigma_2 sigma_1^2 sigma_2^-1, crossing numbers a_{13} = 1 only
  const BraidWord a13 = a_letter_expand(3, PairIdx{1, 3}, 1);
  CHECK(a13 == parse_word("s2 s1 s1 s2^-1", 3));
  REQUIRE(perm_of(a13).is_identity());
  const IVec cn = crossing_numbers(a13);
  CHECK(cn[pair_rank(3, PairIdx{1, 3})] == 1);
  CHECK(cn.cwiseAbs().sum() == 1);
  // inverse letter
  const IVec cni = crossing_numbers(a_letter_expand(3, PairIdx{1, 3}, -1));
  CHECK(cni[pair_rank(3, PairIdx{1, 3})] == -1);
  // parser accepts A-tokens and expands them on the spot
  CHECK(parse_word("A1,3", 3) == a13);
  CHECK(parse_word("A1,3^-1", 3) == a_letter_expand(3, PairIdx{1, 3}, -1));
  // expansion of every generator is pure with a single unit crossing number
  for (int r = 0; r < pair_count(5); ++r) {
    const PairIdx e = pair_unrank(5, r);
    const IVec v = crossing_numbers(a_letter_expand(5, e, 1));
    CHECK(v[r] == 1);
    CHECK(v.cwiseAbs().sum() == 1);
  }
}

TEST_CASE("Artin action: braid relations hold, non-relations do not") {
  // empty word is the identity automorphism
  const BraidWord e{3, {}};
  for (int i = 1; i <= 3; ++i) CHECK(artin_apply(e, free_gen(i)) == free_gen(i));
  // sigma_1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2
  CHECK(artin_equal(parse_word("s1 s2 s1", 3), parse_word("s2 s1 s2", 3)));
  // far commutation
  CHECK(artin_equal(parse_word("s1 s3", 4), parse_word("s3 s1", 4)));
  // free cancellation
  CHECK(artin_equal(parse_word("s1 s1^-1", 3), parse_word("", 3)));
  // sigma_1 sigma_2 != sigma_2 sigma_1 in B_3
  CHECK_FALSE(artin_equal(parse_word("s1 s2", 3), parse_word("s2 s1", 3)));
  // A_{1,2} A_{1,2}^-1 has the identity Artin automorphism
  CHECK(artin_equal(concat(a_letter_expand(3, PairIdx{1, 2}, 1),
                           a_letter_expand(3, PairIdx{1, 2}, -1)),
                    parse_word("", 3)));
  // w w^-1 is trivial for random words
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const BraidWord u = rand_word(rng, 4, 10);
    CHECK(artin_equal(concat(u, inverse_word(u)), BraidWord{4, {}}));
  }
}

TEST_CASE("free group scaffolding") {
  const FreeWord x1 = free_gen(1), x2 = free_gen(2);
  CHECK(free_mul(x1, free_inv(x1)).letters.empty());
  const FreeWord w = free_mul(free_mul(x1, x2), free_inv(x1));
  CHECK(free_delete_gen(w, 2) == FreeWord{});
  CHECK(free_delete_gen(w, 1) == x2);
  // runs collapse
  const FreeWord sq = free_mul(x1, x1);
  REQUIRE(sq.letters.size() == 1);
  CHECK(sq.letters[0].exp == 2);
}

TEST_CASE("section words: insertion-sort positive lifts") {
  CHECK(section_word(Perm::identity(4)).letters.empty());
  // (1,3) in S_3 has three inversions
  const Perm p13 = parse_perm("(1,3)", 3);
  const BraidWord s = section_word(p13);
  CHECK(s.letters.size() == 3);
  for (const auto& l : s.letters) CHECK(l.exp == 1);
  CHECK(perm_of(s) == p13);
  // round-trip over all of S_4, length = inversion count
  std::vector<int> img{1, 2, 3, 4};
  do {
    Perm p{img};
    const BraidWord w = section_word(p);
    CHECK(perm_of(w) == p);
    int inv = 0;
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        if (p(i) > p(j)) ++inv;
    CHECK(static_cast<int>(w.letters.size()) == inv);
    for (const auto& l : w.letters) CHECK(l.exp == 1);
  } while (std::next_permutation(img.begin(), img.end()));
}
