#ifndef BRAIDQ_WORDS_HPP
#define BRAIDQ_WORDS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "braidq/perm.hpp"

namespace braidq {

// One letter sigma_index^exp with exp in {+1,-1}.
struct BraidLetter {
  int index = 0;
  int exp = 1;
  friend bool operator==(const BraidLetter& a, const BraidLetter& b) {
    return a.index == b.index && a.exp == b.exp;
  }
};

// Word in the Artin generators of B_n, letters read left to right.
struct BraidWord {
  int n = 0;
  std::vector<BraidLetter> letters;

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.n == b.n && a.letters == b.letters;
  }
};

BraidWord concat(const BraidWord& u, const BraidWord& v);
BraidWord inverse_word(const BraidWord& w);  // reversed letters, flipped signs
BraidWord word_pow(const BraidWord& w, Int e);

// Word in the band generators A_{i,j}, one letter per (pair, +/-1).
struct APairLetter {
  PairIdx e;
  int exp = 1;
};

struct AWord {
  int n = 0;
  std::vector<APairLetter> letters;
};

// A_{i,j} = (sigma_{j-1} ... sigma_{i+1}) sigma_i^2 (sigma_{i+1}^-1 ... sigma_{j-1}^-1).
BraidWord a_letter_expand(int n, PairIdx e, int exp);
BraidWord a_word_expand(const AWord& w);

// Underlying permutation: strand starting at position i ends at perm_of(w)(i).
// Homomorphism for word-order products: perm_of(uv) = mul(perm_of(u), perm_of(v)).
Perm perm_of(const BraidWord& w);

// Pair-indexed vector of half the signed crossing counts between each pair of
// strand labels.  Requires a pure word (perm_of(w) trivial); each raw count is
// necessarily even.
IVec crossing_numbers(const BraidWord& w);

// ----- free-group side (exactness oracle) --------------------------------

struct FreeLetter {
  int gen = 0;  // 1-based generator index
  int exp = 0;  // nonzero; stored as +/-1 runs collapsed
  friend bool operator==(const FreeLetter& a, const FreeLetter& b) {
    return a.gen == b.gen && a.exp == b.exp;
  }
};

// Freely reduced word in x_1..x_n.
struct FreeWord {
  std::vector<FreeLetter> letters;
  friend bool operator==(const FreeWord& a, const FreeWord& b) {
    return a.letters == b.letters;
  }
};

FreeWord free_gen(int i, int exp = 1);
FreeWord free_mul(const FreeWord& a, const FreeWord& b);
FreeWord free_inv(const FreeWord& a);
// Substitute x_i -> 1, freely reduce.
FreeWord free_delete_gen(const FreeWord& a, int i);

// Automorphism action on the free group F_n = <x_1..x_n>:
//   sigma_i:   x_i -> x_i x_{i+1} x_i^{-1},  x_{i+1} -> x_i
//   sigma_i^-1: x_i -> x_{i+1},              x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
// artin_apply(w, v) evaluates the automorphism of w on the word v; the map
// w -> images is injective on braid words, giving an exact equality oracle.
FreeWord artin_apply(const BraidWord& w, const FreeWord& v);
std::vector<FreeWord> artin_images(const BraidWord& w);
bool artin_equal(const BraidWord& u, const BraidWord& v);

// Deterministic positive lift of a permutation: insertion-sort word, length
// equal to the inversion count, memoised process-wide.  perm_of round-trips.
BraidWord section_word(const Perm& p);

// Token syntax: "s<i>", "s<i>^-1", "A<i>,<j>", "A<i>,<j>^-1", whitespace
// separated; A-tokens are expanded on parse.  print_word emits s-tokens.
BraidWord parse_word(std::string_view s, int n);
std::string print_word(const BraidWord& w);

}  // namespace braidq

#endif
