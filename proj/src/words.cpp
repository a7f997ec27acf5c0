#include "braidq/words.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace braidq {

namespace {

void check_letter(const BraidLetter& l, int n) {
  if (l.index < 1 || l.index >= n)
    throw error("braid letter index " + std::to_string(l.index) +
                " out of range for n=" + std::to_string(n));
  if (l.exp != 1 && l.exp != -1) throw error("braid letter exponent must be +/-1");
}

}  // namespace

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (u.n != v.n) throw error("concat: strand count mismatch");
  BraidWord out = u;
  out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
  return out;
}

BraidWord inverse_word(const BraidWord& w) {
  BraidWord out{w.n, {}};
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->index, -it->exp});
  return out;
}

BraidWord word_pow(const BraidWord& w, Int e) {
  BraidWord base = e < 0 ? inverse_word(w) : w;
  Int m = e < 0 ? -e : e;
  BraidWord out{w.n, {}};
  for (Int r = 0; r < m; ++r) out = concat(out, base);
  return out;
}

BraidWord a_letter_expand(int n, PairIdx e, int exp) {
  if (e.j > n) throw error("band generator out of range");
  if (exp != 1 && exp != -1) throw error("band generator exponent must be +/-1");
  BraidWord out{n, {}};
  for (int s = e.j - 1; s > e.i; --s) out.letters.push_back({s, 1});
  out.letters.push_back({e.i, exp});
  out.letters.push_back({e.i, exp});
  for (int s = e.i + 1; s <= e.j - 1; ++s) out.letters.push_back({s, -1});
  return out;
}

BraidWord a_word_expand(const AWord& w) {
  BraidWord out{w.n, {}};
  for (const auto& l : w.letters)
    out = concat(out, a_letter_expand(w.n, l.e, l.exp));
  return out;
}

Perm perm_of(const BraidWord& w) {
  std::vector<int> img(w.n);
  std::iota(img.begin(), img.end(), 1);
  // img[x-1] = current position of the strand that started at position x.
  std::vector<int> at(w.n + 1);  // at[p] = strand currently at position p
  std::iota(at.begin(), at.end(), 0);
  for (const auto& l : w.letters) {
    check_letter(l, w.n);
    int a = at[l.index], b = at[l.index + 1];
    std::swap(at[l.index], at[l.index + 1]);
    img[a - 1] = l.index + 1;
    img[b - 1] = l.index;
  }
  return Perm(std::move(img));
}

IVec crossing_numbers(const BraidWord& w) {
  std::vector<int> at(w.n + 1);  // at[p] = strand label at position p
  std::iota(at.begin(), at.end(), 0);
  IVec cnt = IVec::Zero(pair_count(w.n));
  for (const auto& l : w.letters) {
    check_letter(l, w.n);
    int a = at[l.index], b = at[l.index + 1];
    cnt[pair_rank(w.n, make_pair_idx(a, b))] += l.exp;
    std::swap(at[l.index], at[l.index + 1]);
  }
  for (int p = 1; p <= w.n; ++p)
    if (at[p] != p) throw error("NonPureWord: crossing_numbers requires a pure word");
  for (Eigen::Index r = 0; r < cnt.size(); ++r) {
    if (cnt[r] % 2 != 0) throw error("odd signed crossing count in a pure word");
    cnt[r] /= 2;
  }
  return cnt;
}

// ----- free words ---------------------------------------------------------

FreeWord free_gen(int i, int exp) {
  FreeWord w;
  if (exp != 0) w.letters.push_back({i, exp});
  return w;
}

namespace {

void push_reduced(std::vector<FreeLetter>& out, FreeLetter l) {
  if (l.exp == 0) return;
  if (!out.empty() && out.back().gen == l.gen) {
    out.back().exp += l.exp;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(l);
}

}  // namespace

FreeWord free_mul(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  for (const auto& l : b.letters) push_reduced(out.letters, l);
  return out;
}

FreeWord free_inv(const FreeWord& a) {
  FreeWord out;
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    out.letters.push_back({it->gen, -it->exp});
  return out;
}

FreeWord free_delete_gen(const FreeWord& a, int i) {
  FreeWord out;
  for (const auto& l : a.letters)
    if (l.gen != i) push_reduced(out.letters, l);
  return out;
}

namespace {

// Apply the single-letter automorphism of sigma_index^exp to v by substitution.
FreeWord artin_letter_apply(int index, int exp, const FreeWord& v) {
  FreeWord out;
  for (const auto& l : v.letters) {
    int reps = l.exp < 0 ? -l.exp : l.exp;
    int sgn = l.exp < 0 ? -1 : 1;
    for (int r = 0; r < reps; ++r) {
      if (exp == 1 && l.gen == index) {
        // x_i -> x_i x_{i+1} x_i^{-1}
        if (sgn == 1) {
          push_reduced(out.letters, {index, 1});
          push_reduced(out.letters, {index + 1, 1});
          push_reduced(out.letters, {index, -1});
        } else {
          push_reduced(out.letters, {index, 1});
          push_reduced(out.letters, {index + 1, -1});
          push_reduced(out.letters, {index, -1});
        }
      } else if (exp == 1 && l.gen == index + 1) {
        push_reduced(out.letters, {index, sgn});
      } else if (exp == -1 && l.gen == index) {
        push_reduced(out.letters, {index + 1, sgn});
      } else if (exp == -1 && l.gen == index + 1) {
        // x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
        if (sgn == 1) {
          push_reduced(out.letters, {index + 1, -1});
          push_reduced(out.letters, {index, 1});
          push_reduced(out.letters, {index + 1, 1});
        } else {
          push_reduced(out.letters, {index + 1, -1});
          push_reduced(out.letters, {index, -1});
          push_reduced(out.letters, {index + 1, 1});
        }
      } else {
        push_reduced(out.letters, {l.gen, sgn});
      }
    }
  }
  return out;
}

}  // namespace

FreeWord artin_apply(const BraidWord& w, const FreeWord& v) {
  // psi_{uv} = psi_u . psi_v, so evaluate letters right to left.
  FreeWord cur = v;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    check_letter(*it, w.n);
    cur = artin_letter_apply(it->index, it->exp, cur);
  }
  return cur;
}

std::vector<FreeWord> artin_images(const BraidWord& w) {
  std::vector<FreeWord> out;
  out.reserve(w.n);
  for (int i = 1; i <= w.n; ++i) out.push_back(artin_apply(w, free_gen(i)));
  return out;
}

bool artin_equal(const BraidWord& u, const BraidWord& v) {
  if (u.n != v.n) throw error("artin_equal: strand count mismatch");
  return artin_images(u) == artin_images(v);
}

BraidWord section_word(const Perm& p) {
  static std::mutex memo_mutex;
  static std::map<std::vector<int>, BraidWord> memo;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(p.img);
    if (it != memo.end()) return it->second;
  }
  // Insertion sort of the position sequence: repeatedly swap adjacent
  // positions holding out-of-order strands.  Each swap at positions (s, s+1)
  // is the letter sigma_s; perm_of of the collected word returns p.
  int n = p.n();
  std::vector<int> want(n + 1);  // want[pos] = strand that must end at pos
  for (int x = 1; x <= n; ++x) want[p(x)] = x;
  std::vector<int> at(n + 1);
  std::iota(at.begin(), at.end(), 0);
  BraidWord out{n, {}};
  for (int target = 1; target <= n; ++target) {
    int pos = target;
    while (at[pos] != want[target]) ++pos;
    for (; pos > target; --pos) {
      out.letters.push_back({pos - 1, 1});
      std::swap(at[pos - 1], at[pos]);
    }
  }
  if (!(perm_of(out) == p)) throw error("section_word: internal round-trip failed");
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(p.img, out);
  }
  return out;
}

BraidWord parse_word(std::string_view s, int n) {
  BraidWord out{n, {}};
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  };
  auto read_int = [&](const char* what) {
    int val = 0;
    bool got = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      val = val * 10 + (s[pos] - '0');
      got = true;
      ++pos;
    }
    if (!got) throw error(std::string("parse_word: expected ") + what);
    return val;
  };
  auto read_exp = [&]() {
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      if (pos + 1 < s.size() && s[pos] == '-' && s[pos + 1] == '1') {
        pos += 2;
        return -1;
      }
      if (pos < s.size() && s[pos] == '1') {
        ++pos;
        return 1;
      }
      throw error("parse_word: exponent must be ^-1 or ^1");
    }
    return 1;
  };
  while (true) {
    skip_ws();
    if (pos >= s.size()) break;
    char c = s[pos];
    if (c == 's' || c == 'S') {
      ++pos;
      int idx = read_int("generator index");
      int e = read_exp();
      BraidLetter l{idx, e};
      check_letter(l, n);
      out.letters.push_back(l);
    } else if (c == 'A' || c == 'a') {
      ++pos;
      int i = read_int("band generator first index");
      skip_ws();
      if (pos >= s.size() || s[pos] != ',')
        throw error("parse_word: expected ',' in A<i>,<j>");
      ++pos;
      skip_ws();
      int j = read_int("band generator second index");
      int e = read_exp();
      if (i >= j) throw error("parse_word: band generator requires i < j");
      if (j > n) throw error("parse_word: band generator out of range");
      out = concat(out, a_letter_expand(n, PairIdx{i, j}, e));
    } else {
      throw error(std::string("parse_word: unexpected character '") + c + "'");
    }
  }
  return out;
}

std::string print_word(const BraidWord& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters) {
    if (!first) os << ' ';
    first = false;
    os << 's' << l.index;
    if (l.exp == -1) os << "^-1";
  }
  return os.str();
}

}  // namespace braidq
