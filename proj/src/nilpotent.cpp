#include "braidq/nilpotent.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace braidq {

PureNF nf_identity(int n, int k) {
  if (k != 2 && k != 3) throw error("nilpotency class must be 2 or 3");
  PureNF p;
  p.n = n;
  p.k = k;
  p.a = IVec::Zero(pair_count(n));
  p.c = IVec::Zero(k == 3 ? triple_count(n) : 0);
  return p;
}

IVec comm_pairs(int n, PairIdx e, PairIdx f) {
  IVec out = IVec::Zero(triple_count(n));
  if (auto cs = comm_sign(e, f)) out[triple_rank(n, cs->first)] += cs->second;
  return out;
}

namespace {

void check_compatible(const PureNF& x, const PureNF& y, const char* what) {
  if (x.n != y.n || x.k != y.k)
    throw error(std::string(what) + ": mixed strand counts or classes");
}

// Central correction Q(a1, a2) accumulated into c.
void add_bilinear(IVec& c, int n, const IVec& a1, const IVec& a2) {
  int P = pair_count(n);
  for (int re = 0; re < P; ++re) {
    if (a1[re] == 0) continue;
    PairIdx e = pair_unrank(n, re);
    for (int rf = 0; rf < re; ++rf) {
      if (a2[rf] == 0) continue;
      if (auto cs = comm_sign(e, pair_unrank(n, rf)))
        c[triple_rank(n, cs->first)] += a1[re] * a2[rf] * cs->second;
    }
  }
}

}  // namespace

PureNF collect(const AWord& w, int k) {
  PureNF acc = nf_identity(w.n, k);
  for (const auto& l : w.letters) {
    int rf = pair_rank(w.n, l.e);
    if (k == 3) {
      // Merging a single letter A_f^y: Q(acc.a, y e_f).
      PairIdx f = l.e;
      for (int re = rf + 1; re < pair_count(w.n); ++re) {
        if (acc.a[re] == 0) continue;
        if (auto cs = comm_sign(pair_unrank(w.n, re), f))
          acc.c[triple_rank(w.n, cs->first)] += acc.a[re] * l.exp * cs->second;
      }
    }
    acc.a[rf] += l.exp;
  }
  return acc;
}

PureNF nf_mul(const PureNF& x, const PureNF& y) {
  check_compatible(x, y, "nf_mul");
  PureNF out = x;
  out.a += y.a;
  if (x.k == 3) {
    out.c += y.c;
    add_bilinear(out.c, x.n, x.a, y.a);
  }
  return out;
}

PureNF nf_inv(const PureNF& x) {
  PureNF out = x;
  out.a = -x.a;
  if (x.k == 3) {
    out.c = -x.c;
    add_bilinear(out.c, x.n, x.a, x.a);
  }
  return out;
}

PureNF nf_pow(const PureNF& x, Int e) {
  PureNF base = e < 0 ? nf_inv(x) : x;
  Int m = e < 0 ? -e : e;
  PureNF acc = nf_identity(x.n, x.k);
  while (m > 0) {
    if (m & 1) acc = nf_mul(acc, base);
    base = nf_mul(base, base);
    m >>= 1;
  }
  return acc;
}

namespace {

// sigma_i A_e sigma_i^{-1} at class 3: the abelian part is the tau_i-moved
// pair; the central correction delta is invisible at class 2 but not at 3.
// Derived once per (n, i) by rewriting the conjugated band generator, with
// the moved pair re-verified against the class-2 action.
struct LetterConj {
  std::vector<int> moved;   // pair rank -> pair rank under tau_i
  std::vector<IVec> delta;  // pair rank -> central correction
};

const LetterConj& letter_conj(int n, int i) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, LetterConj> memo;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = memo.find({n, i});
  if (it != memo.end()) return it->second;
  Perm tau = Perm::identity(n);
  std::swap(tau.img[i - 1], tau.img[i]);
  LetterConj t;
  for (int r = 0; r < pair_count(n); ++r) {
    const PairIdx e = pair_unrank(n, r);
    BraidWord w{n, {{i, 1}}};
    w = concat(concat(w, a_letter_expand(n, e, 1)), BraidWord{n, {{i, -1}}});
    const PureNF nf = nf_of_pure_word(w, 3);
    const int target = pair_rank(n, act_pair(tau, e));
    if (nf.a[target] != 1 || nf.a.cwiseAbs().sum() != 1)
      throw error("act_nf: letter conjugation table failed its self-check");
    t.moved.push_back(target);
    t.delta.push_back(nf.c);
  }
  return memo.emplace(std::make_pair(n, i), std::move(t)).first->second;
}

// x -> sigma_i x sigma_i^{-1} on class-3 normal forms: conjugate each
// canonical letter (moved pair + central delta), re-collect the moved word
// into canonical order, and carry the central part by the signed triple
// action.
PureNF letter_act(int n, int i, const PureNF& p) {
  const LetterConj& lc = letter_conj(n, i);
  Perm tau = Perm::identity(n);
  std::swap(tau.img[i - 1], tau.img[i]);
  AWord moved{n, {}};
  IVec extra = IVec::Zero(triple_count(n));
  for (int r = 0; r < pair_count(n); ++r)
    if (p.a[r] != 0) {
      moved.letters.push_back({pair_unrank(n, lc.moved[r]), p.a[r]});
      extra += p.a[r] * lc.delta[r];
    }
  PureNF out = collect(moved, 3);
  out.c += extra;
  for (int r = 0; r < triple_count(n); ++r)
    if (p.c[r] != 0) {
      SignedTriple st = act_triple(tau, {triple_unrank(n, r), 1});
      out.c[triple_rank(n, st.t)] += st.sign * p.c[r];
    }
  return out;
}

}  // namespace

PureNF act_nf(const Perm& t, const PureNF& p) {
  PureNF out = nf_identity(p.n, p.k);
  if (p.k == 2) {
    for (int r = 0; r < pair_count(p.n); ++r)
      if (p.a[r] != 0)
        out.a[pair_rank(p.n, act_pair(t, pair_unrank(p.n, r)))] += p.a[r];
    return out;
  }
  // Exact conjugation by the section word s(t), one letter at a time
  // (innermost = last letter first).  At class 3 this is NOT determined by
  // the permutation alone: conjugating a canonical word moves the pairs but
  // also picks up central corrections, both per letter (delta) and from
  // re-sorting the moved word into canonical order.
  const BraidWord s = section_word(t);
  PureNF cur = p;
  for (auto it = s.letters.rbegin(); it != s.letters.rend(); ++it)
    cur = letter_act(p.n, it->index, cur);
  return cur;
}

// ----- combing -------------------------------------------------------------

namespace {

// Remove every crossing involving the strand labelled n; positions renumber
// around the deleted strand.  Requires a pure word.
BraidWord delete_last_strand(const BraidWord& w) {
  int n = w.n;
  std::vector<int> at(n + 1);
  std::iota(at.begin(), at.end(), 0);
  BraidWord out{n - 1, {}};
  for (const auto& l : w.letters) {
    int a = at[l.index], b = at[l.index + 1];
    if (a != n && b != n) {
      int pos_n = 0;
      for (int p = 1; p <= n; ++p)
        if (at[p] == n) {
          pos_n = p;
          break;
        }
      out.letters.push_back({pos_n < l.index ? l.index - 1 : l.index, l.exp});
    }
    std::swap(at[l.index], at[l.index + 1]);
  }
  return out;
}

struct UnitLetter {
  int gen;
  int sign;
};

std::vector<UnitLetter> to_units(const FreeWord& w) {
  std::vector<UnitLetter> out;
  for (const auto& l : w.letters) {
    int reps = l.exp < 0 ? -l.exp : l.exp;
    int sgn = l.exp < 0 ? -1 : 1;
    for (int r = 0; r < reps; ++r) out.push_back({l.gen, sgn});
  }
  return out;
}

// Split a reduced word conjugate to x_base into (conjugator, checks), i.e.
// w = c x_base c^{-1}; throws if the cyclically reduced core is not x_base.
FreeWord conjugator_of(const FreeWord& w, int base) {
  std::vector<UnitLetter> u = to_units(w);
  std::size_t lo = 0, hi = u.size();
  FreeWord c;
  while (hi - lo > 1 && u[lo].gen == u[hi - 1].gen && u[lo].sign == -u[hi - 1].sign) {
    c = free_mul(c, free_gen(u[lo].gen, u[lo].sign));
    ++lo;
    --hi;
  }
  if (hi - lo != 1 || u[lo].gen != base || u[lo].sign != 1)
    throw error("combing: fibre image is not a conjugate of the base generator");
  return c;
}

// Substitute expr[gen] for each letter of g (expr entries are words over a
// second alphabet), reducing as it goes.
FreeWord substitute(const FreeWord& g, const std::vector<FreeWord>& expr) {
  FreeWord out;
  for (const UnitLetter& u : to_units(g))
    out = free_mul(out, u.sign == 1 ? expr[u.gen] : free_inv(expr[u.gen]));
  return out;
}

// The map v -> (conjugator c_v of psi_v(x_n), then delete x_n) is an
// anti-morphism from the fibre subgroup <A_{1,n},...,A_{n-1,n}> to F_{n-1}:
// c_{vw} = psi_v(c_w) c_v, and deleting strand n trivialises psi_v for v in
// the fibre.  It carries A_{i,n} to the triangular free basis
//   y_i = x_{n-1}^{-1} ... x_{i+1}^{-1} x_i x_{i+1} ... x_{n-1},
// so rewriting the image in that basis reads the A-word back.  rebasing(n)
// holds x_i expressed in y-letters (x_{n-1} = y_{n-1} and
// x_i = (x_{i+1} ... x_{n-1}) y_i (...)^{-1}), self-checked on every
// generator the first time a strand count is seen.
const std::vector<FreeWord>& rebasing(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<FreeWord>> memo;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  std::vector<FreeWord> expr(n);  // index i in [1, n-1]
  for (int i = n - 1; i >= 1; --i) {
    FreeWord tail;
    for (int j = i + 1; j <= n - 1; ++j) tail = free_mul(tail, expr[j]);
    expr[i] = free_mul(free_mul(tail, free_gen(i)), free_inv(tail));
  }
  for (int i = 1; i <= n - 1; ++i) {
    BraidWord gen = a_letter_expand(n, PairIdx{i, n}, 1);
    FreeWord img = artin_apply(gen, free_gen(n));
    FreeWord g = free_delete_gen(conjugator_of(img, n), n);
    const FreeWord rewritten = substitute(g, expr);
    if (!(rewritten == free_gen(i)))
      throw error("combing: fibre basis self-check failed");
  }
  return memo.emplace(n, std::move(expr)).first->second;
}

// Express an element of the fibre subgroup <A_{1,n},...,A_{n-1,n}> given as a
// braid word in those free generators, via the anti-morphism above: rewrite
// the deleted conjugator in the y-basis and read the letters in reverse.
void read_fibre(const BraidWord& fib, AWord& out) {
  int n = fib.n;
  FreeWord img = artin_apply(fib, free_gen(n));
  FreeWord g = free_delete_gen(conjugator_of(img, n), n);
  FreeWord y = substitute(g, rebasing(n));
  std::vector<UnitLetter> units = to_units(y);
  for (auto it = units.rbegin(); it != units.rend(); ++it)
    out.letters.push_back({PairIdx{it->gen, n}, it->sign});
}

void comb_recursive(const BraidWord& w, AWord& out) {
  if (w.n <= 1 || w.letters.empty()) return;
  BraidWord rest = delete_last_strand(w);
  BraidWord embedded{w.n, rest.letters};
  BraidWord fib = concat(w, inverse_word(embedded));
  read_fibre(fib, out);
  comb_recursive(rest, out);
}

}  // namespace

AWord pure_to_aword(const BraidWord& w) {
  if (!perm_of(w).is_identity())
    throw error("NonPureWord: combing requires a pure word");
  AWord out{w.n, {}};
  comb_recursive(w, out);
  return out;
}

PureNF nf_of_pure_word(const BraidWord& w, int k) {
  if (k == 2) {
    PureNF p = nf_identity(w.n, 2);
    p.a = crossing_numbers(w);
    return p;
  }
  if (k != 3) throw error("nilpotency class must be 2 or 3");
  PureNF p = collect(pure_to_aword(w), 3);
  if (p.a != crossing_numbers(w))
    throw error("combing: abelianised image disagrees with crossing numbers");
  return p;
}

}  // namespace braidq
