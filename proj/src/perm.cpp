#include "braidq/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace braidq {

namespace {

void check_point(int x, int n, const char* what) {
  if (x < 1 || x > n)
    throw error(std::string(what) + ": point " + std::to_string(x) +
                " out of range 1.." + std::to_string(n));
}

}  // namespace

bool Perm::is_identity() const {
  for (int x = 1; x <= n(); ++x)
    if (img[x - 1] != x) return false;
  return true;
}

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.n() != q.n()) throw error("compose: degree mismatch");
  std::vector<int> v(p.n());
  for (int x = 1; x <= p.n(); ++x) v[x - 1] = p(q(x));
  return Perm(std::move(v));
}

Perm mul(const Perm& p, const Perm& q) { return compose(q, p); }

Perm inverse(const Perm& p) {
  std::vector<int> v(p.n());
  for (int x = 1; x <= p.n(); ++x) v[p(x) - 1] = x;
  return Perm(std::move(v));
}

Perm perm_pow(const Perm& p, Int e) {
  Perm base = e < 0 ? inverse(p) : p;
  Int m = e < 0 ? -e : e;
  Perm acc = Perm::identity(p.n());
  while (m > 0) {
    if (m & 1) acc = mul(acc, base);
    base = mul(base, base);
    m >>= 1;
  }
  return acc;
}

CycleProfile cycle_profile(const Perm& p) {
  CycleProfile prof;
  std::vector<bool> seen(p.n() + 1, false);
  for (int x = 1; x <= p.n(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (int y = x; !seen[y]; y = p(y)) {
      seen[y] = true;
      ++len;
    }
    if (len == 1) {
      ++prof.fixed_points;
    } else {
      prof.lengths.push_back(len);
      prof.order = std::lcm(prof.order, static_cast<Int>(len));
    }
  }
  std::sort(prof.lengths.begin(), prof.lengths.end());
  return prof;
}

PairIdx make_pair_idx(int a, int b) {
  if (a == b) throw error("pair index with equal entries");
  if (a > b) std::swap(a, b);
  return PairIdx{a, b};
}

TripleIdx make_triple_idx(int a, int b, int c) {
  if (a == b || a == c || b == c) throw error("triple index with equal entries");
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return TripleIdx{a, b, c};
}

int pair_count(int n) { return n * (n - 1) / 2; }
int triple_count(int n) { return n * (n - 1) * (n - 2) / 6; }

int pair_rank(int n, PairIdx e) {
  check_point(e.i, n, "pair_rank");
  check_point(e.j, n, "pair_rank");
  // pairs (1,2),(1,3),...,(1,n),(2,3),...
  return (e.i - 1) * n - e.i * (e.i - 1) / 2 + (e.j - e.i - 1);
}

PairIdx pair_unrank(int n, int r) {
  for (int i = 1; i < n; ++i) {
    int block = n - i;
    if (r < block) return PairIdx{i, i + 1 + r};
    r -= block;
  }
  throw error("pair_unrank: rank out of range");
}

int triple_rank(int n, TripleIdx t) {
  check_point(t.i, n, "triple_rank");
  check_point(t.k, n, "triple_rank");
  auto c2 = [](int m) { return m * (m - 1) / 2; };
  auto c3 = [](int m) { return m * (m - 1) * (m - 2) / 6; };
  // triples with first entry < t.i, then second entry < t.j, then third.
  return c3(n) - c3(n - t.i + 1) + c2(n - t.i) - c2(n - t.j + 1) +
         (t.k - t.j - 1);
}

TripleIdx triple_unrank(int n, int r) {
  for (int i = 1; i <= n - 2; ++i)
    for (int j = i + 1; j <= n - 1; ++j) {
      int block = n - j;
      if (r < block) return TripleIdx{i, j, j + 1 + r};
      r -= block;
    }
  throw error("triple_unrank: rank out of range");
}

PairIdx act_pair(const Perm& t, PairIdx e) {
  Perm ti = inverse(t);
  return make_pair_idx(ti(e.i), ti(e.j));
}

std::optional<std::pair<TripleIdx, int>> comm_sign(PairIdx e, PairIdx f) {
  if (e == f) return std::nullopt;
  int shared = 0;
  if (e.i == f.i || e.i == f.j) shared = e.i;
  if (e.j == f.i || e.j == f.j) {
    if (shared != 0) return std::nullopt;  // equal pairs already excluded
    shared = e.j;
  }
  if (shared == 0) return std::nullopt;  // disjoint supports commute
  int other_e = e.i == shared ? e.j : e.i;
  int other_f = f.i == shared ? f.j : f.i;
  TripleIdx t = make_triple_idx(shared, other_e, other_f);
  // Classify each pair as ij, jk or ik of the sorted triple; the cyclic
  // successor ij -> jk -> ik -> ij carries sign +1, the predecessor -1.
  auto slot = [&t](PairIdx p) {
    if (p.i == t.i && p.j == t.j) return 0;  // ij
    if (p.i == t.j && p.j == t.k) return 1;  // jk
    return 2;                                // ik
  };
  int a = slot(e), b = slot(f);
  int sign = (b == (a + 1) % 3) ? 1 : -1;
  return std::make_pair(t, sign);
}

SignedTriple act_triple(const Perm& t, const SignedTriple& a) {
  Perm ti = inverse(t);
  PairIdx e = make_pair_idx(ti(a.t.i), ti(a.t.j));
  PairIdx f = make_pair_idx(ti(a.t.j), ti(a.t.k));
  auto cs = comm_sign(e, f);
  if (!cs) throw error("act_triple: degenerate image");  // unreachable
  return SignedTriple{cs->first, a.sign * cs->second};
}

std::vector<PairIdx> pair_orbit(const std::vector<Perm>& gens, PairIdx seed) {
  std::vector<PairIdx> out{seed};
  std::set<PairIdx> seen{seed};
  for (std::size_t head = 0; head < out.size(); ++head) {
    PairIdx cur = out[head];
    for (const Perm& g : gens) {
      PairIdx nxt = act_pair(g, cur);
      if (seen.insert(nxt).second) out.push_back(nxt);
    }
  }
  return out;
}

std::vector<SignedTriple> triple_orbit(const std::vector<Perm>& gens,
                                       SignedTriple seed) {
  auto key = [](const SignedTriple& s) {
    return std::make_pair(s.t, s.sign);
  };
  std::vector<SignedTriple> out{seed};
  std::set<std::pair<TripleIdx, int>> seen{key(seed)};
  for (std::size_t head = 0; head < out.size(); ++head) {
    SignedTriple cur = out[head];
    for (const Perm& g : gens) {
      SignedTriple nxt = act_triple(g, cur);
      if (seen.insert(key(nxt)).second) out.push_back(nxt);
    }
  }
  return out;
}

Perm parse_perm(std::string_view s, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<bool> used(n + 1, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  };
  skip_ws();
  if (pos == s.size()) throw error("parse_perm: empty input");
  bool any_cycle = false;
  while (pos < s.size()) {
    skip_ws();
    if (pos == s.size()) break;
    if (s[pos] != '(') throw error("parse_perm: expected '('");
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < s.size() && s[pos] != ')') {
      int val = 0;
      bool got = false;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        val = val * 10 + (s[pos] - '0');
        got = true;
        ++pos;
      }
      if (!got) throw error("parse_perm: expected a point");
      check_point(val, n, "parse_perm");
      cyc.push_back(val);
      skip_ws();
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos == s.size()) throw error("parse_perm: unterminated cycle");
    ++pos;  // ')'
    any_cycle = true;
    for (int v : cyc) {
      if (used[v]) throw error("parse_perm: point repeated: " + std::to_string(v));
      used[v] = true;
    }
    for (std::size_t idx = 0; idx < cyc.size(); ++idx)
      img[cyc[idx] - 1] = cyc[(idx + 1) % cyc.size()];
    skip_ws();
  }
  if (!any_cycle) throw error("parse_perm: no cycles found");
  return Perm(std::move(img));
}

std::string to_cycles(const Perm& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.n() + 1, false);
  bool any = false;
  for (int x = 1; x <= p.n(); ++x) {
    if (seen[x] || p(x) == x) {
      seen[x] = true;
      continue;
    }
    any = true;
    os << '(' << x;
    seen[x] = true;
    for (int y = p(x); y != x; y = p(y)) {
      os << ',' << y;
      seen[y] = true;
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace braidq
