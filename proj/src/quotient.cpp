#include "braidq/quotient.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>
#include <vector>

namespace braidq {

namespace {

using CocycleKey = std::tuple<int, int, std::vector<int>, std::vector<int>>;

std::mutex g_cocycle_mutex;
std::map<CocycleKey, PureNF>& cocycle_memo() {
  static std::map<CocycleKey, PureNF> memo;
  return memo;
}

}  // namespace

QElem q_identity(int n, int k) {
  return QElem{Perm::identity(n), nf_identity(n, k)};
}

namespace {

// f(tau_i, mu) for an adjacent transposition: the section words are reduced,
// and any two reduced words of the same permutation are equal as positive
// braids (they are connected by braid moves alone), so on an ascent
// (l(tau_i mu) = l(mu) + 1) the word s_i s(mu) IS s(tau_i mu) and the cocycle
// vanishes; on a descent s(mu) = s_i s(tau_i mu), leaving s_i^2 = A_{i,i+1}.
PureNF letter_cocycle(int n, int k, int i, const Perm& mu) {
  PureNF f = nf_identity(n, k);
  if (mu(i) > mu(i + 1)) f.a[pair_rank(n, PairIdx{i, i + 1})] = 1;
  return f;
}

Perm adjacent_transposition(int n, int i) {
  Perm t = Perm::identity(n);
  std::swap(t.img[i - 1], t.img[i]);
  return t;
}

}  // namespace

PureNF quotient_cocycle(int n, int k, const Perm& pi, const Perm& rho) {
  CocycleKey key{n, k, pi.img, rho.img};
  {
    std::lock_guard<std::mutex> lock(g_cocycle_mutex);
    auto it = cocycle_memo().find(key);
    if (it != cocycle_memo().end()) return it->second;
  }
  // Peel the reduced section word of pi one letter at a time: writing
  // pi = tau_i h with l(pi) = l(h) + 1, the (nonabelian) cocycle relation
  //   f(gh, l) = f(g,h)^{-1} (g . f(h,l)) f(g, hl)
  // has f(tau_i, h) = 0, so
  //   f(tau_i h, rho) = (tau_i . f(h, rho)) f(tau_i, h rho),
  // and f(tau_i, .) is given in closed form by letter_cocycle.  This agrees
  // with nf_of_pure_word(s(pi) s(rho) s(pi rho)^{-1}) — cross-checked in the
  // test suite — but needs no combing.
  const BraidWord s = section_word(pi);
  PureNF f = nf_identity(n, k);
  Perm mu = rho;  // (peeled suffix of pi) * rho
  for (auto it = s.letters.rbegin(); it != s.letters.rend(); ++it) {
    const int i = it->index;
    const Perm tau = adjacent_transposition(n, i);
    f = nf_mul(act_nf(tau, f), letter_cocycle(n, k, i, mu));
    mu = mul(tau, mu);
  }
  std::lock_guard<std::mutex> lock(g_cocycle_mutex);
  return cocycle_memo().emplace(std::move(key), std::move(f)).first->second;
}

QElem q_of_word(const BraidWord& w, int k) {
  Perm pi = perm_of(w);
  BraidWord pure = concat(w, inverse_word(section_word(pi)));
  return QElem{pi, nf_of_pure_word(pure, k)};
}

QElem q_mul(const QElem& x, const QElem& y) {
  if (x.n() != y.n() || x.k() != y.k()) throw error("q_mul: mixed quotients");
  // p_x s(pi_x) p_y s(pi_y) = p_x (pi_x . p_y) f(pi_x, pi_y) s(pi_x pi_y)
  PureNF p = nf_mul(x.p, nf_mul(act_nf(x.pi, y.p),
                                quotient_cocycle(x.n(), x.k(), x.pi, y.pi)));
  return QElem{mul(x.pi, y.pi), std::move(p)};
}

QElem q_inv(const QElem& x) {
  // (p s(pi))^{-1} = s(pi)^{-1} p^{-1}, and s(pi^{-1}) s(pi) = f(pi^{-1}, pi)
  // gives s(pi)^{-1} = f(pi^{-1}, pi)^{-1} s(pi^{-1}); conjugating p^{-1}
  // through s(pi^{-1}) leaves the pure part
  //   f(pi^{-1}, pi)^{-1} (pi^{-1} . p^{-1}).
  // The factor order matters at k = 3, where the pure group is nonabelian.
  Perm pii = inverse(x.pi);
  PureNF f = quotient_cocycle(x.n(), x.k(), pii, x.pi);
  PureNF p = nf_mul(nf_inv(f), act_nf(pii, nf_inv(x.p)));
  return QElem{std::move(pii), std::move(p)};
}

QElem q_pow(const QElem& x, Int e) {
  QElem base = e < 0 ? q_inv(x) : x;
  Int m = e < 0 ? -e : e;
  QElem acc = q_identity(x.n(), x.k());
  while (m > 0) {
    if (m & 1) acc = q_mul(acc, base);
    base = q_mul(base, base);
    m >>= 1;
  }
  return acc;
}

std::optional<Int> q_order(const QElem& x) {
  Int r = cycle_profile(x.pi).order;
  QElem xr = q_pow(x, r);
  // The kernel of the projection to S_n is torsion-free, so the order is
  // finite exactly when x^r is trivial, and then divides r.
  if (!(xr == q_identity(x.n(), x.k()))) return std::nullopt;
  for (Int d = 1; d <= r; ++d)
    if (r % d == 0 && q_pow(x, d) == q_identity(x.n(), x.k())) return d;
  throw error("q_order: unreachable");
}

// ----- cache spill ----------------------------------------------------------

namespace {

std::filesystem::path cache_file(const std::string& dir) {
  return std::filesystem::path(dir) /
         (std::string("cocycle-cache-") + kConvention + ".txt");
}

}  // namespace

void save_cocycle_cache(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream out(cache_file(dir));
  if (!out) return;
  std::lock_guard<std::mutex> lock(g_cocycle_mutex);
  for (const auto& [key, nf] : cocycle_memo()) {
    const auto& [n, k, pi, rho] = key;
    out << n << ' ' << k;
    for (int v : pi) out << ' ' << v;
    for (int v : rho) out << ' ' << v;
    for (Eigen::Index i = 0; i < nf.a.size(); ++i) out << ' ' << nf.a[i];
    for (Eigen::Index i = 0; i < nf.c.size(); ++i) out << ' ' << nf.c[i];
    out << '\n';
  }
}

void load_cocycle_cache(const std::string& dir) {
  std::ifstream in(cache_file(dir));
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream is(line);
    int n = 0, k = 0;
    if (!(is >> n >> k) || n < 1 || (k != 2 && k != 3)) continue;
    std::vector<int> pi(n), rho(n);
    bool ok = true;
    for (int& v : pi) ok = ok && static_cast<bool>(is >> v);
    for (int& v : rho) ok = ok && static_cast<bool>(is >> v);
    PureNF nf = nf_identity(n, k);
    for (Eigen::Index i = 0; ok && i < nf.a.size(); ++i)
      ok = ok && static_cast<bool>(is >> nf.a[i]);
    for (Eigen::Index i = 0; ok && i < nf.c.size(); ++i)
      ok = ok && static_cast<bool>(is >> nf.c[i]);
    if (!ok) continue;
    CocycleKey key{n, k, std::move(pi), std::move(rho)};
    std::lock_guard<std::mutex> lock(g_cocycle_mutex);
    cocycle_memo().emplace(std::move(key), std::move(nf));
  }
}

}  // namespace braidq
