#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidq/constructions.hpp"
#include "braidq/words.hpp"

namespace {

using namespace braidq;
using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw error("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string pair_str(int n, int rank) {
  const PairIdx e = pair_unrank(n, rank);
  return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
}

std::string triple_str(int n, int rank) {
  const TripleIdx t = triple_unrank(n, rank);
  return "(" + std::to_string(t.i) + "," + std::to_string(t.j) + "," +
         std::to_string(t.k) + ")";
}

std::vector<Perm> parse_gens(const std::string& text, int n) {
  std::vector<Perm> gens;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) gens.push_back(parse_perm(tok, n));
  if (gens.empty()) throw error("no generators given");
  return gens;
}

ordered_json qelem_json(const QElem& q) {
  ordered_json j;
  j["n"] = q.n();
  j["k"] = q.k();
  j["perm"] = q.pi.img;
  j["perm_cycles"] = to_cycles(q.pi);
  j["a"] = std::vector<Int>(q.p.a.data(), q.p.a.data() + q.p.a.size());
  if (q.k() == 3)
    j["c"] = std::vector<Int>(q.p.c.data(), q.p.c.data() + q.p.c.size());
  return j;
}

void print_qelem_pretty(const QElem& q) {
  std::cout << "perm: " << to_cycles(q.pi) << "\n";
  bool any = false;
  for (int r = 0; r < static_cast<int>(q.p.a.size()); ++r)
    if (q.p.a[r] != 0) {
      std::cout << "  A" << pair_str(q.n(), r) << ": " << q.p.a[r] << "\n";
      any = true;
    }
  if (q.k() == 3)
    for (int r = 0; r < static_cast<int>(q.p.c.size()); ++r)
      if (q.p.c[r] != 0) {
        std::cout << "  t" << triple_str(q.n(), r) << ": " << q.p.c[r] << "\n";
        any = true;
      }
  if (!any) std::cout << "  (trivial pure part)\n";
}

void emit_cert(const EmbeddingCert& cert, const std::string& out, bool pretty) {
  const std::string text = cert_to_json(cert, pretty);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    f << text;
    if (!f) throw error("cannot write " + out);
    std::cerr << "certificate written to " << out << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic in the braid group quotients B_n mod "
               "Gamma_k(P_n), k = 2, 3"};
  app.require_subcommand(1);

  // orbits
  auto* orbits_cmd = app.add_subcommand(
      "orbits", "orbit decomposition of the pair or triple basis");
  int o_n = 0;
  std::string o_gens, o_level = "pairs";
  bool o_pretty = false;
  orbits_cmd->add_option("--n", o_n, "number of strands")->required();
  orbits_cmd->add_option("--gens", o_gens, "whitespace-separated permutations")
      ->required();
  orbits_cmd->add_option("--level", o_level, "pairs or triples")
      ->check(CLI::IsMember({"pairs", "triples"}));
  orbits_cmd->add_flag("--pretty", o_pretty, "human-readable table");

  // embed cayley / semidirect / prime-power
  auto* embed_cmd = app.add_subcommand("embed", "build embedding certificates");
  embed_cmd->require_subcommand(1);
  auto* cay_cmd = embed_cmd->add_subcommand(
      "cayley", "embed a finite group of order coprime to k! into B_|G|");
  std::string c_group, c_out;
  int c_k = 2;
  bool c_pretty = false;
  cay_cmd->add_option("--group", c_group, "group JSON file")->required();
  cay_cmd->add_option("--k", c_k, "quotient degree")
      ->required()
      ->check(CLI::IsMember({2, 3}));
  cay_cmd->add_option("--out", c_out, "write certificate to file");
  cay_cmd->add_flag("--pretty", c_pretty, "indented JSON");

  auto* sd_cmd = embed_cmd->add_subcommand(
      "semidirect", "embed Z_n x| Z_m (action t) into B_n");
  int s_n = 0, s_m = 0, s_t = 0, s_k = 2;
  std::string s_out;
  bool s_pretty = false;
  sd_cmd->add_option("--n", s_n, "order of the normal cyclic factor")->required();
  sd_cmd->add_option("--m", s_m, "order of the acting cyclic factor")->required();
  sd_cmd->add_option("--t", s_t, "action: multiplication by t on Z_n")->required();
  sd_cmd->add_option("--k", s_k, "quotient degree")
      ->required()
      ->check(CLI::IsMember({2, 3}));
  sd_cmd->add_option("--out", s_out, "write certificate to file");
  sd_cmd->add_flag("--pretty", s_pretty, "indented JSON");

  auto* pp_cmd = embed_cmd->add_subcommand(
      "prime-power", "embed Z_{p^r} x| Z_{d1} with the canonical action");
  int p_p = 0, p_r = 1, p_d1 = 1, p_k = 2;
  std::string p_out;
  bool p_pretty = false;
  pp_cmd->add_option("--p", p_p, "odd prime")->required();
  pp_cmd->add_option("--r", p_r, "exponent, n = p^r")->required();
  pp_cmd->add_option("--d1", p_d1, "odd divisor of p - 1")->required();
  pp_cmd->add_option("--k", p_k, "quotient degree")
      ->required()
      ->check(CLI::IsMember({2, 3}));
  pp_cmd->add_option("--out", p_out, "write certificate to file");
  pp_cmd->add_flag("--pretty", p_pretty, "indented JSON");

  // verify example27
  auto* verify_cmd = app.add_subcommand("verify", "re-run built-in reproductions");
  verify_cmd->require_subcommand(1);
  auto* ex_cmd = verify_cmd->add_subcommand(
      "example27", "the two order-27 subgroups of B_9 mod Gamma_2");
  std::string e_variant, e_out;
  bool e_pretty = false;
  ex_cmd->add_option("--variant", e_variant, "a = Z9:Z3(t=4), b = Heisenberg mod 3")
      ->required()
      ->check(CLI::IsMember({"a", "b"}));
  ex_cmd->add_option("--out", e_out, "write certificate to file");
  ex_cmd->add_flag("--pretty", e_pretty, "indented JSON");

  // word nf
  auto* word_cmd = app.add_subcommand("word", "evaluate braid words");
  word_cmd->require_subcommand(1);
  auto* nf_cmd = word_cmd->add_subcommand("nf", "normal form in B_n mod Gamma_k");
  int w_n = 0, w_k = 2;
  std::string w_word;
  bool w_pretty = false;
  nf_cmd->add_option("--n", w_n, "number of strands")->required();
  nf_cmd->add_option("--k", w_k, "quotient degree")
      ->required()
      ->check(CLI::IsMember({2, 3}));
  nf_cmd->add_option("word", w_word, "braid word, e.g. \"s1 s2^-1 A1,3\"")
      ->required();
  nf_cmd->add_flag("--pretty", w_pretty, "human-readable coordinates");

  // order
  auto* order_cmd = app.add_subcommand("order", "exact order of a braid word");
  int r_n = 0, r_k = 2;
  std::string r_word;
  order_cmd->add_option("--n", r_n, "number of strands")->required();
  order_cmd->add_option("--k", r_k, "quotient degree")
      ->required()
      ->check(CLI::IsMember({2, 3}));
  order_cmd->add_option("word", r_word, "braid word")->required();

  // torsion
  auto* torsion_cmd = app.add_subcommand(
      "torsion", "search for an element of exact order m in B_n mod Gamma_k");
  int t_n = 0, t_k = 2, t_m = 0;
  bool t_pretty = false;
  torsion_cmd->add_option("--n", t_n, "number of strands")->required();
  torsion_cmd->add_option("--k", t_k, "quotient degree")
      ->required()
      ->check(CLI::IsMember({2, 3}));
  torsion_cmd->add_option("--order", t_m, "target order")->required();
  torsion_cmd->add_flag("--pretty", t_pretty, "human-readable element");

  // check-cert
  auto* check_cmd = app.add_subcommand("check-cert",
                                       "re-verify an embedding certificate");
  std::string k_file;
  check_cmd->add_option("file", k_file, "certificate JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  const char* cache_dir = std::getenv("BRAIDQ_CACHE_DIR");
  if (cache_dir && *cache_dir) {
    try {
      load_cocycle_cache(cache_dir);
    } catch (const std::exception&) {
      // a stale or unreadable cache is never fatal
    }
  }
  auto save_cache = [&] {
    if (cache_dir && *cache_dir) {
      try {
        save_cocycle_cache(cache_dir);
      } catch (const std::exception&) {
      }
    }
  };

  int code = 0;
  try {
    if (orbits_cmd->parsed()) {
      if (o_n < 1 || o_n > 64) throw error("n out of range");
      auto [g, rep] = from_perm_gens(o_n, parse_gens(o_gens, o_n));
      const BasisLevel level =
          o_level == "pairs" ? BasisLevel::pairs : BasisLevel::triples;
      const OrbitBasis ob = orbit_basis(rep, level);
      auto label = [&](int rank) {
        return level == BasisLevel::pairs ? pair_str(o_n, rank)
                                          : triple_str(o_n, rank);
      };
      if (o_pretty) {
        std::cout << "group order " << g.order << ", " << o_level << " basis, "
                  << ob.orbits.size() << " orbit(s)\n";
        for (size_t i = 0; i < ob.orbits.size(); ++i) {
          const auto& orb = ob.orbits[i];
          std::cout << "orbit " << i + 1 << ": size " << orb.elements.size()
                    << (orb.free ? " (free)" : "") << ", representative "
                    << label(orb.rep_rank) << "\n   ";
          for (const auto& e : orb.elements)
            std::cout << " " << (e.sign < 0 ? "-" : "") << label(e.rank);
          std::cout << "\n";
        }
      } else {
        ordered_json j;
        j["n"] = o_n;
        j["level"] = o_level;
        j["group_order"] = g.order;
        j["orbits"] = ordered_json::array();
        for (const auto& orb : ob.orbits) {
          ordered_json jo;
          jo["representative"] = label(orb.rep_rank);
          jo["size"] = orb.elements.size();
          jo["free"] = orb.free;
          auto members = ordered_json::array();
          for (const auto& e : orb.elements)
            members.push_back((e.sign < 0 ? "-" : "") + label(e.rank));
          jo["members"] = std::move(members);
          j["orbits"].push_back(std::move(jo));
        }
        std::cout << j.dump() << "\n";
      }
    } else if (cay_cmd->parsed()) {
      const FinGroup g = group_from_json_text(slurp(c_group));
      emit_cert(cayley_embed(g, c_k), c_out, c_pretty);
    } else if (sd_cmd->parsed()) {
      emit_cert(semidirect_embed(make_semidirect_spec(s_n, s_m, s_t), s_k),
                s_out, s_pretty);
    } else if (pp_cmd->parsed()) {
      emit_cert(semidirect_embed(prime_power_spec(p_p, p_r, p_d1), p_k), p_out,
                p_pretty);
    } else if (ex_cmd->parsed()) {
      emit_cert(example27(e_variant[0]), e_out, e_pretty);
    } else if (nf_cmd->parsed()) {
      if (w_n < 1 || w_n > 64) throw error("n out of range");
      const QElem q = q_of_word(parse_word(w_word, w_n), w_k);
      if (w_pretty)
        print_qelem_pretty(q);
      else
        std::cout << qelem_json(q).dump() << "\n";
    } else if (order_cmd->parsed()) {
      if (r_n < 1 || r_n > 64) throw error("n out of range");
      const auto ord = q_order(q_of_word(parse_word(r_word, r_n), r_k));
      if (ord)
        std::cout << *ord << "\n";
      else
        std::cout << "infinite\n";
    } else if (torsion_cmd->parsed()) {
      const auto q = torsion_element(t_n, t_k, t_m);
      if (!q) {
        save_cache();
        std::cerr << "NONE: no element of exact order " << t_m << " in B_"
                  << t_n << " mod Gamma_" << t_k
                  << "; every cycle type of order " << t_m
                  << " was tried and none splits\n";
        return 2;
      }
      if (t_pretty) {
        std::cout << "element of exact order " << t_m << " in B_" << t_n
                  << " mod Gamma_" << t_k << ":\n";
        print_qelem_pretty(*q);
      } else {
        ordered_json j = qelem_json(*q);
        j["order"] = t_m;
        std::cout << j.dump() << "\n";
      }
    } else if (check_cmd->parsed()) {
      const std::string text = slurp(k_file);
      EmbeddingCert cert;
      try {
        cert = cert_from_json(text);
        check_cert(cert);
      } catch (const std::exception& e) {
        save_cache();
        std::cerr << "certificate rejected: " << e.what() << "\n";
        return 2;
      }
      std::cout << "certificate OK: " << cert.group_name << " of order "
                << cert.table.size() << " embedded in B_" << cert.n
                << " mod Gamma_" << cert.k << "\n";
    }
  } catch (const obstruction& o) {
    std::cerr << o.what() << "\n";
    code = 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 1;
  }
  save_cache();
  return code;
}
