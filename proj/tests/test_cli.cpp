#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

std::string g_cli;

struct RunResult {
  int code = -1;
  std::string out;
};

// Run the binary under test, capturing stdout; stderr is left on the test log.
RunResult run_cli(const std::string& args) {
  RunResult r;
  const std::string cmd = g_cli + " " + args;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path =
      std::filesystem::temp_directory_path() / ("braidq_cli_tmp_" + name);
  std::ofstream f(path, std::ios::binary);
  f << text;
  REQUIRE(static_cast<bool>(f));
  return path;
}

}  // namespace

TEST_CASE("order subcommand reports exact orders") {
  // order 3 element of B_9 mod Gamma_2
  auto r = run_cli("order --n 9 --k 2 \"s5 s4^-1 s7 s8^-1\"");
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  // sigma_1 has infinite order in every torsion-free direction
  r = run_cli("order --n 3 --k 2 \"s1\"");
  CHECK(r.code == 0);
  CHECK(r.out == "infinite\n");
  r = run_cli("order --n 4 --k 3 \"A1,2\"");
  CHECK(r.code == 0);
  CHECK(r.out == "infinite\n");
}

TEST_CASE("word nf round-trips a pure word deterministically") {
  auto r1 = run_cli("word nf --n 4 --k 3 \"s1 s2 s1 s2^-1 s1^-1 s2^-1\"");
  auto r2 = run_cli("word nf --n 4 --k 3 \"s1 s2 s1 s2^-1 s1^-1 s2^-1\"");
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);  // byte-identical JSON
  const auto j = nlohmann::json::parse(r1.out);
  CHECK(j.at("n") == 4);
  CHECK(j.at("k") == 3);
  CHECK(j.at("a").size() == 6);
  CHECK(j.at("c").size() == 4);
}

TEST_CASE("orbits reports the two orbits of the order-27 group") {
  auto r = run_cli(
      "orbits --n 9 --gens \"(1,2,3)(4,5,6) (1,4,7,3,5,8,2,6,9)\" --level pairs");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("group_order") == 27);
  REQUIRE(j.at("orbits").size() == 2);
  int total = 0;
  for (const auto& o : j.at("orbits")) total += o.at("size").get<int>();
  CHECK(total == 36);
}

TEST_CASE("semidirect obstruction exits 2 and names the failing gcd") {
  auto r = run_cli("embed semidirect --n 9 --m 3 --t 4 --k 2 2>&1");
  CHECK(r.code == 2);
  CHECK(r.out.find("HypothesisViolation") != std::string::npos);
  CHECK(r.out.find("l = 1") != std::string::npos);
  CHECK(r.out.find("gcd(4^1 - 1, 9) = 3") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  auto r = run_cli("embed semidirect --n 9 --m 3 2>/dev/null");  // missing --t/--k
  CHECK(r.code == 1);
  r = run_cli("word nf --n 4 --k 5 \"s1\" 2>/dev/null");  // k not in {2,3}
  CHECK(r.code == 1);
  r = run_cli("order --n 3 --k 2 \"s7\" 2>/dev/null");  // letter out of range
  CHECK(r.code == 1);
}

TEST_CASE("cayley embedding emits a certificate that check-cert accepts") {
  const std::string z5 =
      write_temp("z5.json", "{\"name\": \"Z5\", \"n\": 5, \"perm_gens\": [\"(1,2,3,4,5)\"]}\n");
  auto r = run_cli("embed cayley --group " + z5 + " --k 2");
  REQUIRE(r.code == 0);
  const std::string cert_path = write_temp("z5_cert.json", r.out);

  auto chk = run_cli("check-cert " + cert_path);
  CHECK(chk.code == 0);
  CHECK(chk.out.find("certificate OK") != std::string::npos);

  // determinism: a second run produces byte-identical output
  auto r2 = run_cli("embed cayley --group " + z5 + " --k 2");
  CHECK(r2.out == r.out);

  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("target").at("n") == 5);
  CHECK(j.at("target").at("k") == 2);
  CHECK(j.at("group").at("order") == 5);
  CHECK(j.at("images").size() == 5);

  SUBCASE("every single-integer mutation is rejected") {
    // Walk the JSON tree; for each integer leaf, bump it by 1 and re-check.
    nlohmann::json base = nlohmann::json::parse(r.out);
    int mutations = 0, rejected = 0;
    std::function<void(nlohmann::json&)> visit = [&](nlohmann::json& node) {
      if (node.is_array() || node.is_object()) {
        for (auto& child : node) visit(child);
      } else if (node.is_number_integer()) {
        const auto orig = node.get<long long>();
        node = orig + 1;
        const std::string mut_path =
            write_temp("z5_mut.json", base.dump() + "\n");
        auto res = run_cli("check-cert " + mut_path + " 2>/dev/null");
        ++mutations;
        if (res.code == 2) ++rejected;
        node = orig;
      }
    };
    visit(base);
    CHECK(mutations > 100);
    CHECK(rejected == mutations);
  }
}

TEST_CASE("gcd obstruction for an even-order group exits 2") {
  const std::string z2 =
      write_temp("z2.json", "{\"name\": \"Z2\", \"n\": 2, \"perm_gens\": [\"(1,2)\"]}\n");
  auto r = run_cli("embed cayley --group " + z2 + " --k 2 2>&1");
  CHECK(r.code == 2);
  CHECK(r.out.find("GcdObstruction") != std::string::npos);
  CHECK(r.out.find("gcd(2, 2) = 2") != std::string::npos);
}

TEST_CASE("torsion search: found and NONE exit codes") {
  auto r = run_cli("torsion --n 3 --k 2 --order 3");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("order") == 3);

  r = run_cli("torsion --n 3 --k 2 --order 2 2>&1");
  CHECK(r.code == 2);
  CHECK(r.out.find("NONE") != std::string::npos);
}

TEST_CASE("group file with an explicit table works and bad files exit 1") {
  // Z3 given by its table
  const std::string z3 = write_temp(
      "z3_table.json",
      "{\"name\": \"Z3\", \"table\": [[0,1,2],[1,2,0],[2,0,1]], \"gens\": [1]}\n");
  auto r = run_cli("embed cayley --group " + z3 + " --k 2");
  CHECK(r.code == 0);

  const std::string bad = write_temp("bad.json", "{\"nope\": 1}\n");
  r = run_cli("embed cayley --group " + bad + " --k 2 2>/dev/null");
  CHECK(r.code == 1);
  r = run_cli("embed cayley --group does_not_exist.json --k 2 2>/dev/null");
  CHECK(r.code == 1);
}

int main(int argc, char** argv) {
  doctest::Context ctx;
  std::vector<char*> args{argv[0]};
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a.rfind("-", 0) == 0)
      args.push_back(argv[i]);
    else
      g_cli = a;
  }
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: braidq_cli_tests <path-to-braidq-binary>\n");
    return 1;
  }
  ctx.applyCommandLine(static_cast<int>(args.size()), args.data());
  return ctx.run();
}
