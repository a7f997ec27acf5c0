#include "braidq/cert.hpp"

#include <json.hpp>

namespace braidq {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string check_failed(const std::string& what) {
  return "certificate check failed: " + what;
}

}  // namespace

void check_cert(const EmbeddingCert& cert) {
  if (cert.schema != kCertSchema)
    throw error(check_failed("unsupported schema version"));
  if (cert.convention != kConvention)
    throw error(check_failed("certificate uses a different convention tag"));
  if (cert.k != 2 && cert.k != 3) throw error(check_failed("k must be 2 or 3"));
  if (cert.n < 1) throw error(check_failed("target strand count"));

  // Group axioms (identity, Latin square, inverses, associativity).
  FinGroup group;
  try {
    group = group_from_table(cert.table, {}, cert.group_name);
  } catch (const error& e) {
    throw error(check_failed(e.what()));
  }
  const int order = group.order;
  if (static_cast<int>(cert.images.size()) != order)
    throw error(check_failed("one image per group element required"));

  const QElem id = q_identity(cert.n, cert.k);
  for (int g = 0; g < order; ++g) {
    const QElem& im = cert.images[g];
    if (im.p.n != cert.n || im.p.k != cert.k)
      throw error(check_failed("image in the wrong quotient"));
    if (im.pi.n() != cert.n || im.p.a.size() != pair_count(cert.n) ||
        im.p.c.size() != (cert.k == 3 ? triple_count(cert.n) : 0))
      throw error(check_failed("image has malformed coordinates"));
    std::vector<char> seen(cert.n, 0);
    for (int x = 1; x <= cert.n; ++x) {
      const int y = im.pi(x);
      if (y < 1 || y > cert.n || seen[y - 1]++)
        throw error(check_failed("image permutation is not a bijection"));
    }
    if (g == 0 && !(im == id))
      throw error(check_failed("identity image is not trivial"));
    if (g != 0 && im == id)
      throw error(check_failed("nontrivial kernel (not injective)"));
  }

  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      if (!(q_mul(cert.images[g], cert.images[h]) ==
            cert.images[group.mul(g, h)]))
        throw error(check_failed("product table mismatch at (" +
                                 std::to_string(g) + ", " + std::to_string(h) +
                                 ")"));

  for (int g = 0; g < order; ++g) {
    const auto ord = q_order(cert.images[g]);
    if (!ord || *ord != group.element_order(g))
      throw error(check_failed("image order mismatch at element " +
                               std::to_string(g)));
  }
}

EmbeddingCert make_cert(const std::string& group_name, const FinGroup& group,
                        std::vector<QElem> images,
                        std::vector<std::string> transcript) {
  EmbeddingCert cert;
  cert.group_name = group_name;
  cert.table = group.table;
  cert.n = images.at(0).n();
  cert.k = images.at(0).k();
  cert.images = std::move(images);
  cert.transcript = std::move(transcript);
  cert.transcript.push_back("verified: group table axioms (order " +
                            std::to_string(group.order) + ")");
  cert.transcript.push_back("verified: all " + std::to_string(group.order) +
                            "x" + std::to_string(group.order) +
                            " products in B_" + std::to_string(cert.n) +
                            " mod Gamma_" + std::to_string(cert.k));
  cert.transcript.push_back("verified: trivial kernel (injective)");
  cert.transcript.push_back("verified: element orders preserved");
  check_cert(cert);
  return cert;
}

std::string cert_to_json(const EmbeddingCert& cert, bool pretty) {
  ordered_json j;
  j["schema"] = cert.schema;
  j["tool_version"] = cert.tool_version;
  j["convention"] = cert.convention;
  j["group"] = ordered_json{{"name", cert.group_name},
                            {"order", static_cast<int>(cert.table.size())},
                            {"table", cert.table}};
  j["target"] = ordered_json{{"n", cert.n}, {"k", cert.k}};
  ordered_json images = ordered_json::array();
  for (const QElem& im : cert.images) {
    ordered_json e;
    e["perm"] = im.pi.img;
    e["a"] = std::vector<Int>(im.p.a.data(), im.p.a.data() + im.p.a.size());
    if (cert.k == 3)
      e["c"] = std::vector<Int>(im.p.c.data(), im.p.c.data() + im.p.c.size());
    images.push_back(std::move(e));
  }
  j["images"] = std::move(images);
  j["transcript"] = cert.transcript;
  return pretty ? j.dump(2) + "\n" : j.dump() + "\n";
}

EmbeddingCert cert_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw error(std::string("certificate parse error: ") + e.what());
  }
  try {
    EmbeddingCert cert;
    cert.schema = j.at("schema").get<int>();
    cert.tool_version = j.at("tool_version").get<std::string>();
    cert.convention = j.at("convention").get<std::string>();
    cert.group_name = j.at("group").at("name").get<std::string>();
    cert.table = j.at("group").at("table").get<std::vector<std::vector<int>>>();
    if (j.at("group").at("order").get<int>() !=
        static_cast<int>(cert.table.size()))
      throw error("certificate parse error: order field disagrees with table");
    cert.n = j.at("target").at("n").get<int>();
    cert.k = j.at("target").at("k").get<int>();
    if (cert.n < 1 || cert.n > 64 || (cert.k != 2 && cert.k != 3))
      throw error("certificate parse error: unsupported target");
    for (const auto& e : j.at("images")) {
      QElem im;
      im.pi = Perm(e.at("perm").get<std::vector<int>>());
      im.p = nf_identity(cert.n, cert.k);
      const auto a = e.at("a").get<std::vector<Int>>();
      if (static_cast<int>(a.size()) != pair_count(cert.n))
        throw error("certificate parse error: pair vector size");
      for (int i = 0; i < static_cast<int>(a.size()); ++i) im.p.a[i] = a[i];
      if (cert.k == 3) {
        const auto c = e.at("c").get<std::vector<Int>>();
        if (static_cast<int>(c.size()) != triple_count(cert.n))
          throw error("certificate parse error: triple vector size");
        for (int i = 0; i < static_cast<int>(c.size()); ++i) im.p.c[i] = c[i];
      } else if (e.contains("c")) {
        throw error("certificate parse error: stray central part at k = 2");
      }
      if (im.pi.n() != cert.n)
        throw error("certificate parse error: permutation degree");
      cert.images.push_back(std::move(im));
    }
    cert.transcript = j.at("transcript").get<std::vector<std::string>>();
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw error(std::string("certificate parse error: ") + e.what());
  }
}

}  // namespace braidq
