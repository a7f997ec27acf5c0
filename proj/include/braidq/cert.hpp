#ifndef BRAIDQ_CERT_HPP
#define BRAIDQ_CERT_HPP

#include <string>
#include <vector>

#include "braidq/groups.hpp"
#include "braidq/quotient.hpp"

namespace braidq {

// Machine-checkable embedding witness: a finite group given by its full
// multiplication table plus one quotient element per group element.  Every
// integer in the serialized form is load-bearing for re-verification.
struct EmbeddingCert {
  std::string group_name;
  std::vector<std::vector<int>> table;  // element 0 = identity
  int n = 0;
  int k = 2;
  std::vector<QElem> images;               // per element index
  std::vector<std::string> transcript;     // checks performed, in order
  std::string tool_version = kToolVersion;
  std::string convention = kConvention;
  int schema = kCertSchema;
};

// Re-runs the universal checks: table axioms, image well-formedness,
// trivial kernel, the full |G|x|G| product table through q_mul, and the
// order of every image.  Throws error(...) naming the first failure.
void check_cert(const EmbeddingCert& cert);

// Assembles a certificate from a verified section and runs check_cert on it;
// the standard verification transcript is appended to `transcript`.
EmbeddingCert make_cert(const std::string& group_name, const FinGroup& group,
                        std::vector<QElem> images,
                        std::vector<std::string> transcript);

// Deterministic JSON (stable key order, no timestamps).
std::string cert_to_json(const EmbeddingCert& cert, bool pretty);
EmbeddingCert cert_from_json(const std::string& text);

}  // namespace braidq

#endif
