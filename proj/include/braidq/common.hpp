#ifndef BRAIDQ_COMMON_HPP
#define BRAIDQ_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace braidq {

using Int = std::int64_t;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr const char* kToolVersion = "braidq 0.1.0";
// Frozen convention tag recorded in every certificate: word-order group
// products, act via t^{-1}, lexicographic pair/triple bases, insertion-sort
// sections, standard band-generator expansion, cyclic commutator table.
inline constexpr const char* kConvention = "braidq-convention-1";
inline constexpr int kCertSchema = 1;

// Usage or internal errors (CLI exit code 1).
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mathematically meaningful refusals (CLI exit code 2).
enum class ObstructionKind { Gcd, Hypothesis, Unsolvable, Sign };

class obstruction : public std::runtime_error {
 public:
  obstruction(ObstructionKind k, const std::string& msg)
      : std::runtime_error(msg), kind(k) {}
  ObstructionKind kind;
};

inline const char* obstruction_name(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::Gcd: return "GcdObstruction";
    case ObstructionKind::Hypothesis: return "HypothesisViolation";
    case ObstructionKind::Unsolvable: return "UNSOLVABLE";
    case ObstructionKind::Sign: return "SignObstruction";
  }
  return "?";
}

}  // namespace braidq

#endif
