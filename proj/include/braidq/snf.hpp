#ifndef BRAIDQ_SNF_HPP
#define BRAIDQ_SNF_HPP

#include <optional>

#include "braidq/common.hpp"

namespace braidq {

// Solves A x = b over the integers by Smith-style diagonalization with a
// deterministic smallest-pivot rule.  Row operations are carried through b;
// column operations are accumulated into a change-of-basis matrix, so the
// returned solution is in the original coordinates with every free coordinate
// equal to zero.  Returns nullopt when no integer solution exists.  All
// arithmetic is exact; intermediate growth beyond 2^62 throws error().
std::optional<IVec> solve_linear(IMat A, IVec b);

}  // namespace braidq

#endif
