#pragma once

#include "succession/rational.hpp"

#include <vector>

namespace succession {

/// Answer to "is target a nonnegative combination of the generators?".
struct ConeCertificate {
  bool feasible = false;
  RationalVector weights;    // one per generator when feasible
  RationalVector separator;  // f with f.g <= 0 for all generators and f.target > 0, when infeasible
};

/// Exact phase-1 simplex with Bland's rule. An infeasible answer carries the
/// Farkas functional read off the final dual solution.
ConeCertificate cone_membership(const RationalVector& target, const std::vector<RationalVector>& generators);

/// Re-checks a certificate from scratch: weights nonnegative and reproducing the
/// target, or separator inequalities.
bool verify_certificate(const ConeCertificate& cert, const RationalVector& target,
                        const std::vector<RationalVector>& generators);

}  // namespace succession
