#pragma once

#include <optional>
#include <vector>

#include "rootpoly/rational.hpp"

namespace rootpoly {

/// Exact simplex over arbitrary-precision rationals with Bland's anti-cycling
/// rule. No floating point anywhere. Problems here are tiny (tens of columns),
/// so a dense tableau is the right tool.
using Matrix = std::vector<std::vector<Rational>>;

/// A point of {x >= 0 : A x = b}, or nullopt when the system is infeasible.
std::optional<std::vector<Rational>> lp_feasible_point(const Matrix& A,
                                                       const std::vector<Rational>& b);

/// max c.x over {x >= 0 : A x = b}. Returns nullopt when infeasible; throws
/// domain_error when unbounded (callers only pose bounded problems).
std::optional<std::pair<Rational, std::vector<Rational>>> lp_maximize(
    const Matrix& A, const std::vector<Rational>& b, const std::vector<Rational>& c);

}  // namespace rootpoly
