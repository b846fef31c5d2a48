#pragma once

#include "zetadet/real.hpp"

#include <functional>

namespace zetadet {

// Adaptive Simpson integration of a smooth integrand on [a, b]. The
// per-interval acceptance test is the standard |S2 - S1|/15 estimate with a
// conservative safety factor; throws convergence_error if the recursion
// depth is exhausted before the tolerance is met.
NumValue integrate_adaptive(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                            double target_abs_err, int max_depth = 32);

} // namespace zetadet
