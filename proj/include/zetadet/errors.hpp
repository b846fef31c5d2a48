#pragma once

#include <stdexcept>
#include <string>

namespace zetadet {

// Evaluation point outside an operation's domain (e.g. z <= 0, s outside I_n).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The requested point is a pole of the function being evaluated.
class pole_error : public domain_error {
public:
    using domain_error::domain_error;
};

// An iterative scheme could not reach the requested tolerance. Carries the
// best value found (rendered as text) and its estimated absolute error.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, std::string best_value, double best_err)
        : std::runtime_error(what), best_value_(std::move(best_value)), best_err_(best_err) {}

    const std::string& best_value() const { return best_value_; }
    double best_err() const { return best_err_; }

private:
    std::string best_value_;
    double best_err_;
};

} // namespace zetadet
