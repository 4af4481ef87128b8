#pragma once

#include <stdexcept>
#include <string>

namespace wgspec {

/// Invalid argument or request outside an operation's domain.
class domain_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A problem definition that fails validation (bad profile, bad config).
class config_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical failure (integrator breakdown, overflow, non-convergence).
/// Carries enough context to identify the offending (m, lambda, r) request.
class numeric_error : public std::runtime_error {
  public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
    numeric_error(const std::string& what, int m, double lambda, double r)
        : std::runtime_error(what + " [m=" + std::to_string(m) +
                             ", lambda=" + std::to_string(lambda) +
                             ", r=" + std::to_string(r) + "]"),
          m_(m), lambda_(lambda), r_(r), has_context_(true) {}

    bool has_context() const { return has_context_; }
    int m() const { return m_; }
    double lambda() const { return lambda_; }
    double r() const { return r_; }

  private:
    int m_ = 0;
    double lambda_ = 0.0;
    double r_ = 0.0;
    bool has_context_ = false;
};

} // namespace wgspec
