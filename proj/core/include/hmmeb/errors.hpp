#pragma once

#include <stdexcept>
#include <string>

namespace hmmeb {

/// Both transition probabilities are zero: every distribution is stationary,
/// so quantities that presume a unique stationary law are undefined.
class DegenerateChainError : public std::domain_error {
 public:
  explicit DegenerateChainError(const std::string& what)
      : std::domain_error(what) {}
};

/// lambda = (1-2*alpha)^2 = 0, i.e. pure noise; the geometric subset-sampling
/// variable degenerates and beta-type expectations are not defined.
class InfiniteNoiseError : public std::domain_error {
 public:
  explicit InfiniteNoiseError(const std::string& what)
      : std::domain_error(what) {}
};

/// Requested exact enumeration beyond the supported size cap.
class SizeError : public std::length_error {
 public:
  explicit SizeError(const std::string& what) : std::length_error(what) {}
};

namespace detail {

inline void require_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error(std::string(name) + " must lie in [0,1], got " +
                            std::to_string(x));
  }
}

}  // namespace detail

}  // namespace hmmeb
