#pragma once
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace reciplab {

struct DegreeCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ModulusMismatch : std::invalid_argument {
  ModulusMismatch() : std::invalid_argument("polynomials live over different primes") {}
};
struct DivisionByZeroPoly : std::domain_error {
  DivisionByZeroPoly() : std::domain_error("division by the zero polynomial") {}
};
struct ShapeViolation : std::logic_error {
  using std::logic_error::logic_error;
};
struct RankViolation : std::logic_error {
  using std::logic_error::logic_error;
};
struct NotSquarefree : std::domain_error {
  using std::domain_error::domain_error;
};
struct SizeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Cap on enumeration sizes; RECIP_LAB_CAP overrides the default when set.
inline unsigned long long enumeration_cap(unsigned long long fallback) {
  if (const char* s = std::getenv("RECIP_LAB_CAP")) {
    try {
      return std::stoull(s);
    } catch (...) {
    }
  }
  return fallback;
}

}  // namespace reciplab
