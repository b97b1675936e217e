#pragma once

#include <stdexcept>
#include <string>

namespace nlsdp {

/// Parameters outside the regime where the requested object exists
/// (e.g. asking for a standing-wave profile when the frequency is not admissible).
class RegimeError : public std::domain_error {
public:
  explicit RegimeError(const std::string& what) : std::domain_error(what) {}
};

/// A numerical procedure failed (NaN, divergence, root not bracketed).
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nlsdp
