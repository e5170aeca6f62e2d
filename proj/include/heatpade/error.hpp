#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heatpade {

enum class ErrorKind {
  InvalidShape,
  InvalidArgument,
  QuadratureNotConverged,
  SeriesNotConverged,
  UnsupportedOrder,
  DegenerateDenominator,
  NoSolutionFound,
  NoComplexPole,
  IllConditioned,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidShape: return "InvalidShape";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorKind::SeriesNotConverged: return "SeriesNotConverged";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::NoSolutionFound: return "NoSolutionFound";
    case ErrorKind::NoComplexPole: return "NoComplexPole";
    case ErrorKind::IllConditioned: return "IllConditioned";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace heatpade
