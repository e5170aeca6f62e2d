#pragma once

#include <iosfwd>

namespace heatpade::cli {

/// Exit codes: 0 success, 1 numeric failure (JSON error record on `err`),
/// 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace heatpade::cli
