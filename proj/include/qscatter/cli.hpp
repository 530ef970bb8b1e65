#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

namespace qscatter {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidArguments = 2;
inline constexpr int kExitComputationError = 3;
inline constexpr int kExitVerificationFailure = 4;

inline constexpr const char* kVersion = "0.1.0";

/// Worker count for sweeps: hardware concurrency, capped by QSCATTER_THREADS.
std::size_t sweep_threads();

/// Evaluates fn(i) for i in [0, n) on sweep_threads() workers; results keep index order.
std::vector<std::vector<double>> parallel_rows(std::size_t n,
                                               const std::function<std::vector<double>(std::size_t)>& fn);

/// Entry point shared by the executable and the tests.  Data goes to `out`
/// unless --output is given; diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qscatter
