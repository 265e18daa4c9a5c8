#pragma once

// Command implementations behind the `geninv` executable. Each command writes
// to the given streams and returns the process exit code:
//   0  success / verified
//   1  parse, precondition or cap failure
//   2  theorem-instance violation detected

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>

namespace geninv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitViolation = 2;

inline constexpr int kMaxCliDimension = 8;

struct Options {
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  bool exhaustive = false;
  std::uint64_t max_ring_size = 1'000'000;
  unsigned workers = 1;
};

int classify(std::string_view ring, std::string_view element, const Options& opts, std::ostream& out,
             std::ostream& err);
int decompose(std::string_view ring, std::string_view element, const Options& opts, std::ostream& out,
              std::ostream& err);
int census(std::string_view ring, const Options& opts, std::ostream& out, std::ostream& err);
int verify(std::string_view theorem, std::string_view ring, const Options& opts, std::ostream& out,
           std::ostream& err);

/// Parses argv (CLI11) and dispatches to the commands above.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace geninv::cli
