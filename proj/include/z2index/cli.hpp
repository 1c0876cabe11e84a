#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace z2index::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kInconsistent = 2,
  kResource = 3,
};

enum class Format { Text, Json, Csv };

struct RunConfig {
  std::string command;
  std::vector<int> ns;
  std::optional<int> cap;
  Format format = Format::Text;
  bool certificates = false;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::size_t samples = 10000;
  int degree = 0;
  std::string output;
};

/// Comma-separated items, each "k" or an inclusive range "a..b".
/// Throws std::invalid_argument on malformed or empty input.
std::vector<int> parse_n_list(const std::string& text);

/// Worker count from Z2INDEX_THREADS, else the hardware concurrency.
unsigned default_threads();

/// Entry point behind the z2index executable; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace z2index::cli
