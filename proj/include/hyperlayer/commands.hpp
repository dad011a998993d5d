#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "hyperlayer/spectral.hpp"

namespace hyperlayer::cli {

/// Streams a command reads from and writes to. A path of `-` means `in`.
struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// Each command returns the process exit status. Failures print a single
// `error: <Code>: <message>` line to `err` and return nonzero.

int build(const std::string& input, const std::string& output, Streams io);
int stats(const std::string& input, Streams io);
int spectral(const std::string& input, const EigenOptions& options, Streams io);
int reconstruct(const std::string& input, std::optional<std::size_t> n, Streams io);
int uniformise(const std::string& input, Streams io);

}  // namespace hyperlayer::cli
