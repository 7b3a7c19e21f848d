#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "daanneal/ising.hpp"

namespace daanneal {

/// Malformed instance text; line() is 1-based, 0 when not tied to a line.
class InstanceFormatError : public std::runtime_error {
 public:
  InstanceFormatError(std::size_t line, const std::string& what);
  /// Same error, message prefixed with the file it came from.
  InstanceFormatError(const std::string& source, const InstanceFormatError& inner);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Instance text format:
///
///   # comment (anywhere; runs to end of line)
///   n <count>          header, must precede every other entry
///   h <x> <value>      local field on vertex x
///   J <x> <y> <value>  coupling on the unordered pair {x, y}
///
/// Indices are 0-based. Unlisted entries are 0. A pair listed twice (either
/// orientation), a repeated field, a self-coupling or an index >= n is an error.
IsingInstance parse_instance_text(std::string_view text);
IsingInstance parse_instance(const std::string& path);

/// Writes the canonical form (fields, then couplings with x < y) with
/// round-trip precision, so parse(format(i)) == i.
std::string format_instance(const IsingInstance& instance);
void write_instance(const std::string& path, const IsingInstance& instance);

/// "+-+" style string, vertex 0 first. Also accepts '1'/'0'.
SpinConfiguration parse_spins(std::string_view text);
std::string format_spins(const SpinConfiguration& sigma);

}  // namespace daanneal
