#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fractalscape/ifs.hpp"
#include "fractalscape/operator.hpp"
#include "fractalscape/verify.hpp"

namespace fractalscape::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exactly one of `preset` / `config` is set.
struct Source {
  std::optional<std::string> preset;
  std::optional<std::filesystem::path> config;
};

/// An IFS plus, when one can be derived, the operator of its landscape.
struct System {
  std::string label;
  AffineIfs ifs;
  std::optional<LandscapeOperator> op;
  std::optional<DeltaProfile> deltas;
  bool well_separated;
  bool exact_check;  ///< well_separated came from the exact 1-D test
  std::optional<WsiEstimate> estimate;
};

System resolve(const Source& source, std::size_t cap = kDefaultPointCap);

enum class Mode { kClosed, kIterate };

int cmd_info(const Source& source, std::ostream& out, std::size_t cap = kDefaultPointCap);
int cmd_landscape(const Source& source, std::size_t levels, Mode mode, std::ostream& out);
int cmd_empirical(const Source& source, std::size_t n, std::optional<std::size_t> levels,
                  std::ostream& landscape_out, std::ostream& diagram_out, std::size_t cap = kDefaultPointCap);
/// kOk when every report passes, kVerificationFailed otherwise.
int verdict_code(const std::vector<VerificationReport>& reports);

int cmd_verify(const std::string& preset_name, std::size_t n_max, std::ostream& out,
               std::optional<std::filesystem::path> csv_prefix = std::nullopt, std::size_t cap = kDefaultPointCap);
int cmd_plot(const Source& source, std::size_t levels, const std::filesystem::path& output,
             std::optional<std::size_t> with_cloud = std::nullopt, std::size_t cap = kDefaultPointCap);

/// Full command line: parses argv, dispatches, maps errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fractalscape::cli
