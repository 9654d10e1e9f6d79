#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vnat/lattice.hpp"
#include "vnat/moonshine.hpp"
#include "vnat/qseries.hpp"

namespace vnat::checks {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownCheck : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CheckConfig {
  std::int64_t prec = 12;  // q-series terms from q^-1
  std::int64_t nmax = 2;   // theta coefficients q^0..q^nmax
  int kmax = 6;
  int rank = 2;    // Fock space colors
  int degree = 6;  // maximal state degree for bracket and Borcherds sweeps
  int window = 20;  // generator fields valid for modes in [-window, window], degree <= window
  int trials = 1000;
  std::uint64_t seed = 1;
  bool budget_override = false;
  unsigned threads = 1;  // enumeration threads, 0 = hardware concurrency
  unsigned jobs = 1;     // checks run concurrently
};

// Applies "key = value" lines ('#' starts a comment) on top of cfg; validates ranges.
CheckConfig parse_config(std::string_view text, CheckConfig cfg = {});
void set_config_value(CheckConfig& cfg, std::string_view key, std::string_view value);
void validate(const CheckConfig& cfg);

enum class Status { Pass, Fail, Skip };
std::string to_string(Status s);

// Where the expected value comes from: a value stated in the literature, an
// independent computation, or an elementary identity.
enum class Basis { Published, Computed, Elementary };
std::string to_string(Basis b);

struct Detail {
  std::string label;
  bool pass = true;
  std::string text;
};

struct CheckReport {
  std::string name;
  Status status = Status::Skip;
  std::string expected;
  std::string actual;
  Basis basis = Basis::Computed;
  std::string claim;
  std::string note;  // measured values that are reported, not asserted
  std::vector<Detail> details;
  // Per-k outcomes of replicability checks.
  std::vector<moonshine::ReplicabilityVerdict> verdicts;
  double runtime_ms = 0;
};

struct CheckInfo {
  std::string name;
  std::string claim;
  Basis basis;
  std::function<CheckReport(const CheckConfig&)> run;
};

// Every check in catalogue order.
const std::vector<CheckInfo>& catalogue();

// Runs the selection ("all" expands to the catalogue) and returns rows in catalogue
// order. Throws UnknownCheck before running anything if a name is not catalogued.
std::vector<CheckReport> run(const std::vector<std::string>& selection, const CheckConfig& cfg);

// JSON document {"config": ..., "reports": [...], "passed": bool}.
std::string to_json(const std::vector<CheckReport>& reports, const CheckConfig& cfg, bool include_runtime = true);
bool all_passed(const std::vector<CheckReport>& reports);

// "leech-character", "involution-trace", "twisted-character", "j", "delta", "e4",
// "niemeier-theta", "leech-theta", or an eta quotient "eta:m^r,m^r,..." such as
// "eta:1^24,2^-24" (m may be a fraction).
qseries::FracQSeries named_series(std::string_view expr, std::int64_t prec);
std::vector<std::string> series_names();

// "niemeier", "leech", "lambda0", "e8", "a1", "z<n>" or a lattice file path.
lattice::ScaledLattice named_lattice(std::string_view name);
std::vector<std::string> lattice_names();

}  // namespace vnat::checks
