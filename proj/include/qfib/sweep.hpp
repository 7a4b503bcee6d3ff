// Parameter sweeps over catalog entries and the resulting verification report.
//
// sweep() evaluates independent cells in an OpenMP parallel loop; sweep_serial()
// is the single-threaded reference.  Both return cells in the same planned
// order, so reports are identical apart from optional timings.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qfib/identities.hpp"

namespace qfib {

enum class CellStatus { pass, fail, fitted };

std::string_view to_string(CellStatus status);
CellStatus parse_status(std::string_view text);

/// Parameter values in the entry's signature order.
using ParamList = std::vector<std::pair<std::string, int>>;

struct CellRecord {
  std::string id;
  ParamList params;
  CellStatus status = CellStatus::fail;
  std::optional<std::string> residual;    // canonical text, failures only
  std::optional<std::string> correction;  // fitted monomial, fitted cells only
  std::optional<std::string> error;       // exception raised while building the residual
  std::optional<double> ms;               // only when timings are requested

  friend bool operator==(const CellRecord&, const CellRecord&) = default;
};

struct ReportSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t fitted = 0;
  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct VerificationReport {
  std::string command = "verify";
  std::vector<CellRecord> cells;

  ReportSummary summary() const;
  /// True iff no cell failed; fitted cells count only when `fitted_ok`.
  bool all_pass(bool fitted_ok = false) const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct SweepOptions {
  /// Per-parameter overrides of the entries' default grids.
  ParamGrid ranges;
  std::optional<int> max_k;
  std::optional<int> max_ell;
  bool fit = false;
  int workers = 1;
  bool timings = false;
  /// Residual text longer than this is cut and suffixed with "...".
  std::size_t max_residual_chars = 4096;
};

struct SweepCell {
  const IdentityEntry* entry = nullptr;
  Params params;
  bool fit = false;
};

/// Cartesian product of each entry's grid in signature order, restricted to its domain.
std::vector<SweepCell> plan_sweep(const std::vector<const IdentityEntry*>& entries, const SweepOptions& options);

CellRecord run_cell(const SweepCell& cell, const SweepOptions& options);

VerificationReport sweep(const std::vector<const IdentityEntry*>& entries, const SweepOptions& options);
VerificationReport sweep_serial(const std::vector<const IdentityEntry*>& entries, const SweepOptions& options);

std::string report_to_json(const VerificationReport& report);
VerificationReport report_from_json(std::string_view text);
std::string report_to_text(const VerificationReport& report);

}  // namespace qfib
