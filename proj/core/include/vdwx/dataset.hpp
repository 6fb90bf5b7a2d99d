#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vdwx/config.hpp"

namespace vdwx {

struct SweepRow {
  double axis = 0.0;
  std::vector<double> values;
  unsigned flags = 0;
};

// One computed dataset: named axis, named value columns, rows sorted
// ascending by axis value. Skipped abscissae (poles, regimes a closed form
// does not cover, failed quadratures) are recorded, never silently dropped.
struct SweepResult {
  std::string axis_name;
  std::vector<std::string> value_names;
  std::vector<SweepRow> rows;
  // Ordered key/value echo: artifact version, resolved config, notes.
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> skipped;  // "axis=<value>: <reason>"
  bool nonconvergent = false;        // any skip due to quadrature failure
};

// Evaluation grid: min + (i * (max - min)) / (points - 1), or log-spaced.
// The division comes last so representable endpoints and midpoints (the
// resonance at a frequency-ratio sweep, say) are hit exactly.
std::vector<double> axis_grid(const SweepSpec& spec);

// Runs the configured problem over its sweep (or the single configured
// geometry when no sweep is given).
SweepResult run_sweep(const RunConfig& config);

struct FigureOverrides {
  std::optional<int> points;
  std::optional<double> min;
  std::optional<double> max;
  std::optional<double> gamma_ratio;

  friend bool operator==(const FigureOverrides&, const FigureOverrides&) =
      default;
};

// Published sweep datasets, dimensionless normalization. Known identifiers:
//   4a, 4b, 5: two-medium thermal force vs omega_a/omega_b, both force laws
//   6:         two-medium thermal force vs T/omega_b at omega_a/omega_b = 0.9
//   7a, 7b, 7: atom above a cold half space vs omega_a/omega_b
//              (7a population-resolved, 7b Lifshitz, 7 both columns)
// Throws UnknownFigure otherwise.
SweepResult figure_dataset(const std::string& which,
                           const FigureOverrides& overrides = {});

// CSV: "# key: value" metadata lines, "# skipped: ..." lines, header row
// (axis, value columns, flags), then rows with 9 significant digits, LF
// line endings. Byte-deterministic for identical inputs.
void write_csv(const SweepResult& result, std::ostream& out);

// Single JSON object {"metadata": {...}, "rows": [[axis, values..., flags]]}.
void write_json(const SweepResult& result, std::ostream& out);

// Row flag bitmask names, semicolon-joined ("" when none).
std::string flags_to_string(unsigned flags);

}  // namespace vdwx
