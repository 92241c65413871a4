#pragma once

// Panels of (measure, α, β) entries for the equivalence checks, and the
// config file that describes them.
//
// Config format: `key = value` lines, `#` comments, and one
// `[measure NAME]` section per measure holding `expr = ...` (or separate
// `tail = ...` / `moments = ...`). Expressions may use `{s}`, `{s+d}` and
// `{s-d}`, replaced by the decimal value for each pair's s = 1 + (α-β)/2.
// Unset keys keep their defaults; `pairs` defaults to the five canonical pairs.

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cesaro/analysis.hpp"

namespace cesaro {

struct PanelMeasure {
  std::string name;
  std::string tail_expr;
  std::string moment_expr;

  friend bool operator==(const PanelMeasure&, const PanelMeasure&) = default;
};

struct PanelConfig {
  std::vector<PanelMeasure> measures;
  std::vector<std::pair<double, double>> pairs;
  EquivalenceConfig engine;
};

/// Eight canonical measures × five (α, β) pairs.
PanelConfig default_panel();

/// Throws ConfigError naming the line or the offending value.
PanelConfig parse_panel_config(std::istream& in);
PanelConfig load_panel_config(const std::string& path);

/// Rejects out-of-range pairs, non-increasing sizes and unparsable measures.
void validate(const PanelConfig& config);

std::string substitute_s(std::string_view expr, double s);

Subject instantiate(const PanelMeasure& m, double s);

/// Evaluates every (measure, pair) entry on up to `threads` workers; the
/// result is sorted by measure name, then (α, β).
std::vector<EquivalenceReport> run_panel(const PanelConfig& config, unsigned threads);

}  // namespace cesaro
