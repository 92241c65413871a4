#pragma once

// Equivalence-panel reports: JSON with full evidence, flat CSV for plotting.

#include <iosfwd>
#include <span>

#include "cesaro/analysis.hpp"

namespace cesaro {

/// {"entries": [...], "summary": {...}}; non-finite numbers are written as null.
void write_report_json(std::ostream& out, std::span<const EquivalenceReport> reports);

/// Header `measure,alpha,beta,s,engine,verdict,fitted_slope,parameter,ratio`,
/// one row per evidence sample.
void write_report_csv(std::ostream& out, std::span<const EquivalenceReport> reports);

}  // namespace cesaro
