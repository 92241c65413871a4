#include "cesaro/report.hpp"

#include <cmath>
#include <ostream>

#include <json.hpp>

#include "cesaro/csv.hpp"

namespace cesaro {
namespace {

using nlohmann::ordered_json;

ordered_json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

ordered_json evidence(const Verdict& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& e : v.evidence) arr.push_back(ordered_json::array({number(e.parameter), number(e.ratio)}));
  return arr;
}

ordered_json entry(const EquivalenceReport& r) {
  ordered_json j;
  j["measure"] = r.measure;
  j["tail_expr"] = r.tail_expr;
  j["moment_expr"] = r.moment_expr;
  j["alpha"] = r.alpha;
  j["beta"] = r.beta;
  j["s"] = r.s;
  j["verdicts"] = {
      {"carleson", r.carleson.label()},
      {"moments", r.moments.label()},
      {"norm", r.norm.label()},
      {"compactness", r.compactness ? ordered_json(r.compactness->label()) : ordered_json(nullptr)},
  };
  j["fitted_slopes"] = {
      {"carleson", number(r.carleson.fitted_slope)},
      {"moments", number(r.moments.fitted_slope)},
      {"norm", number(r.norm.fitted_slope)},
      {"compactness", r.compactness ? number(r.compactness->fitted_slope) : ordered_json(nullptr)},
  };
  j["evidence"] = {
      {"carleson", evidence(r.carleson)},
      {"moments", evidence(r.moments)},
      {"norm", evidence(r.norm)},
      {"compactness", r.compactness ? evidence(*r.compactness) : ordered_json(nullptr)},
  };
  j["agreement"] = {
      {"boundedness", r.bounded_agree},
      {"compactness", r.compact_agree ? ordered_json(*r.compact_agree) : ordered_json(nullptr)},
  };
  j["warnings"] = r.warnings;
  return j;
}

void csv_rows(std::ostream& out, const EquivalenceReport& r, const Verdict& v) {
  for (const auto& e : v.evidence) {
    write_csv_row(out, {r.measure, format_number(r.alpha), format_number(r.beta), format_number(r.s),
                        to_string(v.engine), v.label(), format_number(v.fitted_slope),
                        format_number(e.parameter), format_number(e.ratio)});
  }
}

}  // namespace

void write_report_json(std::ostream& out, std::span<const EquivalenceReport> reports) {
  ordered_json doc;
  doc["entries"] = ordered_json::array();
  std::size_t falsified = 0;
  for (const auto& r : reports) {
    doc["entries"].push_back(entry(r));
    if (r.falsified()) ++falsified;
  }
  doc["summary"] = {{"entries", reports.size()}, {"falsified", falsified}, {"all_agree", falsified == 0}};
  out << doc.dump(2) << '\n';
}

void write_report_csv(std::ostream& out, std::span<const EquivalenceReport> reports) {
  write_csv_row(out, {"measure", "alpha", "beta", "s", "engine", "verdict", "fitted_slope", "parameter", "ratio"});
  for (const auto& r : reports) {
    csv_rows(out, r, r.carleson);
    csv_rows(out, r, r.moments);
    csv_rows(out, r, r.norm);
    if (r.compactness) csv_rows(out, r, *r.compactness);
  }
}

}  // namespace cesaro
