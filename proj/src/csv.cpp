#include "cesaro/csv.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <system_error>

namespace cesaro {
namespace {

std::string to_chars_string(double x, std::chars_format fmt) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[512];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, fmt);
  if (ec != std::errc()) return std::to_string(x);
  return std::string(buf, ptr);
}

}  // namespace

std::string format_number(double x) { return to_chars_string(x, std::chars_format::general); }

std::string format_decimal(double x) { return to_chars_string(x, std::chars_format::fixed); }

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << fields[i];
  }
  out << '\n';
}

}  // namespace cesaro
