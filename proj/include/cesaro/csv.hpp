#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cesaro {

/// Shortest round-trip representation, '.' decimal separator, locale independent.
std::string format_number(double x);

/// Shortest round-trip representation without exponent (plain decimal literal).
std::string format_decimal(double x);

/// Writes one CSV row terminated by LF.
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace cesaro
