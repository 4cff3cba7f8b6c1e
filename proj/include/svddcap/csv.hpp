#ifndef SVDDCAP_CSV_HPP
#define SVDDCAP_CSV_HPP

#include <iosfwd>
#include <string>

#include "svddcap/types.hpp"

namespace svddcap {

// Window CSV: first row is a header of column names, every following row
// holds one decimal numeral per column, comma-delimited, no missing values.

ProcessWindow read_window_csv(std::istream& in);
ProcessWindow read_window_csv(const std::string& path);

void write_window_csv(std::ostream& out, const ProcessWindow& window);
void write_window_csv(const std::string& path, const ProcessWindow& window);

// Specification limits file: one line per variable, `name,lsl,usl`.
// Blank lines are ignored.

SpecLimits read_spec_limits(std::istream& in);
SpecLimits read_spec_limits(const std::string& path);

}  // namespace svddcap

#endif  // SVDDCAP_CSV_HPP
