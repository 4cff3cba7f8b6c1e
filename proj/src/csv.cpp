#include "svddcap/csv.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "svddcap/text.hpp"

namespace svddcap {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open file for reading: " + path);
  }
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open file for writing: " + path);
  }
  return out;
}

}  // namespace

ProcessWindow read_window_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ValidationError("CSV input is empty, expected a header row");
  }
  std::vector<std::string> names;
  for (std::string_view field : split(trim(line), ',')) {
    const std::string_view name = trim(field);
    if (name.empty()) {
      throw ValidationError("CSV header contains an empty column name");
    }
    names.emplace_back(name);
  }
  const std::size_t q = names.size();

  std::vector<double> values;
  std::size_t rows = 0;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    const auto fields = split(body, ',');
    if (fields.size() != q) {
      std::ostringstream msg;
      msg << "CSV line " << line_no << " has " << fields.size() << " fields, expected " << q;
      throw ValidationError(msg.str());
    }
    for (std::string_view field : fields) {
      values.push_back(parse_double(field, "CSV line " + std::to_string(line_no)));
    }
    ++rows;
  }
  if (rows == 0) {
    throw ValidationError("CSV input has a header but no data rows");
  }
  Matrix data(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(q));
  for (std::size_t i = 0; i < values.size(); ++i) {
    data.data()[i] = values[i];
  }
  return ProcessWindow(std::move(data), std::move(names));
}

ProcessWindow read_window_csv(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_window_csv(in);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void write_window_csv(std::ostream& out, const ProcessWindow& window) {
  for (std::size_t j = 0; j < window.column_names.size(); ++j) {
    if (j) out << ',';
    out << window.column_names[j];
  }
  out << '\n';
  for (Eigen::Index i = 0; i < window.size(); ++i) {
    for (Eigen::Index j = 0; j < window.dimension(); ++j) {
      if (j) out << ',';
      out << format_double(window.observations(i, j));
    }
    out << '\n';
  }
}

void write_window_csv(const std::string& path, const ProcessWindow& window) {
  auto out = open_output(path);
  write_window_csv(out, window);
  if (!out) {
    throw IoError("failed while writing " + path);
  }
}

SpecLimits read_spec_limits(std::istream& in) {
  std::vector<std::string> names;
  std::vector<double> lsl;
  std::vector<double> usl;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    const auto fields = split(body, ',');
    if (fields.size() != 3) {
      std::ostringstream msg;
      msg << "spec limits line " << line_no << " must be 'name,lsl,usl'";
      throw ValidationError(msg.str());
    }
    const std::string_view name = trim(fields[0]);
    if (name.empty()) {
      throw ValidationError("spec limits line " + std::to_string(line_no) + " has an empty name");
    }
    names.emplace_back(name);
    lsl.push_back(parse_double(fields[1], "lsl on line " + std::to_string(line_no)));
    usl.push_back(parse_double(fields[2], "usl on line " + std::to_string(line_no)));
  }
  if (names.empty()) {
    throw ValidationError("spec limits file has no variables");
  }
  const Eigen::Index q = static_cast<Eigen::Index>(names.size());
  Vector lower(q), upper(q);
  for (Eigen::Index j = 0; j < q; ++j) {
    lower[j] = lsl[static_cast<std::size_t>(j)];
    upper[j] = usl[static_cast<std::size_t>(j)];
  }
  return SpecLimits(std::move(lower), std::move(upper), std::move(names));
}

SpecLimits read_spec_limits(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_spec_limits(in);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

}  // namespace svddcap
