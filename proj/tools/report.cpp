#include "report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace polyface::cli {

namespace {

constexpr const char* kHeader = "check,inputs,exact,estimate,stderr,target,zscore,pass";

void require_clean(const std::string& field) {
  if (field.find(',') != std::string::npos || field.find('\n') != std::string::npos)
    throw std::runtime_error("report field contains a separator: '" + field + "'");
}

}  // namespace

int Report::failures() const {
  int n = 0;
  for (const auto& row : rows) n += row.pass == "no";
  return n;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string render_csv(const Report& report) {
  std::ostringstream os;
  os << kHeader << "\n";
  for (const auto& r : report.rows) {
    for (const std::string* f :
         {&r.check, &r.inputs, &r.exact, &r.estimate, &r.std_error, &r.target, &r.zscore, &r.pass})
      require_clean(*f);
    os << r.check << ',' << r.inputs << ',' << r.exact << ',' << r.estimate << ','
       << r.std_error << ',' << r.target << ',' << r.zscore << ',' << r.pass << "\n";
  }
  return os.str();
}

Report parse_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != kHeader)
    throw std::runtime_error("report CSV: missing or unexpected header");
  Report report;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == ',') {
        fields.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    }
    if (fields.size() != 8) throw std::runtime_error("report CSV: bad row '" + line + "'");
    report.rows.push_back({fields[0], fields[1], fields[2], fields[3], fields[4], fields[5],
                           fields[6], fields[7]});
  }
  return report;
}

std::string render_json(const Report& report) {
  nlohmann::json doc;
  doc["command"] = report.command;
  nlohmann::json cfg = nlohmann::json::object();
  for (const auto& [key, value] : report.config) cfg[key] = value;
  doc["config"] = cfg;
  doc["rows"] = nlohmann::json::array();
  for (const auto& r : report.rows) {
    nlohmann::json row;
    row["check"] = r.check;
    row["inputs"] = r.inputs;
    if (!r.exact.empty()) row["exact"] = r.exact;
    if (!r.estimate.empty()) row["estimate"] = std::stod(r.estimate);
    if (!r.std_error.empty()) row["stderr"] = std::stod(r.std_error);
    if (!r.target.empty()) row["target"] = r.target;
    if (!r.zscore.empty()) row["zscore"] = std::stod(r.zscore);
    row["pass"] = r.pass;
    doc["rows"].push_back(std::move(row));
  }
  doc["seed"] = report.seed;
  doc["version"] = report.version;
  return doc.dump(2) + "\n";
}

}  // namespace polyface::cli
