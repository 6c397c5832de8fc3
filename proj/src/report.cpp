#include "expspec/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace expspec {

namespace {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

nlohmann::ordered_json json_number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

Record make_record(std::string name, std::string citation, double value, Comparator cmp,
                   double threshold) {
  Record r{std::move(name), std::move(citation), value, threshold, cmp, false};
  r.pass = EvidenceBound{r.name, value, cmp, threshold}.pass();
  return r;
}

bool Report::overall_pass() const {
  return !records.empty() &&
         std::all_of(records.begin(), records.end(), [](const Record& r) { return r.pass; });
}

void Report::append(const Report& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
  for (const auto& c : other.certificates) certificates.push_back(c);
  deductions.insert(deductions.end(), other.deductions.begin(), other.deductions.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["tool"] = "expspec";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["config"] = config;
  nlohmann::ordered_json recs = nlohmann::ordered_json::array();
  for (const Record& r : records) {
    nlohmann::ordered_json rec;
    rec["name"] = r.name;
    rec["citation"] = r.citation;
    rec["value"] = json_number(r.value);
    rec["comparator"] = to_string(r.comparator);
    rec["threshold"] = json_number(r.threshold);
    rec["pass"] = r.pass;
    recs.push_back(std::move(rec));
  }
  j["records"] = recs;
  j["certificates"] = certificates;
  j["deductions"] = deductions;
  j["notes"] = notes;
  j["overall_pass"] = overall_pass();
  return j;
}

std::string Report::csv_summary() const {
  std::string out = "name,value,comparator,threshold,pass,citation\n";
  for (const Record& r : records) {
    out += csv_quote(r.name) + "," + format_double(r.value) + "," + to_string(r.comparator) + "," +
           format_double(r.threshold) + "," + (r.pass ? "PASS" : "FAIL") + "," +
           csv_quote(r.citation) + "\n";
  }
  out += std::string("overall,,,,") + (overall_pass() ? "PASS" : "FAIL") + ",\n";
  return out;
}

}  // namespace expspec
