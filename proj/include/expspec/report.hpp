#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "expspec/certificates.hpp"

namespace expspec {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

/// One check: a measured value against a threshold. `citation` names the
/// mathematical statement being checked.
struct Record {
  std::string name;
  std::string citation;
  double value = 0.0;
  double threshold = 0.0;
  Comparator comparator = Comparator::LE;
  bool pass = false;
};

Record make_record(std::string name, std::string citation, double value, Comparator cmp,
                   double threshold);

struct Report {
  std::string command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<Record> records;
  nlohmann::ordered_json certificates = nlohmann::ordered_json::array();
  std::vector<std::string> deductions;
  std::vector<std::string> notes;

  /// true iff every record passes (and there is at least one record).
  bool overall_pass() const;
  void append(const Report& other);

  nlohmann::ordered_json to_json() const;
  /// name,value,comparator,threshold,pass,citation rows plus a final overall row.
  std::string csv_summary() const;
};

/// Finite doubles as numbers; NaN and infinities as the strings "nan", "inf", "-inf".
nlohmann::ordered_json json_number(double v);

}  // namespace expspec
