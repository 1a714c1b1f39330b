#pragma once

#include <optional>
#include <string>
#include <vector>

#include "su3sb/serialize.hpp"

namespace su3sb {

struct CheckRecord {
  std::string id;
  Json params = Json::object();
  bool pass = true;
  /// Present iff the check failed.
  std::optional<Json> counterexample;
};

/// Outcome of a verification suite. Overall status is pass iff every record passes.
class VerificationReport {
public:
  explicit VerificationReport(std::string suite = {}) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<CheckRecord>& records() const { return records_; }

  void add(CheckRecord record) { records_.push_back(std::move(record)); }
  void add_pass(std::string id, Json params = Json::object());
  void add_fail(std::string id, Json params, Json counterexample);
  void merge(const VerificationReport& other);

  bool passed() const;
  std::size_t failure_count() const;

  double wall_time_seconds() const { return wall_time_s_; }
  void set_wall_time_seconds(double seconds) { wall_time_s_ = seconds; }

  /// Records are emitted sorted by check id.
  Json to_json() const;

private:
  std::string suite_;
  std::vector<CheckRecord> records_;
  double wall_time_s_ = 0.0;
};

}  // namespace su3sb
