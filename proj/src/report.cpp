#include "su3sb/report.hpp"

#include <algorithm>

namespace su3sb {

void VerificationReport::add_pass(std::string id, Json params) {
  records_.push_back({std::move(id), std::move(params), true, std::nullopt});
}

void VerificationReport::add_fail(std::string id, Json params, Json counterexample) {
  records_.push_back({std::move(id), std::move(params), false, std::move(counterexample)});
}

void VerificationReport::merge(const VerificationReport& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

bool VerificationReport::passed() const {
  return std::all_of(records_.begin(), records_.end(), [](const CheckRecord& r) { return r.pass; });
}

std::size_t VerificationReport::failure_count() const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [](const CheckRecord& r) { return !r.pass; }));
}

Json VerificationReport::to_json() const {
  std::vector<const CheckRecord*> sorted;
  sorted.reserve(records_.size());
  for (const auto& r : records_) {
    sorted.push_back(&r);
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CheckRecord* x, const CheckRecord* y) { return x->id < y->id; });

  Json checks = Json::array();
  for (const auto* r : sorted) {
    Json entry;
    entry["id"] = r->id;
    entry["params"] = r->params;
    entry["pass"] = r->pass;
    if (r->counterexample) {
      entry["counterexample"] = *r->counterexample;
    }
    checks.push_back(std::move(entry));
  }

  Json out;
  out["format_version"] = kFormatVersion;
  out["suite"] = suite_;
  out["status"] = passed() ? "pass" : "fail";
  out["summary"] = {{"checks", records_.size()},
                    {"passed", records_.size() - failure_count()},
                    {"failed", failure_count()}};
  out["checks"] = std::move(checks);
  out["wall_time_s"] = wall_time_s_;
  return out;
}

}  // namespace su3sb
