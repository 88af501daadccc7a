#include "dunkl/report.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

namespace dunkl {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

CheckResult check_le(std::string name, std::string anchor, double measured, double threshold, std::string detail) {
  CheckResult c{std::move(name), std::move(anchor), Status::fail, measured, threshold, std::move(detail), {}};
  if (measured <= threshold) c.status = Status::pass;
  return c;
}

CheckResult check_ge(std::string name, std::string anchor, double measured, double threshold, std::string detail) {
  CheckResult c{std::move(name), std::move(anchor), Status::fail, measured, threshold, std::move(detail), {}};
  if (measured >= threshold) c.status = Status::pass;
  return c;
}

CheckResult& VerificationReport::add(CheckResult c) {
  checks_.push_back(std::move(c));
  return checks_.back();
}

void VerificationReport::append(const VerificationReport& other) {
  for (const auto& c : other.checks_) checks_.push_back(c);
  for (const auto& [k, v] : other.provenance_) provenance_.emplace(k, v);
  wall_time_ += other.wall_time_;
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks_)
    if (c.status != Status::pass) return false;
  return true;
}

std::size_t VerificationReport::count(Status s) const {
  std::size_t n = 0;
  for (const auto& c : checks_) n += c.status == s;
  return n;
}

namespace {
nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}
}  // namespace

std::string VerificationReport::to_json(bool include_timing, int indent) const {
  nlohmann::ordered_json j;
  j["suite"] = suite_;
  j["passed"] = count(Status::pass);
  j["failed"] = count(Status::fail);
  j["inconclusive"] = count(Status::inconclusive);
  nlohmann::ordered_json prov = nlohmann::ordered_json::object();
  for (const auto& [k, v] : provenance_) prov[k] = v;
  j["provenance"] = prov;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json r;
    r["name"] = c.name;
    r["anchor"] = c.anchor;
    r["status"] = to_string(c.status);
    if (c.timing && !include_timing)
      r["measured"] = "omitted";
    else
      r["measured"] = number(c.measured);
    r["threshold"] = number(c.threshold);
    if (!c.detail.empty()) r["detail"] = c.detail;
    if (!c.constants.empty()) {
      nlohmann::ordered_json k = nlohmann::ordered_json::object();
      for (const auto& [name, v] : c.constants) k[name] = number(v);
      r["constants"] = k;
    }
    arr.push_back(std::move(r));
  }
  j["checks"] = arr;
  if (include_timing) j["wall_time_s"] = wall_time_;
  return j.dump(indent);
}

}  // namespace dunkl
