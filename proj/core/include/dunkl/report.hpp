#pragma once

#include <map>
#include <string>
#include <vector>

namespace dunkl {

enum class Status { pass, fail, inconclusive };
const char* to_string(Status s);

struct CheckResult {
  std::string name;
  // label of the identity or lemma being exercised
  std::string anchor;
  Status status = Status::inconclusive;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
  std::map<std::string, double> constants;
  // measured is a wall time; dropped from JSON written without timing
  bool timing = false;

  bool passed() const { return status == Status::pass; }
};

// pass when measured <= threshold (NaN fails)
CheckResult check_le(std::string name, std::string anchor, double measured, double threshold,
                     std::string detail = {});
// pass when measured >= threshold
CheckResult check_ge(std::string name, std::string anchor, double measured, double threshold,
                     std::string detail = {});

class VerificationReport {
 public:
  explicit VerificationReport(std::string suite = "dunkl") : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  const std::map<std::string, std::string>& provenance() const { return provenance_; }

  CheckResult& add(CheckResult c);
  void append(const VerificationReport& other);
  void set_provenance(const std::string& key, const std::string& value) { provenance_[key] = value; }
  void set_wall_time(double seconds) { wall_time_ = seconds; }
  double wall_time() const { return wall_time_; }

  bool all_passed() const;
  std::size_t count(Status s) const;
  // Keys are emitted in insertion order; include_timing=false drops wall time.
  std::string to_json(bool include_timing = true, int indent = 2) const;

 private:
  std::string suite_;
  std::vector<CheckResult> checks_;
  std::map<std::string, std::string> provenance_;
  double wall_time_ = 0.0;
};

}  // namespace dunkl
