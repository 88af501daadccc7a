#pragma once

#include <cstdint>
#include <optional>

#include "dunkl/report.hpp"

namespace dunkl {

struct VerifyConfig {
  // restricts every multiplicity list to this value (classical-reduction checks always use 0)
  std::optional<double> k;
  std::uint64_t seed = 42;
};

inline constexpr int criterion_count = 11;

const char* criterion_title(int n);
// Checks of acceptance criterion n (1-based). Throws std::out_of_range for other n.
VerificationReport verify_criterion(int n, const VerifyConfig& cfg = {});
VerificationReport verify_all(const VerifyConfig& cfg = {});

}  // namespace dunkl
