#pragma once

#include <string>
#include <vector>

#include "reslat/algebra.hpp"

namespace reslat {

enum class ClaimStatus { Pass, Fail, NotApplicable };

std::string to_string(ClaimStatus s);

struct ClaimResult {
    std::string id;
    std::string title;
    ClaimStatus status = ClaimStatus::NotApplicable;
    std::string detail;
};

/// Runs every structural claim applicable to the algebra and reports one
/// verdict per claim. Failures are data here; callers decide the exit code.
std::vector<ClaimResult> check_claims(const ResiduatedLattice& l);

bool any_failed(const std::vector<ClaimResult>& results);

} // namespace reslat
