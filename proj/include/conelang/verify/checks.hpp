// checks.hpp -- audit plus the property checks registered for a construction
#pragma once

#include "conelang/cones/registry.hpp"
#include "conelang/verify/audit.hpp"

namespace conelang::verify {

/// Balancing is checked on words up to this length at most.
inline constexpr std::size_t kBalancingMaxLen = 10;

/// audit_cone, then "oracle_agreement" and "oracle_coverage" when the
/// construction has a closed-form oracle and "balancing" when it is an
/// embedded cone. Throws InvalidParameter if the construction is not a cone.
VerificationReport verify_construction(const cones::Built& built, const AuditConfig& cfg);

} // namespace conelang::verify
