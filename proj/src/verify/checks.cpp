#include "conelang/verify/checks.hpp"

#include "conelang/errors.hpp"

namespace conelang::verify {

VerificationReport verify_construction(const cones::Built& built, const AuditConfig& cfg) {
    if (!built.cone)
        throw InvalidParameter(built.name + " builds a machine, not a cone");
    const auto& cone = *built.cone;
    cfg.validate();
    auto pos = collect_positive(cone, cfg.max_word_len);
    std::size_t long_words = built.witness ? add_witnesses(cone, pos, cfg.ball_radius, built.witness) : 0;
    auto report = audit_cone(cone, pos, cfg);
    if (built.witness)
        report.property_results["long_word_coverage"] = {
            Status::Pass, std::to_string(long_words) + " ball elements covered by accepted words beyond the budget"};
    if (built.oracle) {
        auto cmp = compare_with_oracle(cone, pos, built.oracle, cfg.ball_radius);
        report.property_results["oracle_agreement"] =
            cmp.agrees() ? PropertyResult{Status::Pass, ""}
                         : PropertyResult{Status::Fail, std::to_string(cmp.mismatch_count) +
                                                            " accepted elements not positive, first: " +
                                                            cmp.hard_mismatches.front()};
        report.property_results["oracle_coverage"] =
            cmp.missing_count == 0
                ? PropertyResult{Status::Pass, ""}
                : PropertyResult{Status::Inconclusive, std::to_string(cmp.missing_count) +
                                                           " positive ball elements without a word, first: " +
                                                           cmp.missing.front()};
    }
    if (built.embedded && built.inner_tau)
        report.property_results["balancing"] =
            check_balancing(*built.embedded, built.inner_tau, std::min(cfg.max_word_len, kBalancingMaxLen));
    return report;
}

} // namespace conelang::verify
