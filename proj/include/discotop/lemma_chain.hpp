#pragma once

#include <string>
#include <vector>

#include "discotop/estimators.hpp"

namespace disco {

struct LemmaCheck {
    std::string name;
    bool pass = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double tolerance = 0.0; // 0 = exact comparison
    std::string witness;    // failure detail, empty on pass
};

struct LemmaChainReport {
    std::vector<LemmaCheck> checks;
    double delta_f = 0.0;      // delta-hat of f over the domain sample
    double delta_conf = 0.0;   // delta-hat of the centered-tuple map over configs
    double alpha_r = 0.0;      // alpha-hat^(r) over the same configs
    double kappa_conf = 0.0;   // min tuple norm
    double kappa_r_value = 0.0;
    std::size_t config_count = 0;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Sample-level verification of the normalization/centering lemma chain, on
// one exhaustive configuration sample:
//  (a) min(|x|,|y|) * |x/|x| - y/|y|| <= |x - y| on all tuple-value pairs
//      (tolerance 1e-9);
//  (b) delta-hat(Conf_r(f)) <= sqrt(r) * delta-hat(f), exact;
//  (c) sqrt(2) * kappa(Conf_r(f)) = sqrt(r) * kappa^(r)(f) within 1e-9;
//  (d) delta-hat(f) >= sqrt(2) * sin(alpha-hat^(r)/2) * kappa^(r), exact.
LemmaChainReport verify_lemma_chain(const SampledFunction& f, int r, double rho);

} // namespace disco
