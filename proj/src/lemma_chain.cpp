#include "discotop/lemma_chain.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "discotop/errors.hpp"

namespace disco {

namespace {

double vec_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

} // namespace

LemmaChainReport verify_lemma_chain(const SampledFunction& f, int r, double rho) {
    f.validate();
    LemmaChainReport rep;
    const ConfigSample configs = conf_r_sample_exhaustive(f, r);
    rep.config_count = configs.tuples.size();

    // Centered tuples, their norms, and their normalizations.
    std::vector<std::vector<double>> centered(configs.tuples.size());
    std::vector<std::vector<double>> normalized(configs.tuples.size());
    std::vector<double> norms(configs.tuples.size());
    for (std::size_t i = 0; i < configs.tuples.size(); ++i) {
        const CenteredTuple ct = conf_r_map(f, configs.tuples[i]);
        centered[i] = ct.flattened();
        norms[i] = ct.norm();
        if (norms[i] <= 1e-12)
            throw NotAlmostRInjective(configs.tuples[i],
                                      "verify_lemma_chain: collapsed configuration");
        normalized[i] = centered[i];
        for (auto& c : normalized[i]) c /= norms[i];
    }

    // (a) normalization inequality on all tuple-value pairs.
    {
        LemmaCheck chk;
        chk.name = "normalization-distance-inequality";
        chk.tolerance = 1e-9;
        chk.pass = true;
        for (std::size_t i = 0; i < centered.size() && chk.pass; ++i)
            for (std::size_t j = i + 1; j < centered.size(); ++j) {
                const double lhs =
                    std::min(norms[i], norms[j]) * vec_dist(normalized[i], normalized[j]);
                const double rhs = vec_dist(centered[i], centered[j]);
                if (lhs > rhs + chk.tolerance) {
                    chk.pass = false;
                    chk.lhs = lhs;
                    chk.rhs = rhs;
                    std::ostringstream w;
                    w << "tuple pair (" << i << ", " << j << ")";
                    chk.witness = w.str();
                    break;
                }
            }
        rep.checks.push_back(chk);
    }

    // delta-hat of f over the domain.
    rep.delta_f = delta_hat(f, rho, CodomainMetric::euclidean, 1).value;

    // delta-hat of the centered-tuple map over the configuration sample, in
    // the flattened Euclidean metric, with exact pair-metric balls.
    {
        double worst = 0.0;
        for (std::size_t a = 0; a < configs.tuples.size(); ++a) {
            std::vector<std::size_t> ball;
            for (std::size_t b = 0; b < configs.tuples.size(); ++b)
                if (configs.pair_distance(f.domain, a, b) <= rho) ball.push_back(b);
            for (std::size_t x = 0; x < ball.size(); ++x)
                for (std::size_t y = x + 1; y < ball.size(); ++y)
                    worst = std::max(worst, vec_dist(centered[ball[x]], centered[ball[y]]));
        }
        rep.delta_conf = worst;
    }

    // (b) product-ball bound, exact at sample level.
    {
        LemmaCheck chk;
        chk.name = "centered-map-delta-bound";
        chk.lhs = rep.delta_conf;
        chk.rhs = std::sqrt(static_cast<double>(r)) * rep.delta_f;
        chk.pass = chk.lhs <= chk.rhs;
        if (!chk.pass) chk.witness = "delta-hat(Conf_r(f)) exceeded sqrt(r)*delta-hat(f)";
        rep.checks.push_back(chk);
    }

    // (c) kappa identity.
    rep.kappa_conf = std::numeric_limits<double>::infinity();
    for (double n : norms) rep.kappa_conf = std::min(rep.kappa_conf, n);
    if (norms.empty()) rep.kappa_conf = 0.0;
    rep.kappa_r_value = kappa_r(f, r, configs);
    {
        LemmaCheck chk;
        chk.name = "kappa-identity";
        chk.tolerance = 1e-9;
        chk.lhs = std::sqrt(2.0) * rep.kappa_conf;
        chk.rhs = std::sqrt(static_cast<double>(r)) * rep.kappa_r_value;
        chk.pass = std::fabs(chk.lhs - chk.rhs) <= chk.tolerance;
        if (!chk.pass) chk.witness = "sqrt(2)*kappa(Conf_r(f)) != sqrt(r)*kappa_r(f)";
        rep.checks.push_back(chk);
    }

    // (d) discretized chord bound.
    rep.alpha_r = alpha_r_hat(f, r, rho, &configs, 1).value;
    {
        LemmaCheck chk;
        chk.name = "delta-alpha-kappa-bound";
        chk.lhs = rep.delta_f;
        chk.rhs = std::sqrt(2.0) * std::sin(rep.alpha_r / 2.0) * rep.kappa_r_value;
        chk.pass = chk.lhs >= chk.rhs;
        if (!chk.pass) chk.witness = "delta-hat(f) below sqrt(2)*sin(alpha/2)*kappa_r";
        rep.checks.push_back(chk);
    }
    return rep;
}

} // namespace disco
