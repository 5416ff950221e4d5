#include "discotop/sampled_function.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace disco {

void SampledFunction::validate() const {
    if (values.size() != domain.size())
        throw std::invalid_argument("sampled function: values/domain size mismatch");
    if (!(rho_dom > 0.0))
        throw std::invalid_argument("sampled function: rho_dom must be positive");
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i].size() != values[0].size())
            throw std::invalid_argument("sampled function: ragged value vectors");
    for (std::size_t h : hot_spots)
        if (h >= values.size())
            throw std::invalid_argument("sampled function: hot spot index out of range");
}

double CenteredTuple::norm() const {
    double s = 0.0;
    for (const auto& p : parts)
        for (double v : p) s += v * v;
    return std::sqrt(s);
}

std::vector<double> CenteredTuple::flattened() const {
    std::vector<double> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

double ConfigSample::pair_distance(const DomainSample& dom, std::size_t a, std::size_t b) const {
    double m = 0.0;
    const auto& ta = tuples[a];
    const auto& tb = tuples[b];
    for (std::size_t i = 0; i < ta.size(); ++i) {
        const double d = dom.distance(ta[i], tb[i]);
        if (d > m) m = d;
    }
    return m;
}

void ConfigSample::validate(const DomainSample& dom) const {
    for (const auto& t : tuples) {
        if (static_cast<int>(t.size()) != r)
            throw std::invalid_argument("config sample: tuple arity mismatch");
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j) {
                if (t[i] == t[j])
                    throw std::invalid_argument("config sample: repeated entry");
                if (disjoint_certified && !dom.carriers_disjoint(t[i], t[j]))
                    throw std::invalid_argument("config sample: carriers not disjoint");
            }
    }
    for (const auto& g : groups)
        for (std::size_t id : g)
            if (id >= tuples.size())
                throw std::invalid_argument("config sample: group index out of range");
}

void ConfigSample::write_csv(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    for (int i = 0; i < r; ++i) os << (i ? "," : "") << "i" << i;
    os << "\n";
    for (const auto& t : tuples) {
        for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
        os << "\n";
    }
}

} // namespace disco
