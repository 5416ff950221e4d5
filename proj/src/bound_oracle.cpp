#include "discotop/bound_oracle.hpp"

#include <cmath>

#include "discotop/errors.hpp"

namespace disco {

std::string quantity_name(BoundedQuantity q) {
    switch (q) {
    case BoundedQuantity::alpha: return "alpha";
    case BoundedQuantity::alpha2: return "alpha^(2)";
    case BoundedQuantity::alpha_r: return "alpha^(r)";
    case BoundedQuantity::delta_over_kappa_r: return "delta/kappa^(r)";
    }
    return "?";
}

namespace {

void require(BoundReport& rep, const std::string& name, bool ok) {
    rep.conditions.push_back({name, ok, false});
    if (!ok) throw InapplicableTheorem(name, "bound_oracle: condition failed: " + name);
}

void assume(BoundReport& rep, const std::string& name) {
    rep.conditions.push_back({name, true, true});
}

struct Dispatcher {
    BoundReport operator()(const GeneralConf2& s) const {
        BoundReport rep;
        rep.citation = "general-pair-configuration-bound";
        rep.quantity = BoundedQuantity::alpha;
        require(rep, "d >= 1", s.d >= 1);
        assume(rep, "no equivariant pair map to S^{d-1}");
        rep.bound = r_constant(s.d - 1);
        return rep;
    }
    BoundReport operator()(const HaefligerWeber& s) const {
        BoundReport rep;
        rep.citation = "quantified-haefliger-weber";
        rep.quantity = BoundedQuantity::alpha;
        require(rep, "n >= 1", s.n >= 1);
        require(rep, "2d > 3(n+1)", 2 * s.d > 3 * (s.n + 1));
        assume(rep, "no embedding of the n-complex into R^d");
        rep.bound = r_constant(s.d - 1);
        return rep;
    }
    BoundReport operator()(const ProjectivePowerOfTwo& s) const {
        BoundReport rep;
        rep.citation = "projective-space-power-of-two-bound";
        rep.quantity = BoundedQuantity::alpha;
        require(rep, "k >= 1", s.k >= 1);
        rep.bound = r_constant((1 << (s.k + 1)) - 2);
        return rep;
    }
    BoundReport operator()(const SphereToEuclidean& s) const {
        BoundReport rep;
        rep.citation = "sphere-to-euclidean-coindex-bound";
        rep.quantity = BoundedQuantity::alpha;
        require(rep, "d >= 1", s.d >= 1);
        require(rep, "k >= d-1", s.k >= s.d - 1);
        const ConstantValue c = c_constant(s.d - 1, s.k);
        rep.bound = c.exact ? *c.exact : c.lower;
        rep.exact_constant = c.exact.has_value();
        return rep;
    }
    BoundReport operator()(const EuclideanToEuclidean& s) const {
        BoundReport rep;
        rep.citation = "euclidean-injection-coindex-bound";
        rep.quantity = BoundedQuantity::alpha;
        require(rep, "d >= 1", s.d >= 1);
        require(rep, "k+1 >= d", s.k_plus_1 >= s.d);
        const ConstantValue c = c_constant(s.d - 1, s.k_plus_1 - 1);
        rep.bound = c.exact ? *c.exact : c.lower;
        rep.exact_constant = c.exact.has_value();
        return rep;
    }
    BoundReport operator()(const VanKampenFlores& s) const {
        BoundReport rep;
        rep.citation = "quantified-van-kampen-flores";
        rep.quantity = BoundedQuantity::alpha2;
        require(rep, "d >= 1", s.d >= 1);
        rep.bound = r_constant(2 * s.d - 1);
        return rep;
    }
    BoundReport operator()(const Tverberg& s) const {
        BoundReport rep;
        rep.citation = "quantified-topological-tverberg";
        rep.quantity = BoundedQuantity::alpha_r;
        require(rep, "d >= 1", s.d >= 1);
        require(rep, "r >= 2", s.r >= 2);
        require(rep, "r is a prime power", s.r >= 2 && is_prime_power(s.r));
        rep.bound = std::acos(-1.0 / (static_cast<double>(s.d) * (s.r - 1)));
        return rep;
    }
    BoundReport operator()(const TverbergKappaDelta& s) const {
        BoundReport rep;
        rep.citation = "tverberg-delta-kappa-corollary";
        rep.quantity = BoundedQuantity::delta_over_kappa_r;
        require(rep, "d >= 1", s.d >= 1);
        require(rep, "r >= 2", s.r >= 2);
        require(rep, "r is a prime power", s.r >= 2 && is_prime_power(s.r));
        rep.bound = std::sqrt(1.0 + 1.0 / (static_cast<double>(s.d) * (s.r - 1)));
        return rep;
    }
};

} // namespace

BoundReport bound_oracle(const Scenario& s) { return std::visit(Dispatcher{}, s); }

} // namespace disco
