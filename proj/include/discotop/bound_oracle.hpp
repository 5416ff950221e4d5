#pragma once

#include <string>
#include <variant>
#include <vector>

#include "discotop/constants.hpp"

namespace disco {

// Nonembeddability scenarios the oracle can certify a bound for.
struct GeneralConf2 { int d = 1; };            // no equivariant pair map to S^{d-1}, assumed
struct HaefligerWeber { int n = 1; int d = 1; }; // n-complex with no embedding, d > 3(n+1)/2
struct ProjectivePowerOfTwo { int k = 1; };    // RP^{2^k} -> R^{2^{k+1}-1}
struct SphereToEuclidean { int k = 1; int d = 1; };   // S^k -> R^d, k >= d-1
struct EuclideanToEuclidean { int k_plus_1 = 2; int d = 1; }; // R^{k+1} -> R^d
struct VanKampenFlores { int d = 1; };         // sk_d(simplex on 2d+3 vertices) -> R^{2d}
struct Tverberg { int r = 2; int d = 1; };     // simplex -> R^d, r a prime power
struct TverbergKappaDelta { int r = 2; int d = 1; }; // delta/kappa ratio variant

using Scenario = std::variant<GeneralConf2, HaefligerWeber, ProjectivePowerOfTwo,
                              SphereToEuclidean, EuclideanToEuclidean, VanKampenFlores,
                              Tverberg, TverbergKappaDelta>;

enum class BoundedQuantity { alpha, alpha2, alpha_r, delta_over_kappa_r };

struct BoundCondition {
    std::string name;
    bool pass = false;
    bool assumed = false; // hypothesis supplied by the caller, not checked here
};

// Theorem-backed lower bound: value in radians (a ratio for the
// delta/kappa variant), the quantity bounded, a citation string, and the
// checked applicability conditions.
struct BoundReport {
    double bound = 0.0;
    bool exact_constant = true; // false when the bound rests on a lower estimate
    BoundedQuantity quantity = BoundedQuantity::alpha;
    std::string citation;
    std::vector<BoundCondition> conditions;
};

std::string quantity_name(BoundedQuantity q);

// Dispatches a scenario to its theorem. Throws InapplicableTheorem naming
// the failed condition when hypotheses are unmet.
BoundReport bound_oracle(const Scenario& s);

} // namespace disco
