#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace disco {

// Input complex violates a structural invariant (downward closure, ∂∘∂ != 0,
// mismatched boundary shapes, ...).
struct MalformedComplex : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A sampled function identified two points it was required to separate.
// Carries the offending sample indices.
struct NotInjective : std::runtime_error {
    std::size_t first, second;
    NotInjective(std::size_t i, std::size_t j, const std::string& what)
        : std::runtime_error(what), first(i), second(j) {}
};

// A configuration tuple does not live in pairwise disjoint faces.
struct InvalidConfiguration : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A centered tuple collapsed to zero: the function is not almost r-injective
// on the sample. Carries the offending configuration.
struct NotAlmostRInjective : std::runtime_error {
    std::vector<std::size_t> config;
    NotAlmostRInjective(std::vector<std::size_t> cfg, const std::string& what)
        : std::runtime_error(what), config(std::move(cfg)) {}
};

// A witness construction failed its own verification scan.
struct ConstructionFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bound was requested outside the hypotheses of the backing theorem.
// `condition` names the check that failed.
struct InapplicableTheorem : std::runtime_error {
    std::string condition;
    InapplicableTheorem(std::string cond, const std::string& what)
        : std::runtime_error(what), condition(std::move(cond)) {}
};

} // namespace disco
