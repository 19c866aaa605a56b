#pragma once

#include <functional>
#include <optional>
#include <string>

#include "semisched/instance.hpp"

namespace semisched {

enum class PatternFilter { I1Only, I2Only, AnyDecr };

std::string to_string(PatternFilter filter);
PatternFilter parse_pattern_filter(std::string_view name);  // "i1", "i2", "decr"

/// A finite family of integer-size instances. For each n in [n_min, n_max]
/// the domain holds every non-increasing positive integer sequence with
/// total <= sum_max (and parts <= size_cap when set), filtered by pattern.
///
/// I1Only with no sum_max is the unit-size family: exactly one instance
/// [1,...,1] per n. Scale invariance of the fractional-threshold policies
/// makes that family representative of all equal-size instances.
struct EnumerationDomain {
    int machines = 2;
    int n_min = 1;
    int n_max = 1;
    std::optional<long long> sum_max;
    std::optional<long long> size_cap;
    PatternFilter filter = PatternFilter::AnyDecr;
    // Scope restrictions used when a bound carries a size precondition:
    // every size >= size_min, and/or smallest size >= fraction * Sum.
    std::optional<long long> size_min;
    std::optional<Rational> last_min_fraction;

    void validate() const;  // throws InvalidDomain
    std::string describe() const;
};

/// n copies of x.
std::vector<Rational> gen_i1(int n, const Rational& x);

/// Calls fn for every instance of the domain exactly once, in a fixed
/// deterministic order: n ascending, then sum ascending, then sequences in
/// descending lexicographic order.
void for_each_instance(const EnumerationDomain& domain,
                       const std::function<void(const Instance&)>& fn);

/// Integer size sequences only (the cheap form the auditor iterates).
void for_each_size_vector(const EnumerationDomain& domain,
                          const std::function<void(const std::vector<long long>&)>& fn);

std::vector<Instance> enumerate_instances(const EnumerationDomain& domain);

} // namespace semisched
