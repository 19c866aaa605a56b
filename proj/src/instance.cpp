#include "semisched/instance.hpp"

#include <algorithm>
#include <numeric>

namespace semisched {

std::string to_string(PatternClass pattern) {
    switch (pattern) {
        case PatternClass::I1: return "I1";
        case PatternClass::I2: return "I2";
        case PatternClass::MixedDecr: return "MixedDecr";
    }
    return "?";
}

PatternClass classify_pattern(std::span<const Rational> sizes) {
    if (sizes.empty()) throw EmptySequence("size sequence must be non-empty");
    const Rational zero(0);
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (!(sizes[i] > zero))
            throw NonPositiveSize("size p_" + std::to_string(i + 1) + " = " +
                                  sizes[i].str() + " is not positive");
        if (i + 1 < sizes.size() && sizes[i + 1] > sizes[i])
            throw NotNonIncreasing("p_" + std::to_string(i + 2) + " = " +
                                   sizes[i + 1].str() + " exceeds p_" +
                                   std::to_string(i + 1) + " = " + sizes[i].str());
    }
    bool all_equal = true;
    bool strictly_decreasing = true;
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
        if (sizes[i + 1] != sizes[i]) all_equal = false;
        if (!(sizes[i + 1] < sizes[i])) strictly_decreasing = false;
    }
    if (all_equal) return PatternClass::I1;
    if (strictly_decreasing) return PatternClass::I2;
    return PatternClass::MixedDecr;
}

Instance build_instance(int machines, std::vector<Rational> sizes) {
    if (machines < 2)
        throw MachineCountTooSmall("need at least 2 machines, got " +
                                   std::to_string(machines));
    const PatternClass pattern = classify_pattern(sizes);
    Rational sum(0);
    for (const auto& p : sizes) sum += p;
    const Rational pmax = sizes.front();
    return Instance(machines, std::move(sizes), sum, pmax, pattern);
}

bool instance_less(const Instance& a, const Instance& b) {
    if (a.jobs() != b.jobs()) return a.jobs() < b.jobs();
    if (a.sizes() != b.sizes())
        return std::lexicographical_compare(a.sizes().begin(), a.sizes().end(),
                                            b.sizes().begin(), b.sizes().end());
    return a.machines() < b.machines();
}

} // namespace semisched
