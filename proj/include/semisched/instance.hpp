#pragma once

#include <span>
#include <string>
#include <vector>

#include "semisched/rational.hpp"

namespace semisched {

/// Classification of a non-increasing size sequence. I1 = all sizes equal,
/// I2 = strictly decreasing, MixedDecr = non-increasing but neither.
enum class PatternClass { I1, I2, MixedDecr };

std::string to_string(PatternClass pattern);

/// Validates the sequence (non-empty, positive, non-increasing) and returns
/// its pattern class.
PatternClass classify_pattern(std::span<const Rational> sizes);

/// An immutable scheduling instance: m identical machines and a
/// non-increasing positive job-size sequence, with Sum and p_max cached.
class Instance {
public:
    int machines() const { return machines_; }
    const std::vector<Rational>& sizes() const { return sizes_; }
    std::size_t jobs() const { return sizes_.size(); }
    const Rational& sum() const { return sum_; }
    const Rational& pmax() const { return pmax_; }
    PatternClass pattern() const { return pattern_; }

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.machines_ == b.machines_ && a.sizes_ == b.sizes_;
    }

    friend Instance build_instance(int machines, std::vector<Rational> sizes);

private:
    Instance(int machines, std::vector<Rational> sizes, Rational sum,
             Rational pmax, PatternClass pattern)
        : machines_(machines),
          sizes_(std::move(sizes)),
          sum_(sum),
          pmax_(pmax),
          pattern_(pattern) {}

    int machines_;
    std::vector<Rational> sizes_;
    Rational sum_;
    Rational pmax_;
    PatternClass pattern_;
};

/// Validates and constructs an Instance. Throws MachineCountTooSmall for
/// m < 2 and propagates classify_pattern's validation errors.
Instance build_instance(int machines, std::vector<Rational> sizes);

/// Total order used for deterministic witness tie-breaking: fewer jobs
/// first, then sizes lexicographically, then machine count.
bool instance_less(const Instance& a, const Instance& b);

} // namespace semisched
