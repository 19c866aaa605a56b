#include "semisched/enumerate.hpp"

#include <algorithm>

namespace semisched {

std::string to_string(PatternFilter filter) {
    switch (filter) {
        case PatternFilter::I1Only: return "i1";
        case PatternFilter::I2Only: return "i2";
        case PatternFilter::AnyDecr: return "decr";
    }
    return "?";
}

PatternFilter parse_pattern_filter(std::string_view name) {
    if (name == "i1") return PatternFilter::I1Only;
    if (name == "i2") return PatternFilter::I2Only;
    if (name == "decr") return PatternFilter::AnyDecr;
    throw ParseError("unknown pattern filter '" + std::string(name) + "'");
}

void EnumerationDomain::validate() const {
    if (machines < 2) throw InvalidDomain("domain needs machines >= 2");
    if (n_min < 1 || n_max < n_min)
        throw InvalidDomain("domain needs 1 <= n_min <= n_max");
    if (!sum_max && filter != PatternFilter::I1Only)
        throw InvalidDomain("domain needs sum_max unless the filter is i1");
    if (!sum_max && (size_min || last_min_fraction))
        throw InvalidDomain("size scopes need a summed domain");
    if (sum_max && *sum_max < n_min)
        throw InvalidDomain("sum_max " + std::to_string(*sum_max) +
                            " admits no sequence of " + std::to_string(n_min) +
                            " positive integers");
    if (size_cap && *size_cap < 1) throw InvalidDomain("size_cap must be >= 1");
    if (size_min && *size_min < 1) throw InvalidDomain("size_min must be >= 1");
    if (last_min_fraction && !(*last_min_fraction > Rational(0)))
        throw InvalidDomain("last_min_fraction must be positive");
}

std::string EnumerationDomain::describe() const {
    std::string s = "m=" + std::to_string(machines) + " n=[" +
                    std::to_string(n_min) + "," + std::to_string(n_max) +
                    "] pattern=" + to_string(filter);
    if (sum_max) s += " sum<=" + std::to_string(*sum_max);
    if (size_cap) s += " size<=" + std::to_string(*size_cap);
    if (size_min) s += " size>=" + std::to_string(*size_min);
    if (last_min_fraction) s += " pn>=" + last_min_fraction->str() + "*sum";
    if (!sum_max && filter == PatternFilter::I1Only) s += " (unit sizes)";
    return s;
}

std::vector<Rational> gen_i1(int n, const Rational& x) {
    return std::vector<Rational>(static_cast<std::size_t>(n), x);
}

namespace {

bool matches(const std::vector<long long>& parts, PatternFilter filter) {
    switch (filter) {
        case PatternFilter::AnyDecr:
            return true;
        case PatternFilter::I1Only:
            return std::all_of(parts.begin(), parts.end(),
                               [&](long long p) { return p == parts.front(); });
        case PatternFilter::I2Only:
            for (std::size_t i = 0; i + 1 < parts.size(); ++i)
                if (parts[i + 1] >= parts[i]) return false;
            return true;
    }
    return false;
}

// Partitions of `remaining` into exactly `slots` parts, each in
// [min_part, max_part], emitted in descending lexicographic order.
void emit_partitions(long long remaining, int slots, long long max_part,
                     long long min_part, std::vector<long long>& parts,
                     const std::function<void(const std::vector<long long>&)>& fn) {
    if (slots == 1) {
        if (remaining >= min_part && remaining <= max_part) {
            parts.push_back(remaining);
            fn(parts);
            parts.pop_back();
        }
        return;
    }
    // First part leaves room for the later slots, and later parts cannot
    // exceed it, so it is at least ceil(remaining / slots).
    const long long hi = std::min(max_part, remaining - (slots - 1) * min_part);
    const long long lo = std::max(min_part, (remaining + slots - 1) / slots);
    for (long long first = hi; first >= lo; --first) {
        parts.push_back(first);
        emit_partitions(remaining - first, slots - 1, first, min_part, parts, fn);
        parts.pop_back();
    }
}

} // namespace

void for_each_size_vector(
    const EnumerationDomain& domain,
    const std::function<void(const std::vector<long long>&)>& fn) {
    domain.validate();
    if (!domain.sum_max) {
        // Unit-size I1 family: one representative per n.
        for (int n = domain.n_min; n <= domain.n_max; ++n)
            fn(std::vector<long long>(static_cast<std::size_t>(n), 1));
        return;
    }
    const long long min_part = domain.size_min.value_or(1);
    for (int n = domain.n_min; n <= domain.n_max; ++n) {
        for (long long sum = n * min_part; sum <= *domain.sum_max; ++sum) {
            std::vector<long long> parts;
            parts.reserve(static_cast<std::size_t>(n));
            const long long cap =
                domain.size_cap ? std::min(*domain.size_cap, sum) : sum;
            emit_partitions(sum, n, cap, min_part, parts,
                            [&](const std::vector<long long>& p) {
                                if (!matches(p, domain.filter)) return;
                                if (domain.last_min_fraction &&
                                    Rational(p.back()) <
                                        *domain.last_min_fraction * Rational(sum))
                                    return;
                                fn(p);
                            });
        }
    }
}

void for_each_instance(const EnumerationDomain& domain,
                       const std::function<void(const Instance&)>& fn) {
    for_each_size_vector(domain, [&](const std::vector<long long>& parts) {
        std::vector<Rational> sizes;
        sizes.reserve(parts.size());
        for (const long long p : parts) sizes.emplace_back(p);
        fn(build_instance(domain.machines, std::move(sizes)));
    });
}

std::vector<Instance> enumerate_instances(const EnumerationDomain& domain) {
    std::vector<Instance> out;
    for_each_instance(domain, [&](const Instance& inst) { out.push_back(inst); });
    return out;
}

} // namespace semisched
