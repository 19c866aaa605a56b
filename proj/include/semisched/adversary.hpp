#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "semisched/oracle.hpp"

namespace semisched {

/// Alternating adversary/algorithm game tree. Adversary nodes offer a set
/// of next-job sizes; algorithm nodes place the pending job on one of the m
/// machines; leaves hold the completed instance. Along every root-to-leaf
/// path the revealed sizes are non-increasing and total the family's Sum.
struct AdversaryTree {
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    struct AdversaryMove {
        struct Option {
            Rational size;
            NodePtr child;
        };
        std::vector<Option> options;
    };
    struct AlgorithmMove {
        Rational pending;
        std::vector<NodePtr> children;  // children[j] = pending job on machine j+1
    };
    struct Leaf {
        Instance instance;
    };
    struct Node {
        std::variant<AdversaryMove, AlgorithmMove, Leaf> move;
    };

    int machines = 2;
    Rational total;  // the family's declared Sum
    NodePtr root;
};

/// Structural checks: path sizes non-increasing, path totals equal to the
/// family Sum, every AlgorithmMove has exactly m children, every leaf
/// instance equals its revealed path. Throws on violation.
void validate_tree(const AdversaryTree& tree);

/// One step of an optimal line of play.
struct PlayStep {
    enum class Kind { Reveal, Place };
    Kind kind;
    Rational size;  // revealed size (Reveal) or pending size (Place)
    int machine;    // chosen machine (Place only)
};

struct MinimaxResult {
    Rational value;
    std::vector<PlayStep> principal_play;  // adversary maximizes, algorithm minimizes
};

/// Game value: leaves score the path-induced schedule's competitive ratio
/// against the chosen denominator; algorithm nodes take the child minimum,
/// adversary nodes the child maximum.
Rational minimax_value(const AdversaryTree& tree, RatioKind kind,
                       std::uint64_t node_budget = kDefaultNodeBudget);

MinimaxResult minimax_solve(const AdversaryTree& tree, RatioKind kind,
                            std::uint64_t node_budget = kDefaultNodeBudget);

/// Two-machine family with Sum = k (> 6): first job (k+3)/3, then either
/// p_2 = p_3 = (2k-3)/6 or p_2 = k/3, p_3 = (k-3)/3. Solved value is
/// 4/3 - 2/k against the lb formula. Throws KOutOfRange for k <= 6.
AdversaryTree theorem1_tree(const Rational& k);

/// Two-machine family with Sum = k (>= 7): sizes 12k/25, 7k/25, 6k/25.
/// Solved value against the lb formula is 26/25. Throws KOutOfRange for
/// k < 7.
AdversaryTree theorem2_tree(const Rational& k);

/// Three-machine family with Sum = 27: first job 9, then the published case
/// continuations (second job 6, 8 or 9, third job per case, fourth forced).
AdversaryTree theorem6_tree();

} // namespace semisched
