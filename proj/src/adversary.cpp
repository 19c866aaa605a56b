#include "semisched/adversary.hpp"

#include <functional>

namespace semisched {

namespace {

using Node = AdversaryTree::Node;
using NodePtr = AdversaryTree::NodePtr;
using AdversaryMove = AdversaryTree::AdversaryMove;
using AlgorithmMove = AdversaryTree::AlgorithmMove;
using Leaf = AdversaryTree::Leaf;

void validate_node(const AdversaryTree& tree, const NodePtr& node,
                   std::vector<Rational>& revealed, Rational revealed_total) {
    if (!node) throw Error("adversary tree has a null node");
    if (const auto* adv = std::get_if<AdversaryMove>(&node->move)) {
        if (adv->options.empty())
            throw Error("adversary move with no options");
        for (const auto& option : adv->options) {
            if (!revealed.empty() && option.size > revealed.back())
                throw NotNonIncreasing("adversary reveals " + option.size.str() +
                                       " after " + revealed.back().str());
            if (!(option.size > Rational(0)))
                throw NonPositiveSize("adversary reveals non-positive size " +
                                      option.size.str());
            validate_node(tree, option.child, revealed, revealed_total);
        }
        return;
    }
    if (const auto* alg = std::get_if<AlgorithmMove>(&node->move)) {
        if (static_cast<int>(alg->children.size()) != tree.machines)
            throw Error("algorithm move has " +
                        std::to_string(alg->children.size()) + " children, need " +
                        std::to_string(tree.machines));
        revealed.push_back(alg->pending);
        for (const auto& child : alg->children)
            validate_node(tree, child, revealed, revealed_total + alg->pending);
        revealed.pop_back();
        return;
    }
    const auto& leaf = std::get<Leaf>(node->move);
    if (leaf.instance.machines() != tree.machines)
        throw Error("leaf instance machine count differs from family");
    if (leaf.instance.sizes() != revealed)
        throw Error("leaf instance does not match the sizes revealed on its path");
    if (revealed_total != tree.total)
        throw Error("path total " + revealed_total.str() +
                    " differs from family Sum " + tree.total.str());
}

struct Solver {
    const AdversaryTree& tree;
    RatioKind kind;
    std::uint64_t budget;

    Rational leaf_value(const Leaf& leaf, const std::vector<int>& assignment) const {
        const auto outcome = apply_assignment(leaf.instance, assignment);
        if (kind == RatioKind::VsLbFormula)
            return outcome.makespan / opt_lower_bound(leaf.instance);
        const auto ref = opt_exact(leaf.instance, budget);
        return competitive_ratio(outcome, ref, RatioKind::VsExact);
    }

    Rational solve(const NodePtr& node, std::vector<int>& assignment,
                   std::vector<PlayStep>* play) const {
        if (const auto* adv = std::get_if<AdversaryMove>(&node->move)) {
            const AdversaryMove::Option* best = nullptr;
            Rational best_value;
            std::vector<PlayStep> best_play;
            for (const auto& option : adv->options) {
                std::vector<PlayStep> child_play;
                const Rational v =
                    solve(option.child, assignment, play ? &child_play : nullptr);
                if (!best || v > best_value) {
                    best = &option;
                    best_value = v;
                    best_play = std::move(child_play);
                }
            }
            if (play) {
                play->push_back({PlayStep::Kind::Reveal, best->size, 0});
                play->insert(play->end(), best_play.begin(), best_play.end());
            }
            return best_value;
        }
        if (const auto* alg = std::get_if<AlgorithmMove>(&node->move)) {
            int best_machine = 0;
            Rational best_value;
            std::vector<PlayStep> best_play;
            for (std::size_t j = 0; j < alg->children.size(); ++j) {
                assignment.push_back(static_cast<int>(j) + 1);
                std::vector<PlayStep> child_play;
                const Rational v =
                    solve(alg->children[j], assignment, play ? &child_play : nullptr);
                assignment.pop_back();
                if (best_machine == 0 || v < best_value) {
                    best_machine = static_cast<int>(j) + 1;
                    best_value = v;
                    best_play = std::move(child_play);
                }
            }
            if (play) {
                play->push_back({PlayStep::Kind::Place, alg->pending, best_machine});
                play->insert(play->end(), best_play.begin(), best_play.end());
            }
            return best_value;
        }
        return leaf_value(std::get<Leaf>(node->move), assignment);
    }
};

NodePtr make_node(std::variant<AdversaryMove, AlgorithmMove, Leaf> move) {
    return std::make_shared<const Node>(Node{std::move(move)});
}

/// Builds the full alternating tree of a family whose adversary options
/// depend only on the revealed size prefix: options(prefix) lists the
/// possible next sizes, an empty list closes the path into a leaf.
NodePtr build_family(
    int machines, std::vector<Rational>& prefix,
    const std::function<std::vector<Rational>(const std::vector<Rational>&)>& options) {
    const auto sizes = options(prefix);
    if (sizes.empty())
        return make_node(Leaf{build_instance(machines, prefix)});
    AdversaryMove adv;
    for (const auto& size : sizes) {
        AlgorithmMove alg;
        alg.pending = size;
        prefix.push_back(size);
        const NodePtr continuation = build_family(machines, prefix, options);
        prefix.pop_back();
        // Machine choice does not change the family's future options, so
        // every child shares the same continuation subtree.
        alg.children.assign(static_cast<std::size_t>(machines), continuation);
        adv.options.push_back({size, make_node(std::move(alg))});
    }
    return make_node(std::move(adv));
}

AdversaryTree build_family_tree(
    int machines, Rational total,
    const std::function<std::vector<Rational>(const std::vector<Rational>&)>& options) {
    AdversaryTree tree;
    tree.machines = machines;
    tree.total = total;
    std::vector<Rational> prefix;
    tree.root = build_family(machines, prefix, options);
    return tree;
}

} // namespace

void validate_tree(const AdversaryTree& tree) {
    std::vector<Rational> revealed;
    validate_node(tree, tree.root, revealed, Rational(0));
}

Rational minimax_value(const AdversaryTree& tree, RatioKind kind,
                       std::uint64_t node_budget) {
    Solver solver{tree, kind, node_budget};
    std::vector<int> assignment;
    return solver.solve(tree.root, assignment, nullptr);
}

MinimaxResult minimax_solve(const AdversaryTree& tree, RatioKind kind,
                            std::uint64_t node_budget) {
    Solver solver{tree, kind, node_budget};
    std::vector<int> assignment;
    MinimaxResult result;
    result.value = solver.solve(tree.root, assignment, &result.principal_play);
    return result;
}

AdversaryTree theorem1_tree(const Rational& k) {
    if (!(k > Rational(6)))
        throw KOutOfRange("theorem1 family needs k > 6, got " + k.str());
    const Rational p1 = (k + Rational(3)) / Rational(3);
    const Rational equal_tail = (Rational(2) * k - Rational(3)) / Rational(6);
    const Rational third = k / Rational(3);
    const Rational third_minus = (k - Rational(3)) / Rational(3);
    return build_family_tree(
        2, k,
        [=](const std::vector<Rational>& prefix) -> std::vector<Rational> {
            switch (prefix.size()) {
                case 0: return {p1};
                // Either two equal closers or a k/3 step; p_3 is then forced
                // by the total.
                case 1: return {equal_tail, third};
                case 2: return {prefix[1] == equal_tail ? equal_tail : third_minus};
                default: return {};
            }
        });
}

AdversaryTree theorem2_tree(const Rational& k) {
    if (k < Rational(7))
        throw KOutOfRange("theorem2 family needs k >= 7, got " + k.str());
    const Rational p1 = Rational(12) * k / Rational(25);
    const Rational p2 = Rational(7) * k / Rational(25);
    const Rational p3 = Rational(6) * k / Rational(25);
    return build_family_tree(
        2, k,
        [=](const std::vector<Rational>& prefix) -> std::vector<Rational> {
            switch (prefix.size()) {
                case 0: return {p1};
                case 1: return {p2};
                case 2: return {p3};
                default: return {};
            }
        });
}

AdversaryTree theorem6_tree() {
    const Rational total(27);
    return build_family_tree(
        3, total,
        [](const std::vector<Rational>& prefix) -> std::vector<Rational> {
            switch (prefix.size()) {
                case 0:
                    return {Rational(9)};
                // Second job: the stacked-machines case uses 6, the
                // spread cases use 9, the four sigma continuations use 8.
                case 1:
                    return {Rational(9), Rational(8), Rational(6)};
                case 2: {
                    if (prefix[1] == Rational(9)) return {Rational(5)};
                    if (prefix[1] == Rational(8))
                        return {Rational(8), Rational(7), Rational(6), Rational(5)};
                    return {Rational(6)};
                }
                // Fourth job is forced by Sum = 27.
                case 3:
                    return {Rational(27) - prefix[0] - prefix[1] - prefix[2]};
                default:
                    return {};
            }
        });
}

} // namespace semisched
