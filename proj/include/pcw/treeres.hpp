#ifndef PCW_TREERES_HPP
#define PCW_TREERES_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pcw/core.hpp"
#include "pcw/maxres.hpp"

namespace pcw {

/// A tree-shaped resolution refutation stored in an arena. Internal
/// nodes are oriented: the left child contains the pivot positively.
struct TreeRefutation {
    struct Node {
        Clause clause;
        int pivot = 0;  // 0 for leaves
        int left = -1;
        int right = -1;
        bool leaf() const { return pivot == 0; }
    };
    std::vector<Node> nodes;
    int root = -1;

    int size() const { return static_cast<int>(nodes.size()); }
    const Node& at(int id) const { return nodes.at(id); }

    int add_leaf(const Clause& axiom);
    /// Adds a resolution node; swaps children into canonical
    /// orientation and checks the resolvent.
    int add_resolve(int pivot, int left, int right);

    /// Distinct axiom clauses in first-appearance (left-to-right) order.
    std::vector<Clause> axioms() const;

    /// Node invariants: orientation, resolvent equality, empty root.
    void validate() const;

    /// No variable is used as pivot twice on any root-leaf path.
    bool is_regular() const;
};

/// Rebuilds the refutation as a regular (and possibly smaller) one by
/// pruning repeated pivots along each branch; clauses are recomputed
/// bottom-up, dropping branches whose clause no longer mentions the
/// pivot.
TreeRefutation regularize(const TreeRefutation& t);

/// Lemma-style TreeRes -> MaxResW translation: for each axiom used at
/// several leaves, weakening steps at the branching nodes of its
/// leaf-to-root subtree split one copy into per-leaf disjoint
/// weakenings; then every resolution of the tree is replayed as a
/// MaxRes step. Output size is at most 2x the tree size. If `formula`
/// is given it becomes the initial multiset (axioms must occur in it);
/// otherwise the tree's own axiom set is used.
ProofLog simulate_treeres(const TreeRefutation& t,
                          const std::optional<ClauseMultiset>& formula = std::nullopt);

/// Builds a tree refutation DPLL-style: branch on a seeded choice of
/// variable from a shortest unsatisfied clause until a clause is
/// falsified, then read the refutation off the decision tree. The
/// result is regular. Throws if F is satisfiable.
TreeRefutation dpll_tree(const ClauseMultiset& f, std::uint64_t seed,
                         std::optional<int> node_cap = std::nullopt);

/// All tree refutations of F with at most max_nodes nodes (both
/// regular and irregular), up to max_count of them, by bottom-up
/// enumeration. Meant for tiny formulas.
std::vector<TreeRefutation> enumerate_tree_refutations(const ClauseMultiset& f,
                                                       int max_nodes,
                                                       size_t max_count);

/// S-expression format: leaves `(ax <lit>*)`, internal nodes
/// `(res <pivot> <left> <right>)`.
TreeRefutation read_tree(std::istream& in);
TreeRefutation read_tree_file(const std::string& path);
void write_tree(std::ostream& out, const TreeRefutation& t);
void write_tree_file(const std::string& path, const TreeRefutation& t);

}  // namespace pcw

#endif
