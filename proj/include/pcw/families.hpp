#ifndef PCW_FAMILIES_HPP
#define PCW_FAMILIES_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "pcw/core.hpp"

namespace pcw {

/// A DAG given by predecessor lists; vertices 0..size-1. Pebbling
/// formulas additionally require a single sink.
struct Dag {
    std::vector<std::vector<int>> preds;
    int size() const { return static_cast<int>(preds.size()); }

    bool is_source(int v) const { return preds[v].empty(); }
    std::vector<int> sinks() const;
    int single_sink() const;  // throws unless exactly one sink

    /// True iff there is a directed path u -> ... -> v (u == v counts).
    bool reaches(int u, int v) const;

    /// Unordered pairs of incomparable vertices that appear together in
    /// some predecessor list, ordered by first discovery.
    std::vector<std::pair<int, int>> sibling_pairs() const;
};

/// Pyramid P_h: h+1 rows; row r (distance from the sink) has r+1
/// vertices; (r,i) has predecessors (r+1,i) and (r+1,i+1). Vertices are
/// numbered sources first, row by row toward the sink, left to right,
/// so the sink is the last vertex.
Dag pyramid(int h);

/// Vertex id of pyramid position (row r from sink, offset i).
int pyramid_vertex(int h, int r, int i);

/// An undirected multigraph with a 0/1 charge per vertex (parallel
/// edges allowed, self-loops rejected). Edge e gets variable e+1 in
/// edge-list order.
struct ChargedGraph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> charge;

    ChargedGraph(int n, std::vector<std::pair<int, int>> e, std::vector<int> b);

    int num_edges() const { return static_cast<int>(edges.size()); }
    int degree(int v) const;
    std::vector<int> incident_edges(int v) const;
    bool connected() const;
    int charge_sum_mod2() const;
};

ChargedGraph triangle_graph(const std::vector<int>& charge);
ChargedGraph complete_graph(int n, const std::vector<int>& charge);
ChargedGraph cycle_graph(int n, const std::vector<int>& charge);
ChargedGraph path_graph(int n, const std::vector<int>& charge);
/// Connected 3-regular graph on n vertices (n even, n >= 4): a cycle
/// plus a seed-chosen perfect matching avoiding cycle edges.
ChargedGraph cubic_graph(int n, std::uint64_t seed, const std::vector<int>& charge);

/// Bipartite carrier for subset cardinality formulas: |U| = |V| = n,
/// all degrees 4 except one degree-5 vertex per side.
struct BipartiteDegreeGraph {
    int n = 0;                                 // vertices per side
    std::vector<std::pair<int, int>> edges;    // (u, v), 0-based per side

    int num_edges() const { return static_cast<int>(edges.size()); }
    std::vector<int> left_incident(int u) const;
    std::vector<int> right_incident(int v) const;
    int left_degree(int u) const { return static_cast<int>(left_incident(u).size()); }
    int right_degree(int v) const { return static_cast<int>(right_incident(v).size()); }

    /// Checks the degree shape: all 4 except exactly one 5 per side.
    void validate() const;
};

/// Pigeonhole principle PHP_m: m+1 pigeons, m holes, x_{i,j} is
/// variable (i-1)*m + j (row-major). Pigeon clauses first, then hole
/// clauses grouped by hole.
ClauseMultiset php(int m);

/// The residual clause set PHP^delta_m over the same variables:
/// per-pigeon at-most-one ladders, one at-least-one clause per hole,
/// and per-hole at-most-two ladders.
ClauseMultiset php_delta(int m);

/// Tseitin contradiction: per vertex u of degree d, the 2^(d-1)
/// clauses forcing the parity of u's incident edge variables to equal
/// its charge. An isolated vertex with charge 1 yields the empty
/// clause.
ClauseMultiset tseitin(const ChargedGraph& g);

/// Pebbling formula with sibling hints: source units, one implication
/// clause per internal vertex, the negated sink unit, and a hint u|v
/// per sibling pair.
ClauseMultiset pebhint(const Dag& g);

enum class Gadget { OR2, XOR2 };

/// Composition F∘g: variable x becomes x1 = 2x-1, x2 = 2x, and each
/// clause expands into a block of clauses over the copies. The XOR2
/// expansion is the full parity CNF, whose clauses have pairwise
/// disjoint falsifying subcubes; the OR2 expansion keeps positive
/// literals as (x1|x2) and splits each negative literal into a choice
/// of one negated copy.
ClauseMultiset compose(const ClauseMultiset& f, Gadget g);

/// Subset cardinality formula: left vertex u contributes the clauses
/// |choose(E(u), floor(d/2)+1)| of positive edge literals, right
/// vertices the same with negated literals.
ClauseMultiset subset_cardinality(const BipartiteDegreeGraph& g);

/// 4-regular bipartite circulant plus one extra edge joining the two
/// designated degree-5 vertices (one per side); labels, the extra-edge
/// position, and the edge order are shuffled deterministically from
/// the seed. Requires n >= 5.
BipartiteDegreeGraph random_regular_bipartite(int n, std::uint64_t seed);

}  // namespace pcw

#endif
