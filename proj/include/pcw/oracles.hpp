#ifndef PCW_ORACLES_HPP
#define PCW_ORACLES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "pcw/core.hpp"
#include "pcw/families.hpp"
#include "pcw/subcubesums.hpp"
#include "pcw/treeres.hpp"

namespace pcw {

/// Exact arithmetic only: all LP verdicts and certificates are
/// arbitrary-precision rationals.
using Rational = boost::multiprecision::cpp_rational;

/// All cubes over n variables of width exactly w, supports and values
/// in lexicographic order.
std::vector<Cube> cubes_of_width(int n, int w);
/// Strata 0..d concatenated.
std::vector<Cube> cubes_up_to_width(int n, int d);

struct JuntaWitness {
    std::vector<std::pair<Cube, Rational>> terms;  // nonzero coefficients
};

/// Farkas certificate of infeasibility: a dual vector z (one entry per
/// assignment) with z.t > 0 and z.col(C) <= 0 for every admissible
/// cube column C.
struct FarkasCertificate {
    int degree = 0;
    std::vector<Rational> dual;
};

struct JuntaFeasibility {
    bool feasible = false;
    std::optional<JuntaWitness> witness;
    std::optional<FarkasCertificate> infeasibility;
};

/// Exact-rational LP feasibility of: nonnegative coefficients over all
/// cubes of width <= d whose hit-counts sum to `target` pointwise.
/// Solved by a phase-1 simplex with Bland's rule.
JuntaFeasibility conical_junta_feasible(const PseudoFunction& target, int d);

/// Independent check of a Farkas certificate against the full column
/// set of degree <= d.
bool verify_farkas(const PseudoFunction& target, const FarkasCertificate& cert);

/// Recomputes the witness sum and compares with the target.
bool verify_junta_witness(const PseudoFunction& target, const JuntaWitness& w);

struct IntegralSearchResult {
    enum class Status { Feasible, Infeasible, Exhausted };
    Status status = Status::Infeasible;
    CubeMultiset witness;
    std::uint64_t nodes_used = 0;
};

/// Depth-first search for a nonnegative-integer cube combination of
/// width <= d summing to `target`; node-limited, never silently
/// truncated (budget exhaustion is an explicit status).
IntegralSearchResult integral_junta_search(const PseudoFunction& target, int d,
                                           std::uint64_t node_limit = 1'000'000);

struct ScsDegreeResult {
    int junta_degree = 0;
    std::optional<int> integral_degree;
    bool integral_budget_exhausted = false;
    /// Infeasibility certificate at junta_degree - 1 (absent when the
    /// degree is 0), making the reported degree independently checkable.
    std::optional<FarkasCertificate> lower_bound_certificate;
};

/// Least conical-junta degree of viol_F - 1, and the least integral
/// degree if the bounded search settles it.
ScsDegreeResult scs_min_degree(const ClauseMultiset& f,
                               std::uint64_t node_limit = 1'000'000);

struct ResWidthResult {
    bool refutable = false;
    /// Max clause width in the refutation, axioms included.
    int width = 0;
};

/// Least w such that resolution restricted to clauses of width <= w
/// (axioms included) derives the empty clause, by saturation.
ResWidthResult min_res_width(const ClauseMultiset& f);

/// Minimum pebble cost of reaching `target` with free pebbles on
/// `pebbled`, counting only pebbles outside that set. The game allows
/// placement when all predecessors are covered, sliding a pebble from
/// a predecessor onto the target, and removal; cost is the maximum
/// number of costed pebbles on the board at once. The sliding move is
/// what puts pyramids at h+1.
int bpeb(const Dag& g, const std::vector<int>& pebbled, int target);

/// Costs for every vertex at once (same game, shared search).
std::vector<int> bpeb_all(const Dag& g, const std::vector<int>& pebbled);

/// bpeb(empty -> sink).
int bpeb_sink(const Dag& g);

struct TseitinCensus {
    std::map<long long, long long> level_sizes;  // viol value -> #assignments
    bool all_odd = false;
    bool closed_form_checked = false;  // connected graph with odd charge
    bool closed_form_holds = false;    // |X_i| = C(n,i) 2^(m-n+1)
};

/// Exhaustive census of the viol level sets of tseitin(g), edges <= 20.
TseitinCensus tseitin_level_census(const ChargedGraph& g, int jobs = 1);

// --- Prover-Delayer game -------------------------------------------------

struct GameMove {
    int var = 0;
    char answer = '0';  // '0', '1', or '*'
    bool value = false; // the resulting assignment bit
};

struct GameTranscript {
    std::vector<GameMove> moves;
    int points = 0;          // number of '*' answers
    Clause falsified;        // clause ending the game
};

class Prover {
public:
    virtual ~Prover() = default;
    /// Next variable to query; must be unassigned.
    virtual int next_query(const std::vector<std::optional<bool>>& a) = 0;
    /// Value chosen when the Delayer answers '*'.
    virtual bool choose(int var, const std::vector<std::optional<bool>>& a) = 0;
};

class Delayer {
public:
    virtual ~Delayer() = default;
    /// Concrete answer, or nullopt for '*'.
    virtual std::optional<bool> answer(int var) = 0;
    /// Reports every settled assignment (own answers included).
    virtual void notify(int /*var*/, bool /*value*/) {}
};

/// Plays until some clause of f is falsified by the partial
/// assignment. Throws on protocol violations (prover querying an
/// assigned variable, or running past its strategy).
GameTranscript prover_delayer_play(const ClauseMultiset& f, Prover& prover,
                                   Delayer& delayer);

/// Walks a tree refutation root-to-leaves, querying pivots; on '*' it
/// picks the branch with the smaller subtree.
class TreeProver : public Prover {
public:
    explicit TreeProver(const TreeRefutation& t);
    int next_query(const std::vector<std::optional<bool>>& a) override;
    bool choose(int var, const std::vector<std::optional<bool>>& a) override;

private:
    void descend(const std::vector<std::optional<bool>>& a);
    const TreeRefutation& tree_;
    std::vector<int> subtree_size_;
    int node_;
};

/// Always answers the same bit; never scores.
class ConstantDelayer : public Delayer {
public:
    explicit ConstantDelayer(bool value) : value_(value) {}
    std::optional<bool> answer(int) override { return value_; }

private:
    bool value_;
};

/// Always defers; scores on every query.
class StarDelayer : public Delayer {
public:
    std::optional<bool> answer(int) override { return std::nullopt; }
};

/// Adversary for the 1-query game on a pebbling-with-hints formula:
/// keeps a distinguished vertex w and a 0-path from w to the sink, and
/// answers by comparing pebble costs, so the number of 1-answers stays
/// at least bpeb(G) - bpeb(R -> w).
class PebbleAdversary {
public:
    explicit PebbleAdversary(const Dag& g);
    /// Answer for vertex v (0-based); true = 1.
    bool answer(int v);
    const std::set<int>& ones() const { return ones_; }

private:
    bool in_subgraph(int v) const;
    std::vector<int> path_avoiding_ones(int from, int to) const;

    const Dag& g_;
    std::set<int> ones_;          // R: vertices answered 1
    std::vector<bool> on_path_;   // pi: the current 0-path
    int w_;
};

/// The composed-formula Delayer: queries the inner adversary on first
/// touch of a variable block; a 0 is answered 0 on both copies, a 1
/// yields '*' and the second copy is answered to keep the OR at 1.
class ComposedOrDelayer : public Delayer {
public:
    explicit ComposedOrDelayer(const Dag& g);
    std::optional<bool> answer(int var) override;
    void notify(int var, bool value) override;

private:
    PebbleAdversary inner_;
    std::vector<int> inner_value_;          // -1 unknown / 0 / 1 per vertex
    std::vector<std::optional<bool>> outer_;
};

}  // namespace pcw

#endif
