#ifndef PCW_MAXRES_HPP
#define PCW_MAXRES_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pcw/core.hpp"
#include "pcw/verdict.hpp"

namespace pcw {

/// One proof step. Occurrence ids are 1-based: the initial multiset
/// occupies 1..m in file order, and every added consequent gets the
/// next id in order of addition (resolvent first, then the weakenings
/// of the positive-pivot antecedent, then those of the negative one;
/// for a weaken step, A|v then A|~v). Tautologous consequents are
/// dropped and consume no id.
struct MaxResStep {
    enum class Kind { Resolve, Weaken };
    Kind kind;
    int occ_i = 0;   // resolve: contains +pivot; weaken: the clause
    int occ_j = 0;   // resolve only: contains -pivot
    int var = 0;     // pivot / weakening variable

    static MaxResStep resolve(int i, int j, int pivot) {
        return {Kind::Resolve, i, j, pivot};
    }
    static MaxResStep weaken(int occ, int v) { return {Kind::Weaken, occ, 0, v}; }
};

struct ProofLog {
    ClauseMultiset initial;
    std::vector<MaxResStep> steps;
    std::optional<std::string> formula_path;  // header, if read from a file
};

/// The evolving clause multiset of a MaxRes derivation. Consumed
/// occurrences are tombstoned so ids stay stable.
class ProofState {
public:
    explicit ProofState(const ClauseMultiset& initial);

    int num_vars() const { return num_vars_; }
    bool live(int occ) const;
    const Clause& clause(int occ) const;
    int next_id() const { return static_cast<int>(occs_.size()) + 1; }

    /// Ids of live occurrences, ascending.
    std::vector<int> live_occurrences() const;
    ClauseMultiset to_multiset() const;
    bool contains_empty_clause() const;

    struct StepResult {
        std::vector<int> added;                 // ids, in order of addition
        std::optional<int> resolvent;           // id of the standard resolvent
        std::vector<Clause> removed_clauses;    // for viol deltas
        std::vector<Clause> added_clauses;
    };

    /// MaxSAT resolution: consumes occurrences i (containing +pivot)
    /// and j (containing -pivot); adds the standard resolvent and the
    /// disjoint weakenings of both antecedents, skipping tautologies.
    StepResult apply_resolve(int i, int j, int pivot);

    /// Weakening: replaces occurrence i by A|v and A|~v.
    StepResult apply_weaken(int i, int v);

    StepResult apply(const MaxResStep& step);

private:
    int take(int occ);  // validates and tombstones
    int add(const Clause& c, StepResult& r);

    int num_vars_;
    std::vector<std::optional<Clause>> occs_;
};

struct ReplayResult {
    ClauseMultiset final;
    bool refuted = false;
    size_t step_count = 0;
};

/// Applies all steps; throws InvalidStepError (with the step index in
/// the message) on a malformed step.
ReplayResult replay(const ProofLog& log);

/// The per-step clause turnover of a replay, used by the viol checker
/// and by mutation tests.
struct StepDelta {
    std::vector<Clause> removed;
    std::vector<Clause> added;
};
std::vector<StepDelta> replay_deltas(const ProofLog& log);

/// Checking mode for the pointwise-viol invariant and certificate
/// checks: exhaustive up to a variable bound, else seeded sampling.
struct CheckMode {
    enum class Kind { Exhaustive, Sampled };
    Kind kind = Kind::Exhaustive;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;

    static CheckMode exhaustive() { return {}; }
    static CheckMode sampled(std::uint64_t k, std::uint64_t seed) {
        return {Kind::Sampled, k, seed};
    }
    /// Exhaustive when n <= limit, else sampled(k, seed).
    static CheckMode auto_mode(int n, int limit, std::uint64_t k, std::uint64_t seed) {
        return n <= limit ? exhaustive() : sampled(k, seed);
    }
};

inline constexpr int kDefaultExhaustiveLimit = 24;

/// Confirms viol is pointwise invariant across every step of the log.
/// Works on the step deltas: removed and added clauses must be
/// falsified equally often at every checked assignment.
Verdict check_viol_invariant(const ProofLog& log, const CheckMode& mode,
                             int jobs = 1);

/// Same check on raw deltas (the mutation hook for tests).
Verdict check_viol_deltas(int num_vars, const std::vector<StepDelta>& deltas,
                          const CheckMode& mode, int jobs = 1);

/// Text proof-log format: optional `f <path>` header naming the DIMACS
/// file of the initial multiset, then one step per line,
/// `r <occ_i> <occ_j> <pivot>` or `w <occ> <var>`.
ProofLog read_proof_log(std::istream& in,
                        const std::optional<ClauseMultiset>& formula);
ProofLog read_proof_log_file(const std::string& path,
                             const std::optional<ClauseMultiset>& formula = std::nullopt);
void write_proof_log(std::ostream& out, const ProofLog& log,
                     const std::optional<std::string>& formula_path = std::nullopt,
                     const std::vector<std::string>& comments = {});
void write_proof_log_file(const std::string& path, const ProofLog& log,
                          const std::optional<std::string>& formula_path = std::nullopt,
                          const std::vector<std::string>& comments = {});

}  // namespace pcw

#endif
