#include "pcw/maxres.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>

#include "json.hpp"

namespace pcw {

std::string Verdict::to_json() const {
    nlohmann::json j;
    j["pass"] = pass;
    j["mode"] = mode;
    if (witness) j["witness"] = witness->to_string();
    if (step) j["step"] = *step;
    if (samples) j["samples"] = *samples;
    if (seed) j["seed"] = *seed;
    if (detail) j["detail"] = *detail;
    return j.dump();
}

ProofState::ProofState(const ClauseMultiset& initial)
    : num_vars_(initial.num_vars) {
    occs_.reserve(initial.clauses.size());
    for (const auto& c : initial.clauses) occs_.push_back(c);
}

bool ProofState::live(int occ) const {
    return occ >= 1 && occ <= static_cast<int>(occs_.size()) &&
           occs_[occ - 1].has_value();
}

const Clause& ProofState::clause(int occ) const {
    if (!live(occ)) throw InvalidStepError("dead or out-of-range occurrence " +
                                           std::to_string(occ));
    return *occs_[occ - 1];
}

std::vector<int> ProofState::live_occurrences() const {
    std::vector<int> out;
    for (size_t k = 0; k < occs_.size(); ++k)
        if (occs_[k]) out.push_back(static_cast<int>(k) + 1);
    return out;
}

ClauseMultiset ProofState::to_multiset() const {
    ClauseMultiset f(num_vars_);
    for (const auto& c : occs_)
        if (c) f.add(*c);
    return f;
}

bool ProofState::contains_empty_clause() const {
    for (const auto& c : occs_)
        if (c && c->empty()) return true;
    return false;
}

int ProofState::take(int occ) {
    if (!live(occ)) throw InvalidStepError("dead or out-of-range occurrence " +
                                           std::to_string(occ));
    return occ;
}

int ProofState::add(const Clause& c, StepResult& r) {
    occs_.push_back(c);
    int id = static_cast<int>(occs_.size());
    r.added.push_back(id);
    r.added_clauses.push_back(c);
    return id;
}

ProofState::StepResult ProofState::apply_resolve(int i, int j, int pivot) {
    if (pivot < 1 || pivot > num_vars_)
        throw InvalidStepError("pivot out of range");
    if (i == j) throw InvalidStepError("antecedents must be distinct occurrences");
    const Clause c1 = clause(take(i));
    const Clause c2 = clause(take(j));
    if (!c1.contains(pivot))
        throw InvalidStepError("occurrence " + std::to_string(i) +
                               " lacks positive pivot " + std::to_string(pivot));
    if (!c2.contains(-pivot))
        throw InvalidStepError("occurrence " + std::to_string(j) +
                               " lacks negative pivot " + std::to_string(pivot));

    const Clause a = c1.without(pivot);
    const Clause b = c2.without(-pivot);

    StepResult r;
    r.removed_clauses = {c1, c2};
    occs_[i - 1].reset();
    occs_[j - 1].reset();

    Clause resolvent = merge(a, b);
    if (!resolvent.is_tautology()) r.resolvent = add(resolvent, r);

    // Disjoint weakenings of x|A over B\A and of ~x|B over A\B, in
    // canonical literal order; tautologous consequents are dropped.
    auto ladder = [&](Lit pivot_lit, const Clause& base, const Clause& other) {
        std::vector<Lit> fresh;
        for (Lit l : other.lits())
            if (!base.contains(l)) fresh.push_back(l);
        Clause acc = base.with(pivot_lit);
        for (Lit l : fresh) {
            Clause w = acc.with(-l);
            if (!w.is_tautology()) add(w, r);
            acc = acc.with(l);
        }
    };
    ladder(pivot, a, b);
    ladder(-pivot, b, a);
    return r;
}

ProofState::StepResult ProofState::apply_weaken(int i, int v) {
    if (v < 1 || v > num_vars_)
        throw InvalidStepError("weakening variable out of range");
    const Clause c = clause(take(i));
    if (c.contains_var(v))
        throw InvalidStepError("clause already mentions weakening variable " +
                               std::to_string(v));
    StepResult r;
    r.removed_clauses = {c};
    occs_[i - 1].reset();
    add(c.with(v), r);
    add(c.with(-v), r);
    return r;
}

ProofState::StepResult ProofState::apply(const MaxResStep& step) {
    if (step.kind == MaxResStep::Kind::Resolve)
        return apply_resolve(step.occ_i, step.occ_j, step.var);
    return apply_weaken(step.occ_i, step.var);
}

ReplayResult replay(const ProofLog& log) {
    ProofState state(log.initial);
    for (size_t k = 0; k < log.steps.size(); ++k) {
        try {
            state.apply(log.steps[k]);
        } catch (const InvalidStepError& e) {
            throw InvalidStepError("step " + std::to_string(k + 1) + ": " +
                                   e.what());
        }
    }
    ReplayResult r;
    r.refuted = state.contains_empty_clause();
    r.final = state.to_multiset();
    r.step_count = log.steps.size();
    return r;
}

std::vector<StepDelta> replay_deltas(const ProofLog& log) {
    ProofState state(log.initial);
    std::vector<StepDelta> deltas;
    deltas.reserve(log.steps.size());
    for (size_t k = 0; k < log.steps.size(); ++k) {
        try {
            auto r = state.apply(log.steps[k]);
            deltas.push_back({std::move(r.removed_clauses),
                              std::move(r.added_clauses)});
        } catch (const InvalidStepError& e) {
            throw InvalidStepError("step " + std::to_string(k + 1) + ": " +
                                   e.what());
        }
    }
    return deltas;
}

namespace {

bool delta_balanced_at(const StepDelta& d, const Assignment& a) {
    long long removed = 0, added = 0;
    for (const auto& c : d.removed)
        if (!eval_clause(c, a)) ++removed;
    for (const auto& c : d.added)
        if (!eval_clause(c, a)) ++added;
    return removed == added;
}

}  // namespace

Verdict check_viol_deltas(int num_vars, const std::vector<StepDelta>& deltas,
                          const CheckMode& mode, int jobs) {
    if (mode.kind == CheckMode::Kind::Exhaustive) {
        if (num_vars > 62)
            throw DomainError("exhaustive check infeasible for this size");
        std::uint64_t total = std::uint64_t{1} << num_vars;
        for (size_t k = 0; k < deltas.size(); ++k) {
            const auto& d = deltas[k];
            std::atomic<std::uint64_t> bad{UINT64_MAX};
            parallel_for(total, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
                for (std::uint64_t idx = lo; idx < hi; ++idx) {
                    if (!delta_balanced_at(d, Assignment::from_index(num_vars, idx))) {
                        std::uint64_t cur = bad.load();
                        while (idx < cur && !bad.compare_exchange_weak(cur, idx)) {
                        }
                        return;
                    }
                }
            });
            if (bad.load() != UINT64_MAX) {
                auto v = Verdict::fail("exhaustive",
                                       Assignment::from_index(num_vars, bad.load()));
                v.step = static_cast<int>(k) + 1;
                return v;
            }
        }
        return Verdict::ok("exhaustive");
    }
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<std::uint64_t> dist(
        0, (std::uint64_t{1} << num_vars) - 1);
    for (size_t k = 0; k < deltas.size(); ++k) {
        for (std::uint64_t s = 0; s < mode.samples; ++s) {
            auto a = Assignment::from_index(num_vars, dist(rng));
            if (!delta_balanced_at(deltas[k], a)) {
                auto v = Verdict::fail("sampled", a);
                v.step = static_cast<int>(k) + 1;
                v.samples = mode.samples;
                v.seed = mode.seed;
                return v;
            }
        }
    }
    auto v = Verdict::ok("sampled");
    v.samples = mode.samples;
    v.seed = mode.seed;
    return v;
}

Verdict check_viol_invariant(const ProofLog& log, const CheckMode& mode,
                             int jobs) {
    return check_viol_deltas(log.initial.num_vars, replay_deltas(log), mode,
                             jobs);
}

ProofLog read_proof_log(std::istream& in,
                        const std::optional<ClauseMultiset>& formula) {
    ProofLog log;
    bool have_formula = formula.has_value();
    if (have_formula) log.initial = *formula;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "f") {
            std::string path;
            if (!(ls >> path))
                throw ParseError("line " + std::to_string(lineno) +
                                 ": malformed formula header");
            log.formula_path = path;
            continue;
        }
        if (tag == "r") {
            int i, j, pivot;
            if (!(ls >> i >> j >> pivot))
                throw ParseError("line " + std::to_string(lineno) +
                                 ": malformed resolve step");
            log.steps.push_back(MaxResStep::resolve(i, j, pivot));
        } else if (tag == "w") {
            int i, v;
            if (!(ls >> i >> v))
                throw ParseError("line " + std::to_string(lineno) +
                                 ": malformed weaken step");
            log.steps.push_back(MaxResStep::weaken(i, v));
        } else {
            throw ParseError("line " + std::to_string(lineno) +
                             ": unknown step tag '" + tag + "'");
        }
        std::string rest;
        if (ls >> rest)
            throw ParseError("line " + std::to_string(lineno) +
                             ": trailing tokens");
    }
    return log;
}

ProofLog read_proof_log_file(const std::string& path,
                             const std::optional<ClauseMultiset>& formula) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return read_proof_log(in, formula);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_proof_log(std::ostream& out, const ProofLog& log,
                     const std::optional<std::string>& formula_path,
                     const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << '\n';
    if (formula_path) out << "f " << *formula_path << '\n';
    else if (log.formula_path) out << "f " << *log.formula_path << '\n';
    for (const auto& s : log.steps) {
        if (s.kind == MaxResStep::Kind::Resolve)
            out << "r " << s.occ_i << ' ' << s.occ_j << ' ' << s.var << '\n';
        else
            out << "w " << s.occ_i << ' ' << s.var << '\n';
    }
}

void write_proof_log_file(const std::string& path, const ProofLog& log,
                          const std::optional<std::string>& formula_path,
                          const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    write_proof_log(out, log, formula_path, comments);
}

}  // namespace pcw
