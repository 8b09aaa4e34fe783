#include "pcw/core.hpp"

#include <sstream>
#include <thread>

namespace pcw {

std::string Clause::to_string() const {
    if (lits_.empty()) return "<empty>";
    std::ostringstream os;
    for (size_t i = 0; i < lits_.size(); ++i) {
        if (i) os << ' ';
        os << lits_[i];
    }
    return os.str();
}

std::string Cube::to_string() const {
    if (lits_.empty()) return "<all>";
    std::ostringstream os;
    for (size_t i = 0; i < lits_.size(); ++i) {
        if (i) os << ' ';
        os << lits_[i];
    }
    return os.str();
}

Clause resolve_standard(const Clause& c1, const Clause& c2, int pivot) {
    if (pivot < 1) throw DomainError("pivot must be a variable index");
    if (!c1.contains(pivot))
        throw InvalidStepError("first antecedent lacks positive pivot");
    if (!c2.contains(-pivot))
        throw InvalidStepError("second antecedent lacks negative pivot");
    return merge(c1.without(pivot), c2.without(-pivot));
}

bool eval_clause(const Clause& c, const Assignment& a) {
    if (c.max_var() > a.num_vars)
        throw DomainError("clause variable outside assignment range");
    for (Lit l : c.lits())
        if (a.satisfies(l)) return true;
    return false;
}

long long viol(const ClauseMultiset& f, const Assignment& a) {
    if (f.num_vars > a.num_vars)
        throw DomainError("assignment too short for formula");
    long long count = 0;
    for (const auto& c : f.clauses)
        if (!eval_clause(c, a)) ++count;
    return count;
}

Cube falsifying_cube(const Clause& c) {
    if (c.is_tautology())
        throw DomainError("tautology has no falsifying cube");
    std::vector<Lit> fixed;
    fixed.reserve(c.lits().size());
    for (Lit l : c.lits()) fixed.push_back(-l);
    return Cube(std::move(fixed));
}

long long cube_hits(const CubeMultiset& g, const Assignment& a) {
    long long count = 0;
    for (const auto& c : g.cubes)
        if (c.contains(a)) ++count;
    return count;
}

ClauseMultiset restrict_formula(const ClauseMultiset& f, const Cube& rho) {
    ClauseMultiset out(f.num_vars);
    for (const auto& c : f.clauses) {
        bool satisfied = false;
        std::vector<Lit> kept;
        for (Lit l : c.lits()) {
            auto v = rho.value(lit_var(l));
            if (!v.has_value()) {
                kept.push_back(l);
            } else if (*v != lit_negative(l)) {
                satisfied = true;
                break;
            }
            // falsified literal: dropped
        }
        if (!satisfied) out.add(Clause(std::move(kept)));
    }
    return out;
}

void parallel_for(std::uint64_t total, int jobs,
                  const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || total < 2048) {
        fn(0, total);
        return;
    }
    std::uint64_t n = static_cast<std::uint64_t>(jobs);
    std::uint64_t chunk = (total + n - 1) / n;
    std::vector<std::thread> workers;
    for (std::uint64_t k = 0; k < n; ++k) {
        std::uint64_t lo = k * chunk;
        std::uint64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& w : workers) w.join();
}

}  // namespace pcw
