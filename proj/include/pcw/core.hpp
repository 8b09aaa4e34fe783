#ifndef PCW_CORE_HPP
#define PCW_CORE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcw {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct InvalidStepError : Error {
    using Error::Error;
};

/// Literals use the DIMACS convention: +v is the positive literal of
/// variable v (1-based), -v its negation.
using Lit = int;

inline int lit_var(Lit l) { return l < 0 ? -l : l; }
inline bool lit_negative(Lit l) { return l < 0; }
inline Lit lit_negate(Lit l) { return -l; }

/// Canonical literal order: variable index ascending, positive before
/// negative on the same variable.
inline bool lit_less(Lit a, Lit b) {
    int va = lit_var(a), vb = lit_var(b);
    if (va != vb) return va < vb;
    return a > b;  // +v before -v
}

/// A clause as a duplicate-free, canonically sorted set of literals.
/// Tautologies (v and -v both present) are representable; callers that
/// cannot handle them must check is_tautology().
class Clause {
public:
    Clause() = default;
    explicit Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
        for (Lit l : lits_)
            if (l == 0) throw DomainError("clause literal 0");
        std::sort(lits_.begin(), lits_.end(), lit_less);
        lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
    }

    const std::vector<Lit>& lits() const { return lits_; }
    int width() const { return static_cast<int>(lits_.size()); }
    bool empty() const { return lits_.empty(); }

    bool is_tautology() const {
        for (size_t i = 0; i + 1 < lits_.size(); ++i)
            if (lit_var(lits_[i]) == lit_var(lits_[i + 1])) return true;
        return false;
    }

    bool contains(Lit l) const {
        return std::binary_search(lits_.begin(), lits_.end(), l, lit_less);
    }
    bool contains_var(int v) const { return contains(v) || contains(-v); }

    int max_var() const {
        int m = 0;
        for (Lit l : lits_) m = std::max(m, lit_var(l));
        return m;
    }

    /// Clause with literal l removed (exact match); no-op if absent.
    Clause without(Lit l) const {
        std::vector<Lit> r;
        r.reserve(lits_.size());
        for (Lit x : lits_)
            if (x != l) r.push_back(x);
        return Clause(std::move(r));
    }

    friend Clause merge(const Clause& a, const Clause& b) {
        std::vector<Lit> r = a.lits_;
        r.insert(r.end(), b.lits_.begin(), b.lits_.end());
        return Clause(std::move(r));
    }

    Clause with(Lit l) const {
        std::vector<Lit> r = lits_;
        r.push_back(l);
        return Clause(std::move(r));
    }

    bool operator==(const Clause& o) const { return lits_ == o.lits_; }
    bool operator<(const Clause& o) const {
        return std::lexicographical_compare(lits_.begin(), lits_.end(),
                                            o.lits_.begin(), o.lits_.end(),
                                            lit_less);
    }

    std::string to_string() const;

private:
    std::vector<Lit> lits_;
};

/// The standard resolvent of c1 (containing +pivot) and c2 (containing
/// -pivot): duplicates merge silently, result may be a tautology.
Clause resolve_standard(const Clause& c1, const Clause& c2, int pivot);

/// A CNF as a multiset of clauses. Occurrence order is preserved
/// (multiplicity = repeated entries); num_vars is carried explicitly so
/// the space of total assignments is well defined.
struct ClauseMultiset {
    int num_vars = 0;
    std::vector<Clause> clauses;

    ClauseMultiset() = default;
    explicit ClauseMultiset(int n) : num_vars(n) {
        if (n < 0) throw DomainError("negative num_vars");
    }

    void add(const Clause& c) {
        if (c.max_var() > num_vars)
            throw DomainError("clause variable exceeds num_vars");
        clauses.push_back(c);
    }

    size_t size() const { return clauses.size(); }

    int width() const {
        int w = 0;
        for (const auto& c : clauses) w = std::max(w, c.width());
        return w;
    }

    /// Canonical multiset equality (order-insensitive).
    bool same_multiset(const ClauseMultiset& o) const {
        if (num_vars != o.num_vars || clauses.size() != o.clauses.size())
            return false;
        auto a = clauses, b = o.clauses;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }
};

/// A total assignment to variables 1..num_vars, packed into a word.
/// Index order is lexicographic on (x1,...,xn): x1 is the most
/// significant bit, so index 0 is all-zero and enumeration by
/// increasing index is deterministic.
struct Assignment {
    int num_vars = 0;
    std::uint64_t bits = 0;

    static Assignment from_index(int n, std::uint64_t idx) {
        if (n < 0 || n > 62) throw DomainError("assignment size out of range");
        return Assignment{n, idx};
    }

    bool value(int var) const {
        if (var < 1 || var > num_vars)
            throw DomainError("variable out of assignment range");
        return (bits >> (num_vars - var)) & 1u;
    }

    bool satisfies(Lit l) const { return value(lit_var(l)) != lit_negative(l); }

    std::uint64_t index() const { return bits; }

    std::string to_string() const {
        std::string s(num_vars, '0');
        for (int v = 1; v <= num_vars; ++v)
            if (value(v)) s[v - 1] = '1';
        return s;
    }

    bool operator==(const Assignment&) const = default;
};

/// A subcube: a partial assignment stored as a conjunction of literals
/// (+v fixes v=1, -v fixes v=0), sorted by variable, one per variable.
class Cube {
public:
    Cube() = default;
    explicit Cube(std::vector<Lit> fixed) : lits_(std::move(fixed)) {
        for (Lit l : lits_)
            if (l == 0) throw DomainError("cube literal 0");
        std::sort(lits_.begin(), lits_.end(), lit_less);
        lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
        for (size_t i = 0; i + 1 < lits_.size(); ++i)
            if (lit_var(lits_[i]) == lit_var(lits_[i + 1]))
                throw DomainError("cube fixes a variable twice");
    }

    const std::vector<Lit>& literals() const { return lits_; }
    int width() const { return static_cast<int>(lits_.size()); }
    bool empty() const { return lits_.empty(); }

    std::optional<bool> value(int var) const {
        for (Lit l : lits_)
            if (lit_var(l) == var) return !lit_negative(l);
        return std::nullopt;
    }

    bool contains(const Assignment& a) const {
        for (Lit l : lits_)
            if (!a.satisfies(l)) return false;
        return true;
    }

    int max_var() const {
        int m = 0;
        for (Lit l : lits_) m = std::max(m, lit_var(l));
        return m;
    }

    bool operator==(const Cube& o) const { return lits_ == o.lits_; }
    bool operator<(const Cube& o) const {
        return std::lexicographical_compare(lits_.begin(), lits_.end(),
                                            o.lits_.begin(), o.lits_.end(),
                                            lit_less);
    }

    std::string to_string() const;

private:
    std::vector<Lit> lits_;
};

/// A multiset of subcubes; size counts multiplicity, width is the
/// widest cube (the degree in the algebraic reading).
struct CubeMultiset {
    int num_vars = 0;
    std::vector<Cube> cubes;

    CubeMultiset() = default;
    explicit CubeMultiset(int n) : num_vars(n) {
        if (n < 0) throw DomainError("negative num_vars");
    }

    void add(const Cube& c, int multiplicity = 1) {
        if (c.max_var() > num_vars)
            throw DomainError("cube variable exceeds num_vars");
        if (multiplicity < 1) throw DomainError("multiplicity < 1");
        for (int i = 0; i < multiplicity; ++i) cubes.push_back(c);
    }

    size_t size() const { return cubes.size(); }

    int width() const {
        int w = 0;
        for (const auto& c : cubes) w = std::max(w, c.width());
        return w;
    }

    bool same_multiset(const CubeMultiset& o) const {
        if (num_vars != o.num_vars || cubes.size() != o.cubes.size())
            return false;
        auto a = cubes, b = o.cubes;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }
};

/// True iff some literal of c is satisfied by a.
bool eval_clause(const Clause& c, const Assignment& a);

/// Number of clauses of F (with multiplicity) falsified by a.
long long viol(const ClauseMultiset& f, const Assignment& a);

/// The cube of assignments falsifying c; rejects tautologies, which
/// have no falsifying assignment.
Cube falsifying_cube(const Clause& c);

/// Number of cubes of G (with multiplicity) containing a.
long long cube_hits(const CubeMultiset& g, const Assignment& a);

/// Restriction by a partial assignment: satisfied clauses are dropped,
/// falsified literals removed, an empty clause is kept if produced.
/// num_vars is unchanged; restricted clauses simply no longer mention
/// the fixed variables.
ClauseMultiset restrict_formula(const ClauseMultiset& f, const Cube& rho);

/// Runs fn(lo, hi) over [0, total) split across `jobs` threads.
/// Partitions are contiguous so reductions stay deterministic.
void parallel_for(std::uint64_t total, int jobs,
                  const std::function<void(std::uint64_t, std::uint64_t)>& fn);

}  // namespace pcw

#endif
