#include "pcw/witnesses.hpp"

#include <map>
#include <ostream>
#include <sstream>

namespace pcw {

ScsCertificate php_scs_proof(int m) {
    ScsCertificate cert;
    cert.formula = php(m);
    auto delta = php_delta(m);
    cert.cubes = CubeMultiset(cert.formula.num_vars);
    for (const auto& c : delta.clauses) cert.cubes.add(falsifying_cube(c));
    return cert;
}

std::pair<long long, long long> php_identity_sides(
    const std::vector<std::vector<int>>& a) {
    size_t rows = a.size();
    if (rows < 2) throw DomainError("matrix needs at least 2 rows");
    size_t cols = rows - 1;
    for (const auto& row : a) {
        if (row.size() != cols) throw DomainError("matrix must be (m+1) x m");
        for (int x : row)
            if (x != 0 && x != 1) throw DomainError("matrix entries must be 0/1");
    }
    std::vector<long long> r(rows, 0), c(cols, 0);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            r[i] += a[i][j];
            c[j] += a[i][j];
        }
    auto choose2 = [](long long k) { return k * (k - 1) / 2; };
    long long lhs = 0, rhs = 1;
    for (size_t i = 0; i < rows; ++i) {
        if (r[i] == 0) ++lhs;
        if (r[i] >= 2) rhs += r[i] - 1;
    }
    for (size_t j = 0; j < cols; ++j) {
        lhs += choose2(c[j]);
        if (c[j] == 0) ++rhs;
        if (c[j] >= 3) rhs += choose2(c[j] - 1);
    }
    return {lhs, rhs};
}

namespace {

Clause all_of(const std::vector<int>& vars, bool positive) {
    std::vector<Lit> lits;
    for (int v : vars) lits.push_back(positive ? v : -v);
    return Clause(lits);
}

// cube fixing `special` to one value and the rest of vars to the other
Cube one_against(const std::vector<int>& vars, int special, bool special_value) {
    std::vector<Lit> fixed;
    for (int v : vars) {
        bool val = (v == special) ? special_value : !special_value;
        fixed.push_back(val ? v : -v);
    }
    return Cube(fixed);
}

}  // namespace

VertexCubeTable subsetcard_vertex_table(const BipartiteDegreeGraph& g,
                                        bool left, int vertex, int num_vars) {
    VertexCubeTable t;
    t.left = left;
    t.vertex = vertex;
    auto inc = left ? g.left_incident(vertex) : g.right_incident(vertex);
    for (int e : inc) t.edge_vars.push_back(e + 1);
    int d = static_cast<int>(inc.size());
    if (d != 4 && d != 5) throw DomainError("vertex degree outside {4,5}");

    t.f_w = ClauseMultiset(num_vars);
    // all 3-subsets of the incident edges
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                std::vector<Lit> lits{t.edge_vars[i], t.edge_vars[j], t.edge_vars[k]};
                if (!left)
                    for (auto& l : lits) l = -l;
                t.f_w.add(Clause(lits));
            }
    t.f_prime = ClauseMultiset(num_vars);
    for (int v : t.edge_vars) t.f_prime.add(Clause({left ? -v : v}));

    t.box_multiplicity = (d == 4) ? 2 : 3;

    // multiplicities per vertex type: {all-zero cube, all-one cube,
    // one-zero-rest-one per edge, one-one-rest-zero per edge}
    int m_allzero, m_allone, m_zero1, m_one1;
    if (left && d == 4) m_allzero = 2, m_allone = 2, m_zero1 = 1, m_one1 = 0;
    else if (left && d == 5) m_allzero = 7, m_allone = 2, m_zero1 = 1, m_one1 = 2;
    else if (!left && d == 4) m_allzero = 2, m_allone = 2, m_zero1 = 0, m_one1 = 1;
    else m_allzero = 2, m_allone = 7, m_zero1 = 2, m_one1 = 1;

    t.h_w = CubeMultiset(num_vars);
    t.h_w.add(falsifying_cube(all_of(t.edge_vars, true)), m_allzero);
    t.h_w.add(falsifying_cube(all_of(t.edge_vars, false)), m_allone);
    for (int v : t.edge_vars) {
        if (m_zero1 > 0) t.h_w.add(one_against(t.edge_vars, v, false), m_zero1);
        if (m_one1 > 0) t.h_w.add(one_against(t.edge_vars, v, true), m_one1);
    }
    return t;
}

bool check_vertex_identity(const VertexCubeTable& t) {
    int d = static_cast<int>(t.edge_vars.size());
    int n = t.f_w.num_vars;
    for (unsigned pattern = 0; pattern < (1u << d); ++pattern) {
        std::uint64_t bits = 0;
        for (int k = 0; k < d; ++k)
            if ((pattern >> k) & 1)
                bits |= std::uint64_t{1} << (n - t.edge_vars[k]);
        auto a = Assignment::from_index(n, bits);
        long long lhs = viol(t.f_w, a) + viol(t.f_prime, a);
        long long rhs = cube_hits(t.h_w, a) + t.box_multiplicity;
        if (lhs != rhs) return false;
    }
    return true;
}

namespace {

// the two reconstruction identities, checked as integer polynomial
// identities over the Boolean cube
bool eq_identity(int d) {
    long long box = (d == 4) ? 2 : 7;
    long long slack = (d == 4) ? 2 : 3;
    for (unsigned x = 0; x < (1u << d); ++x) {
        auto bit = [&](int i) { return (x >> i) & 1 ? 1ll : 0ll; };
        long long sum = 0;
        for (int i = 0; i < d; ++i) sum += bit(i);
        // lhs: all 3-subsets falsified-products minus the linear form
        long long lhs = 0;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                for (int k = j + 1; k < d; ++k)
                    lhs += (1 - bit(i)) * (1 - bit(j)) * (1 - bit(k));
        lhs -= (slack - sum);
        // rhs cube terms
        long long all1 = 1, all0 = 1;
        for (int i = 0; i < d; ++i) {
            all1 *= bit(i);
            all0 *= 1 - bit(i);
        }
        long long rhs = 2 * all1 + box * all0;
        for (int e = 0; e < d; ++e) {
            long long down = 1 - bit(e), up = bit(e);
            for (int i = 0; i < d; ++i) {
                if (i == e) continue;
                down *= bit(i);
                up *= 1 - bit(i);
            }
            rhs += down;                       // x_e = 0, rest 1
            if (d == 5) rhs += 2 * up;         // x_e = 1, rest 0
        }
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace

bool subsetcard_eq_degree4() { return eq_identity(4); }
bool subsetcard_eq_degree5() { return eq_identity(5); }

ScsCertificate subsetcard_scs_proof(const BipartiteDegreeGraph& g) {
    g.validate();
    ScsCertificate cert;
    cert.formula = subset_cardinality(g);
    cert.cubes = CubeMultiset(cert.formula.num_vars);
    for (int u = 0; u < g.n; ++u) {
        auto t = subsetcard_vertex_table(g, true, u, cert.formula.num_vars);
        for (const auto& c : t.h_w.cubes) cert.cubes.add(c);
    }
    for (int v = 0; v < g.n; ++v) {
        auto t = subsetcard_vertex_table(g, false, v, cert.formula.num_vars);
        for (const auto& c : t.h_w.cubes) cert.cubes.add(c);
    }
    return cert;
}

void emit_vertex_tables_latex(std::ostream& out, const BipartiteDegreeGraph& g) {
    out << "\\begin{tabular}{|l|l|l|l|l|}\\hline\n"
        << "clause & $U$, deg 4 & $U$, deg 5 & $V$, deg 4 & $V$, deg 5 \\\\\\hline\n";
    auto row = [&](const char* label, int a, int b, int c, int d) {
        out << label << " & " << a << " & " << b << " & " << c << " & " << d
            << " \\\\\\hline\n";
    };
    row("$\\Box$", 2, 3, 2, 3);
    row("$\\bigvee_e x_e$", 2, 7, 2, 2);
    row("$\\bigvee_e \\overline{x_e}$", 2, 2, 2, 7);
    row("$x_e \\vee \\bigvee_{f \\ne e} \\overline{x_f}$", 1, 1, 0, 2);
    row("$\\overline{x_e} \\vee \\bigvee_{f \\ne e} x_f$", 0, 2, 1, 1);
    out << "\\end{tabular}\n";
    out << "% instance: n=" << g.n << ", edges=" << g.num_edges() << "\n";
}

namespace {

struct OccurrenceIndex {
    std::map<Clause, std::vector<int>> by_clause;
    explicit OccurrenceIndex(const ClauseMultiset& f) {
        for (size_t k = 0; k < f.clauses.size(); ++k)
            by_clause[f.clauses[k]].push_back(static_cast<int>(k) + 1);
    }
    int take(const Clause& c) {
        auto it = by_clause.find(c);
        if (it == by_clause.end() || it->second.empty())
            throw Error("expected axiom not available: " + c.to_string());
        int occ = it->second.front();
        it->second.erase(it->second.begin());
        return occ;
    }
};

}  // namespace

ProofLog pebhint_or_maxres_proof(int h) {
    if (h < 1) throw DomainError("height must be >= 1");
    Dag g = pyramid(h);
    ProofLog log;
    log.initial = compose(pebhint(g), Gadget::OR2);
    ProofState state(log.initial);
    OccurrenceIndex axioms(log.initial);

    auto copy1 = [](int vid) { return 2 * vid + 1; };
    auto copy2 = [](int vid) { return 2 * vid + 2; };
    auto pair_clause = [&](int a, int b) {
        return Clause({copy1(a), copy2(a), copy1(b), copy2(b)});
    };

    auto resolve = [&](int occ_pos, int occ_neg, int pivot) {
        log.steps.push_back(MaxResStep::resolve(occ_pos, occ_neg, pivot));
        return state.apply_resolve(occ_pos, occ_neg, pivot);
    };

    // done[v]: live occurrence of (v1|v2); pending[s]: occurrence of
    // (u1|u2|s1|s2) produced while processing s's left sibling
    std::vector<int> done(g.size(), 0), pending(g.size(), 0);
    for (int v = 0; v < g.size(); ++v)
        if (g.is_source(v)) done[v] = axioms.take(Clause({copy1(v), copy2(v)}));

    for (int r = h - 1; r >= 0; --r) {
        for (int i = 0; i <= r; ++i) {
            int s = pyramid_vertex(h, r, i);
            int u = pyramid_vertex(h, r + 1, i);
            int v = pyramid_vertex(h, r + 1, i + 1);
            auto axiom = [&](int uc, int vc) {
                return axioms.take(Clause(
                    {-(uc == 1 ? copy1(u) : copy2(u)),
                     -(vc == 1 ? copy1(v) : copy2(v)), copy1(s), copy2(s)}));
            };
            int g_u = (i > 0) ? pending[s] : done[u];
            auto s1 = resolve(g_u, axiom(1, 1), copy1(u));
            int red1 = s1.added.at(1);  // u1|u2|v1(|s1|s2)
            auto s2 = resolve(*s1.resolvent, axiom(2, 1), copy2(u));
            auto s3 = resolve(red1, axiom(1, 2), copy1(u));
            auto s4 = resolve(*s3.resolvent, axiom(2, 2), copy2(u));
            auto s5 = resolve(done[v], *s4.resolvent, copy2(v));
            int red2 = s5.added.at(1);  // v1|v2|~s1
            int red3 = s5.added.at(2);  // v1|v2|s1|~s2
            auto s6 = resolve(*s5.resolvent, *s2.resolvent, copy1(v));
            done[s] = *s6.resolvent;
            if (i < r) {
                int t = pyramid_vertex(h, r, i + 1);
                int hint = axioms.take(pair_clause(s, t));
                auto s7 = resolve(hint, red3, copy2(s));
                auto s8 = resolve(*s7.resolvent, red2, copy1(s));
                pending[t] = *s8.resolvent;
            }
        }
    }

    int z = g.single_sink();
    auto f1 = resolve(done[z], axioms.take(Clause({-copy1(z)})), copy1(z));
    auto f2 = resolve(*f1.resolvent, axioms.take(Clause({-copy2(z)})), copy2(z));
    if (!state.clause(*f2.resolvent).empty())
        throw Error("pebbling refutation did not reach the empty clause");
    return log;
}

ScsCertificate scs_from_maxresw(const ProofLog& log) {
    auto result = replay(log);
    if (!result.refuted)
        throw DomainError("log does not derive the empty clause");
    ScsCertificate cert;
    cert.formula = log.initial;
    cert.cubes = CubeMultiset(log.initial.num_vars);
    bool skipped_box = false;
    for (const auto& c : result.final.clauses) {
        if (c.empty() && !skipped_box) {
            skipped_box = true;
            continue;
        }
        cert.cubes.add(falsifying_cube(c));
    }
    return cert;
}

}  // namespace pcw
