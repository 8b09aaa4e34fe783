#include "pcw/families.hpp"

#include <numeric>
#include <random>
#include <set>

namespace pcw {

std::vector<int> Dag::sinks() const {
    std::vector<bool> has_succ(preds.size(), false);
    for (const auto& ps : preds)
        for (int p : ps) has_succ[p] = true;
    std::vector<int> out;
    for (size_t v = 0; v < preds.size(); ++v)
        if (!has_succ[v]) out.push_back(static_cast<int>(v));
    return out;
}

int Dag::single_sink() const {
    auto s = sinks();
    if (s.size() != 1) throw DomainError("DAG does not have a single sink");
    return s[0];
}

bool Dag::reaches(int u, int v) const {
    if (u == v) return true;
    // edges run predecessor -> vertex, so walk v's predecessor closure
    std::vector<bool> seen(preds.size(), false);
    std::vector<int> stack{v};
    seen[v] = true;
    while (!stack.empty()) {
        int w = stack.back();
        stack.pop_back();
        for (int p : preds[w]) {
            if (p == u) return true;
            if (!seen[p]) {
                seen[p] = true;
                stack.push_back(p);
            }
        }
    }
    return false;
}

std::vector<std::pair<int, int>> Dag::sibling_pairs() const {
    std::vector<std::pair<int, int>> out;
    std::set<std::pair<int, int>> seen;
    for (int w = 0; w < size(); ++w) {
        const auto& ps = preds[w];
        for (size_t a = 0; a < ps.size(); ++a) {
            for (size_t b = a + 1; b < ps.size(); ++b) {
                int u = std::min(ps[a], ps[b]);
                int v = std::max(ps[a], ps[b]);
                if (u == v) continue;
                if (reaches(u, v) || reaches(v, u)) continue;
                if (seen.insert({u, v}).second) out.push_back({u, v});
            }
        }
    }
    return out;
}

int pyramid_vertex(int h, int r, int i) {
    if (r < 0 || r > h || i < 0 || i > r) throw DomainError("bad pyramid position");
    // rows h, h-1, ..., r+1 come first
    int offset = 0;
    for (int q = h; q > r; --q) offset += q + 1;
    return offset + i;
}

Dag pyramid(int h) {
    if (h < 1) throw DomainError("pyramid height must be >= 1");
    int n = (h + 1) * (h + 2) / 2;
    Dag g;
    g.preds.resize(n);
    for (int r = 0; r < h; ++r)
        for (int i = 0; i <= r; ++i)
            g.preds[pyramid_vertex(h, r, i)] = {pyramid_vertex(h, r + 1, i),
                                                pyramid_vertex(h, r + 1, i + 1)};
    return g;
}

ChargedGraph::ChargedGraph(int n, std::vector<std::pair<int, int>> e,
                           std::vector<int> b)
    : num_vertices(n), edges(std::move(e)), charge(std::move(b)) {
    if (n < 0) throw DomainError("negative vertex count");
    if (static_cast<int>(charge.size()) != n)
        throw DomainError("charge vector size mismatch");
    for (int c : charge)
        if (c != 0 && c != 1) throw DomainError("charge must be 0/1");
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw DomainError("edge endpoint out of range");
        if (u == v) throw DomainError("self-loops are not supported");
    }
}

int ChargedGraph::degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges)
        if (a == v || b == v) ++d;
    return d;
}

std::vector<int> ChargedGraph::incident_edges(int v) const {
    std::vector<int> out;
    for (int e = 0; e < num_edges(); ++e)
        if (edges[e].first == v || edges[e].second == v) out.push_back(e);
    return out;
}

bool ChargedGraph::connected() const {
    if (num_vertices == 0) return true;
    std::vector<bool> seen(num_vertices, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [a, b] : edges) {
            int other = -1;
            if (a == u) other = b;
            else if (b == u) other = a;
            if (other >= 0 && !seen[other]) {
                seen[other] = true;
                ++count;
                stack.push_back(other);
            }
        }
    }
    return count == num_vertices;
}

int ChargedGraph::charge_sum_mod2() const {
    int s = 0;
    for (int c : charge) s ^= c;
    return s;
}

namespace {

std::vector<int> check_charge(int n, const std::vector<int>& charge) {
    if (static_cast<int>(charge.size()) != n)
        throw DomainError("charge vector has wrong length");
    return charge;
}

}  // namespace

ChargedGraph triangle_graph(const std::vector<int>& charge) {
    return ChargedGraph(3, {{0, 1}, {0, 2}, {1, 2}}, check_charge(3, charge));
}

ChargedGraph complete_graph(int n, const std::vector<int>& charge) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return ChargedGraph(n, std::move(edges), check_charge(n, charge));
}

ChargedGraph cycle_graph(int n, const std::vector<int>& charge) {
    if (n < 3) throw DomainError("cycle needs >= 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n});
    return ChargedGraph(n, std::move(edges), check_charge(n, charge));
}

ChargedGraph path_graph(int n, const std::vector<int>& charge) {
    if (n < 2) throw DomainError("path needs >= 2 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
    return ChargedGraph(n, std::move(edges), check_charge(n, charge));
}

ChargedGraph cubic_graph(int n, std::uint64_t seed, const std::vector<int>& charge) {
    if (n < 4 || n % 2 != 0) throw DomainError("cubic graph needs even n >= 4");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n});
    // perfect matching avoiding cycle edges; retry until valid
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::shuffle(perm.begin(), perm.end(), rng);
        bool ok = true;
        for (int k = 0; k < n && ok; k += 2) {
            int a = perm[k], b = perm[k + 1];
            int diff = (a - b + n) % n;
            if (diff == 1 || diff == n - 1) ok = false;  // would double a cycle edge
        }
        if (ok) {
            for (int k = 0; k < n; k += 2)
                edges.push_back({std::min(perm[k], perm[k + 1]),
                                 std::max(perm[k], perm[k + 1])});
            return ChargedGraph(n, std::move(edges), check_charge(n, charge));
        }
    }
    throw Error("could not sample a cubic matching");
}

std::vector<int> BipartiteDegreeGraph::left_incident(int u) const {
    std::vector<int> out;
    for (int e = 0; e < num_edges(); ++e)
        if (edges[e].first == u) out.push_back(e);
    return out;
}

std::vector<int> BipartiteDegreeGraph::right_incident(int v) const {
    std::vector<int> out;
    for (int e = 0; e < num_edges(); ++e)
        if (edges[e].second == v) out.push_back(e);
    return out;
}

void BipartiteDegreeGraph::validate() const {
    int left5 = 0, right5 = 0;
    for (int u = 0; u < n; ++u) {
        int d = left_degree(u);
        if (d == 5) ++left5;
        else if (d != 4) throw DomainError("left degree outside {4,5}");
    }
    for (int v = 0; v < n; ++v) {
        int d = right_degree(v);
        if (d == 5) ++right5;
        else if (d != 4) throw DomainError("right degree outside {4,5}");
    }
    if (left5 != 1 || right5 != 1)
        throw DomainError("expected exactly one degree-5 vertex per side");
}

ClauseMultiset php(int m) {
    if (m < 1) throw DomainError("php needs m >= 1");
    auto var = [m](int i, int j) { return (i - 1) * m + j; };
    ClauseMultiset f((m + 1) * m);
    for (int i = 1; i <= m + 1; ++i) {
        std::vector<Lit> lits;
        for (int j = 1; j <= m; ++j) lits.push_back(var(i, j));
        f.add(Clause(lits));
    }
    for (int j = 1; j <= m; ++j)
        for (int i = 1; i <= m + 1; ++i)
            for (int i2 = i + 1; i2 <= m + 1; ++i2)
                f.add(Clause({-var(i, j), -var(i2, j)}));
    return f;
}

ClauseMultiset php_delta(int m) {
    if (m < 1) throw DomainError("php_delta needs m >= 1");
    auto var = [m](int i, int j) { return (i - 1) * m + j; };
    ClauseMultiset f((m + 1) * m);
    // P_i^delta: pigeon i in at most one hole, as a ladder over j < k
    for (int i = 1; i <= m + 1; ++i) {
        for (int j = 1; j <= m; ++j) {
            for (int k = j + 1; k <= m; ++k) {
                std::vector<Lit> lits{-var(i, j), -var(i, k)};
                for (int l = j + 1; l < k; ++l) lits.push_back(var(i, l));
                f.add(Clause(lits));
            }
        }
    }
    for (int j = 1; j <= m; ++j) {
        // H1_j^delta: hole j not empty
        std::vector<Lit> lits;
        for (int i = 1; i <= m + 1; ++i) lits.push_back(var(i, j));
        f.add(Clause(lits));
        // H2_j^delta: at most two pigeons in hole j
        for (int i = 1; i <= m + 1; ++i) {
            for (int k = i + 1; k <= m + 1; ++k) {
                for (int i2 = k + 1; i2 <= m + 1; ++i2) {
                    std::vector<Lit> cl{-var(i, j), -var(k, j), -var(i2, j)};
                    for (int l = i + 1; l < k; ++l) cl.push_back(var(l, j));
                    f.add(Clause(cl));
                }
            }
        }
    }
    return f;
}

ClauseMultiset tseitin(const ChargedGraph& g) {
    ClauseMultiset f(g.num_edges());
    for (int u = 0; u < g.num_vertices; ++u) {
        auto inc = g.incident_edges(u);
        int d = static_cast<int>(inc.size());
        if (d == 0) {
            if (g.charge[u] == 1) f.add(Clause({}));  // unsatisfiable vertex
            continue;
        }
        for (unsigned pattern = 0; pattern < (1u << d); ++pattern) {
            int parity = __builtin_popcount(pattern) & 1;
            if (parity == g.charge[u]) continue;
            // clause falsified exactly by this pattern
            std::vector<Lit> lits;
            for (int k = 0; k < d; ++k) {
                int v = inc[k] + 1;
                lits.push_back((pattern >> k) & 1 ? -v : v);
            }
            f.add(Clause(lits));
        }
    }
    return f;
}

ClauseMultiset pebhint(const Dag& g) {
    int sink = g.single_sink();
    ClauseMultiset f(g.size());
    for (int v = 0; v < g.size(); ++v)
        if (g.is_source(v)) f.add(Clause({v + 1}));
    for (int v = 0; v < g.size(); ++v) {
        if (g.is_source(v)) continue;
        std::vector<Lit> lits;
        for (int p : g.preds[v]) lits.push_back(-(p + 1));
        lits.push_back(v + 1);
        f.add(Clause(lits));
    }
    f.add(Clause({-(sink + 1)}));
    for (auto [u, v] : g.sibling_pairs()) f.add(Clause({u + 1, v + 1}));
    return f;
}

namespace {

// Per-literal pieces of the block for clause C∘g: each piece is the set
// of copy-literals contributed by one alternative for that original
// literal. OR2 keeps one alternative for positive literals and one
// negated copy per alternative for negative ones; XOR2 always has two
// alternatives, and they cover disjoint subcubes.
std::vector<std::vector<Lit>> gadget_pieces(Lit original, Gadget g) {
    int x1 = 2 * lit_var(original) - 1;
    int x2 = 2 * lit_var(original);
    bool positive = !lit_negative(original);
    if (g == Gadget::OR2) {
        if (positive) return {{x1, x2}};
        return {{-x1}, {-x2}};
    }
    // XOR2: block must be falsified when x1^x2 != value of the literal
    if (positive) return {{x1, x2}, {-x1, -x2}};
    return {{x1, -x2}, {-x1, x2}};
}

}  // namespace

ClauseMultiset compose(const ClauseMultiset& f, Gadget g) {
    ClauseMultiset out(2 * f.num_vars);
    for (const auto& c : f.clauses) {
        std::vector<std::vector<std::vector<Lit>>> pieces;
        for (Lit l : c.lits()) pieces.push_back(gadget_pieces(l, g));
        // one block clause per choice of alternative for each literal
        std::vector<size_t> choice(pieces.size(), 0);
        while (true) {
            std::vector<Lit> lits;
            for (size_t k = 0; k < pieces.size(); ++k)
                for (Lit l : pieces[k][choice[k]]) lits.push_back(l);
            out.add(Clause(lits));
            // advance the choice vector, last literal fastest
            size_t k = pieces.size();
            while (k > 0) {
                --k;
                if (++choice[k] < pieces[k].size()) break;
                choice[k] = 0;
                if (k == 0) goto next_clause;
            }
            if (pieces.empty()) break;
        }
    next_clause:;
    }
    return out;
}

ClauseMultiset subset_cardinality(const BipartiteDegreeGraph& g) {
    ClauseMultiset f(g.num_edges());
    auto emit = [&f](const std::vector<int>& inc, bool positive) {
        int d = static_cast<int>(inc.size());
        if (d != 4 && d != 5) throw DomainError("vertex degree outside {4,5}");
        int pick = d / 2 + 1;
        std::vector<int> idx(pick);
        // lexicographic combinations of incident edges
        for (int k = 0; k < pick; ++k) idx[k] = k;
        while (true) {
            std::vector<Lit> lits;
            for (int k = 0; k < pick; ++k) {
                int v = inc[idx[k]] + 1;
                lits.push_back(positive ? v : -v);
            }
            f.add(Clause(lits));
            int k = pick - 1;
            while (k >= 0 && idx[k] == d - pick + k) --k;
            if (k < 0) break;
            ++idx[k];
            for (int j = k + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
        }
    };
    for (int u = 0; u < g.n; ++u) emit(g.left_incident(u), true);
    for (int v = 0; v < g.n; ++v) emit(g.right_incident(v), false);
    return f;
}

BipartiteDegreeGraph random_regular_bipartite(int n, std::uint64_t seed) {
    if (n < 5) throw DomainError("random_regular_bipartite needs n >= 5");
    std::mt19937_64 rng(seed);
    std::vector<int> uperm(n), vperm(n);
    std::iota(uperm.begin(), uperm.end(), 0);
    std::iota(vperm.begin(), vperm.end(), 0);
    std::shuffle(uperm.begin(), uperm.end(), rng);
    std::shuffle(vperm.begin(), vperm.end(), rng);
    int extra = static_cast<int>(rng() % n);
    BipartiteDegreeGraph g;
    g.n = n;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < 4; ++k)
            g.edges.push_back({uperm[i], vperm[(i + k) % n]});
    // the extra edge creates the two degree-5 vertices, one per side
    g.edges.push_back({uperm[extra], vperm[(extra + 4) % n]});
    std::shuffle(g.edges.begin(), g.edges.end(), rng);
    g.validate();
    return g;
}

}  // namespace pcw
