#include "pcw/treeres.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <random>

namespace pcw {

int TreeRefutation::add_leaf(const Clause& axiom) {
    nodes.push_back({axiom, 0, -1, -1});
    return static_cast<int>(nodes.size()) - 1;
}

int TreeRefutation::add_resolve(int pivot, int left, int right) {
    const Clause& cl = nodes.at(left).clause;
    const Clause& cr = nodes.at(right).clause;
    if (cl.contains(-pivot) && cr.contains(pivot)) std::swap(left, right);
    Clause resolvent = resolve_standard(nodes.at(left).clause,
                                        nodes.at(right).clause, pivot);
    nodes.push_back({resolvent, pivot, left, right});
    return static_cast<int>(nodes.size()) - 1;
}

std::vector<Clause> TreeRefutation::axioms() const {
    std::vector<Clause> out;
    // first-appearance order over a left-to-right leaf walk
    std::function<void(int)> dfs = [&](int id) {
        const Node& n = at(id);
        if (n.leaf()) {
            for (const auto& c : out)
                if (c == n.clause) return;
            out.push_back(n.clause);
            return;
        }
        dfs(n.left);
        dfs(n.right);
    };
    if (root >= 0) dfs(root);
    return out;
}

void TreeRefutation::validate() const {
    if (root < 0 || root >= size()) throw DomainError("tree has no root");
    std::vector<int> refs(nodes.size(), 0);
    std::function<void(int)> dfs = [&](int id) {
        if (id < 0 || id >= size()) throw DomainError("tree child out of range");
        if (++refs[id] > 1) throw DomainError("node reused; refutation is not a tree");
        const Node& n = at(id);
        if (n.leaf()) return;
        dfs(n.left);
        dfs(n.right);
        if (!at(n.left).clause.contains(n.pivot))
            throw DomainError("left child lacks positive pivot");
        if (!at(n.right).clause.contains(-n.pivot))
            throw DomainError("right child lacks negative pivot");
        Clause expect = resolve_standard(at(n.left).clause, at(n.right).clause,
                                         n.pivot);
        if (!(expect == n.clause))
            throw DomainError("node clause is not the resolvent of its children");
    };
    dfs(root);
    if (!at(root).clause.empty()) throw DomainError("root clause is not empty");
}

bool TreeRefutation::is_regular() const {
    std::vector<bool> on_path;
    int maxv = 0;
    for (const auto& n : nodes) maxv = std::max(maxv, std::max(n.pivot, n.clause.max_var()));
    on_path.assign(maxv + 1, false);
    bool regular = true;
    std::function<void(int)> dfs = [&](int id) {
        if (!regular) return;
        const Node& n = at(id);
        if (n.leaf()) return;
        if (on_path[n.pivot]) {
            regular = false;
            return;
        }
        on_path[n.pivot] = true;
        dfs(n.left);
        dfs(n.right);
        on_path[n.pivot] = false;
    };
    if (root >= 0) dfs(root);
    return regular;
}

TreeRefutation regularize(const TreeRefutation& t) {
    t.validate();
    TreeRefutation scratch;
    // Walk as a decision tree (query pivot; 0 goes to the positive
    // side), skipping re-queried variables, then rebuild clauses
    // bottom-up, dropping a branch when the surviving clause no longer
    // mentions the pivot.
    std::map<int, bool> assigned;
    std::function<int(int)> rebuild = [&](int id) -> int {
        const auto& n = t.at(id);
        if (n.leaf()) return scratch.add_leaf(n.clause);
        auto it = assigned.find(n.pivot);
        if (it != assigned.end())
            return rebuild(it->second ? n.right : n.left);
        assigned[n.pivot] = false;
        int lo = rebuild(n.left);
        assigned[n.pivot] = true;
        int hi = rebuild(n.right);
        assigned.erase(n.pivot);
        if (!scratch.nodes[lo].clause.contains(n.pivot)) return lo;
        if (!scratch.nodes[hi].clause.contains(-n.pivot)) return hi;
        return scratch.add_resolve(n.pivot, lo, hi);
    };
    int new_root = rebuild(t.root);
    // compact away orphaned nodes
    TreeRefutation out;
    std::function<int(int)> copy = [&](int id) -> int {
        const auto& n = scratch.nodes[id];
        if (n.leaf()) return out.add_leaf(n.clause);
        int l = copy(n.left);
        int r = copy(n.right);
        return out.add_resolve(n.pivot, l, r);
    };
    out.root = copy(new_root);
    out.validate();
    if (!out.is_regular()) throw Error("regularization failed");
    return out;
}

ProofLog simulate_treeres(const TreeRefutation& input,
                          const std::optional<ClauseMultiset>& formula) {
    input.validate();
    TreeRefutation reg;
    const TreeRefutation& t = input.is_regular() ? input : (reg = regularize(input));

    ProofLog log;
    if (formula) {
        log.initial = *formula;
    } else {
        int nv = 0;
        for (const auto& c : t.axioms()) nv = std::max(nv, c.max_var());
        log.initial = ClauseMultiset(nv);
        for (const auto& c : t.axioms()) log.initial.add(c);
    }

    // first occurrence of each distinct axiom in the initial multiset
    std::map<Clause, int> axiom_occ;
    for (size_t k = 0; k < log.initial.clauses.size(); ++k)
        axiom_occ.try_emplace(log.initial.clauses[k], static_cast<int>(k) + 1);
    for (const auto& c : t.axioms())
        if (!axiom_occ.count(c))
            throw DomainError("tree axiom not present in the formula: " +
                              c.to_string());

    ProofState state(log.initial);
    std::vector<int> leaf_occ(t.nodes.size(), 0);

    // subtree leaf counts per axiom group
    std::map<Clause, std::vector<int>> groups;  // axiom -> leaf node ids
    std::function<void(int)> collect = [&](int id) {
        const auto& n = t.at(id);
        if (n.leaf()) {
            groups[n.clause].push_back(id);
            return;
        }
        collect(n.left);
        collect(n.right);
    };
    collect(t.root);

    auto emit_weaken = [&](int occ, int var) {
        log.steps.push_back(MaxResStep::weaken(occ, var));
        return state.apply_weaken(occ, var);
    };

    for (auto& [axiom, leaves] : groups) {
        int occ0 = axiom_occ[axiom];
        if (leaves.size() == 1) {
            leaf_occ[leaves[0]] = occ0;
            continue;
        }
        std::vector<bool> in_group(t.nodes.size(), false);
        for (int l : leaves) in_group[l] = true;
        // contains[v]: subtree of v holds a leaf of this group
        std::vector<bool> contains(t.nodes.size(), false);
        std::function<bool(int)> mark = [&](int id) -> bool {
            const auto& n = t.at(id);
            bool c = n.leaf() ? in_group[id] : (mark(n.left) | mark(n.right));
            contains[id] = c;
            return c;
        };
        mark(t.root);
        // walk root-to-leaves; at a branching node the pivot-side copy
        // picks up the positive pivot literal
        std::function<void(int, int)> walk = [&](int id, int occ) {
            const auto& n = t.at(id);
            if (n.leaf()) {
                leaf_occ[id] = occ;
                return;
            }
            bool l = contains[n.left], r = contains[n.right];
            if (l && r) {
                auto res = emit_weaken(occ, n.pivot);
                walk(n.left, res.added[0]);   // A|x toward the x side
                walk(n.right, res.added[1]);  // A|~x
            } else if (l) {
                walk(n.left, occ);
            } else {
                walk(n.right, occ);
            }
        };
        walk(t.root, occ0);
    }

    // replay the resolutions bottom-up (post-order)
    std::function<int(int)> derive = [&](int id) -> int {
        const auto& n = t.at(id);
        if (n.leaf()) return leaf_occ[id];
        int ol = derive(n.left);
        int orr = derive(n.right);
        log.steps.push_back(MaxResStep::resolve(ol, orr, n.pivot));
        auto res = state.apply_resolve(ol, orr, n.pivot);
        if (!res.resolvent)
            throw Error("tautological resolvent while simulating a tree");
        return *res.resolvent;
    };
    int root_occ = derive(t.root);
    if (!state.clause(root_occ).empty())
        throw Error("tree simulation did not derive the empty clause");
    return log;
}

TreeRefutation dpll_tree(const ClauseMultiset& f, std::uint64_t seed,
                         std::optional<int> node_cap) {
    std::mt19937_64 rng(seed);
    TreeRefutation scratch;
    std::vector<std::optional<bool>> value(f.num_vars + 1);

    auto falsified = [&]() -> const Clause* {
        for (const auto& c : f.clauses) {
            bool bad = true;
            for (Lit l : c.lits()) {
                auto v = value[lit_var(l)];
                if (!v || *v != lit_negative(l)) {
                    bad = false;
                    break;
                }
            }
            if (bad) return &c;
        }
        return nullptr;
    };

    std::function<int(void)> rec = [&]() -> int {
        if (node_cap && scratch.size() > *node_cap)
            throw Error("dpll tree exceeded node cap");
        if (const Clause* c = falsified()) return scratch.add_leaf(*c);
        // pick a branching variable from a shortest active clause
        const Clause* best = nullptr;
        int best_unassigned = 0;
        for (const auto& c : f.clauses) {
            bool satisfied = false;
            int unassigned = 0;
            for (Lit l : c.lits()) {
                auto v = value[lit_var(l)];
                if (!v) ++unassigned;
                else if (*v != lit_negative(l)) {
                    satisfied = true;
                    break;
                }
            }
            if (satisfied || unassigned == 0) continue;
            if (!best || unassigned < best_unassigned) {
                best = &c;
                best_unassigned = unassigned;
            }
        }
        if (!best) throw DomainError("formula is satisfiable; no refutation");
        std::vector<int> candidates;
        for (Lit l : best->lits())
            if (!value[lit_var(l)]) candidates.push_back(lit_var(l));
        int var = candidates[rng() % candidates.size()];

        value[var] = false;
        int lo = rec();
        value[var] = true;
        int hi = rec();
        value[var].reset();
        if (!scratch.nodes[lo].clause.contains(var)) return lo;
        if (!scratch.nodes[hi].clause.contains(-var)) return hi;
        return scratch.add_resolve(var, lo, hi);
    };
    int root = rec();

    TreeRefutation out;
    std::function<int(int)> copy = [&](int id) -> int {
        const auto& n = scratch.nodes[id];
        if (n.leaf()) return out.add_leaf(n.clause);
        int l = copy(n.left);
        int r = copy(n.right);
        return out.add_resolve(n.pivot, l, r);
    };
    out.root = copy(root);
    out.validate();
    return out;
}

std::vector<TreeRefutation> enumerate_tree_refutations(const ClauseMultiset& f,
                                                       int max_nodes,
                                                       size_t max_count) {
    // Candidate derivations grouped by node count; tautological
    // resolvents are skipped (they never help reach the empty clause
    // at these sizes).
    std::vector<std::vector<TreeRefutation>> by_size(max_nodes + 1);
    std::vector<TreeRefutation> results;
    if (max_nodes < 1) return results;

    std::vector<Clause> axioms;
    for (const auto& c : f.clauses) {
        bool dup = false;
        for (const auto& a : axioms) dup |= (a == c);
        if (!dup) axioms.push_back(c);
    }
    for (const auto& a : axioms) {
        TreeRefutation t;
        t.root = t.add_leaf(a);
        if (a.empty() && results.size() < max_count) results.push_back(t);
        by_size[1].push_back(std::move(t));
    }

    auto graft = [](TreeRefutation& dst, const TreeRefutation& src) -> int {
        int shift = dst.size();
        for (const auto& n : src.nodes) {
            TreeRefutation::Node m = n;
            if (!m.leaf()) {
                m.left += shift;
                m.right += shift;
            }
            dst.nodes.push_back(std::move(m));
        }
        return src.root + shift;
    };

    for (int s = 3; s <= max_nodes; s += 2) {
        for (int s1 = 1; s1 <= s - 2; s1 += 2) {
            int s2 = s - 1 - s1;
            for (const auto& t1 : by_size[s1]) {
                const Clause& c1 = t1.nodes[t1.root].clause;
                for (const auto& t2 : by_size[s2]) {
                    const Clause& c2 = t2.nodes[t2.root].clause;
                    for (Lit l : c1.lits()) {
                        if (lit_negative(l)) continue;
                        int x = lit_var(l);
                        if (!c2.contains(-x)) continue;
                        Clause resolvent = resolve_standard(c1, c2, x);
                        if (resolvent.is_tautology()) continue;
                        TreeRefutation t;
                        int left = graft(t, t1);
                        int right = graft(t, t2);
                        t.root = t.add_resolve(x, left, right);
                        if (resolvent.empty()) {
                            if (results.size() < max_count) results.push_back(t);
                            if (results.size() >= max_count) return results;
                        }
                        by_size[s].push_back(std::move(t));
                    }
                }
            }
        }
    }
    return results;
}

namespace {

struct SexpTokenizer {
    std::istream& in;
    int lineno = 1;

    std::optional<std::string> next() {
        int c;
        while ((c = in.get()) != EOF) {
            if (c == '\n') ++lineno;
            if (std::isspace(c)) continue;
            if (c == '(' || c == ')') return std::string(1, static_cast<char>(c));
            std::string tok(1, static_cast<char>(c));
            while ((c = in.peek()) != EOF && !std::isspace(c) && c != '(' && c != ')')
                tok.push_back(static_cast<char>(in.get()));
            return tok;
        }
        return std::nullopt;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("line " + std::to_string(lineno) + ": " + what);
    }
};

int parse_node(SexpTokenizer& tz, TreeRefutation& t) {
    auto tok = tz.next();
    if (!tok || *tok != "(") tz.fail("expected '('");
    tok = tz.next();
    if (!tok) tz.fail("unexpected end of input");
    if (*tok == "ax") {
        std::vector<Lit> lits;
        while (true) {
            tok = tz.next();
            if (!tok) tz.fail("unexpected end of input in leaf");
            if (*tok == ")") break;
            try {
                lits.push_back(std::stoi(*tok));
            } catch (...) {
                tz.fail("bad literal '" + *tok + "'");
            }
        }
        return t.add_leaf(Clause(lits));
    }
    if (*tok == "res") {
        tok = tz.next();
        if (!tok) tz.fail("missing pivot");
        int pivot;
        try {
            pivot = std::stoi(*tok);
        } catch (...) {
            tz.fail("bad pivot '" + *tok + "'");
        }
        if (pivot < 1) tz.fail("pivot must be a positive variable index");
        int left = parse_node(tz, t);
        int right = parse_node(tz, t);
        tok = tz.next();
        if (!tok || *tok != ")") tz.fail("expected ')' after resolution node");
        try {
            return t.add_resolve(pivot, left, right);
        } catch (const Error& e) {
            tz.fail(e.what());
        }
    }
    tz.fail("expected 'ax' or 'res', got '" + *tok + "'");
}

}  // namespace

TreeRefutation read_tree(std::istream& in) {
    SexpTokenizer tz{in};
    TreeRefutation t;
    t.root = parse_node(tz, t);
    if (auto extra = tz.next())
        throw ParseError("trailing tokens after tree: '" + *extra + "'");
    t.validate();
    return t;
}

TreeRefutation read_tree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return read_tree(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

namespace {

void write_node(std::ostream& out, const TreeRefutation& t, int id) {
    const auto& n = t.at(id);
    if (n.leaf()) {
        out << "(ax";
        for (Lit l : n.clause.lits()) out << ' ' << l;
        out << ')';
        return;
    }
    out << "(res " << n.pivot << ' ';
    write_node(out, t, n.left);
    out << ' ';
    write_node(out, t, n.right);
    out << ')';
}

}  // namespace

void write_tree(std::ostream& out, const TreeRefutation& t) {
    if (t.root < 0) throw DomainError("cannot serialize an empty tree");
    write_node(out, t, t.root);
    out << '\n';
}

void write_tree_file(const std::string& path, const TreeRefutation& t) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    write_tree(out, t);
}

}  // namespace pcw
