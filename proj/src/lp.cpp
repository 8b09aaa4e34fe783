#include "pcw/oracles.hpp"

namespace pcw {

std::vector<Cube> cubes_of_width(int n, int w) {
    if (w < 0 || w > n) return {};
    std::vector<Cube> out;
    std::vector<int> support(w);
    for (int k = 0; k < w; ++k) support[k] = k + 1;
    while (true) {
        for (unsigned signs = 0; signs < (1u << w); ++signs) {
            std::vector<Lit> lits(w);
            // sign bit 0 fixes the variable to 0 (negative literal)
            for (int k = 0; k < w; ++k)
                lits[k] = (signs >> (w - 1 - k)) & 1 ? support[k] : -support[k];
            out.push_back(Cube(lits));
        }
        if (w == 0) break;
        int k = w - 1;
        while (k >= 0 && support[k] == n - w + k + 1) --k;
        if (k < 0) break;
        ++support[k];
        for (int j = k + 1; j < w; ++j) support[j] = support[j - 1] + 1;
    }
    return out;
}

std::vector<Cube> cubes_up_to_width(int n, int d) {
    std::vector<Cube> out;
    for (int w = 0; w <= std::min(n, d); ++w) {
        auto stratum = cubes_of_width(n, w);
        out.insert(out.end(), stratum.begin(), stratum.end());
    }
    return out;
}

namespace {

// Phase-1 simplex on A y + s = t, y,s >= 0, minimizing sum(s), with a
// dense exact-rational tableau and Bland's rule throughout.
struct Phase1 {
    int rows;
    int ycols;
    std::vector<std::vector<Rational>> tab;  // rows x (ycols + rows + 1)
    std::vector<Rational> cost;              // reduced costs, same width
    Rational objective;                      // current sum of artificials
    std::vector<int> basis;                  // column index per row

    Phase1(const std::vector<std::vector<int>>& columns,
           const std::vector<long long>& t) {
        rows = static_cast<int>(t.size());
        ycols = static_cast<int>(columns.size());
        int width = ycols + rows + 1;
        tab.assign(rows, std::vector<Rational>(width, 0));
        for (int j = 0; j < ycols; ++j)
            for (int r : columns[j]) tab[r][j] = 1;
        for (int r = 0; r < rows; ++r) {
            tab[r][ycols + r] = 1;
            tab[r][width - 1] = t[r];
        }
        basis.resize(rows);
        for (int r = 0; r < rows; ++r) basis[r] = ycols + r;
        // reduced costs: c_j - 1' A_j for y columns, 0 for artificials
        cost.assign(width, 0);
        objective = 0;
        for (int r = 0; r < rows; ++r) objective += tab[r][width - 1];
        for (int j = 0; j < ycols; ++j) {
            Rational colsum = 0;
            for (int r = 0; r < rows; ++r) colsum += tab[r][j];
            cost[j] = -colsum;
        }
    }

    void pivot(int prow, int pcol) {
        int width = ycols + rows + 1;
        Rational inv = tab[prow][pcol];
        for (int c = 0; c < width; ++c) tab[prow][c] /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == prow) continue;
            Rational factor = tab[r][pcol];
            if (factor == 0) continue;
            for (int c = 0; c < width; ++c)
                tab[r][c] -= factor * tab[prow][c];
        }
        Rational cfactor = cost[pcol];
        if (cfactor != 0) {
            for (int c = 0; c < width; ++c)
                cost[c] -= cfactor * tab[prow][c];
            objective -= cfactor * tab[prow][width - 1];
        }
        basis[prow] = pcol;
    }

    void solve() {
        int width = ycols + rows + 1;
        while (true) {
            // Bland: lowest-index entering column with negative reduced cost
            int enter = -1;
            for (int j = 0; j < width - 1; ++j) {
                if (cost[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return;
            // ratio test, ties by lowest basis index
            int leave = -1;
            Rational best;
            for (int r = 0; r < rows; ++r) {
                if (tab[r][enter] <= 0) continue;
                Rational ratio = tab[r][width - 1] / tab[r][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[r] < basis[leave])) {
                    best = ratio;
                    leave = r;
                }
            }
            if (leave < 0)
                throw Error("phase-1 LP unbounded; this cannot happen");
            pivot(leave, enter);
        }
    }
};

}  // namespace

JuntaFeasibility conical_junta_feasible(const PseudoFunction& target, int d) {
    if (!target.nonnegative())
        throw DomainError("conical junta target must be nonnegative");
    int n = target.num_vars;
    if (n > 16) throw DomainError("junta LP limited to 16 variables");
    auto cubes = cubes_up_to_width(n, d);
    int rows = 1 << n;

    std::vector<std::vector<int>> columns(cubes.size());
    for (size_t j = 0; j < cubes.size(); ++j)
        for (int r = 0; r < rows; ++r)
            if (cubes[j].contains(Assignment::from_index(n, r)))
                columns[j].push_back(r);

    Phase1 lp(columns, target.values);
    lp.solve();

    JuntaFeasibility out;
    if (lp.objective == 0) {
        out.feasible = true;
        JuntaWitness w;
        int width = lp.ycols + lp.rows + 1;
        for (int r = 0; r < lp.rows; ++r) {
            int j = lp.basis[r];
            if (j < lp.ycols && lp.tab[r][width - 1] != 0)
                w.terms.push_back({cubes[j], lp.tab[r][width - 1]});
        }
        out.witness = std::move(w);
    } else {
        // dual values off the artificial columns: z_r = 1 - cbar_r
        FarkasCertificate cert;
        cert.degree = d;
        cert.dual.resize(rows);
        for (int r = 0; r < rows; ++r)
            cert.dual[r] = Rational(1) - lp.cost[lp.ycols + r];
        out.infeasibility = std::move(cert);
    }
    return out;
}

bool verify_farkas(const PseudoFunction& target, const FarkasCertificate& cert) {
    int n = target.num_vars;
    int rows = 1 << n;
    if (static_cast<int>(cert.dual.size()) != rows) return false;
    Rational zt = 0;
    for (int r = 0; r < rows; ++r) zt += cert.dual[r] * target.values[r];
    if (!(zt > 0)) return false;
    for (const auto& cube : cubes_up_to_width(n, cert.degree)) {
        Rational za = 0;
        for (int r = 0; r < rows; ++r)
            if (cube.contains(Assignment::from_index(n, r))) za += cert.dual[r];
        if (za > 0) return false;
    }
    return true;
}

bool verify_junta_witness(const PseudoFunction& target, const JuntaWitness& w) {
    int n = target.num_vars;
    int rows = 1 << n;
    for (int r = 0; r < rows; ++r) {
        Rational sum = 0;
        for (const auto& [cube, coeff] : w.terms) {
            if (coeff < 0) return false;
            if (cube.contains(Assignment::from_index(n, r))) sum += coeff;
        }
        if (sum != target.values[r]) return false;
    }
    return true;
}

}  // namespace pcw
