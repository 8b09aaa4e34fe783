#ifndef PCW_WITNESSES_HPP
#define PCW_WITNESSES_HPP

#include <iosfwd>
#include <vector>

#include "pcw/families.hpp"
#include "pcw/maxres.hpp"
#include "pcw/subcubesums.hpp"

namespace pcw {

/// Certificate for PHP_m whose cubes falsify the clauses of
/// PHP^delta_m, realizing viol_PHPdelta = viol_PHP - 1.
ScsCertificate php_scs_proof(int m);

/// Both sides of the row/column-sum identity behind the PHP
/// certificate, for a 0/1 matrix with m+1 rows and m columns:
/// lhs = #zero-rows + sum_j C(c_j,2),
/// rhs = 1 + #zero-cols + sum_{r_i>=2}(r_i-1) + sum_{c_j>=3}C(c_j-1,2).
std::pair<long long, long long> php_identity_sides(
    const std::vector<std::vector<int>>& a);

/// Per-vertex clause data for the subset-cardinality certificate: the
/// formula clauses f_w, the unit clauses f'_w, the certificate cubes
/// h_w with their multiplicities, and the empty-clause multiplicity
/// h'_w. Only h_w enters the emitted certificate; the rest exists for
/// the per-vertex identity
///   viol_f + viol_f' = viol_h + box  (pointwise).
struct VertexCubeTable {
    bool left = true;
    int vertex = 0;
    std::vector<int> edge_vars;  // 1-based variables of incident edges
    ClauseMultiset f_w;
    ClauseMultiset f_prime;
    CubeMultiset h_w;
    int box_multiplicity = 0;
};

VertexCubeTable subsetcard_vertex_table(const BipartiteDegreeGraph& g,
                                        bool left, int vertex, int num_vars);

/// Checks the per-vertex identity over all 2^d local assignments.
bool check_vertex_identity(const VertexCubeTable& t);

/// Degree-4 reconstruction identity over all 16 assignments.
bool subsetcard_eq_degree4();
/// Degree-5 reconstruction identity over all 32 assignments.
bool subsetcard_eq_degree5();

/// The O(n)-size certificate for the subset cardinality formula of g:
/// the union of the per-vertex cube sets h_w.
ScsCertificate subsetcard_scs_proof(const BipartiteDegreeGraph& g);

/// LaTeX dump of the per-vertex multiplicity tables.
void emit_vertex_tables_latex(std::ostream& out, const BipartiteDegreeGraph& g);

/// Linear-size MaxRes (no weakening) refutation of
/// compose(pebhint(pyramid(h)), OR2), processing vertices in layered
/// order and left to right; the two sink resolutions come last, on the
/// first sink copy then the second.
ProofLog pebhint_or_maxres_proof(int h);

/// Prop-style extraction: replay the MaxResW refutation, drop one
/// empty-clause occurrence from the final multiset, and take the
/// falsifying cubes of the rest.
ScsCertificate scs_from_maxresw(const ProofLog& log);

}  // namespace pcw

#endif
