#ifndef PCW_SUBCUBESUMS_HPP
#define PCW_SUBCUBESUMS_HPP

#include <cstdint>
#include <vector>

#include "pcw/core.hpp"
#include "pcw/families.hpp"
#include "pcw/maxres.hpp"
#include "pcw/verdict.hpp"

namespace pcw {

/// A certificate for F: a cube multiset G claimed to satisfy
/// viol_F = 1 + viol_G pointwise.
struct ScsCertificate {
    ClauseMultiset formula;
    CubeMultiset cubes;
};

/// An integer-valued function on all 2^n assignments, stored densely
/// in assignment-index order.
struct PseudoFunction {
    int num_vars = 0;
    std::vector<long long> values;

    static PseudoFunction zero(int n) {
        check_size(n);
        return {n, std::vector<long long>(std::size_t{1} << n, 0)};
    }

    long long at(const Assignment& a) const { return values[a.index()]; }
    long long& at(const Assignment& a) { return values[a.index()]; }

    PseudoFunction minus(long long c) const {
        PseudoFunction r = *this;
        for (auto& v : r.values) v -= c;
        return r;
    }

    bool nonnegative() const {
        for (auto v : values)
            if (v < 0) return false;
        return true;
    }

    bool operator==(const PseudoFunction&) const = default;

    static void check_size(int n) {
        if (n < 0 || n > 30)
            throw DomainError("dense table too large for " + std::to_string(n) +
                              " variables");
    }
};

struct ScsMeasures {
    size_t size = 0;  // total cube multiplicity
    int width = 0;    // widest cube
};

/// size / width of a certificate's cube multiset.
ScsMeasures measures(const CubeMultiset& g);

/// The Sherali-Adams style degree figure: max of proof width and the
/// formula's clause width.
int algebraic_degree(const ScsCertificate& cert);

/// Pass iff viol(F,a) = 1 + cube_hits(G,a) at every checked
/// assignment; a failure carries the first bad assignment.
Verdict check_certificate(const ScsCertificate& cert, const CheckMode& mode,
                          int jobs = 1);

/// Exact dense table of viol_F.
PseudoFunction viol_table(const ClauseMultiset& f, int jobs = 1);

/// Dense table of cube_hits for a cube multiset.
PseudoFunction hits_table(const CubeMultiset& g, int jobs = 1);

/// Point-cube decomposition of a nonnegative integral function: one
/// full-width cube per assignment, with multiplicity d(a). Rejects any
/// negative value, naming the assignment.
CubeMultiset from_pointwise(const PseudoFunction& d);

/// Per-pair check of viol_F(a1^a2) = viol_{F∘xor}(a1,a2); the composed
/// formula is built internally.
Verdict compose_xor_check(const ClauseMultiset& f, const Assignment& a1,
                          const Assignment& a2);

/// Sweep of the same identity over all assignment pairs.
Verdict compose_xor_check_all(const ClauseMultiset& f, int jobs = 1);

/// Lift h to (a1,a2) -> h(a1^a2) over doubled variables (copy 1 of
/// original variable i is 2i-1, copy 2 is 2i).
PseudoFunction xor_lift(const PseudoFunction& h);

/// Certificate file = cube list with a `c formula <path>` header.
void write_certificate_file(const std::string& path, const ScsCertificate& cert,
                            const std::string& formula_path,
                            const std::vector<std::string>& comments = {});

}  // namespace pcw

#endif
