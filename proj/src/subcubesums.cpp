#include "pcw/subcubesums.hpp"

#include <atomic>
#include <random>

#include "pcw/io.hpp"

namespace pcw {

ScsMeasures measures(const CubeMultiset& g) {
    return {g.size(), g.width()};
}

int algebraic_degree(const ScsCertificate& cert) {
    return std::max(cert.cubes.width(), cert.formula.width());
}

namespace {

// first assignment index violating pred, or UINT64_MAX
template <typename Pred>
std::uint64_t first_violation(int n, int jobs, Pred&& ok) {
    std::uint64_t total = std::uint64_t{1} << n;
    std::atomic<std::uint64_t> bad{UINT64_MAX};
    parallel_for(total, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            if (idx >= bad.load(std::memory_order_relaxed)) return;
            if (!ok(idx)) {
                std::uint64_t cur = bad.load();
                while (idx < cur && !bad.compare_exchange_weak(cur, idx)) {
                }
                return;
            }
        }
    });
    return bad.load();
}

}  // namespace

Verdict check_certificate(const ScsCertificate& cert, const CheckMode& mode,
                          int jobs) {
    const auto& f = cert.formula;
    const auto& g = cert.cubes;
    if (f.num_vars != g.num_vars)
        throw DomainError("certificate and formula disagree on num_vars");
    int n = f.num_vars;
    auto holds = [&](std::uint64_t idx) {
        auto a = Assignment::from_index(n, idx);
        return viol(f, a) == 1 + cube_hits(g, a);
    };
    if (mode.kind == CheckMode::Kind::Exhaustive) {
        if (n > 62) throw DomainError("exhaustive check infeasible");
        std::uint64_t bad = first_violation(n, jobs, holds);
        if (bad == UINT64_MAX) return Verdict::ok("exhaustive");
        return Verdict::fail("exhaustive", Assignment::from_index(n, bad));
    }
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << n) - 1);
    for (std::uint64_t s = 0; s < mode.samples; ++s) {
        std::uint64_t idx = dist(rng);
        if (!holds(idx)) {
            auto v = Verdict::fail("sampled", Assignment::from_index(n, idx));
            v.samples = mode.samples;
            v.seed = mode.seed;
            return v;
        }
    }
    auto v = Verdict::ok("sampled");
    v.samples = mode.samples;
    v.seed = mode.seed;
    return v;
}

PseudoFunction viol_table(const ClauseMultiset& f, int jobs) {
    PseudoFunction::check_size(f.num_vars);
    auto t = PseudoFunction::zero(f.num_vars);
    std::uint64_t total = std::uint64_t{1} << f.num_vars;
    parallel_for(total, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t idx = lo; idx < hi; ++idx)
            t.values[idx] = viol(f, Assignment::from_index(f.num_vars, idx));
    });
    return t;
}

PseudoFunction hits_table(const CubeMultiset& g, int jobs) {
    PseudoFunction::check_size(g.num_vars);
    auto t = PseudoFunction::zero(g.num_vars);
    std::uint64_t total = std::uint64_t{1} << g.num_vars;
    parallel_for(total, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t idx = lo; idx < hi; ++idx)
            t.values[idx] = cube_hits(g, Assignment::from_index(g.num_vars, idx));
    });
    return t;
}

CubeMultiset from_pointwise(const PseudoFunction& d) {
    CubeMultiset g(d.num_vars);
    for (std::uint64_t idx = 0; idx < d.values.size(); ++idx) {
        long long v = d.values[idx];
        if (v < 0)
            throw DomainError(
                "negative value at assignment " +
                Assignment::from_index(d.num_vars, idx).to_string());
        if (v == 0) continue;
        auto a = Assignment::from_index(d.num_vars, idx);
        std::vector<Lit> fixed;
        fixed.reserve(d.num_vars);
        for (int var = 1; var <= d.num_vars; ++var)
            fixed.push_back(a.value(var) ? var : -var);
        g.add(Cube(std::move(fixed)), static_cast<int>(v));
    }
    return g;
}

namespace {

// composed assignment: copy 1 of variable i is 2i-1, copy 2 is 2i
Assignment join_pair(const Assignment& a1, const Assignment& a2) {
    int n = a1.num_vars;
    std::uint64_t bits = 0;
    for (int v = 1; v <= n; ++v) {
        bits = (bits << 1) | (a1.value(v) ? 1u : 0u);
        bits = (bits << 1) | (a2.value(v) ? 1u : 0u);
    }
    return Assignment::from_index(2 * n, bits);
}

Assignment xor_pair(const Assignment& a1, const Assignment& a2) {
    return Assignment::from_index(a1.num_vars, a1.bits ^ a2.bits);
}

}  // namespace

Verdict compose_xor_check(const ClauseMultiset& f, const Assignment& a1,
                          const Assignment& a2) {
    if (a1.num_vars != f.num_vars || a2.num_vars != f.num_vars)
        throw DomainError("assignment size mismatch");
    auto composed = compose(f, Gadget::XOR2);
    bool ok = viol(f, xor_pair(a1, a2)) == viol(composed, join_pair(a1, a2));
    if (ok) return Verdict::ok("exhaustive");
    return Verdict::fail("exhaustive", join_pair(a1, a2));
}

Verdict compose_xor_check_all(const ClauseMultiset& f, int jobs) {
    int n = f.num_vars;
    if (2 * n > 30) throw DomainError("sweep too large");
    auto composed = compose(f, Gadget::XOR2);
    auto base = viol_table(f, jobs);
    auto lifted = viol_table(composed, jobs);
    std::uint64_t pairs = std::uint64_t{1} << (2 * n);
    std::uint64_t bad = first_violation(2 * n, jobs, [&](std::uint64_t idx) {
        auto joint = Assignment::from_index(2 * n, idx);
        std::uint64_t x = 0;
        for (int v = 1; v <= n; ++v) {
            bool b = joint.value(2 * v - 1) ^ joint.value(2 * v);
            x = (x << 1) | (b ? 1u : 0u);
        }
        return lifted.values[idx] == base.values[x];
    });
    (void)pairs;
    if (bad == UINT64_MAX) return Verdict::ok("exhaustive");
    return Verdict::fail("exhaustive", Assignment::from_index(2 * n, bad));
}

PseudoFunction xor_lift(const PseudoFunction& h) {
    int n = h.num_vars;
    PseudoFunction::check_size(2 * n);
    auto out = PseudoFunction::zero(2 * n);
    for (std::uint64_t idx = 0; idx < out.values.size(); ++idx) {
        auto joint = Assignment::from_index(2 * n, idx);
        std::uint64_t x = 0;
        for (int v = 1; v <= n; ++v) {
            bool b = joint.value(2 * v - 1) ^ joint.value(2 * v);
            x = (x << 1) | (b ? 1u : 0u);
        }
        out.values[idx] = h.values[x];
    }
    return out;
}

void write_certificate_file(const std::string& path, const ScsCertificate& cert,
                            const std::string& formula_path,
                            const std::vector<std::string>& comments) {
    write_cubes_file(path, cert.cubes, formula_path, comments);
}

}  // namespace pcw
