#ifndef PCW_VERDICT_HPP
#define PCW_VERDICT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "pcw/core.hpp"

namespace pcw {

/// Checker outcome. A failed check carries a counterexample assignment
/// and, for proof replays, the 1-based index of the offending step.
struct Verdict {
    bool pass = true;
    std::string mode = "exhaustive";  // "exhaustive" or "sampled"
    std::optional<Assignment> witness;
    std::optional<int> step;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> detail;

    static Verdict ok(std::string mode) {
        Verdict v;
        v.mode = std::move(mode);
        return v;
    }
    static Verdict fail(std::string mode, Assignment witness) {
        Verdict v;
        v.pass = false;
        v.mode = std::move(mode);
        v.witness = witness;
        return v;
    }

    /// JSON record {pass, witness?, step?, mode, samples?, seed?, detail?}.
    std::string to_json() const;
};

}  // namespace pcw

#endif
