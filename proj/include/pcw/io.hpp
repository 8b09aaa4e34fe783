#ifndef PCW_IO_HPP
#define PCW_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pcw/core.hpp"

namespace pcw {

/// DIMACS CNF. Multiplicities are encoded by repeated clause lines;
/// occurrence order in the file is preserved.
ClauseMultiset read_dimacs(std::istream& in);
ClauseMultiset read_dimacs_file(const std::string& path);
void write_dimacs(std::ostream& out, const ClauseMultiset& f,
                  const std::vector<std::string>& comments = {});
void write_dimacs_file(const std::string& path, const ClauseMultiset& f,
                       const std::vector<std::string>& comments = {});

/// Cube lists use the DIMACS token grammar: one cube per line as a
/// signed-literal list terminated by 0 (+v fixes v=1, -v fixes v=0),
/// after a `p cube <nvars> <ncubes>` line. A certificate file may name
/// its formula in a `c formula <path>` comment.
struct CubeFile {
    CubeMultiset cubes;
    std::optional<std::string> formula_path;
};
CubeFile read_cubes(std::istream& in);
CubeFile read_cubes_file(const std::string& path);
void write_cubes(std::ostream& out, const CubeMultiset& g,
                 const std::optional<std::string>& formula_path = std::nullopt,
                 const std::vector<std::string>& comments = {});
void write_cubes_file(const std::string& path, const CubeMultiset& g,
                      const std::optional<std::string>& formula_path = std::nullopt,
                      const std::vector<std::string>& comments = {});

}  // namespace pcw

#endif
