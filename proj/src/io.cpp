#include "pcw/io.hpp"

#include <fstream>
#include <sstream>

namespace pcw {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    return out;
}

}  // namespace

ClauseMultiset read_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    int nvars = -1;
    long long nclauses = -1;
    ClauseMultiset f;
    std::vector<Lit> current;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            std::istringstream ls(line);
            std::string p, fmt;
            if (!(ls >> p >> fmt >> nvars >> nclauses) || fmt != "cnf")
                parse_fail(lineno, "malformed problem line");
            if (nvars < 0 || nclauses < 0)
                parse_fail(lineno, "negative counts in problem line");
            f = ClauseMultiset(nvars);
            continue;
        }
        if (nvars < 0) parse_fail(lineno, "clause before problem line");
        std::istringstream ls(line);
        Lit l;
        while (ls >> l) {
            if (l == 0) {
                try {
                    f.add(Clause(current));
                } catch (const DomainError& e) {
                    parse_fail(lineno, e.what());
                }
                current.clear();
            } else {
                if (lit_var(l) > nvars)
                    parse_fail(lineno, "literal exceeds declared num_vars");
                current.push_back(l);
            }
        }
        if (!ls.eof()) parse_fail(lineno, "bad token in clause");
    }
    if (!current.empty()) throw ParseError("unterminated clause at end of file");
    if (nvars < 0) throw ParseError("missing problem line");
    if (static_cast<long long>(f.size()) != nclauses)
        throw ParseError("clause count mismatch: header says " +
                         std::to_string(nclauses) + ", found " +
                         std::to_string(f.size()));
    return f;
}

ClauseMultiset read_dimacs_file(const std::string& path) {
    auto in = open_in(path);
    try {
        return read_dimacs(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_dimacs(std::ostream& out, const ClauseMultiset& f,
                  const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << '\n';
    out << "p cnf " << f.num_vars << ' ' << f.size() << '\n';
    for (const auto& c : f.clauses) {
        for (Lit l : c.lits()) out << l << ' ';
        out << "0\n";
    }
}

void write_dimacs_file(const std::string& path, const ClauseMultiset& f,
                       const std::vector<std::string>& comments) {
    auto out = open_out(path);
    write_dimacs(out, f, comments);
}

CubeFile read_cubes(std::istream& in) {
    std::string line;
    int lineno = 0;
    int nvars = -1;
    long long ncubes = -1;
    CubeFile result;
    std::vector<Lit> current;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == 'c') {
            std::istringstream ls(line);
            std::string c, key, value;
            if (ls >> c >> key >> value && key == "formula")
                result.formula_path = value;
            continue;
        }
        if (line[0] == 'p') {
            std::istringstream ls(line);
            std::string p, fmt;
            if (!(ls >> p >> fmt >> nvars >> ncubes) || fmt != "cube")
                parse_fail(lineno, "malformed cube problem line");
            if (nvars < 0 || ncubes < 0)
                parse_fail(lineno, "negative counts in cube problem line");
            result.cubes = CubeMultiset(nvars);
            continue;
        }
        if (nvars < 0) parse_fail(lineno, "cube before problem line");
        std::istringstream ls(line);
        Lit l;
        while (ls >> l) {
            if (l == 0) {
                try {
                    result.cubes.add(Cube(current));
                } catch (const DomainError& e) {
                    parse_fail(lineno, e.what());
                }
                current.clear();
            } else {
                if (lit_var(l) > nvars)
                    parse_fail(lineno, "cube literal exceeds declared num_vars");
                current.push_back(l);
            }
        }
        if (!ls.eof()) parse_fail(lineno, "bad token in cube");
    }
    if (!current.empty()) throw ParseError("unterminated cube at end of file");
    if (nvars < 0) throw ParseError("missing cube problem line");
    if (static_cast<long long>(result.cubes.size()) != ncubes)
        throw ParseError("cube count mismatch: header says " +
                         std::to_string(ncubes) + ", found " +
                         std::to_string(result.cubes.size()));
    return result;
}

CubeFile read_cubes_file(const std::string& path) {
    auto in = open_in(path);
    try {
        return read_cubes(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_cubes(std::ostream& out, const CubeMultiset& g,
                 const std::optional<std::string>& formula_path,
                 const std::vector<std::string>& comments) {
    if (formula_path) out << "c formula " << *formula_path << '\n';
    for (const auto& c : comments) out << "c " << c << '\n';
    out << "p cube " << g.num_vars << ' ' << g.size() << '\n';
    for (const auto& c : g.cubes) {
        for (Lit l : c.literals()) out << l << ' ';
        out << "0\n";
    }
}

void write_cubes_file(const std::string& path, const CubeMultiset& g,
                      const std::optional<std::string>& formula_path,
                      const std::vector<std::string>& comments) {
    auto out = open_out(path);
    write_cubes(out, g, formula_path, comments);
}

}  // namespace pcw
