#include "degpart/rsat.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace degpart {

namespace {

[[noreturn]] void cnf_fail(const std::string& what) {
    throw std::runtime_error("cnf parse error: " + what);
}

} // namespace

CnfFormula parse_cnf(std::istream& in) {
    std::string line;
    bool seen_header = false;
    long long num_vars = 0, num_clauses = 0;
    CnfFormula f;
    std::vector<int> current;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        if (!seen_header) {
            std::string tag, kind, extra;
            if (!(ss >> tag >> kind >> num_vars >> num_clauses) || tag != "p" || kind != "cnf" ||
                (ss >> extra) || num_vars < 0 || num_clauses < 0)
                cnf_fail("malformed header, expected 'p cnf <vars> <clauses>'");
            seen_header = true;
            f.num_vars = static_cast<int>(num_vars);
            continue;
        }
        long long lit;
        while (ss >> lit) {
            if (lit == 0) {
                f.clauses.push_back(current);
                current.clear();
            } else {
                long long var = std::llabs(lit);
                if (var > num_vars) cnf_fail("variable out of range");
                current.push_back(static_cast<int>(lit));
            }
        }
        if (!ss.eof()) cnf_fail("malformed literal");
    }
    if (!seen_header) cnf_fail("missing header");
    if (!current.empty()) cnf_fail("clause without terminating 0");
    if (static_cast<long long>(f.clauses.size()) != num_clauses)
        cnf_fail("header declares " + std::to_string(num_clauses) + " clauses, file has " +
                 std::to_string(f.clauses.size()));
    return f;
}

CnfFormula parse_cnf_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_cnf(ss);
}

CnfFormula parse_cnf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cnf file: " + path);
    return parse_cnf(in);
}

std::string serialize_cnf(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

RSatInstance RSatInstance::from_cnf(const CnfFormula& f) {
    RSatInstance inst{f.num_vars, f.clauses};
    inst.check_valid();
    return inst;
}

CnfFormula RSatInstance::to_cnf() const { return CnfFormula{num_vars, clauses}; }

void RSatInstance::check_valid() const {
    std::map<int, int> literal_count;
    for (const auto& clause : clauses) {
        if (clause.size() != 2 && clause.size() != 4)
            throw std::invalid_argument("rsat: clause must have exactly 2 or 4 literals");
        for (int lit : clause) {
            int var = std::abs(lit);
            if (var < 1 || var > num_vars) throw std::invalid_argument("rsat: variable out of range");
            if (++literal_count[lit] > 2)
                throw std::invalid_argument("rsat: literal occurs more than twice");
        }
    }
}

bool check_assignment(const std::vector<std::vector<int>>& clauses, const Assignment& assignment,
                      SatVariant variant) {
    for (const auto& clause : clauses) {
        int true_count = 0;
        for (int lit : clause) {
            size_t var = static_cast<size_t>(std::abs(lit)) - 1;
            if (var >= assignment.size())
                throw std::invalid_argument("check_assignment: assignment is not total");
            bool value = lit > 0 ? assignment[var] : !assignment[var];
            true_count += value;
        }
        int size = static_cast<int>(clause.size());
        switch (variant) {
        case SatVariant::NAE:
            if (true_count == 0 || true_count == size) return false;
            break;
        case SatVariant::EXACT:
            if (true_count != 1) return false;
            break;
        case SatVariant::ALL:
            if (size == 2 ? true_count != 1 : true_count == 0) return false;
            break;
        }
    }
    return true;
}

bool check_assignment(const RSatInstance& inst, const Assignment& assignment, SatVariant variant) {
    if (static_cast<int>(assignment.size()) != inst.num_vars)
        throw std::invalid_argument("check_assignment: assignment is not total");
    return check_assignment(inst.clauses, assignment, variant);
}

ReductionResult reduce_to_rsat(const CnfFormula& four_cnf) {
    for (const auto& clause : four_cnf.clauses)
        if (clause.size() != 4)
            throw std::invalid_argument("reduce_to_rsat: clause of wrong arity, expected 4 literals");

    int n = four_cnf.num_vars;
    std::vector<int> occurrences(n + 1, 0);
    for (const auto& clause : four_cnf.clauses)
        for (int lit : clause) ++occurrences[std::abs(lit)];

    ReductionResult res;
    res.copies_of.assign(n, {});
    int next_var = 1;
    for (int y = 1; y <= n; ++y) {
        int copies = std::max(occurrences[y], 1);
        for (int j = 0; j < copies; ++j) res.copies_of[y - 1].push_back(next_var++);
    }
    res.instance.num_vars = next_var - 1;

    // Occurrence j of y (either sign, clause order) becomes copy j.
    std::vector<int> seen(n + 1, 0);
    for (const auto& clause : four_cnf.clauses) {
        std::vector<int> rewritten;
        rewritten.reserve(4);
        for (int lit : clause) {
            int y = std::abs(lit);
            int copy = res.copies_of[y - 1][seen[y]++];
            rewritten.push_back(lit > 0 ? copy : -copy);
        }
        res.instance.clauses.push_back(std::move(rewritten));
    }
    // Link the copies of each split variable in a cycle so they must agree.
    for (int y = 1; y <= n; ++y) {
        const auto& copies = res.copies_of[y - 1];
        if (copies.size() < 2) continue;
        for (size_t j = 0; j < copies.size(); ++j)
            res.instance.clauses.push_back({copies[j], -copies[(j + 1) % copies.size()]});
    }
    res.instance.check_valid();
    return res;
}

std::string serialize_assignment(const Assignment& a) {
    std::ostringstream out;
    for (size_t v = 0; v < a.size(); ++v) out << "v " << v + 1 << ' ' << (a[v] ? 1 : 0) << '\n';
    return out.str();
}

Assignment parse_assignment(std::istream& in, int expected_vars) {
    std::string line;
    int line_no = 0;
    std::vector<std::pair<int, bool>> entries;
    int max_var = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string tag, extra;
        int var, value;
        if (!(ss >> tag >> var >> value) || tag != "v" || (value != 0 && value != 1) || var < 1 ||
            (ss >> extra))
            throw std::runtime_error("assignment parse error at line " + std::to_string(line_no));
        entries.emplace_back(var, value == 1);
        max_var = std::max(max_var, var);
    }
    int n = expected_vars >= 0 ? expected_vars : max_var;
    Assignment a(n, false);
    std::vector<char> set(n, 0);
    for (auto [var, value] : entries) {
        if (var > n) throw std::runtime_error("assignment parse error: variable out of range");
        if (set[var - 1]) throw std::runtime_error("assignment parse error: repeated variable");
        set[var - 1] = 1;
        a[var - 1] = value;
    }
    for (int v = 0; v < n; ++v)
        if (!set[v])
            throw std::runtime_error("assignment parse error: variable " + std::to_string(v + 1) +
                                     " missing");
    return a;
}

Assignment parse_assignment_text(const std::string& text, int expected_vars) {
    std::istringstream ss(text);
    return parse_assignment(ss, expected_vars);
}

Assignment parse_assignment_file(const std::string& path, int expected_vars) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open assignment file: " + path);
    return parse_assignment(in, expected_vars);
}

} // namespace degpart
