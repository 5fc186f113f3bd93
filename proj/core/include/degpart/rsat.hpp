#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace degpart {

/// CNF formula with signed 1-based literals.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

/// DIMACS CNF: "p cnf <vars> <clauses>" header, clauses are 0-terminated
/// integer runs. Comments "c ..." allowed before and between clauses.
CnfFormula parse_cnf(std::istream& in);
CnfFormula parse_cnf_text(const std::string& text);
CnfFormula parse_cnf_file(const std::string& path);
std::string serialize_cnf(const CnfFormula& f);

/// CNF whose clauses have exactly two or exactly four literals and in which
/// every signed literal occurs at most twice.
struct RSatInstance {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    static RSatInstance from_cnf(const CnfFormula& f);
    CnfFormula to_cnf() const;
    void check_valid() const; // throws std::invalid_argument on violations
};

enum class SatVariant {
    NAE,   // every clause has at least one true and at least one false literal
    EXACT, // every clause has exactly one true literal
    ALL,   // every 4-clause has at least one true literal, every 2-clause exactly one
};

using Assignment = std::vector<bool>; // indexed by variable - 1

bool check_assignment(const std::vector<std::vector<int>>& clauses,
                      const Assignment& assignment, SatVariant variant);
bool check_assignment(const RSatInstance& inst, const Assignment& assignment,
                      SatVariant variant);

struct ReductionResult {
    RSatInstance instance;
    /// copies_of[y-1] = new 1-based variable ids replacing original y, in
    /// occurrence order (a single entry when y occurs at most once).
    std::vector<std::vector<int>> copies_of;
};

/// Splits every variable with r > 1 occurrences into r copies (occurrence j
/// becomes copy j, sign preserved) and links the copies with the cycle of
/// 2-clauses (y1 v -y2), (y2 v -y3), ..., (yr v -y1). Input clauses must
/// have exactly four literals.
ReductionResult reduce_to_rsat(const CnfFormula& four_cnf);

/// Assignment file: one "v <var> <0|1>" line per variable, 1-based.
std::string serialize_assignment(const Assignment& a);
Assignment parse_assignment(std::istream& in, int expected_vars = -1);
Assignment parse_assignment_text(const std::string& text, int expected_vars = -1);
Assignment parse_assignment_file(const std::string& path, int expected_vars = -1);

} // namespace degpart
