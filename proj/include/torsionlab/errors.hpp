#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace torsionlab {

/* Error taxonomy.  The CLI maps these onto process exit codes:
 *   parse_error, validation_error, shape_error          -> 1
 *   precondition_error and subclasses (non-acyclicity,
 *   poles, degenerate minors, dependent classes, ...)   -> 2
 *   internal_error (broken invariant, must not happen)  -> 3
 */

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what, int line = -1)
        : std::runtime_error(line >= 0 ? "parse error (line " + std::to_string(line) + "): " + what
                                       : "parse error: " + what),
          line_number(line) {}
    int line_number;
};

struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error("validation error: " + what) {}
};

struct shape_error : std::runtime_error {
    explicit shape_error(const std::string& what) : std::runtime_error("shape error: " + what) {}
};

struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

struct division_by_zero : precondition_error {
    division_by_zero() : precondition_error("division by zero") {}
};

struct pole_error : precondition_error {
    explicit pole_error(const std::string& what) : precondition_error("pole: " + what) {}
};

struct no_solution_error : precondition_error {
    explicit no_solution_error(const std::string& what) : precondition_error("no solution: " + what) {}
};

// Torsion of a non-acyclic complex was requested; carries the cohomology dimensions.
struct not_acyclic_error : precondition_error {
    explicit not_acyclic_error(std::vector<std::size_t> h)
        : precondition_error(compose(h)), h_dims(std::move(h)) {}
    std::vector<std::size_t> h_dims;

  private:
    static std::string compose(const std::vector<std::size_t>& h) {
        std::string s = "complex is not acyclic; cohomology dimensions:";
        for (std::size_t d : h) s += " " + std::to_string(d);
        return s;
    }
};

// Supplied cohomology representatives are not cocycles / not independent.
struct basis_error : precondition_error {
    explicit basis_error(const std::string& what) : precondition_error("basis error: " + what) {}
};

// A tau-chain minor vanished: F_alpha undefined at this differential.
struct degenerate_error : precondition_error {
    explicit degenerate_error(const std::string& what) : precondition_error("degenerate: " + what) {}
};

struct domain_error : precondition_error {
    explicit domain_error(const std::string& what) : precondition_error("domain error: " + what) {}
};

struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error("internal error: " + what) {}
};

} // namespace torsionlab
