#ifndef FSCHUR_EXPR_HPP
#define FSCHUR_EXPR_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fschur/composition.hpp"
#include "fschur/expansion.hpp"
#include "fschur/polynomial.hpp"

namespace fschur {

/// One parsed atom with its source position (both 1-based).
struct ExprAtom {
    char basis = 'F'; // 'F' or 's'
    Composition index;
    Int coeff = 1;
    std::size_t line = 1;
    std::size_t column = 1;
};

/// A signed integer combination of F[...] and s[...] atoms, merged by
/// basis element. s-atoms may carry any composition; they straighten on
/// evaluation.
struct Expression {
    FExpansion f_terms;
    std::map<Composition, Int, CompositionLess> s_terms;

    bool empty() const { return f_terms.empty() && s_terms.empty(); }
    bool operator==(const Expression&) const = default;
};

class ParseError : public std::runtime_error {
public:
    enum class Kind { Syntax, Validity };

    ParseError(Kind kind, std::size_t line, std::size_t column,
               const std::string& message, const std::string& expected = "");

    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& expected() const { return expected_; }

private:
    Kind kind_;
    std::size_t line_, column_;
    std::string expected_;
};

/// Grammar: expr := term (('+'|'-') term)* ; term := [integer '*']? atom ;
/// atom := ('F'|'s') '[' [integer (',' integer)*] ']'. Whitespace is
/// insignificant, a leading '-' is allowed, "" and "0" parse to the zero
/// expression. Non-positive bracket entries raise a validity error.
std::vector<ExprAtom> parse_atoms(const std::string& text);
Expression parse_expression(const std::string& text);

Expression combine(const std::vector<ExprAtom>& atoms);

/// Canonical text: F terms then s terms, each in canonical composition
/// order; parse(serialize(e)) == e.
std::string serialize(const Expression& e);
std::string serialize(const SchurExpansion& e);

/// Straightens the s-atoms, converts the F-atoms, and merges.
SchurExpansion evaluate_schur(const Expression& e);

/// Exact monomial expansion of the expression in nvars variables.
SparsePolynomial evaluate_poly(const Expression& e, std::size_t nvars);

} // namespace fschur

#endif
