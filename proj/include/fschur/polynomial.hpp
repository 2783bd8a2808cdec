#ifndef FSCHUR_POLYNOMIAL_HPP
#define FSCHUR_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fschur/composition.hpp"
#include "fschur/expansion.hpp"

namespace fschur {

/// Graded lexicographic term order: total degree ascending, then exponent
/// vectors lexicographically descending (x1^2 before x1*x2 before x2^2).
struct GrlexLess {
    bool operator()(const std::vector<Int>& a, const std::vector<Int>& b) const;
};

/// Exact-integer multivariate polynomial, sparse over exponent vectors of
/// fixed length nvars. The brute-force oracle for every identity in this
/// project.
class SparsePolynomial {
public:
    using TermMap = std::map<std::vector<Int>, Int, GrlexLess>;

    explicit SparsePolynomial(std::size_t nvars = 0) : nvars_(nvars) {}
    static SparsePolynomial constant(std::size_t nvars, Int c);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int max_degree() const; // 0 for the zero polynomial

    /// Adds coeff * x^exp, dropping the term if it cancels. Checked.
    void add_term(const std::vector<Int>& exp, Int coeff);

    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial& operator-=(const SparsePolynomial& o);
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    SparsePolynomial operator-() const;
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
        a += b;
        return a;
    }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) {
        a -= b;
        return a;
    }

    SparsePolynomial scaled(Int c) const;
    SparsePolynomial with_swapped_vars(std::size_t i, std::size_t j) const;

    bool operator==(const SparsePolynomial&) const = default;

private:
    std::size_t nvars_;
    TermMap terms_;
};

/// Complete homogeneous symmetric polynomial: all monomials of degree k,
/// coefficient 1. Zero for k < 0, the constant 1 for k = 0.
SparsePolynomial h_poly(Int k, std::size_t nvars);

/// Fundamental quasi-symmetric polynomial F_L: weakly increasing index
/// sequences with strict increases at the partial sums of L.
SparsePolynomial f_poly(const Composition& L, std::size_t nvars);

/// det(h_{L_i - i + j}), expanded exactly by signed permutations.
SparsePolynomial jacobi_trudi_poly(const Composition& L, std::size_t nvars);

/// Same determinant on a raw row sequence (rows may have parts <= 0).
SparsePolynomial jacobi_trudi_parts_poly(const std::vector<Int>& parts,
                                         std::size_t nvars);

/// Ordinary Schur polynomial: the Jacobi-Trudi determinant of a partition.
SparsePolynomial schur_poly(const Partition& shape, std::size_t nvars);

/// Linear extension: sum of coeff * f_poly(L) over the expansion.
SparsePolynomial expansion_poly(const FExpansion& e, std::size_t nvars);
/// Linear extension: sum of coeff * schur_poly(mu) over the expansion.
SparsePolynomial expansion_poly(const SchurExpansion& e, std::size_t nvars);

/// Invariance under all adjacent variable swaps (they generate the full
/// symmetric group on the variables).
bool is_symmetric_poly(const SparsePolynomial& p);

std::string to_string(const SparsePolynomial& p); // "x1^2 + x1*x2 + x2^2"

} // namespace fschur

#endif
