#ifndef FSCHUR_PAR_HPP
#define FSCHUR_PAR_HPP

#include <cstddef>
#include <vector>

#include "fschur/composition.hpp"
#include "fschur/expansion.hpp"
#include "fschur/polynomial.hpp"

// OpenMP-parallel kernels for the oracle layer. Each one computes exactly
// the same map as its serial counterpart in polynomial.hpp / tableau.hpp
// (integer arithmetic is exact, so merge order cannot change the result);
// tests/test_parallel.cpp holds them to that. Built without OpenMP they
// fall back to the serial path.

namespace fschur::par {

/// Parallel over the k! permutations of the determinant expansion.
SparsePolynomial jacobi_trudi_poly(const Composition& L, std::size_t nvars);
SparsePolynomial jacobi_trudi_parts_poly(const std::vector<Int>& parts,
                                         std::size_t nvars);
SparsePolynomial schur_poly(const Partition& shape, std::size_t nvars);

/// Parallel over the value of the first index in the sequence enumeration.
SparsePolynomial f_poly(const Composition& L, std::size_t nvars);

/// Parallel over expansion terms.
SparsePolynomial expansion_poly(const FExpansion& e, std::size_t nvars);
SparsePolynomial expansion_poly(const SchurExpansion& e, std::size_t nvars);

// Batch verification drivers, parallel over independent instances. Each
// returns the failing instances (empty when the identity holds).

/// For every partition with |shape| <= max_size: the signed straightened
/// descent compositions over all standard tableaux telescope to
/// {shape: +1}.
std::vector<Partition> schur_sum_failures(Int max_size);

/// For every composition with size <= max_size:
/// straighten == straighten_by_raises.
std::vector<Composition> straighten_agreement_failures(Int max_size);

/// For every composition with size <= max_size: the Jacobi-Trudi
/// polynomial equals sign * schur_poly of the straightened partition
/// (the zero polynomial when straightening gives zero).
std::vector<Composition> jacobi_trudi_oracle_failures(Int max_size,
                                                      std::size_t nvars);

} // namespace fschur::par

#endif
