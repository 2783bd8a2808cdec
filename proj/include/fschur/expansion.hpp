#ifndef FSCHUR_EXPANSION_HPP
#define FSCHUR_EXPANSION_HPP

#include <map>
#include <optional>
#include <string>

#include "fschur/composition.hpp"

namespace fschur {

/// Integer linear combination over the fundamental quasi-symmetric basis,
/// keyed by composition. Zero coefficients are never stored; iteration is
/// in canonical composition order.
using FExpansion = std::map<Composition, Int, CompositionLess>;

/// Integer linear combination over the Schur basis, keyed by partition.
using SchurExpansion = std::map<Partition, Int, PartitionLess>;

/// Adds coeff to the term, dropping it if the total cancels. Checked.
void add_term(FExpansion& e, const Composition& key, Int coeff);
void add_term(SchurExpansion& e, const Partition& key, Int coeff);

/// Stanley's expansion: s_shape = sum of F_{C(T)} over all standard
/// tableaux T of the shape.
FExpansion schur_to_f(const Partition& shape);

/// The fundamental-to-Schur conversion: each term c_L F_L contributes
/// c_L * sign onto the straightened partition of L; zero straightenings and
/// cancelled coefficients drop out. Total; meaningful as a symmetric
/// function identity only when the input is symmetric.
SchurExpansion f_to_schur(const FExpansion& f);

struct ConvertReport {
    SchurExpansion result;
    bool symmetric = false;
    /// First composition (canonical order) where the round-trip
    /// re-expansion differs from the input, when not symmetric.
    std::optional<Composition> first_discrepancy;
    Int expected = 0; // input coefficient at the discrepancy
    Int actual = 0;   // round-trip coefficient at the discrepancy
};

/// f_to_schur plus the hypothesis check: re-expands the result through
/// schur_to_f and compares with the input exactly.
ConvertReport verified_convert(const FExpansion& f);

/// Re-expansion of a Schur expansion into the F basis.
FExpansion schur_expansion_to_f(const SchurExpansion& g);

std::string to_string(const FExpansion& e);     // "F[4,1] + 2*F[3,2]"
std::string to_string(const SchurExpansion& e); // "s[4,1] - s[3,2]"

} // namespace fschur

#endif
