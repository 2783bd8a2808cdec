#ifndef FSCHUR_COMPOSITION_HPP
#define FSCHUR_COMPOSITION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fschur/checked.hpp"

namespace fschur {

/// A finite sequence of positive integer parts. The empty sequence is the
/// unique composition of 0. Part indices are 1-based in all public
/// operations.
class Composition {
public:
    Composition() = default;
    /// Rejects any part <= 0, naming the offending (1-based) index.
    explicit Composition(std::vector<Int> parts);

    const std::vector<Int>& parts() const { return parts_; }
    Int part(std::size_t i) const { return parts_[i - 1]; } // 1-based
    std::size_t length() const { return parts_.size(); }
    Int size() const;

    bool operator==(const Composition&) const = default;

private:
    std::vector<Int> parts_;
};

/// A weakly decreasing sequence of positive integer parts; the empty
/// partition is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<Int> parts);

    const std::vector<Int>& parts() const { return parts_; }
    Int part(std::size_t i) const { return parts_[i - 1]; } // 1-based
    std::size_t length() const { return parts_.size(); }
    Int size() const;

    Composition as_composition() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<Int> parts_;
};

/// Value class of a straightened composition Schur function: zero, or a
/// sign together with a partition.
class SignedPartition {
public:
    SignedPartition() = default; // zero
    static SignedPartition zero() { return SignedPartition(); }
    SignedPartition(int sign, Partition shape);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; } // 0 when zero
    const Partition& shape() const;    // requires !is_zero()

    /// Maps zero to zero, otherwise flips the sign.
    SignedPartition negated() const;

    bool operator==(const SignedPartition&) const = default;

private:
    int sign_ = 0;
    Partition shape_;
};

/// Canonical order on part sequences: by size, then length, then
/// lexicographic. Used for all deterministic iteration and serialization.
bool canonical_less(const std::vector<Int>& a, const std::vector<Int>& b);

struct CompositionLess {
    bool operator()(const Composition& a, const Composition& b) const {
        return canonical_less(a.parts(), b.parts());
    }
};

struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return canonical_less(a.parts(), b.parts());
    }
};

/// The raising operation: replaces (L_{i-1}, L_i) with (L_i - 1, L_{i-1} + 1).
/// Requires 2 <= i <= length and L_i >= 2. At the straightened level this
/// negates the composition Schur function.
Composition raise(const Composition& L, std::size_t i);

/// Normal form of the Jacobi-Trudi determinant det(h_{L_i - i + j}):
/// zero, or a sign and a partition. Works on the row values v_i = L_i - i:
/// a value collision gives zero; otherwise the values sort strictly
/// decreasing with the sign of the sorting permutation.
SignedPartition straighten(const Composition& L);

/// Same straightening on a raw part sequence (parts may be <= 0). A sorted
/// value v_j = -j gives a trailing zero part, which truncates; any value
/// below that kills a determinant row and gives zero.
SignedPartition straighten_parts(const std::vector<Int>& parts);

/// Straightening by the raising chain: repeatedly raise at the smallest
/// applicable index, flipping the sign each time; a fixed point (equal
/// adjacent values) gives zero. Agrees with straighten on every input.
SignedPartition straighten_by_raises(const Composition& L);

struct RaiseStep {
    std::size_t index; // 1-based raise index
    Composition after;
};

/// The raise chain of straighten_by_raises. When the result is zero because
/// some raise is a fixed point, fixed_index names it.
struct RaiseTrace {
    std::vector<RaiseStep> steps;
    std::size_t fixed_index = 0; // 0 when no fixed point was hit
    SignedPartition result = SignedPartition::zero();
};

RaiseTrace straighten_trace(const Composition& L);

/// All compositions of n, in canonical (lexicographic) order.
std::vector<Composition> all_compositions(Int n);
/// All compositions of 0..max_size, in canonical order.
std::vector<Composition> compositions_up_to(Int max_size);
/// All partitions of n, in canonical order.
std::vector<Partition> all_partitions(Int n);
/// All partitions of 0..max_size, in canonical order.
std::vector<Partition> partitions_up_to(Int max_size);

std::string to_string(const Composition& c);     // "(4,1)"
std::string to_string(const Partition& p);       // "(4,1)"
std::string to_string(const SignedPartition& s); // "+ s[4,1]" / "- s[3,2]" / "0"

} // namespace fschur

#endif
