#ifndef FSCHUR_TABLEAU_HPP
#define FSCHUR_TABLEAU_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fschur/composition.hpp"

namespace fschur {

/// A straight-shape tableau with distinct positive entries, strictly
/// increasing along rows and columns (English notation, rows top-down).
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<Int>> rows);

    const std::vector<std::vector<Int>>& rows() const { return rows_; }
    Partition shape() const;
    Int size() const; // number of cells

    bool operator==(const Tableau&) const = default;

private:
    std::vector<std::vector<Int>> rows_;
};

/// A Tableau whose entry set is exactly {1, ..., n}.
class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(Tableau t);
    explicit StandardTableau(std::vector<std::vector<Int>> rows);

    const Tableau& tableau() const { return tableau_; }
    const std::vector<std::vector<Int>>& rows() const { return tableau_.rows(); }
    Partition shape() const { return tableau_.shape(); }
    Int size() const { return tableau_.size(); }

    bool operator==(const StandardTableau&) const = default;

private:
    Tableau tableau_;
};

/// Descents d_1 < ... < d_j of a standard tableau (entries i with i+1 in a
/// lower row) together with the descent composition
/// (d_1, d_2 - d_1, ..., n - d_j).
struct DescentData {
    std::vector<Int> descents;
    Composition composition;
};

DescentData descent_data(const StandardTableau& t);

/// Descent data of the standardization of any distinct-entry tableau
/// (entries replaced by their ranks 1..n).
DescentData descent_data_general(const Tableau& t);

struct Cell {
    std::size_t row = 0; // 0-based
    std::size_t col = 0; // 0-based
    Int value = 0;
};

/// The runs of t: maximal blocks of consecutive entries between descents,
/// returned as cell sets ordered by value. Run lengths are the parts of the
/// descent composition, in order.
std::vector<std::vector<Cell>> runs(const StandardTableau& t);

/// Visits every standard tableau of the shape exactly once, placing
/// entries 1..n in addable corners with children ordered by row index
/// (a deterministic backtracking order).
void for_each_syt(const Partition& shape,
                  const std::function<void(const StandardTableau&)>& fn);

/// The standard tableaux of the shape, listed in lexicographic order of
/// the row-reading word.
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

/// Number of standard tableaux of the shape (hook length formula), exact.
Int count_syt(const Partition& shape);

/// The unique standard tableau with consecutive rows of consecutive
/// integers; its descent composition equals the shape.
StandardTableau superstandard(const Partition& shape);

bool is_superstandard(const StandardTableau& t);

/// Maximal k such that rows 1..k form a superstandard tableau. Requires t
/// not superstandard; the result then satisfies k + 2 <= number of rows.
std::size_t superstandard_prefix_length(const StandardTableau& t);

/// For a two-row tableau with exactly two runs: the length j of the first
/// run (after standardization), with shape_2 <= j <= shape_1.
std::size_t two_run_index(const Tableau& t);

/// The two-run involution: the tableau T_j of shape (s1, s2) maps to
/// T_{n-j-1}, relabeled back to the original entry set. Requires j < s1
/// (the superstandard tableau, j = s1, is excluded).
Tableau theta_two_run(const Tableau& t);

struct ThetaResult {
    StandardTableau image;
    /// The 1-based index with C(image) = raise(C(T), raise_index).
    std::size_t raise_index = 0;
};

/// The sign-reversing involution on standard, not superstandard tableaux:
/// keeps the superstandard prefix of k rows, applies the two-run involution
/// to the first two runs of the remaining subtableau. Shape-preserving;
/// applying it twice gives the input back.
ThetaResult theta(const StandardTableau& t);

enum class PairingClass { Superstandard, Fixed, Paired };

struct PairingEntry {
    StandardTableau tableau;
    DescentData descent;
    SignedPartition straightened;
    PairingClass cls = PairingClass::Superstandard;
    std::optional<std::size_t> partner;     // index into entries, when Paired
    std::optional<std::size_t> raise_index; // reported by theta
};

struct PairingReport {
    Partition shape;
    std::vector<PairingEntry> entries;
    /// Sum over all tableaux of the signed straightened descent
    /// compositions; equals {shape: +1} when ok.
    std::map<Partition, Int, PartitionLess> telescoped;
    bool ok = false;
};

/// Enumerates the standard tableaux of the shape and classifies each as the
/// superstandard one, a theta fixed point (straightening to zero), or half
/// of a cancelling pair.
PairingReport cancellation_pairing(const Partition& shape);

std::string to_string(const Tableau& t);         // "[[1,2,3],[4,5]]"
std::string to_string(const StandardTableau& t);

} // namespace fschur

#endif
