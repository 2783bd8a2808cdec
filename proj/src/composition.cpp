#include "fschur/composition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fschur {

namespace {

Int sum_parts(const std::vector<Int>& parts) {
    Int total = 0;
    for (Int p : parts)
        total = checked_add(total, p);
    return total;
}

std::string join_parts(const std::vector<Int>& parts, char sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            os << sep;
        os << parts[i];
    }
    return os.str();
}

// Row values v_i = L_i - i (1-based i). Two equal values mean two equal
// determinant rows.
std::vector<Int> row_values(const std::vector<Int>& parts) {
    std::vector<Int> v(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        v[i] = parts[i] - static_cast<Int>(i + 1);
    return v;
}

// Partition from strictly decreasing values: part_j = v_j + j. A trailing
// zero part truncates; a negative part means an all-zero determinant row.
SignedPartition partition_from_sorted_values(const std::vector<Int>& v, int sign) {
    std::vector<Int> parts(v.size());
    for (std::size_t j = 0; j < v.size(); ++j)
        parts[j] = v[j] + static_cast<Int>(j + 1);
    if (!parts.empty() && parts.back() < 0)
        return SignedPartition::zero();
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    return SignedPartition(sign, Partition(std::move(parts)));
}

} // namespace

Composition::Composition(std::vector<Int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            std::ostringstream os;
            os << "composition part " << (i + 1) << " is " << parts_[i]
               << "; every part must be >= 1";
            throw std::invalid_argument(os.str());
        }
    }
}

Int Composition::size() const { return sum_parts(parts_); }

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition part " + std::to_string(i + 1) +
                                        " is not positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Int Partition::size() const { return sum_parts(parts_); }

Composition Partition::as_composition() const { return Composition(parts_); }

SignedPartition::SignedPartition(int sign, Partition shape)
    : sign_(sign), shape_(std::move(shape)) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("sign must be +1 or -1");
}

const Partition& SignedPartition::shape() const {
    if (is_zero())
        throw std::logic_error("zero signed partition has no shape");
    return shape_;
}

SignedPartition SignedPartition::negated() const {
    if (is_zero())
        return *this;
    return SignedPartition(-sign_, shape_);
}

bool canonical_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int sa = sum_parts(a), sb = sum_parts(b);
    if (sa != sb)
        return sa < sb;
    if (a.size() != b.size())
        return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Composition raise(const Composition& L, std::size_t i) {
    const auto& parts = L.parts();
    if (i < 2 || i > parts.size())
        throw std::domain_error("raise index " + std::to_string(i) +
                                " out of range 2.." + std::to_string(parts.size()));
    if (parts[i - 1] < 2)
        throw std::domain_error("raise requires part " + std::to_string(i) +
                                " >= 2, got " + std::to_string(parts[i - 1]));
    std::vector<Int> out = parts;
    out[i - 2] = parts[i - 1] - 1;
    out[i - 1] = parts[i - 2] + 1;
    return Composition(std::move(out));
}

SignedPartition straighten_parts(const std::vector<Int>& parts) {
    std::vector<Int> v = row_values(parts);
    // Sign of the sorting permutation = parity of pairs out of descending
    // order; a collision anywhere means determinant zero.
    Int inversions = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] == v[j])
                return SignedPartition::zero();
            if (v[i] < v[j])
                ++inversions;
        }
    }
    std::sort(v.begin(), v.end(), std::greater<Int>());
    return partition_from_sorted_values(v, inversions % 2 == 0 ? 1 : -1);
}

SignedPartition straighten(const Composition& L) { return straighten_parts(L.parts()); }

RaiseTrace straighten_trace(const Composition& L) {
    RaiseTrace trace;
    std::vector<Int> parts = L.parts();
    std::vector<Int> v = row_values(parts);
    int sign = 1;
    for (;;) {
        std::size_t idx = 0; // smallest raise index, 1-based; 0 = none
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (v[i - 1] == v[i]) {
                // L^{(i+1)} = L, so the chain ends at zero.
                trace.fixed_index = i + 1;
                trace.result = SignedPartition::zero();
                return trace;
            }
            if (idx == 0 && v[i - 1] < v[i])
                idx = i + 1;
        }
        if (idx == 0)
            break;
        // Raising swaps the adjacent row values and flips the sign.
        std::swap(v[idx - 2], v[idx - 1]);
        sign = -sign;
        std::vector<Int> raised(v.size());
        for (std::size_t j = 0; j < v.size(); ++j)
            raised[j] = v[j] + static_cast<Int>(j + 1);
        trace.steps.push_back(RaiseStep{idx, Composition(raised)});
    }
    trace.result = partition_from_sorted_values(v, sign);
    return trace;
}

SignedPartition straighten_by_raises(const Composition& L) {
    return straighten_trace(L).result;
}

std::vector<Composition> all_compositions(Int n) {
    std::vector<Composition> out;
    if (n < 0)
        return out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<Int> cur;
    // Compositions of fixed size sort canonically by length, then lex.
    std::function<void(Int)> rec = [&](Int rest) {
        if (rest == 0) {
            out.push_back(Composition(cur));
            return;
        }
        for (Int p = 1; p <= rest; ++p) {
            cur.push_back(p);
            rec(rest - p);
            cur.pop_back();
        }
    };
    rec(n);
    std::sort(out.begin(), out.end(), CompositionLess{});
    return out;
}

std::vector<Composition> compositions_up_to(Int max_size) {
    std::vector<Composition> out;
    for (Int n = 0; n <= max_size; ++n) {
        auto batch = all_compositions(n);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

std::vector<Partition> all_partitions(Int n) {
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<Int> cur;
    std::function<void(Int, Int)> rec = [&](Int rest, Int max_part) {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (Int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end(), PartitionLess{});
    return out;
}

std::vector<Partition> partitions_up_to(Int max_size) {
    std::vector<Partition> out;
    for (Int n = 0; n <= max_size; ++n) {
        auto batch = all_partitions(n);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

std::string to_string(const Composition& c) {
    return "(" + join_parts(c.parts(), ',') + ")";
}

std::string to_string(const Partition& p) {
    return "(" + join_parts(p.parts(), ',') + ")";
}

std::string to_string(const SignedPartition& s) {
    if (s.is_zero())
        return "0";
    std::string out = s.sign() > 0 ? "+ s[" : "- s[";
    out += join_parts(s.shape().parts(), ',');
    out += "]";
    return out;
}

} // namespace fschur
