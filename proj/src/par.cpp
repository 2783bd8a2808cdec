#include "fschur/par.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "fschur/tableau.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fschur::par {

namespace {

#ifdef _OPENMP
int max_threads() { return omp_get_max_threads(); }
#else
int max_threads() { return 1; }
#endif

// Merge per-thread partial sums in slot order. Addition over exact
// integers is order-independent, so the result matches the serial kernel
// term for term.
SparsePolynomial merge(std::vector<SparsePolynomial>& partials, std::size_t nvars) {
    SparsePolynomial out(nvars);
    for (auto& part : partials)
        out += part;
    return out;
}

Int factorial(std::size_t k) {
    Int f = 1;
    for (std::size_t i = 2; i <= k; ++i)
        f = checked_mul(f, static_cast<Int>(i));
    return f;
}

// Permutation of 0..k-1 with the given rank in lexicographic order
// (factorial number system), plus its sign.
void unrank_permutation(Int rank, std::size_t k, std::vector<std::size_t>& perm,
                        int& sign) {
    std::vector<std::size_t> pool(k);
    std::iota(pool.begin(), pool.end(), 0);
    perm.resize(k);
    sign = 1;
    Int radix = factorial(k);
    for (std::size_t i = 0; i < k; ++i) {
        radix /= static_cast<Int>(k - i);
        std::size_t pick = static_cast<std::size_t>(rank / radix);
        rank %= radix;
        perm[i] = pool[pick];
        // Removing from position `pick` costs `pick` transpositions.
        if (pick % 2 == 1)
            sign = -sign;
        pool.erase(pool.begin() + static_cast<long>(pick));
    }
}

} // namespace

SparsePolynomial jacobi_trudi_parts_poly(const std::vector<Int>& parts,
                                         std::size_t nvars) {
    const std::size_t k = parts.size();
    if (k == 0)
        return SparsePolynomial::constant(nvars, 1);

    std::map<Int, SparsePolynomial> h;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            Int d = parts[i] - static_cast<Int>(i + 1) + static_cast<Int>(j + 1);
            if (d >= 0 && !h.count(d))
                h.emplace(d, h_poly(d, nvars));
        }
    }

    const Int nperms = factorial(k);
    std::vector<SparsePolynomial> partials(static_cast<std::size_t>(max_threads()),
                                           SparsePolynomial(nvars));
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
#ifdef _OPENMP
        SparsePolynomial& local = partials[static_cast<std::size_t>(omp_get_thread_num())];
#else
        SparsePolynomial& local = partials[0];
#endif
        std::vector<std::size_t> perm;
        int sign = 0;
        // Products vary wildly in size, so balance one permutation at a time.
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1)
#endif
        for (Int rank = 0; rank < nperms; ++rank) {
            unrank_permutation(rank, k, perm, sign);
            bool zero = false;
            for (std::size_t i = 0; i < k; ++i) {
                if (parts[i] - static_cast<Int>(i + 1) + static_cast<Int>(perm[i] + 1) < 0) {
                    zero = true;
                    break;
                }
            }
            if (zero)
                continue;
            SparsePolynomial prod = SparsePolynomial::constant(nvars, sign);
            for (std::size_t i = 0; i < k && !prod.is_zero(); ++i) {
                Int d = parts[i] - static_cast<Int>(i + 1) + static_cast<Int>(perm[i] + 1);
                prod = prod * h.at(d);
            }
            local += prod;
        }
    }
    return merge(partials, nvars);
}

SparsePolynomial jacobi_trudi_poly(const Composition& L, std::size_t nvars) {
    return jacobi_trudi_parts_poly(L.parts(), nvars);
}

SparsePolynomial schur_poly(const Partition& shape, std::size_t nvars) {
    return jacobi_trudi_parts_poly(shape.parts(), nvars);
}

SparsePolynomial f_poly(const Composition& L, std::size_t nvars) {
    const auto& parts = L.parts();
    Int n = L.size();
    if (n == 0)
        return SparsePolynomial::constant(nvars, 1);
    if (nvars == 0)
        return SparsePolynomial(nvars);

    std::vector<bool> strict_after(static_cast<std::size_t>(n) + 1, false);
    Int acc = 0;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        acc += parts[i];
        strict_after[static_cast<std::size_t>(acc)] = true;
    }

    std::vector<SparsePolynomial> partials(static_cast<std::size_t>(max_threads()),
                                           SparsePolynomial(nvars));
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
#ifdef _OPENMP
        SparsePolynomial& local = partials[static_cast<std::size_t>(omp_get_thread_num())];
#else
        SparsePolynomial& local = partials[0];
#endif
        std::vector<Int> exp(nvars, 0);
        std::function<void(Int, std::size_t)> rec = [&](Int pos, std::size_t min_var) {
            if (pos > n) {
                local.add_term(exp, 1);
                return;
            }
            for (std::size_t v = min_var; v < nvars; ++v) {
                ++exp[v];
                rec(pos + 1, strict_after[static_cast<std::size_t>(pos)] ? v + 1 : v);
                --exp[v];
            }
        };
        // Split on the variable of the first position.
#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
        for (std::size_t first = 0; first < nvars; ++first) {
            ++exp[first];
            rec(2, strict_after[1] ? first + 1 : first);
            --exp[first];
        }
    }
    return merge(partials, nvars);
}

namespace {

template <typename Expansion>
SparsePolynomial expansion_poly_par(const Expansion& e, std::size_t nvars,
                                    const std::function<SparsePolynomial(
                                        const typename Expansion::key_type&,
                                        std::size_t)>& basis_poly) {
    std::vector<std::pair<typename Expansion::key_type, Int>> terms(e.begin(), e.end());
    std::vector<SparsePolynomial> partials(static_cast<std::size_t>(max_threads()),
                                           SparsePolynomial(nvars));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t t = 0; t < terms.size(); ++t) {
#ifdef _OPENMP
        auto& local = partials[static_cast<std::size_t>(omp_get_thread_num())];
#else
        auto& local = partials[0];
#endif
        local += basis_poly(terms[t].first, nvars).scaled(terms[t].second);
    }
    return merge(partials, nvars);
}

} // namespace

SparsePolynomial expansion_poly(const FExpansion& e, std::size_t nvars) {
    return expansion_poly_par<FExpansion>(
        e, nvars, [](const Composition& L, std::size_t v) { return fschur::f_poly(L, v); });
}

SparsePolynomial expansion_poly(const SchurExpansion& e, std::size_t nvars) {
    return expansion_poly_par<SchurExpansion>(
        e, nvars,
        [](const Partition& p, std::size_t v) { return fschur::schur_poly(p, v); });
}

std::vector<Partition> schur_sum_failures(Int max_size) {
    std::vector<Partition> shapes = partitions_up_to(max_size);
    std::vector<char> failed(shapes.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        SchurExpansion sum;
        for_each_syt(shapes[i], [&](const StandardTableau& t) {
            SignedPartition sp = straighten(descent_data(t).composition);
            if (!sp.is_zero())
                add_term(sum, sp.shape(), sp.sign());
        });
        SchurExpansion expected;
        expected.emplace(shapes[i], 1);
        if (!(sum == expected))
            failed[i] = 1;
    }
    std::vector<Partition> out;
    for (std::size_t i = 0; i < shapes.size(); ++i)
        if (failed[i])
            out.push_back(shapes[i]);
    return out;
}

std::vector<Composition> straighten_agreement_failures(Int max_size) {
    std::vector<Composition> comps = compositions_up_to(max_size);
    std::vector<char> failed(comps.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (!(straighten(comps[i]) == straighten_by_raises(comps[i])))
            failed[i] = 1;
    std::vector<Composition> out;
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (failed[i])
            out.push_back(comps[i]);
    return out;
}

std::vector<Composition> jacobi_trudi_oracle_failures(Int max_size, std::size_t nvars) {
    std::vector<Composition> comps = compositions_up_to(max_size);
    std::vector<char> failed(comps.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < comps.size(); ++i) {
        SparsePolynomial lhs = fschur::jacobi_trudi_poly(comps[i], nvars);
        SignedPartition sp = straighten(comps[i]);
        SparsePolynomial rhs(nvars);
        if (!sp.is_zero())
            rhs = fschur::schur_poly(sp.shape(), nvars).scaled(sp.sign());
        if (!(lhs == rhs))
            failed[i] = 1;
    }
    std::vector<Composition> out;
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (failed[i])
            out.push_back(comps[i]);
    return out;
}

} // namespace fschur::par
