#include "fschur/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fschur {

namespace {

Int degree_of(const std::vector<Int>& exp) {
    Int d = 0;
    for (Int e : exp)
        d += e;
    return d;
}

void require_same_vars(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("polynomials have different variable counts");
}

} // namespace

bool GrlexLess::operator()(const std::vector<Int>& a, const std::vector<Int>& b) const {
    Int da = degree_of(a), db = degree_of(b);
    if (da != db)
        return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

SparsePolynomial SparsePolynomial::constant(std::size_t nvars, Int c) {
    SparsePolynomial p(nvars);
    p.add_term(std::vector<Int>(nvars, 0), c);
    return p;
}

Int SparsePolynomial::max_degree() const {
    // grlex order puts the highest total degree last
    return terms_.empty() ? 0 : degree_of(terms_.rbegin()->first);
}

void SparsePolynomial::add_term(const std::vector<Int>& exp, Int coeff) {
    if (exp.size() != nvars_)
        throw std::invalid_argument("exponent vector length does not match nvars");
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exp, coeff);
    if (!inserted && (it->second = checked_add(it->second, coeff)) == 0)
        terms_.erase(it);
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
    require_same_vars(*this, o);
    for (const auto& [exp, coeff] : o.terms_)
        add_term(exp, coeff);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
    require_same_vars(*this, o);
    for (const auto& [exp, coeff] : o.terms_)
        add_term(exp, checked_mul(coeff, -1));
    return *this;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    require_same_vars(*this, o);
    SparsePolynomial out(nvars_);
    std::vector<Int> exp(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i)
                exp[i] = checked_add(ea[i], eb[i]);
            out.add_term(exp, checked_mul(ca, cb));
        }
    }
    return out;
}

SparsePolynomial SparsePolynomial::operator-() const { return scaled(-1); }

SparsePolynomial SparsePolynomial::scaled(Int c) const {
    SparsePolynomial out(nvars_);
    if (c == 0)
        return out;
    for (const auto& [exp, coeff] : terms_)
        out.terms_.emplace(exp, checked_mul(coeff, c));
    return out;
}

SparsePolynomial SparsePolynomial::with_swapped_vars(std::size_t i, std::size_t j) const {
    SparsePolynomial out(nvars_);
    for (const auto& [exp, coeff] : terms_) {
        std::vector<Int> e = exp;
        std::swap(e[i], e[j]);
        out.terms_.emplace(std::move(e), coeff);
    }
    return out;
}

SparsePolynomial h_poly(Int k, std::size_t nvars) {
    SparsePolynomial out(nvars);
    if (k < 0)
        return out;
    std::vector<Int> exp(nvars, 0);
    if (nvars == 0) {
        if (k == 0)
            out.add_term(exp, 1);
        return out;
    }
    // All monomials of total degree k, coefficient 1.
    std::function<void(std::size_t, Int)> rec = [&](std::size_t var, Int rest) {
        if (var + 1 == nvars) {
            exp[var] = rest;
            out.add_term(exp, 1);
            exp[var] = 0;
            return;
        }
        for (Int e = 0; e <= rest; ++e) {
            exp[var] = e;
            rec(var + 1, rest - e);
        }
        exp[var] = 0;
    };
    rec(0, k);
    return out;
}

SparsePolynomial f_poly(const Composition& L, std::size_t nvars) {
    SparsePolynomial out(nvars);
    const auto& parts = L.parts();
    Int n = L.size();
    if (n == 0) {
        out.add_term(std::vector<Int>(nvars, 0), 1);
        return out;
    }
    if (nvars == 0)
        return out;

    // Strict increase is forced right after each partial sum of L.
    std::vector<bool> strict_after(static_cast<std::size_t>(n) + 1, false);
    Int acc = 0;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        acc += parts[i];
        strict_after[static_cast<std::size_t>(acc)] = true;
    }

    std::vector<Int> exp(nvars, 0);
    std::function<void(Int, std::size_t)> rec = [&](Int pos, std::size_t min_var) {
        if (pos > n) {
            out.add_term(exp, 1);
            return;
        }
        for (std::size_t v = min_var; v < nvars; ++v) {
            ++exp[v];
            rec(pos + 1, strict_after[static_cast<std::size_t>(pos)] ? v + 1 : v);
            --exp[v];
        }
    };
    rec(1, 0);
    return out;
}

SparsePolynomial jacobi_trudi_parts_poly(const std::vector<Int>& parts,
                                         std::size_t nvars) {
    const std::size_t k = parts.size();
    if (k == 0)
        return SparsePolynomial::constant(nvars, 1);

    // Memoize the h's actually present in the matrix.
    std::map<Int, SparsePolynomial> h;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            Int d = parts[i] - static_cast<Int>(i + 1) + static_cast<Int>(j + 1);
            if (d >= 0 && !h.count(d))
                h.emplace(d, h_poly(d, nvars));
        }
    }

    SparsePolynomial out(nvars);
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool zero = false;
        for (std::size_t i = 0; i < k; ++i) {
            if (parts[i] - static_cast<Int>(i + 1) + static_cast<Int>(perm[i] + 1) < 0) {
                zero = true;
                break;
            }
        }
        if (zero)
            continue;
        int sign = 1;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (perm[i] > perm[j])
                    sign = -sign;
        SparsePolynomial prod = SparsePolynomial::constant(nvars, sign);
        for (std::size_t i = 0; i < k && !prod.is_zero(); ++i) {
            Int d = parts[i] - static_cast<Int>(i + 1) + static_cast<Int>(perm[i] + 1);
            prod = prod * h.at(d);
        }
        out += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

SparsePolynomial jacobi_trudi_poly(const Composition& L, std::size_t nvars) {
    return jacobi_trudi_parts_poly(L.parts(), nvars);
}

SparsePolynomial schur_poly(const Partition& shape, std::size_t nvars) {
    return jacobi_trudi_parts_poly(shape.parts(), nvars);
}

SparsePolynomial expansion_poly(const FExpansion& e, std::size_t nvars) {
    SparsePolynomial out(nvars);
    for (const auto& [L, coeff] : e)
        out += f_poly(L, nvars).scaled(coeff);
    return out;
}

SparsePolynomial expansion_poly(const SchurExpansion& e, std::size_t nvars) {
    SparsePolynomial out(nvars);
    for (const auto& [shape, coeff] : e)
        out += schur_poly(shape, nvars).scaled(coeff);
    return out;
}

bool is_symmetric_poly(const SparsePolynomial& p) {
    for (std::size_t i = 0; i + 1 < p.nvars(); ++i)
        if (!(p.with_swapped_vars(i, i + 1) == p))
            return false;
    return true;
}

std::string to_string(const SparsePolynomial& p) {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exp, coeff] : p.terms()) {
        Int mag = coeff < 0 ? -coeff : coeff;
        if (first)
            os << (coeff < 0 ? "-" : "");
        else
            os << (coeff < 0 ? " - " : " + ");
        first = false;
        std::string mono;
        for (std::size_t v = 0; v < exp.size(); ++v) {
            if (exp[v] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += "x" + std::to_string(v + 1);
            if (exp[v] > 1)
                mono += "^" + std::to_string(exp[v]);
        }
        if (mono.empty())
            os << mag;
        else if (mag == 1)
            os << mono;
        else
            os << mag << "*" << mono;
    }
    return os.str();
}

} // namespace fschur
