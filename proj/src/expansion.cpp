#include "fschur/expansion.hpp"

#include <sstream>

#include "fschur/tableau.hpp"

namespace fschur {

namespace {

template <typename Map, typename Key>
void add_into(Map& e, const Key& key, Int coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = e.try_emplace(key, coeff);
    if (!inserted && (it->second = checked_add(it->second, coeff)) == 0)
        e.erase(it);
}

template <typename Map>
std::string render(const Map& e, char basis) {
    if (e.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : e) {
        Int mag = coeff < 0 ? -coeff : coeff;
        if (first)
            os << (coeff < 0 ? "-" : "");
        else
            os << (coeff < 0 ? " - " : " + ");
        first = false;
        if (mag != 1)
            os << mag << "*";
        os << basis << "[";
        const auto& parts = key.parts();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i)
                os << ",";
            os << parts[i];
        }
        os << "]";
    }
    return os.str();
}

} // namespace

void add_term(FExpansion& e, const Composition& key, Int coeff) {
    add_into(e, key, coeff);
}

void add_term(SchurExpansion& e, const Partition& key, Int coeff) {
    add_into(e, key, coeff);
}

FExpansion schur_to_f(const Partition& shape) {
    FExpansion out;
    for_each_syt(shape, [&](const StandardTableau& t) {
        add_term(out, descent_data(t).composition, 1);
    });
    return out;
}

SchurExpansion f_to_schur(const FExpansion& f) {
    SchurExpansion out;
    for (const auto& [L, coeff] : f) {
        SignedPartition sp = straighten(L);
        if (!sp.is_zero())
            add_term(out, sp.shape(), checked_mul(coeff, sp.sign()));
    }
    return out;
}

FExpansion schur_expansion_to_f(const SchurExpansion& g) {
    FExpansion out;
    for (const auto& [shape, coeff] : g)
        for (const auto& [L, mult] : schur_to_f(shape))
            add_term(out, L, checked_mul(coeff, mult));
    return out;
}

ConvertReport verified_convert(const FExpansion& f) {
    ConvertReport report;
    report.result = f_to_schur(f);
    FExpansion back = schur_expansion_to_f(report.result);

    // Walk both maps in canonical order; the first differing composition
    // witnesses a violated symmetry hypothesis.
    auto a = f.begin();
    auto b = back.begin();
    while (a != f.end() || b != back.end()) {
        if (b == back.end() ||
            (a != f.end() && CompositionLess{}(a->first, b->first))) {
            report.first_discrepancy = a->first;
            report.expected = a->second;
            report.actual = 0;
            return report;
        }
        if (a == f.end() || CompositionLess{}(b->first, a->first)) {
            report.first_discrepancy = b->first;
            report.expected = 0;
            report.actual = b->second;
            return report;
        }
        if (a->second != b->second) {
            report.first_discrepancy = a->first;
            report.expected = a->second;
            report.actual = b->second;
            return report;
        }
        ++a;
        ++b;
    }
    report.symmetric = true;
    return report;
}

std::string to_string(const FExpansion& e) { return render(e, 'F'); }

std::string to_string(const SchurExpansion& e) { return render(e, 's'); }

} // namespace fschur
