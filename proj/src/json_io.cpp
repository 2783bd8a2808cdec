#include "fschur/json_io.hpp"

#include <stdexcept>

namespace fschur {

namespace {

std::vector<Int> int_vector_from_json(const json& j, const char* what) {
    if (!j.is_array())
        throw std::invalid_argument(std::string(what) + " must be a JSON array");
    std::vector<Int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw std::invalid_argument(std::string(what) + " entries must be integers");
        out.push_back(x.get<Int>());
    }
    return out;
}

} // namespace

json to_json(const Composition& c) { return json(c.parts()); }

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const SignedPartition& s) {
    if (s.is_zero())
        return json{{"sign", 0}, {"partition", nullptr}};
    return json{{"sign", s.sign()}, {"partition", s.shape().parts()}};
}

json to_json(const Tableau& t) { return json(t.rows()); }

json to_json(const StandardTableau& t) { return to_json(t.tableau()); }

namespace {

json expansion_terms_json(const std::map<Composition, Int, CompositionLess>& terms,
                          const char* basis, json& out) {
    for (const auto& [index, coeff] : terms)
        out.push_back(json{{"basis", basis}, {"index", index.parts()}, {"coeff", coeff}});
    return out;
}

} // namespace

json to_json(const FExpansion& e) {
    json out = json::array();
    expansion_terms_json(e, "F", out);
    return out;
}

json to_json(const SchurExpansion& e) {
    json out = json::array();
    for (const auto& [shape, coeff] : e)
        out.push_back(json{{"basis", "s"}, {"index", shape.parts()}, {"coeff", coeff}});
    return out;
}

json to_json(const Expression& e) {
    json out = json::array();
    expansion_terms_json(e.f_terms, "F", out);
    expansion_terms_json(e.s_terms, "s", out);
    return out;
}

json to_json(const SparsePolynomial& p) {
    json terms = json::array();
    for (const auto& [exp, coeff] : p.terms())
        terms.push_back(json{{"exp", exp}, {"coeff", coeff}});
    return json{{"nvars", p.nvars()}, {"terms", terms}};
}

Composition composition_from_json(const json& j) {
    return Composition(int_vector_from_json(j, "composition"));
}

Partition partition_from_json(const json& j) {
    return Partition(int_vector_from_json(j, "partition"));
}

Tableau tableau_from_json(const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("tableau must be a JSON array of arrays");
    std::vector<std::vector<Int>> rows;
    for (const auto& row : j)
        rows.push_back(int_vector_from_json(row, "tableau row"));
    return Tableau(std::move(rows));
}

StandardTableau standard_tableau_from_json(const json& j) {
    return StandardTableau(tableau_from_json(j));
}

Expression expression_from_json(const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("expansion must be a JSON array of terms");
    std::vector<ExprAtom> atoms;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("basis") || !term.contains("index") ||
            !term.contains("coeff"))
            throw std::invalid_argument(
                "expansion term must be {\"basis\", \"index\", \"coeff\"}");
        std::string basis = term["basis"].get<std::string>();
        if (basis != "F" && basis != "s")
            throw std::invalid_argument("expansion basis must be \"F\" or \"s\"");
        ExprAtom atom;
        atom.basis = basis[0];
        atom.index = Composition(int_vector_from_json(term["index"], "index"));
        atom.coeff = term["coeff"].get<Int>();
        atoms.push_back(std::move(atom));
    }
    return combine(atoms);
}

} // namespace fschur
