#ifndef FSCHUR_JSON_IO_HPP
#define FSCHUR_JSON_IO_HPP

#include <json.hpp>

#include "fschur/composition.hpp"
#include "fschur/expansion.hpp"
#include "fschur/expr.hpp"
#include "fschur/polynomial.hpp"
#include "fschur/tableau.hpp"

namespace fschur {

// Fixed wire schemas:
//   composition / partition   [4,1]
//   signed partition          {"sign": 1, "partition": [4,1]}   (zero: sign 0, partition null)
//   tableau                   [[1,2,3],[4,5]]   (row-major)
//   expansion                 [{"basis": "F", "index": [4,1], "coeff": 1}, ...]
//   polynomial                {"nvars": 2, "terms": [{"exp": [2,0], "coeff": 1}, ...]}

using nlohmann::json;

json to_json(const Composition& c);
json to_json(const Partition& p);
json to_json(const SignedPartition& s);
json to_json(const Tableau& t);
json to_json(const StandardTableau& t);
json to_json(const FExpansion& e);
json to_json(const SchurExpansion& e);
json to_json(const Expression& e);
json to_json(const SparsePolynomial& p);

Composition composition_from_json(const json& j);
Partition partition_from_json(const json& j);
Tableau tableau_from_json(const json& j);
StandardTableau standard_tableau_from_json(const json& j);
Expression expression_from_json(const json& j);

} // namespace fschur

#endif
