#ifndef STABENV_JSON_IO_HPP
#define STABENV_JSON_IO_HPP

#include <json.hpp>

#include "stabenv/envelope.hpp"
#include "stabenv/factored_product.hpp"
#include "stabenv/rf_matrix.hpp"
#include "stabenv/rmatrix.hpp"
#include "stabenv/weight_function.hpp"

namespace stabenv {

using Json = nlohmann::json;

// { "vars": ["t1",..,"z1",..,"h"], "terms": [{"coeff":"p/q","exps":[..]}] },
// terms in graded-lex order, highest first.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const RationalFunction& f);       // { "num": .., "den": .. }
RationalFunction rf_from_json(const Json& j);

Json to_json(const LinearForm& f);             // { "coeffs": {...}, "const": "p/q" }
Json to_json(const LinearFactorProduct& t);    // { "scalar": .., "factors": [..] }
Json to_json(const SymmetrizedRF& w);
Json to_json(const WeightList& w, VarContext ctx);

Json gkm_to_json(const GKMClass& c);           // { "subset-key": PolynomialJSON }
GKMClass gkm_from_json(const Json& j, int n);

Json to_json(const RFMatrix& m);
Json to_json(const RMatrix& m);
Json to_json(const BigOperator& op);
Json to_json(const AxiomReport& rep);

// LaTeX renderings (paper-style): polynomials, rational functions, and
// bmatrix grids.
std::string to_latex(const Polynomial& p);
std::string to_latex(const RationalFunction& f);
std::string to_latex(const RMatrix& m);
std::string to_latex(const RFMatrix& m);
std::string to_latex(const LinearFactorProduct& t);

}  // namespace stabenv

#endif
