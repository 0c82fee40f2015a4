#ifndef LAMBDA_ORDERS_JSON_IO_HPP
#define LAMBDA_ORDERS_JSON_IO_HPP

#include "lambda_orders/frob_action.hpp"
#include "lambda_orders/group_algebra.hpp"
#include "lambda_orders/lambda_algebra.hpp"
#include "lambda_orders/lattice.hpp"
#include "lambda_orders/mset.hpp"
#include "lambda_orders/orders.hpp"

#include <json.hpp>

#include <string>

namespace lambda_orders {

using json = nlohmann::json;

// {"level": r, "size": n, "action": [[...r rows of n entries...]]}
json mset_to_json(const MSet& s);
MSet mset_from_json(const json& j);

// {"size": n, "c": c, "unit_action": {"<u>": [perm]}, "exceptional": {"<p>": [map]}}
json presentation_to_json(const FrobPresentation& pres);
FrobPresentation presentation_from_json(const json& j);

// {"factors": true, "r": r, "mset": {...}} or
// {"factors": false, "witness": {"d": d, "p": p, "c_d": c}}
json verdict_to_json(const Verdict& v);

// {"dim": n, "rank": k, "den": "D", "basis": [["..."], ...]}
json lattice_to_json(const IntLattice& l);
IntLattice lattice_from_json(const json& j);

// {"r": r, "coeffs": [["num","den"], ...]}
json group_algebra_elt_to_json(const GroupAlgebraElt& e);
GroupAlgebraElt group_algebra_elt_from_json(const json& j);

json verify_report_to_json(const VerifyReport& rep);

// full dump for golden-file style tests: dimension, structure constants,
// psi matrices, unit, all rationals as strings
json algebra_to_json(const LambdaAlgebra& alg);

std::string rat_to_string(const Rat& q);
Rat rat_from_strings(const std::string& num, const std::string& den);

}  // namespace lambda_orders

#endif
