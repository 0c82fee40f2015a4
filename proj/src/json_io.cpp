#include "lambda_orders/json_io.hpp"

namespace lambda_orders {

std::string rat_to_string(const Rat& q) { return to_string(q); }

Rat rat_from_strings(const std::string& num, const std::string& den) {
  Int d = parse_int(den);
  if (d == 0) throw std::invalid_argument("zero denominator");
  return Rat(parse_int(num), d);
}

json mset_to_json(const MSet& s) {
  json rows = json::array();
  for (const auto& row : s.table()) rows.push_back(row);
  return json{{"level", s.level()}, {"size", s.size()}, {"action", rows}};
}

MSet mset_from_json(const json& j) {
  long r = j.at("level").get<long>();
  long n = j.at("size").get<long>();
  std::vector<std::vector<int>> table = j.at("action").get<std::vector<std::vector<int>>>();
  for (const auto& row : table)
    if ((long)row.size() != n)
      throw mset_error(mset_error::Kind::bad_table, "action rows must have length size");
  return MSet::make(Level(r), std::move(table));
}

json presentation_to_json(const FrobPresentation& pres) {
  json units = json::object();
  for (const auto& [u, f] : pres.unit_action()) units[std::to_string(u)] = f;
  json exc = json::object();
  for (const auto& [p, f] : pres.exceptional()) exc[std::to_string(p)] = f;
  return json{{"size", pres.size()}, {"c", pres.c()}, {"unit_action", units},
              {"exceptional", exc}};
}

FrobPresentation presentation_from_json(const json& j) {
  long n = j.at("size").get<long>();
  long c = j.at("c").get<long>();
  std::map<long, std::vector<int>> units, exc;
  for (const auto& [key, val] : j.at("unit_action").items())
    units[std::stol(key)] = val.get<std::vector<int>>();
  for (const auto& [key, val] : j.at("exceptional").items())
    exc[std::stol(key)] = val.get<std::vector<int>>();
  return FrobPresentation::make(n, c, std::move(units), std::move(exc));
}

json verdict_to_json(const Verdict& v) {
  if (v.factors)
    return json{{"factors", true}, {"r", v.level}, {"mset", mset_to_json(*v.mset)}};
  return json{{"factors", false},
              {"witness", json{{"d", v.witness->d}, {"p", v.witness->p},
                               {"c_d", v.witness->c_d}}}};
}

json lattice_to_json(const IntLattice& l) {
  json rows = json::array();
  for (const auto& row : l.basis) {
    json r = json::array();
    for (const Int& x : row) r.push_back(to_string(x));
    rows.push_back(r);
  }
  return json{{"dim", l.dim}, {"rank", l.rank}, {"den", to_string(l.den)},
              {"basis", rows}};
}

IntLattice lattice_from_json(const json& j) {
  long dim = j.at("dim").get<long>();
  Int den = parse_int(j.at("den").get<std::string>());
  QMat rows;
  for (const auto& row : j.at("basis")) {
    QVec v;
    for (const auto& x : row) v.push_back(Rat(parse_int(x.get<std::string>()), den));
    if ((long)v.size() != dim)
      throw std::invalid_argument("lattice basis row has wrong length");
    rows.push_back(std::move(v));
  }
  return IntLattice::from_rows(dim, rows);
}

json group_algebra_elt_to_json(const GroupAlgebraElt& e) {
  json coeffs = json::array();
  for (const Rat& q : e.c)
    coeffs.push_back(json::array({to_string(q.numerator()), to_string(q.denominator())}));
  return json{{"r", e.r}, {"coeffs", coeffs}};
}

GroupAlgebraElt group_algebra_elt_from_json(const json& j) {
  long r = j.at("r").get<long>();
  GroupAlgebraElt e = ga_zero(r);
  const auto& coeffs = j.at("coeffs");
  if ((long)coeffs.size() != r)
    throw std::invalid_argument("coeffs must have length r");
  for (long i = 0; i < r; ++i)
    e.c[i] = rat_from_strings(coeffs[i][0].get<std::string>(),
                              coeffs[i][1].get<std::string>());
  return e;
}

json verify_report_to_json(const VerifyReport& rep) {
  return json{{"unit", rep.unit},
              {"mult_closed", rep.mult_closed},
              {"psi_stable", rep.psi_stable},
              {"frobenius", rep.frobenius},
              {"prime_bound", rep.prime_bound},
              {"pass", rep.pass()},
              {"failures", rep.failures}};
}

json algebra_to_json(const LambdaAlgebra& alg) {
  long n = alg.dim();
  json sc = json::array();
  for (long i = 0; i < n; ++i) {
    json row = json::array();
    for (long j = 0; j < n; ++j) {
      json entry = json::array();
      for (const Rat& q : alg.structure_constant(i, j)) entry.push_back(rat_to_string(q));
      row.push_back(entry);
    }
    sc.push_back(row);
  }
  json psi = json::object();
  for (long a = 0; a < alg.level(); ++a) {
    json mat = json::array();
    for (const auto& row : alg.psi(a)) {
      json r = json::array();
      for (const Rat& q : row) r.push_back(rat_to_string(q));
      mat.push_back(r);
    }
    psi[std::to_string(a)] = mat;
  }
  json unit = json::array();
  for (const Rat& q : alg.unit()) unit.push_back(rat_to_string(q));
  return json{{"level", alg.level()}, {"dim", n}, {"unit", unit},
              {"structure_constants", sc}, {"psi", psi}};
}

}  // namespace lambda_orders
