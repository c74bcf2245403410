#include "plethysm/json_io.hpp"

#include <limits>

#include "plethysm/errors.hpp"

namespace plethysm {

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw UsageError("malformed integer string");
    return z;
  }
  throw UsageError("expected an integer");
}

Json to_json(const Partition& p) {
  Json a = Json::array();
  for (int part : p) a.push_back(part);
  return a;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw UsageError("partition must be a JSON array");
  std::vector<int> parts;
  for (const Json& x : j) {
    if (!x.is_number_integer()) throw UsageError("partition parts must be integers");
    parts.push_back(x.get<int>());
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Json to_json(const SymExpr& f) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.terms())
    terms.push_back(Json{{"partition", to_json(lambda)},
                         {"num", integer_to_json(c.get_num())},
                         {"den", integer_to_json(c.get_den())}});
  return Json{{"basis", std::string(1, basis_letter(f.basis()))}, {"degree", f.degree()}, {"terms", terms}};
}

SymExpr symexpr_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("degree") || !j.contains("terms"))
    throw UsageError("symmetric function JSON needs basis, degree and terms");
  std::string letter = j.at("basis").get<std::string>();
  if (letter.size() != 1) throw UsageError("basis must be one letter");
  SymExpr f(basis_from_letter(letter[0]), j.at("degree").get<int>());
  for (const Json& t : j.at("terms")) {
    Integer num = integer_from_json(t.at("num"));
    Integer den = integer_from_json(t.at("den"));
    if (den == 0) throw UsageError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    f.add_term(partition_from_json(t.at("partition")), q);
  }
  return f;
}

Json to_json(const RelationVerdict& v) {
  Json j{{"nu", to_json(v.nu)}, {"mu", to_json(v.mu)}, {"holds", v.holds}};
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  j["difference"] = to_json(v.difference);
  return j;
}

Json to_json(const HasseDiagram& d) {
  Json nodes = Json::array(), edges = Json::array(), uncomputed = Json::array();
  for (const Partition& p : d.nodes) nodes.push_back(to_json(p));
  for (const auto& [a, b] : d.edges) edges.push_back(Json::array({to_json(a), to_json(b)}));
  for (const auto& [a, b] : d.uncomputed) uncomputed.push_back(Json::array({to_json(a), to_json(b)}));
  return Json{{"nodes", nodes}, {"edges", edges}, {"uncomputed", uncomputed}};
}

Json to_json(const FilledTableau& tau) {
  Json rows = Json::array();
  for (const auto& r : tau.rows()) rows.push_back(r);
  return rows;
}

Json to_json(const StabilityReport& r) {
  Json j{{"lambda", to_json(r.lambda)},
         {"r", integer_to_json(r.r)},
         {"lifted", integer_to_json(r.lifted)},
         {"inequality_holds", r.inequality_holds}};
  j["witness_tableau"] = r.witness_tableau ? to_json(*r.witness_tableau) : Json(nullptr);
  j["lifted_lambda"] = to_json(r.lifted_lambda);
  j["lifted_family_independent"] = r.lifted_family_independent ? Json(*r.lifted_family_independent) : Json(nullptr);
  return j;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace plethysm
