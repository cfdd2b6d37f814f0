#include "forge/json_io.hpp"

#include <stdexcept>

namespace forge {

json ring_to_json(const Ring& r) {
  switch (r.kind()) {
    case RingKind::Integers:
      return json{{"kind", "integers"}};
    case RingKind::Modular:
      return json{{"kind", "modular"}, {"modulus", r.modulus().str()}};
    case RingKind::Polynomial: {
      json j{{"kind", "polynomial"},
             {"base", ring_to_json(r.base())},
             {"num_vars", r.num_vars()}};
      if (r.degree_bound()) j["degree_bound"] = *r.degree_bound();
      return j;
    }
  }
  throw std::logic_error("ring_to_json: bad kind");
}

Ring ring_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "integers") return Ring::integers();
  if (kind == "modular") return Ring::modular(Int(j.at("modulus").get<std::string>()));
  if (kind == "polynomial") {
    std::optional<int> bound;
    if (j.contains("degree_bound")) bound = j.at("degree_bound").get<int>();
    return Ring::polynomial(ring_from_json(j.at("base")),
                            j.at("num_vars").get<int>(), bound);
  }
  throw std::invalid_argument("ring_from_json: unknown kind " + kind);
}

json elem_to_json(const RingElem& e) {
  switch (e.ring().kind()) {
    case RingKind::Integers:
      return e.scalar().str();
    case RingKind::Modular:
      return e.scalar().convert_to<std::int64_t>();
    case RingKind::Polynomial: {
      json terms = json::array();
      const Ring base = e.ring().base();
      for (const auto& t : e.poly().terms) {
        json coeff = base.is_modular()
                         ? json(t.coeff.convert_to<std::int64_t>())
                         : json(t.coeff.str());
        terms.push_back(json{{"exps", mono_unpack(t.mono, e.ring().num_vars())},
                             {"coeff", coeff}});
      }
      return json{{"terms", terms}};
    }
  }
  throw std::logic_error("elem_to_json: bad kind");
}

RingElem elem_from_json(const Ring& r, const json& j) {
  switch (r.kind()) {
    case RingKind::Integers:
      if (j.is_string()) return RingElem::from_int(r, Int(j.get<std::string>()));
      return RingElem::from_int(r, Int(j.get<std::int64_t>()));
    case RingKind::Modular:
      if (j.is_string()) return RingElem::from_int(r, Int(j.get<std::string>()));
      return RingElem::from_int(r, Int(j.get<std::int64_t>()));
    case RingKind::Polynomial: {
      Poly p;
      for (const auto& t : j.at("terms")) {
        std::vector<std::uint32_t> exps =
            t.at("exps").get<std::vector<std::uint32_t>>();
        const json& cj = t.at("coeff");
        Int c = cj.is_string() ? Int(cj.get<std::string>())
                               : Int(cj.get<std::int64_t>());
        p.terms.push_back({mono_pack(exps), std::move(c)});
      }
      return RingElem::from_poly(r, std::move(p));
    }
  }
  throw std::logic_error("elem_from_json: bad kind");
}

json row_to_json(const std::vector<RingElem>& row) {
  json out = json::array();
  for (const auto& e : row) out.push_back(elem_to_json(e));
  return out;
}

std::vector<RingElem> row_from_json(const Ring& r, const json& j) {
  std::vector<RingElem> out;
  for (const auto& e : j) out.push_back(elem_from_json(r, e));
  return out;
}

json matrix_to_json(const MatrixR& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); i++) {
    json row = json::array();
    for (int j = 0; j < m.dim(); j++) row.push_back(elem_to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

MatrixR matrix_from_json(const Ring& r, const json& j) {
  const int n = static_cast<int>(j.size());
  MatrixR m(r, n);
  for (int i = 0; i < n; i++) {
    if (static_cast<int>(j[i].size()) != n)
      throw std::invalid_argument("matrix_from_json: ragged rows");
    for (int k = 0; k < n; k++) m.set(i, k, elem_from_json(r, j[i][k]));
  }
  return m;
}

json point_to_json(const SpherePoint& p) {
  return json{{"ring", ring_to_json(p.ring)},
              {"v", row_to_json(p.v)},
              {"w", row_to_json(p.w)}};
}

SpherePoint point_from_json(const Ring& r, const json& j) {
  return SpherePoint(r, row_from_json(r, j.at("v")), row_from_json(r, j.at("w")));
}

json suslin_to_json(const SuslinMatrix& s) {
  return json{{"n", s.n()}, {"matrix", matrix_to_json(s.body)}};
}

json epin_generator_to_json(const EpinGenerator& g) {
  return json{{"first", g.first == FirstSlot::E1 ? "e1" : "f1"},
              {"kind", g.second_kind == BasisKind::E ? "e" : "f"},
              {"index", g.second_index},
              {"lambda", elem_to_json(g.lambda)}};
}

EpinGenerator epin_generator_from_json(const Ring& r, const json& j) {
  const std::string first = j.at("first").get<std::string>();
  const std::string kind = j.at("kind").get<std::string>();
  if (first != "e1" && first != "f1")
    throw std::invalid_argument("generator: first must be e1 or f1");
  if (kind != "e" && kind != "f")
    throw std::invalid_argument("generator: kind must be e or f");
  return EpinGenerator{first == "e1" ? FirstSlot::E1 : FirstSlot::F1,
                       kind == "e" ? BasisKind::E : BasisKind::F,
                       j.at("index").get<int>(),
                       elem_from_json(r, j.at("lambda")),
                       j.value("n", 3)};
}

json elem_matrix_to_json(const ElemMatrix& e) {
  json word = json::array();
  bool witnesses = false;
  for (const auto& f : e.word) {
    if (std::holds_alternative<ElemFactor>(f)) {
      const auto& ef = std::get<ElemFactor>(f);
      word.push_back(json{{"type", "elementary"},
                          {"i", ef.i},
                          {"j", ef.j},
                          {"lambda", elem_to_json(ef.lambda)}});
    } else {
      const auto& wf = std::get<WitnessFactor>(f);
      witnesses = true;
      word.push_back(json{{"type", "witness"},
                          {"matrix", matrix_to_json(wf.body)},
                          {"note", wf.provenance}});
    }
  }
  return json{{"matrix", matrix_to_json(e.body)},
              {"word", word},
              {"provenance", witnesses
                                 ? "elementary factors and rank-one unimodular witnesses"
                                 : "elementary factors only"}};
}

json bijection_report_to_json(const BijectionReport& rep) {
  return json{{"ring", ring_to_json(rep.ring)},
              {"n", rep.n},
              {"um_orbit_count", rep.um_orbit_count},
              {"sphere_orbit_count", rep.sphere_orbit_count},
              {"witness_map", rep.witness_map},
              {"ok", rep.ok}};
}

json alg_element_to_json(const AlgElement& a) {
  if (a.algebra() == AlgebraKind::SplitQuaternion)
    return json{{"matrix", matrix_to_json(a.quat())}};
  auto c = a.octonion_coords();
  return json{{"a", elem_to_json(c[0])},
              {"x", json::array({elem_to_json(c[1]), elem_to_json(c[2]),
                                 elem_to_json(c[3])})},
              {"y", json::array({elem_to_json(c[4]), elem_to_json(c[5]),
                                 elem_to_json(c[6])})},
              {"b", elem_to_json(c[7])}};
}

AlgElement alg_element_from_json(const Ring& r, AlgebraKind kind,
                                 const json& j) {
  if (kind == AlgebraKind::SplitQuaternion)
    return AlgElement::quaternion(matrix_from_json(r, j.at("matrix")));
  return AlgElement::octonion(elem_from_json(r, j.at("a")),
                              row_from_json(r, j.at("x")),
                              row_from_json(r, j.at("y")),
                              elem_from_json(r, j.at("b")));
}

json z_matrix_to_json(const ZMatrix& z) {
  return json{{"ring", ring_to_json(z.alpha.ring())},
              {"algebra", z.algebra == AlgebraKind::SplitQuaternion
                              ? "quaternion"
                              : "octonion"},
              {"alpha", alg_element_to_json(z.alpha)},
              {"v", row_to_json(z.v)},
              {"w", row_to_json(z.w)},
              {"q", elem_to_json(z.q())}};
}

ZMatrix z_matrix_from_json(const json& j) {
  Ring r = ring_from_json(j.at("ring"));
  const std::string alg = j.at("algebra").get<std::string>();
  if (alg != "quaternion" && alg != "octonion")
    throw std::invalid_argument("z_matrix_from_json: unknown algebra " + alg);
  AlgebraKind kind = alg == "quaternion" ? AlgebraKind::SplitQuaternion
                                         : AlgebraKind::SplitOctonion;
  AlgElement alpha = alg_element_from_json(r, kind, j.at("alpha"));
  return z_matrix(alpha, row_from_json(r, j.at("v")),
                  row_from_json(r, j.at("w")));
}

}  // namespace forge
