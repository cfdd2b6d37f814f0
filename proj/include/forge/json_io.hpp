#pragma once

#include <json.hpp>

#include "forge/composition.hpp"
#include "forge/epin.hpp"
#include "forge/orbits.hpp"

namespace forge {

using nlohmann::json;

// Canonical JSON forms: ring descriptors as tagged objects, integer values
// as decimal strings, residues as numbers, polynomials as term lists, and
// matrices as row-major nested arrays. nlohmann::json keeps keys sorted,
// so a serialized report is byte-stable for fixed content.

json ring_to_json(const Ring& r);
Ring ring_from_json(const json& j);

json elem_to_json(const RingElem& e);
RingElem elem_from_json(const Ring& r, const json& j);

json row_to_json(const std::vector<RingElem>& row);
std::vector<RingElem> row_from_json(const Ring& r, const json& j);

json matrix_to_json(const MatrixR& m);
MatrixR matrix_from_json(const Ring& r, const json& j);

json point_to_json(const SpherePoint& p);
SpherePoint point_from_json(const Ring& r, const json& j);

json suslin_to_json(const SuslinMatrix& s);

json epin_generator_to_json(const EpinGenerator& g);
EpinGenerator epin_generator_from_json(const Ring& r, const json& j);

json elem_matrix_to_json(const ElemMatrix& e);

json bijection_report_to_json(const BijectionReport& rep);

json alg_element_to_json(const AlgElement& a);
AlgElement alg_element_from_json(const Ring& r, AlgebraKind kind, const json& j);

json z_matrix_to_json(const ZMatrix& z);
ZMatrix z_matrix_from_json(const json& j);

}  // namespace forge
