#pragma once

#include <json.hpp>

#include "tecc/teccbuild.hpp"

namespace tecc {

using json = nlohmann::json;

json field_to_json(const Field& f);
FieldPtr field_from_json(const json& j);

// Prime-field elements as numbers, extension elements as coefficient-vector strings.
json elem_to_json(const Field& f, Elem e);
// Accepts numbers (canonical encoding) and any text the field parser understands.
Elem elem_from_json(const Field& f, const json& j);

json curve_to_json(const Curve& c);
// The field may sit inside the curve object or be passed separately.
Curve curve_from_json(const json& j, FieldPtr field = nullptr);

json point_to_json(const Curve& c, const Point& p);
Point point_from_json(const Curve& c, const json& j);

json matrix_to_json(const Matrix& m, ElemStyle s = ElemStyle::Coeffs);

// {"field", "curve", "D": [points] | {"n", "order"}, "k", "twist": {"ell","eta"} | {"t","h","eta"}, "v"}
json handle_to_json(const CodeHandle& h);
CodeHandle handle_from_json(const json& j);

}  // namespace tecc
