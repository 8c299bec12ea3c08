#include "tecc/io.hpp"

namespace tecc {

json field_to_json(const Field& f) { return {{"p", f.p()}, {"m", f.m()}, {"poly", f.poly()}}; }

FieldPtr field_from_json(const json& j) {
    try {
        const int p = j.at("p").get<int>();
        const int m = j.value("m", 1);
        std::optional<std::vector<int>> poly;
        if (j.contains("poly")) poly = j.at("poly").get<std::vector<int>>();
        return Field::make(p, m, poly);
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, std::string("field descriptor: ") + e.what());
    }
}

json elem_to_json(const Field& f, Elem e) {
    if (f.is_prime_field()) return e;
    return f.format(e, ElemStyle::Coeffs);
}

Elem elem_from_json(const Field& f, const json& j) {
    if (j.is_number_integer()) {
        const long long v = j.get<long long>();
        if (f.is_prime_field()) return f.from_int(v);
        if (v < 0 || v >= f.q()) throw Error(Errc::Parse, "element encoding out of range");
        return static_cast<Elem>(v);
    }
    if (j.is_string()) return f.parse(j.get<std::string>());
    throw Error(Errc::Parse, "field element must be a number or a string");
}

json curve_to_json(const Curve& c) {
    const Field& f = c.field();
    json j{{"kind", kind_name(c.kind())}, {"field", field_to_json(f)}};
    if (c.kind() == CurveKind::Type3) {
        j["a"] = elem_to_json(f, c.a());
        j["b"] = elem_to_json(f, c.b());
    } else {
        json arr = json::array();
        for (int i = 0; i <= 3; ++i) arr.push_back(elem_to_json(f, c.f().coeff(i)));
        j["f"] = arr;
    }
    return j;
}

Curve curve_from_json(const json& j, FieldPtr field) {
    try {
        if (j.contains("field")) field = field_from_json(j.at("field"));
        if (!field) throw Error(Errc::Parse, "curve descriptor lacks a field");
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "type3") return Curve::type3(field, elem_from_json(*field, j.at("a")), elem_from_json(*field, j.at("b")));
        const auto& fj = j.at("f");
        if (!fj.is_array() || fj.size() != 4) throw Error(Errc::Parse, "f needs four coefficients c0..c3");
        std::array<Elem, 4> cub{};
        for (int i = 0; i < 4; ++i) cub[i] = elem_from_json(*field, fj[i]);
        if (kind == "type1") return Curve::type1(field, cub);
        if (kind == "type2") return Curve::type2(field, cub);
        throw Error(Errc::Parse, "unknown curve kind '" + kind + "'");
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, std::string("curve descriptor: ") + e.what());
    }
}

json point_to_json(const Curve& c, const Point& p) { return c.format_point(p); }

Point point_from_json(const Curve& c, const json& j) {
    if (!j.is_string()) throw Error(Errc::Parse, "points are written as \"(x,y)\" strings");
    return c.parse_point(j.get<std::string>());
}

json matrix_to_json(const Matrix& m, ElemStyle s) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) {
            if (m.field().is_prime_field())
                row.push_back(m.at(r, c));
            else
                row.push_back(m.field().format(m.at(r, c), s));
        }
        rows.push_back(row);
    }
    return rows;
}

json handle_to_json(const CodeHandle& h) {
    const Curve& c = h.curve();
    const Field& f = c.field();
    json j{{"field", field_to_json(f)}, {"curve", curve_to_json(c)}, {"k", h.k()}};
    j["curve"].erase("field");
    json D = json::array();
    for (const auto& p : h.D().points()) D.push_back(point_to_json(c, p));
    j["D"] = D;
    const TwistSpec& tw = h.twist();
    if (tw.is_single()) {
        j["twist"] = {{"ell", tw.ell()}, {"eta", elem_to_json(f, tw.eta0())}};
    } else if (!tw.empty()) {
        json eta = json::array();
        for (Elem e : tw.eta) eta.push_back(elem_to_json(f, e));
        j["twist"] = {{"t", tw.t}, {"h", tw.h}, {"eta", eta}};
    }
    if (h.v()) {
        json v = json::array();
        for (Elem e : *h.v()) v.push_back(elem_to_json(f, e));
        j["v"] = v;
    }
    return j;
}

CodeHandle handle_from_json(const json& j) {
    try {
        FieldPtr field;
        if (j.contains("field")) field = field_from_json(j.at("field"));
        Curve c = curve_from_json(j.at("curve"), field);
        const Field& f = c.field();
        EvalSet D;
        const auto& dj = j.at("D");
        if (dj.is_array()) {
            std::vector<Point> pts;
            for (const auto& p : dj) pts.push_back(point_from_json(c, p));
            D = EvalSet::from_points(c, std::move(pts));
        } else {
            const std::string order = dj.value("order", "field");
            if (order != "field" && order != "nonzero-first") throw Error(Errc::Parse, "D.order is 'field' or 'nonzero-first'");
            D = select_eval_set(c, dj.at("n").get<int>(), order == "field" ? XOrder::FieldOrder : XOrder::NonzeroFirst);
        }
        const int k = j.at("k").get<int>();
        TwistSpec tw;
        if (j.contains("twist") && !j.at("twist").is_null()) {
            const auto& t = j.at("twist");
            if (t.contains("ell")) {
                tw = TwistSpec::single(t.at("ell").get<int>(), elem_from_json(f, t.at("eta")));
            } else {
                tw.t = t.at("t").get<std::vector<int>>();
                tw.h = t.at("h").get<std::vector<int>>();
                for (const auto& e : t.at("eta")) tw.eta.push_back(elem_from_json(f, e));
            }
        }
        std::optional<std::vector<Elem>> v;
        if (j.contains("v") && !j.at("v").is_null()) {
            std::vector<Elem> vv;
            for (const auto& e : j.at("v")) vv.push_back(elem_from_json(f, e));
            v = std::move(vv);
        }
        return CodeHandle::make(std::move(c), std::move(D), k, std::move(tw), std::move(v));
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, std::string("code descriptor: ") + e.what());
    }
}

}  // namespace tecc
