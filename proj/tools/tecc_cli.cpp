#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "repro.hpp"
#include "tecc/io.hpp"

using namespace tecc;

namespace {

constexpr ElemStyle kStyle = ElemStyle::Poly;

struct Opts {
    std::string field, curve, descriptor, v, points, order = "field", filter, format = "text";
    std::optional<int> k, ell, n;
    std::optional<std::string> eta;
    std::optional<long long> budget;
    unsigned long long witness_cap = 10000;
    std::string target;
};

// Split on commas that are not inside brackets, so "[0,1]" stays one token.
std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, what + ": " + e.what());
    }
}

// "q", "p^m", optionally followed by ":c0,c1,...,cm".
json field_flag(const std::string& s) {
    if (!s.empty() && s.front() == '{') return parse_json_text(s, "--field");
    std::string head = s, tail;
    if (auto c = s.find(':'); c != std::string::npos) {
        head = s.substr(0, c);
        tail = s.substr(c + 1);
    }
    int p = 0, m = 1;
    try {
        if (auto c = head.find('^'); c != std::string::npos) {
            p = std::stoi(head.substr(0, c));
            m = std::stoi(head.substr(c + 1));
        } else {
            const int q = std::stoi(head);
            for (int d = 2; d <= q; ++d)
                if (q % d == 0) {
                    p = d;
                    break;
                }
            int r = q;
            m = 0;
            while (p > 1 && r % p == 0) {
                r /= p;
                ++m;
            }
            if (r != 1) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
        }
    } catch (const std::logic_error&) {
        throw Error(Errc::Parse, "cannot read --field '" + s + "'");
    }
    json j{{"p", p}, {"m", m}};
    if (!tail.empty()) {
        std::vector<int> poly;
        for (const auto& t : split_list(tail)) poly.push_back(std::stoi(t));
        j["poly"] = poly;
    }
    return j;
}

// "type1:c0,c1,c2,c3", "type2:c0,c1,c2,c3", "type3:a,b" or a JSON object.
json curve_flag(const std::string& s) {
    if (!s.empty() && s.front() == '{') return parse_json_text(s, "--curve");
    const auto c = s.find(':');
    if (c == std::string::npos) throw Error(Errc::Parse, "--curve is kind:coefficients, e.g. type1:1,1,0,1");
    const std::string kind = s.substr(0, c);
    const auto parts = split_list(s.substr(c + 1));
    json j{{"kind", kind}};
    if (kind == "type3") {
        if (parts.size() != 2) throw Error(Errc::Parse, "type3 takes a,b");
        j["a"] = parts[0];
        j["b"] = parts[1];
    } else {
        j["f"] = parts;
    }
    return j;
}

std::vector<std::string> point_tokens(const std::string& s) {
    static const std::regex re(R"(\([^()]*\)|O)");
    std::vector<std::string> out;
    for (auto it = std::sregex_iterator(s.begin(), s.end(), re); it != std::sregex_iterator(); ++it) out.push_back(it->str());
    return out;
}

// Descriptor first, flags on top.
json gather(const Opts& o) {
    json j = json::object();
    if (!o.descriptor.empty()) {
        if (o.descriptor.front() == '{') {
            j = parse_json_text(o.descriptor, "--descriptor");
        } else {
            std::ifstream in(o.descriptor);
            if (!in) throw Error(Errc::Parse, "cannot open descriptor " + o.descriptor);
            std::stringstream ss;
            ss << in.rdbuf();
            j = parse_json_text(ss.str(), o.descriptor);
        }
    }
    if (!o.field.empty()) j["field"] = field_flag(o.field);
    if (!o.curve.empty()) j["curve"] = curve_flag(o.curve);
    if (j.contains("curve") && !j.contains("field") && j["curve"].contains("field")) j["field"] = j["curve"]["field"];
    if (o.k) j["k"] = *o.k;
    if (!o.points.empty()) {
        j["D"] = point_tokens(o.points);
    } else if (o.n) {
        j["D"] = {{"n", *o.n}, {"order", o.order}};
    }
    if (o.ell || o.eta) {
        json t = j.value("twist", json::object());
        if (t.is_null()) t = json::object();
        if (o.ell) t["ell"] = *o.ell;
        if (o.eta) t["eta"] = *o.eta;
        if (!t.contains("ell")) t["ell"] = 0;
        j["twist"] = t;
    }
    if (!o.v.empty()) j["v"] = split_list(o.v);
    return j;
}

Curve curve_of(const json& j) {
    if (!j.contains("curve")) throw Error(Errc::Parse, "no curve given (--curve or descriptor)");
    FieldPtr f;
    if (j.contains("field")) f = field_from_json(j["field"]);
    return curve_from_json(j["curve"], f);
}

CodeHandle handle_of(json j) {
    if (!j.contains("k")) throw Error(Errc::Parse, "no dimension given (--k or descriptor)");
    if (!j.contains("D")) {
        const Curve c = curve_of(j);
        j["D"] = {{"n", 2 * static_cast<int>(split_xs(c).size())}, {"order", "field"}};
    }
    return handle_from_json(j);
}

json ej(const Field& F, Elem e) {
    if (F.is_prime_field()) return e;
    return F.format(e, kStyle);
}

json ejv(const Field& F, const std::vector<Elem>& v) {
    json a = json::array();
    for (Elem e : v) a.push_back(ej(F, e));
    return a;
}

std::string vtext(const Field& F, const std::vector<Elem>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + F.format(v[i], kStyle);
    return s;
}

void print_matrix(const std::string& title, const Matrix& m) { std::cout << title << ":\n" << m.to_text(kStyle); }

long long budget_of(const Opts& o) { return o.budget ? *o.budget : default_budget(); }

bool as_json(const Opts& o) { return o.format == "json"; }

int cmd_field(const Opts& o) {
    if (o.field.empty()) throw Error(Errc::Parse, "--field is required");
    const FieldPtr F = field_from_json(field_flag(o.field));
    if (as_json(o)) {
        json j = field_to_json(*F);
        j["q"] = F->q();
        j["primitive"] = ej(*F, F->primitive());
        json els = json::array();
        for (Elem e : F->elements()) els.push_back(ej(*F, e));
        j["elements"] = els;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << F->describe() << "\nprimitive: " << F->format(F->primitive(), kStyle) << "\nelements:";
    for (Elem e : F->elements()) std::cout << " " << F->format(e, kStyle);
    std::cout << "\n";
    return 0;
}

int cmd_curve(const Opts& o) {
    const Curve c = curve_of(gather(o));
    const auto gs = group_structure(c, std::nullopt, 1LL << 16);
    const auto pts = c.points();
    const double bound = 2 * std::sqrt(static_cast<double>(c.field().q()));
    const long long N = static_cast<long long>(pts.size());
    if (as_json(o)) {
        json ps = json::array();
        for (std::size_t i = 0; i < gs.points.size(); ++i)
            ps.push_back({{"point", gs.points[i].inf ? "O" : c.format_point(gs.points[i], kStyle)},
                          {"dlog", {gs.dlog[i].first, gs.dlog[i].second}}});
        json sx = json::array();
        for (Elem x : split_xs(c)) sx.push_back(ej(c.field(), x));
        json j{{"curve", c.describe(kStyle)},
               {"order", N},
               {"hasse_ok", std::abs(static_cast<double>(N - c.field().q() - 1)) <= bound},
               {"group", {gs.n1, gs.n2}},
               {"generators", {c.format_point(gs.g1, kStyle), c.format_point(gs.g2, kStyle)}},
               {"points", ps},
               {"split_x", sx}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << c.describe(kStyle) << "\n#E = " << N << " (Hasse interval " << c.field().q() + 1 << " +- " << bound << ")\n";
    std::cout << "group: Z/" << gs.n1 << " x Z/" << gs.n2 << ", generators " << c.format_point(gs.g1, kStyle) << " "
              << c.format_point(gs.g2, kStyle) << "\n";
    for (std::size_t i = 0; i < gs.points.size(); ++i)
        std::cout << "  " << (gs.points[i].inf ? "O" : c.format_point(gs.points[i], kStyle)) << "  dlog (" << gs.dlog[i].first
                  << "," << gs.dlog[i].second << ")\n";
    std::cout << "split x-values: " << vtext(c.field(), split_xs(c)) << "\n";
    return 0;
}

json funcs_json(const Curve& c, const FuncBasis& fb) {
    json a = json::array();
    for (const auto& f : fb.funcs) a.push_back(f.str(c, kStyle));
    return a;
}

int cmd_code(const Opts& o) {
    const CodeHandle h = handle_of(gather(o));
    const Curve& c = h.curve();
    if (as_json(o)) {
        json j = handle_to_json(h);
        j["n"] = h.n();
        j["defining_set"] = funcs_json(c, h.defining_set());
        j["generator"] = matrix_to_json(h.generator(), kStyle);
        j["warnings"] = h.warnings();
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << c.describe(kStyle) << "\nn = " << h.n() << ", k = " << h.k() << "\nD:";
    for (const auto& p : h.D().points()) std::cout << " " << c.format_point(p, kStyle);
    std::cout << "\ndefining set:";
    for (const auto& f : h.defining_set().funcs) std::cout << "\n  " << f.str(c, kStyle);
    std::cout << "\n";
    if (h.v()) std::cout << "v: " << vtext(h.field(), *h.v()) << "\n";
    for (const auto& w : h.warnings()) std::cout << "warning: " << w << "\n";
    print_matrix("generator", h.generator());
    return 0;
}

int cmd_dual(const Opts& o) {
    const CodeHandle h = handle_of(gather(o));
    const Curve& c = h.curve();
    const Matrix ns = parity_check_nullspace(h);
    json j{{"n", h.n()}, {"k", h.k()}};
    json routes = json::object();
    bool agree = true;
    auto route = [&](const std::string& name, const std::function<Matrix()>& build, const std::function<void(json&)>& extra) {
        json r;
        try {
            const Matrix H = build();
            const bool same = same_row_space(H, ns);
            agree = agree && same;
            r = {{"status", "ok"}, {"matches_nullspace", same}, {"H", matrix_to_json(H, kStyle)}};
            extra(r);
            if (!as_json(o)) {
                print_matrix(name + " route (" + std::string(same ? "agrees" : "DISAGREES") + ")", H);
                if (r.contains("f")) std::cout << "  extra dual function: " << r["f"].get<std::string>() << "\n";
            }
        } catch (const Error& e) {
            r = {{"status", e.code() == Errc::DegenerateRecursion ? "degenerate" : "not applicable"}, {"reason", e.what()}};
            if (!as_json(o)) std::cout << name << " route: " << r["status"].get<std::string>() << " (" << e.what() << ")\n";
        }
        routes[name] = r;
    };
    if (!as_json(o)) {
        std::cout << "n = " << h.n() << ", k = " << h.k() << "\n";
        try {
            std::cout << "residues: " << vtext(h.field(), h.residues().gamma) << "\n";
            if (auto sym = repro::symbolic_residues(c, h.D())) {
                std::cout << "residues over Z:";
                for (const auto& s : *sym) std::cout << " " << s;
                std::cout << "\n";
            }
        } catch (const Error& e) {
            std::cout << "residues: " << e.what() << "\n";
        }
        print_matrix("nullspace route", ns);
    } else {
        try {
            j["residues"] = ejv(h.field(), h.residues().gamma);
        } catch (const Error&) {
        }
    }
    routes["nullspace"] = {{"status", "ok"}, {"H", matrix_to_json(ns, kStyle)}};
    route(
        "recursive",
        [&] {
            if (h.twisted() && !h.single_twist()) throw Error(Errc::Precondition, "needs a single twist");
            return parity_check_recursive(h).H;
        },
        [&](json& r) {
            if (h.single_twist()) r["f"] = parity_check_recursive(h).f.str(c, kStyle);
        });
    route(
        "closed-form", [&] { return parity_check_closed_form(h).H; },
        [&](json& r) { r["f"] = parity_check_closed_form(h).f.str(c, kStyle); });
    j["routes"] = routes;
    j["agree"] = agree;
    if (as_json(o))
        std::cout << j.dump(2) << "\n";
    else
        std::cout << "agreement: " << (agree ? "yes" : "NO") << "\n";
    return 0;
}

int cmd_analyze(const Opts& o) {
    const CodeHandle h = handle_of(gather(o));
    const Curve& c = h.curve();
    const long long budget = budget_of(o);
    const CodeSummary s = classify(h.generator(), budget);
    json j{{"n", s.n},
           {"k", s.k},
           {"d", s.d},
           {"defect", s.defect},
           {"dual_d", s.dual_d},
           {"dual_defect", s.dual_defect},
           {"class", class_name(s.cls)},
           {"amds", s.is_amds()},
           {"self_dual", s.self_dual},
           {"self_orthogonal", s.self_orthogonal}};
    if (h.single_twist()) {
        const DistanceClass dc = min_distance_class(h, o.witness_cap, budget);
        j["case"] = distance_case_name(dc.which);
        json w = json::array();
        for (int i : dc.witness) w.push_back(c.format_point(h.D()[i], kStyle));
        j["witness"] = {{"detail", dc.detail}, {"points", w}};
        if (dc.witness_function) j["witness"]["function"] = dc.witness_function->str(c, kStyle);
        j["eta_values"] = ejv(h.field(), dc.eta_values);
        j["all_eta"] = dc.all_eta;
        j["N_k_O"] = dc.n_k_O;
        j["literal_prediction"] = dc.literal_prediction;
        j["literal_agrees"] = dc.literal_agrees;
        if (dc.exhaustive_d) j["exhaustive_d"] = *dc.exhaustive_d;
        if (h.n() == 2 * h.k() && is_extreme_ell(h.k(), h.twist().ell())) {
            const auto cert = self_dual_check(h);
            j["self_dual_certificate"] = {{"lhs", ej(h.field(), cert.lhs)},
                                          {"eta_condition", cert.eta_condition},
                                          {"v_condition", cert.v_condition},
                                          {"verdict", cert.verdict},
                                          {"span_verdict", cert.span_verdict}};
            if (cert.lambda) j["self_dual_certificate"]["lambda"] = ej(h.field(), *cert.lambda);
        }
    } else {
        const int n = s.n, k = s.k;
        j["case"] = s.d == n - k + 1 ? "n-k+1" : s.d == n - k ? "n-k" : "other";
    }
    if (as_json(o)) {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "[" << s.n << "," << s.k << "," << s.d << "] " << class_name(s.cls) << " (defect " << s.defect << ", dual d "
              << s.dual_d << ", dual defect " << s.dual_defect << ")\n";
    std::cout << "self-dual: " << (s.self_dual ? "yes" : "no") << ", self-orthogonal: " << (s.self_orthogonal ? "yes" : "no")
              << "\ncase: " << j["case"].get<std::string>() << "\n";
    if (j.contains("witness")) {
        std::cout << "witness: " << j["witness"]["detail"].get<std::string>() << "; points";
        for (const auto& p : j["witness"]["points"]) std::cout << " " << p.get<std::string>();
        if (j["witness"].contains("function")) std::cout << "\n  function: " << j["witness"]["function"].get<std::string>();
        std::cout << "\nN(k,O,D) = " << j["N_k_O"].get<unsigned long long>() << ", eta values:";
        for (const auto& e : j["eta_values"]) std::cout << " " << (e.is_string() ? e.get<std::string>() : e.dump());
        std::cout << (j["all_eta"].get<bool>() ? " (all)" : "") << "\n";
        std::cout << "trichotomy read literally: d = " << j["literal_prediction"].get<int>()
                  << (j["literal_agrees"].get<bool>() ? " (agrees)" : " (differs)") << "\n";
    }
    if (j.contains("self_dual_certificate")) {
        const auto& sd = j["self_dual_certificate"];
        std::cout << "self-dual certificate: eta condition " << sd["eta_condition"].get<bool>() << ", v condition "
                  << sd["v_condition"].get<bool>() << ", verdict " << sd["verdict"].get<bool>() << ", span check "
                  << sd["span_verdict"].get<bool>() << "\n";
    }
    return 0;
}

int cmd_eta(const Opts& o) {
    const json j = gather(o);
    const Curve c = curve_of(j);
    if (!o.k) throw Error(Errc::Parse, "--k is required");
    std::vector<Point> pts;
    for (const auto& t : point_tokens(o.points)) pts.push_back(c.parse_point(t));
    const auto w = eta_of_points(c, *o.k, o.ell.value_or(0), pts);
    json out{{"status", eta_status_name(w.status)}};
    if (w.f) out["function"] = w.f->str(c, kStyle);
    if (w.status == EtaStatus::Value) out["eta"] = ej(c.field(), w.eta);
    if (as_json(o)) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "status: " << eta_status_name(w.status) << "\n";
    if (w.f) std::cout << "function: " << w.f->str(c, kStyle) << "\n";
    if (w.status == EtaStatus::Value) std::cout << "eta: " << c.field().format(w.eta, kStyle) << "\n";
    return 0;
}

int cmd_search(const Opts& o) {
    json j = gather(o);
    j.erase("twist");
    j.erase("v");
    const CodeHandle base = handle_of(j);
    SearchFilter f;
    for (const auto& t : split_list(o.filter)) {
        if (t == "mds")
            f.mds = true;
        else if (t == "self-dual")
            f.self_dual = true;
        else if (t == "amds")
            f.amds = true;
        else
            throw Error(Errc::Parse, "unknown filter '" + t + "' (mds, self-dual, amds)");
    }
    const auto hits = search_codes(base.curve(), base.D(), base.k(), f, budget_of(o));
    const Field& F = base.field();
    for (const auto& hit : hits) {
        if (as_json(o)) {
            json r{{"ell", hit.ell}, {"eta", ej(F, hit.eta)}, {"v", ejv(F, hit.v)}, {"d", hit.summary.d},
                   {"class", class_name(hit.summary.cls)}, {"self_dual", hit.summary.self_dual}};
            std::cout << r.dump() << "\n";
        } else {
            std::cout << "ell=" << hit.ell << " eta=" << F.format(hit.eta, kStyle) << " v=(" << vtext(F, hit.v) << ") ["
                      << hit.summary.n << "," << hit.summary.k << "," << hit.summary.d << "] " << class_name(hit.summary.cls)
                      << (hit.summary.self_dual ? " self-dual" : "") << "\n";
        }
    }
    if (!as_json(o)) std::cout << hits.size() << " match(es)\n";
    return 0;
}

int cmd_schur(const Opts& o) {
    const CodeHandle h = handle_of(gather(o));
    const SchurReport r = schur_audit(h);
    json j{{"n", r.n},
           {"k", r.k},
           {"dim", r.dim},
           {"dual_dim", r.dual_dim},
           {"ecc_dim", r.ecc_dim},
           {"pole_set", r.pole_set},
           {"sumset_size", r.sumset_size},
           {"primal_in_range", r.primal_in_range},
           {"dual_in_range", r.dual_in_range},
           {"primal_bound", r.primal_bound},
           {"dual_bound", r.dual_bound},
           {"extreme", r.extreme},
           {"rs", rs_verdict_name(r.rs)},
           {"dual_rs", rs_verdict_name(r.dual_rs)}};
    if (as_json(o)) {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "[" << r.n << "," << r.k << "] " << (h.twisted() ? (r.extreme ? "twisted, extreme hook" : "twisted, interior hook") : "untwisted")
              << "\nschur square dim: " << r.dim << " (untwisted on same D: " << r.ecc_dim << ", bound " << r.primal_bound
              << (r.primal_in_range ? "" : ", out of range") << ")\ndual schur square dim: " << r.dual_dim << " (bound "
              << r.dual_bound << (r.dual_in_range ? "" : ", out of range") << ")\n|T+T| = " << r.sumset_size
              << "\nverdict: " << rs_verdict_name(r.rs) << ", dual " << rs_verdict_name(r.dual_rs) << "\n";
    return 0;
}

int cmd_repro(const Opts& o) {
    std::vector<std::string> names;
    if (o.target == "all")
        names = repro::targets();
    else
        names = {o.target};
    bool all_ok = true;
    json arr = json::array();
    for (const auto& name : names) {
        const auto rep = repro::run(name);
        const auto g = repro::golden(name);
        const repro::Diff d = g ? repro::compare(rep, *g) : repro::Diff{false, {"no golden file"}};
        all_ok = all_ok && d.match;
        if (as_json(o)) {
            json secs = json::object();
            for (const auto& s : rep.sections) secs[s.name] = s.body;
            arr.push_back({{"target", name}, {"sections", secs}, {"notes", rep.notes}, {"match", d.match}, {"mismatches", d.mismatches}});
            continue;
        }
        std::cout << "# " << name << "\n" << repro::render(rep.sections);
        for (const auto& n : rep.notes) std::cout << "note: " << n << "\n";
        std::cout << "golden: " << (d.match ? "match" : "MISMATCH") << "\n";
        for (const auto& m : d.mismatches) std::cout << "  " << m << "\n";
    }
    if (as_json(o)) std::cout << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    return all_ok ? 0 : 3;
}

int exit_code(const Error& e) {
    switch (e.code()) {
        case Errc::BudgetExceeded:
        case Errc::CapExceeded: return 2;
        default: return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twisted elliptic curve codes: construction, duals, distances and searches"};
    app.require_subcommand(1);
    Opts o;

    auto common = [&](CLI::App* s, bool code_opts) {
        s->add_option("--field", o.field, "GF(q): q, p^m, optionally :c0,...,cm for the defining polynomial");
        s->add_option("--curve", o.curve, "type1:c0,c1,c2,c3 | type2:c0,c1,c2,c3 | type3:a,b | JSON");
        s->add_option("--descriptor", o.descriptor, "code descriptor: path or inline JSON");
        s->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        if (!code_opts) return;
        s->add_option("--k", o.k, "dimension");
        s->add_option("--ell", o.ell, "hook index of a single twist");
        s->add_option("--eta", o.eta, "twist coefficient");
        s->add_option("--v", o.v, "column multipliers, comma separated");
        s->add_option("--n", o.n, "length: both points above the first n/2 split x-values");
        s->add_option("--order", o.order, "x order for --n: field or nonzero-first")->check(CLI::IsMember({"field", "nonzero-first"}));
        s->add_option("--points", o.points, "explicit evaluation points, e.g. \"(0,1) (0,4)\"");
        s->add_option("--budget", o.budget, "codeword-class budget (default 1e6 or TECC_BUDGET)");
        s->add_option("--witness-cap", o.witness_cap, "largest subset-sum witness list kept");
    };

    auto* field = app.add_subcommand("field", "describe a finite field");
    common(field, false);
    auto* curve = app.add_subcommand("curve", "points and group structure");
    common(curve, false);
    auto* code = app.add_subcommand("code", "defining set and generator matrix");
    common(code, true);
    auto* dual = app.add_subcommand("dual", "parity-check matrices by every applicable route");
    common(dual, true);
    auto* analyze = app.add_subcommand("analyze", "distance, class and distance witness");
    common(analyze, true);
    auto* eta = app.add_subcommand("eta", "twist value attached to k+1 points");
    common(eta, true);
    auto* search = app.add_subcommand("search", "sweep hook indices, twist values and multipliers");
    common(search, true);
    search->add_option("--filter", o.filter, "comma list of mds, self-dual, amds");
    auto* schur = app.add_subcommand("schur", "Schur-square audit");
    common(schur, true);
    auto* repro = app.add_subcommand("repro", "rebuild a worked example and diff it against its golden file");
    repro->add_option("target", o.target, "example1..3, table1..4, gf4-tecc, gf5-tecc or all")->required();
    repro->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*field) return cmd_field(o);
        if (*curve) return cmd_curve(o);
        if (*code) return cmd_code(o);
        if (*dual) return cmd_dual(o);
        if (*analyze) return cmd_analyze(o);
        if (*eta) return cmd_eta(o);
        if (*search) return cmd_search(o);
        if (*schur) return cmd_schur(o);
        if (*repro) return cmd_repro(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e);
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
