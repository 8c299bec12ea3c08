#include "repro.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "goldens.hpp"

namespace tecc::repro {

namespace {

constexpr ElemStyle kStyle = ElemStyle::Poly;
const std::string kRowSpace = " ~rowspace";

std::string mat(const Matrix& m) {
    std::string s = m.to_text(kStyle);
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

std::string vec(const Field& F, const std::vector<Elem>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + F.format(v[i], kStyle);
    return s;
}

std::string points_text(const Curve& c, const EvalSet& D) {
    std::string s;
    for (std::size_t i = 0; i < D.size(); ++i) s += (i ? "\n" : "") + c.format_point(D[i], kStyle);
    return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

EvalSet parse_points(const Curve& c, const std::vector<std::string>& pts) {
    std::vector<Point> out;
    for (const auto& p : pts) out.push_back(c.parse_point(p));
    return EvalSet::from_points(c, std::move(out));
}

std::string check_note(const std::string& what, bool ok) { return "check: " + what + ": " + yes_no(ok); }

Report example1() {
    Report r{"example1", Field::make(5), {}, {}};
    const Curve c = Curve::type1(r.field, {1, 1, 0, 1});
    const EvalSet D = select_eval_set(c, 8);
    const Matrix G = ecc_generator(c, D, 4);
    const Matrix H = ecc_parity_check(c, D, 4);
    const auto res = residues(c, D);
    r.sections = {{"points", points_text(c, D)},
                  {"generator", mat(G)},
                  {"residues", vec(*r.field, res.gamma)},
                  {"residues-symbolic", ""},
                  {"parity-check", mat(H)},
                  {"distance", std::to_string(min_distance(G))},
                  {"dual-distance", std::to_string(min_distance(H))}};
    std::string sym;
    const auto symbolic = symbolic_residues(c, D);
    for (const auto& s : *symbolic) sym += (sym.empty() ? "" : " ") + s;
    r.sections[3].body = sym;
    r.notes.push_back(check_note("G*H^T = 0", (G * H.transposed()).is_zero()));
    r.notes.push_back(check_note("H spans the nullspace of G", same_row_space(H, nullspace(G))));
    return r;
}

Report example2() {
    Report r{"example2", Field::make(2, 4), {}, {}};
    const Curve c = Curve::type2(r.field, {1, 0, 0, 1});
    const EvalSet D = parse_points(c, {"(0,w^2+w)", "(0,w^2+w+1)", "(w^2+w,0)", "(w^2+w,1)", "(w^2+w+1,0)", "(w^2+w+1,1)",
                                       "(1,0)", "(1,1)"});
    const Matrix G = ecc_generator(c, D, 4);
    const Matrix H = ecc_parity_check(c, D, 4);
    r.sections = {{"points", points_text(c, D)},
                  {"generator", mat(G)},
                  {"residues", vec(*r.field, residues(c, D).gamma)},
                  {"parity-check", mat(H)},
                  {"self-dual", yes_no(is_self_dual(G))},
                  {"distance", std::to_string(min_distance(G))}};
    r.notes.push_back(check_note("G*H^T = 0", (G * H.transposed()).is_zero()));
    return r;
}

Report example3() {
    Report r{"example3", Field::make(2, 2), {}, {}};
    const Curve c = Curve::type3(r.field, 1, 1);
    const EvalSet D = parse_points(c, {"(w,0)", "(w,1)", "(w+1,0)", "(w+1,1)", "(0,w)", "(0,w+1)"});
    const Matrix G = ecc_generator(c, D, 4);
    const Matrix H = ecc_parity_check(c, D, 4);
    r.sections = {{"points", points_text(c, D)},
                  {"generator", mat(G)},
                  {"residues", vec(*r.field, residues(c, D).gamma)},
                  {"parity-check", mat(H)},
                  {"distance", std::to_string(min_distance(G))}};
    r.notes.push_back(check_note("G*H^T = 0", (G * H.transposed()).is_zero()));
    return r;
}

// y^2 + y = x^3 over GF(4) with D ordered by nonzero x first.
struct Gf4Setup {
    FieldPtr F = Field::make(2, 2);
    Curve c = Curve::type2(F, {0, 0, 0, 1});
    EvalSet D = select_eval_set(c, 6, XOrder::NonzeroFirst);
};

Report table1() {
    Gf4Setup s;
    Report r{"table1", s.F, {}, {}};
    const Point g1 = s.c.parse_point("(1,w)"), g2 = s.c.parse_point("(w,w)");
    const auto gs = group_structure(s.c, std::make_pair(g1, g2));
    std::string lines;
    // Display order of the coordinate pairs.
    const std::vector<std::pair<int, int>> order = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}, {0, 2}};
    for (const auto& [i, j] : order) {
        const Point p = gs.from_dlog(i, j);
        if (!lines.empty()) lines += "\n";
        lines += "(" + std::to_string(i) + "," + std::to_string(j) + ") " + (p.inf ? "O" : s.c.format_point(p, kStyle));
    }
    r.sections = {{"group", "Z/" + std::to_string(gs.n1) + " x Z/" + std::to_string(gs.n2)},
                  {"generators", s.c.format_point(g1, kStyle) + " " + s.c.format_point(g2, kStyle)},
                  {"dlog", lines}};
    return r;
}

std::string witness_lines(const Curve& c, const EvalSet& D, const SubsetSums& ss) {
    std::string out;
    for (const auto& w : ss.witnesses) {
        std::string lab;
        std::vector<Point> pts;
        for (int i : w) {
            lab += (lab.empty() ? "P" : " P") + std::to_string(i + 1);
            pts.push_back(D[i]);
        }
        const auto f = vanishing_function(c, pts);
        if (!out.empty()) out += "\n";
        out += lab + " : " + (f ? f->str(c, kStyle) : "none");
    }
    return out;
}

Report vanishing_table(const std::string& name, int k) {
    Gf4Setup s;
    Report r{name, s.F, {}, {}};
    const auto ss = subset_sum_count(s.c, k, Point::infinity(), s.D);
    r.sections = {{"count", std::to_string(ss.count)}, {"solutions", witness_lines(s.c, s.D, ss)}};
    return r;
}

struct Gf5Setup {
    FieldPtr F = Field::make(5);
    Curve c = Curve::type1(F, {1, 1, 0, 1});
    EvalSet D = select_eval_set(c, 8);
};

Report table4() {
    Gf5Setup s;
    Report r{"table4", s.F, {}, {}};
    const Point g = s.D[0];
    std::map<std::size_t, int> dlog;
    Point acc = g;
    for (int i = 1; !acc.inf; ++i, acc = s.c.add(acc, g))
        for (std::size_t j = 0; j < s.D.size(); ++j)
            if (s.D[j] == acc) dlog[j] = i;
    const auto ss = subset_sum_count(s.c, 4, Point::infinity(), s.D);
    std::vector<std::pair<std::vector<int>, std::string>> rows;
    for (const auto& w : ss.witnesses) {
        std::vector<int> logs;
        std::vector<Point> pts;
        for (int i : w) {
            logs.push_back(dlog.at(static_cast<std::size_t>(i)));
            pts.push_back(s.D[i]);
        }
        std::sort(logs.begin(), logs.end());
        const auto ew = eta_of_points(s.c, 3, 0, pts);
        std::string line = "{";
        for (std::size_t i = 0; i < logs.size(); ++i) line += (i ? "," : "") + std::to_string(logs[i]);
        line += "} : " + (ew.f ? ew.f->str(s.c, kStyle) : std::string("none")) + " : eta=";
        line += ew.status == EtaStatus::Value ? s.F->format(ew.eta, kStyle) : "-";
        rows.emplace_back(logs, line);
    }
    std::sort(rows.begin(), rows.end());
    std::string body;
    for (const auto& row : rows) body += (body.empty() ? "" : "\n") + row.second;
    r.sections = {{"generator", s.c.format_point(g, kStyle)}, {"count", std::to_string(ss.count)}, {"solutions", body}};
    return r;
}

Report gf4_tecc() {
    Gf4Setup s;
    const Field& F = *s.F;
    Report r{"gf4-tecc", s.F, {}, {}};
    const std::vector<Elem> units = {1, F.parse("w"), F.parse("w+1")};
    const auto gamma = residues(s.c, s.D).gamma;
    for (Elem eta : units) {
        for (Elem lam : units) {
            std::vector<Elem> v;
            for (const auto& p : s.D.points()) v.push_back(F.div(lam, p.x));
            const auto h = CodeHandle::make(s.c, s.D, 3, TwistSpec::single(0, eta), v);
            // Residue-weighted defining set over v, one row per defining function.
            std::vector<Elem> wts(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) wts[i] = F.div(gamma[i], v[i]);
            const Matrix H = evaluate(s.c, h.defining_set(), s.D).scale_columns(wts);
            const Matrix& G = h.generator();
            const bool valid = (G * H.transposed()).is_zero() && rank(H) == 3;
            const auto T = solve_left(H, G);
            const auto cert = self_dual_check(h);
            const std::string tag = " lambda=" + F.format(lam, kStyle) + " eta=" + F.format(eta, kStyle);
            r.sections.push_back({"generator" + tag, mat(G)});
            r.sections.push_back({"parity-check" + tag, mat(valid ? H : parity_check_recursive(h).H)});
            r.sections.push_back({"transformation" + tag, T ? mat(*T) : "none"});
            r.sections.push_back({"self-dual" + tag, yes_no(cert.verdict && cert.span_verdict)});
            r.notes.push_back(check_note("recursive route matches" + tag, same_row_space(parity_check_recursive(h).H, H)));
        }
        const auto h = CodeHandle::make(s.c, s.D, 3, TwistSpec::single(0, eta));
        const auto dc = min_distance_class(h);
        r.sections.push_back({"distance eta=" + F.format(eta, kStyle), std::to_string(dc.d)});
        r.notes.push_back("witness eta=" + F.format(eta, kStyle) + ": " + dc.detail + " (" + distance_case_name(dc.which) + ")");
    }
    return r;
}

Report gf5_tecc() {
    Gf5Setup s;
    Report r{"gf5-tecc", s.F, {}, {}};
    for (Elem eta = 1; eta < 5; ++eta) {
        const auto h = CodeHandle::make(s.c, s.D, 3, TwistSpec::single(0, eta));
        const Matrix& G = h.generator();
        const auto rec = parity_check_recursive(h);
        const auto cf = parity_check_closed_form(h);
        const Matrix ns = parity_check_nullspace(h);
        const auto dc = min_distance_class(h);
        const auto sum = classify(G);
        const std::string tag = " eta=" + std::to_string(eta);
        r.sections.push_back({"generator" + tag, mat(G)});
        r.sections.push_back({"parity-check" + tag + kRowSpace, mat(rec.H)});
        r.sections.push_back({"distance" + tag, std::to_string(dc.d)});
        r.sections.push_back({"dual-distance" + tag, std::to_string(sum.dual_d)});
        r.sections.push_back({"class" + tag, class_name(sum.cls)});
        r.notes.push_back(check_note("routes agree" + tag, same_row_space(rec.H, ns) && same_row_space(cf.H, ns)));
        r.notes.push_back("extra dual function" + tag + ": " + rec.f.str(s.c, kStyle));
        r.notes.push_back("witness" + tag + ": " + dc.detail + " (" + distance_case_name(dc.which) + ")");
    }
    return r;
}

const std::map<std::string, std::function<Report()>>& registry() {
    static const std::map<std::string, std::function<Report()>> m = {
        {"example1", example1},
        {"example2", example2},
        {"example3", example3},
        {"table1", table1},
        {"table2", [] { return vanishing_table("table2", 4); }},
        {"table3", [] { return vanishing_table("table3", 3); }},
        {"table4", table4},
        {"gf4-tecc", gf4_tecc},
        {"gf5-tecc", gf5_tecc},
    };
    return m;
}

bool ends_with(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

}  // namespace

const std::vector<std::string>& targets() {
    static const std::vector<std::string> t = {"example1", "example2", "example3", "table1",  "table2",
                                               "table3",   "table4",   "gf4-tecc", "gf5-tecc"};
    return t;
}

Report run(const std::string& target) {
    const auto& reg = registry();
    auto it = reg.find(target);
    if (it == reg.end()) throw Error(Errc::BadRange, "unknown repro target '" + target + "'");
    return it->second();
}

std::optional<std::string> golden(const std::string& target) {
    const auto& g = embedded_goldens();
    auto it = g.find(target);
    if (it == g.end()) return std::nullopt;
    return it->second;
}

std::vector<Section> parse_sections(const std::string& text) {
    std::vector<Section> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.size() >= 2 && line.front() == '[' && line.back() == ']') {
            out.push_back({line.substr(1, line.size() - 2), ""});
            continue;
        }
        if (out.empty()) {
            if (line.empty()) continue;
            throw Error(Errc::Parse, "text before the first section header");
        }
        auto& b = out.back().body;
        b += (b.empty() ? "" : "\n") + line;
    }
    return out;
}

std::string render(const std::vector<Section>& sections) {
    std::string s;
    for (const auto& sec : sections) s += "[" + sec.name + "]\n" + sec.body + "\n";
    return s;
}

Diff compare(const Report& r, const std::string& golden_text) {
    Diff d;
    const auto want = parse_sections(golden_text);
    std::map<std::string, const Section*> got;
    for (const auto& s : r.sections) got[s.name] = &s;
    for (const auto& w : want) {
        auto it = got.find(w.name);
        if (it == got.end()) {
            d.mismatches.push_back(w.name + ": missing");
            continue;
        }
        const std::string& have = it->second->body;
        bool ok = have == w.body;
        if (!ok && ends_with(w.name, kRowSpace)) {
            try {
                ok = same_row_space(Matrix::parse_text(*r.field, have), Matrix::parse_text(*r.field, w.body));
            } catch (const Error&) {
                ok = false;
            }
        }
        if (!ok) d.mismatches.push_back(w.name + ": differs");
        got.erase(it);
    }
    for (const auto& [name, _] : got) d.mismatches.push_back(name + ": not in golden");
    d.match = d.mismatches.empty();
    return d;
}

std::optional<std::vector<std::string>> symbolic_residues(const Curve& c, const EvalSet& D) {
    if (!c.field().is_prime_field()) return std::nullopt;
    const auto xs = residues(c, D).xs;
    std::vector<std::string> out;
    for (const auto& p : D.points()) {
        long long prod = 1;
        for (Elem b : xs)
            if (b != p.x) prod *= static_cast<long long>(p.x) - static_cast<long long>(b);
        out.push_back(std::string(prod < 0 ? "-" : "") + "1/" + std::to_string(prod < 0 ? -prod : prod));
    }
    return out;
}

}  // namespace tecc::repro
