#include "support.hpp"

#include <functional>

namespace tecc::testing {

namespace {

FieldPtr field_of(int q) {
    for (int p = 2; p <= q; ++p) {
        if (q % p) continue;
        int m = 0, r = q;
        while (r % p == 0) r /= p, ++m;
        return Field::make(p, m);
    }
    throw Error(Errc::NotPrime, "bad q");
}

// Keeps the candidate with the most split x-values; stops at `want`.
void consider(std::optional<CurveChoice>& best, int q, const std::function<Curve()>& make, int want) {
    if (best && best->max_n >= 2 * want) return;
    try {
        Curve c = make();
        const int n = 2 * static_cast<int>(split_xs(c).size());
        if (!best || n > best->max_n) best = CurveChoice{q, std::move(c), n};
    } catch (const Error&) {
    }
}

}  // namespace

std::vector<CurveChoice> sweep_curves(int q, int want) {
    const FieldPtr F = field_of(q);
    std::vector<CurveChoice> out;
    if (F->p() != 2) {
        std::optional<CurveChoice> best;
        for (Elem b = 0; b < static_cast<Elem>(q); ++b)
            for (Elem a = 0; a < static_cast<Elem>(q); ++a)
                consider(best, q, [&] { return Curve::type1(F, {b, a, 0, 1}); }, want);
        if (best) out.push_back(*best);
        return out;
    }
    std::optional<CurveChoice> t2, t3;
    for (Elem b = 0; b < static_cast<Elem>(q); ++b)
        for (Elem a = 0; a < static_cast<Elem>(q); ++a) {
            consider(t2, q, [&] { return Curve::type2(F, {b, a, 0, 1}); }, want);
            if (a != 0) consider(t3, q, [&] { return Curve::type3(F, a, b); }, want);
        }
    if (t2) out.push_back(*t2);
    if (t3) out.push_back(*t3);
    return out;
}

std::vector<int> sweep_fields() { return {4, 5, 7, 8, 9, 11, 13, 16}; }

Matrix from_ints(const Field& F, const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<Elem>> r;
    for (const auto& row : rows) {
        std::vector<Elem> e;
        for (int v : row) e.push_back(F.from_int(v));
        r.push_back(e);
    }
    return Matrix::from_rows(F, r);
}

Matrix from_text(const Field& F, const std::vector<std::string>& rows) {
    std::string t;
    for (const auto& r : rows) t += r + "\n";
    return Matrix::parse_text(F, t);
}

}  // namespace tecc::testing
