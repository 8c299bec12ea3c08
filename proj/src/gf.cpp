#include "tecc/gf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace tecc {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::Reducible: return "Reducible";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::DivideByZero: return "DivideByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::Parse: return "Parse";
        case Errc::WrongCharacteristic: return "WrongCharacteristic";
        case Errc::Singular: return "Singular";
        case Errc::OffCurve: return "OffCurve";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::Insufficient: return "Insufficient";
        case Errc::BadK: return "BadK";
        case Errc::BadRange: return "BadRange";
        case Errc::BadTwist: return "BadTwist";
        case Errc::PoleAtPoint: return "PoleAtPoint";
        case Errc::DuplicateX: return "DuplicateX";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::BadShape: return "BadShape";
        case Errc::DegenerateRecursion: return "DegenerateRecursion";
        case Errc::Precondition: return "Precondition";
    }
    return "Unknown";
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Remainder of a modulo monic d over GF(p); both low degree first.
bool divides_mod_p(const std::vector<int>& a, const std::vector<int>& d, int p) {
    std::vector<int> r = a;
    const int dd = static_cast<int>(d.size()) - 1;
    for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
        const int c = r[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] = ((r[i - dd + j] - c * d[j]) % p + p) % p;
    }
    for (int i = 0; i < dd; ++i)
        if (r[i] % p != 0) return false;
    return true;
}

const std::map<std::pair<int, int>, std::vector<int>>& poly_table() {
    static const std::map<std::pair<int, int>, std::vector<int>> t = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{7, 2}, {3, 6, 1}},
        {{11, 2}, {2, 7, 1}},
        {{13, 2}, {2, 12, 1}},
    };
    return t;
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<int>& poly, int p) {
    const int m = static_cast<int>(poly.size()) - 1;
    if (m < 1) return false;
    if (m == 1) return true;
    // Enumerate monic divisors of degree 1..m/2.
    for (int d = 1; d <= m / 2; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        std::vector<int> div(d + 1, 0);
        div[d] = 1;
        for (long long idx = 0; idx < count; ++idx) {
            long long t = idx;
            for (int i = 0; i < d; ++i) {
                div[i] = static_cast<int>(t % p);
                t /= p;
            }
            if (divides_mod_p(poly, div, p)) return false;
        }
    }
    return true;
}

std::vector<int> default_poly(int p, int m) {
    if (m == 1) return {0, 1};
    auto it = poly_table().find({p, m});
    if (it != poly_table().end()) return it->second;
    long long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    std::vector<int> poly(m + 1, 0);
    poly[m] = 1;
    for (long long idx = 0; idx < count; ++idx) {
        long long t = idx;
        for (int i = 0; i < m; ++i) {
            poly[i] = static_cast<int>(t % p);
            t /= p;
        }
        if (poly[0] != 0 && is_irreducible_mod_p(poly, p)) return poly;
    }
    throw Error(Errc::Reducible, "no irreducible polynomial found");
}

FieldPtr Field::make(int p, int m, std::optional<std::vector<int>> poly) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (m < 1) throw Error(Errc::DegreeMismatch, "extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) throw Error(Errc::DegreeMismatch, "field too large for this toolkit");
    }
    std::vector<int> f = poly ? *poly : default_poly(p, m);
    if (static_cast<int>(f.size()) != m + 1)
        throw Error(Errc::DegreeMismatch, "defining polynomial must have degree " + std::to_string(m));
    for (int& c : f) c = ((c % p) + p) % p;
    if (f[m] != 1) throw Error(Errc::DegreeMismatch, "defining polynomial must be monic");
    if (!is_irreducible_mod_p(f, p)) throw Error(Errc::Reducible, "defining polynomial factors over GF(p)");

    auto fld = std::shared_ptr<Field>(new Field());
    fld->p_ = p;
    fld->m_ = m;
    fld->q_ = static_cast<int>(q);
    fld->poly_ = f;
    fld->build_tables();
    return fld;
}

void Field::build_tables() {
    pow_p_.assign(m_ + 1, 1);
    for (int i = 1; i <= m_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;

    neg_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        auto c = coeffs(a);
        for (int& x : c) x = (p_ - x) % p_;
        neg_[a] = from_coeffs(c);
    }
    if (p_ != 2 && m_ > 1 && q_ <= 729) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b) {
                auto ca = coeffs(a), cb = coeffs(b);
                for (int i = 0; i < m_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
                add_table_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(from_coeffs(ca));
            }
    }

    // Schoolbook product modulo the defining polynomial, used only to build the tables.
    auto slow_mul = [&](Elem a, Elem b) {
        auto ca = coeffs(a), cb = coeffs(b);
        std::vector<long long> r(2 * m_, 0);
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) r[i + j] = (r[i + j] + static_cast<long long>(ca[i]) * cb[j]) % p_;
        for (int d = 2 * m_ - 1; d >= m_; --d) {
            const long long c = r[d];
            if (!c) continue;
            for (int i = 0; i <= m_; ++i) r[d - m_ + i] = ((r[d - m_ + i] - c * poly_[i]) % p_ + p_) % p_;
        }
        std::vector<int> out(m_);
        for (int i = 0; i < m_; ++i) out[i] = static_cast<int>(r[i]);
        return from_coeffs(out);
    };
    auto slow_pow = [&](Elem a, long long e) {
        Elem r = 1;
        while (e > 0) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };

    const long long order = q_ - 1;
    const auto factors = prime_factors(order);
    Elem g = 0;
    for (Elem cand = 1; cand < static_cast<Elem>(q_); ++cand) {
        bool prim = true;
        for (long long r : factors)
            if (slow_pow(cand, order / r) == 1) {
                prim = false;
                break;
            }
        if (prim) {
            g = cand;
            break;
        }
    }
    exp_.assign(2 * order + 1, 0);
    log_.assign(q_, 0);
    Elem x = 1;
    for (long long i = 0; i < order; ++i) {
        exp_[i] = x;
        exp_[i + order] = x;
        log_[x] = static_cast<std::uint32_t>(i);
        x = slow_mul(x, g);
    }
    exp_[2 * order] = 1;

    if (p_ != 2) {
        for (Elem z = 1; z < static_cast<Elem>(q_); ++z)
            if (!is_square(z)) {
                nonresidue_ = z;
                break;
            }
    }
}

Elem Field::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) {
        Elem s = a + b;
        return s >= static_cast<Elem>(p_) ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
    Elem r = 0;
    for (int i = 0; i < m_; ++i) {
        const Elem da = (a / pow_p_[i]) % p_, db = (b / pow_p_[i]) % p_;
        r += ((da + db) % p_) * pow_p_[i];
    }
    return r;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw Error(Errc::DivideByZero, "inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw Error(Errc::DivideByZero, "negative power of zero");
        return 0;
    }
    const long long ord = q_ - 1;
    long long l = (static_cast<long long>(log_[a]) * (((e % ord) + ord) % ord)) % ord;
    return exp_[l];
}

Elem Field::from_int(long long v) const {
    long long r = ((v % p_) + p_) % p_;
    return static_cast<Elem>(r);
}

bool Field::is_square(Elem a) const {
    if (a == 0 || p_ == 2) return true;
    return log_[a] % 2 == 0;
}

std::optional<Elem> Field::sqrt(Elem a) const {
    if (a == 0) return Elem{0};
    if (p_ == 2) return pow(a, q_ / 2);
    if (!is_square(a)) return std::nullopt;
    // Tonelli-Shanks with q-1 = 2^s * t.
    long long t = q_ - 1;
    int s = 0;
    while (t % 2 == 0) {
        t /= 2;
        ++s;
    }
    Elem z = pow(nonresidue_, t);
    Elem x = pow(a, (t + 1) / 2);
    Elem b = pow(a, t);
    int mm = s;
    while (b != 1) {
        int i = 0;
        Elem bb = b;
        while (bb != 1) {
            bb = mul(bb, bb);
            ++i;
        }
        Elem w = z;
        for (int j = 0; j < mm - i - 1; ++j) w = mul(w, w);
        x = mul(x, w);
        z = mul(w, w);
        b = mul(b, z);
        mm = i;
    }
    const Elem other = neg(x);
    return std::min(x, other);
}

std::vector<int> Field::coeffs(Elem a) const {
    std::vector<int> c(m_);
    for (int i = 0; i < m_; ++i) {
        c[i] = static_cast<int>(a % p_);
        a /= p_;
    }
    return c;
}

Elem Field::from_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) > m_) throw Error(Errc::Parse, "too many coefficients");
    Elem r = 0, base = 1;
    for (int x : c) {
        r += static_cast<Elem>(((x % p_) + p_) % p_) * base;
        base *= p_;
    }
    return r;
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(q_);
    for (int i = 0; i < q_; ++i) out[i] = static_cast<Elem>(i);
    return out;
}

std::string Field::format(Elem a, ElemStyle style) const {
    if (m_ == 1) return std::to_string(a);
    auto c = coeffs(a);
    std::ostringstream os;
    if (style == ElemStyle::Coeffs) {
        os << '[';
        for (int i = 0; i < m_; ++i) os << (i ? "," : "") << c[i];
        os << ']';
        return os.str();
    }
    if (a == 0) return "0";
    bool first = true;
    for (int i = m_ - 1; i >= 0; --i) {
        if (!c[i]) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c[i];
            continue;
        }
        if (c[i] != 1) os << c[i] << '*';
        os << 'w';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

Elem Field::parse(std::string_view text) const {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw Error(Errc::Parse, "empty element");
    auto bad = [&]() { return Error(Errc::Parse, "cannot parse field element '" + std::string(text) + "'"); };

    if (s.front() == '[') {
        if (s.back() != ']') throw bad();
        std::vector<int> c;
        std::string body = s.substr(1, s.size() - 2);
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                c.push_back(std::stoi(tok));
            } catch (...) {
                throw bad();
            }
        }
        if (static_cast<int>(c.size()) > m_) throw bad();
        return from_coeffs(c);
    }

    // Sum of terms: [coef[*]]w[^k] or integer constant.
    Elem acc = 0;
    std::size_t i = 0;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        }
        long long coef = 1;
        bool have_coef = false;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) {
            coef = std::stoll(s.substr(i, j - i));
            have_coef = true;
            i = j;
            if (i < s.size() && s[i] == '*') ++i;
        }
        Elem term;
        if (i < s.size() && s[i] == 'w') {
            ++i;
            long long e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t k = i;
                if (k < s.size() && s[k] == '-') ++k;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k == i) throw bad();
                e = std::stoll(s.substr(i, k - i));
                i = k;
            }
            if (m_ == 1) throw bad();
            const Elem w = from_coeffs(std::vector<int>{0, 1});
            term = mul(from_int(coef), pow(w, e));
        } else {
            if (!have_coef) throw bad();
            term = from_int(coef);
        }
        acc = negative ? sub(acc, term) : add(acc, term);
        if (i < s.size() && s[i] != '+' && s[i] != '-') throw bad();
    }
    return acc;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << q_ << ")";
    if (m_ > 1) {
        os << " = GF(" << p_ << ")[w]/(";
        bool first = true;
        for (int i = m_; i >= 0; --i) {
            if (!poly_[i]) continue;
            if (!first) os << '+';
            first = false;
            if (i == 0) {
                os << poly_[i];
                continue;
            }
            if (poly_[i] != 1) os << poly_[i] << '*';
            os << 'w';
            if (i > 1) os << '^' << i;
        }
        os << ')';
    }
    return os.str();
}

std::optional<Fq> Fq::sqrt() const {
    auto r = f_->sqrt(v_);
    if (!r) return std::nullopt;
    return Fq(*f_, *r);
}

// ---------------------------------------------------------------------------

PolyFq::PolyFq(const Field& f, std::vector<Elem> c) : f_(&f), c_(std::move(c)) { trim(); }

PolyFq PolyFq::monomial(const Field& f, int deg, Elem c) {
    std::vector<Elem> v(deg + 1, 0);
    v[deg] = c;
    return PolyFq(f, std::move(v));
}

void PolyFq::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Elem PolyFq::eval(Elem x) const {
    Elem r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = f_->add(f_->mul(r, x), *it);
    return r;
}

PolyFq PolyFq::operator+(const PolyFq& o) const {
    const Field& f = f_ ? *f_ : *o.f_;
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return PolyFq(f, std::move(r));
}

PolyFq PolyFq::operator-(const PolyFq& o) const {
    const Field& f = f_ ? *f_ : *o.f_;
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return PolyFq(f, std::move(r));
}

PolyFq PolyFq::operator*(const PolyFq& o) const {
    const Field& f = f_ ? *f_ : *o.f_;
    if (c_.empty() || o.c_.empty()) return PolyFq(f);
    std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(c_[i], o.c_[j]));
    }
    return PolyFq(f, std::move(r));
}

PolyFq PolyFq::scaled(Elem s) const {
    std::vector<Elem> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = f_->mul(c_[i], s);
    return PolyFq(*f_, std::move(r));
}

PolyFq PolyFq::derivative() const {
    if (c_.size() <= 1) return PolyFq(*f_);
    std::vector<Elem> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = f_->mul(f_->from_int(static_cast<long long>(i)), c_[i]);
    return PolyFq(*f_, std::move(r));
}

std::pair<PolyFq, PolyFq> PolyFq::divmod(const PolyFq& d) const {
    if (d.is_zero()) throw Error(Errc::DivideByZero, "polynomial division by zero");
    const Field& f = *d.f_;
    std::vector<Elem> r = c_;
    const int dd = d.degree();
    if (degree() < dd) return {PolyFq(f), *this};
    std::vector<Elem> qv(degree() - dd + 1, 0);
    const Elem li = f.inv(d.lead());
    for (int i = degree(); i >= dd; --i) {
        const Elem c = f.mul(r[i], li);
        if (!c) continue;
        qv[i - dd] = c;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] = f.sub(r[i - dd + j], f.mul(c, d.c_[j]));
    }
    return {PolyFq(f, std::move(qv)), PolyFq(f, std::move(r))};
}

PolyFq PolyFq::monic() const {
    if (c_.empty()) return *this;
    return scaled(f_->inv(lead()));
}

std::string PolyFq::str(const std::string& var, ElemStyle s) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Elem c = c_[i];
        if (!c) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = f_->format(c, s);
        const bool compound = cs.find('+') != std::string::npos;
        if (i == 0) {
            os << cs;
            continue;
        }
        if (c != 1) os << (compound ? "(" + cs + ")" : cs) << '*';
        os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

PolyFq poly_gcd(PolyFq a, PolyFq b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace tecc
