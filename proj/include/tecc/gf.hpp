#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tecc/error.hpp"

namespace tecc {

// Canonical integer encoding of an element: sum of c_i * p^i over the
// polynomial-basis coefficients. Enumeration order is the numeric order.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

enum class ElemStyle {
    Coeffs,  // "[c0,c1,...]" for extension fields, plain integer for prime fields
    Poly,    // "w^2+w+1"
};

class Field {
public:
    static constexpr int kMaxOrder = 1 << 20;

    // Builds GF(p^m). Without an explicit polynomial a fixed default is used
    // (table for q <= 256, otherwise the smallest irreducible in enumeration order).
    static FieldPtr make(int p, int m = 1, std::optional<std::vector<int>> poly = std::nullopt);

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    const std::vector<int>& poly() const { return poly_; }
    bool is_prime_field() const { return m_ == 1; }
    bool same_as(const Field& o) const { return this == &o || (p_ == o.p_ && m_ == o.m_ && poly_ == o.poly_); }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long long e) const;
    Elem from_int(long long v) const;
    Elem primitive() const { return exp_[1]; }

    bool is_square(Elem a) const;
    std::optional<Elem> sqrt(Elem a) const;

    std::vector<int> coeffs(Elem a) const;
    Elem from_coeffs(const std::vector<int>& c) const;
    std::vector<Elem> elements() const;

    std::string format(Elem a, ElemStyle style = ElemStyle::Coeffs) const;
    Elem parse(std::string_view text) const;

    std::string describe() const;

private:
    Field() = default;
    void build_tables();

    int p_ = 0, m_ = 0, q_ = 0;
    std::vector<int> poly_;  // monic, low degree first, length m+1
    std::vector<Elem> exp_;  // length 2(q-1)
    std::vector<std::uint32_t> log_;
    std::vector<Elem> neg_;
    std::vector<std::uint16_t> add_table_;  // q*q, only for small odd-characteristic fields
    std::vector<Elem> pow_p_;               // p^i
    Elem nonresidue_ = 0;
};

bool is_prime(long long n);
// Irreducibility over GF(p) by trial division with all monic polynomials of degree <= m/2.
bool is_irreducible_mod_p(const std::vector<int>& poly, int p);
// Default defining polynomial for GF(p^m), low degree first.
std::vector<int> default_poly(int p, int m);

// Element value bound to its field. The field must outlive the value.
class Fq {
public:
    Fq() = default;
    Fq(const Field& f, Elem v) : f_(&f), v_(v) {}

    const Field& field() const { return *f_; }
    Elem value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fq operator+(const Fq& o) const { check(o); return {*f_, f_->add(v_, o.v_)}; }
    Fq operator-(const Fq& o) const { check(o); return {*f_, f_->sub(v_, o.v_)}; }
    Fq operator*(const Fq& o) const { check(o); return {*f_, f_->mul(v_, o.v_)}; }
    Fq operator/(const Fq& o) const { check(o); return {*f_, f_->div(v_, o.v_)}; }
    Fq operator-() const { return {*f_, f_->neg(v_)}; }
    Fq& operator+=(const Fq& o) { return *this = *this + o; }
    Fq& operator-=(const Fq& o) { return *this = *this - o; }
    Fq& operator*=(const Fq& o) { return *this = *this * o; }
    bool operator==(const Fq& o) const { return v_ == o.v_ && (f_ == o.f_ || f_->same_as(*o.f_)); }
    bool operator!=(const Fq& o) const { return !(*this == o); }

    Fq inv() const { return {*f_, f_->inv(v_)}; }
    Fq pow(long long e) const { return {*f_, f_->pow(v_, e)}; }
    std::optional<Fq> sqrt() const;
    std::string str(ElemStyle s = ElemStyle::Coeffs) const { return f_->format(v_, s); }

private:
    void check(const Fq& o) const {
        if (f_ != o.f_ && !f_->same_as(*o.f_)) throw Error(Errc::FieldMismatch, "operands from different fields");
    }
    const Field* f_ = nullptr;
    Elem v_ = 0;
};

// Univariate polynomial over a field, low degree first, no trailing zeros.
class PolyFq {
public:
    PolyFq() = default;
    explicit PolyFq(const Field& f) : f_(&f) {}
    PolyFq(const Field& f, std::vector<Elem> c);
    static PolyFq monomial(const Field& f, int deg, Elem c = 1);

    const Field& field() const { return *f_; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Elem coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
    Elem lead() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<Elem>& coeffs() const { return c_; }

    Elem eval(Elem x) const;
    PolyFq operator+(const PolyFq& o) const;
    PolyFq operator-(const PolyFq& o) const;
    PolyFq operator*(const PolyFq& o) const;
    PolyFq scaled(Elem s) const;
    PolyFq derivative() const;
    // Returns {quotient, remainder}.
    std::pair<PolyFq, PolyFq> divmod(const PolyFq& d) const;
    PolyFq monic() const;
    bool operator==(const PolyFq& o) const { return c_ == o.c_; }

    std::string str(const std::string& var = "x", ElemStyle s = ElemStyle::Poly) const;

private:
    void trim();
    const Field* f_ = nullptr;
    std::vector<Elem> c_;
};

PolyFq poly_gcd(PolyFq a, PolyFq b);

}  // namespace tecc
