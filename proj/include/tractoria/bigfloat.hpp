#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

namespace tractoria {

// Minimal RAII wrapper over mpfr_t. Precision travels with the value; binary
// operations allocate the result at the wider of the two operand precisions.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 256) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    BigFloat(const char* s, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_str(v_, s, 10, MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, o.prec());
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.prec());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    std::string str(std::size_t digits = 0) const {
        if (digits == 0) digits = static_cast<std::size_t>(prec() * 0.3010299957) + 3;
        char* raw = nullptr;
        mpfr_asprintf(&raw, "%.*Rg", static_cast<int>(digits), v_);
        std::string out(raw);
        mpfr_free_str(raw);
        return out;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

#define TRACTORIA_BF_BINOP(op, fn)                                              \
    friend BigFloat operator op(const BigFloat& a, const BigFloat& b) {         \
        BigFloat r(std::max(a.prec(), b.prec()));                               \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                        \
        return r;                                                               \
    }                                                                           \
    friend BigFloat operator op(const BigFloat& a, double b) {                  \
        BigFloat r(a.prec());                                                   \
        fn##_d(r.v_, a.v_, b, MPFR_RNDN);                                       \
        return r;                                                               \
    }

    TRACTORIA_BF_BINOP(+, mpfr_add)
    TRACTORIA_BF_BINOP(-, mpfr_sub)
    TRACTORIA_BF_BINOP(*, mpfr_mul)
    TRACTORIA_BF_BINOP(/, mpfr_div)
#undef TRACTORIA_BF_BINOP

    friend BigFloat operator-(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator+(double a, const BigFloat& b) { return b + a; }
    friend BigFloat operator*(double a, const BigFloat& b) { return b * a; }
    friend BigFloat operator-(double a, const BigFloat& b) {
        BigFloat r(b.prec());
        mpfr_d_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(double a, const BigFloat& b) {
        BigFloat r(b.prec());
        mpfr_d_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator<(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
    friend bool operator>(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
    friend bool operator<=(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
    friend bool operator>=(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

#define TRACTORIA_BF_FN1(name, fn)                     \
    friend BigFloat name(const BigFloat& a) {          \
        BigFloat r(a.prec());                          \
        fn(r.v_, a.v_, MPFR_RNDN);                     \
        return r;                                      \
    }

    TRACTORIA_BF_FN1(abs, mpfr_abs)
    TRACTORIA_BF_FN1(sqrt, mpfr_sqrt)
    TRACTORIA_BF_FN1(exp, mpfr_exp)
    TRACTORIA_BF_FN1(log, mpfr_log)
    TRACTORIA_BF_FN1(log1p, mpfr_log1p)
    TRACTORIA_BF_FN1(sin, mpfr_sin)
    TRACTORIA_BF_FN1(cos, mpfr_cos)
    TRACTORIA_BF_FN1(sinh, mpfr_sinh)
    TRACTORIA_BF_FN1(cosh, mpfr_cosh)
#undef TRACTORIA_BF_FN1

    friend BigFloat atan2(const BigFloat& y, const BigFloat& x) {
        BigFloat r(std::max(y.prec(), x.prec()));
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat hypot(const BigFloat& x, const BigFloat& y) {
        BigFloat r(std::max(y.prec(), x.prec()));
        mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat pow_ui(const BigFloat& a, unsigned long e) {
        BigFloat r(a.prec());
        mpfr_pow_ui(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    friend BigFloat ldexp2(const BigFloat& a, long e) { // a * 2^e
        BigFloat r(a.prec());
        mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }

private:
    mpfr_t v_;
};

struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(mpfr_prec_t prec = 256) : re(prec), im(prec) {}
    BigComplex(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator*(const BigComplex& a, const BigFloat& s) {
        return {a.re * s, a.im * s};
    }
    friend BigComplex operator*(const BigComplex& a, double s) { return {a.re * s, a.im * s}; }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend BigComplex operator/(const BigComplex& a, double s) { return {a.re / s, a.im / s}; }

    friend BigFloat abs(const BigComplex& a) { return hypot(a.re, a.im); }
    friend BigFloat norm(const BigComplex& a) { return a.re * a.re + a.im * a.im; }
    friend BigFloat arg(const BigComplex& a) { return atan2(a.im, a.re); }

    friend BigComplex exp(const BigComplex& a) {
        BigFloat m = exp(a.re);
        return {m * cos(a.im), m * sin(a.im)};
    }
    friend BigComplex log(const BigComplex& a) { return {log(abs(a)), arg(a)}; }
    friend BigComplex cos(const BigComplex& a) {
        return {cos(a.re) * cosh(a.im), -(sin(a.re) * sinh(a.im))};
    }
    friend BigComplex sin(const BigComplex& a) {
        return {sin(a.re) * cosh(a.im), cos(a.re) * sinh(a.im)};
    }
};

} // namespace tractoria
