#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "tractoria/bigfloat.hpp"
#include "tractoria/errors.hpp"
#include "tractoria/geometry.hpp"

namespace tractoria {

// Catalog of entire functions. EXP and EXPZ2COS are the two worked example
// functions; G is the lacunary series g(z) = sum (z/2^k)^(2^k) and
// RECIP_EXP_G is exp(-g). POLY (coefficients in params, low degree first)
// exists for covering soundness tests against brute-force image grids.
enum class CatalogId { Exp, ExpZ2Cos, RecipExpG, GSeries, Poly };

struct FunctionSpec {
    CatalogId id = CatalogId::Exp;
    std::vector<cplx> params;     // POLY coefficients c0..cd
    double boundary_level = 1.0;  // the level R with |f| = R on tract boundaries

    static FunctionSpec make(const std::string& name, double level = 1.0) {
        FunctionSpec fn;
        fn.boundary_level = level;
        if (name == "EXP") fn.id = CatalogId::Exp;
        else if (name == "EXPZ2COS") fn.id = CatalogId::ExpZ2Cos;
        else if (name == "RECIP_EXP_G") fn.id = CatalogId::RecipExpG;
        else if (name == "G") fn.id = CatalogId::GSeries;
        else if (name == "POLY") fn.id = CatalogId::Poly;
        else throw InvalidParam("unknown catalog id: " + name);
        if (!(level > 0)) throw InvalidParam("boundary level must be positive");
        return fn;
    }

    std::string name() const {
        switch (id) {
            case CatalogId::Exp: return "EXP";
            case CatalogId::ExpZ2Cos: return "EXPZ2COS";
            case CatalogId::RecipExpG: return "RECIP_EXP_G";
            case CatalogId::GSeries: return "G";
            case CatalogId::Poly: return "POLY";
        }
        return "?";
    }
};

// log f(z) with a guaranteed absolute error bound on both fields. arg is one
// fixed branch; path continuity is restored by the unwinding helpers below.
struct LogValue {
    double logmod = 0;
    double arg = 0;
    double err = 0;
};

namespace fnd { // function-evaluation details

constexpr double kLogDblMax = 709.78;
constexpr double kLogDblMin = -745.0;

inline int g_truncation_index(double absz) {
    int k = 4;
    while (std::ldexp(1.0, k) < 2.0 * absz && k < 62) ++k;
    return k;
}

// tail bound 2 * 2^(-2^(K+1)) after keeping terms 1..K
inline double g_tail_bound(int K) {
    if (K >= 10) return 0.0; // below 2^-1024, flushes to zero
    return std::ldexp(2.0, -(1 << (K + 1)));
}

inline cplx to_cplx(const cplx& z) { return z; }
inline cplx to_cplx(const BigComplex& z) { return z.to_complex(); }

// sum of (z/2^k)^(2^k), k = 1..K, via repeated squaring
template <class C>
C g_series_partial(const C& z, int K) {
    C acc = z * 0.0;
    for (int k = 1; k <= K; ++k) {
        C u = z * std::ldexp(1.0, -k);
        for (int s = 0; s < k; ++s) u = u * u;
        acc = acc + u;
    }
    return acc;
}

// sum of (z/2^k)^(2^k - 1), k = 1..K  (the derivative of the series)
template <class C>
C g_series_partial_deriv(const C& z, int K) {
    C acc = z * 0.0;
    for (int k = 1; k <= K; ++k) {
        C u = z * std::ldexp(1.0, -k);
        C p = u;
        for (int s = 0; s < k; ++s) p = p * p;
        // u^(2^k - 1) = u^(2^k) / u; u == 0 contributes nothing
        if (std::abs(to_cplx(u)) == 0.0) continue;
        acc = acc + p / u;
    }
    return acc;
}

inline BigComplex poly_eval_big(const std::vector<cplx>& c, const BigComplex& z,
                                mpfr_prec_t prec) {
    BigComplex acc(prec);
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * z + BigComplex(c[i].real(), c[i].imag(), prec);
    return acc;
}

inline cplx poly_eval_d(const std::vector<cplx>& c, cplx z) {
    cplx acc{0, 0};
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

inline cplx poly_deriv_d(const std::vector<cplx>& c, cplx z) {
    cplx acc{0, 0};
    for (std::size_t i = c.size(); i-- > 1;) acc = acc * z + double(i) * c[i];
    return acc;
}

} // namespace fnd

// ---------------------------------------------------------------------------
// eval_log: overflow-safe log-scale evaluation (double path)
// ---------------------------------------------------------------------------

inline LogValue eval_log(const FunctionSpec& fn, cplx z) {
    switch (fn.id) {
        case CatalogId::Exp:
            return {z.real(), z.imag(), 4e-16 * (1.0 + std::abs(z))};

        case CatalogId::ExpZ2Cos: {
            // log f = z^2 + log cos z, with log cos z = u - log 2 + Log(1+e^(-2u)),
            // u = +-iz chosen with Re u >= 0 so the correction stays bounded.
            const cplx z2 = z * z;
            cplx u{-z.imag(), z.real()};
            if (u.real() < 0) u = -u;
            const cplx w = std::exp(-2.0 * u);
            const cplx q = 1.0 + w;
            const double qa = std::abs(q);
            if (qa < 1e-13)
                throw NearZero("f(z) indistinguishable from 0 near a zero of cos");
            const double err = 4e-16 * (1.0 + std::norm(z)) + 4e-16 / qa;
            return {z2.real() + u.real() - std::log(2.0) + std::log(qa),
                    z2.imag() + u.imag() + std::arg(q), err};
        }

        case CatalogId::GSeries: {
            const int K = fnd::g_truncation_index(std::abs(z));
            const cplx g = fnd::g_series_partial(z, K);
            const double ga = std::abs(g);
            if (!(ga > 0) || !std::isfinite(ga))
                throw NearZero("g(z) is zero or non-finite at this point");
            const double tail = fnd::g_tail_bound(K);
            return {std::log(ga), std::arg(g), 2e-15 * K + tail / ga + tail};
        }

        case CatalogId::RecipExpG: {
            const int K = fnd::g_truncation_index(std::abs(z));
            const cplx g = fnd::g_series_partial(z, K);
            if (!std::isfinite(g.real()) || !std::isfinite(g.imag()))
                throw RangeOverflow("g(z) overflows double range; point too far out");
            const double tail = fnd::g_tail_bound(K);
            return {-g.real(), -g.imag(), 2e-15 * K * (1.0 + std::abs(g)) + tail};
        }

        case CatalogId::Poly: {
            const cplx p = fnd::poly_eval_d(fn.params, z);
            const double pa = std::abs(p);
            if (!(pa > 0)) throw NearZero("p(z) indistinguishable from 0");
            return {std::log(pa), std::arg(p), 1e-14 * double(fn.params.size() + 1)};
        }
    }
    throw InvalidParam("bad catalog id");
}

// ---------------------------------------------------------------------------
// eval / derivative (double path; throws RangeOverflow outside double range)
// ---------------------------------------------------------------------------

inline cplx eval(const FunctionSpec& fn, cplx z) {
    if (fn.id == CatalogId::Poly) return fnd::poly_eval_d(fn.params, z);
    if (fn.id == CatalogId::GSeries)
        return fnd::g_series_partial(z, fnd::g_truncation_index(std::abs(z)));
    LogValue lv;
    try {
        lv = eval_log(fn, z);
    } catch (const NearZero&) {
        return {0.0, 0.0}; // value indistinguishable from an exact zero
    }
    if (lv.logmod > fnd::kLogDblMax)
        throw RangeOverflow("|f(z)| exceeds double range; use eval_log");
    if (lv.logmod < fnd::kLogDblMin) return {0.0, 0.0};
    return std::polar(std::exp(lv.logmod), lv.arg);
}

inline cplx derivative(const FunctionSpec& fn, cplx z) {
    switch (fn.id) {
        case CatalogId::Exp:
            return eval(fn, z);
        case CatalogId::ExpZ2Cos: {
            // f' = e^(z^2) (2z cos z - sin z), assembled in log scale
            const cplx w = 2.0 * z * std::cos(z) - std::sin(z);
            if (std::abs(w) == 0.0) return {0.0, 0.0};
            const cplx e = z * z + std::log(w);
            if (e.real() > fnd::kLogDblMax)
                throw RangeOverflow("|f'(z)| exceeds double range");
            if (e.real() < fnd::kLogDblMin) return {0.0, 0.0};
            return std::exp(e);
        }
        case CatalogId::GSeries:
            return fnd::g_series_partial_deriv(z, fnd::g_truncation_index(std::abs(z)));
        case CatalogId::RecipExpG: {
            const int K = fnd::g_truncation_index(std::abs(z));
            const cplx g = fnd::g_series_partial(z, K);
            const cplx gp = fnd::g_series_partial_deriv(z, K);
            if (std::abs(gp) == 0.0) return {0.0, 0.0};
            const cplx e = -g + std::log(-gp);
            if (e.real() > fnd::kLogDblMax)
                throw RangeOverflow("|f'(z)| exceeds double range");
            if (e.real() < fnd::kLogDblMin) return {0.0, 0.0};
            return std::exp(e);
        }
        case CatalogId::Poly:
            return fnd::poly_deriv_d(fn.params, z);
    }
    throw InvalidParam("bad catalog id");
}

// f'(z)/f(z), stable at any magnitude of f
inline cplx log_derivative(const FunctionSpec& fn, cplx z) {
    switch (fn.id) {
        case CatalogId::Exp:
            return {1.0, 0.0};
        case CatalogId::ExpZ2Cos: {
            // 2z - tan z; for large |Im z| use tan z = +-i (1-t)/(1+t)
            cplx t;
            if (z.imag() > 20) {
                const cplx q = std::exp(cplx{0, 2} * z);
                t = cplx{0, 1} * (1.0 - q) / (1.0 + q);
            } else if (z.imag() < -20) {
                const cplx q = std::exp(cplx{0, -2} * z);
                t = cplx{0, -1} * (1.0 - q) / (1.0 + q);
            } else {
                t = std::tan(z);
            }
            return 2.0 * z - t;
        }
        case CatalogId::GSeries: {
            const int K = fnd::g_truncation_index(std::abs(z));
            const cplx g = fnd::g_series_partial(z, K);
            if (std::abs(g) == 0.0) throw NearZero("g(z) = 0; log-derivative undefined");
            return fnd::g_series_partial_deriv(z, K) / g;
        }
        case CatalogId::RecipExpG:
            return -fnd::g_series_partial_deriv(z, fnd::g_truncation_index(std::abs(z)));
        case CatalogId::Poly: {
            const cplx p = fnd::poly_eval_d(fn.params, z);
            if (std::abs(p) == 0.0) throw NearZero("p(z) = 0; log-derivative undefined");
            return fnd::poly_deriv_d(fn.params, z) / p;
        }
    }
    throw InvalidParam("bad catalog id");
}

// ---------------------------------------------------------------------------
// big-float path. MPFR's exponent range makes direct evaluation safe at any
// scale this artifact reaches; precision is the significand width in bits.
// ---------------------------------------------------------------------------

inline BigComplex eval_big(const FunctionSpec& fn, const BigComplex& z, mpfr_prec_t prec) {
    if (prec < 53) throw InvalidParam("precision must be at least 53 bits");
    BigComplex zz{z.re, z.im};
    switch (fn.id) {
        case CatalogId::Exp:
            return exp(zz);
        case CatalogId::ExpZ2Cos:
            return exp(zz * zz) * cos(zz);
        case CatalogId::GSeries:
            return fnd::g_series_partial(zz, fnd::g_truncation_index(abs(zz).to_double()));
        case CatalogId::RecipExpG:
            return exp(-fnd::g_series_partial(zz, fnd::g_truncation_index(abs(zz).to_double())));
        case CatalogId::Poly:
            return fnd::poly_eval_big(fn.params, zz, prec);
    }
    throw InvalidParam("bad catalog id");
}

inline BigComplex derivative_big(const FunctionSpec& fn, const BigComplex& z, mpfr_prec_t prec) {
    if (prec < 53) throw InvalidParam("precision must be at least 53 bits");
    BigComplex zz{z.re, z.im};
    switch (fn.id) {
        case CatalogId::Exp:
            return exp(zz);
        case CatalogId::ExpZ2Cos:
            return exp(zz * zz) * (zz * 2.0 * cos(zz) - sin(zz));
        case CatalogId::GSeries:
            return fnd::g_series_partial_deriv(zz, fnd::g_truncation_index(abs(zz).to_double()));
        case CatalogId::RecipExpG: {
            const int K = fnd::g_truncation_index(abs(zz).to_double());
            return -(exp(-fnd::g_series_partial(zz, K)) * fnd::g_series_partial_deriv(zz, K));
        }
        case CatalogId::Poly: {
            BigComplex acc(prec);
            for (std::size_t i = fn.params.size(); i-- > 1;)
                acc = acc * zz + BigComplex(fn.params[i].real() * double(i),
                                            fn.params[i].imag() * double(i), prec);
            return acc;
        }
    }
    throw InvalidParam("bad catalog id");
}

// precision-dispatching front: 53 bits runs the double path
inline cplx eval(const FunctionSpec& fn, cplx z, int precision) {
    if (precision < 53) throw InvalidParam("precision must be at least 53 bits");
    if (precision == 53) return eval(fn, z);
    const BigComplex r = eval_big(fn, BigComplex(z.real(), z.imag(), precision), precision);
    const cplx d = r.to_complex();
    if (!std::isfinite(d.real()) || !std::isfinite(d.imag()))
        throw RangeOverflow("|f(z)| exceeds double range; use eval_log");
    return d;
}

// asymptotic log M_D(r) used by iterate_MD once r leaves the traced window
inline bool has_md_asymptote(CatalogId id) {
    return id == CatalogId::Exp || id == CatalogId::ExpZ2Cos;
}

inline double md_asymptote_log(CatalogId id, double r) {
    switch (id) {
        case CatalogId::Exp: return r;
        case CatalogId::ExpZ2Cos: return r * r;
        default: throw InvalidParam("no declared asymptote for this catalog entry");
    }
}

// ---------------------------------------------------------------------------
// continuous-argument evaluation along declared paths
// ---------------------------------------------------------------------------

// Unwrap b's arg so it continues a's branch; requires the true jump < pi.
inline LogValue continue_arg(const LogValue& a, LogValue b) {
    b.arg = a.arg + wrap_angle(b.arg - a.arg);
    return b;
}

// Log values along a polyline path, bisected until successive args differ by
// less than pi/2, then unwrapped into a single continuous branch.
inline std::vector<LogValue> eval_log_along_path(const FunctionSpec& fn,
                                                 const Polyline& path,
                                                 int max_depth = 40) {
    if (path.size() < 2) throw InvalidParam("path needs at least two points");
    std::vector<LogValue> out;
    out.push_back(eval_log(fn, path[0]));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        // stack of (right endpoint, depth); left endpoint is out.back()
        std::vector<std::pair<cplx, int>> stack{{path[i + 1], 0}};
        cplx left = path[i];
        while (!stack.empty()) {
            auto [right, depth] = stack.back();
            stack.pop_back();
            const LogValue rv = eval_log(fn, right);
            const double dj = std::abs(wrap_angle(rv.arg - out.back().arg));
            if (dj >= M_PI / 2 && depth < max_depth) {
                stack.emplace_back(right, depth + 1);
                stack.emplace_back(left + 0.5 * (right - left), depth + 1);
                continue;
            }
            out.push_back(continue_arg(out.back(), rv));
            left = right;
        }
    }
    return out;
}

} // namespace tractoria
