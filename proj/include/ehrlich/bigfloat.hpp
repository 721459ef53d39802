#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>

#include "ehrlich/errors.hpp"
#include "ehrlich/precision.hpp"

namespace ehrlich {

/// Arbitrary-precision real number (immutable value semantics over mpfr_t).
///
/// A value is always a finite number: operations that would produce NaN or
/// an infinity throw instead of returning. Rounding is to nearest-even.
///
/// Operators (+, -, *, /) round to the larger of the operand precisions,
/// so expressions over values materialized at one context stay at that
/// context. The free functions add/sub/mul/div take the context explicitly.
class BigFloat {
public:
    BigFloat() = delete;

    explicit BigFloat(const PrecisionContext& ctx) {
        mpfr_init2(v_, ctx.bits());
        mpfr_set_zero(v_, 1);
    }

    /// Zero at a raw mantissa size; used by operators to size results.
    static BigFloat at_bits(mpfr_prec_t bits) {
        BigFloat r(raw_tag{}, bits);
        mpfr_set_zero(r.v_, 1);
        return r;
    }

    static BigFloat from_int(long v, const PrecisionContext& ctx) {
        BigFloat r(ctx);
        mpfr_set_si(r.v_, v, MPFR_RNDN);
        return r;
    }

    static BigFloat from_double(double v, const PrecisionContext& ctx) {
        BigFloat r(ctx);
        mpfr_set_d(r.v_, v, MPFR_RNDN);
        r.check_finite("from_double");
        return r;
    }

    /// 2^e, exact.
    static BigFloat pow2(long e, const PrecisionContext& ctx) {
        BigFloat r(ctx);
        mpfr_set_ui_2exp(r.v_, 1, static_cast<mpfr_exp_t>(e), MPFR_RNDN);
        return r;
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }

    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o)
            mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    void check_finite(const char* where) const {
        if (!mpfr_number_p(v_))
            throw OverflowError(std::string(where) + ": non-finite result");
    }

private:
    struct raw_tag {};
    BigFloat(raw_tag, mpfr_prec_t bits) { mpfr_init2(v_, bits); }

    mpfr_t v_;
};

inline mpfr_prec_t common_bits(const BigFloat& a, const BigFloat& b) {
    return std::max(a.bits(), b.bits());
}

// ---- context-explicit field operations ----

inline BigFloat round_to(const BigFloat& x, const PrecisionContext& ctx) {
    BigFloat r(ctx);
    mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat add(const BigFloat& a, const BigFloat& b, const PrecisionContext& ctx) {
    BigFloat r(ctx);
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    r.check_finite("add");
    return r;
}

inline BigFloat sub(const BigFloat& a, const BigFloat& b, const PrecisionContext& ctx) {
    BigFloat r(ctx);
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    r.check_finite("sub");
    return r;
}

inline BigFloat mul(const BigFloat& a, const BigFloat& b, const PrecisionContext& ctx) {
    BigFloat r(ctx);
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    r.check_finite("mul");
    return r;
}

inline BigFloat div(const BigFloat& a, const BigFloat& b, const PrecisionContext& ctx) {
    if (b.is_zero())
        throw DivisionByZero("div: real division by zero");
    BigFloat r(ctx);
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    r.check_finite("div");
    return r;
}

inline BigFloat neg(const BigFloat& a) {
    BigFloat r = BigFloat::at_bits(a.bits());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat abs(const BigFloat& a) {
    BigFloat r = BigFloat::at_bits(a.bits());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat sqrt(const BigFloat& a, const PrecisionContext& ctx) {
    if (a.sign() < 0)
        throw DomainError("sqrt: negative argument");
    BigFloat r(ctx);
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat pi(const PrecisionContext& ctx) {
    BigFloat r(ctx);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat sin(const BigFloat& a, const PrecisionContext& ctx) {
    BigFloat r(ctx);
    mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat cos(const BigFloat& a, const PrecisionContext& ctx) {
    BigFloat r(ctx);
    mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat log(const BigFloat& a, const PrecisionContext& ctx) {
    if (!(mpfr_sgn(a.raw()) > 0))
        throw DomainError("log: argument must be positive");
    BigFloat r(ctx);
    mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

/// x^(num/den) for integer num and den >= 1, as rootn(x^num, den).
/// Keeps rational exponents exact (no intermediate decimal exponent value).
inline BigFloat pow_rational(const BigFloat& x, long num, long den,
                             const PrecisionContext& ctx) {
    if (den < 1)
        throw DomainError("pow_rational: denominator must be positive");
    if (x.sign() < 0)
        throw DomainError("pow_rational: negative base");
    if (num == 0)
        return BigFloat::from_int(1, ctx);
    PrecisionContext wide = ctx.widened(64);
    BigFloat t(wide);
    mpfr_pow_si(t.raw(), x.raw(), num, MPFR_RNDN);
    t.check_finite("pow_rational");
    if (den == 1)
        return round_to(t, ctx);
    BigFloat r(ctx);
    mpfr_rootn_ui(r.raw(), t.raw(), static_cast<unsigned long>(den), MPFR_RNDN);
    return r;
}

// ---- operators: result at the larger operand precision ----

inline BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r = BigFloat::at_bits(common_bits(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    r.check_finite("add");
    return r;
}

inline BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r = BigFloat::at_bits(common_bits(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    r.check_finite("sub");
    return r;
}

inline BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r = BigFloat::at_bits(common_bits(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    r.check_finite("mul");
    return r;
}

inline BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero())
        throw DivisionByZero("div: real division by zero");
    BigFloat r = BigFloat::at_bits(common_bits(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    r.check_finite("div");
    return r;
}

inline BigFloat operator-(const BigFloat& a) { return neg(a); }

inline BigFloat operator*(long a, const BigFloat& b) {
    BigFloat r = BigFloat::at_bits(b.bits());
    mpfr_mul_si(r.raw(), b.raw(), a, MPFR_RNDN);
    r.check_finite("mul");
    return r;
}

inline BigFloat operator*(const BigFloat& a, long b) { return b * a; }

inline BigFloat operator+(long a, const BigFloat& b) {
    BigFloat r = BigFloat::at_bits(b.bits());
    mpfr_add_si(r.raw(), b.raw(), a, MPFR_RNDN);
    r.check_finite("add");
    return r;
}

inline BigFloat operator+(const BigFloat& a, long b) { return b + a; }

inline BigFloat operator-(long a, const BigFloat& b) {
    BigFloat r = BigFloat::at_bits(b.bits());
    mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
    r.check_finite("sub");
    return r;
}

inline BigFloat operator-(const BigFloat& a, long b) {
    BigFloat r = BigFloat::at_bits(a.bits());
    mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
    r.check_finite("sub");
    return r;
}

inline BigFloat operator/(const BigFloat& a, long b) {
    if (b == 0)
        throw DivisionByZero("div: real division by zero");
    BigFloat r = BigFloat::at_bits(a.bits());
    mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
    r.check_finite("div");
    return r;
}

inline BigFloat operator/(long a, const BigFloat& b) {
    if (b.is_zero())
        throw DivisionByZero("div: real division by zero");
    BigFloat r = BigFloat::at_bits(b.bits());
    mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
    r.check_finite("div");
    return r;
}

// ---- exact comparisons (values are never NaN) ----

inline bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
inline bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
inline bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
inline bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
inline bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }

inline bool operator==(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0; }
inline bool operator!=(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b) != 0; }
inline bool operator<(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
inline bool operator>(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }
inline bool operator<=(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b) <= 0; }
inline bool operator>=(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b) >= 0; }

inline const BigFloat& min(const BigFloat& a, const BigFloat& b) { return a <= b ? a : b; }
inline const BigFloat& max(const BigFloat& a, const BigFloat& b) { return a >= b ? a : b; }

// ---- decimal conversions ----

/// Parses a decimal string ("0.5", "-1.36", "4.385760e-21") at ctx precision.
/// The full digit string is converted as one exact scaled integer and rounded
/// once to nearest. Throws ParseError unless the whole input is consumed.
inline BigFloat parse_decimal(std::string_view s, const PrecisionContext& ctx) {
    std::string buf(s);
    BigFloat r(ctx);
    char* end = nullptr;
    mpfr_strtofr(r.raw(), buf.c_str(), &end, 10, MPFR_RNDN);
    if (end == buf.c_str() || *end != '\0')
        throw ParseError("parse_decimal: malformed number '" + buf + "'");
    r.check_finite("parse_decimal");
    return r;
}

namespace detail {

/// Digits of |x| rounded to nearest: returns (digit string, exp10) with
/// x = +/- 0.DIGITS * 10^exp10. ndigits == 0 means "enough to round-trip".
inline std::pair<std::string, long> decimal_digits(const BigFloat& x, size_t ndigits) {
    if (ndigits == 1)
        throw DomainError("decimal_digits: at least two digits required");
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, ndigits, x.raw(), MPFR_RNDN);
    if (s == nullptr)
        throw OverflowError("decimal_digits: conversion failed");
    std::string digits(s);
    mpfr_free_str(s);
    if (!digits.empty() && digits[0] == '-')
        digits.erase(0, 1);
    return {digits, static_cast<long>(e)};
}

} // namespace detail

/// Scientific form "m.ddd...e+XX" with `frac_digits` digits after the point,
/// rounded to nearest. The exponent keeps a sign and at least two digits.
inline std::string format_scientific(const BigFloat& x, int frac_digits) {
    std::string sign = x.sign() < 0 ? "-" : "";
    if (x.is_zero()) {
        std::string m = "0";
        if (frac_digits > 0)
            m += "." + std::string(static_cast<size_t>(frac_digits), '0');
        return m + "e+00";
    }
    auto [digits, e10] = detail::decimal_digits(x, static_cast<size_t>(frac_digits) + 1);
    std::string m;
    m += digits[0];
    if (frac_digits > 0)
        m += "." + digits.substr(1);
    char expbuf[32];
    std::snprintf(expbuf, sizeof expbuf, "e%+03ld", e10 - 1);
    return sign + m + expbuf;
}

/// Fixed-point form with `decimals` digits after the point, truncated toward
/// zero (not rounded).
inline std::string format_fixed_trunc(const BigFloat& x, int decimals) {
    BigFloat scale = BigFloat::from_int(10, PrecisionContext(64 + 4 * decimals));
    mpfr_pow_si(scale.raw(), scale.raw(), decimals, MPFR_RNDN); // 10^decimals, exact
    BigFloat scaled = BigFloat::at_bits(x.bits() + 4 * decimals + 64);
    mpfr_mul(scaled.raw(), x.raw(), scale.raw(), MPFR_RNDN);
    mpz_t z;
    mpz_init(z);
    mpfr_get_z(z, scaled.raw(), MPFR_RNDZ);
    std::string digits(mpz_sizeinbase(z, 10) + 2, '\0');
    mpz_get_str(digits.data(), 10, z);
    digits.resize(digits.find('\0'));
    mpz_clear(z);
    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    if (digits.size() <= static_cast<size_t>(decimals))
        digits.insert(0, static_cast<size_t>(decimals) + 1 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - decimals);
    if (decimals > 0)
        out += "." + digits.substr(digits.size() - decimals);
    bool all_zero = digits.find_first_not_of('0') == std::string::npos;
    return (all_zero ? "" : sign) + out;
}

/// Fixed-point form with `decimals` digits after the point, rounded to
/// nearest. A result that rounds to zero loses any minus sign.
inline std::string format_fixed(const BigFloat& x, int decimals) {
    BigFloat scale = BigFloat::from_int(10, PrecisionContext(64 + 4 * decimals));
    mpfr_pow_si(scale.raw(), scale.raw(), decimals, MPFR_RNDN); // 10^decimals, exact
    BigFloat scaled = BigFloat::at_bits(x.bits() + 4 * decimals + 64);
    mpfr_mul(scaled.raw(), x.raw(), scale.raw(), MPFR_RNDN);
    mpz_t z;
    mpz_init(z);
    mpfr_get_z(z, scaled.raw(), MPFR_RNDN);
    std::string digits(mpz_sizeinbase(z, 10) + 2, '\0');
    mpz_get_str(digits.data(), 10, z);
    digits.resize(digits.find('\0'));
    mpz_clear(z);
    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    if (digits.size() <= static_cast<size_t>(decimals))
        digits.insert(0, static_cast<size_t>(decimals) + 1 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - decimals);
    if (decimals > 0)
        out += "." + digits.substr(digits.size() - decimals);
    bool all_zero = digits.find_first_not_of('0') == std::string::npos;
    return (all_zero ? "" : sign) + out;
}

/// Minimal decimal string that re-parses to the identical value at the same
/// precision. Always scientific ("d.ddd...e+X"), "0" for zero.
inline std::string to_decimal(const BigFloat& x) {
    if (x.is_zero())
        return "0";
    std::string sign = x.sign() < 0 ? "-" : "";
    auto [digits, e10] = detail::decimal_digits(x, 0);
    size_t last = digits.find_last_not_of('0');
    digits.erase(last + 1);
    std::string m;
    m += digits[0];
    if (digits.size() > 1)
        m += "." + digits.substr(1);
    return sign + m + "e" + std::to_string(e10 - 1);
}

/// Splits x into (mantissa rounded to 1 + frac_digits decimal digits, exp10)
/// with |x| = mantissa * 10^exp10 and mantissa in [1, 10). Zero -> ("0", 0).
inline std::pair<std::string, long> sci_parts(const BigFloat& x, int frac_digits) {
    if (x.is_zero())
        return {"0", 0};
    auto [digits, e10] = detail::decimal_digits(x, static_cast<size_t>(frac_digits) + 1);
    std::string m = (x.sign() < 0 ? "-" : "");
    m += digits[0];
    if (frac_digits > 0)
        m += "." + digits.substr(1);
    return {m, e10 - 1};
}

} // namespace ehrlich
