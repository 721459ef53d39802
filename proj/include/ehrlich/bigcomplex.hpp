#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ehrlich/bigfloat.hpp"

namespace ehrlich {

/// Arbitrary-precision complex number, stored as two BigFloat parts.
///
/// Multiplication uses mpfr's fused a*b +/- c*d, so each part of a product is
/// correctly rounded. Division carries 64 guard bits through the textbook
/// formula and rounds once at the end (within one ulp per part).
class BigComplex {
public:
    BigComplex() = delete;

    explicit BigComplex(const PrecisionContext& ctx) : re_(ctx), im_(ctx) {}

    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}

    static BigComplex from_int(long re, long im, const PrecisionContext& ctx) {
        return {BigFloat::from_int(re, ctx), BigFloat::from_int(im, ctx)};
    }

    static BigComplex parse(std::string_view re, std::string_view im,
                            const PrecisionContext& ctx) {
        return {parse_decimal(re, ctx), parse_decimal(im, ctx)};
    }

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }

    mpfr_prec_t bits() const { return common_bits(re_, im_); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

private:
    BigFloat re_, im_;
};

using CVec = std::vector<BigComplex>;
using RVec = std::vector<BigFloat>;

// ---- context-explicit field operations ----

inline BigComplex round_to(const BigComplex& z, const PrecisionContext& ctx) {
    return {round_to(z.re(), ctx), round_to(z.im(), ctx)};
}

inline BigComplex add(const BigComplex& a, const BigComplex& b, const PrecisionContext& ctx) {
    return {add(a.re(), b.re(), ctx), add(a.im(), b.im(), ctx)};
}

inline BigComplex sub(const BigComplex& a, const BigComplex& b, const PrecisionContext& ctx) {
    return {sub(a.re(), b.re(), ctx), sub(a.im(), b.im(), ctx)};
}

inline BigComplex neg(const BigComplex& a) { return {neg(a.re()), neg(a.im())}; }

inline BigComplex mul(const BigComplex& a, const BigComplex& b, const PrecisionContext& ctx) {
    BigFloat re(ctx), im(ctx);
    mpfr_fmms(re.raw(), a.re().raw(), b.re().raw(), a.im().raw(), b.im().raw(), MPFR_RNDN);
    mpfr_fmma(im.raw(), a.re().raw(), b.im().raw(), a.im().raw(), b.re().raw(), MPFR_RNDN);
    re.check_finite("cmul");
    im.check_finite("cmul");
    return {std::move(re), std::move(im)};
}

inline BigComplex div(const BigComplex& a, const BigComplex& b, const PrecisionContext& ctx) {
    if (b.is_zero())
        throw DivisionByZero("cdiv: complex division by zero");
    mpfr_prec_t guard = ctx.bits() + 64;
    BigFloat den = BigFloat::at_bits(guard);
    BigFloat nre = BigFloat::at_bits(guard);
    BigFloat nim = BigFloat::at_bits(guard);
    mpfr_fmma(den.raw(), b.re().raw(), b.re().raw(), b.im().raw(), b.im().raw(), MPFR_RNDN);
    mpfr_fmma(nre.raw(), a.re().raw(), b.re().raw(), a.im().raw(), b.im().raw(), MPFR_RNDN);
    mpfr_fmms(nim.raw(), a.im().raw(), b.re().raw(), a.re().raw(), b.im().raw(), MPFR_RNDN);
    return {div(nre, den, ctx), div(nim, den, ctx)};
}

inline BigFloat abs(const BigComplex& a, const PrecisionContext& ctx) {
    BigFloat r(ctx);
    mpfr_hypot(r.raw(), a.re().raw(), a.im().raw(), MPFR_RNDN);
    r.check_finite("cabs");
    return r;
}

inline BigFloat abs(const BigComplex& a) {
    BigFloat r = BigFloat::at_bits(a.bits());
    mpfr_hypot(r.raw(), a.re().raw(), a.im().raw(), MPFR_RNDN);
    r.check_finite("cabs");
    return r;
}

// ---- operators: result at the larger operand precision ----

inline BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re() + b.re(), a.im() + b.im()};
}

inline BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re() - b.re(), a.im() - b.im()};
}

inline BigComplex operator-(const BigComplex& a) { return neg(a); }

inline BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return mul(a, b, PrecisionContext(std::max(a.bits(), b.bits())));
}

inline BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    return div(a, b, PrecisionContext(std::max(a.bits(), b.bits())));
}

inline BigComplex operator*(const BigFloat& s, const BigComplex& a) {
    return {s * a.re(), s * a.im()};
}

inline BigComplex operator*(const BigComplex& a, const BigFloat& s) { return s * a; }

inline bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re() == b.re() && a.im() == b.im();
}

inline bool operator!=(const BigComplex& a, const BigComplex& b) { return !(a == b); }

/// Parses "1.5", "-0.25+1.28i", "2i", "0.46-1.37i" into a complex value.
inline BigComplex parse_complex(std::string_view s, const PrecisionContext& ctx) {
    std::string t(s);
    t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
    if (t.empty())
        throw ParseError("parse_complex: empty input");
    if (t.back() != 'i' && t.back() != 'I')
        return {parse_decimal(t, ctx), BigFloat::from_int(0, ctx)};
    t.pop_back(); // drop the 'i'
    // find the split between real and imaginary terms: the last +/- that is
    // not a leading sign and not part of an exponent
    size_t split = std::string::npos;
    for (size_t k = t.size(); k-- > 1;) {
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        std::string ims = t.empty() || t == "+" || t == "-" ? t + "1" : t;
        return {BigFloat::from_int(0, ctx), parse_decimal(ims, ctx)};
    }
    std::string res = t.substr(0, split);
    std::string ims = t.substr(split);
    if (ims == "+" || ims == "-")
        ims += "1";
    return {parse_decimal(res, ctx), parse_decimal(ims, ctx)};
}

} // namespace ehrlich
