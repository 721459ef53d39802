#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ehrlich/bigcomplex.hpp"

namespace ehrlich {

/// A vector of simple roots (xi_1, ..., xi_n); f(z) = a0 * prod (z - xi_i).
using RootVector = CVec;

/// Complex polynomial with coefficients stored leading-first:
/// f(z) = c[0] z^n + c[1] z^(n-1) + ... + c[n].
///
/// A nonzero leading coefficient is enforced for degree >= 1. Solve targets
/// additionally require degree >= 2, which the operators check; derived
/// objects (derivatives) may have any degree >= 0.
class Polynomial {
public:
    explicit Polynomial(CVec coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw DomainError("Polynomial: no coefficients");
        if (coeffs_[0].is_zero() && coeffs_.size() > 1)
            throw DomainError("Polynomial: leading coefficient is zero");
    }

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const CVec& coeffs() const { return coeffs_; }
    const BigComplex& leading() const { return coeffs_[0]; }

    /// Copy with every coefficient rounded to ctx precision.
    Polynomial rounded(const PrecisionContext& ctx) const {
        CVec c;
        c.reserve(coeffs_.size());
        for (const auto& a : coeffs_)
            c.push_back(round_to(a, ctx));
        return Polynomial(std::move(c));
    }

private:
    CVec coeffs_;
};

/// Horner evaluation; every multiply and add is rounded at ctx.
inline BigComplex eval(const Polynomial& f, const BigComplex& z, const PrecisionContext& ctx) {
    const CVec& c = f.coeffs();
    BigComplex acc = round_to(c[0], ctx);
    for (size_t k = 1; k < c.size(); ++k)
        acc = add(mul(acc, z, ctx), c[k], ctx);
    return acc;
}

/// Coefficient-wise derivative. The small-integer scaling is exact (results
/// carry a few guard bits over the input coefficients).
inline Polynomial derivative(const Polynomial& f) {
    long n = f.degree();
    if (n == 0) {
        CVec c;
        c.push_back(BigComplex::from_int(0, 0, PrecisionContext(64)));
        return Polynomial(std::move(c));
    }
    CVec c;
    c.reserve(static_cast<size_t>(n));
    for (long k = 0; k < n; ++k) {
        const BigComplex& a = f.coeffs()[static_cast<size_t>(k)];
        mpfr_prec_t prec = a.bits() + 16;
        BigFloat re = BigFloat::at_bits(prec), im = BigFloat::at_bits(prec);
        mpfr_mul_si(re.raw(), a.re().raw(), n - k, MPFR_RNDN);
        mpfr_mul_si(im.raw(), a.im().raw(), n - k, MPFR_RNDN);
        c.emplace_back(std::move(re), std::move(im));
    }
    return Polynomial(std::move(c));
}

/// Expands leading * prod (z - r_i) at ctx precision.
inline Polynomial from_roots(const CVec& roots, const BigComplex& leading,
                             const PrecisionContext& ctx) {
    if (leading.is_zero())
        throw DomainError("from_roots: leading coefficient is zero");
    CVec c;
    c.push_back(round_to(leading, ctx));
    for (const auto& r : roots) {
        c.push_back(BigComplex(ctx));
        for (size_t k = c.size() - 1; k >= 1; --k)
            c[k] = sub(c[k], mul(r, c[k - 1], ctx), ctx);
    }
    return Polynomial(std::move(c));
}

/// Minimum distance between two roots (diagnostic; not used by the solver).
inline BigFloat sep(const RootVector& roots, const PrecisionContext& ctx) {
    if (roots.size() < 2)
        throw DomainError("sep: need at least two roots");
    BigFloat best = abs(sub(roots[0], roots[1], ctx), ctx);
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j) {
            if (i == 0 && j == 1)
                continue;
            BigFloat d = abs(sub(roots[i], roots[j], ctx), ctx);
            if (d < best)
                best = d;
        }
    return best;
}

} // namespace ehrlich
