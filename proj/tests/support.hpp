#pragma once

#include <complex>
#include <random>
#include <vector>

#include "ehrlich/metrics.hpp"
#include "ehrlich/polynomial.hpp"

// Shared generators for the property tests. Doubles are dyadic, so
// from_double is exact and small dyadic combinations stay exact at 256 bits;
// the componentwise separation hypotheses then hold exactly, not just up
// to rounding.
namespace ehrlich::testsupport {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline BigComplex to_big(std::complex<double> z, const PrecisionContext& ctx) {
    return {BigFloat::from_double(z.real(), ctx), BigFloat::from_double(z.imag(), ctx)};
}

inline std::complex<double> random_point(Rng& rng, double radius) {
    return {uniform(rng, -radius, radius), uniform(rng, -radius, radius)};
}

/// n points in a disk with pairwise distances at least min_sep.
inline std::vector<std::complex<double>> separated_points(Rng& rng, size_t n, double radius,
                                                          double min_sep) {
    std::vector<std::complex<double>> pts;
    while (pts.size() < n) {
        auto c = random_point(rng, radius);
        bool ok = true;
        for (const auto& p : pts)
            if (std::abs(c - p) < min_sep)
                ok = false;
        if (ok)
            pts.push_back(c);
    }
    return pts;
}

inline CVec to_big_vec(const std::vector<std::complex<double>>& pts,
                       const PrecisionContext& ctx) {
    CVec v;
    v.reserve(pts.size());
    for (auto z : pts)
        v.push_back(to_big(z, ctx));
    return v;
}

/// Random vector with pairwise separations >= min_sep.
inline CVec random_distinct(Rng& rng, size_t n, double radius, double min_sep,
                            const PrecisionContext& ctx) {
    return to_big_vec(separated_points(rng, n, radius, min_sep), ctx);
}

/// x + delta with |delta_i| <= scale * sqrt(2), componentwise exact.
inline CVec perturbed(Rng& rng, const CVec& x, double scale, const PrecisionContext& ctx) {
    CVec out;
    out.reserve(x.size());
    for (const auto& z : x)
        out.push_back(add(z, to_big(random_point(rng, scale), ctx), ctx));
    return out;
}

inline PNorm pnorm_cycle(size_t idx) {
    switch (idx % 3) {
    case 0:
        return PNorm::one();
    case 1:
        return PNorm::two();
    default:
        return PNorm::inf();
    }
}

/// a >= b up to a tiny additive guard against last-ulp rounding.
inline bool ge_slack(const BigFloat& a, const BigFloat& b, const PrecisionContext& ctx) {
    BigFloat guard = mul(BigFloat::pow2(-180, ctx), add(BigFloat::from_int(1, ctx), abs(b), ctx),
                         ctx);
    return a >= sub(b, guard, ctx);
}

inline bool le_slack(const BigFloat& a, const BigFloat& b, const PrecisionContext& ctx) {
    return ge_slack(b, a, ctx);
}

/// |a - b| <= 2^-150 * (|b| + 2^-150)
inline bool close_rel(const BigFloat& a, const BigFloat& b, const PrecisionContext& ctx) {
    BigFloat tol = mul(BigFloat::pow2(-150, ctx),
                       add(abs(b), BigFloat::pow2(-150, ctx), ctx), ctx);
    return abs(sub(a, b, ctx)) <= tol;
}

} // namespace ehrlich::testsupport
