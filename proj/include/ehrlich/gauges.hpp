#pragma once

#include <utility>

#include "ehrlich/pnorm.hpp"

namespace ehrlich {

/// phi(t) = a t^2 / ((1-t)(1-b t) - a t^2).
inline BigFloat phi(const BigFloat& t0, const GaugeParams& gp, const PrecisionContext& ctx) {
    BigFloat t = round_to(t0, ctx);
    if (t < 0)
        throw DomainError("phi: negative argument");
    BigFloat a = round_to(gp.a, ctx), b = round_to(gp.b, ctx);
    BigFloat att = a * t * t;
    BigFloat den = (1 - t) * (1 - b * t) - att;
    if (!(den > 0))
        throw DomainError("phi: denominator not positive");
    return att / den;
}

/// R = 2 / (b + 1 + sqrt((b-1)^2 + 8a)), the radius with phi(R) = 1.
inline BigFloat radius_R(const GaugeParams& gp, const PrecisionContext& ctx) {
    BigFloat a = round_to(gp.a, ctx), b = round_to(gp.b, ctx);
    BigFloat bm = b - 1;
    return BigFloat::from_int(2, ctx) / (b + 1 + sqrt(bm * bm + 8 * a, ctx));
}

/// psi(t) = ((1-t)(1-b t) - a t^2) / (1 - t - a t^2).
inline BigFloat psi1(const BigFloat& t0, const GaugeParams& gp, const PrecisionContext& ctx) {
    BigFloat t = round_to(t0, ctx);
    if (t < 0)
        throw DomainError("psi1: negative argument");
    BigFloat a = round_to(gp.a, ctx), b = round_to(gp.b, ctx);
    BigFloat att = a * t * t;
    BigFloat den = 1 - t - att;
    if (!(den > 0))
        throw DomainError("psi1: denominator not positive");
    return ((1 - t) * (1 - b * t) - att) / den;
}

/// phi_N by the defining recursion: phi_0 = 1,
/// phi_{N+1}(t) = a t^2 phi_N(t) / ((1-t)(1-b t) - a t^2 phi_N(t)).
/// Defined for 0 <= t <= R, where every denominator stays positive.
inline BigFloat phi_N(const BigFloat& t0, long N, const GaugeParams& gp,
                      const PrecisionContext& ctx) {
    if (N < 0)
        throw DomainError("phi_N: order must be nonnegative");
    BigFloat t = round_to(t0, ctx);
    if (t < 0)
        throw DomainError("phi_N: negative argument");
    if (t > radius_R(gp, ctx))
        throw DomainError("phi_N: argument exceeds the radius R");
    BigFloat a = round_to(gp.a, ctx), b = round_to(gp.b, ctx);
    BigFloat att = a * t * t;
    BigFloat lead = (1 - t) * (1 - b * t);
    BigFloat v = BigFloat::from_int(1, ctx);
    for (long k = 0; k < N; ++k) {
        BigFloat num = att * v;
        BigFloat den = lead - num;
        if (!(den > 0))
            throw DomainError("phi_N: denominator not positive");
        v = num / den;
    }
    return v;
}

/// varphi_N(t) = t * phi_N(t), the order-(2N+1) gauge function on [0, R].
inline BigFloat varphi_N(const BigFloat& t, long N, const GaugeParams& gp,
                         const PrecisionContext& ctx) {
    return round_to(t, ctx) * phi_N(t, N, gp, ctx);
}

/// (beta_N(t), psi_N(t)) for the current-separation theory. Both are defined
/// with b = 2 regardless of p:
///   beta_N(t) = a t^2 phi_{N-1}(t) / (1 - t - a t^2 phi_{N-1}(t)),
///   psi_N(t)  = 1 - 2 t (1 + beta_N(t)),
/// on 0 <= t <= R(a, b=2) = 2/(3 + sqrt(1 + 8a)).
inline std::pair<BigFloat, BigFloat> beta_psi_N(const BigFloat& t0, long N,
                                                const GaugeParams& gp,
                                                const PrecisionContext& ctx) {
    if (N < 1)
        throw DomainError("beta_psi_N: order must be at least 1");
    GaugeParams g2 = gp.with_b_two(ctx);
    BigFloat t = round_to(t0, ctx);
    if (t < 0)
        throw DomainError("beta_psi_N: negative argument");
    if (t > radius_R(g2, ctx))
        throw DomainError("beta_psi_N: argument exceeds the radius R");
    BigFloat a = round_to(gp.a, ctx);
    BigFloat num = a * t * t * phi_N(t, N - 1, g2, ctx);
    BigFloat den = 1 - t - num;
    if (!(den > 0))
        throw DomainError("beta_psi_N: denominator not positive");
    BigFloat beta = num / den;
    BigFloat psi = 1 - 2 * (t * (1 + beta));
    return {std::move(beta), std::move(psi)};
}

/// alpha(t) = 2 / (1 - (a-1)t + sqrt((1 - (a-1)t)^2 - 4t)), the a posteriori
/// amplification factor; alpha(0) = 1.
inline BigFloat alpha_fn(const BigFloat& t0, const GaugeParams& gp,
                         const PrecisionContext& ctx) {
    BigFloat t = round_to(t0, ctx);
    if (t < 0)
        throw DomainError("alpha_fn: negative argument");
    BigFloat a = round_to(gp.a, ctx);
    BigFloat u = 1 - (a - 1) * t;
    if (!(u > 0))
        throw DomainError("alpha_fn: 1 - (a-1)t not positive");
    BigFloat rad = u * u - 4 * t;
    if (rad < 0)
        throw DomainError("alpha_fn: negative radicand (argument too large)");
    return BigFloat::from_int(2, ctx) / (u + sqrt(rad, ctx));
}

/// Semilocal certification threshold = 8 / (3 + sqrt(1 + 8a))^2; equals
/// R(1-R)/(1 + (a-1)R) with R taken at b = 2.
inline BigFloat semilocal_threshold(const GaugeParams& gp, const PrecisionContext& ctx) {
    BigFloat a = round_to(gp.a, ctx);
    BigFloat s = 3 + sqrt(1 + 8 * a, ctx);
    return BigFloat::from_int(8, ctx) / (s * s);
}

/// R_h = 2 / (b + 1 + sqrt((b-1)^2 + 4a(1 + 1/h^2))): within this radius one
/// step contracts by at least h^2 (phi(R_h) = h^2).
inline BigFloat radius_Rh(const BigFloat& h0, const GaugeParams& gp,
                          const PrecisionContext& ctx) {
    BigFloat h = round_to(h0, ctx);
    if (!(h > 0) || !(h < 1))
        throw DomainError("radius_Rh: h must lie in (0, 1)");
    BigFloat a = round_to(gp.a, ctx), b = round_to(gp.b, ctx);
    BigFloat bm = b - 1;
    BigFloat inner = bm * bm + 4 * (a * (1 + 1 / (h * h)));
    return BigFloat::from_int(2, ctx) / (b + 1 + sqrt(inner, ctx));
}

} // namespace ehrlich
