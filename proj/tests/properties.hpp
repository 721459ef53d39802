#pragma once

#include "ehrlich/gauges.hpp"
#include "ehrlich/metrics.hpp"

#include "support.hpp"

// Randomized checks shared between the unit suites (small instance counts)
// and the acceptance gate (large ones). Every function returns how many
// individual inequalities were checked and how many failed.
namespace ehrlich::testsupport {

struct PropCount {
    long checked = 0;
    long failed = 0;
    void add(bool ok) {
        ++checked;
        if (!ok)
            ++failed;
    }
    PropCount& operator+=(const PropCount& o) {
        checked += o.checked;
        failed += o.failed;
        return *this;
    }
};

struct SepInstance {
    size_t n;
    PNorm p;
    BigFloat b; // 2^(1/q)
    double scale;
};

inline SepInstance sep_instance(Rng& rng, long i, const PrecisionContext& ctx) {
    size_t n = 3 + static_cast<size_t>(uniform(rng, 0, 5.999));
    PNorm p = pnorm_cycle(static_cast<size_t>(i));
    BigFloat b = GaugeParams::make(static_cast<long>(n), p, ctx).b;
    return {n, p, std::move(b), 0.3 / (8.0 * static_cast<double>(n))};
}

/// Perturbing v by u with E = ||(u-v)/d(v)||_p shrinks cross and mutual
/// separations by at most (1 - E) resp. (1 - 2^(1/q) E).
inline PropCount perturbed_separation(Rng& rng, long instances, const PrecisionContext& ctx) {
    PropCount pc;
    for (long t = 0; t < instances; ++t) {
        SepInstance in = sep_instance(rng, t, ctx);
        CVec v = random_distinct(rng, in.n, 2.0, 0.3, ctx);
        CVec u = perturbed(rng, v, in.scale, ctx);
        BigFloat E = p_norm(ratio_vec(detail::diff_vec(u, v, ctx), dvec(v, ctx)), in.p, ctx);
        BigFloat f13 = sub(BigFloat::from_int(1, ctx), E, ctx);
        BigFloat f14 = sub(BigFloat::from_int(1, ctx), mul(in.b, E, ctx), ctx);
        for (size_t i = 0; i < in.n; ++i)
            for (size_t j = 0; j < in.n; ++j) {
                if (i == j)
                    continue;
                BigFloat vij = abs(sub(v[i], v[j], ctx), ctx);
                pc.add(ge_slack(abs(sub(u[i], v[j], ctx), ctx), mul(f13, vij, ctx), ctx));
                pc.add(ge_slack(abs(sub(u[i], u[j], ctx), ctx), mul(f14, vij, ctx), ctx));
            }
    }
    return pc;
}

/// E = ||(u-v)/d(v)||_p < 1/2 forces u to stay componentwise distinct.
inline PropCount distinct_under_half(Rng& rng, long instances, const PrecisionContext& ctx) {
    PropCount pc;
    for (long t = 0; t < instances; ++t) {
        SepInstance in = sep_instance(rng, t, ctx);
        CVec v = random_distinct(rng, in.n, 2.0, 0.3, ctx);
        CVec u = perturbed(rng, v, in.scale, ctx);
        BigFloat E = p_norm(ratio_vec(detail::diff_vec(u, v, ctx), dvec(v, ctx)), in.p, ctx);
        if (!(E < div(BigFloat::from_int(1, ctx), BigFloat::from_int(2, ctx), ctx)))
            continue;
        bool distinct = true;
        for (const auto& d : dvec(u, ctx))
            if (d.is_zero())
                distinct = false;
        pc.add(distinct);
    }
    return pc;
}

/// If v lies componentwise at least as close to xi as u does, the cross
/// separations |u_i - v_j| stay above (1 - 2^(1/q) E) |xi_i - xi_j| with
/// E = ||(u-xi)/d(xi)||_p.
inline PropCount nested_perturbation_separation(Rng& rng, long instances,
                                                const PrecisionContext& ctx) {
    PropCount pc;
    for (long t = 0; t < instances; ++t) {
        SepInstance in = sep_instance(rng, t, ctx);
        CVec xi = random_distinct(rng, in.n, 2.0, 0.3, ctx);
        CVec u, v;
        for (size_t i = 0; i < in.n; ++i) {
            BigComplex delta = to_big(random_point(rng, in.scale), ctx);
            BigFloat s = BigFloat::from_double(uniform(rng, 0.0, 1.0), ctx);
            u.push_back(add(xi[i], delta, ctx));
            v.push_back(add(xi[i], s * delta, ctx));
        }
        BigFloat E = p_norm(ratio_vec(detail::diff_vec(u, xi, ctx), dvec(xi, ctx)), in.p, ctx);
        BigFloat f = sub(BigFloat::from_int(1, ctx), mul(in.b, E, ctx), ctx);
        for (size_t i = 0; i < in.n; ++i)
            for (size_t j = 0; j < in.n; ++j) {
                if (i == j)
                    continue;
                BigFloat xij = abs(sub(xi[i], xi[j], ctx), ctx);
                pc.add(ge_slack(abs(sub(u[i], v[j], ctx), ctx), mul(f, xij, ctx), ctx));
            }
    }
    return pc;
}

/// If u stays within alpha times v's componentwise distance to xi, then with
/// E = ||(v-xi)/d(v)||_p both |u_j - v_i| >= (1 - (1+alpha) E) |v_i - v_j|
/// and |u_i - u_j| >= (1 - 2^(1/q) (1+alpha) E) |v_i - v_j| hold.
inline PropCount scaled_perturbation_separation(Rng& rng, long instances,
                                                const PrecisionContext& ctx) {
    PropCount pc;
    for (long t = 0; t < instances; ++t) {
        SepInstance in = sep_instance(rng, t, ctx);
        CVec xi = random_distinct(rng, in.n, 2.0, 0.3, ctx);
        BigFloat alpha = BigFloat::from_double(uniform(rng, 0.0, 2.0), ctx);
        CVec u, v;
        for (size_t i = 0; i < in.n; ++i) {
            BigComplex delta = to_big(random_point(rng, in.scale), ctx);
            BigFloat s = BigFloat::from_double(uniform(rng, 0.0, 1.0), ctx);
            v.push_back(add(xi[i], delta, ctx));
            u.push_back(add(xi[i], alpha * (s * delta), ctx));
        }
        BigFloat E = p_norm(ratio_vec(detail::diff_vec(v, xi, ctx), dvec(v, ctx)), in.p, ctx);
        BigFloat grow = add(BigFloat::from_int(1, ctx), alpha, ctx);
        BigFloat fc = sub(BigFloat::from_int(1, ctx), mul(grow, E, ctx), ctx);
        BigFloat fm = sub(BigFloat::from_int(1, ctx), mul(in.b, mul(grow, E, ctx), ctx), ctx);
        for (size_t i = 0; i < in.n; ++i)
            for (size_t j = 0; j < in.n; ++j) {
                if (i == j)
                    continue;
                BigFloat vij = abs(sub(v[i], v[j], ctx), ctx);
                pc.add(ge_slack(abs(sub(u[j], v[i], ctx), ctx), mul(fc, vij, ctx), ctx));
                pc.add(ge_slack(abs(sub(u[i], u[j], ctx), ctx), mul(fm, vij, ctx), ctx));
            }
    }
    return pc;
}

inline std::vector<GaugeParams> gauge_configs(const PrecisionContext& ctx) {
    std::vector<GaugeParams> out;
    for (long n : {4L, 8L, 15L, 40L})
        for (int pi = 0; pi < 3; ++pi)
            out.push_back(GaugeParams::make(n, pnorm_cycle(static_cast<size_t>(pi)), ctx));
    return out;
}

/// First-kind gauge family on a grid over [0, R): quasi-homogeneity of
/// degree 2N plus the three monotonicity chains.
inline PropCount first_kind_gauge_grid(long samples, long maxN, const PrecisionContext& ctx) {
    PropCount pc;
    for (const auto& gp : gauge_configs(ctx)) {
        BigFloat R = radius_R(gp, ctx);
        for (long j = 0; j < samples; ++j) {
            BigFloat t = div(mul(R, BigFloat::from_int(j, ctx), ctx),
                             BigFloat::from_int(samples, ctx), ctx);
            BigFloat phi1 = phi(t, gp, ctx);
            for (long N = 1; N <= maxN; ++N) {
                BigFloat pN = phi_N(t, N, gp, ctx);
                for (int num = 1; num <= 7; num += 2) {
                    BigFloat lam = div(BigFloat::from_int(num, ctx), BigFloat::from_int(8, ctx),
                                       ctx);
                    BigFloat lampow = BigFloat::from_int(1, ctx);
                    for (long e = 0; e < 2 * N; ++e)
                        lampow = mul(lampow, lam, ctx);
                    pc.add(le_slack(phi_N(mul(lam, t, ctx), N, gp, ctx), mul(lampow, pN, ctx),
                                    ctx));
                }
                BigFloat pN1 = phi_N(t, N + 1, gp, ctx);
                pc.add(le_slack(pN1, mul(phi1, pN, ctx), ctx));
                pc.add(le_slack(pN1, pN, ctx));
                BigFloat phipow = BigFloat::from_int(1, ctx);
                for (long e = 0; e < N; ++e)
                    phipow = mul(phipow, phi1, ctx);
                pc.add(le_slack(pN, phipow, ctx));
            }
        }
    }
    return pc;
}

/// Second-kind family (always b = 2) on a grid over [0, R(b=2)):
/// beta_N = phi_N psi_N, beta decreasing and psi increasing in N.
inline PropCount second_kind_gauge_grid(long samples, long maxN, const PrecisionContext& ctx) {
    PropCount pc;
    for (const auto& gp : gauge_configs(ctx)) {
        GaugeParams g2 = gp.with_b_two(ctx);
        BigFloat R2 = radius_R(g2, ctx);
        for (long j = 0; j < samples; ++j) {
            BigFloat t = div(mul(R2, BigFloat::from_int(j, ctx), ctx),
                             BigFloat::from_int(samples, ctx), ctx);
            for (long N = 1; N <= maxN; ++N) {
                auto [beta, psi] = beta_psi_N(t, N, gp, ctx);
                pc.add(close_rel(beta, mul(phi_N(t, N, g2, ctx), psi, ctx), ctx));
                if (N < maxN) {
                    auto [beta1, psi1_] = beta_psi_N(t, N + 1, gp, ctx);
                    pc.add(le_slack(beta1, beta, ctx));
                    pc.add(ge_slack(psi1_, psi, ctx));
                }
            }
        }
    }
    return pc;
}

/// At the radius itself: phi_N(R) = 1 for every N, while beta_N(R) stays
/// below 1 and psi_N(R) stays positive.
inline PropCount gauge_boundary_identities(long maxN, const PrecisionContext& ctx) {
    PropCount pc;
    for (const auto& gp : gauge_configs(ctx)) {
        BigFloat R = radius_R(gp, ctx);
        BigFloat R2 = radius_R(gp.with_b_two(ctx), ctx);
        for (long N = 1; N <= maxN; ++N) {
            pc.add(abs(sub(phi_N(R, N, gp, ctx), BigFloat::from_int(1, ctx), ctx)) <=
                   BigFloat::pow2(-140, ctx));
            auto [beta, psi] = beta_psi_N(R2, N, gp, ctx);
            pc.add(beta < 1L);
            pc.add(psi > 0L);
        }
    }
    return pc;
}

} // namespace ehrlich::testsupport
