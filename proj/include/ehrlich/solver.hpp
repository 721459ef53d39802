#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ehrlich/gauges.hpp"
#include "ehrlich/metrics.hpp"
#include "ehrlich/operators.hpp"

namespace ehrlich {

enum class SolveStatus { Converged, MaxIterExceeded, DomainFailure };

inline std::string to_string(SolveStatus s) {
    switch (s) {
    case SolveStatus::Converged:
        return "Converged";
    case SolveStatus::MaxIterExceeded:
        return "MaxIterExceeded";
    case SolveStatus::DomainFailure:
        return "DomainFailure";
    }
    return "Unknown";
}

struct SolveConfig {
    long N = 1;
    PNorm pnorm = PNorm::inf();
    long precision_bits = 256;
    std::string stop_eps = "1e-15";
    long max_iter = 64;
    bool compute_extra_iterate = true;
};

/// One row of the iteration history. eps is present iff Ef lies strictly
/// below the semilocal threshold (the bound needs the strict inequality);
/// certified uses the non-strict comparison that defines the index m.
struct IterateRecord {
    long k;
    CVec x;
    CVec W;
    BigFloat Ef;
    std::optional<BigFloat> eps;
    bool certified;
};

struct SolveReport {
    SolveStatus status;
    long N;
    PNorm pnorm;
    long precision_bits;
    long order_claim; // 2N+1
    std::vector<IterateRecord> trace; // k = 0 .. k_stop (or up to the failure)
    std::optional<long> m;
    std::optional<long> k_stop;
    std::optional<BigFloat> eps_k;
    std::optional<BigFloat> eps_k1;
    std::optional<IterateRecord> extra; // iterate k_stop + 1, kept out of trace
    std::optional<OpFailure> failure;   // set when status is DomainFailure
};

struct CertifyResult {
    bool certified;
    BigFloat Ef;
    BigFloat threshold;
};

/// Initial-point test: certified iff E_f(x) < 8/(3+sqrt(1+8a))^2. Success
/// guarantees that f has only simple zeros and that the order-(2N+1)
/// iteration started at x converges to a root-vector of f.
inline CertifyResult certify_semilocal(const Polynomial& f, const CVec& x,
                                       const GaugeParams& params, const PrecisionContext& ctx) {
    BigFloat Ef = e_weier(f, x, params.pnorm, ctx);
    BigFloat thr = semilocal_threshold(params, ctx);
    bool ok = Ef < thr;
    return {ok, std::move(Ef), std::move(thr)};
}

/// A posteriori bound: alpha(E_f(x)) * ||W_f(x)||_inf majorizes the distance
/// from x to the nearest root-vector, provided E_f(x) is strictly below the
/// semilocal threshold. Throws NotCertified otherwise.
inline BigFloat posteriori_bound(const Polynomial& f, const CVec& x, const GaugeParams& params,
                                 const PrecisionContext& ctx) {
    CVec xr = detail::round_vec(x, ctx);
    auto w = weierstrass(f, xr, ctx);
    if (!w.in_domain)
        throw DegenerateDenominator("posteriori_bound: " + describe(*w.failure));
    BigFloat Ef = p_norm(ratio_vec(*w.value, dvec(xr, ctx)), params.pnorm, ctx);
    BigFloat thr = semilocal_threshold(params, ctx);
    if (!(Ef < thr))
        throw NotCertified("posteriori_bound: E_f = " + to_decimal(Ef) +
                           " is not below the threshold " + to_decimal(thr));
    BigFloat winf = p_norm(cone_norm(*w.value), PNorm::inf(), ctx);
    return mul(alpha_fn(Ef, params, ctx), winf, ctx);
}

namespace detail {

inline IterateRecord make_record(long k, CVec x, CVec w, const GaugeParams& params,
                                 const BigFloat& threshold, const PrecisionContext& ctx) {
    BigFloat Ef = p_norm(ratio_vec(w, dvec(x, ctx)), params.pnorm, ctx);
    std::optional<BigFloat> eps;
    if (Ef < threshold) {
        BigFloat winf = p_norm(cone_norm(w), PNorm::inf(), ctx);
        eps = mul(alpha_fn(Ef, params, ctx), winf, ctx);
    }
    bool certified = Ef <= threshold;
    return {k, std::move(x), std::move(w), std::move(Ef), std::move(eps), certified};
}

} // namespace detail

/// Runs x^(k+1) = T^(N)(x^(k)) from x0, recording E_f and the a posteriori
/// bound eps_k per iterate. m is the smallest index with E_f <= threshold;
/// the run stops at the smallest k >= m with eps_k < stop_eps and E_f
/// strictly below the threshold. One extra iterate (not part of the stopping
/// decision, not in the trace) supplies eps_{k+1}.
inline SolveReport solve(const Polynomial& f, const CVec& x0, const SolveConfig& cfg) {
    if (cfg.N < 1)
        throw DomainError("solve: order parameter N must be at least 1");
    if (cfg.max_iter < 1)
        throw DomainError("solve: max_iter must be at least 1");
    PrecisionContext ctx(cfg.precision_bits);
    detail::require_problem_shape(f, x0);
    Polynomial fr = f.rounded(ctx);
    GaugeParams params = GaugeParams::make(fr.degree(), cfg.pnorm, ctx);
    BigFloat threshold = semilocal_threshold(params, ctx);
    BigFloat stop = parse_decimal(cfg.stop_eps, ctx);
    if (!(stop > 0L))
        throw DomainError("solve: stop_eps must be positive");

    SolveReport rep{SolveStatus::MaxIterExceeded,
                    cfg.N,
                    cfg.pnorm,
                    cfg.precision_bits,
                    2 * cfg.N + 1,
                    {},
                    std::nullopt,
                    std::nullopt,
                    std::nullopt,
                    std::nullopt,
                    std::nullopt,
                    std::nullopt};

    CVec x = detail::round_vec(x0, ctx);
    for (long k = 0;; ++k) {
        auto w = weierstrass(fr, x, ctx);
        if (!w.in_domain) {
            rep.status = SolveStatus::DomainFailure;
            rep.failure = w.failure;
            return rep;
        }
        IterateRecord rec =
            detail::make_record(k, x, std::move(*w.value), params, threshold, ctx);
        if (!rep.m && rec.certified)
            rep.m = k;
        bool stop_now = rep.m && k >= *rep.m && rec.eps && *rec.eps < stop;
        rep.trace.push_back(std::move(rec));
        if (stop_now) {
            rep.status = SolveStatus::Converged;
            rep.k_stop = k;
            rep.eps_k = rep.trace.back().eps;
            break;
        }
        if (k == cfg.max_iter)
            return rep; // MaxIterExceeded, trace preserved
        auto st = high_order_T(fr, x, cfg.N, ctx);
        if (!st.in_domain) {
            rep.status = SolveStatus::DomainFailure;
            rep.failure = st.failure;
            return rep;
        }
        x = std::move(*st.value);
    }

    if (cfg.compute_extra_iterate) {
        auto st = high_order_T(fr, x, cfg.N, ctx);
        if (st.in_domain) {
            auto w = weierstrass(fr, *st.value, ctx);
            if (w.in_domain) {
                rep.extra = detail::make_record(*rep.k_stop + 1, std::move(*st.value),
                                                std::move(*w.value), params, threshold, ctx);
                rep.eps_k1 = rep.extra->eps;
            }
        }
    }
    return rep;
}

struct LocalCheckFirst {
    bool holds;
    BigFloat E;
    BigFloat R;
    std::optional<BigFloat> lambda;
};

/// First local test: holds iff E = ||(x0 - xi)/d(xi)||_p lies strictly below
/// the convergence radius R. On success lambda = phi_N(E) is the contraction
/// factor of the order-(2N+1) error envelopes.
inline LocalCheckFirst check_local_first(const Polynomial& f, const CVec& x0,
                                         const RootVector& xi, long N, const GaugeParams& params,
                                         const PrecisionContext& ctx) {
    detail::require_problem_shape(f, x0);
    BigFloat E = e_root(x0, xi, params.pnorm, ctx);
    BigFloat R = radius_R(params, ctx);
    if (!(E < R))
        return {false, std::move(E), std::move(R), std::nullopt};
    BigFloat lambda = phi_N(E, N, params, ctx);
    return {true, std::move(E), std::move(R), std::move(lambda)};
}

struct LocalCheckSecond {
    bool holds;
    BigFloat E;
    BigFloat R;
    std::optional<BigFloat> lambda;
    std::optional<BigFloat> theta;
};

/// Second local test, always with b = 2: holds iff E = ||(x0 - xi)/d(x0)||_p
/// is at most R (boundary included). lambda and theta feed the envelope
/// ||x^(k+1) - xi|| <= theta * lambda^((2N+1)^k) * ||x^(k) - xi||.
inline LocalCheckSecond check_local_second(const Polynomial& f, const CVec& x0,
                                           const RootVector& xi, long N, const GaugeParams& params,
                                           const PrecisionContext& ctx) {
    if (N < 1)
        throw DomainError("check_local_second: N must be at least 1");
    detail::require_problem_shape(f, x0);
    GaugeParams gp2 = params.with_b_two(ctx);
    BigFloat E = e_current(x0, xi, params.pnorm, ctx);
    BigFloat R = radius_R(gp2, ctx);
    if (!(E <= R))
        return {false, std::move(E), std::move(R), std::nullopt, std::nullopt};
    BigFloat lambda = phi_N(E, N, gp2, ctx);
    BigFloat theta = beta_psi_N(E, N, params, ctx).second;
    return {true, std::move(E), std::move(R), std::move(lambda), std::move(theta)};
}

/// For each x_i, the index of the nearest xi_j (ties -> lowest index).
inline std::vector<size_t> match_nearest(const CVec& x, const CVec& xi,
                                         const PrecisionContext& ctx) {
    if (xi.empty())
        throw DomainError("match_nearest: empty reference vector");
    std::vector<size_t> idx(x.size(), 0);
    for (size_t i = 0; i < x.size(); ++i) {
        BigFloat best = abs(sub(x[i], xi[0], ctx), ctx);
        for (size_t j = 1; j < xi.size(); ++j) {
            BigFloat d = abs(sub(x[i], xi[j], ctx), ctx);
            if (d < best) {
                best = d;
                idx[i] = j;
            }
        }
    }
    return idx;
}

/// ||x - xi||_inf after nearest-neighbor matching of components.
inline BigFloat max_error(const CVec& x, const CVec& xi, const PrecisionContext& ctx) {
    auto idx = match_nearest(x, xi, ctx);
    BigFloat worst = BigFloat::from_int(0, ctx);
    for (size_t i = 0; i < x.size(); ++i)
        worst = max(worst, abs(sub(x[i], xi[idx[i]], ctx), ctx));
    return worst;
}

/// log(e_{k+1}/e_k) / log(e_k/e_{k-1}) over the errors e_j = ||x^(j) - xi||,
/// taken at the last triple of consecutive trace entries where the quotient
/// is defined. Near a fixed point of an order-(2N+1) method the value
/// approaches 2N+1.
inline double empirical_order(const SolveReport& rep, const RootVector& xi,
                              const PrecisionContext& ctx) {
    std::vector<BigFloat> e;
    e.reserve(rep.trace.size());
    for (const auto& rec : rep.trace)
        e.push_back(max_error(rec.x, xi, ctx));
    for (long j = static_cast<long>(e.size()) - 2; j >= 1; --j) {
        const BigFloat& e0 = e[j - 1];
        const BigFloat& e1 = e[j];
        const BigFloat& e2 = e[j + 1];
        if (!(e0 > 0L && e1 > 0L && e2 > 0L))
            continue;
        BigFloat den = log(div(e1, e0, ctx), ctx);
        if (den.is_zero())
            continue;
        BigFloat num = log(div(e2, e1, ctx), ctx);
        return div(num, den, ctx).to_double();
    }
    throw InsufficientTrace("empirical_order: need three consecutive iterates with "
                            "nonzero, distinct errors");
}

/// Reference root-vector: classical Ehrlich iteration from a certified start,
/// run at ctx precision until the a posteriori bound drops below
/// 10^(-target_digits). Component order follows x_start.
inline CVec refine_roots(const Polynomial& f, const CVec& x_start, long target_digits,
                         const PrecisionContext& ctx) {
    Polynomial fr = f.rounded(ctx);
    GaugeParams params = GaugeParams::make(fr.degree(), PNorm::inf(), ctx);
    BigFloat thr = semilocal_threshold(params, ctx);
    BigFloat target = parse_decimal("1e-" + std::to_string(target_digits), ctx);
    CVec x = detail::round_vec(x_start, ctx);
    for (long it = 0; it < 1000; ++it) {
        auto w = weierstrass(fr, x, ctx);
        if (!w.in_domain)
            throw DomainError("refine_roots: " + describe(*w.failure));
        BigFloat Ef = p_norm(ratio_vec(*w.value, dvec(x, ctx)), PNorm::inf(), ctx);
        if (Ef < thr) {
            BigFloat eps =
                mul(alpha_fn(Ef, params, ctx), p_norm(cone_norm(*w.value), PNorm::inf(), ctx), ctx);
            if (eps < target)
                return x;
        }
        auto st = ehrlich_T(fr, x, ctx);
        if (!st.in_domain)
            throw DomainError("refine_roots: " + describe(*st.failure));
        x = std::move(*st.value);
    }
    throw NotCertified("refine_roots: target accuracy not reached");
}

} // namespace ehrlich
