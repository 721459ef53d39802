#pragma once

#include <vector>

#include "ehrlich/operators.hpp"
#include "ehrlich/pnorm.hpp"

namespace ehrlich {

/// Component-wise modulus (|x_1|, ..., |x_n|).
inline RVec cone_norm(const CVec& x) {
    RVec r;
    r.reserve(x.size());
    for (const auto& z : x)
        r.push_back(abs(z));
    return r;
}

/// Coordinate-wise partial order on nonnegative vectors: a_i <= b_i for all i.
inline bool cone_le(const RVec& a, const RVec& b) {
    if (a.size() != b.size())
        throw DomainError("cone_le: vectors must have equal length");
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] <= b[i]))
            return false;
    return true;
}

/// l_p norm of a nonnegative vector; the maximum entry for p = inf.
inline BigFloat p_norm(const RVec& v, const PNorm& pn, const PrecisionContext& ctx) {
    if (v.empty())
        return BigFloat(ctx);
    if (pn.is_inf()) {
        BigFloat m = round_to(v[0], ctx);
        for (size_t i = 1; i < v.size(); ++i)
            if (v[i] > m)
                m = round_to(v[i], ctx);
        return m;
    }
    if (pn.is_one()) {
        BigFloat s(ctx);
        for (const auto& e : v)
            s = add(s, e, ctx);
        return s;
    }
    BigFloat s(ctx);
    for (const auto& e : v)
        s = add(s, pow_rational(e, pn.num(), pn.den(), ctx), ctx);
    return pow_rational(s, pn.den(), pn.num(), ctx);
}

/// d_i(x) = min_{j != i} |x_i - x_j|. Entries are 0 iff x has duplicates.
inline RVec dvec(const CVec& x, const PrecisionContext& ctx) {
    if (x.size() < 2)
        throw DomainError("dvec: need at least two components");
    RVec d;
    d.reserve(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        BigFloat best = abs(sub(x[i], x[i == 0 ? 1 : 0], ctx), ctx);
        for (size_t j = 0; j < x.size(); ++j) {
            if (j == i || j == (i == 0 ? 1 : 0))
                continue;
            BigFloat dist = abs(sub(x[i], x[j], ctx), ctx);
            if (dist < best)
                best = dist;
        }
        d.push_back(std::move(best));
    }
    return d;
}

/// (|x_1|/y_1, ..., |x_n|/y_n).
inline RVec ratio_vec(const CVec& x, const RVec& y) {
    if (x.size() != y.size())
        throw DomainError("ratio_vec: vectors must have equal length");
    RVec r;
    r.reserve(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (y[i].is_zero())
            throw DegenerateDenominator("ratio_vec: zero denominator entry (duplicate components?)");
        r.push_back(abs(x[i]) / y[i]);
    }
    return r;
}

namespace detail {

inline CVec diff_vec(const CVec& x, const CVec& y, const PrecisionContext& ctx) {
    if (x.size() != y.size())
        throw DomainError("metrics: vectors must have equal length");
    CVec d;
    d.reserve(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        d.push_back(sub(x[i], y[i], ctx));
    return d;
}

} // namespace detail

/// || (x - xi) / d(xi) ||_p : distance to the roots measured against the
/// root separations. Needs the true root-vector; test/diagnostic use.
inline BigFloat e_root(const CVec& x, const CVec& xi, const PNorm& pn,
                       const PrecisionContext& ctx) {
    return p_norm(ratio_vec(detail::diff_vec(x, xi, ctx), dvec(xi, ctx)), pn, ctx);
}

/// || (x - xi) / d(x) ||_p : same distance measured against the current
/// iterate's own component separations.
inline BigFloat e_current(const CVec& x, const CVec& xi, const PNorm& pn,
                          const PrecisionContext& ctx) {
    return p_norm(ratio_vec(detail::diff_vec(x, xi, ctx), dvec(x, ctx)), pn, ctx);
}

/// || W_f(x) / d(x) ||_p : fully computable from f and x alone; this is the
/// quantity certified against the semilocal threshold.
inline BigFloat e_weier(const Polynomial& f, const CVec& x, const PNorm& pn,
                        const PrecisionContext& ctx) {
    OperatorResult w = weierstrass(f, x, ctx);
    if (!w.in_domain)
        throw DegenerateDenominator("e_weier: " + describe(*w.failure));
    return p_norm(ratio_vec(*w.value, dvec(x, ctx)), pn, ctx);
}

} // namespace ehrlich
