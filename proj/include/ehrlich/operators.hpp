#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ehrlich/polynomial.hpp"

namespace ehrlich {

enum class FailureReason {
    DuplicateComponents, // x_i = x_j for some i != j in the input vector
    HashViolation,       // x_i equals the level-L image of another component
    ZeroDenominator,     // f'(x_i) - f(x_i)*S_i vanished exactly
};

struct OpFailure {
    FailureReason reason;
    long level; // level of the inner vector involved (0 = the input itself)
    long i;
    long j; // second index for duplicate/hash failures, -1 otherwise
};

inline std::string describe(const OpFailure& f) {
    switch (f.reason) {
    case FailureReason::DuplicateComponents:
        return "duplicate components at indices " + std::to_string(f.i) + "," +
               std::to_string(f.j);
    case FailureReason::HashViolation:
        return "component " + std::to_string(f.i) + " collides with level-" +
               std::to_string(f.level) + " image of component " + std::to_string(f.j);
    case FailureReason::ZeroDenominator:
        return "zero denominator at level " + std::to_string(f.level) + ", component " +
               std::to_string(f.i);
    }
    return "unknown failure";
}

/// Outcome of an iteration-operator application. A point outside the
/// operator's domain yields in_domain = false with the failure populated and
/// no value; no partial updates are ever returned.
struct OperatorResult {
    bool in_domain;
    std::optional<CVec> value;
    std::optional<OpFailure> failure;

    static OperatorResult ok(CVec v) { return {true, std::move(v), std::nullopt}; }
    static OperatorResult fail(OpFailure f) { return {false, std::nullopt, f}; }
};

namespace detail {

inline void require_problem_shape(const Polynomial& f, const CVec& x) {
    if (f.degree() < 2)
        throw DomainError("operator: polynomial degree must be at least 2");
    if (static_cast<long>(x.size()) != f.degree())
        throw DomainError("operator: point dimension must equal the degree");
}

inline CVec round_vec(const CVec& x, const PrecisionContext& ctx) {
    CVec r;
    r.reserve(x.size());
    for (const auto& z : x)
        r.push_back(round_to(z, ctx));
    return r;
}

inline std::optional<OpFailure> find_duplicate(const CVec& x) {
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            if (x[i] == x[j])
                return OpFailure{FailureReason::DuplicateComponents, 0,
                                 static_cast<long>(i), static_cast<long>(j)};
    return std::nullopt;
}

} // namespace detail

/// x # y: x_i != y_j for all i != j. Equality on the diagonal is allowed.
inline bool check_hash(const CVec& x, const CVec& y) {
    if (x.size() != y.size())
        throw DomainError("check_hash: vectors must have equal length");
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j)
            if (i != j && x[i] == y[j])
                return false;
    return true;
}

/// Weierstrass correction W_i(x) = f(x_i) / (a0 * prod_{j != i} (x_i - x_j)).
inline OperatorResult weierstrass(const Polynomial& f, const CVec& x0,
                                  const PrecisionContext& ctx) {
    detail::require_problem_shape(f, x0);
    CVec x = detail::round_vec(x0, ctx);
    if (auto dup = detail::find_duplicate(x))
        return OperatorResult::fail(*dup);
    Polynomial fr = f.rounded(ctx);
    CVec w;
    w.reserve(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        BigComplex num = eval(fr, x[i], ctx);
        BigComplex den = fr.leading();
        for (size_t j = 0; j < x.size(); ++j)
            if (j != i)
                den = mul(den, sub(x[i], x[j], ctx), ctx);
        w.push_back(div(num, den, ctx));
    }
    return OperatorResult::ok(std::move(w));
}

/// All memoized levels T^(0)(x) .. T^(N)(x) of the high-order iteration
///
///   T_i^(L+1)(x) = x_i - f(x_i) / (f'(x_i) - f(x_i) * sum_{j != i} 1/(x_i - T_j^(L)(x))).
///
/// f(x_i) and f'(x_i) are evaluated once at the base point; each level then
/// costs O(n^2). Components with f(x_i) = 0 exactly are held fixed at every
/// level without touching their denominators. Before building level L+1 the
/// condition x # T^(L)(x) is verified; any violation or an exactly zero
/// denominator aborts the whole call.
struct LevelsResult {
    bool in_domain;
    std::vector<CVec> levels; // valid when in_domain; size N+1
    std::optional<OpFailure> failure;
};

inline LevelsResult high_order_levels(const Polynomial& f, const CVec& x0, long N,
                                      const PrecisionContext& ctx) {
    detail::require_problem_shape(f, x0);
    if (N < 0)
        throw DomainError("high_order_levels: order must be nonnegative");
    CVec x = detail::round_vec(x0, ctx);
    Polynomial fr = f.rounded(ctx);
    Polynomial dfr = derivative(fr);
    size_t n = x.size();
    CVec fx, dfx;
    fx.reserve(n);
    dfx.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        fx.push_back(eval(fr, x[i], ctx));
        dfx.push_back(eval(dfr, x[i], ctx));
    }
    BigComplex one = BigComplex::from_int(1, 0, ctx);
    std::vector<CVec> levels;
    levels.reserve(static_cast<size_t>(N) + 1);
    levels.push_back(std::move(x));
    const CVec& base = levels[0];
    for (long lvl = 0; lvl < N; ++lvl) {
        const CVec& prev = levels.back();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (i != j && base[i] == prev[j]) {
                    FailureReason r = lvl == 0 ? FailureReason::DuplicateComponents
                                               : FailureReason::HashViolation;
                    return {false, {}, OpFailure{r, lvl, static_cast<long>(i),
                                                 static_cast<long>(j)}};
                }
        CVec next;
        next.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            if (fx[i].is_zero()) {
                next.push_back(base[i]);
                continue;
            }
            BigComplex s(ctx);
            for (size_t j = 0; j < n; ++j)
                if (j != i)
                    s = add(s, div(one, sub(base[i], prev[j], ctx), ctx), ctx);
            BigComplex den = sub(dfx[i], mul(fx[i], s, ctx), ctx);
            if (den.is_zero())
                return {false, {}, OpFailure{FailureReason::ZeroDenominator, lvl + 1,
                                             static_cast<long>(i), -1}};
            next.push_back(sub(base[i], div(fx[i], den, ctx), ctx));
        }
        levels.push_back(std::move(next));
    }
    return {true, std::move(levels), std::nullopt};
}

/// One step of T^(N). N = 0 is the identity.
inline OperatorResult high_order_T(const Polynomial& f, const CVec& x, long N,
                                   const PrecisionContext& ctx) {
    LevelsResult lr = high_order_levels(f, x, N, ctx);
    if (!lr.in_domain)
        return OperatorResult::fail(*lr.failure);
    return OperatorResult::ok(std::move(lr.levels.back()));
}

/// Classical Ehrlich step
///
///   T_i(x) = x_i - f(x_i) / (f'(x_i) - f(x_i) * sum_{j != i} 1/(x_i - x_j)).
///
/// Kept as a direct implementation (not a call into high_order_T) so the two
/// routes can be checked against each other; the arithmetic is ordered
/// identically, so results agree bit-for-bit with high_order_T at N = 1.
inline OperatorResult ehrlich_T(const Polynomial& f, const CVec& x0,
                                const PrecisionContext& ctx) {
    detail::require_problem_shape(f, x0);
    CVec x = detail::round_vec(x0, ctx);
    Polynomial fr = f.rounded(ctx);
    Polynomial dfr = derivative(fr);
    size_t n = x.size();
    CVec fx, dfx;
    fx.reserve(n);
    dfx.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        fx.push_back(eval(fr, x[i], ctx));
        dfx.push_back(eval(dfr, x[i], ctx));
    }
    BigComplex one = BigComplex::from_int(1, 0, ctx);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && x[i] == x[j])
                return OperatorResult::fail(OpFailure{FailureReason::DuplicateComponents, 0,
                                                      static_cast<long>(i),
                                                      static_cast<long>(j)});
    CVec t;
    t.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (fx[i].is_zero()) {
            t.push_back(x[i]);
            continue;
        }
        BigComplex s(ctx);
        for (size_t j = 0; j < n; ++j)
            if (j != i)
                s = add(s, div(one, sub(x[i], x[j], ctx), ctx), ctx);
        BigComplex den = sub(dfx[i], mul(fx[i], s, ctx), ctx);
        if (den.is_zero())
            return OperatorResult::fail(
                OpFailure{FailureReason::ZeroDenominator, 1, static_cast<long>(i), -1});
        t.push_back(sub(x[i], div(fx[i], den, ctx), ctx));
    }
    return OperatorResult::ok(std::move(t));
}

/// Identity step for a component sitting exactly on a root: requires
/// f(x_i) = 0 and returns x_i (the correction vanishes identically).
inline BigComplex fixed_component_rule(const Polynomial& f, const CVec& x, size_t i,
                                       const PrecisionContext& ctx) {
    detail::require_problem_shape(f, x);
    if (i >= x.size())
        throw DomainError("fixed_component_rule: index out of range");
    BigComplex xi = round_to(x[i], ctx);
    if (!eval(f.rounded(ctx), xi, ctx).is_zero())
        throw DomainError("fixed_component_rule: f(x_i) is not exactly zero");
    return xi;
}

} // namespace ehrlich
