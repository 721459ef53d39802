#pragma once

#include <numeric>
#include <string>

#include "ehrlich/bigfloat.hpp"

namespace ehrlich {

/// Norm exponent p, either a rational >= 1 or infinity.
///
/// The conjugate exponent q (1/p + 1/q = 1) never appears as a stored number;
/// everything downstream needs only the exponent 1/q = (p-1)/p, which stays
/// an exact rational. Conventions: p = 1 gives 1/q = 0, p = inf gives 1/q = 1.
class PNorm {
public:
    static PNorm one() { return PNorm(1, 1); }
    static PNorm two() { return PNorm(2, 1); }
    static PNorm inf() { return PNorm(0, 0); }

    static PNorm rational(long num, long den) {
        if (den <= 0 || num <= 0)
            throw DomainError("PNorm: exponent must be positive");
        long g = std::gcd(num, den);
        num /= g;
        den /= g;
        if (num < den)
            throw DomainError("PNorm: exponent must be at least 1");
        return PNorm(num, den);
    }

    bool is_inf() const { return den_ == 0; }
    long num() const { return num_; }
    long den() const { return den_; }
    bool is_one() const { return !is_inf() && num_ == den_; }

    std::string label() const {
        if (is_inf())
            return "inf";
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend bool operator==(const PNorm& a, const PNorm& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    PNorm(long num, long den) : num_(num), den_(den) {}
    long num_, den_; // p = num/den; den == 0 marks infinity

    friend struct GaugeParams;
};

/// Accepts "inf", an integer ("2"), or a fraction ("3/2").
inline PNorm parse_pnorm(const std::string& s) {
    if (s == "inf")
        return PNorm::inf();
    try {
        size_t pos = 0;
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            long num = std::stol(s, &pos);
            if (pos != s.size())
                throw ParseError("");
            return PNorm::rational(num, 1);
        }
        long num = std::stol(s.substr(0, slash), &pos);
        if (pos != slash)
            throw ParseError("");
        long den = std::stol(s.substr(slash + 1), &pos);
        if (pos != s.size() - slash - 1)
            throw ParseError("");
        return PNorm::rational(num, den);
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("parse_pnorm: expected \"inf\", an integer or a fraction, got '" + s +
                         "'");
    }
}

/// Degree- and norm-dependent constants a = (n-1)^(1/q), b = 2^(1/q) shared
/// by all gauge functions.
struct GaugeParams {
    long n;
    PNorm pnorm;
    BigFloat a;
    BigFloat b;

    static GaugeParams make(long n, const PNorm& p, const PrecisionContext& ctx) {
        if (n < 2)
            throw DomainError("GaugeParams: degree must be at least 2");
        if (p.is_inf())
            return {n, p, BigFloat::from_int(n - 1, ctx), BigFloat::from_int(2, ctx)};
        long e_num = p.num() - p.den(); // 1/q = (p-1)/p
        long e_den = p.num();
        return {n, p,
                pow_rational(BigFloat::from_int(n - 1, ctx), e_num, e_den, ctx),
                pow_rational(BigFloat::from_int(2, ctx), e_num, e_den, ctx)};
    }

    /// Same a, but b pinned to 2: the second-kind gauge functions (psi_N,
    /// beta_N and their radius) are defined with b = 2 for every p.
    GaugeParams with_b_two(const PrecisionContext& ctx) const {
        return {n, pnorm, a, BigFloat::from_int(2, ctx)};
    }
};

} // namespace ehrlich
