#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ehrlich/errors.hpp"

namespace ehrlich {

/// Working precision for a computation, in bits of mantissa.
///
/// Every arithmetic routine in the library takes the context it should round
/// under; results are produced at ctx.bits() with round-to-nearest-even.
/// Values themselves carry their precision (an mpfr mantissa size), so a
/// routine that receives inputs already materialized at ctx precision keeps
/// all intermediates at that precision.
class PrecisionContext {
public:
    explicit PrecisionContext(long bits) : bits_(bits) {
        if (bits < 64)
            throw std::invalid_argument("PrecisionContext: precision must be at least 64 bits");
        if (bits > 1L << 30)
            throw std::invalid_argument("PrecisionContext: precision unreasonably large");
    }

    mpfr_prec_t bits() const { return static_cast<mpfr_prec_t>(bits_); }

    /// Context with additional guard bits, for exact intermediate products.
    PrecisionContext widened(long extra) const { return PrecisionContext(bits_ + extra); }

    friend bool operator==(const PrecisionContext& a, const PrecisionContext& b) {
        return a.bits_ == b.bits_;
    }

private:
    long bits_;
};

/// Mantissa bits comfortably holding `digits` significant decimal digits:
/// ceil(1.2 * log2(10) * digits), i.e. 20% headroom over the exact ratio.
inline long bits_for_digits(long digits) {
    if (digits < 1)
        throw std::invalid_argument("bits_for_digits: digit count must be positive");
    double bits = std::ceil(1.2 * 3.321928094887362 * static_cast<double>(digits));
    return std::max(64L, static_cast<long>(bits));
}

} // namespace ehrlich
