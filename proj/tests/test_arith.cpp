#include <catch2/catch_amalgamated.hpp>

#include "ehrlich/bigcomplex.hpp"

#include "support.hpp"

using namespace ehrlich;

namespace {
const PrecisionContext ctx(256);
}

TEST_CASE("precision context validates its range") {
    REQUIRE_THROWS_AS(PrecisionContext(32), std::invalid_argument);
    REQUIRE_THROWS_AS(PrecisionContext(63), std::invalid_argument);
    REQUIRE(PrecisionContext(64).bits() == 64);
    REQUIRE(PrecisionContext(100).widened(28) == PrecisionContext(128));
}

TEST_CASE("bits_for_digits") {
    REQUIRE(bits_for_digits(1) == 64);
    REQUIRE(bits_for_digits(50) == 200);
    REQUIRE(bits_for_digits(100) == 399);
    REQUIRE_THROWS_AS(bits_for_digits(0), std::invalid_argument);
    long prev = 0;
    for (long d = 1; d < 300; d += 7) {
        long b = bits_for_digits(d);
        REQUIRE(b >= prev);
        prev = b;
    }
}

TEST_CASE("bigfloat construction and comparison") {
    BigFloat two = BigFloat::from_int(2, ctx);
    REQUIRE(two == 2L);
    REQUIRE(two.sign() == 1);
    REQUIRE(BigFloat::pow2(-2, ctx) == parse_decimal("0.25", ctx));
    REQUIRE(BigFloat::from_double(-1.5, ctx) == parse_decimal("-1.5", ctx));
    REQUIRE(BigFloat::from_int(1000, ctx) == parse_decimal("1e3", ctx));
    REQUIRE(BigFloat(ctx).is_zero());

    BigFloat a = parse_decimal("0.1", ctx), b = parse_decimal("0.2", ctx);
    REQUIRE(a < b);
    REQUIRE(b > a);
    REQUIRE(a <= a);
    REQUIRE(a != b);
    REQUIRE(min(a, b) == a);
    REQUIRE(max(a, b) == b);
    REQUIRE(a > 0L);
    REQUIRE(a < 1L);
}

TEST_CASE("bigfloat arithmetic accuracy") {
    BigFloat third = div(BigFloat::from_int(1, ctx), BigFloat::from_int(3, ctx), ctx);
    BigFloat back = mul(third, BigFloat::from_int(3, ctx), ctx);
    REQUIRE(abs(back - 1) <= BigFloat::pow2(-250, ctx));

    BigFloat r2 = sqrt(BigFloat::from_int(2, ctx), ctx);
    REQUIRE(abs(r2 * r2 - 2) <= BigFloat::pow2(-250, ctx));

    REQUIRE(log(BigFloat::from_int(1, ctx), ctx).is_zero());
    REQUIRE_THROWS_AS(log(BigFloat::from_int(-1, ctx), ctx), DomainError);
    REQUIRE_THROWS_AS(log(BigFloat(ctx), ctx), DomainError);
    REQUIRE_THROWS_AS(div(BigFloat::from_int(1, ctx), BigFloat(ctx), ctx), DivisionByZero);

    // 8^(2/3) = 4 exactly
    REQUIRE(pow_rational(BigFloat::from_int(8, ctx), 2, 3, ctx) == 4L);
}

TEST_CASE("operators work at the larger operand precision") {
    BigFloat narrow = BigFloat::from_int(1, PrecisionContext(128));
    BigFloat wide = BigFloat::from_int(1, ctx);
    REQUIRE((narrow + wide).bits() == 256);
    REQUIRE((wide * narrow).bits() == 256);
    REQUIRE((narrow / wide).bits() == 256);
    REQUIRE(round_to(wide, PrecisionContext(128)).bits() == 128);
}

TEST_CASE("same value computed at 128 and 256 bits agrees to 2^-120") {
    PrecisionContext lo(128);
    BigFloat a = sqrt(BigFloat::from_int(2, lo), lo);
    BigFloat b = sqrt(BigFloat::from_int(2, ctx), ctx);
    REQUIRE(abs(sub(a, b, ctx)) <= BigFloat::pow2(-120, ctx));
}

TEST_CASE("parse_decimal rejects malformed input") {
    REQUIRE_THROWS_AS(parse_decimal("", ctx), ParseError);
    REQUIRE_THROWS_AS(parse_decimal("abc", ctx), ParseError);
    REQUIRE_THROWS_AS(parse_decimal("1.5x", ctx), ParseError);
    REQUIRE_THROWS_AS(parse_decimal("1..2", ctx), ParseError);
}

TEST_CASE("to_decimal round-trips bit for bit") {
    testsupport::Rng rng(20240811);
    for (int i = 0; i < 200; ++i) {
        BigFloat x = BigFloat::from_double(testsupport::uniform(rng, -1e6, 1e6), ctx);
        REQUIRE(parse_decimal(to_decimal(x), ctx) == x);
    }
    BigFloat r2 = sqrt(BigFloat::from_int(2, ctx), ctx);
    REQUIRE(parse_decimal(to_decimal(r2), ctx) == r2);
    REQUIRE(to_decimal(BigFloat(ctx)) == "0");
}

TEST_CASE("format_scientific") {
    REQUIRE(format_scientific(parse_decimal("12345.678", ctx), 3) == "1.235e+04");
    REQUIRE(format_scientific(parse_decimal("-0.00012345", ctx), 2) == "-1.23e-04");
    REQUIRE(format_scientific(parse_decimal("9.9999", ctx), 3) == "1.000e+01");
    REQUIRE(format_scientific(parse_decimal("4.385760e-21", ctx), 6) == "4.385760e-21");
    REQUIRE(format_scientific(parse_decimal("5.054741e-744", ctx), 6) == "5.054741e-744");
    REQUIRE(format_scientific(BigFloat(ctx), 6) == "0.000000e+00");
}

TEST_CASE("format_fixed rounds, format_fixed_trunc truncates") {
    BigFloat x = parse_decimal("0.9999996", ctx);
    REQUIRE(format_fixed(x, 6) == "1.000000");
    REQUIRE(format_fixed_trunc(x, 6) == "0.999999");

    BigFloat y = parse_decimal("-1.2345678", ctx);
    REQUIRE(format_fixed(y, 3) == "-1.235");
    REQUIRE(format_fixed_trunc(y, 3) == "-1.234");

    // a result that is zero at the shown scale never keeps a minus sign
    BigFloat tiny = parse_decimal("-4e-7", ctx);
    REQUIRE(format_fixed(tiny, 6) == "0.000000");
    REQUIRE(format_fixed_trunc(tiny, 6) == "0.000000");

    REQUIRE(format_fixed_trunc(parse_decimal("123.456", ctx), 0) == "123");
    REQUIRE(format_fixed(parse_decimal("0.010032", ctx), 6) == "0.010032");
}

TEST_CASE("sci_parts") {
    auto [m1, e1] = sci_parts(parse_decimal("1.457548e-2", ctx), 6);
    REQUIRE(m1 == "1.457548");
    REQUIRE(e1 == -2);
    auto [m2, e2] = sci_parts(parse_decimal("-4.385760e-21", ctx), 6);
    REQUIRE(m2 == "-4.385760");
    REQUIRE(e2 == -21);
    auto [m0, e0] = sci_parts(BigFloat(ctx), 6);
    REQUIRE(m0 == "0");
    REQUIRE(e0 == 0);
}

TEST_CASE("complex multiplication and division are exact on exact data") {
    BigComplex a = BigComplex::from_int(1, 2, ctx);
    BigComplex b = BigComplex::from_int(3, 4, ctx);
    REQUIRE(mul(a, b, ctx) == BigComplex::from_int(-5, 10, ctx));
    REQUIRE(div(BigComplex::from_int(-5, 10, ctx), b, ctx) == a);
    REQUIRE(abs(BigComplex::from_int(3, -4, ctx), ctx) == 5L);
    REQUIRE(abs(BigComplex::from_int(3, -4, ctx)) == 5L);
    REQUIRE_THROWS_AS(div(a, BigComplex(ctx), ctx), DivisionByZero);

    BigFloat two = BigFloat::from_int(2, ctx);
    REQUIRE(two * b == BigComplex::from_int(6, 8, ctx));
}

TEST_CASE("complex division is accurate on rounded data") {
    testsupport::Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        BigComplex a = testsupport::to_big(testsupport::random_point(rng, 10.0), ctx);
        BigComplex b = testsupport::to_big(testsupport::random_point(rng, 10.0), ctx);
        if (b.is_zero())
            continue;
        BigComplex back = mul(div(a, b, ctx), b, ctx);
        REQUIRE(abs(sub(back, a, ctx), ctx) <=
                mul(BigFloat::pow2(-250, ctx), add(abs(a, ctx), BigFloat::from_int(1, ctx), ctx),
                    ctx));
    }
}

TEST_CASE("parse_complex accepts the usual shapes") {
    BigComplex z = parse_complex("0.46-1.37i", ctx);
    REQUIRE(z.re() == parse_decimal("0.46", ctx));
    REQUIRE(z.im() == parse_decimal("-1.37", ctx));

    REQUIRE(parse_complex("2i", ctx) == BigComplex::from_int(0, 2, ctx));
    REQUIRE(parse_complex("i", ctx) == BigComplex::from_int(0, 1, ctx));
    REQUIRE(parse_complex("-i", ctx) == BigComplex::from_int(0, -1, ctx));
    REQUIRE(parse_complex("1.5", ctx) == BigComplex(parse_decimal("1.5", ctx),
                                                    BigFloat::from_int(0, ctx)));
    REQUIRE(parse_complex("1e-3i", ctx) ==
            BigComplex(BigFloat::from_int(0, ctx), parse_decimal("1e-3", ctx)));
    REQUIRE(parse_complex(" -1 + 0.5i ", ctx) ==
            BigComplex(BigFloat::from_int(-1, ctx), parse_decimal("0.5", ctx)));

    REQUIRE_THROWS_AS(parse_complex("", ctx), ParseError);
    REQUIRE_THROWS_AS(parse_complex("1+2j", ctx), ParseError);
}

TEST_CASE("pnorm parsing and labels") {
    REQUIRE(parse_pnorm("inf") == PNorm::inf());
    REQUIRE(parse_pnorm("1") == PNorm::one());
    REQUIRE(parse_pnorm("2") == PNorm::two());
    REQUIRE(parse_pnorm("3/2") == PNorm::rational(3, 2));
    REQUIRE(parse_pnorm("6/4") == PNorm::rational(3, 2));
    REQUIRE(PNorm::rational(3, 2).label() == "3/2");
    REQUIRE(PNorm::inf().label() == "inf");
    REQUIRE_THROWS_AS(parse_pnorm("0"), DomainError);
    REQUIRE_THROWS_AS(parse_pnorm("1/2"), DomainError);
    REQUIRE_THROWS_AS(parse_pnorm("two"), ParseError);
    REQUIRE_THROWS_AS(parse_pnorm("3/"), ParseError);
}
