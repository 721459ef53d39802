#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ehrlich/io.hpp"
#include "ehrlich/solver.hpp"

namespace ehrlich {

/// Initial points on the circle of radius r0 centered at -a1/n, at angles
/// theta_nu = pi (4 nu - 3) / (2 n), nu = 1..n. The angles are distinct
/// modulo 2 pi, so the components are distinct.
inline CVec aberth_init(long n, const BigComplex& a1, const BigFloat& r0,
                        const PrecisionContext& ctx) {
    if (n < 2)
        throw DomainError("aberth_init: need at least two points");
    if (!(r0 > 0L))
        throw DomainError("aberth_init: radius must be positive");
    BigFloat nf = BigFloat::from_int(n, ctx);
    BigComplex center(div(neg(round_to(a1.re(), ctx)), nf, ctx),
                      div(neg(round_to(a1.im(), ctx)), nf, ctx));
    BigFloat pi_v = pi(ctx);
    BigFloat two_n = BigFloat::from_int(2 * n, ctx);
    CVec x;
    x.reserve(n);
    for (long nu = 1; nu <= n; ++nu) {
        BigFloat theta =
            div(mul(pi_v, BigFloat::from_int(4 * nu - 3, ctx), ctx), two_n, ctx);
        BigComplex offset(mul(r0, cos(theta, ctx), ctx), mul(r0, sin(theta, ctx), ctx));
        x.push_back(add(center, offset, ctx));
    }
    return x;
}

struct ExplicitInit {
    std::vector<std::array<std::string, 2>> components; // [re, im] decimal strings
};

struct AberthSpec {
    std::string a1; // complex decimal, e.g. "-120" or "1+0i"
    std::string r0;
};

using InitSpec = std::variant<ExplicitInit, AberthSpec>;

/// A named benchmark problem: a polynomial, a starting vector and, per order
/// parameter N, the decimal precision its run needs. Rows listed as extended
/// reach bound exponents in the thousands and are opt-in.
struct Experiment {
    std::string name;
    long degree;
    std::vector<std::string> coeff_strings; // leading-first; empty when roots are given
    std::vector<long> int_roots;            // drives construction when nonempty
    InitSpec init;
    std::vector<long> default_rows;
    std::vector<long> extended_rows;
    std::map<long, long> precision_plan; // N -> decimal digits

    Polynomial polynomial(const PrecisionContext& ctx) const {
        if (!int_roots.empty()) {
            CVec roots;
            roots.reserve(int_roots.size());
            for (long r : int_roots)
                roots.push_back(BigComplex::from_int(r, 0, ctx));
            return from_roots(roots, BigComplex::from_int(1, 0, ctx), ctx);
        }
        CVec c;
        c.reserve(coeff_strings.size());
        for (const auto& s : coeff_strings)
            c.push_back(BigComplex(parse_decimal(s, ctx), BigFloat::from_int(0, ctx)));
        return Polynomial(std::move(c));
    }

    CVec initial(const PrecisionContext& ctx) const {
        if (const auto* ex = std::get_if<ExplicitInit>(&init)) {
            CVec x;
            x.reserve(ex->components.size());
            for (const auto& c : ex->components)
                x.push_back(BigComplex::parse(c[0], c[1], ctx));
            return x;
        }
        const auto& ab = std::get<AberthSpec>(init);
        return aberth_init(degree, parse_complex(ab.a1, ctx), parse_decimal(ab.r0, ctx), ctx);
    }

    std::optional<long> digits_for(long N) const {
        auto it = precision_plan.find(N);
        if (it == precision_plan.end())
            return std::nullopt;
        return it->second;
    }

    bool has_row(long N) const {
        for (long r : default_rows)
            if (r == N)
                return true;
        for (long r : extended_rows)
            if (r == N)
                return true;
        return false;
    }
};

/// The four stock benchmarks. Precision plans hold the decimal digits each
/// run needs so that the terminal bound eps_{k+1} stays far above the
/// rounding floor (roughly twice its exponent for the default rows).
inline const std::vector<Experiment>& builtin_experiments() {
    static const std::vector<Experiment> exps = [] {
        std::vector<Experiment> v;

        Experiment quartic;
        quartic.name = "ex71";
        quartic.degree = 4;
        quartic.coeff_strings = {"1", "0", "0", "0", "-1"};
        quartic.init = ExplicitInit{{{"0.5", "0.5"},
                                     {"-1.36", "0.42"},
                                     {"-0.25", "1.28"},
                                     {"0.46", "-1.37"}}};
        quartic.default_rows = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
        quartic.extended_rows = {100};
        quartic.precision_plan = {{1, 200},  {2, 500},  {3, 1700}, {4, 600},
                                  {5, 900},  {6, 1500}, {7, 2300}, {8, 3200},
                                  {9, 4500}, {10, 6000}, {100, 13400}};
        v.push_back(std::move(quartic));

        Experiment pent;
        pent.name = "ex72";
        pent.degree = 15;
        pent.coeff_strings.assign(16, "0");
        pent.coeff_strings[0] = "1";
        pent.coeff_strings[1] = "1";
        pent.coeff_strings[15] = "1";
        pent.init = AberthSpec{"1", "2"};
        pent.default_rows = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
        pent.extended_rows = {30};
        pent.precision_plan = {{1, 300},  {2, 300},  {3, 500},    {4, 1900},
                               {5, 600},  {6, 1300}, {7, 2600},   {8, 4600},
                               {9, 7800}, {10, 12500}, {30, 17600}};
        v.push_back(std::move(pent));

        Experiment wilkinson;
        wilkinson.name = "ex73";
        wilkinson.degree = 20;
        for (long r = 1; r <= 20; ++r)
            wilkinson.int_roots.push_back(r);
        // a1 is the z^19 coefficient -(1+...+20), centering the circle at the
        // root centroid 10.5
        wilkinson.init = AberthSpec{"-210", "20"};
        wilkinson.default_rows = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
        wilkinson.extended_rows = {30};
        wilkinson.precision_plan = {{1, 300},  {2, 600},  {3, 1400},  {4, 500},
                                    {5, 4000}, {6, 1400}, {7, 600},   {8, 1200},
                                    {9, 2200}, {10, 6100}, {30, 16100}};
        v.push_back(std::move(wilkinson));

        Experiment circ;
        circ.name = "ex74";
        circ.degree = 40;
        circ.coeff_strings.assign(41, "0");
        circ.coeff_strings[0] = "1";
        circ.coeff_strings[40] = "-1";
        circ.init = AberthSpec{"0", "2"};
        circ.default_rows = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
        circ.extended_rows = {30};
        circ.precision_plan = {{1, 200},  {2, 400},  {3, 500},   {4, 800},
                               {5, 500},  {6, 2000}, {7, 6500},  {8, 1100},
                               {9, 2700}, {10, 5700}, {30, 2500}};
        v.push_back(std::move(circ));

        return v;
    }();
    return exps;
}

inline const Experiment& find_experiment(const std::string& name) {
    for (const auto& e : builtin_experiments())
        if (e.name == name)
            return e;
    throw DomainError("unknown experiment: " + name);
}

struct RunOptions {
    std::string stop_eps = "1e-15";
    long max_iter = 64;
    std::optional<long> digits; // overrides the experiment's precision plan
    PNorm pnorm = PNorm::inf();
};

inline long planned_digits(const Experiment& exp, long N, const std::optional<long>& override_) {
    if (override_)
        return *override_;
    if (auto d = exp.digits_for(N))
        return *d;
    return 200;
}

inline SolveReport run_experiment(const Experiment& exp, long N, const RunOptions& opt = {}) {
    SolveConfig cfg;
    cfg.N = N;
    cfg.pnorm = opt.pnorm;
    cfg.precision_bits = bits_for_digits(planned_digits(exp, N, opt.digits));
    cfg.stop_eps = opt.stop_eps;
    cfg.max_iter = opt.max_iter;
    PrecisionContext ctx(cfg.precision_bits);
    return solve(exp.polynomial(ctx), exp.initial(ctx), cfg);
}

/// One summary line of a benchmark table: certification index m with its
/// E_f and bound, stopping index k with eps_k and the follow-up eps_{k+1}.
struct TableRow {
    long N;
    std::optional<long> m;
    std::optional<BigFloat> Ef_m;
    std::optional<BigFloat> eps_m;
    std::optional<long> k;
    std::optional<BigFloat> eps_k;
    std::optional<BigFloat> eps_k1;
    std::string error; // nonempty when the row failed; other fields may be unset
};

inline TableRow table_row_from_report(long N, const SolveReport& rep) {
    TableRow row{N, {}, {}, {}, {}, {}, {}, ""};
    if (rep.status != SolveStatus::Converged) {
        row.error = to_string(rep.status);
        if (rep.failure)
            row.error += ": " + describe(*rep.failure);
        return row;
    }
    row.m = rep.m;
    row.k = rep.k_stop;
    const IterateRecord& mrec = rep.trace[static_cast<size_t>(*rep.m)];
    row.Ef_m = mrec.Ef;
    row.eps_m = mrec.eps;
    row.eps_k = rep.eps_k;
    row.eps_k1 = rep.eps_k1;
    return row;
}

/// One solve per requested N. A row that throws or fails to converge gets its
/// error recorded and the remaining rows still run.
inline std::vector<TableRow> run_table(const Experiment& exp, const std::vector<long>& rows,
                                       const RunOptions& opt = {}) {
    for (long N : rows)
        if (!exp.has_row(N))
            throw DomainError("experiment " + exp.name + " has no row N=" + std::to_string(N));
    std::vector<TableRow> out;
    out.reserve(rows.size());
    for (long N : rows) {
        try {
            out.push_back(table_row_from_report(N, run_experiment(exp, N, opt)));
        } catch (const Error& e) {
            TableRow row{N, {}, {}, {}, {}, {}, {}, e.what()};
            out.push_back(std::move(row));
        }
    }
    return out;
}

namespace detail {

inline std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace detail

/// Bounds carry a mantissa with six digits after the point and an exact
/// decimal exponent; E_f is printed to six decimal places, truncated.
inline std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::string out = "N,m,Ef_m,eps_m,k,eps_k,eps_k1\n";
    for (const auto& r : rows) {
        out += std::to_string(r.N);
        if (!r.error.empty()) {
            out += ",error," + detail::csv_quote(r.error) + ",,,,\n";
            continue;
        }
        auto opt_int = [](const std::optional<long>& v) {
            return v ? std::to_string(*v) : std::string();
        };
        auto opt_sci = [](const std::optional<BigFloat>& v) {
            return v ? format_scientific(*v, 6) : std::string();
        };
        out += "," + opt_int(r.m);
        out += "," + (r.Ef_m ? format_fixed_trunc(*r.Ef_m, 6) : std::string());
        out += "," + opt_sci(r.eps_m);
        out += "," + opt_int(r.k);
        out += "," + opt_sci(r.eps_k);
        out += "," + opt_sci(r.eps_k1) + "\n";
    }
    return out;
}

/// CSV of the recorded iterates (k = 0 .. k_stop), one row per component,
/// with exact round-trip decimal coordinates.
inline std::string trajectories_csv(const SolveReport& rep) {
    if (rep.trace.empty())
        throw InsufficientTrace("trajectories_csv: report has no iterates");
    std::string out = "k,component_index,re,im\n";
    for (const auto& rec : rep.trace) {
        for (size_t i = 0; i < rec.x.size(); ++i) {
            out += std::to_string(rec.k) + "," + std::to_string(i) + "," +
                   to_decimal(rec.x[i].re()) + "," + to_decimal(rec.x[i].im()) + "\n";
        }
    }
    return out;
}

inline void export_trajectories(const SolveReport& rep, const std::string& path) {
    write_text_file(path, trajectories_csv(rep));
}

/// x^(0) .. x^(steps) under T^(N), all at ctx precision.
inline std::vector<CVec> first_iterates(const Polynomial& f, const CVec& x0, long N, long steps,
                                        const PrecisionContext& ctx) {
    std::vector<CVec> out;
    out.reserve(steps + 1);
    out.push_back(detail::round_vec(x0, ctx));
    for (long s = 0; s < steps; ++s) {
        auto st = high_order_T(f, out.back(), N, ctx);
        if (!st.in_domain)
            throw DomainError("first_iterates: " + describe(*st.failure));
        out.push_back(std::move(*st.value));
    }
    return out;
}

/// Plain-text listing "k  i  re +/- im i" with fixed decimals, components
/// numbered from 1.
inline std::string iterate_listing(const std::vector<CVec>& iterates, int decimals) {
    std::string out = "k  i  x_i\n";
    for (size_t k = 0; k < iterates.size(); ++k) {
        for (size_t i = 0; i < iterates[k].size(); ++i) {
            const BigComplex& z = iterates[k][i];
            std::string im = format_fixed(abs(z.im()), decimals);
            out += std::to_string(k) + "  " + std::to_string(i + 1) + "  " +
                   format_fixed(z.re(), decimals) + (z.im().sign() < 0 ? " - " : " + ") + im +
                   "i\n";
        }
    }
    return out;
}

} // namespace ehrlich
