#include <CLI11.hpp>

#include <ehrlich/experiments.hpp>
#include <ehrlich/io.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace ehrlich;

struct SolveArgs {
    std::string experiment;
    std::string poly_path;
    std::string init_path;
    std::string aberth;
    long order = 1;
    std::string p = "inf";
    long digits = 0; // 0 = not given
    std::string stop_eps = "1e-15";
    long max_iter = 64;
    std::string out;
    std::string trajectory;
};

struct TableArgs {
    std::string experiment;
    std::string rows;
    bool extended = false;
    std::string out;
};

std::optional<long> env_default_digits() {
    const char* s = std::getenv("EHRLICH_DEFAULT_DIGITS");
    if (!s || !*s)
        return std::nullopt;
    try {
        size_t pos = 0;
        long d = std::stol(s, &pos);
        if (pos != std::string(s).size() || d < 1)
            throw std::invalid_argument("");
        return d;
    } catch (const std::exception&) {
        throw ParseError(std::string("EHRLICH_DEFAULT_DIGITS must be a positive integer, got \"") +
                         s + "\"");
    }
}

// "1..10", "1,2,30" or a single index
std::vector<long> parse_rows(const std::string& arg) {
    auto parse_long = [&](const std::string& s) -> long {
        try {
            size_t pos = 0;
            long v = std::stol(s, &pos);
            if (pos != s.size())
                throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw ParseError("bad row index \"" + s + "\" in --rows " + arg);
        }
    };
    std::vector<long> rows;
    auto dots = arg.find("..");
    if (dots != std::string::npos) {
        long lo = parse_long(arg.substr(0, dots));
        long hi = parse_long(arg.substr(dots + 2));
        if (lo > hi)
            throw ParseError("empty row range: " + arg);
        for (long r = lo; r <= hi; ++r)
            rows.push_back(r);
        return rows;
    }
    size_t start = 0;
    for (;;) {
        auto comma = arg.find(',', start);
        rows.push_back(parse_long(
            arg.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return rows;
}

void emit(const std::string& path, std::string text) {
    if (!text.empty() && text.back() != '\n')
        text += '\n';
    if (path.empty())
        std::cout << text;
    else
        write_text_file(path, text);
}

std::string summarize(const SolveReport& rep) {
    std::string s = "status=" + to_string(rep.status);
    if (rep.m)
        s += " m=" + std::to_string(*rep.m);
    if (rep.k_stop)
        s += " k=" + std::to_string(*rep.k_stop);
    if (rep.eps_k)
        s += " eps_k=" + format_scientific(*rep.eps_k, 6);
    if (rep.eps_k1)
        s += " eps_k1=" + format_scientific(*rep.eps_k1, 6);
    return s;
}

int run_solve(const SolveArgs& a) {
    SolveReport rep = [&]() -> SolveReport {
        if (!a.experiment.empty()) {
            const Experiment& exp = find_experiment(a.experiment);
            RunOptions opt;
            opt.stop_eps = a.stop_eps;
            opt.max_iter = a.max_iter;
            opt.pnorm = parse_pnorm(a.p);
            if (a.digits > 0)
                opt.digits = a.digits;
            else if (auto env = env_default_digits(); env && !exp.digits_for(a.order))
                opt.digits = env; // env replaces the 200-digit fallback, not the plan
            return run_experiment(exp, a.order, opt);
        }
        long digits = a.digits > 0 ? a.digits : env_default_digits().value_or(200);
        PrecisionContext ctx(bits_for_digits(digits));
        Polynomial f = polynomial_from_json(read_json_file(a.poly_path), ctx);
        CVec x0;
        if (!a.init_path.empty()) {
            x0 = cvec_from_json(read_json_file(a.init_path), ctx);
        } else {
            auto comma = a.aberth.rfind(',');
            if (comma == std::string::npos)
                throw ParseError("--aberth expects \"a1,r0\", got \"" + a.aberth + "\"");
            x0 = aberth_init(f.degree(), parse_complex(a.aberth.substr(0, comma), ctx),
                             parse_decimal(a.aberth.substr(comma + 1), ctx), ctx);
        }
        SolveConfig cfg;
        cfg.N = a.order;
        cfg.pnorm = parse_pnorm(a.p);
        cfg.precision_bits = bits_for_digits(digits);
        cfg.stop_eps = a.stop_eps;
        cfg.max_iter = a.max_iter;
        return solve(f, x0, cfg);
    }();

    if (!a.trajectory.empty())
        export_trajectories(rep, a.trajectory);
    if (a.out.empty()) {
        emit("", report_to_json(rep).dump(2));
    } else {
        emit(a.out, report_to_json(rep).dump(2));
        std::cout << summarize(rep) << "\n";
    }
    return rep.status == SolveStatus::Converged ? 0 : 1;
}

int run_table_cmd(const TableArgs& a) {
    const Experiment& exp = find_experiment(a.experiment);
    std::vector<long> rows;
    if (!a.rows.empty()) {
        rows = parse_rows(a.rows);
        if (!a.extended)
            for (long N : rows)
                if (std::find(exp.extended_rows.begin(), exp.extended_rows.end(), N) !=
                    exp.extended_rows.end())
                    throw DomainError("row N=" + std::to_string(N) +
                                      " is extended; pass --extended");
    } else {
        rows = exp.default_rows;
        if (a.extended)
            rows.insert(rows.end(), exp.extended_rows.begin(), exp.extended_rows.end());
    }
    auto table = run_table(exp, rows);
    emit(a.out, table_to_csv(table));
    bool ok = true;
    for (const auto& r : table)
        if (!r.error.empty()) {
            std::cerr << "row N=" << r.N << " failed: " << r.error << "\n";
            ok = false;
        }
    return ok ? 0 : 1;
}

int run_table2_cmd(const std::string& out) {
    const Experiment& exp = find_experiment("ex71");
    PrecisionContext ctx(bits_for_digits(env_default_digits().value_or(200)));
    auto iterates = first_iterates(exp.polynomial(ctx), exp.initial(ctx), 10, 2, ctx);
    emit(out, iterate_listing(iterates, 15));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simultaneous polynomial root solver with certified error bounds"};
    app.require_subcommand(1);

    SolveArgs sa;
    CLI::App* solve_cmd = app.add_subcommand("solve", "Run one solve and report the iterate trace");
    auto* exp_opt =
        solve_cmd->add_option("--experiment", sa.experiment, "Builtin experiment (ex71..ex74)");
    auto* poly_opt = solve_cmd->add_option("--poly", sa.poly_path, "Polynomial JSON file");
    auto* init_opt = solve_cmd->add_option("--init", sa.init_path, "Starting vector JSON file");
    auto* aberth_opt =
        solve_cmd->add_option("--aberth", sa.aberth, "Starting circle \"a1,r0\" (center -a1/n)");
    solve_cmd->add_option("--order", sa.order, "Family parameter N; convergence order is 2N+1")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--p", sa.p, "Norm exponent: 1, 2, inf or a fraction like 3/2");
    solve_cmd->add_option("--digits", sa.digits, "Working precision in decimal digits")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--stop-eps", sa.stop_eps, "Stop once the certified bound falls below this");
    solve_cmd->add_option("--max-iter", sa.max_iter, "Iteration cap")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--out", sa.out, "Write the JSON report here instead of stdout");
    solve_cmd->add_option("--trajectory", sa.trajectory, "Write per-iterate components as CSV");
    exp_opt->excludes(poly_opt)->excludes(init_opt)->excludes(aberth_opt);
    init_opt->excludes(aberth_opt);

    TableArgs ta;
    CLI::App* table_cmd = app.add_subcommand("table", "Run a benchmark and print its summary table");
    table_cmd->add_option("--experiment", ta.experiment, "Builtin experiment (ex71..ex74)")
        ->required();
    table_cmd->add_option("--rows", ta.rows, "Rows to run: \"1..10\", \"1,2,30\" or one index");
    table_cmd->add_flag("--extended", ta.extended, "Allow the long high-order rows");
    table_cmd->add_option("--out", ta.out, "Write the CSV here instead of stdout");

    std::string t2_out;
    CLI::App* table2_cmd =
        app.add_subcommand("table2", "List the first two N=10 iterates of ex71 to 15 decimals");
    table2_cmd->add_option("--out", t2_out, "Write the listing here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) {
            if (sa.experiment.empty() && sa.poly_path.empty())
                throw ParseError("solve needs --experiment or --poly");
            if (!sa.poly_path.empty() && sa.init_path.empty() && sa.aberth.empty())
                throw ParseError("--poly needs --init or --aberth");
            return run_solve(sa);
        }
        if (table_cmd->parsed())
            return run_table_cmd(ta);
        return run_table2_cmd(t2_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
