#include "trislice/cli.hpp"

#include "trislice/closedform.hpp"
#include "trislice/oracle.hpp"
#include "trislice/poly.hpp"
#include "trislice/slices.hpp"
#include "trislice/tables_io.hpp"
#include "trislice/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace trislice {

namespace {

Series cap(const Series& s, int t) { return s.trunc() > t ? s.truncated(t) : s; }

void validate(const RunConfig& cfg) {
    if (cfg.order < 0) throw std::invalid_argument("order must be >= 0");
    if (cfg.kmax < 0) throw std::invalid_argument("kmax must be >= 0");
    if (cfg.family != "general" && cfg.family != "simple")
        throw std::invalid_argument("family must be general or simple");
    if (cfg.format != "csv" && cfg.format != "json")
        throw std::invalid_argument("format must be csv or json");
    if (cfg.f_max < 0 || cfg.f_max % 2 != 0)
        throw std::invalid_argument("fmax must be even and >= 0");
}

void emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out.empty()) {
        std::cout << payload;
        return;
    }
    atomic_write(cfg.out, payload);
}

void push_table(std::vector<TableRow>& rows, const SliceFamilyTable& table, int order) {
    for (const auto& [k, s] : table.entries)
        for (int n = 0; n <= order; ++n) rows.push_back({table.family, k, n, s.coeff(n)});
}

}  // namespace

int cmd_series(const RunConfig& cfg) {
    validate(cfg);
    std::vector<TableRow> rows;
    if (cfg.family == "general") {
        GeneralFamilies gen = general_families(cfg.kmax, cfg.order);
        SliceFamilyTable tp = two_point(cfg.kmax, cfg.order);
        push_table(rows, tp, cfg.order);
        push_table(rows, gen.R, cfg.order);
        push_table(rows, gen.S, cfg.order);
        push_table(rows, gen.T, cfg.order);
    } else {
        SimpleFamilies sf = new_recursion_simple(cfg.kmax, cfg.order);
        push_table(rows, sf.r, cfg.order);
        push_table(rows, sf.t, cfg.order);
    }
    emit(cfg, cfg.format == "csv" ? rows_to_csv(rows) : rows_to_json(rows));
    return 0;
}

/* Same row set as `series --family general`, but every coefficient comes out
 * of the lambda parametrization: R_k = R_inf rho_k(lambda(g)),
 * S_k = S_inf - g R_inf^2 d_k(lambda(g)), T_k = S_k - S_0, and G_k from its
 * closed form (G_0 assembled as S_0^2 + R_1 - 1). Diffing the two outputs is
 * the closed-vs-recursion comparison at file level. */
int cmd_closed_form(const RunConfig& cfg) {
    validate(cfg);
    const int T = cfg.order;
    const int K = cfg.kmax;
    Series lam = lambda_of_g(T);
    ClosedFamilies cf = closed_families(std::max(K + 1, 2));
    Limits lim = limits(T);
    Series g1 = Series::identity(Var::g, T);
    Series one = Series::constant(Var::g, Rat(1), T);
    Series P = cap(g1 * lim.R_inf * lim.R_inf, T);

    std::vector<Series> R, S;
    for (int k = 0; k <= K; ++k) {
        R.push_back(k == 0 ? Series(Var::g, T)
                           : cap(lim.R_inf * ratfunc_expand(cf.rho(k), lam), T));
        S.push_back(cap(lim.S_inf - P * ratfunc_expand(cf.S_defect(k), lam), T));
    }
    Series R1 = K >= 1 ? R[1] : cap(lim.R_inf * ratfunc_expand(cf.rho(1), lam), T);

    std::vector<TableRow> rows;
    auto push = [&](const std::string& family, int k, const Series& s) {
        for (int n = 0; n <= T; ++n) rows.push_back({family, k, n, s.coeff(n)});
    };
    for (int k = 0; k <= K; ++k)
        push("Gk", k,
             k == 0 ? cap(S[0] * S[0] + R1 - one, T) : cap(ratfunc_expand(cf.Gk(k), lam), T));
    for (int k = 0; k <= K; ++k) push("R", k, R[k]);
    for (int k = 0; k <= K; ++k) push("S", k, S[k]);
    for (int k = 0; k <= K; ++k) push("T", k, cap(S[k] - S[0], T));

    emit(cfg, cfg.format == "csv" ? rows_to_csv(rows) : rows_to_json(rows));
    return 0;
}

// psi[m][n] on the grid m <= kmax, n <= order, from the recurrence route.
int cmd_kernel(const RunConfig& cfg) {
    validate(cfg);
    KernelTable table = htilde_by_recurrence(cfg.kmax, cfg.order);
    std::vector<TableRow> rows;
    for (int m = 0; m <= table.m_max; ++m)
        for (int n = 0; n <= table.n_max; ++n) rows.push_back({"psi", m, n, table.at(m, n)});
    emit(cfg, cfg.format == "csv" ? rows_to_csv(rows) : rows_to_json(rows));
    return 0;
}

int cmd_oracle(const RunConfig& cfg) {
    validate(cfg);
    if (cfg.f_max > kOracleFaceBound)
        throw std::invalid_argument("fmax " + std::to_string(cfg.f_max) +
                                    " exceeds the enumeration bound of " +
                                    std::to_string(kOracleFaceBound) + " faces");
    unsigned hw = std::thread::hardware_concurrency();
    int workers = std::clamp((int)hw, 1, 8);
    CountTable counted = oracle_two_point(cfg.f_max, workers);
    SliceFamilyTable tp = two_point(cfg.f_max / 2 + 1, cfg.f_max);

    std::vector<OracleRow> rows;
    bool all_match = true;
    for (int F = 2; F <= cfg.f_max; F += 2)
        for (int k = 0; k <= F / 2 + 1; ++k) {
            long long counted_val = counted.at(F, k);
            Rat series_val = tp.at(k).coeff(F);
            bool match = Rat(counted_val) == series_val;
            all_match = all_match && match;
            rows.push_back({F, k, counted_val, series_val, match});
        }
    emit(cfg, cfg.format == "csv" ? oracle_to_csv(rows) : oracle_to_json(rows));
    return all_match ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
    validate(cfg);
    VerifyOptions opt;
    opt.order = cfg.order;
    opt.k_max = std::max(cfg.kmax, 1);
    std::vector<CheckResult> report = run_all_checks(opt);
    std::vector<ReportRow> rows;
    for (const CheckResult& r : report) rows.push_back({r.name, r.pass, r.detail});
    emit(cfg, cfg.format == "csv" ? report_to_csv(rows) : report_to_json(rows));
    return all_pass(report) ? 0 : 1;
}

int run_cli(const std::vector<std::string>& args) {
    RunConfig cfg;
    CLI::App app{"exact slice-decomposition tables for random planar triangulations"};
    app.name("trislice");
    app.require_subcommand(1);

    auto add_order = [&](CLI::App* sub, const char* what) {
        sub->add_option("--order", cfg.order, what)->check(CLI::NonNegativeNumber);
    };
    auto add_kmax = [&](CLI::App* sub, const char* what) {
        sub->add_option("--kmax", cfg.kmax, what)->check(CLI::NonNegativeNumber);
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", cfg.out, "output file (default: stdout)");
    };

    CLI::App* series = app.add_subcommand("series", "slice families from the recursions");
    add_order(series, "series truncation");
    add_kmax(series, "largest distance index");
    series->add_option("--family", cfg.family, "general or simple weighting")
        ->check(CLI::IsMember({"general", "simple"}));
    add_output(series);

    CLI::App* closed = app.add_subcommand("closed-form", "the same tables from the closed forms");
    add_order(closed, "series truncation");
    add_kmax(closed, "largest distance index");
    add_output(closed);

    CLI::App* kernel = app.add_subcommand("kernel", "boundary coefficient table psi(m, n)");
    add_order(kernel, "largest column n");
    add_kmax(kernel, "largest row m");
    add_output(kernel);

    CLI::App* oracle = app.add_subcommand("oracle", "series counts against direct enumeration");
    oracle->add_option("--fmax", cfg.f_max, "largest face count (even)")
        ->check(CLI::NonNegativeNumber);
    add_output(oracle);

    CLI::App* verify = app.add_subcommand("verify", "run every consistency check");
    add_order(verify, "check truncation");
    add_kmax(verify, "largest distance index");
    add_output(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (series->parsed()) {
            cfg.command = "series";
            return cmd_series(cfg);
        }
        if (closed->parsed()) {
            cfg.command = "closed-form";
            return cmd_closed_form(cfg);
        }
        if (kernel->parsed()) {
            cfg.command = "kernel";
            return cmd_kernel(cfg);
        }
        if (oracle->parsed()) {
            cfg.command = "oracle";
            return cmd_oracle(cfg);
        }
        cfg.command = "verify";
        return cmd_verify(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace trislice
