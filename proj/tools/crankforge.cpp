// Command-line front end: crank tables, moment series, identity verification
// suites, representation solving, quasimodular certificates and numeric
// evaluation, with CSV/JSON output.

#include <algorithm>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crankforge/io.hpp"

namespace cf = crankforge;
using nlohmann::json;

namespace {

struct RunConfig {
    long order = 200;
    long cap = 25;
    std::string format = "csv";
    unsigned long seed = 12345;
};

struct SuiteItem {
    std::string name;
    bool pass;
    std::string detail;
};

class SuiteReport {
  public:
    explicit SuiteReport(std::string suite) : suite_(std::move(suite)) {}

    void add(std::string name, bool pass, std::string detail = "") {
        items_.push_back({std::move(name), pass, std::move(detail)});
        all_pass_ = all_pass_ && items_.back().pass;
    }

    bool all_pass() const { return all_pass_; }

    int emit(const RunConfig& cfg) const {
        json j{{"schema", cf::kSchemaVersion}, {"suite", suite_}, {"seed", cfg.seed}};
        json items = json::array();
        for (const auto& item : items_) {
            json ji{{"name", item.name}, {"pass", item.pass}};
            if (!item.detail.empty()) ji["detail"] = item.detail;
            items.push_back(std::move(ji));
        }
        j["items"] = std::move(items);
        j["pass"] = all_pass_;
        std::cout << j.dump(2) << "\n";
        return all_pass_ ? 0 : 1;
    }

  private:
    std::string suite_;
    std::vector<SuiteItem> items_;
    bool all_pass_ = true;
};

std::string q_str(const cf::Rational& r) { return cf::rational_to_string(r); }

cf::CrankTable guarded_bruteforce(long k, long n, const RunConfig& cfg, cf::CrankConvention conv) {
    if (n > cfg.cap) throw cf::EnumerationBudgetExceeded(n, cfg.cap);
    return cf::crank_table_bruteforce(k, n, conv);
}

// ----- verify suites ---------------------------------------------------------

void suite_dyson(SuiteReport& report, long n_max, const RunConfig& cfg) {
    const cf::Series m2 = cf::crank_series(n_max).moment(2);
    const cf::Series p = cf::partition_gf(n_max);
    bool ok = true;
    long first_bad = -1;
    for (long n = 0; n <= n_max; ++n)
        if (m2[n] != p[n] * cf::Rational(2 * n)) {
            ok = false;
            first_bad = n;
            break;
        }
    report.add("M2(n) = 2n p(n), series route, n <= " + std::to_string(n_max), ok,
               ok ? "" : "first failing n = " + std::to_string(first_bad));

    const long enum_max = std::min<long>(15, cfg.cap);
    const cf::CrankTable table = cf::ordinary_crank_table_bruteforce(enum_max);
    ok = true;
    for (long n = 0; n <= enum_max && ok; ++n)
        ok = cf::Rational(table.moment(2, n)) == p[n] * cf::Rational(2 * n);
    report.add("M2(n) = 2n p(n), corrected enumeration, n <= " + std::to_string(enum_max), ok);
}

void suite_chern(SuiteReport& report, long k_max, long n_max, const RunConfig& cfg) {
    n_max = std::min(n_max, cfg.cap);
    for (long k = 1; k <= k_max; ++k) {
        const cf::Series m2 = cf::moment_series(k, 2, n_max).series;
        bool ok = true;
        std::string detail;
        for (long n = 0; n <= n_max; ++n) {
            const cf::Rational expected = -m2[n] / 2;
            const long got = cf::omega_weighted_crank_sum(k, n);
            if (cf::Rational(got) != expected) {
                ok = false;
                detail = "n = " + std::to_string(n) + ": weighted sum " + std::to_string(got) +
                         " != " + q_str(expected);
                break;
            }
        }
        report.add("sum omega_k * crank = -M2[k](n)/2, k = " + std::to_string(k) +
                       ", n <= " + std::to_string(n_max),
                   ok, detail);
    }
}

void suite_nov(SuiteReport& report, long k_max, long n_max, const RunConfig& cfg) {
    n_max = std::min(n_max, cfg.cap);
    for (long k = 1; k <= k_max; ++k) {
        const cf::Series m2 = cf::moment_series(k, 2, n_max).series;
        bool ok = true;
        std::string detail;
        for (long n = 0; n <= n_max; ++n) {
            const cf::Rational rhs = m2[n] * cf::make_rational(k, 2);
            const long lhs = cf::nov(k, n);
            if (cf::Rational(lhs) != rhs) {
                ok = false;
                detail = "n = " + std::to_string(n) + ": nov = " + std::to_string(lhs) +
                         ", (k/2) M2 = " + q_str(rhs);
                break;
            }
            if (k == 2 && n == 3)
                detail = "nov_2(3) = " + std::to_string(lhs) + " = (2/2) M2[2](3) = " + q_str(rhs);
        }
        report.add("nov_k(n) = (k/2) M2[k](n), k = " + std::to_string(k) + ", n <= " +
                       std::to_string(n_max),
                   ok, detail);
    }
}

void suite_ov(SuiteReport& report, long k_max, long n_max, const RunConfig& cfg) {
    n_max = std::min(n_max, cfg.cap);
    for (long k = 1; k <= k_max; ++k) {
        bool lemma_ok = true, cor_ok = true;
        const cf::Series m2k = cf::moment_series(k, 2, n_max).series;
        const cf::Series m22k = cf::moment_series(2 * k, 2, n_max).series;
        for (long n = 0; n <= n_max; ++n) {
            const long o = cf::ov(k, n);
            lemma_ok = lemma_ok && o == cf::nov(k, n) - cf::nov(2 * k, n);
            cor_ok = cor_ok &&
                     cf::Rational(o) == m2k[n] * cf::make_rational(k, 2) - m22k[n] * cf::Rational(k);
        }
        report.add("ov_k = nov_k - nov_2k, k = " + std::to_string(k), lemma_ok);
        report.add("ov_k = (k/2) M2[k] - k M2[2k], k = " + std::to_string(k), cor_ok);
    }
}

void suite_ramanujan(SuiteReport& report, const std::vector<long>& cases) {
    const long n_max = *std::max_element(cases.begin(), cases.end());
    const cf::CrankTable table = cf::table_from_zseries(cf::crank_series(n_max), 1, n_max);
    const cf::Series p = cf::partition_gf(n_max);
    for (long n : cases) {
        std::array<long, 11> sums{};
        for (const auto& [m, c] : table.counts[static_cast<std::size_t>(n)])
            sums[static_cast<std::size_t>(((m % 11) + 11) % 11)] += c;
        const bool equal = std::all_of(sums.begin(), sums.end(),
                                       [&](long s) { return s == sums[0]; });
        const bool matches_p = cf::Rational(11 * sums[0]) == p[n];
        report.add("crank equidistribution mod 11 at n = " + std::to_string(n), equal && matches_p,
                   "class size " + std::to_string(sums[0]) + ", p(n) = " + q_str(p[n]));
    }
}

void suite_e2_derivative(SuiteReport& report, long order) {
    report.add("delta_q(E2) = (E2^2 - E4)/12 through order " + std::to_string(order),
               cf::verify_e2_derivative(order));
}

void suite_pbar_derivative(SuiteReport& report, long order) {
    const cf::Series pbar = cf::overpartition_gf(order);
    const cf::Series lhs = cf::delta_q(pbar);
    const cf::Series rhs =
        pbar * (cf::phi(1, 1, order) - cf::phi(1, 2, order)) * cf::Rational(2);
    const auto bad = cf::first_mismatch(lhs, rhs);
    report.add("delta_q(Pbar) = 2 Pbar (Phi1(q) - Phi1(q^2)) through order " + std::to_string(order),
               !bad.has_value(), bad ? "first failing order " + std::to_string(*bad) : "");
}

void suite_rep(SuiteReport& report, long k_max, long j_max, long order) {
    for (long k = 1; k <= k_max; ++k)
        for (long j = 1; j <= j_max; ++j) {
            std::string detail;
            bool ok = true;
            try {
                const cf::Representation rep = cf::find_representation(k, j, order);
                std::ostringstream os;
                for (const auto& [exps, alpha] : rep.alpha) os << alpha.get_str() << " ";
                detail = "alpha = [ " + os.str() + "], residual order " +
                         std::to_string(rep.residual_order);
                if (j == 1) ok = rep.alpha.size() == 1 && rep.alpha[0].second == 1;
            } catch (const std::exception& e) {
                ok = false;
                detail = e.what();
            }
            report.add("integer representation of moment 2j, k = " + std::to_string(k) +
                           ", j = " + std::to_string(j),
                       ok, detail);
        }
}

void suite_quasimod(SuiteReport& report, long k_max, long l_max, long order) {
    for (long k = 1; k <= k_max; ++k)
        for (long l = 1; l <= l_max; ++l)
            for (long j = 1; j <= l; ++j)
                for (long m = 0; j + m <= l; ++m) {
                    std::string name = "certificate k=" + std::to_string(k) + " j=" +
                                       std::to_string(j) + " m=" + std::to_string(m) +
                                       " l=" + std::to_string(l);
                    try {
                        const cf::MembershipCertificate cert = cf::certify_membership(k, j, m, l, order);
                        const cf::Series target =
                            cf::delta_q_pow(cf::moment_series(k, 2 * j, order).series,
                                            static_cast<unsigned long>(m)) *
                            cf::overpartition_gf(order).inverse();
                        const auto bad = cert.first_mismatch_with(target, order);
                        const bool zero_const = cert.constant_term() == 0;
                        report.add(name, !bad.has_value() && zero_const,
                                   "residual order " + std::to_string(cert.residual_order));
                    } catch (const std::exception& e) {
                        report.add(name, false, e.what());
                    }
                }
}

void suite_lifting(SuiteReport& report, long order) {
    const cf::Series e4 = cf::eisenstein(4, 1, order);
    const cf::Series e6 = cf::eisenstein(6, 1, order);
    report.add("12 delta_q(E4) - 4 E2 E4 = -4 E6",
               cf::serre_derivative(e4, 2) == e6 * cf::Rational(-4));
    report.add("12 delta_q(E6) - 6 E2 E6 = -6 E4^2",
               cf::serre_derivative(e6, 3) == e4 * e4 * cf::Rational(-6));
    report.add("12 delta_q(1) - 0 = 0", cf::serre_derivative(cf::Series::one(order), 0).is_zero());

    for (long level : {1L, 2L})
        for (long l = 1; l <= 2; ++l) {
            bool ok = true;
            std::string detail;
            const auto span_next = cf::spanning_set(level, l + 1);
            for (const cf::QMonomial& mono : cf::spanning_set(level, l)) {
                const cf::Series target = cf::delta_q(mono.expand(order));
                const cf::SolveResult res = cf::solve_in_span(target, span_next, order);
                if (std::holds_alternative<cf::SolveFailure>(res)) {
                    ok = false;
                    detail = mono.name() + " fails at order " +
                             std::to_string(std::get<cf::SolveFailure>(res).first_failing_order);
                    break;
                }
            }
            report.add("delta_q closure, level " + std::to_string(level) + ", weight bound " +
                           std::to_string(2 * l) + " -> " + std::to_string(2 * (l + 1)),
                       ok, detail);
        }
}

void suite_euler(SuiteReport& report, long max_weight) {
    for (long k : {1L, 2L, 3L}) {
        long checked = 0;
        bool ok = true;
        for (long n = 0; n <= max_weight && ok; ++n)
            cf::for_each_partition(n, [&](const cf::Partition& p) {
                if (!ok) return;
                // Domain: distinct parts, all divisible by k.
                for (std::size_t i = 0; i < p.parts.size(); ++i) {
                    if (p.parts[i] % k != 0) return;
                    if (i + 1 < p.parts.size() && p.parts[i] == p.parts[i + 1]) return;
                }
                const cf::Partition image = cf::euler_dilation(p, k, cf::DilationDirection::Forward);
                for (long part : image.parts)
                    if (part % k != 0 || (part / k) % 2 == 0) ok = false;
                if (image.weight() != p.weight()) ok = false;
                if (!(cf::euler_dilation(image, k, cf::DilationDirection::Inverse) == p)) ok = false;
                ++checked;
            });
        report.add("euler dilation round-trip, k = " + std::to_string(k) + ", weight <= " +
                       std::to_string(max_weight),
                   ok, std::to_string(checked) + " partitions checked");
    }
}

void suite_numeric(SuiteReport& report, const RunConfig& cfg, long anomaly_samples,
                   long gamma_samples) {
    cf::TransformSampler sampler(cfg.seed);
    const double tol = 1e-9;
    const long order = cfg.order;

    bool ok = true;
    for (long i = 0; i < anomaly_samples && ok; ++i)
        ok = cf::check_e2_anomaly(sampler.sample_tau(), order, tol).pass;
    report.add("E2 anomaly at " + std::to_string(anomaly_samples) + " sampled tau", ok);

    report.add("E2 anomaly negative control (term dropped)",
               !cf::check_e2_anomaly(cf::HalfPlanePoint({0.0, 2.0}), order, tol, true).pass);

    const cf::Series e4 = cf::eisenstein(4, 1, order);
    const cf::Series e6 = cf::eisenstein(6, 1, order);
    ok = true;
    for (long i = 0; i < gamma_samples && ok; ++i) {
        const auto [gamma, tau] = sampler.sample_check_point(1);
        ok = cf::check_modularity(e4, 4, 1, gamma, tau, tol).pass &&
             cf::check_modularity(e6, 6, 1, gamma, tau, tol).pass;
    }
    report.add("E4/E6 modularity on " + std::to_string(gamma_samples) + " sampled gamma", ok);

    ok = true;
    for (long d : {2L, 3L, 4L}) {
        const cf::Series e4d = cf::substitute_power(e4, d);
        for (long i = 0; i < 5 && ok; ++i) {
            const auto [gamma, tau] = sampler.sample_check_point(d);
            ok = cf::check_modularity(e4d, 4, d, gamma, tau, tol).pass;
        }
    }
    report.add("level-raised E4(q^d) on Gamma_0(d), d <= 4", ok);

    // gamma outside Gamma_0(2) must be detectable on E4(q^2).
    const cf::GammaElement s(0, -1, 1, 0);
    const cf::TransformReport neg = cf::check_modularity(
        cf::substitute_power(e4, 2), 4, 1, s, cf::HalfPlanePoint({0.0, 1.5}), tol);
    report.add("modularity negative control (gamma outside the level group)", !neg.pass,
               "defect " + std::to_string(neg.defect));
}

// ----- subcommand payloads ---------------------------------------------------

int run_table(long k, long n, const std::string& source, bool raw, const RunConfig& cfg) {
    if (raw && source != "brute")
        throw CLI::ValidationError("--raw", "raw statistics are available from --source brute only");
    const cf::CrankConvention conv =
        raw ? cf::CrankConvention::Raw : cf::CrankConvention::GeneratingFunction;
    if (source == "brute" || source == "both") {
        const cf::CrankTable brute = guarded_bruteforce(k, n, cfg, conv);
        if (source == "both") {
            const cf::CrankTable series = cf::crank_table_from_series(k, n);
            const auto diff = cf::diff_tables(brute, series);
            if (!diff.empty()) {
                std::cerr << "mismatch between brute-force and series tables:\n";
                for (const auto& d : diff)
                    std::cerr << "  n=" << d.n << " m=" << d.m << " brute=" << d.lhs
                              << " series=" << d.rhs << "\n";
                return 1;
            }
        }
        if (cfg.format == "json")
            std::cout << cf::to_json(brute).dump(2) << "\n";
        else
            cf::write_table_csv(std::cout, brute);
        return 0;
    }
    const cf::CrankTable table = cf::crank_table_from_series(k, n);
    if (cfg.format == "json")
        std::cout << cf::to_json(table).dump(2) << "\n";
    else
        cf::write_table_csv(std::cout, table);
    return 0;
}

std::vector<long> parse_cases(const std::string& csv) {
    std::vector<long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    if (out.empty()) throw CLI::ValidationError("--cases", "needs at least one value");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series toolkit for overpartition crank statistics"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--order", cfg.order, "default truncation order")
        ->envname("CRANKFORGE_ORDER")
        ->check(CLI::PositiveNumber);
    app.add_option("--cap", cfg.cap, "brute-force enumeration cap")->check(CLI::Range(0, 40));
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", cfg.seed, "seed for randomized suites");

    // table
    auto* table_cmd = app.add_subcommand("table", "emit a residual crank table");
    table_cmd->fallthrough();
    long table_k = 1, table_n = 10;
    std::string table_source = "series";
    bool table_raw = false;
    table_cmd->add_option("--k", table_k)->check(CLI::PositiveNumber);
    table_cmd->add_option("--n", table_n)->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--source", table_source)->check(CLI::IsMember({"brute", "series", "both"}));
    table_cmd->add_flag("--raw", table_raw, "raw crank statistic (brute force only)");

    // moments
    auto* moments_cmd = app.add_subcommand("moments", "emit a crank moment series");
    moments_cmd->fallthrough();
    long mom_k = 1, mom_ell = 2, mom_n = 25;
    bool mom_positive = false;
    moments_cmd->add_option("--k", mom_k)->check(CLI::PositiveNumber);
    moments_cmd->add_option("--ell", mom_ell)->check(CLI::NonNegativeNumber);
    moments_cmd->add_option("--n", mom_n)->check(CLI::NonNegativeNumber);
    moments_cmd->add_flag("--positive", mom_positive, "one-sided moment over m >= 1");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run an identity verification suite");
    verify_cmd->fallthrough();
    std::string suite;
    long v_k = 0, v_j = -1, v_m = -1, v_l = 0, v_n = 0, v_samples = 0;
    std::string v_cases = "6,17,28";
    verify_cmd->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"dyson", "chern", "nov", "ov", "ramanujan", "e2-derivative",
                               "pbar-derivative", "rep", "quasimod", "lifting", "euler", "numeric",
                               "all"}));
    verify_cmd->add_option("--k", v_k);
    verify_cmd->add_option("--j", v_j);
    verify_cmd->add_option("--m", v_m);
    verify_cmd->add_option("--l", v_l);
    verify_cmd->add_option("--n", v_n);
    verify_cmd->add_option("--samples", v_samples);
    verify_cmd->add_option("--cases", v_cases, "comma-separated weights");

    // represent
    auto* rep_cmd = app.add_subcommand("represent", "solve the integer moment representation");
    rep_cmd->fallthrough();
    long rep_k = 1, rep_j = 1;
    rep_cmd->add_option("--k", rep_k)->check(CLI::PositiveNumber);
    rep_cmd->add_option("--j", rep_j)->check(CLI::PositiveNumber);

    // certify
    auto* cert_cmd = app.add_subcommand("certify", "produce a quasimodular membership certificate");
    cert_cmd->fallthrough();
    long cert_k = 1, cert_j = 1, cert_m = 0, cert_l = 1;
    bool cert_phi = false;
    cert_cmd->add_option("--k", cert_k)->check(CLI::PositiveNumber);
    cert_cmd->add_option("--j", cert_j)->check(CLI::PositiveNumber);
    cert_cmd->add_option("--m", cert_m)->check(CLI::NonNegativeNumber);
    cert_cmd->add_option("--l", cert_l)->check(CLI::PositiveNumber);
    cert_cmd->add_flag("--include-phi", cert_phi, "add Phi generators to the spanning set");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a series at a half-plane point");
    eval_cmd->fallthrough();
    std::string eval_series_name = "E2", eval_tau = "0,1", eval_gamma;
    long eval_weight = 0, eval_level = 1;
    double eval_tol = 1e-9;
    bool eval_anomaly = false;
    eval_cmd->add_option("--series", eval_series_name,
                         "one of E2,E4,E6,E8,P,Pbar,Phi1,Phi3,Phi5");
    eval_cmd->add_option("--tau", eval_tau, "re,im");
    eval_cmd->add_flag("--anomaly", eval_anomaly, "check the E2 transformation anomaly at tau");
    eval_cmd->add_option("--gamma", eval_gamma, "a,b,c,d for a modularity check");
    eval_cmd->add_option("--weight", eval_weight, "transformation weight for --gamma");
    eval_cmd->add_option("--level", eval_level, "level for --gamma");
    eval_cmd->add_option("--tol", eval_tol);

    // scan-inequality
    auto* scan_cmd = app.add_subcommand("scan-inequality", "scan d*M[dk]_ell(n) <= M[k]_ell(n)");
    scan_cmd->fallthrough();
    long scan_d = 2, scan_k = 1, scan_ell = 2, scan_n = 25;
    scan_cmd->add_option("--d", scan_d)->check(CLI::PositiveNumber);
    scan_cmd->add_option("--k", scan_k)->check(CLI::PositiveNumber);
    scan_cmd->add_option("--ell", scan_ell)->check(CLI::NonNegativeNumber);
    scan_cmd->add_option("--n", scan_n)->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (table_cmd->parsed()) return run_table(table_k, table_n, table_source, table_raw, cfg);

        if (moments_cmd->parsed()) {
            const cf::MomentSeries m = mom_positive ? cf::positive_moment(mom_k, mom_ell, mom_n)
                                                    : cf::moment_series(mom_k, mom_ell, mom_n);
            if (cfg.format == "json")
                std::cout << cf::to_json(m).dump(2) << "\n";
            else
                cf::write_moments_csv(std::cout, m);
            return 0;
        }

        if (verify_cmd->parsed()) {
            SuiteReport report(suite);
            const bool order_given = app.count("--order") > 0;
            const auto order_or = [&](long fallback) { return order_given ? cfg.order : fallback; };
            if (suite == "dyson" || suite == "all") suite_dyson(report, v_n > 0 ? v_n : 40, cfg);
            if (suite == "chern" || suite == "all")
                suite_chern(report, v_k > 0 ? v_k : 3, v_n > 0 ? v_n : 20, cfg);
            if (suite == "nov" || suite == "all")
                suite_nov(report, v_k > 0 ? v_k : 4, v_n > 0 ? v_n : 25, cfg);
            if (suite == "ov" || suite == "all")
                suite_ov(report, v_k > 0 ? v_k : 3, v_n > 0 ? v_n : 25, cfg);
            if (suite == "ramanujan" || suite == "all") suite_ramanujan(report, parse_cases(v_cases));
            if (suite == "e2-derivative" || suite == "all")
                suite_e2_derivative(report, order_or(500));
            if (suite == "pbar-derivative" || suite == "all")
                suite_pbar_derivative(report, order_or(500));
            if (suite == "rep" || suite == "all")
                suite_rep(report, v_k > 0 ? v_k : 3, v_j > 0 ? v_j : 3, order_or(cfg.order));
            if (suite == "quasimod") {
                if (v_k > 0 && v_j > 0 && v_m >= 0 && v_l > 0) {
                    // Single-instance certificate request.
                    try {
                        const cf::MembershipCertificate cert =
                            cf::certify_membership(v_k, v_j, v_m, v_l, order_or(cfg.order));
                        std::cout << cf::to_json(cert).dump(2) << "\n";
                        return 0;
                    } catch (const cf::NoSolutionWithinTruncation& e) {
                        std::cout << json{{"schema", cf::kSchemaVersion},
                                          {"pass", false},
                                          {"first_failing_order", e.first_failing_order}}
                                         .dump(2)
                                  << "\n";
                        return 1;
                    }
                }
                suite_quasimod(report, v_k > 0 ? v_k : 3, v_l > 0 ? v_l : 2, order_or(cfg.order));
            }
            if (suite == "all") suite_quasimod(report, 3, 2, order_or(cfg.order));
            if (suite == "lifting" || suite == "all") suite_lifting(report, order_or(cfg.order));
            if (suite == "euler" || suite == "all") suite_euler(report, v_n > 0 ? v_n : 30);
            if (suite == "numeric" || suite == "all")
                suite_numeric(report, cfg, v_samples > 0 ? v_samples : 10,
                              v_samples > 0 ? v_samples : 20);
            return report.emit(cfg);
        }

        if (rep_cmd->parsed()) {
            const cf::Representation rep =
                cf::find_representation(rep_k, rep_j, cfg.order);
            std::cout << cf::to_json(rep).dump(2) << "\n";
            return 0;
        }

        if (cert_cmd->parsed()) {
            if (cert_j + cert_m > cert_l) {
                std::cerr << "usage error: certify requires j + m <= l\n";
                return 2;
            }
            const cf::MembershipCertificate cert =
                cf::certify_membership(cert_k, cert_j, cert_m, cert_l, cfg.order, cert_phi);
            std::cout << cf::to_json(cert).dump(2) << "\n";
            return 0;
        }

        if (eval_cmd->parsed()) {
            double re = 0, im = 1;
            if (std::sscanf(eval_tau.c_str(), "%lf,%lf", &re, &im) != 2)
                throw CLI::ValidationError("--tau", "expected re,im");
            const cf::HalfPlanePoint point({re, im});
            const long order = cfg.order;
            cf::Series s = [&]() -> cf::Series {
                if (eval_series_name == "E2") return cf::eisenstein(2, 1, order);
                if (eval_series_name == "E4") return cf::eisenstein(4, 1, order);
                if (eval_series_name == "E6") return cf::eisenstein(6, 1, order);
                if (eval_series_name == "E8") return cf::eisenstein(8, 1, order);
                if (eval_series_name == "P") return cf::partition_gf(order);
                if (eval_series_name == "Pbar") return cf::overpartition_gf(order);
                if (eval_series_name == "Phi1") return cf::phi(1, 1, order);
                if (eval_series_name == "Phi3") return cf::phi(3, 1, order);
                if (eval_series_name == "Phi5") return cf::phi(5, 1, order);
                throw CLI::ValidationError("--series", "unknown series name");
            }();

            json out{{"schema", cf::kSchemaVersion},
                     {"series", eval_series_name},
                     {"tau", {re, im}},
                     {"order", order}};
            if (eval_anomaly) {
                out["anomaly"] = cf::to_json(cf::check_e2_anomaly(point, order, eval_tol));
            } else if (!eval_gamma.empty()) {
                long a, b, c, d;
                if (std::sscanf(eval_gamma.c_str(), "%ld,%ld,%ld,%ld", &a, &b, &c, &d) != 4)
                    throw CLI::ValidationError("--gamma", "expected a,b,c,d");
                out["modularity"] = cf::to_json(cf::check_modularity(
                    s, eval_weight > 0 ? eval_weight : 4, eval_level, {a, b, c, d}, point, eval_tol));
            } else {
                const cf::Complex value = cf::eval_series(s, point);
                out["value"] = {value.real(), value.imag()};
            }
            std::cout << out.dump(2) << "\n";
            if (out.contains("anomaly") && !out["anomaly"]["pass"].get<bool>()) return 1;
            if (out.contains("modularity") && !out["modularity"]["pass"].get<bool>()) return 1;
            return 0;
        }

        if (scan_cmd->parsed()) {
            const cf::InequalityScanReport report =
                cf::scan_moment_inequality(scan_d, scan_k, scan_ell, scan_n);
            std::cout << cf::to_json(report).dump(2) << "\n";
            return report.all_hold ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
