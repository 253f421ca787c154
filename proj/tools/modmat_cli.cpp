// Command-line front end: exact verification suites for the T_n matroid
// realizations, cusp configurations, the (s,t) point chain and the q-series
// identity engine. All report numbers are exact strings except in the
// numeric-oracle subcommand, whose output is tagged approximate.

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <thread>

#include "modmat/json_io.hpp"
#include "modmat/theta_numeric.hpp"

using namespace modmat;

namespace {

constexpr const char* kVersion = "modmat 1.0.0";

int thread_budget(int requested) {
    if (const char* env = std::getenv("MODMAT_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0 && (requested <= 0 || cap < requested)) requested = cap;
    }
    if (requested <= 0) requested = (int)std::thread::hardware_concurrency();
    return std::max(1, requested);
}

void parallel_run(std::vector<std::function<void()>>& jobs, int threads) {
    threads = std::min<int>(threads, (int)jobs.size());
    if (threads <= 1) {
        for (auto& j : jobs) j();
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                jobs[i]();
            }
        });
    for (auto& th : pool) th.join();
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-")
        std::cout << content;
    else
        write_file_atomic(out_path, content);
}

std::string report_csv(const Json& full) {
    std::string csv = "check,item,passed\n";
    for (const auto& rep : full.at("checks")) {
        std::string check = rep.at("check").get<std::string>();
        for (const auto& item : rep.at("items")) {
            csv += check + "," + item.at("name").get<std::string>() + "," +
                   (item.at("passed").get<bool>() ? "1" : "0") + "\n";
        }
    }
    return csv;
}

// ---- verify-style check suites -------------------------------------------

Report realization_suite(long n) {
    Report rep;
    rep.check = "realization";
    rep.n = n;
    Matroid3 mat = tn_matroid((int)n);
    for (long a : units_mod(n)) {
        auto r = check_realization(cusp_config(n, a), mat);
        rep.add("cusp_config(" + std::to_string(n) + "," + std::to_string(a) + ")",
                r.is_realization);
    }
    return rep;
}

Report alt_suite(long n, int qprec) {
    Report rep;
    rep.check = "alt";
    rep.n = n;
    rep.qprec = qprec;
    PsiMatrix m = psi_matrix(n, qprec);
    for (long k = 0; k < n; ++k) {
        bool excluded = false;
        for (long bad : {-3L, -2L, -1L, 0L, 1L, 2L})
            if (mod_pos(k - bad, n) == 0) excluded = true;
        if (excluded) continue;
        AkBkAlt alt = ak_bk_alt(n, k, qprec);
        bool ok = (m.rows[k][1] * alt.a_den - alt.a_num).is_zero() &&
                  (m.rows[k][2] * alt.b_den - alt.b_num).is_zero();
        rep.add("k=" + std::to_string(k), ok, "cross-multiplied");
    }
    return rep;
}

Report prop_all_suite(long n, int qprec) {
    Report rep;
    rep.check = "prop-all";
    rep.n = n;
    rep.qprec = qprec;
    for (long i = 1; i < n; ++i) {
        bool ok = false;
        std::string detail;
        try {
            ok = prop_all_solve(n, i, qprec).exact;
            detail = "exact rational combination";
        } catch (const Error& e) {
            detail = e.what();
        }
        rep.add("i=" + std::to_string(i), ok, detail);
    }
    return rep;
}

Report identity_suite(long n, int qprec) {
    Report rep;
    rep.check = "identities";
    rep.n = n;
    rep.qprec = qprec;
    LaurentTable table(n, qprec);
    // sigma route consistency
    for (long a = 1; a < n; ++a) {
        ZQSeries ld = theta_logderiv(n, a, 3, qprec);
        rep.add("sigma-route a=" + std::to_string(a),
                (ld.coeff(0) - sigma_series(n, a, qprec)).is_zero());
    }
    // Prop st, all admissible unordered triples
    for (long a = 1; a < n; ++a)
        for (long b = a; b < n; ++b) {
            long c = mod_pos(-(a + b), n);
            if (c == 0 || c < b) continue;
            auto r = verify_identity(table, IdentityKind::ST,
                                     {a, b, c});
            rep.add("st(" + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(c) + ")",
                    r.passed);
        }
    // Prop main: k-independence over all admissible (a, b, k)
    for (long a = 1; a < n; ++a)
        for (long b = 1; b < n; ++b) {
            if (a == b) continue;
            bool all_ok = true;
            int count = 0;
            for (long k = 0; k < n; ++k) {
                if (mod_pos(k - (a - b), n) == 0 || k == 0 || mod_pos(k - a, n) == 0 ||
                    mod_pos(k + b, n) == 0)
                    continue;
                all_ok &= verify_identity(table, IdentityKind::MAIN, {a, b, k}).passed;
                ++count;
            }
            rep.add("main(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")",
                    all_ok, std::to_string(count) + " values of k");
        }
    // Cors bk, ak1 over all admissible k
    for (long k = 0; k < n; ++k) {
        bool bk_ok = true, ak_ok = true, bk_adm = true, ak_adm = true;
        for (long bad : {-3L, -1L, 0L, 2L})
            if (mod_pos(k - bad, n) == 0) bk_adm = false;
        for (long bad : {-3L, -2L, 0L, 1L})
            if (mod_pos(k - bad, n) == 0) ak_adm = false;
        if (bk_adm) {
            bk_ok = verify_identity(table, IdentityKind::BK, {k}).passed;
            rep.add("bk(k=" + std::to_string(k) + ")", bk_ok);
        }
        if (ak_adm) {
            ak_ok = verify_identity(table, IdentityKind::AK1, {k}).passed;
            rep.add("ak1(k=" + std::to_string(k) + ")", ak_ok);
        }
    }
    // Prop rr through zh-order >= 3 for a fixed sample
    for (auto [a, k] : std::vector<std::pair<long, long>>{{1, 2}, {2, 3}}) {
        auto r = verify_identity(table, IdentityKind::RR, {a, k});
        rep.add("rr(a=" + std::to_string(a) + ",k=" + std::to_string(k) + ")",
                r.passed && r.zorder_checked >= 3);
    }
    return rep;
}

Report selftest_fail_report(long n) {
    Report rep;
    rep.check = "selftest-fail";
    rep.n = n;
    rep.add("injected failure", false, "testing aid for the exit-code contract");
    return rep;
}

const std::vector<std::string> kVerifyChecks = {
    "realization", "collinearity", "alt",      "chain-rows",
    "cubic",       "cusp-constant", "prop-all", "identities"};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for torsion-point matroid realizations"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string out_path = "-";
    std::string format = "json";
    int threads = 0;
    app.add_option("--out", out_path, "output path ('-' for stdout)")->capture_default_str();
    app.add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--threads", threads, "parallelism cap (MODMAT_THREADS also applies)");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run the named check suites for one level");
    verify->fallthrough();
    long v_n = 0;
    std::string v_range;
    int v_qprec = kDefaultQPrec;
    std::string v_checks = "all";
    verify->add_option("--n", v_n, "level");
    verify->add_option("--n-range", v_range, "inclusive level range, e.g. 10..14");
    verify->add_option("--qprec", v_qprec, "q-series truncation")->capture_default_str();
    verify->add_option("--checks", v_checks, "comma list or 'all'")->capture_default_str();

    // ---- psi ----
    auto* psi = app.add_subcommand("psi", "psi-matrix checks");
    psi->fallthrough();
    long p_n = 10;
    int p_qprec = kDefaultQPrec;
    std::string p_checks = "all";
    psi->add_option("--n", p_n, "level")->required();
    psi->add_option("--qprec", p_qprec, "q-series truncation")->capture_default_str();
    psi->add_option("--checks", p_checks, "collinearity,cubic,cusp,alt or all")
        ->capture_default_str();

    // ---- qseries ----
    auto* qs = app.add_subcommand("qseries", "sigma/tau/upsilon coefficient tables");
    qs->fallthrough();
    long q_n = 10, q_a = 1;
    int q_qprec = kDefaultQPrec, q_zprec = kDefaultZPrec;
    qs->add_option("--n", q_n, "level")->required();
    qs->add_option("--a", q_a, "index mod n")->required();
    qs->add_option("--qprec", q_qprec, "q-series truncation")->capture_default_str();
    qs->add_option("--zprec", q_zprec, "z-truncation of the Laurent expansion (>= 5)")
        ->capture_default_str();

    // ---- cusp ----
    auto* cusp = app.add_subcommand("cusp", "cusp and boundary configurations");
    cusp->fallthrough();
    long c_n = 10, c_a = 1, c_d = 1;
    std::string c_kind = "cusp";
    cusp->add_option("--n", c_n, "level")->required();
    cusp->add_option("--a", c_a, "unit mod n (kind=cusp)")->capture_default_str();
    cusp->add_option("--d", c_d, "unit mod n (boundary kinds)")->capture_default_str();
    cusp->add_option("--kind", c_kind, "cusp, boroczky, ceva or fourm")
        ->check(CLI::IsMember({"cusp", "boroczky", "ceva", "fourm"}))
        ->capture_default_str();

    // ---- chain ----
    auto* chain = app.add_subcommand("chain", "point chain over Q for given (s, t)");
    chain->fallthrough();
    std::string ch_s = "2", ch_t = "5", ch_range = "-4..8";
    long ch_period = 0;
    chain->add_option("--s", ch_s, "rational s")->capture_default_str();
    chain->add_option("--t", ch_t, "rational t")->capture_default_str();
    chain->add_option("--range", ch_range, "window kmin..kmax")->capture_default_str();
    chain->add_option("--periodicity", ch_period, "also emit n-periodicity residuals");

    // ---- matroid ----
    auto* mat = app.add_subcommand("matroid", "matroids and closed-form families");
    mat->fallthrough();
    long m_n = 0;
    std::string m_special, m_t;
    mat->add_option("--n", m_n, "T_n level (3..30)");
    mat->add_option("--special", m_special, "t5prime or t6prime")
        ->check(CLI::IsMember({"t5prime", "t6prime"}));
    mat->add_option("--t", m_t, "family parameter (emits the realization too)");

    // ---- numeric-oracle ----
    auto* num = app.add_subcommand("numeric-oracle",
                                   "floating-point cross-check of the exact series");
    num->fallthrough();
    long no_n = 10, no_a = 1;
    int no_qprec = 30, no_terms = 60;
    double no_tau_im = 1.1;
    num->add_option("--n", no_n, "level")->required();
    num->add_option("--a", no_a, "index mod n")->capture_default_str();
    num->add_option("--qprec", no_qprec, "series truncation")->capture_default_str();
    num->add_option("--terms", no_terms, "theta product terms")->capture_default_str();
    num->add_option("--tau-im", no_tau_im, "Im(tau)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed() || psi->parsed()) {
            int qprec = verify->parsed() ? v_qprec : p_qprec;
            std::string checks = verify->parsed() ? v_checks : p_checks;
            std::vector<long> levels;
            if (verify->parsed() && !v_range.empty()) {
                auto dots = v_range.find("..");
                if (dots == std::string::npos) {
                    std::cerr << "invalid config: --n-range must be A..B\n";
                    return 2;
                }
                long lo = std::stol(v_range.substr(0, dots));
                long hi = std::stol(v_range.substr(dots + 2));
                for (long n = lo; n <= hi; ++n) levels.push_back(n);
            } else {
                levels.push_back(verify->parsed() ? v_n : p_n);
            }
            if (levels.empty() || qprec < 5) {
                std::cerr << "invalid config: need a level and qprec >= 5\n";
                return 2;
            }
            for (long n : levels)
                if (n < 10) {
                    std::cerr << "invalid config: levels must satisfy n >= 10\n";
                    return 2;
                }
            std::vector<std::string> wanted;
            if (checks == "all") {
                wanted = verify->parsed()
                             ? kVerifyChecks
                             : std::vector<std::string>{"collinearity", "cubic", "cusp",
                                                        "alt"};
            } else {
                std::string cur;
                for (char ch : checks + ",") {
                    if (ch == ',') {
                        if (!cur.empty()) wanted.push_back(cur);
                        cur.clear();
                    } else {
                        cur += ch;
                    }
                }
            }
            // one job per (level, check); results assembled in fixed order
            std::vector<Report> reports(levels.size() * wanted.size());
            std::vector<std::function<void()>> jobs;
            for (size_t li = 0; li < levels.size(); ++li)
                for (size_t wi = 0; wi < wanted.size(); ++wi) {
                    long n = levels[li];
                    const std::string w = wanted[wi];
                    size_t slot = li * wanted.size() + wi;
                    auto make = [n, qprec, w]() -> Report {
                        if (w == "realization") return realization_suite(n);
                        if (w == "collinearity")
                            return collinearity_check(psi_matrix(n, qprec));
                        if (w == "alt") return alt_suite(n, qprec);
                        if (w == "chain-rows") return chain_row_check(psi_matrix(n, qprec));
                        if (w == "cubic") return cubic_vanishing_check(psi_matrix(n, qprec));
                        if (w == "cusp" || w == "cusp-constant")
                            return cusp_constant_check(n, qprec);
                        if (w == "prop-all") return prop_all_suite(n, qprec);
                        if (w == "identities") return identity_suite(n, qprec);
                        if (w == "selftest-fail") return selftest_fail_report(n);
                        fail("InvalidArgument", "unknown check name: " + w);
                    };
                    jobs.push_back([&reports, slot, make] { reports[slot] = make(); });
                }
            parallel_run(jobs, thread_budget(threads));
            Json out;
            out["version"] = kVersion;
            out["command"] = verify->parsed() ? "verify" : "psi";
            out["qprec"] = qprec;
            bool all_ok = true;
            Json arr = Json::array();
            for (const auto& r : reports) {
                arr.push_back(report_json(r));
                all_ok &= r.passed();
            }
            if (levels.size() == 1) out["level"] = levels[0];
            out["checks"] = arr;
            out["status"] = all_ok ? "pass" : "fail";
            emit(out_path, format == "csv" ? report_csv(out) : dump_json(out));
            return all_ok ? 0 : 1;
        }

        if (qs->parsed()) {
            LaurentData d = laurent_data(q_n, q_a, q_qprec, q_zprec);
            Json out;
            out["version"] = kVersion;
            out["command"] = "qseries";
            out["n"] = q_n;
            out["a"] = mod_pos(q_a, q_n);
            out["qprec"] = q_qprec;
            out["sigma"] = qseries_json(d.sigma);
            out["tau"] = qseries_json(d.tau);
            out["upsilon"] = qseries_json(d.upsilon);
            out["nu"] = qseries_json(d.nu);
            emit(out_path, dump_json(out));
            return 0;
        }

        if (cusp->parsed()) {
            Json out;
            out["version"] = kVersion;
            out["command"] = "cusp";
            out["n"] = c_n;
            out["kind"] = c_kind;
            RealizationReport rep;
            if (c_kind == "cusp") {
                auto cfg = cusp_config(c_n, c_a);
                rep = check_realization(cfg, tn_matroid((int)c_n));
                out["a"] = c_a;
                out["configuration"] = config_json(cfg);
            } else if (c_kind == "boroczky") {
                auto cfg = boroczky_config(c_n, c_d);
                rep = check_realization(cfg, tn_matroid((int)c_n));
                out["d"] = c_d;
                out["configuration"] = config_json(cfg);
            } else if (c_kind == "ceva") {
                auto red = ceva_config(c_n, c_d);
                rep = check_realization(red.config, tn_matroid((int)c_n));
                out["d"] = c_d;
                out["configuration"] = config_json(red.config);
                Json tr = Json::array();
                for (int i = 0; i < 3; ++i) {
                    Json row = Json::array();
                    for (int j = 0; j < 3; ++j) row.push_back(cyclotomic_json(red.transform(i, j)));
                    tr.push_back(row);
                }
                out["reduction"] = tr;
                out["target_of_label"] = red.target_of_label;
            } else {
                auto cfg = fourm_config(c_n, c_d);
                rep = check_realization(cfg, tn_matroid((int)c_n));
                out["d"] = c_d;
                out["configuration"] = config_json(cfg);
            }
            out["realization_report"] = realization_report_json(rep);
            emit(out_path, dump_json(out));
            return 0;
        }

        if (chain->parsed()) {
            auto dots = ch_range.find("..");
            if (dots == std::string::npos) {
                std::cerr << "invalid config: --range must be kmin..kmax\n";
                return 2;
            }
            int kmin = std::stoi(ch_range.substr(0, dots));
            int kmax = std::stoi(ch_range.substr(dots + 2));
            ChainParams<Rat> params{rat_from_string(ch_s), rat_from_string(ch_t)};
            auto w = chain_extend(params, kmin, kmax);
            Json out;
            out["version"] = kVersion;
            out["command"] = "chain";
            out["window"] = chain_window_json(w);
            auto f = cubic_through(params);
            Json cubic = Json::array();
            for (const Rat& cc : f.c) cubic.push_back(rat_json(cc));
            out["cubic"] = cubic;
            Json res = Json::array();
            for (int k = kmin; k <= kmax; ++k) res.push_back(rat_json(f.eval(w.at(k))));
            out["cubic_residuals"] = res;
            out["node_residual"] = rat_json(node_residual(params));
            if (ch_period >= 10) {
                Json pr = Json::array();
                for (const Rat& r : periodicity_residual(params, (int)ch_period))
                    pr.push_back(rat_json(r));
                out["periodicity_residuals"] = pr;
            }
            emit(out_path, dump_json(out));
            return 0;
        }

        if (mat->parsed()) {
            Json out;
            out["version"] = kVersion;
            out["command"] = "matroid";
            Matroid3 m3(3, {});
            if (!m_special.empty()) {
                m3 = special_matroid(m_special == "t5prime" ? SpecialMatroid::T5prime
                                                            : SpecialMatroid::T6prime);
                out["matroid"] = m_special;
            } else {
                if (m_n < 3 || m_n > 30) {
                    std::cerr << "invalid config: need 3 <= n <= 30\n";
                    return 2;
                }
                m3 = tn_matroid((int)m_n);
                out["matroid"] = "T_" + std::to_string(m_n);
            }
            out["definition"] = matroid_json(m3);
            if (!m_t.empty()) {
                Rat t = rat_from_string(m_t);
                Configuration<Rat> cfg;
                if (!m_special.empty())
                    cfg = special_family(m_special == "t5prime" ? SpecialMatroid::T5prime
                                                                : SpecialMatroid::T6prime,
                                         t);
                else
                    cfg = small_family((int)m_n, t);
                out["configuration"] = config_json(cfg);
                out["realization_report"] =
                    realization_report_json(check_realization(cfg, m3));
            }
            emit(out_path, dump_json(out));
            return 0;
        }

        if (num->parsed()) {
            const Cplx i(0.0, 1.0);
            Cplx tau(0.0, no_tau_im);
            Json out;
            out["version"] = kVersion;
            out["command"] = "numeric-oracle";
            out["approximate"] = true;
            out["n"] = no_n;
            out["a"] = no_a;
            out["tau"] = Json::array({0.0, no_tau_im});
            QSeries sig = sigma_series(no_n, no_a, no_qprec);
            Cplx series_val = qseries_eval_numeric(sig, tau);
            Cplx direct =
                theta_logderiv_numeric(Cplx((double)mod_pos(no_a, no_n) / (double)no_n, 0.0),
                                       tau, no_terms) /
                (2.0 * kPi * i);
            out["sigma_series"] = Json::array({series_val.real(), series_val.imag()});
            out["sigma_direct"] = Json::array({direct.real(), direct.imag()});
            out["sigma_abs_error"] = std::abs(series_val - direct);
            auto [p, pp] = wp_value(no_n, no_a, no_qprec);
            Cplx series_p = qseries_eval_numeric(p, tau) * std::pow(2.0 * kPi * i, 2.0);
            Cplx direct_p = wp_numeric(
                Cplx((double)mod_pos(no_a, no_n) / (double)no_n, 0.0), tau, no_terms);
            out["wp_series"] = Json::array({series_p.real(), series_p.imag()});
            out["wp_direct"] = Json::array({direct_p.real(), direct_p.imag()});
            out["wp_abs_error"] = std::abs(series_p - direct_p);
            emit(out_path, dump_json(out));
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
