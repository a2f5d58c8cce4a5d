#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mbgap/asymptotics.hpp"
#include "mbgap/constants.hpp"
#include "mbgap/dconst.hpp"
#include "mbgap/fredholm.hpp"
#include "mbgap/kernel.hpp"

using json = nlohmann::ordered_json;

namespace {

// Shortest decimal representation that round-trips the double bit-exactly.
std::string fmt(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

int env_threads() {
    const char* raw = std::getenv("MBGAP_THREADS");
    if (!raw) return 1;
    const int v = std::atoi(raw);
    return v > 0 ? v : 1;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + output_path);
    out << text;
}

std::string constants_text(const mbgap::ModelParams& p, bool as_json) {
    const mbgap::RhoAB lead = mbgap::leading_constants(p);
    const mbgap::RHConstants k = mbgap::rh_constants(p);
    const double c = mbgap::c_constant(p);
    const double d = mbgap::dconst::d_value(p);
    const double d1 = mbgap::dconst::d_one(p.alpha);
    const double lnC = mbgap::log_C_constant(p, d, d1);
    const std::pair<const char*, double> rows[] = {
        {"rho", lead.rho}, {"a", lead.a},       {"b", lead.b},
        {"c", c},          {"lnC", lnC},        {"c1", k.c1},
        {"c2", k.c2},      {"c3", k.c3},        {"c4", k.c4},
        {"c5", k.c5},      {"c6", k.c6},        {"c7", k.c7},
        {"c8", k.c8},      {"b2_re", k.b2.real()}, {"b2_im", k.b2.imag()},
        {"phi", k.phi},
    };
    if (as_json) {
        json j;
        j["params"] = {{"theta", p.theta}, {"alpha", p.alpha}};
        for (const auto& [name, value] : rows) j[name] = value;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "name,value\n";
    for (const auto& [name, value] : rows) out << name << "," << fmt(value) << "\n";
    return out.str();
}

std::string d_text(const mbgap::ModelParams& p, const std::string& method, bool as_json) {
    struct Row {
        std::string method;
        double value;
        double est_error;
    };
    std::vector<Row> rows;
    int pp = 0, qq = 0;
    const bool rational = mbgap::dconst::detect_rational(p.theta, 64, 1e-12, pp, qq);
    auto add_rational = [&] {
        if (!rational)
            throw std::invalid_argument("d: theta is not rational with denominator <= 64");
        rows.push_back({"rational", mbgap::dconst::d_rational(pp, qq, p.alpha), 0.0});
    };
    auto add_limit = [&] {
        const auto r = mbgap::dconst::d_limit(p);
        rows.push_back({"limit", r.value, r.error_estimate});
    };
    if (method == "auto") {
        if (rational)
            add_rational();
        else
            rows.push_back({"accelerated", mbgap::dconst::d_accelerated(p), 0.0});
    } else if (method == "rational") {
        add_rational();
    } else if (method == "limit") {
        add_limit();
    } else if (method == "accelerated") {
        rows.push_back({"accelerated", mbgap::dconst::d_accelerated(p), 0.0});
    } else if (method == "both") {
        if (rational) add_rational();
        add_limit();
    } else {
        throw std::invalid_argument("d: unknown method " + method);
    }
    if (as_json) {
        json j;
        j["params"] = {{"theta", p.theta}, {"alpha", p.alpha}};
        j["values"] = json::array();
        for (const auto& r : rows)
            j["values"].push_back(
                {{"method", r.method}, {"d", r.value}, {"est_error", r.est_error}});
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "method,d,est_error\n";
    for (const auto& r : rows)
        out << r.method << "," << fmt(r.value) << "," << fmt(r.est_error) << "\n";
    return out.str();
}

std::string kernel_text(const mbgap::ModelParams& p, double x, double y, double tol,
                        bool as_json) {
    const auto contour =
        mbgap::kernel::contour_for_range(p, std::min(x, y), std::max(x, y), tol);
    const auto rep = mbgap::kernel::kernel_point(p, contour, x, y);
    if (as_json) {
        json j;
        j["params"] = {{"theta", p.theta}, {"alpha", p.alpha}, {"x", x}, {"y", y}, {"tol", tol}};
        j["value"] = rep.value;
        j["imag_leak"] = rep.imag_leak;
        j["est_error"] = rep.est_error;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "value,imag_leak,est_error\n"
        << fmt(rep.value) << "," << fmt(rep.imag_leak) << "," << fmt(rep.est_error) << "\n";
    return out.str();
}

std::string det_text(const mbgap::ModelParams& p, double s, int m, bool as_json) {
    const auto r = mbgap::fredholm::fredholm_logdet(p, s, m);
    if (as_json) {
        json j;
        j["params"] = {{"theta", p.theta}, {"alpha", p.alpha}, {"s", s}, {"m", m}};
        j["log_det"] = r.log_det;
        j["det"] = r.det;
        j["matrix_dim"] = r.matrix_dim;
        j["est_error"] = r.est_error;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "log_det,det,matrix_dim,est_error\n"
        << fmt(r.log_det) << "," << fmt(r.det) << "," << r.matrix_dim << ","
        << fmt(r.est_error) << "\n";
    return out.str();
}

std::string compare_text(const mbgap::ModelParams& p, const std::vector<double>& s_grid,
                         int m, double tol, int fit, bool as_json) {
    auto report = mbgap::asymptotics::compare(p, s_grid, m, tol, env_threads());
    std::vector<double> fitted;
    if (fit > 0) {
        const auto base = mbgap::asymptotics::build_expansion(p);
        fitted = mbgap::asymptotics::fit_subleading(report, base, fit).subleading;
    }
    if (as_json) {
        json j;
        j["params"] = {{"theta", p.theta},
                       {"alpha", p.alpha},
                       {"m", m},
                       {"tol", tol},
                       {"contour", {{"entry_tol", 1e-10}, {"ray_angle", 3.0 * M_PI / 4.0}}}};
        j["rows"] = json::array();
        for (const auto& row : report.rows)
            j["rows"].push_back({{"s", row.s},
                                 {"logdet_num", row.numerical_logdet},
                                 {"logdet_asym", row.asymptotic_logdet},
                                 {"residual", row.residual},
                                 {"est_error", row.est_error}});
        j["residuals_decreasing"] = report.residuals_decreasing;
        if (fit > 0) j["fitted_subleading_empirical"] = fitted;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "s,logdet_num,logdet_asym,residual,est_error\n";
    for (const auto& row : report.rows)
        out << fmt(row.s) << "," << fmt(row.numerical_logdet) << ","
            << fmt(row.asymptotic_logdet) << "," << fmt(row.residual) << ","
            << fmt(row.est_error) << "\n";
    return out.str();
}

// Identity suite behind `mbgap check`: deterministic, byte-identical output.
int run_check() {
    int failures = 0;
    auto verdict = [&](const std::string& name, double err, double tol) {
        const bool ok = std::isfinite(err) && std::abs(err) <= tol;
        if (!ok) ++failures;
        std::cout << (ok ? "ok   " : "FAIL ") << name << " |err|=" << fmt(std::abs(err))
                  << " tol=" << fmt(tol) << "\n";
    };

    for (double al : {-0.5, 0.0, 1.0, 2.5}) {
        const mbgap::ModelParams p(1.0, al);
        const auto lead = mbgap::leading_constants(p);
        verdict("theta1.rho alpha=" + fmt(al), lead.rho - 0.5, 1e-11);
        verdict("theta1.a alpha=" + fmt(al), lead.a - 1.0, 1e-11);
        verdict("theta1.b alpha=" + fmt(al), lead.b - 2.0 * al, 1e-11);
        verdict("theta1.c alpha=" + fmt(al), mbgap::c_constant(p) + al * al / 4.0, 1e-11);
    }

    for (double th : {0.25, 0.5, 1.0})
        for (double al : {0.0, 0.7, 2.0}) {
            const mbgap::ModelParams p(th, al);
            const mbgap::complex recon =
                (-mbgap::mathcal_k(p) + mbgap::r1_22(p)) / mbgap::complex(0.0, 1.0);
            verdict("c.reconstruction theta=" + fmt(th) + " alpha=" + fmt(al),
                    recon.real() - mbgap::c_constant(p), 1e-12);
            const auto k = mbgap::rh_constants(p);
            const auto lead = mbgap::leading_constants(p);
            verdict("ab.identity.a theta=" + fmt(th) + " alpha=" + fmt(al),
                    k.b2.real() * k.b2.real() * (k.c1 + k.c2) / (16.0 * lead.rho) - lead.a,
                    1e-12 * std::abs(lead.a));
            verdict("ab.identity.b theta=" + fmt(th) + " alpha=" + fmt(al),
                    k.c5 * k.abs_b2 - (k.c5 + k.c6) / 2.0 * (k.abs_b2 - k.b2.imag()) -
                        lead.rho * lead.b,
                    1e-11 * (1.0 + std::abs(lead.b)));
        }

    for (double th : {0.5, 0.8})
        for (double al : {0.0, 0.7}) {
            const mbgap::ModelParams p(th, al);
            const mbgap::ModelParams q = mbgap::symmetric_params(p);
            verdict("symm.rho theta=" + fmt(th) + " alpha=" + fmt(al),
                    mbgap::leading_constants(p).rho - th * mbgap::leading_constants(q).rho,
                    1e-12);
            verdict("symm.c theta=" + fmt(th) + " alpha=" + fmt(al),
                    mbgap::c_constant(p) - th * mbgap::c_constant(q), 1e-12);
        }

    {
        const std::pair<int, int> fracs[] = {{1, 2}, {2, 3}, {1, 3}, {3, 2}};
        for (auto [pp, qq] : fracs) {
            const double th = static_cast<double>(pp) / qq;
            const auto lim = mbgap::dconst::d_limit(mbgap::ModelParams(th, 0.0));
            verdict("d.cross p/q=" + fmt(pp) + "/" + fmt(qq),
                    lim.value - mbgap::dconst::d_rational(pp, qq, 0.0), 1e-8);
        }
        verdict("d.one", mbgap::dconst::d_limit(mbgap::ModelParams(1.0, 0.7)).value -
                             mbgap::dconst::d_one(0.7),
                1e-8);
    }

    for (double x : {0.5, 1.0, 2.0}) {
        const mbgap::ModelParams p(1.0, 0.0);
        const auto contour = mbgap::kernel::contour_for_range(p, 0.5, 2.0, 1e-10);
        verdict("kernel.theta1 x=y=" + fmt(x),
                mbgap::kernel::kernel_point(p, contour, x, x).value -
                    4.0 * mbgap::kernel::bessel_kernel(0.0, 4.0 * x, 4.0 * x),
                1e-6);
    }

    {
        const mbgap::ModelParams p(0.5, 1.0);
        const auto contour = mbgap::kernel::contour_for_range(p, 0.2, 0.5, 1e-10);
        for (double x : {0.2, 0.5})
            verdict("kernel.series x=y=" + fmt(x),
                    mbgap::kernel::kernel_point(p, contour, x, x).value -
                        mbgap::kernel::kernel_series(p, x, x),
                    1e-7);
    }

    {
        const auto direct = mbgap::fredholm::fredholm_logdet(mbgap::ModelParams(1.0, 0.0), 2.0, 40);
        const auto bess = mbgap::fredholm::bessel_logdet(0.0, 8.0, 40);
        verdict("det.cross_machinery s=2", direct.log_det - bess.log_det, 1e-6);
    }

    std::cout << (failures ? "check: FAILED\n" : "check: all identities hold\n");
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hard-edge gap determinant laboratory"};
    app.require_subcommand(1);

    double theta = 1.0, alpha = 0.0, s = 1.0, x = 1.0, y = 1.0, tol = 1e-10,
           det_tol = 1e-5;
    int m = 40, fit = 0;
    std::string method = "auto", format = "csv", output_path;
    std::vector<double> s_grid;

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--theta", theta, "theta > 0")->required();
        cmd->add_option("--alpha", alpha, "alpha > -1")->required();
        cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--output", output_path, "write to file instead of stdout");
    };

    CLI::App* c_constants = app.add_subcommand("constants", "expansion and RH constants");
    add_params(c_constants);
    CLI::App* c_d = app.add_subcommand("d", "the constant d(theta, alpha)");
    add_params(c_d);
    c_d->add_option("--method", method)
        ->check(CLI::IsMember({"auto", "rational", "limit", "accelerated", "both"}));
    CLI::App* c_kernel = app.add_subcommand("kernel", "kernel value K(x, y)");
    add_params(c_kernel);
    c_kernel->add_option("--x", x)->required();
    c_kernel->add_option("--y", y)->required();
    c_kernel->add_option("--tol", tol);
    CLI::App* c_det = app.add_subcommand("det", "Fredholm determinant on [0, s]");
    add_params(c_det);
    c_det->add_option("--s", s)->required();
    c_det->add_option("--m", m);
    CLI::App* c_compare = app.add_subcommand("compare", "determinant vs asymptotics table");
    add_params(c_compare);
    c_compare->add_option("--s-grid", s_grid, "increasing s values")
        ->required()
        ->delimiter(',');
    c_compare->add_option("--m", m);
    c_compare->add_option("--tol", det_tol, "determinant tolerance");
    c_compare->add_option("--fit", fit, "fit N empirical subleading coefficients");
    CLI::App* c_check = app.add_subcommand("check", "run the identity suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_check->parsed()) return run_check();
        const mbgap::ModelParams params(theta, alpha);
        const bool as_json = format == "json";
        std::string text;
        if (c_constants->parsed())
            text = constants_text(params, as_json);
        else if (c_d->parsed())
            text = d_text(params, method, as_json);
        else if (c_kernel->parsed())
            text = kernel_text(params, x, y, tol, as_json);
        else if (c_det->parsed())
            text = det_text(params, s, m, as_json);
        else if (c_compare->parsed())
            text = compare_text(params, s_grid, m, det_tol, fit, as_json);
        emit(text, output_path);
        return 0;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    }
}
