#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "pinchuk/asymptotic.hpp"
#include "pinchuk/curve_export.hpp"
#include "pinchuk/errors.hpp"
#include "pinchuk/levelset.hpp"
#include "pinchuk/newton.hpp"
#include "pinchuk/pinchuk_map.hpp"
#include "pinchuk/polytext.hpp"
#include "pinchuk/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct CurveArgs {
    std::string s_min = "-11/5";
    std::string s_max = "11/5";
    long samples = 221;
    std::string format = "csv";
    unsigned digits = pinchuk::default_csv_digits;
    bool square = false;
    std::string out;
};

int emit(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return exit_ok;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return exit_failure;
    }
    f << text;
    return f ? exit_ok : exit_failure;
}

int cmd_verify(const std::string& suite, bool timing)
{
    pinchuk::VerificationReport r = pinchuk::run_suite(suite);
    std::cout << pinchuk::render(r, timing);
    return r.all_passed() ? exit_ok : exit_failure;
}

int cmd_curve(const CurveArgs& a)
{
    auto lo = pinchuk::parse_rational(a.s_min), hi = pinchuk::parse_rational(a.s_max);
    auto samples = pinchuk::sample_curve(lo, hi, a.samples);
    if (a.format == "csv") return emit(pinchuk::to_csv(samples, a.digits), a.out);
    pinchuk::SvgOptions o;
    o.square = a.square;
    return emit(pinchuk::to_svg(samples, o), a.out);
}

int cmd_fiber(const std::string& p, const std::string& q)
{
    pinchuk::FiberReport r = pinchuk::fiber_query(pinchuk::parse_rational(p), pinchuk::parse_rational(q));
    std::cout << pinchuk::to_string(r) << "\n";
    return r.inconclusive ? exit_failure : exit_ok;
}

int cmd_implicit()
{
    std::cout << pinchuk::to_string(pinchuk::build_implicit().B) << "\n";
    return exit_ok;
}

int cmd_newton(const std::string& which)
{
    pinchuk::PinchukMap m = which == "Qtilde" ? pinchuk::alternate_map() : pinchuk::default_map();
    const pinchuk::MultiPoly& p = which == "P" ? m.P : m.Q;
    std::cout << pinchuk::to_string(pinchuk::newton_polygon(p));
    return exit_ok;
}

int cmd_degrees()
{
    pinchuk::PinchukMap m = pinchuk::default_map(), a = pinchuk::alternate_map();
    std::cout << "P " << m.P.total_degree().to_string() << "\n"
              << "Q " << m.Q.total_degree().to_string() << "\n"
              << "Qtilde " << a.Q.total_degree().to_string() << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Pinchuk map toolkit: exact verification, curve export, fiber counts"};
    app.require_subcommand(1);

    std::string suite = "all";
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "Suite to run")->check(CLI::IsMember(pinchuk::suite_names()));
    verify->add_flag("--timing", timing, "Append elapsed milliseconds to each check");

    CurveArgs curve_args;
    auto* curve = app.add_subcommand("curve", "Sample the asymptotic curve as CSV or SVG");
    curve->add_option("s_min", curve_args.s_min, "Lower parameter bound");
    curve->add_option("s_max", curve_args.s_max, "Upper parameter bound");
    curve->add_option("samples", curve_args.samples, "Number of samples");
    curve->add_option("format", curve_args.format, "Output format")->check(CLI::IsMember({"csv", "svg"}));
    curve->add_option("--digits", curve_args.digits, "Decimal places in CSV output");
    curve->add_flag("--square", curve_args.square, "Use one scale for both SVG axes");
    curve->add_option("--out", curve_args.out, "Write to FILE instead of stdout");

    std::string fp, fq;
    auto* fiber = app.add_subcommand("fiber", "Count real preimages of (p, q)");
    fiber->add_option("p", fp, "P value")->required();
    fiber->add_option("q", fq, "Q value")->required();

    auto* implicit = app.add_subcommand("implicit", "Print the implicit equation B(P, Q)");

    std::string which;
    auto* newton = app.add_subcommand("newton", "Print Newton polygon vertices");
    newton->add_option("which", which, "Polynomial")->required()->check(CLI::IsMember({"P", "Q", "Qtilde"}));

    auto* degrees = app.add_subcommand("degrees", "Print total degrees of P, Q, Qtilde");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*verify) return cmd_verify(suite, timing);
        if (*curve) return cmd_curve(curve_args);
        if (*fiber) return cmd_fiber(fp, fq);
        if (*implicit) return cmd_implicit();
        if (*newton) return cmd_newton(which);
        if (*degrees) return cmd_degrees();
    } catch (const pinchuk::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const pinchuk::InvalidRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const pinchuk::UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}
