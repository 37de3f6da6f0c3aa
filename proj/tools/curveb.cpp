#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "curveb/pipeline.hpp"

using namespace curveb;

int main(int argc, char** argv) {
    CLI::App app{"Fundamental second-kind forms on plane curves from their Newton polygon"};
    app.require_subcommand(1);
    JobConfig cfg;
    if (const char* env = std::getenv("CURVEB_PRECISION")) {
        try {
            cfg.precision = std::stol(env);
        } catch (const std::exception&) {
            std::cerr << "error: CURVEB_PRECISION must be an integer\n";
            return 2;
        }
    }
    std::string poly, format = "plain", tol, out_file, shift, mutate;
    long precision = 0;
    std::vector<int> ns;
    bool hyper = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("poly", poly, "Laurent polynomial P(x,y)")->required();
        sub->add_option("--precision", precision, "working precision in bits");
        sub->add_option("--order", cfg.series_order, "minimum series order");
        sub->add_option("--tol", tol, "tolerance, e.g. 2^-80");
        sub->add_option("--format", format, "plain, latex or json")->check(CLI::IsMember({"plain", "latex", "json"}));
        sub->add_option("--seed", cfg.seed, "sampling seed");
        sub->add_option("-o", out_file, "write output to FILE");
    };
    auto* info = app.add_subcommand("info", "Newton polygon, punctures, singular locus and genus");
    auto* kernel = app.add_subcommand("kernel", "Q, Qtilde and the kernel template");
    auto* verify = app.add_subcommand("verify", "certify the kernel numerically");
    auto* basis = app.add_subcommand("basis", "holomorphic form basis");
    auto* render = app.add_subcommand("render", "SVG picture of the Newton polygon");
    for (auto* s : {info, kernel, verify, basis, render}) add_common(s);
    for (auto* s : {kernel, verify}) s->add_option("--shift", shift, "kappa-shift JSON file");
    kernel->add_flag("--hyperelliptic", hyper, "also emit the hyperelliptic closed form");
    kernel->add_option("--ns", ns, "also emit the (n,s) curve formula")->expected(2);
    verify->add_option("--mutate", mutate, "fault injection")->check(CLI::IsMember({"drop-term"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (precision) cfg.precision = precision;
        if (!tol.empty()) cfg.tol_exp = parse_tolerance(tol);
        cfg.format = format == "json" ? OutputFormat::Json : format == "latex" ? OutputFormat::Latex : OutputFormat::Plain;
        if (!shift.empty()) cfg.shift_file = shift;
        if (!mutate.empty()) cfg.mutate = mutate;
        cfg.hyperelliptic = hyper;
        if (!ns.empty()) cfg.ns = std::make_pair(ns[0], ns[1]);

        CommandResult r;
        if (*info) r = cmd_info(poly, cfg);
        else if (*kernel) r = cmd_kernel(poly, cfg);
        else if (*verify) r = cmd_verify(poly, cfg);
        else if (*basis) r = cmd_basis(poly, cfg);
        else r = cmd_render(poly, cfg);

        if (out_file.empty()) {
            std::cout << r.text;
            std::cout.flush();
            if (!std::cout) throw IoError("cannot write to standard output");
        } else {
            std::ofstream f(out_file);
            if (!f) throw IoError("cannot open '" + out_file + "' for writing");
            f << r.text;
            f.close();
            if (!f) throw IoError("write to '" + out_file + "' failed");
        }
        return r.exit_code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
