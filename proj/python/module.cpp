#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "curveb/pipeline.hpp"

namespace py = pybind11;
using namespace curveb;

namespace {

JobConfig make_config(long precision, int order, const std::string& tol, const std::string& format,
                      unsigned long long seed, const std::optional<std::string>& shift, bool hyperelliptic,
                      const std::optional<std::pair<int, int>>& ns, const std::optional<std::string>& mutate) {
    JobConfig c;
    c.precision = precision;
    c.series_order = order;
    c.tol_exp = parse_tolerance(tol);
    c.format = format == "json" ? OutputFormat::Json : format == "latex" ? OutputFormat::Latex : OutputFormat::Plain;
    if (format != "json" && format != "latex" && format != "plain") throw InputError("unknown format '" + format + "'");
    c.seed = seed;
    c.shift_file = shift;
    c.hyperelliptic = hyperelliptic;
    c.ns = ns;
    c.mutate = mutate;
    return c;
}

py::tuple run(CommandResult (*cmd)(const std::string&, const JobConfig&), const std::string& poly, long precision,
              int order, const std::string& tol, const std::string& format, unsigned long long seed,
              const std::optional<std::string>& shift, bool hyperelliptic,
              const std::optional<std::pair<int, int>>& ns, const std::optional<std::string>& mutate) {
    CommandResult r;
    {
        py::gil_scoped_release release;
        r = cmd(poly, make_config(precision, order, tol, format, seed, shift, hyperelliptic, ns, mutate));
    }
    return py::make_tuple(r.exit_code, r.text, r.report.dump());
}

}  // namespace

PYBIND11_MODULE(_curveb, m) {
    m.doc() = "Native core of curveb";
    static py::exception<Error> error(m, "CurvebError");
    static py::exception<InputError> input_error(m, "InputError", error.ptr());
    static py::exception<IrregularCurve> irregular(m, "IrregularCurve", error.ptr());
    static py::exception<PrecisionExhausted> precision(m, "PrecisionExhausted", error.ptr());
    static py::exception<IoError> io_error(m, "IoError", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const InputError& e) {
            PyErr_SetString(input_error.ptr(), e.what());
        } catch (const IrregularCurve& e) {
            PyErr_SetString(irregular.ptr(), e.what());
        } catch (const PrecisionExhausted& e) {
            PyErr_SetString(precision.ptr(), e.what());
        } catch (const IoError& e) {
            PyErr_SetString(io_error.ptr(), e.what());
        } catch (const Error& e) {
            PyErr_SetString(error.ptr(), e.what());
        }
    });

    struct Cmd {
        const char* name;
        CommandResult (*fn)(const std::string&, const JobConfig&);
    };
    for (Cmd c : {Cmd{"info", cmd_info}, Cmd{"kernel", cmd_kernel}, Cmd{"verify", cmd_verify},
                  Cmd{"basis", cmd_basis}, Cmd{"render", cmd_render}}) {
        auto fn = c.fn;
        m.def(
            c.name,
            [fn](const std::string& poly, long precision, int order, const std::string& tol, const std::string& format,
                 unsigned long long seed, const std::optional<std::string>& shift, bool hyperelliptic,
                 const std::optional<std::pair<int, int>>& ns, const std::optional<std::string>& mutate) {
                return run(fn, poly, precision, order, tol, format, seed, shift, hyperelliptic, ns, mutate);
            },
            py::arg("poly"), py::arg("precision") = 256, py::arg("order") = 24, py::arg("tol") = "2^-80",
            py::arg("format") = "json", py::arg("seed") = 1, py::arg("shift") = py::none(),
            py::arg("hyperelliptic") = false, py::arg("ns") = py::none(), py::arg("mutate") = py::none(),
            "Returns (exit_code, text, report_json).");
    }
    m.def("canonical", [](const std::string& poly) { return to_string(parse_poly(poly)); },
          "Canonical plain form of a polynomial.");
    m.def("quad_terms", [](const std::string& text) { return quad_terms_json(parse_quad(text)).dump(); },
          "Term list [a,b,a',b',coef] of a polynomial in x, y, x', y'.");
}
