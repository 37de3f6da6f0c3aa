#pragma once
#include <optional>
#include <string>
#include <utility>

#include "curveb/render.hpp"
#include "curveb/verify.hpp"

namespace curveb {

enum class OutputFormat { Plain, Latex, Json };

struct JobConfig {
    mpfr_prec_t precision = 256;
    int series_order = 24;
    long tol_exp = -80;
    OutputFormat format = OutputFormat::Plain;
    unsigned long long seed = 1;
    std::optional<std::string> shift_file;
    bool hyperelliptic = false;
    std::optional<std::pair<int, int>> ns;
    std::optional<std::string> mutate;  // only "drop-term"
    void validate() const;
    CheckConfig check_config() const;
};

// Text is what the CLI prints; report is the JSON document behind it.
struct CommandResult {
    int exit_code = 0;
    std::string text;
    json report;
};

CommandResult cmd_info(const std::string& poly_text, const JobConfig& cfg);
CommandResult cmd_kernel(const std::string& poly_text, const JobConfig& cfg);
CommandResult cmd_verify(const std::string& poly_text, const JobConfig& cfg);
CommandResult cmd_basis(const std::string& poly_text, const JobConfig& cfg);
CommandResult cmd_render(const std::string& poly_text, const JobConfig& cfg);

// Parses "2^-K", "2^K" or a positive decimal into a base-2 exponent (rounded down).
long parse_tolerance(const std::string& text);
KappaShift<ParamPoly> load_kappa_file(const std::string& path);
KappaShift<ParamPoly> parse_kappa_json(const std::string& text);

}  // namespace curveb
