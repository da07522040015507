#pragma once

#include "asymm_osc/quadrature.hpp"
#include "asymm_osc/wavefun.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace asymm_osc::cli {

// Exit codes of the command-line front-end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

// Bad flags, bad config file, violated command preconditions.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

struct RunConfig {
    std::optional<double> s;
    double omega_plus = 1.0;
    ScaleConvention convention = ScaleConvention::eq6_scale;
    QuadratureSettings quadrature{};
    OutputFormat format = OutputFormat::csv;
    std::string output; // empty: standard output

    // UsageError unless s is set, s >= 1 and omega_plus > 0.
    void validate() const;
    nlohmann::json to_json() const;
};

// Applies `key = value` lines ('#' starts a comment). Accepted keys:
// s, omega_plus, convention, format, output, rel_tol, abs_tol,
// max_subdivisions, tail_cut, tail_radius. Unknown keys raise UsageError.
void apply_config_text(const std::string& text, RunConfig& config);
void apply_config_file(const std::filesystem::path& path, RunConfig& config);

using MetaValue = std::variant<double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows; // nullopt: empty cell / null
    std::vector<std::pair<std::string, MetaValue>> metadata;
};

// 9 significant digits, fixed notation when the exponent allows it.
std::string format_number(double x);

// Header row, data rows, then '# key=value' metadata lines.
void write_csv(const Table& table, std::ostream& out);
// {config, columns, rows}; metadata is merged into config.metadata.
nlohmann::json to_json(const Table& table, nlohmann::json config);

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace asymm_osc::cli
