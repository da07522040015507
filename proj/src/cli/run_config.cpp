#include "asymm_osc/cli.hpp"

#include "asymm_osc/errors.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace asymm_osc::cli {

namespace {

std::string trim(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

double parse_real(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const double x = std::strtod(value.c_str(), &end);
    if (value.empty() || *end != '\0' || errno == ERANGE || !std::isfinite(x)) {
        throw UsageError("config: " + key + " expects a real number, got '" + value + "'");
    }
    return x;
}

int parse_int(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const long x = std::strtol(value.c_str(), &end, 10);
    if (value.empty() || *end != '\0' || errno == ERANGE || x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
        throw UsageError("config: " + key + " expects an integer, got '" + value + "'");
    }
    return static_cast<int>(x);
}

void apply_pair(const std::string& key, const std::string& value, RunConfig& config) {
    if (key == "s") {
        config.s = parse_real(key, value);
    } else if (key == "omega_plus") {
        config.omega_plus = parse_real(key, value);
    } else if (key == "convention") {
        const auto conv = parse_convention(value);
        if (!conv) {
            throw UsageError("config: convention must be eq6-scale or sec4-scale, got '" + value + "'");
        }
        config.convention = *conv;
    } else if (key == "format") {
        if (value == "csv") {
            config.format = OutputFormat::csv;
        } else if (value == "json") {
            config.format = OutputFormat::json;
        } else {
            throw UsageError("config: format must be csv or json, got '" + value + "'");
        }
    } else if (key == "output") {
        config.output = value;
    } else if (key == "rel_tol") {
        config.quadrature.rel_tol = parse_real(key, value);
    } else if (key == "abs_tol") {
        config.quadrature.abs_tol = parse_real(key, value);
    } else if (key == "max_subdivisions") {
        config.quadrature.max_subdivisions = parse_int(key, value);
    } else if (key == "tail_cut") {
        if (value == "envelope") {
            config.quadrature.tail_cut.rule = TailCut::Rule::envelope;
        } else if (value == "fixed") {
            config.quadrature.tail_cut.rule = TailCut::Rule::fixed;
        } else {
            throw UsageError("config: tail_cut must be envelope or fixed, got '" + value + "'");
        }
    } else if (key == "tail_radius") {
        config.quadrature.tail_cut.radius = parse_real(key, value);
    } else {
        throw UsageError("config: unknown key '" + key + "'");
    }
}

} // namespace

void RunConfig::validate() const {
    if (!s) {
        throw UsageError("--s is required (on the command line or in the config file)");
    }
    try {
        OscillatorConfig{*s, omega_plus}.validate();
        quadrature.validate();
    } catch (const PreconditionError& e) {
        throw UsageError(e.what());
    }
    if (!(quadrature.tail_cut.radius > 0.0)) {
        throw UsageError("tail_radius must be positive");
    }
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json quad = {
        {"rel_tol", quadrature.rel_tol},
        {"abs_tol", quadrature.abs_tol},
        {"max_subdivisions", quadrature.max_subdivisions},
        {"tail_cut", quadrature.tail_cut.rule == TailCut::Rule::envelope ? "envelope" : "fixed"},
        {"tail_radius", quadrature.tail_cut.radius},
    };
    return {
        {"s", s ? nlohmann::json(*s) : nlohmann::json(nullptr)},
        {"omega_plus", omega_plus},
        {"convention", std::string(to_string(convention))},
        {"quadrature", quad},
        {"format", format == OutputFormat::csv ? "csv" : "json"},
        {"output", output.empty() ? nlohmann::json(nullptr) : nlohmann::json(output)},
    };
}

void apply_config_text(const std::string& text, RunConfig& config) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        apply_pair(trim(line.substr(0, eq)), trim(line.substr(eq + 1)), config);
    }
}

void apply_config_file(const std::filesystem::path& path, RunConfig& config) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read config file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    apply_config_text(buffer.str(), config);
}

} // namespace asymm_osc::cli
