#include "asymm_osc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>

namespace asymm_osc::cli {

namespace {

constexpr int kDigits = 9;

void strip_zeros(std::string& text) {
    if (text.find('.') == std::string::npos) {
        return;
    }
    while (text.back() == '0') {
        text.pop_back();
    }
    if (text.back() == '.') {
        text.pop_back();
    }
}

// Value as it will appear in the output, so CSV and JSON agree. Integral
// values are written as JSON integers.
nlohmann::json number_json(double x) {
    if (!std::isfinite(x)) {
        return nullptr;
    }
    const double r = std::stod(format_number(x));
    if (r == std::floor(r) && std::abs(r) < 1e15) {
        return static_cast<std::int64_t>(r);
    }
    return r;
}

nlohmann::json meta_json(const MetaValue& value) {
    if (const double* x = std::get_if<double>(&value)) {
        return number_json(*x);
    }
    return std::get<std::string>(value);
}

} // namespace

std::string format_number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    if (x == 0.0) {
        return "0";
    }
    char buf[64];
    const int exponent = static_cast<int>(std::floor(std::log10(std::abs(x))));
    if (exponent >= -10 && exponent < 15) {
        const int decimals = std::max(0, kDigits - 1 - exponent);
        std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
        std::string text = buf;
        strip_zeros(text);
        return text == "-0" ? "0" : text;
    }
    std::snprintf(buf, sizeof buf, "%.*e", kDigits - 1, x);
    std::string text = buf;
    const auto e = text.find('e');
    std::string mantissa = text.substr(0, e);
    strip_zeros(mantissa);
    return mantissa + text.substr(e);
}

void write_csv(const Table& table, std::ostream& out) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) {
                out << ',';
            }
            if (row[i]) {
                out << format_number(*row[i]);
            }
        }
        out << '\n';
    }
    for (const auto& [key, value] : table.metadata) {
        out << "# " << key << '=';
        if (const double* x = std::get_if<double>(&value)) {
            out << format_number(*x);
        } else {
            out << std::get<std::string>(value);
        }
        out << '\n';
    }
}

nlohmann::json to_json(const Table& table, nlohmann::json config) {
    nlohmann::json meta = nlohmann::json::object();
    for (const auto& [key, value] : table.metadata) {
        meta[key] = meta_json(value);
    }
    config["metadata"] = meta;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& cell : row) {
            r.push_back(cell ? number_json(*cell) : nlohmann::json(nullptr));
        }
        rows.push_back(std::move(r));
    }
    return {{"config", std::move(config)}, {"columns", table.columns}, {"rows", std::move(rows)}};
}

} // namespace asymm_osc::cli
