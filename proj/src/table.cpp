#include "lotterycpt/table.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include <json.hpp>

namespace lotterycpt {

namespace {

double round_to_12(double x) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                   std::chars_format::general, 12);
    double rounded = x;
    std::from_chars(buf.data(), end, rounded);
    return rounded;
}

std::string cell_text(const Cell& cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_number(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, cell);
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string format_number(double x) {
    if (!std::isfinite(x)) {
        return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    }
    const double rounded = round_to_12(x) + 0.0;
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), rounded);
    return std::string(buf.data(), end);
}

void write_csv(std::ostream& out, const Table& table) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << csv_escape(table.columns[i]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << csv_escape(cell_text(row[i]));
        }
        out << '\n';
    }
}

void write_json(std::ostream& out, const Table& table) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
            const auto& cell = row[i];
            auto& slot = obj[table.columns[i]];
            if (std::holds_alternative<std::monostate>(cell)) {
                slot = nullptr;
            } else if (auto v = std::get_if<std::int64_t>(&cell)) {
                slot = *v;
            } else if (auto d = std::get_if<double>(&cell)) {
                slot = round_to_12(*d);
            } else if (auto b = std::get_if<bool>(&cell)) {
                slot = *b;
            } else {
                slot = std::get<std::string>(cell);
            }
        }
        rows.push_back(std::move(obj));
    }
    out << rows.dump(2) << '\n';
}

}  // namespace lotterycpt
