#include "deltazeta/table.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include <json.hpp>

namespace deltazeta::cli {

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

}  // namespace

std::string format_double(double v)
{
    std::array<char, 40> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::scientific, 16);
    return std::string(buf.data(), res.ptr);
}

void write_csv(const Table& t, std::ostream& out)
{
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_field(t.columns[i]);
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            std::visit(
                [&](const auto& v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, double>)
                        out << format_double(v);
                    else if constexpr (std::is_same_v<V, long>)
                        out << v;
                    else
                        out << csv_field(v);
                },
                row[i]);
        }
        out << '\n';
    }
}

void write_json(const Table& t, std::ostream& out)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
            std::visit(
                [&](const auto& v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, double>) {
                        if (std::isfinite(v))
                            obj[t.columns[i]] = v;
                        else
                            obj[t.columns[i]] = format_double(v);
                    } else {
                        obj[t.columns[i]] = v;
                    }
                },
                row[i]);
        }
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

}  // namespace deltazeta::cli
