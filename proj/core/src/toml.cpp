#include "gkdv/toml.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

#include "gkdv/errors.hpp"

namespace gkdv::toml {

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Removes a trailing comment that is not inside a quoted string.
std::string_view strip_comment(std::string_view line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        if (line[i] == '#' && !quoted) return line.substr(0, i);
    }
    return line;
}

double parse_number(std::string_view token, std::size_t line_no) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line_no, "number",
                         "line " + std::to_string(line_no) + ": malformed number '" +
                             std::string(token) + "'");
    return value;
}

Value parse_value(std::string_view token, std::size_t line_no) {
    token = strip(token);
    if (token.empty())
        throw ParseError(line_no, "value", "line " + std::to_string(line_no) + ": missing value");
    if (token.front() == '"') {
        if (token.size() < 2 || token.back() != '"')
            throw ParseError(line_no, "closing quote",
                             "line " + std::to_string(line_no) + ": unterminated string");
        return Value::of(std::string(token.substr(1, token.size() - 2)));
    }
    if (token == "true") return Value::of(true);
    if (token == "false") return Value::of(false);
    if (token.front() == '[') {
        if (token.back() != ']')
            throw ParseError(line_no, "']'",
                             "line " + std::to_string(line_no) + ": unterminated array");
        Value v;
        v.type = Value::Type::array;
        std::string_view body = token.substr(1, token.size() - 2);
        while (!body.empty()) {
            const std::size_t comma = body.find(',');
            const std::string_view item =
                strip(comma == std::string_view::npos ? body : body.substr(0, comma));
            if (!item.empty()) v.array.push_back(parse_number(item, line_no));
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
        }
        return v;
    }
    return Value::of(parse_number(token, line_no));
}

}  // namespace

Document parse(std::string_view text) {
    Document doc;
    std::string section;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const std::size_t eol = text.find('\n');
        std::string_view line = eol == std::string_view::npos ? text : text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);

        line = strip(strip_comment(line));
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError(line_no, "']'",
                                 "line " + std::to_string(line_no) + ": unterminated section");
            section = std::string(strip(line.substr(1, line.size() - 2)));
            doc[section];
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(line_no, "'='",
                             "line " + std::to_string(line_no) + ": expected key = value");
        const std::string key(strip(line.substr(0, eq)));
        if (key.empty())
            throw ParseError(line_no, "key", "line " + std::to_string(line_no) + ": empty key");
        doc[section][key] = parse_value(line.substr(eq + 1), line_no);
    }
    return doc;
}

std::string write(const Document& doc) {
    std::string out;
    char buf[40];
    auto write_table = [&](const Table& table) {
        for (const auto& [key, value] : table) {
            out += key;
            out += " = ";
            switch (value.type) {
                case Value::Type::string:
                    out += '"';
                    out += value.str;
                    out += '"';
                    break;
                case Value::Type::boolean: out += value.flag ? "true" : "false"; break;
                case Value::Type::number:
                    std::snprintf(buf, sizeof(buf), "%.17g", value.num);
                    out += buf;
                    break;
                case Value::Type::array:
                    out += '[';
                    for (std::size_t i = 0; i < value.array.size(); ++i) {
                        if (i) out += ", ";
                        std::snprintf(buf, sizeof(buf), "%.17g", value.array[i]);
                        out += buf;
                    }
                    out += ']';
                    break;
            }
            out += '\n';
        }
    };
    if (auto it = doc.find(""); it != doc.end()) write_table(it->second);
    for (const auto& [section, table] : doc) {
        if (section.empty()) continue;
        out += '[';
        out += section;
        out += "]\n";
        write_table(table);
    }
    return out;
}

}  // namespace gkdv::toml
