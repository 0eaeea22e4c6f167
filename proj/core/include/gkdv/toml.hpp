#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gkdv::toml {

/// Minimal TOML value: string, number, boolean or flat array of numbers.
/// Covers the configuration surface of this project; nothing more.
struct Value {
    enum class Type { string, number, boolean, array };
    Type type = Type::number;
    std::string str;
    double num = 0.0;
    bool flag = false;
    std::vector<double> array;

    static Value of(std::string s) {
        Value v;
        v.type = Type::string;
        v.str = std::move(s);
        return v;
    }
    static Value of(double d) {
        Value v;
        v.num = d;
        return v;
    }
    static Value of(bool b) {
        Value v;
        v.type = Type::boolean;
        v.flag = b;
        return v;
    }
};

using Table = std::map<std::string, Value>;
/// Section name ("" for the root table) -> key/value table.
using Document = std::map<std::string, Table>;

/// Parses a subset of TOML: [section] headers, key = value with strings,
/// numbers, booleans and arrays of numbers, '#' comments.
/// Throws gkdv::ParseError on malformed input.
Document parse(std::string_view text);

std::string write(const Document& doc);

}  // namespace gkdv::toml
