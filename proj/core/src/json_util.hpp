#pragma once

// Helpers shared by the JSON readers. Not installed.

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "berger/instance_io.hpp"

namespace berger::detail {

using nlohmann::json;

class JsonReader
{
public:
    explicit JsonReader(std::string_view origin) : origin_(origin) {}

    json parse(std::string_view text) const
    {
        try {
            return json::parse(text.begin(), text.end());
        } catch (const json::parse_error& e) {
            std::size_t line = 1;
            std::size_t col = 1;
            for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
                if (text[i] == '\n') {
                    ++line;
                    col = 1;
                } else {
                    ++col;
                }
            }
            throw ParseError(origin_ + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
        }
    }

    [[noreturn]] void fail(const json::json_pointer& where, const std::string& what) const
    {
        const std::string ptr = where.to_string();
        throw ParseError(origin_ + ": " + (ptr.empty() ? "/" : ptr) + ": " + what);
    }

    void expectKeys(const json& obj, const json::json_pointer& where, std::initializer_list<std::string_view> allowed) const
    {
        if (!obj.is_object())
            fail(where, "expected an object");
        for (const auto& [key, value] : obj.items()) {
            bool known = false;
            for (std::string_view a : allowed)
                known = known || key == a;
            if (!known)
                fail(where / key, "unknown key");
        }
    }

    const json& require(const json& obj, const json::json_pointer& where, const std::string& key) const
    {
        const auto it = obj.find(key);
        if (it == obj.end())
            fail(where, "missing key \"" + key + "\"");
        return *it;
    }

    double number(const json& v, const json::json_pointer& where) const
    {
        if (v.is_number())
            return v.get<double>();
        if (v.is_string()) {
            const std::string& s = v.get_ref<const std::string&>();
            double out = 0.0;
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
            if (ec == std::errc() && ptr == s.data() + s.size())
                return out;
            fail(where, "not a decimal number: \"" + s + "\"");
        }
        fail(where, "expected a number");
    }

    std::uint64_t unsignedInt(const json& v, const json::json_pointer& where) const
    {
        if (v.is_number_unsigned())
            return v.get<std::uint64_t>();
        if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
            return static_cast<std::uint64_t>(v.get<std::int64_t>());
        fail(where, "expected a non-negative integer");
    }

    std::string string(const json& v, const json::json_pointer& where) const
    {
        if (!v.is_string())
            fail(where, "expected a string");
        return v.get<std::string>();
    }

    const std::string& origin() const { return origin_; }

private:
    std::string origin_;
};

inline std::string readFile(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path.string() + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Node id as written in files: integers stay integers.
inline json labelToJson(const std::string& label)
{
    std::uint64_t n = 0;
    const auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), n);
    if (ec == std::errc() && ptr == label.data() + label.size() && !label.empty() && (label == "0" || label[0] != '0'))
        return n;
    return label;
}

Instance instanceFromJson(const json& doc, const JsonReader& reader, const json::json_pointer& where);
json instanceToJson(const Instance& inst);

}  // namespace berger::detail
