#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "berger/graph.hpp"

namespace berger {

// Malformed input. what() starts with the location: "origin:line:col: ..." for
// syntax errors, "origin: /json/pointer: ..." for structural ones.
class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// {"nodes": [[id, x, y], ...], "edges": [[id, id], ...], "source": id, "target": id}
// Ids are strings or integers and become node labels. Coordinates are JSON
// numbers or decimal strings, each read as the nearest double.
Instance parseInstance(std::string_view text, std::string_view origin = "<input>");
Instance readInstanceFile(const std::filesystem::path& path);

std::string formatInstance(const Instance& inst);

}  // namespace berger
