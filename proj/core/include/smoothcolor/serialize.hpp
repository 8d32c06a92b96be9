#pragma once

// Coloring (de)serialization: JSON records, and the compact command-line
// literal grammar "variant:n=N:params" (or "@path" for a JSON file).

#include <string>

#include "smoothcolor/coloring.hpp"

namespace smoothcolor {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what) : std::runtime_error(what) {}
};

std::string coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const std::string& json_text);

// Literals: linear:n=7:1,3,5,6 | power:n=6:k=17,p=103 | strip:n=6:1,2,1
//           group:n=6:@table.json is not supported; use @file.json for any
//           variant serialized with coloring_to_json.
Coloring parse_coloring(const std::string& literal_or_path);

}  // namespace smoothcolor
