#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/integer_set.hpp"
#include "core/trig_poly.hpp"

namespace sf {

// {"name": string, "elements": [integers]}; errors carry line and column.
IntegerSet parse_set(const std::string& text, const std::string& origin = "<input>",
                     bool zero_allowed = false);
IntegerSet load_set(const std::string& path, bool zero_allowed = false);
std::string set_to_json(const IntegerSet& s);
void save_set(const IntegerSet& s, const std::string& path);

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

// rows frequency,re,im
std::string poly_csv(const TrigPolynomial& p);

// "1,2,5-9;10-20" -> blocks; each part a comma list of integers or a-b ranges.
std::vector<IntegerSet> parse_blocks(const std::string& text);
// "1:2;2:4;4:8" -> (r, q) pairs; commas also separate entries
std::vector<std::pair<i64, i64>> parse_chain(const std::string& text);

}  // namespace sf
