#include "cli/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace sf {

namespace {

std::string position(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

i64 parse_int(const std::string& s, const std::string& text) {
  i64 v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw UsageError("bad integer '" + s + "' in '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

IntegerSet parse_set(const std::string& text, const std::string& origin, bool zero_allowed) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is one past the offending character
    throw InputError(origin + ": malformed JSON at " + position(text, e.byte ? e.byte - 1 : 0));
  }
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    throw InputError(origin + ": expected an object with an \"elements\" array");
  std::vector<i64> raw;
  std::size_t idx = 0;
  for (const auto& v : j["elements"]) {
    if (v.is_number_integer() && !(v.is_number_unsigned() && v.get<std::uint64_t>() > INT64_MAX)) {
      raw.push_back(v.get<i64>());
    } else if (v.is_number_unsigned() || v.is_number_float()) {
      throw InputError(origin + ": element " + std::to_string(idx) +
                       " is not an integer in the signed 64-bit range");
    } else {
      throw InputError(origin + ": element " + std::to_string(idx) + " is not an integer");
    }
    ++idx;
  }
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError(origin + ": \"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  try {
    return validate_set(raw, zero_allowed, name);
  } catch (const InputError& e) {
    throw InputError(origin + ": " + e.what());
  }
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

IntegerSet load_set(const std::string& path, bool zero_allowed) {
  return parse_set(read_text(path), path, zero_allowed);
}

std::string set_to_json(const IntegerSet& s) {
  nlohmann::ordered_json j;
  j["name"] = s.name;
  j["elements"] = s.elements;
  return j.dump() + "\n";
}

void save_set(const IntegerSet& s, const std::string& path) { write_text(path, set_to_json(s)); }

std::string poly_csv(const TrigPolynomial& p) {
  std::string out = "frequency,re,im\n";
  char buf[96];
  for (const auto& [n, c] : p.terms()) {
    std::snprintf(buf, sizeof buf, "%lld,%.17g,%.17g\n", static_cast<long long>(n), c.real(), c.imag());
    out += buf;
  }
  return out;
}

std::vector<IntegerSet> parse_blocks(const std::string& text) {
  std::vector<IntegerSet> blocks;
  for (const auto& part : split(text, ';')) {
    std::vector<i64> v;
    for (const auto& item : split(part, ',')) {
      if (item.empty()) continue;
      auto dash = item.find('-', 1);
      if (dash == std::string::npos) {
        v.push_back(parse_int(item, text));
      } else {
        i64 lo = parse_int(item.substr(0, dash), text), hi = parse_int(item.substr(dash + 1), text);
        if (hi < lo || hi - lo > 10'000'000) throw UsageError("bad range '" + item + "'");
        for (i64 x = lo; x <= hi; ++x) v.push_back(x);
      }
    }
    if (v.empty()) throw UsageError("empty block in '" + text + "'");
    blocks.push_back(validate_set(v));
  }
  if (blocks.empty()) throw UsageError("no blocks in '" + text + "'");
  return blocks;
}

std::vector<std::pair<i64, i64>> parse_chain(const std::string& text) {
  std::vector<std::pair<i64, i64>> out;
  std::string norm = text;
  std::replace(norm.begin(), norm.end(), ',', ';');  // either separator
  for (const auto& part : split(norm, ';')) {
    auto colon = part.find(':');
    if (colon == std::string::npos) throw UsageError("chain entries are r:q, got '" + part + "'");
    out.emplace_back(parse_int(part.substr(0, colon), text), parse_int(part.substr(colon + 1), text));
  }
  if (out.empty()) throw UsageError("empty chain");
  return out;
}

}  // namespace sf
