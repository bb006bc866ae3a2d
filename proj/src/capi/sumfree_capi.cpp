#include "sumfree/sumfree.h"

#include <new>
#include <string>

#include "cli/commands.hpp"
#include "cli/io.hpp"
#include "core/errors.hpp"
#include "exact/dissociated.hpp"
#include "exact/energy.hpp"

struct sumfree_set {
  sf::IntegerSet s;
};

struct sumfree_report {
  sf::Json json;
  std::string csv;
  std::string text;
  bool violation = false;
  double wall_ms = 0;
};

namespace {

thread_local std::string last_error;

template <class Fn>
sumfree_status guard(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const sf::UsageError& e) {
    last_error = e.what();
    return SUMFREE_USAGE;
  } catch (const sf::InputError& e) {
    last_error = e.what();
    return SUMFREE_INPUT;
  } catch (const sf::PreconditionError& e) {
    last_error = e.what();
    return SUMFREE_INPUT;
  } catch (const sf::BudgetError& e) {
    last_error = e.what();
    return SUMFREE_BUDGET;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SUMFREE_BUDGET;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SUMFREE_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return SUMFREE_INTERNAL;
  }
}

sumfree_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return SUMFREE_USAGE;
}

sf::Json parse_options(const char* text) {
  if (!text || !*text) return sf::Json::object();
  try {
    return sf::Json::parse(text);
  } catch (const sf::Json::parse_error& e) {
    throw sf::UsageError(std::string("options are not valid JSON: ") + e.what());
  }
}

}  // namespace

extern "C" {

const char* sumfree_version(void) { return "1.0.0"; }

const char* sumfree_last_error(void) { return last_error.c_str(); }

sumfree_status sumfree_set_create(const int64_t* elements, size_t n, int zero_allowed, sumfree_set** out) {
  if (!out) return null_arg("out");
  if (!elements && n) return null_arg("elements");
  return guard([&] {
    std::vector<sf::i64> v(elements, elements + n);
    *out = new sumfree_set{sf::validate_set(v, zero_allowed != 0)};
    return SUMFREE_OK;
  });
}

sumfree_status sumfree_set_parse(const char* json, sumfree_set** out) {
  if (!json) return null_arg("json");
  if (!out) return null_arg("out");
  return guard([&] {
    *out = new sumfree_set{sf::parse_set(json)};
    return SUMFREE_OK;
  });
}

sumfree_status sumfree_set_load(const char* path, sumfree_set** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  return guard([&] {
    *out = new sumfree_set{sf::load_set(path)};
    return SUMFREE_OK;
  });
}

sumfree_status sumfree_set_save(const sumfree_set* set, const char* path) {
  if (!set) return null_arg("set");
  if (!path) return null_arg("path");
  return guard([&] {
    sf::save_set(set->s, path);
    return SUMFREE_OK;
  });
}

size_t sumfree_set_size(const sumfree_set* set) { return set ? set->s.size() : 0; }

size_t sumfree_set_elements(const sumfree_set* set, int64_t* out, size_t capacity) {
  if (!set || !out) return 0;
  size_t n = std::min(capacity, set->s.size());
  for (size_t i = 0; i < n; ++i) out[i] = set->s.elements[i];
  return n;
}

void sumfree_set_free(sumfree_set* set) { delete set; }

sumfree_status sumfree_max_sum_free(const sumfree_set* set, int64_t time_limit_ms, size_t* size,
                                    int* timed_out) {
  if (!set) return null_arg("set");
  if (!size) return null_arg("size");
  return guard([&] {
    sf::SumFreeOptions o;
    if (time_limit_ms > 0) o.time_limit_ms = time_limit_ms;
    auto r = sf::max_sum_free(set->s, o);
    *size = r.size;
    if (timed_out) *timed_out = r.timed_out;
    return SUMFREE_OK;
  });
}

sumfree_status sumfree_is_sum_free(const sumfree_set* set, int* result) {
  if (!set) return null_arg("set");
  if (!result) return null_arg("result");
  return guard([&] {
    *result = sf::is_sum_free(set->s);
    return SUMFREE_OK;
  });
}

sumfree_status sumfree_is_dissociated(const sumfree_set* set, int* result) {
  if (!set) return null_arg("set");
  if (!result) return null_arg("result");
  return guard([&] {
    *result = sf::is_dissociated(set->s);
    return SUMFREE_OK;
  });
}

sumfree_status sumfree_additive_energy(const sumfree_set* x, const sumfree_set* y, uint64_t* energy) {
  if (!x || !y) return null_arg("set");
  if (!energy) return null_arg("energy");
  return guard([&] {
    *energy = sf::additive_energy(x->s, y->s);
    return SUMFREE_OK;
  });
}

sumfree_status sumfree_dilation_bound(const sumfree_set* set, double* value, size_t* count) {
  if (!set) return null_arg("set");
  return guard([&] {
    auto d = sf::erdos_dilation_bound(set->s);
    if (value) *value = d.value;
    if (count) *count = d.count;
    return SUMFREE_OK;
  });
}

sumfree_status sumfree_run(const char* command, const sumfree_set* set, const char* options_json,
                           sumfree_report** out) {
  if (!command) return null_arg("command");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] {
    auto r = sf::run_command(command, set ? &set->s : nullptr, parse_options(options_json));
    *out = new sumfree_report{std::move(r.report), std::move(r.csv), {}, r.violation, 0};
    return r.violation ? SUMFREE_VIOLATION : SUMFREE_OK;
  });
}

sumfree_status sumfree_run_suite(const char* name, const char* config_json, sumfree_report** out) {
  if (!name) return null_arg("name");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] {
    auto cfg = sf::config_from_json(parse_options(config_json));
    auto r = sf::run_suite(name, cfg);
    *out = new sumfree_report{std::move(r.json), std::move(r.csv), {}, r.violation, r.wall_ms};
    return r.violation ? SUMFREE_VIOLATION : SUMFREE_OK;
  });
}

const char* sumfree_report_json(sumfree_report* report, int indent) {
  if (!report) return "";
  report->text = report->json.dump(indent < 0 ? -1 : indent);
  return report->text.c_str();
}

const char* sumfree_report_csv(const sumfree_report* report) { return report ? report->csv.c_str() : ""; }

int sumfree_report_violation(const sumfree_report* report) { return report && report->violation; }

double sumfree_report_wall_ms(const sumfree_report* report) { return report ? report->wall_ms : 0.0; }

void sumfree_report_free(sumfree_report* report) { delete report; }

}  // extern "C"
