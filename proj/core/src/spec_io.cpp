#include "zec/spec_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zec/errors.hpp"

namespace zec {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail_at(const std::string& text, size_t byte, const std::string& message) {
  int line = 1, column = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  throw ParseError(message, line, column);
}

// ---- expression evaluator -------------------------------------------------

class ExprParser {
public:
  ExprParser(const std::string& src, const std::map<std::string, double>& params)
      : src_(src), params_(params) {}

  double run() {
    const double value = parse_sum();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing characters");
    return value;
  }

private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("expression '" + src_ + "': " + message, 1, static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double parse_sum() {
    double value = parse_product();
    for (;;) {
      if (eat('+'))
        value += parse_product();
      else if (eat('-'))
        value -= parse_product();
      else
        return value;
    }
  }

  double parse_product() {
    double value = parse_unary();
    for (;;) {
      if (eat('*'))
        value *= parse_unary();
      else if (eat('/'))
        value /= parse_unary();
      else
        return value;
    }
  }

  double parse_unary() {
    if (eat('-')) return -parse_unary();
    if (eat('+')) return parse_unary();
    return parse_power();
  }

  double parse_power() {
    const double base = parse_primary();
    if (eat('^')) return std::pow(base, parse_unary());
    return base;
  }

  double parse_primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of expression");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      const double value = parse_sum();
      if (!eat(')')) fail("missing ')'");
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      char* end = nullptr;
      const double value = std::strtod(src_.c_str() + pos_, &end);
      if (end == src_.c_str() + pos_) fail("bad number");
      pos_ = static_cast<size_t>(end - src_.c_str());
      return value;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      const std::string name = src_.substr(start, pos_ - start);
      if (eat('(')) {
        const double arg = parse_sum();
        if (!eat(')')) fail("missing ')' after function argument");
        if (name == "sqrt") {
          if (arg < 0.0) fail("sqrt of negative value " + std::to_string(arg));
          return std::sqrt(arg);
        }
        fail("unknown function '" + name + "'");
      }
      const auto it = params_.find(name);
      if (it == params_.end()) fail("unknown parameter '" + name + "'");
      return it->second;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& src_;
  const std::map<std::string, double>& params_;
  size_t pos_ = 0;
};

std::string canonical_number(double v) { return json(v).dump(); }

// Accepts a bare number, a bare expression string, or a [re, im] pair of
// either form.
MatrixEntry entry_from_json(const json& j) {
  auto part = [](const json& p) -> std::string {
    if (p.is_number()) return canonical_number(p.get<double>());
    if (p.is_string()) return p.get<std::string>();
    throw ParseError("matrix entry parts must be numbers or expression strings", 1, 1);
  };
  MatrixEntry entry;
  if (j.is_array()) {
    if (j.size() != 2)
      throw ParseError("matrix entry arrays must be [re, im] pairs", 1, 1);
    entry.re = part(j[0]);
    entry.im = part(j[1]);
  } else {
    entry.re = part(j);
    entry.im = "0";
  }
  return entry;
}

json entry_to_json(const MatrixEntry& entry) {
  auto part = [](const std::string& s) -> json {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end && *end == '\0' && end != s.c_str()) return json(v);
    return json(s);
  };
  return json::array({part(entry.re), part(entry.im)});
}

}  // namespace

double eval_expression(const std::string& expr, const std::map<std::string, double>& params) {
  return ExprParser(expr, params).run();
}

std::map<std::string, double> resolve_parameters(const ChannelSpec& spec,
                                                 const std::map<std::string, double>& overrides) {
  std::map<std::string, double> values;
  for (const ParamDef& p : spec.parameters) values[p.name] = p.default_value;
  for (const auto& [name, value] : overrides) {
    if (!values.count(name))
      throw ParameterOutOfRangeError("unknown parameter '" + name + "'");
    values[name] = value;
  }
  for (const ParamDef& p : spec.parameters) {
    const double v = values[p.name];
    const bool below = p.min && (p.exclusive_min ? v <= *p.min : v < *p.min);
    const bool above = p.max && (p.exclusive_max ? v >= *p.max : v > *p.max);
    if (below || above)
      throw ParameterOutOfRangeError("parameter '" + p.name + "' = " + std::to_string(v) +
                                     " violates its declared range");
  }
  return values;
}

KrausChannel instantiate(const ChannelSpec& spec, const std::map<std::string, double>& overrides,
                         double tol) {
  const std::map<std::string, double> params = resolve_parameters(spec, overrides);
  std::vector<ComplexMatrix> ops;
  ops.reserve(spec.kraus.size());
  for (const auto& rows : spec.kraus) {
    ComplexMatrix m(spec.dimension, spec.dimension);
    for (int i = 0; i < spec.dimension; ++i)
      for (int j = 0; j < spec.dimension; ++j)
        m(i, j) = cx{eval_expression(rows[i][j].re, params),
                     eval_expression(rows[i][j].im, params)};
    ops.push_back(std::move(m));
  }
  return validate_channel(std::move(ops), tol);
}

ChannelSpec parse_channel_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    fail_at(json_text, e.byte > 0 ? e.byte - 1 : 0, e.what());
  }

  try {
    ChannelSpec spec;
    spec.name = doc.value("name", std::string{});
    spec.dimension = doc.at("dimension").get<int>();
    if (spec.dimension < 1) throw ParseError("dimension must be >= 1", 1, 1);

    if (doc.contains("parameters")) {
      for (const auto& [name, pj] : doc.at("parameters").items()) {
        ParamDef def;
        def.name = name;
        def.default_value = pj.at("default").get<double>();
        if (pj.contains("min")) def.min = pj.at("min").get<double>();
        if (pj.contains("max")) def.max = pj.at("max").get<double>();
        def.exclusive_min = pj.value("exclusive_min", false);
        def.exclusive_max = pj.value("exclusive_max", false);
        spec.parameters.push_back(std::move(def));
      }
    }

    const json& kraus = doc.at("kraus");
    if (!kraus.is_array() || kraus.empty())
      throw ParseError("'kraus' must be a non-empty list of matrices", 1, 1);
    for (const json& op : kraus) {
      if (!op.is_array() || static_cast<int>(op.size()) != spec.dimension)
        throw ParseError("each Kraus matrix needs 'dimension' rows", 1, 1);
      std::vector<std::vector<MatrixEntry>> rows;
      for (const json& row : op) {
        if (!row.is_array() || static_cast<int>(row.size()) != spec.dimension)
          throw ParseError("each Kraus matrix row needs 'dimension' entries", 1, 1);
        std::vector<MatrixEntry> entries;
        for (const json& e : row) entries.push_back(entry_from_json(e));
        rows.push_back(std::move(entries));
      }
      spec.kraus.push_back(std::move(rows));
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("channel spec: ") + e.what(), 1, 1);
  }
}

ChannelSpec load_channel_spec(const std::string& path) {
  return parse_channel_spec(read_file(path));
}

std::string serialize_channel_spec(const ChannelSpec& spec) {
  json doc;
  if (!spec.name.empty()) doc["name"] = spec.name;
  doc["dimension"] = spec.dimension;
  if (!spec.parameters.empty()) {
    json params = json::object();
    for (const ParamDef& p : spec.parameters) {
      json pj;
      pj["default"] = p.default_value;
      if (p.min) pj["min"] = *p.min;
      if (p.max) pj["max"] = *p.max;
      if (p.exclusive_min) pj["exclusive_min"] = true;
      if (p.exclusive_max) pj["exclusive_max"] = true;
      params[p.name] = std::move(pj);
    }
    doc["parameters"] = std::move(params);
  }
  json kraus = json::array();
  for (const auto& rows : spec.kraus) {
    json op = json::array();
    for (const auto& row : rows) {
      json rj = json::array();
      for (const MatrixEntry& e : row) rj.push_back(entry_to_json(e));
      op.push_back(std::move(rj));
    }
    kraus.push_back(std::move(op));
  }
  doc["kraus"] = std::move(kraus);
  return doc.dump(2) + "\n";
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write file: " + tmp);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace zec
