#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zec/channel.hpp"

namespace zec {

struct ParamDef {
  std::string name;
  double default_value = 0.0;
  std::optional<double> min;
  std::optional<double> max;
  bool exclusive_min = false;
  bool exclusive_max = false;
};

/// One complex entry of a Kraus-operator template. Both parts are expression
/// strings over the declared parameters; plain numbers are stored as their
/// shortest round-trip decimal form.
struct MatrixEntry {
  std::string re = "0";
  std::string im = "0";
};

/// Parsed channel specification file: a matrix template plus parameter
/// declarations with ranges. Instantiating evaluates every entry and
/// validates the resulting operators as a channel.
struct ChannelSpec {
  std::string name;
  int dimension = 0;
  std::vector<ParamDef> parameters;
  std::vector<std::vector<std::vector<MatrixEntry>>> kraus;  // operator -> row -> column
};

/// Merge declared defaults with overrides and enforce declared ranges.
/// Throws ParameterOutOfRangeError on a violation or an unknown override.
std::map<std::string, double> resolve_parameters(const ChannelSpec& spec,
                                                 const std::map<std::string, double>& overrides);

KrausChannel instantiate(const ChannelSpec& spec,
                         const std::map<std::string, double>& overrides = {},
                         double tol = tol::completeness);

/// Throws ParseError with 1-based line/column on malformed input.
ChannelSpec parse_channel_spec(const std::string& json_text);
ChannelSpec load_channel_spec(const std::string& path);

/// Canonical JSON form; parse(serialize(spec)) reproduces the spec and
/// instantiated matrices exactly.
std::string serialize_channel_spec(const ChannelSpec& spec);

/// Arithmetic over parameter names: + - * / ^ (right-assoc), unary minus,
/// parentheses, sqrt(). Throws ParseError on syntax or unknown names.
double eval_expression(const std::string& expr, const std::map<std::string, double>& params);

/// FNV-1a 64-bit content fingerprint (not cryptographic), as 16 hex digits.
std::string fnv1a64_hex(std::string_view bytes);

std::string read_file(const std::string& path);

/// Write-then-rename so readers never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace zec
