#include "qfent/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace qfent {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_number(const std::string& tok, int line) {
  const std::string t = strip(tok);
  if (t.empty()) throw ConfigError(line, "expected a number");
  char* end = nullptr;
  double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size())
    throw ConfigError(line, "malformed number '" + t + "'");
  if (!std::isfinite(v)) throw ConfigError(line, "non-finite number");
  return v;
}

// Split "a, b, c" at top-level commas (ignores commas inside brackets).
std::vector<std::string> split_commas(const std::string& s, int line) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[' || c == '{') ++depth;
    if (c == ']' || c == '}') --depth;
    if (depth < 0) throw ConfigError(line, "unbalanced brackets");
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw ConfigError(line, "unbalanced brackets");
  out.push_back(cur);
  return out;
}

// "[[re, im], [re, im], ...]" -> coefficient list.
std::vector<cxd> parse_pair_list(const std::string& raw, int line) {
  std::string s = strip(raw);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ConfigError(line, "expected [[re, im], ...]");
  s = strip(s.substr(1, s.size() - 2));
  std::vector<cxd> out;
  if (s.empty()) return out;
  for (const std::string& item : split_commas(s, line)) {
    std::string t = strip(item);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
      throw ConfigError(line, "expected [re, im] entry");
    auto parts = split_commas(t.substr(1, t.size() - 2), line);
    if (parts.size() != 2)
      throw ConfigError(line, "entry must have exactly two components [re, im]");
    out.emplace_back(parse_number(parts[0], line), parse_number(parts[1], line));
  }
  return out;
}

// "{gamma = 1, h = 1, D = 0.5}" or "gamma=1,h=1,D=0.5".
std::map<std::string, double> parse_kv_block(std::string s, int line) {
  s = strip(s);
  if (!s.empty() && s.front() == '{') {
    if (s.back() != '}') throw ConfigError(line, "unbalanced braces");
    s = strip(s.substr(1, s.size() - 2));
  }
  std::map<std::string, double> out;
  if (s.empty()) return out;
  for (const std::string& item : split_commas(s, line)) {
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw ConfigError(line, "expected key = value in block");
    std::string k = strip(item.substr(0, eq));
    if (k.empty()) throw ConfigError(line, "empty key in block");
    if (out.count(k)) throw ConfigError(line, "duplicate key '" + k + "'");
    out[k] = parse_number(item.substr(eq + 1), line);
  }
  return out;
}

ModelSpec model_from_nn_block(const std::map<std::string, double>& kv, int line) {
  for (const auto& [k, v] : kv)
    if (k != "gamma" && k != "h" && k != "D")
      throw ConfigError(line, "unknown nn parameter '" + k + "'");
  if (!kv.count("gamma")) throw ConfigError(line, "nn block missing gamma");
  if (!kv.count("h")) throw ConfigError(line, "nn block missing h");
  const double gamma = kv.at("gamma");
  const double D = kv.count("D") ? kv.at("D") : 0.0;
  if (gamma < 0.0 || gamma > 1.0)
    throw ConfigError(line, "gamma must lie in [0,1]");
  return nn_model(gamma, kv.at("h"), D);
}

}  // namespace

ModelSpec parse_model_string(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  std::optional<int> range;
  std::optional<std::vector<cxd>> hop, pair;
  std::optional<ModelSpec> nn;
  int range_line = 0, hop_line = 0, pair_line = 0, nn_line = 0;

  while (std::getline(in, raw)) {
    ++lineno;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string s = strip(raw);
    if (s.empty()) continue;
    size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError(lineno, "expected key = value");
    const std::string key = strip(s.substr(0, eq));
    const std::string val = strip(s.substr(eq + 1));
    if (key == "range") {
      if (range) throw ConfigError(lineno, "duplicate range");
      double v = parse_number(val, lineno);
      if (v < 1.0 || v != std::floor(v) || v > 64.0)
        throw ConfigError(lineno, "range must be an integer in [1, 64]");
      range = static_cast<int>(v);
      range_line = lineno;
    } else if (key == "hop") {
      if (hop) throw ConfigError(lineno, "duplicate hop");
      hop = parse_pair_list(val, lineno);
      hop_line = lineno;
    } else if (key == "pair") {
      if (pair) throw ConfigError(lineno, "duplicate pair");
      pair = parse_pair_list(val, lineno);
      pair_line = lineno;
    } else if (key == "nn") {
      if (nn) throw ConfigError(lineno, "duplicate nn");
      nn = model_from_nn_block(parse_kv_block(val, lineno), lineno);
      nn_line = lineno;
    } else {
      throw ConfigError(lineno, "unknown key '" + key + "'");
    }
  }

  if (nn) {
    if (range || hop || pair)
      throw ConfigError(nn_line, "nn block excludes range/hop/pair");
    return *nn;
  }
  if (!hop) throw ConfigError(lineno ? lineno : 1, "missing hop (or nn block)");
  if (range && static_cast<int>(hop->size()) != *range)
    throw ConfigError(hop_line ? hop_line : range_line,
                      "hop has " + std::to_string(hop->size()) +
                          " entries but range = " + std::to_string(*range));
  ModelSpec m;
  m.hop = *hop;
  if (pair) {
    if (pair->size() > hop->size())
      throw ConfigError(pair_line, "pair longer than hop");
    m.pair = *pair;
  }
  if (std::abs(m.hop[0].imag()) != 0.0)
    throw ConfigError(hop_line, "hop[0] must be real (A hermitian)");
  if (!m.pair.empty() && std::abs(m.pair[0]) != 0.0)
    throw ConfigError(pair_line, "pair[0] must be zero (B antisymmetric)");
  m.validate();
  return m;
}

ModelSpec parse_model_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_model_string(buf.str());
}

ModelSpec parse_nn_inline(const std::string& text) {
  return model_from_nn_block(parse_kv_block(text, 1), 1);
}

std::string format_model(const ModelSpec& m) {
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  std::string out = "range = " + std::to_string(m.range()) + "\nhop = [";
  for (int i = 0; i < m.range(); ++i) {
    if (i) out += ", ";
    out += "[" + num(m.hop[i].real()) + ", " + num(m.hop[i].imag()) + "]";
  }
  out += "]\n";
  if (!m.pair.empty()) {
    out += "pair = [";
    for (size_t i = 0; i < m.pair.size(); ++i) {
      if (i) out += ", ";
      out += "[" + num(m.pair[i].real()) + ", " + num(m.pair[i].imag()) + "]";
    }
    out += "]\n";
  }
  return out;
}

}  // namespace qfent
