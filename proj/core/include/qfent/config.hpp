#pragma once

// Model configuration files.  Line-oriented key = value text:
//
//   range = 2
//   hop  = [[-2, 0], [1, -0.5]]     # A_{0,l} as [re, im], l = 0..range-1
//   pair = [[0, 0], [1, 0]]         # B_{0,l}; optional, defaults to zero
//
// or the nearest-neighbour convenience block (exclusive with hop/pair):
//
//   nn = {gamma = 1, h = 1, D = 0.5}
//
// Parse errors carry the 1-based line number.

#include <string>

#include "qfent/model.hpp"

namespace qfent {

class ConfigError : public ModelError {
 public:
  ConfigError(int line, const std::string& what)
      : ModelError("config line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

ModelSpec parse_model_string(const std::string& text);
ModelSpec parse_model_file(const std::string& path);

// Inline nearest-neighbour spec "gamma=1,h=1,D=2" (D may be omitted).
ModelSpec parse_nn_inline(const std::string& text);

// Emit a model in the same config format (round-trips through the parser).
std::string format_model(const ModelSpec& m);

}  // namespace qfent
