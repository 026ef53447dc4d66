#pragma once

// Deterministic CSV emission. Every file starts with '#'-prefixed provenance
// lines (tool version, a stable hash of the model coefficients, tolerances)
// followed by a header row. Numbers are printed with 12 significant digits so
// repeated runs produce byte-identical output. No timestamps.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "qfent/model.hpp"

namespace qfent {

// FNV-1a over the exact coefficient bytes; stable across runs and platforms
// with IEEE doubles.
std::uint64_t model_hash(const ModelSpec& m);

std::string format_sig(double v);  // 12 significant digits, "nan"/"inf" spelled out

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const ModelSpec& model,
            const std::vector<std::pair<std::string, std::string>>& provenance);

  void header(const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);
  void raw_row(const std::vector<std::string>& cells);

 private:
  std::ostream& out_;
  size_t columns_ = 0;
};

}  // namespace qfent
