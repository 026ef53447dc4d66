#include "qfent/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace qfent {

namespace {
constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void fnv_bytes(std::uint64_t& h, const void* p, size_t n) {
  const unsigned char* b = static_cast<const unsigned char*>(p);
  for (size_t i = 0; i < n; ++i) {
    h ^= b[i];
    h *= kFnvPrime;
  }
}

void fnv_double(std::uint64_t& h, double v) {
  if (v == 0.0) v = 0.0;  // collapse -0.0
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof bits);
  fnv_bytes(h, &bits, sizeof bits);
}
}  // namespace

std::uint64_t model_hash(const ModelSpec& m) {
  std::uint64_t h = kFnvOffset;
  std::uint32_t nh = static_cast<std::uint32_t>(m.hop.size());
  std::uint32_t np = static_cast<std::uint32_t>(m.pair.size());
  fnv_bytes(h, &nh, sizeof nh);
  for (const cxd& c : m.hop) {
    fnv_double(h, c.real());
    fnv_double(h, c.imag());
  }
  fnv_bytes(h, &np, sizeof np);
  for (const cxd& c : m.pair) {
    fnv_double(h, c.real());
    fnv_double(h, c.imag());
  }
  return h;
}

std::string format_sig(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

CsvWriter::CsvWriter(
    std::ostream& out, const ModelSpec& model,
    const std::vector<std::pair<std::string, std::string>>& provenance)
    : out_(out) {
  char hex[24];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(model_hash(model)));
  out_ << "# qfent 0.1.0\n";
  out_ << "# model_hash = " << hex << "\n";
  out_ << "# range = " << model.range() << "\n";
  for (const auto& [k, v] : provenance) out_ << "# " << k << " = " << v << "\n";
}

void CsvWriter::header(const std::vector<std::string>& columns) {
  columns_ = columns.size();
  for (size_t i = 0; i < columns.size(); ++i)
    out_ << (i ? "," : "") << columns[i];
  out_ << "\n";
}

void CsvWriter::row(const std::vector<double>& values) {
  if (columns_ && values.size() != columns_)
    throw std::logic_error("csv row width mismatch");
  for (size_t i = 0; i < values.size(); ++i)
    out_ << (i ? "," : "") << format_sig(values[i]);
  out_ << "\n";
}

void CsvWriter::raw_row(const std::vector<std::string>& cells) {
  if (columns_ && cells.size() != columns_)
    throw std::logic_error("csv row width mismatch");
  for (size_t i = 0; i < cells.size(); ++i)
    out_ << (i ? "," : "") << cells[i];
  out_ << "\n";
}

}  // namespace qfent
