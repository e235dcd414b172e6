#include "cauchy_sketch/io.hpp"

#include <bit>
#include <cmath>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "cauchy_sketch/errors.hpp"

namespace cauchy_sketch::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::optional<std::vector<double>> parse_row(std::string_view line) {
  std::vector<double> row;
  while (true) {
    const auto comma = line.find(',');
    const std::string_view field = trim(line.substr(0, comma));
    double v = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (!field.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (field.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) return std::nullopt;
    row.push_back(v);
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return row;
}

void put_u64(std::ostream& out, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

bool get_u64(std::istream& in, std::uint64_t& v) {
  unsigned char b[8];
  if (!in.read(reinterpret_cast<char*>(b), 8)) return false;
  v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return true;
}

}  // namespace

std::vector<std::vector<double>> Matrix::to_rows() const {
  std::vector<std::vector<double>> out(rows);
  for (std::uint64_t r = 0; r < rows; ++r)
    out[r].assign(values.begin() + r * cols, values.begin() + (r + 1) * cols);
  return out;
}

Format guess_format(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? Format::csv : Format::bin;
}

Matrix read_csv(std::istream& in) {
  Matrix m;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto row = parse_row(line);
    if (!row) {
      if (m.rows == 0 && line_no == 1) continue;  // header
      throw IoError("csv line " + std::to_string(line_no) + ": not a numeric row");
    }
    if (m.rows == 0)
      m.cols = row->size();
    else if (row->size() != m.cols)
      throw IoError("csv line " + std::to_string(line_no) + ": expected " + std::to_string(m.cols) +
                    " fields, got " + std::to_string(row->size()));
    m.values.insert(m.values.end(), row->begin(), row->end());
    ++m.rows;
  }
  if (m.rows == 0) throw IoError("csv: no data rows");
  return m;
}

Matrix read_binary(std::istream& in) {
  Matrix m;
  if (!get_u64(in, m.rows) || !get_u64(in, m.cols)) throw IoError("binary: truncated header");
  if (m.rows == 0 || m.cols == 0) throw IoError("binary: empty matrix");
  if (m.cols > (std::uint64_t{1} << 40) / m.rows) throw IoError("binary: implausible shape");
  m.values.resize(m.rows * m.cols);
  for (double& v : m.values) {
    std::uint64_t bits = 0;
    if (!get_u64(in, bits)) throw IoError("binary: truncated payload");
    v = std::bit_cast<double>(bits);
    if (!std::isfinite(v)) throw IoError("binary: non-finite value in payload");
  }
  if (in.peek() != std::char_traits<char>::eof()) throw IoError("binary: trailing bytes after payload");
  return m;
}

void write_binary(std::ostream& out, const Matrix& m) {
  put_u64(out, m.rows);
  put_u64(out, m.cols);
  for (double v : m.values) put_u64(out, std::bit_cast<std::uint64_t>(v));
  if (!out) throw IoError("binary: write failed");
}

Matrix read_matrix(const std::filesystem::path& path, Format format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return format == Format::csv ? read_csv(in) : read_binary(in);
}

void write_matrix_binary(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_binary(out, m);
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace cauchy_sketch::io
