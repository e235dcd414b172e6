#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace cauchy_sketch::io {

/// Row-major n x d table of doubles.
struct Matrix {
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  std::vector<double> values;

  std::vector<std::vector<double>> to_rows() const;
};

enum class Format { csv, bin };

/// csv for a .csv extension, bin otherwise.
Format guess_format(const std::filesystem::path& path);

/// Comma-separated, one point per line. A first line that does not parse as
/// numbers is treated as a header. Parsing is locale-independent.
Matrix read_csv(std::istream& in);

/// Two little-endian uint64 (rows, cols), then rows*cols little-endian IEEE-754 doubles.
Matrix read_binary(std::istream& in);
void write_binary(std::ostream& out, const Matrix& m);

Matrix read_matrix(const std::filesystem::path& path, Format format);
void write_matrix_binary(const std::filesystem::path& path, const Matrix& m);

}  // namespace cauchy_sketch::io
