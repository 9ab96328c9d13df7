// File formats and number formatting for the command-line front end.
//
// Matrices are JSON objects {"n": <dim>, "values": [<n*n row-major
// numbers>]}; vectors are flat JSON arrays. Numeric text output uses 17
// significant digits so doubles round-trip exactly.
#pragma once

#include <string>
#include <vector>

#include "dgf/errors.hpp"
#include "dgf/influence.hpp"

namespace dgf {

// Unreadable file or malformed document.
class IoError : public Error {
 public:
  using Error::Error;
};

DenseMatrix read_matrix_file(const std::string& path);
std::vector<double> read_vector_file(const std::string& path);

std::string format_double(double v);
std::string format_vector(const std::vector<double>& v);  // space separated

// Writes to "<path>.tmp" and renames, so failures never leave a partial
// file behind.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace dgf
