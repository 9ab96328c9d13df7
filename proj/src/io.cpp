#include "dgf/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace dgf {

namespace {

nlohmann::json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path);
  }
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("cannot parse " + path + ": " + e.what());
  }
}

double as_number(const nlohmann::json& j, const std::string& path) {
  if (!j.is_number()) {
    throw IoError(path + ": expected a number, got " + std::string(j.type_name()));
  }
  return j.get<double>();
}

}  // namespace

DenseMatrix read_matrix_file(const std::string& path) {
  const auto j = parse_file(path);
  if (!j.is_object() || !j.contains("n") || !j.contains("values")) {
    throw IoError(path + R"(: expected an object with "n" and "values")");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long>() < 1) {
    throw IoError(path + R"(: "n" must be a positive integer)");
  }
  const int n = j["n"].get<int>();
  const auto& vals = j["values"];
  if (!vals.is_array() ||
      vals.size() != static_cast<size_t>(n) * static_cast<size_t>(n)) {
    throw IoError(path + R"(: "values" must hold exactly n*n numbers)");
  }
  DenseMatrix m;
  m.rows = n;
  m.cols = n;
  m.values.reserve(vals.size());
  for (const auto& v : vals) m.values.push_back(as_number(v, path));
  return m;
}

std::vector<double> read_vector_file(const std::string& path) {
  const auto j = parse_file(path);
  if (!j.is_array() || j.empty()) {
    throw IoError(path + ": expected a nonempty array of numbers");
  }
  std::vector<double> v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(as_number(e, path));
  return v;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_vector(const std::vector<double>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ' ';
    out += format_double(v[i]);
  }
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp + " for writing");
    out << content;
    if (!out.good()) throw IoError("write failed for " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw IoError("cannot rename " + tmp + " to " + path + ": " + ec.message());
  }
}

}  // namespace dgf
