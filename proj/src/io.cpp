#include "memevo/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

namespace memevo {

namespace {

std::vector<double> parse_row(const std::string& line, long line_no) {
  std::string cleaned = line;
  for (char& ch : cleaned)
    if (ch == ',' || ch == '\t' || ch == '\r') ch = ' ';
  std::istringstream row(cleaned);
  std::vector<double> values;
  std::string token;
  while (row >> token) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &consumed);
    } catch (const std::exception&) {
      throw ParseError("non-numeric token '" + token + "'", line_no);
    }
    if (consumed != token.size())
      throw ParseError("non-numeric token '" + token + "'", line_no);
    values.push_back(value);
  }
  return values;
}

}  // namespace

Matrix load_view(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::vector<std::vector<double>> rows;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto values = parse_row(line, line_no);
    if (values.empty()) continue;  // skip blank lines
    if (!rows.empty() && values.size() != rows.front().size())
      throw ParseError("ragged row: expected " + std::to_string(rows.front().size()) +
                           " columns, got " + std::to_string(values.size()),
                       line_no);
    rows.push_back(std::move(values));
  }
  if (rows.empty()) throw ParseError("empty table in '" + path.string() + "'");
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.front().size(); ++j) m(Eigen::Index(i), Eigen::Index(j)) = rows[i][j];
  return m;
}

void save_matrix(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << std::setprecision(17);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
}

LabelVector load_labels(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  LabelVector labels;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto values = parse_row(line, line_no);
    if (values.empty()) continue;
    if (values.size() != 1) throw ParseError("expected one label per line", line_no);
    const long l = std::lround(values[0]);
    if (double(l) != values[0] || l < 0) throw ParseError("labels must be nonnegative integers", line_no);
    labels.push_back(int(l));
  }
  if (labels.empty()) throw ParseError("empty label file '" + path.string() + "'");
  return labels;
}

void save_labels(const std::filesystem::path& path, const LabelVector& labels) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  for (int l : labels) out << l << '\n';
}

}  // namespace memevo
