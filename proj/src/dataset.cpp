#include "latentfs/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "latentfs/errors.hpp"
#include "latentfs/jsonfmt.hpp"

namespace latentfs {

namespace {

std::string trim(const std::string &s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_row(const std::string &line, std::size_t row_no) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].find('"') != std::string::npos) {
      throw Error("ParseError", "quoted cell at row " + std::to_string(row_no) +
                                    ", column " + std::to_string(c + 1) +
                                    " (quoting is not supported)");
    }
  }
  return cells;
}

double parse_value(const std::string &cell, std::size_t row_no, std::size_t col_no) {
  double value = 0.0;
  const char *begin = cell.data();
  const char *end = begin + cell.size();
  auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc() || res.ptr != end || cell.empty()) {
    throw Error("ParseError", "cannot parse \"" + cell + "\" as a number at row " +
                                  std::to_string(row_no) + ", column " +
                                  std::to_string(col_no));
  }
  if (!std::isfinite(value)) {
    throw Error("ParseError", "non-finite value at row " + std::to_string(row_no) +
                                  ", column " + std::to_string(col_no));
  }
  return value;
}

}  // namespace

FeatureMatrix load_csv(const std::string &path, const std::string &label_column) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot open " + path);

  std::string line;
  if (!std::getline(in, line)) throw Error("EmptyDataset", path + " has no header row");
  const std::vector<std::string> header = split_row(line, 1);

  std::size_t label_idx = header.size();
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == label_column) {
      label_idx = c;
      break;
    }
  }
  if (label_idx == header.size()) {
    throw Error("MissingColumn", "no column named \"" + label_column + "\" in " + path);
  }
  const std::size_t n = header.size() - 1;
  if (n == 0) throw Error("EmptyDataset", path + " has no feature columns");

  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  std::map<std::string, int> label_ids;  // first appearance gets 1, then 2, ...
  std::size_t row_no = 1;
  while (std::getline(in, line)) {
    ++row_no;
    if (trim(line).empty() && in.peek() == EOF) break;  // tolerate one trailing newline
    const std::vector<std::string> cells = split_row(line, row_no);
    if (cells.size() != header.size()) {
      throw Error("ParseError", "row " + std::to_string(row_no) + " has " +
                                    std::to_string(cells.size()) + " cells, expected " +
                                    std::to_string(header.size()));
    }
    std::vector<double> values;
    values.reserve(n);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c == label_idx) continue;
      values.push_back(parse_value(cells[c], row_no, c + 1));
    }
    const std::string &label = cells[label_idx];
    if (label.empty()) {
      throw Error("ParseError", "empty label at row " + std::to_string(row_no));
    }
    auto [it, inserted] = label_ids.emplace(label, 0);
    if (inserted) it->second = static_cast<int>(label_ids.size());
    labels.push_back(it->second);
    rows.push_back(std::move(values));
  }

  if (rows.empty()) throw Error("EmptyDataset", path + " has no data rows");
  if (label_ids.size() < 2) {
    throw Error("SingleClass", "need at least two classes, found " +
                                   std::to_string(label_ids.size()));
  }

  FeatureMatrix data;
  data.values = Matrix(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) data.values(i, j) = rows[i][j];
  }
  data.labels = std::move(labels);
  data.num_classes = static_cast<int>(label_ids.size());
  data.feature_names.reserve(n);
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c != label_idx) data.feature_names.push_back(header[c]);
  }
  return data;
}

void save_csv(const FeatureMatrix &data, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw Error("IoError", "cannot write " + path);
  for (std::size_t j = 0; j < data.num_features(); ++j) {
    out << data.feature_names[j] << ",";
  }
  out << "label\n";
  for (std::size_t i = 0; i < data.num_samples(); ++i) {
    for (std::size_t j = 0; j < data.num_features(); ++j) {
      out << fmt_double(data.values(i, j)) << ",";
    }
    out << data.labels[i] << "\n";
  }
  if (!out) throw Error("IoError", "short write to " + path);
}

ClassStats class_stats(const FeatureMatrix &data) {
  const std::size_t m = data.num_samples();
  const std::size_t n = data.num_features();
  const int K = data.num_classes;

  ClassStats stats;
  stats.mu = Matrix(K, n);
  stats.sigma = Matrix(K, n);
  stats.sigma_sq_sum.assign(n, 0.0);

  std::vector<std::size_t> class_count(K, 0);
  for (int label : data.labels) ++class_count[label - 1];

  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      stats.mu(data.labels[i] - 1, j) += data.values(i, j);
    }
    for (int k = 0; k < K; ++k) stats.mu(k, j) /= static_cast<double>(class_count[k]);
    for (std::size_t i = 0; i < m; ++i) {
      const int k = data.labels[i] - 1;
      const double d = data.values(i, j) - stats.mu(k, j);
      stats.sigma(k, j) += d * d;
    }
    for (int k = 0; k < K; ++k) {
      const double var = stats.sigma(k, j) / static_cast<double>(class_count[k]);
      stats.sigma(k, j) = std::sqrt(var);
      stats.sigma_sq_sum[j] += var;
    }
  }
  return stats;
}

}  // namespace latentfs
