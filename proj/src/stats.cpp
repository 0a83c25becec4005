#include "respeak/stats.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace respeak {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    const auto b = field.find_first_not_of(" \t");
    const auto e = field.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string() : field.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::optional<double> to_number(const std::string& s) {
  double v = 0.0;
  const char* begin = s.data();
  if (!s.empty() && s.front() == '+') ++begin;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (s.empty() || ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

double sample_sd(const Eigen::VectorXd& v) {
  const double mean = v.mean();
  return std::sqrt((v.array() - mean).square().sum() / static_cast<double>(v.size() - 1));
}

}  // namespace

std::string canonical_column_name(const std::string& name) {
  std::string out;
  for (unsigned char c : name) {
    if (c == '-' || c == ' ') {
      out += '_';
    } else {
      out += static_cast<char>(std::toupper(c));
    }
  }
  while (!out.empty() && out.back() == '.') out.pop_back();
  return out;
}

std::size_t DataTable::column_index(const std::string& name) const {
  const auto key = canonical_column_name(name);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (canonical_column_name(columns[i]) == key) return i;
  }
  throw Error(ErrorCode::UnknownColumn, "no column named '" + name + "'");
}

DataTable parse_data_table(std::istream& in, const std::string& response) {
  std::vector<std::vector<std::string>> raw;
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::size_t> line_numbers;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    raw.push_back(split_csv(line));
    line_numbers.push_back(line_no);
  }
  if (raw.empty()) throw Error(ErrorCode::ParseError, "CSV has no header row");

  const auto& header = raw.front();
  for (std::size_t r = 1; r < raw.size(); ++r) {
    if (raw[r].size() != header.size()) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_numbers[r]) + ": expected " +
                                             std::to_string(header.size()) + " fields");
    }
  }

  const auto first = canonical_column_name(header.front());
  bool id_column = first == "ID" || first == "SPKR" || first == "SPEAKER" || first == "SEGMENT";
  for (std::size_t r = 1; r < raw.size() && !id_column; ++r) {
    id_column = !to_number(raw[r].front()).has_value();
  }
  const std::size_t skip = id_column ? 1 : 0;

  DataTable t;
  t.response = response;
  t.columns.assign(header.begin() + static_cast<std::ptrdiff_t>(skip), header.end());
  t.values.resize(static_cast<Eigen::Index>(raw.size() - 1),
                  static_cast<Eigen::Index>(t.columns.size()));
  for (std::size_t r = 1; r < raw.size(); ++r) {
    if (id_column) t.row_ids.push_back(raw[r].front());
    for (std::size_t c = skip; c < header.size(); ++c) {
      const auto v = to_number(raw[r][c]);
      if (!v) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_numbers[r]) +
                                               ": non-numeric value '" + raw[r][c] + "' in column " +
                                               header[c]);
      }
      t.values(static_cast<Eigen::Index>(r - 1), static_cast<Eigen::Index>(c - skip)) = *v;
    }
  }
  if (!response.empty()) t.column_index(response);
  return t;
}

DataTable load_data_table(const std::string& path, const std::string& response) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return parse_data_table(in, response);
}

std::optional<double> RegressionModel::coefficient(const std::string& name) const {
  const auto key = canonical_column_name(name);
  for (std::size_t j = 0; j < predictors.size(); ++j) {
    if (canonical_column_name(predictors[j]) == key) {
      return coefficients(static_cast<Eigen::Index>(j + 1));
    }
  }
  return std::nullopt;
}

RegressionModel ols_fit(const DataTable& table, const std::vector<std::string>& predictors) {
  const auto n = static_cast<std::size_t>(table.rows());
  const std::size_t k = predictors.size();
  if (n <= k + 1) {
    throw Error(ErrorCode::TooFewRows, "OLS with " + std::to_string(k) + " predictors needs more than " +
                                           std::to_string(k + 1) + " rows, got " + std::to_string(n));
  }
  const Eigen::VectorXd y = table.column(table.response);
  Eigen::MatrixXd x(table.rows(), static_cast<Eigen::Index>(k + 1));
  x.col(0).setOnes();
  for (std::size_t j = 0; j < k; ++j) {
    x.col(static_cast<Eigen::Index>(j + 1)) = table.column(predictors[j]);
  }

  const auto sol = householder_least_squares(x, y);
  const double tss = (y.array() - y.mean()).square().sum();
  if (tss <= 0.0) throw Error(ErrorCode::InvalidInput, "response column is constant");

  RegressionModel m;
  m.predictors = predictors;
  m.response = table.response;
  m.n = n;
  m.residual_df = n - k - 1;
  m.coefficients = sol.coefficients;
  const double s2 = sol.rss / static_cast<double>(m.residual_df);
  m.std_errors = (s2 * sol.unscaled_covariance.diagonal().array()).sqrt().matrix();
  m.t_stats = m.coefficients.cwiseQuotient(m.std_errors);
  m.p_values.resize(m.t_stats.size());
  for (Eigen::Index j = 0; j < m.t_stats.size(); ++j) {
    m.p_values(j) = t_sf(m.t_stats(j), static_cast<double>(m.residual_df));
  }
  const double sd_y = sample_sd(y);
  m.standardized_betas.resize(static_cast<Eigen::Index>(k));
  for (std::size_t j = 0; j < k; ++j) {
    const auto col = static_cast<Eigen::Index>(j + 1);
    m.standardized_betas(col - 1) = m.coefficients(col) * sample_sd(x.col(col)) / sd_y;
  }
  m.r2 = 1.0 - sol.rss / tss;
  m.adjusted_r2 = respeak::adjusted_r2(m.r2, n, k);
  return m;
}

EliminationTrace backward_eliminate(const DataTable& table,
                                    const std::vector<std::string>& candidates, double alpha) {
  EliminationTrace trace;
  std::vector<std::string> current = candidates;
  for (std::size_t step = 1;; ++step) {
    EliminationStep s;
    s.step = step;
    s.model = ols_fit(table, current);
    std::optional<std::size_t> worst;
    if (current.size() > 1) {
      for (std::size_t j = 0; j < current.size(); ++j) {
        const double p = s.model.p_values(static_cast<Eigen::Index>(j + 1));
        if (p <= alpha) continue;
        if (!worst || p >= s.model.p_values(static_cast<Eigen::Index>(*worst + 1))) worst = j;
      }
    }
    if (worst) s.removed = current[*worst];
    trace.steps.push_back(std::move(s));
    if (!worst) break;
    current.erase(current.begin() + static_cast<std::ptrdiff_t>(*worst));
  }
  return trace;
}

double predict(const RegressionModel& model, const std::map<std::string, double>& scores) {
  double value = model.intercept();
  for (std::size_t j = 0; j < model.predictors.size(); ++j) {
    const auto key = canonical_column_name(model.predictors[j]);
    auto it = std::find_if(scores.begin(), scores.end(), [&](const auto& kv) {
      return canonical_column_name(kv.first) == key;
    });
    if (it == scores.end()) {
      throw Error(ErrorCode::MissingPredictor, "no value for predictor " + model.predictors[j]);
    }
    value += model.coefficients(static_cast<Eigen::Index>(j + 1)) * it->second;
  }
  return value;
}

RegressionModel published_ner_model() {
  RegressionModel m;
  m.response = "NER";
  m.predictors = {"BLEU", "NIST", "EBLEU"};
  m.coefficients.resize(4);
  m.coefficients << 86.55, 0.254, 0.924, -0.221;
  return m;
}

}  // namespace respeak
