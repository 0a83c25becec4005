#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "respeak/error.hpp"
#include "respeak/special_functions.hpp"

namespace respeak {

/// Relative pivot threshold below which a design matrix is rank deficient.
inline constexpr double kRankThreshold = 1e-10;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
struct LeastSquaresSolution {
  VectorX<Scalar> coefficients;
  /// (XᵀX)⁻¹, obtained from the triangular factor rather than by inversion.
  MatrixX<Scalar> unscaled_covariance;
  VectorX<Scalar> residuals;
  Scalar rss = Scalar(0);
};

/// Least squares through column-pivoting Householder QR. Throws
/// Error(RankDeficient) when the numerical rank is below the column count.
template <typename DerivedX, typename DerivedY>
LeastSquaresSolution<typename DerivedX::Scalar> householder_least_squares(
    const Eigen::MatrixBase<DerivedX>& design, const Eigen::MatrixBase<DerivedY>& response,
    typename DerivedX::Scalar pivot_threshold = typename DerivedX::Scalar(kRankThreshold)) {
  using Scalar = typename DerivedX::Scalar;
  const Eigen::Index cols = design.cols();
  Eigen::ColPivHouseholderQR<MatrixX<Scalar>> qr(design);
  qr.setThreshold(pivot_threshold);
  if (qr.rank() < cols) {
    throw Error(ErrorCode::RankDeficient,
                "design matrix has rank " + std::to_string(qr.rank()) + " < " +
                    std::to_string(cols) + " columns");
  }
  LeastSquaresSolution<Scalar> out;
  out.coefficients = qr.solve(response.derived());
  out.residuals = response - design * out.coefficients;
  out.rss = out.residuals.squaredNorm();

  const MatrixX<Scalar> r =
      qr.matrixR().topLeftCorner(cols, cols).template triangularView<Eigen::Upper>();
  const MatrixX<Scalar> r_inv = r.template triangularView<Eigen::Upper>().solve(
      MatrixX<Scalar>::Identity(cols, cols));
  const MatrixX<Scalar> permuted = r_inv * r_inv.transpose();
  const auto& perm = qr.colsPermutation();
  out.unscaled_covariance = perm * permuted * perm.transpose();
  return out;
}

/// 1 − (1 − r²)(n − 1)/(n − k − 1).
template <typename Scalar>
Scalar adjusted_r2(Scalar r2, std::size_t n, std::size_t k) {
  if (n <= k + 1) {
    throw Error(ErrorCode::DegenerateDf, "adjusted R² needs n > k + 1 (n=" + std::to_string(n) +
                                             ", k=" + std::to_string(k) + ")");
  }
  return Scalar(1) - (Scalar(1) - r2) * Scalar(n - 1) / Scalar(n - k - 1);
}

/// Numeric table with named columns. Column lookups ignore case and treat
/// '-' and '_' alike, so "METEOR-PL" and "METEOR_pl" name the same column.
struct DataTable {
  std::vector<std::string> columns;
  Eigen::MatrixXd values;
  std::vector<std::string> row_ids;
  std::string response;

  Eigen::Index rows() const noexcept { return values.rows(); }
  std::size_t column_index(const std::string& name) const;
  Eigen::VectorXd column(const std::string& name) const { return values.col(column_index(name)); }
};

std::string canonical_column_name(const std::string& name);

/// CSV with a header row. A first column headed id/spkr/speaker/segment, or
/// holding non-numeric values, is kept as row ids.
DataTable parse_data_table(std::istream& in, const std::string& response);
DataTable load_data_table(const std::string& path, const std::string& response);

struct RegressionModel {
  std::vector<std::string> predictors;
  /// Index 0 is the intercept; index j+1 belongs to predictors[j].
  Eigen::VectorXd coefficients;
  Eigen::VectorXd std_errors;
  Eigen::VectorXd t_stats;
  Eigen::VectorXd p_values;
  /// B_j · sd(x_j) / sd(y); no intercept entry.
  Eigen::VectorXd standardized_betas;
  double r2 = 0.0;
  double adjusted_r2 = 0.0;
  std::size_t n = 0;
  std::size_t residual_df = 0;
  std::string response;

  double intercept() const { return coefficients(0); }
  /// Coefficient of `name`, or nullopt when it is not a predictor.
  std::optional<double> coefficient(const std::string& name) const;
};

RegressionModel ols_fit(const DataTable& table, const std::vector<std::string>& predictors);

struct EliminationStep {
  std::size_t step = 1;
  RegressionModel model;
  /// Predictor dropped after this model was fitted.
  std::optional<std::string> removed;
};

struct EliminationTrace {
  std::vector<EliminationStep> steps;
  const RegressionModel& final_model() const { return steps.back().model; }
};

/// Refits while some predictor has p > alpha, dropping the one with the
/// largest p (the later-listed one on ties), until all survivors are
/// significant or a single predictor is left.
EliminationTrace backward_eliminate(const DataTable& table,
                                    const std::vector<std::string>& candidates,
                                    double alpha = 0.05);

/// intercept + Σ B_j x_j. Throws Error(MissingPredictor).
double predict(const RegressionModel& model, const std::map<std::string, double>& scores);

/// NER = 86.55 + 0.254·BLEU + 0.924·NIST − 0.221·EBLEU, as published.
RegressionModel published_ner_model();

}  // namespace respeak
