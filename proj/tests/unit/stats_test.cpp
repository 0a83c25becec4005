#include <doctest.h>

#include <random>
#include <sstream>

#include "respeak/fixtures.hpp"
#include "respeak/stats.hpp"
#include "support/oracles.hpp"

using namespace respeak;

namespace {

DataTable table_from(const std::string& csv, const std::string& response = "Y") {
  std::istringstream in(csv);
  return parse_data_table(in, response);
}

double correlation(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const Eigen::VectorXd da = a.array() - a.mean(), db = b.array() - b.mean();
  return da.dot(db) / std::sqrt(da.squaredNorm() * db.squaredNorm());
}

}  // namespace

TEST_CASE("t_sf") {
  CHECK(t_sf(0.0, 5.0) == doctest::Approx(1.0));
  CHECK(t_sf(1.96, 1000.0) == doctest::Approx(0.0503).epsilon(0.002));
  CHECK(t_sf(12.706, 1.0) == doctest::Approx(0.05).epsilon(1e-3));
  CHECK(t_sf(-2.0, 7.0) == doctest::Approx(t_sf(2.0, 7.0)));
  for (double df : {1.0, 3.0, 30.0}) {
    for (double t : {0.3, 1.0, 2.5, 6.0}) {
      CHECK(t_sf(t, df) == doctest::Approx(oracle::t_two_sided(t, df)).epsilon(1e-8));
    }
  }
}

TEST_CASE("adjusted_r2") {
  CHECK(adjusted_r2(0.775, 57, 3) == doctest::Approx(0.7623).epsilon(1e-4));
  CHECK(adjusted_r2(0.1, 6, 1) == doctest::Approx(-0.125));
  CHECK_THROWS_AS(adjusted_r2(0.5, 4, 3), Error);
}

TEST_CASE("householder_least_squares") {
  Eigen::MatrixXd x(4, 2);
  x << 1, 1, 1, 2, 1, 3, 1, 4;
  Eigen::VectorXd y(4);
  y << 2, 4, 6, 8;
  const auto s = householder_least_squares(x, y);
  CHECK(s.coefficients(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(s.coefficients(1) == doctest::Approx(2.0));
  CHECK(s.rss == doctest::Approx(0.0).epsilon(1e-12));

  Eigen::MatrixXd dup(4, 3);
  dup << 1, 1, 1, 1, 2, 2, 1, 3, 3, 1, 4, 4;
  CHECK_THROWS_AS(householder_least_squares(dup, y), Error);

  std::mt19937 rng(gen::seed() + 17);
  std::normal_distribution<double> nd(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::MatrixXd d(8, 3);
    Eigen::VectorXd r(8);
    oracle::Matrix rows;
    std::vector<double> ys;
    for (int i = 0; i < 8; ++i) {
      d(i, 0) = 1.0;
      d(i, 1) = nd(rng);
      d(i, 2) = nd(rng);
      r(i) = 1.0 + 2.0 * d(i, 1) - d(i, 2) + 0.3 * nd(rng);
      rows.push_back({1.0, d(i, 1), d(i, 2)});
      ys.push_back(r(i));
    }
    const auto fit = householder_least_squares(d, r);
    const auto want = oracle::normal_equations(rows, ys);
    for (int j = 0; j < 3; ++j) CHECK(fit.coefficients(j) == doctest::Approx(want[j]).epsilon(1e-8));
    CHECK((d.transpose() * fit.residuals).norm() < 1e-9);
  }
}

TEST_CASE("parse_data_table") {
  const auto t = table_from("spkr,a,Meteor-pl,y\nx1,1,2,3\nx2,4,5,6\n", "y");
  CHECK(t.columns.size() == 3);
  CHECK(t.row_ids == std::vector<std::string>{"x1", "x2"});
  CHECK(t.column("METEOR_PL")(1) == 5.0);
  CHECK(canonical_column_name("red.") == "RED");
  CHECK_THROWS_AS(t.column_index("nope"), Error);
  CHECK_THROWS_AS(table_from("a,y\n1,oops\n", "y"), Error);
}

TEST_CASE("ols_fit on the metric table") {
  const auto table = fixture_table("table1");
  CHECK(table.rows() == 57);
  const auto m = ols_fit(table, {"BLEU", "NIST", "EBLEU"});
  CHECK(m.intercept() == doctest::Approx(86.55).epsilon(0.002));
  CHECK(*m.coefficient("BLEU") == doctest::Approx(0.254).epsilon(0.01));
  CHECK(*m.coefficient("NIST") == doctest::Approx(0.924).epsilon(0.01));
  CHECK(*m.coefficient("EBLEU") == doctest::Approx(-0.221).epsilon(0.01));
  CHECK(m.adjusted_r2 == doctest::Approx(0.761).epsilon(0.002));
  CHECK(m.residual_df == 53);
  CHECK_FALSE(m.coefficient("TER").has_value());
}

TEST_CASE("ols_fit properties") {
  std::mt19937 rng(gen::seed() + 19);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::ostringstream csv;
  csv << "a,b,noise,y\n";
  for (int i = 0; i < 40; ++i) {
    const double a = nd(rng), b = nd(rng), noise = nd(rng);
    csv << a << ',' << b << ',' << noise << ',' << 3.0 + 2.0 * a - 1.5 * b + 0.2 * nd(rng) << '\n';
  }
  const auto table = table_from(csv.str());

  const auto one = ols_fit(table, {"a"});
  const double r = correlation(table.column("a"), table.column("Y"));
  CHECK(one.r2 == doctest::Approx(r * r));

  SUBCASE("standardized betas are scale invariant") {
    auto scaled = table;
    scaled.values.col(scaled.column_index("a")) *= 1000.0;
    const auto m1 = ols_fit(table, {"a", "b"});
    const auto m2 = ols_fit(scaled, {"a", "b"});
    CHECK(m2.standardized_betas(0) == doctest::Approx(m1.standardized_betas(0)));
    CHECK(m2.coefficients(1) == doctest::Approx(m1.coefficients(1) / 1000.0));
  }
  SUBCASE("the noise column is eliminated first") {
    const auto trace = backward_eliminate(table, {"a", "noise", "b"});
    REQUIRE(trace.steps.size() == 2);
    CHECK(trace.steps[0].removed == std::optional<std::string>("noise"));
    CHECK(trace.final_model().predictors == std::vector<std::string>{"a", "b"});
  }
  SUBCASE("a single significant predictor is a one-step trace") {
    const auto trace = backward_eliminate(table, {"a"});
    CHECK(trace.steps.size() == 1);
    CHECK_FALSE(trace.steps[0].removed.has_value());
  }
  SUBCASE("equal p-values drop the later candidate") {
    auto twin = table;
    const Eigen::Index n = twin.rows();
    twin.columns = {"p", "q", "Y"};
    Eigen::MatrixXd v(n, 3);
    for (Eigen::Index i = 0; i < n; ++i) {
      v(i, 0) = table.values(i, 2);
      v(i, 1) = table.values(n - 1 - i, 2);
      v(i, 2) = 0.0;
    }
    // y symmetric in p and q: swapping the columns reverses the row order.
    for (Eigen::Index i = 0; i < n; ++i) v(i, 2) = 0.01 * (v(i, 0) + v(i, 1)) + nd(rng);
    twin.values = v;
    const auto m = ols_fit(twin, {"p", "q"});
    if (m.p_values(1) == m.p_values(2) && m.p_values(1) > 0.05) {
      CHECK(backward_eliminate(twin, {"p", "q"}).steps[0].removed == std::optional<std::string>("q"));
    }
  }
  CHECK_THROWS_AS(ols_fit(table_from("a,y\n1,2\n2,3\n"), {"a"}), Error);
}

TEST_CASE("backward elimination on the metric table") {
  const auto table = fixture_table("table1");
  const auto trace = backward_eliminate(
      table, {"BLEU", "NIST", "TER", "METEOR", "METEOR-PL", "EBLEU", "RIBES"});
  const auto& m = trace.final_model();
  CHECK(m.predictors == std::vector<std::string>{"BLEU", "NIST", "EBLEU"});
  for (Eigen::Index j = 1; j < m.p_values.size(); ++j) CHECK(m.p_values(j) <= 0.05);
}

TEST_CASE("predict") {
  const auto pub = published_ner_model();
  CHECK(predict(pub, {{"BLEU", 0.0}, {"NIST", 0.0}, {"EBLEU", 0.0}}) == doctest::Approx(86.55));
  CHECK(predict(pub, {{"bleu", 88.82}, {"NIST", 8.66}, {"EBLEU", 95.20}}) ==
        doctest::Approx(96.07292));
  CHECK_THROWS_AS(predict(pub, {{"BLEU", 1.0}, {"NIST", 1.0}}), Error);
}
