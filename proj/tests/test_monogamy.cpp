#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qmono/errors.hpp"
#include "qmono/factories.hpp"
#include "qmono/monogamy.hpp"
#include "qmono/tensor_ops.hpp"

using namespace qmono;

namespace {

constexpr MeasureId kAll[] = {MeasureId::concurrence, MeasureId::negativity, MeasureId::cren, MeasureId::eof};

// Exchanges qubits a and b of an n-qubit state.
PureState swap_qubits(const PureState& psi, int a, int b) {
  const int n = psi.num_subsystems();
  Vector out(psi.amplitudes().size());
  for (Eigen::Index idx = 0; idx < out.size(); ++idx) {
    const int ba = (static_cast<int>(idx) >> (n - 1 - a)) & 1;
    const int bb = (static_cast<int>(idx) >> (n - 1 - b)) & 1;
    Eigen::Index j = idx;
    if (ba != bb) j ^= (Eigen::Index{1} << (n - 1 - a)) | (Eigen::Index{1} << (n - 1 - b));
    out(j) = psi.amplitudes()(idx);
  }
  return PureState(out, psi.dims());
}

// Pairwise negativity of the W state from an explicit 4x4 oracle.
double w_pair_negativity_oracle(int n) {
  const auto rho = partial_trace(to_density(w_state(n)), {0, 1});
  return oracle::hermitian_trace_norm(oracle::partial_transpose(rho.matrix(), {2, 2}, {0})) - 1.0;
}

}  // namespace

TEST_CASE("regime classification") {
  CHECK(AlphaExponent::classify(2.0, MeasureId::negativity).regime == Regime::monogamy);
  CHECK(AlphaExponent::classify(2.0, MeasureId::negativity).label() == "monogamy_neg_cren");
  CHECK(AlphaExponent::classify(1.9, MeasureId::concurrence).regime == Regime::open_band);
  CHECK(AlphaExponent::classify(std::numbers::sqrt2, MeasureId::eof).label() == "monogamy_eof");
  CHECK(AlphaExponent::classify(1.4142135, MeasureId::eof).regime == Regime::monogamy);
  CHECK(AlphaExponent::classify(1.4, MeasureId::eof).regime == Regime::open_band);
  CHECK(AlphaExponent::classify(-0.5, MeasureId::eof).label() == "polygamy");
  CHECK_THROWS_AS(AlphaExponent::classify(0.0, MeasureId::eof), ArgumentError);
  CHECK_THROWS_AS(AlphaExponent::classify(std::nan(""), MeasureId::eof), ArgumentError);
}

TEST_CASE("GHZ and W residuals") {
  for (int n = 3; n <= 5; ++n) {
    for (double a : {0.3, 1.0, 1.7}) {
      const auto g = alpha_residual(ghz_state(n), MeasureId::concurrence, a);
      CHECK(std::abs(g.residual - 1.0) < 1e-10);
      CHECK(g.verdict == Verdict::monogamous);
      const auto w = alpha_residual(w_state(n), MeasureId::concurrence, a);
      const double expect = std::pow(2.0 / n, a) * (std::pow(n - 1.0, a / 2.0) - (n - 1.0));
      CHECK(std::abs(w.residual - expect) < 1e-10);
      CHECK(w.residual < 0.0);
      CHECK(w.verdict == Verdict::polygamous);
    }
  }
  const auto w4 = alpha_residual(w_state(4), MeasureId::concurrence, 2.0);
  CHECK(std::abs(w4.residual) < 1e-10);
  CHECK(w4.verdict == Verdict::monogamous);
  CHECK(w4.rhs_terms.size() == 3);
  for (const auto& t : w4.rhs_terms) CHECK(std::abs(t.measure_value - 0.5) < 1e-12);
}

TEST_CASE("report bookkeeping") {
  const auto r = alpha_residual(random_pure_state({2, 2, 2, 2}, 3), MeasureId::negativity, 2.5, 2);
  CHECK(r.focus == 2);
  REQUIRE(r.rhs_terms.size() == 3);
  CHECK(r.rhs_terms[0].partners == std::vector<int>{0});
  CHECK(r.rhs_terms[2].partners == std::vector<int>{3});
  double sum = 0.0;
  for (const auto& t : r.rhs_terms) {
    sum += t.value;
    CHECK(std::abs(t.value - std::pow(t.measure_value, 2.5)) < 1e-15);
  }
  CHECK(std::abs(r.residual - (r.lhs - sum)) < 1e-12);
  CHECK(std::abs(r.lhs - std::pow(r.lhs_measure, 2.5)) < 1e-15);
  CHECK(r.exact);
  CHECK(r.tolerance == 1e-9);
  CHECK(r.regime == "monogamy_neg_cren");
}

TEST_CASE("pairwise terms match brute-force marginals") {
  const auto psi = random_pure_state({2, 2, 2}, 12);
  const auto r = alpha_residual(psi, MeasureId::concurrence, 2.0);
  const Matrix full = to_density(psi).matrix();
  for (int k = 1; k <= 2; ++k) {
    const Matrix pair = oracle::partial_trace(full, {2, 2, 2}, {0, k});
    CHECK(std::abs(r.rhs_terms[static_cast<std::size_t>(k - 1)].measure_value - oracle::wootters(pair)) < 1e-7);
  }
}

TEST_CASE("monogamy regime holds on random states") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 3 + static_cast<int>(seed % 2);
    const auto psi = random_pure_state(Dims(static_cast<std::size_t>(n), 2), seed);
    for (MeasureId m : kAll) {
      const std::vector<double> alphas = m == MeasureId::eof ? std::vector<double>{std::numbers::sqrt2, 1.5, 2.0}
                                                             : std::vector<double>{2.0, 2.5, 3.0};
      for (double a : alphas) {
        const auto r = alpha_residual(psi, m, a);
        CHECK(r.residual >= -1e-9);
        CHECK(r.verdict == Verdict::monogamous);
      }
    }
  }
}

TEST_CASE("polygamy regime and vacuous passes") {
  const auto w = polygamy_check(w_state(3), MeasureId::concurrence, -1.0);
  CHECK(std::abs(w.lhs - 3.0 / (2.0 * std::sqrt(2.0))) < 1e-12);
  CHECK(std::abs(w.lhs - w.residual - 3.0) < 1e-12);
  CHECK(w.verdict == Verdict::polygamous);
  CHECK(w.strictness_not_decided);

  const auto g = polygamy_check(ghz_state(3), MeasureId::negativity, -1.0);
  CHECK(g.verdict == Verdict::vacuous_pass);
  for (const auto& t : g.rhs_terms) {
    CHECK(t.excluded);
    CHECK(t.value == 0.0);
  }
  CHECK(std::isfinite(g.residual));
  CHECK_THROWS_AS(polygamy_check(w_state(3), MeasureId::concurrence, 0.5), ArgumentError);

  int checked = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto psi = random_pure_state({2, 2, 2}, seed);
    for (MeasureId m : kAll) {
      for (double a : {-0.5, -1.0, -2.0}) {
        const auto r = polygamy_check(psi, m, a);
        if (r.verdict == Verdict::vacuous_pass) continue;
        const bool strong = std::all_of(r.rhs_terms.begin(), r.rhs_terms.end(),
                                        [](const ResidualTerm& t) { return t.measure_value > 0.05; });
        if (!strong) continue;
        ++checked;
        CHECK(r.residual <= 1e-9);
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("alpha = 0 and bad arguments") {
  const auto psi = random_pure_state({2, 2, 2}, 1);
  CHECK_THROWS_AS(alpha_residual(psi, MeasureId::negativity, 0.0), ArgumentError);
  CHECK_THROWS_AS(alpha_residual(psi, MeasureId::negativity, 2.0, 3), ArgumentError);
  CHECK_THROWS_AS(alpha_residual(random_pure_state({2, 3}, 1), MeasureId::negativity, 2.0), ArgumentError);
  CHECK_THROWS_AS(hierarchical_residual(psi, MeasureId::negativity, 2.0, 2), ArgumentError);
  CHECK_THROWS_AS(hierarchical_residual(psi, MeasureId::negativity, 2.0, 4), ArgumentError);
  CHECK_THROWS_AS(alpha_sweep(psi, MeasureId::negativity, std::vector<double>{}), ArgumentError);
  CHECK_THROWS_AS(alpha_sweep(psi, MeasureId::negativity, std::vector<double>{1.0, 0.0}), ArgumentError);
}

TEST_CASE("focus is a parameter") {
  const auto psi = random_pure_state({2, 2, 2, 2}, 31);
  const auto swapped = swap_qubits(psi, 0, 2);
  for (MeasureId m : kAll) {
    const auto a = alpha_residual(psi, m, 2.0, 2);
    const auto b = alpha_residual(swapped, m, 2.0, 0);
    CHECK(std::abs(a.residual - b.residual) < 1e-10);
  }
}

TEST_CASE("residuals are local-unitary invariant") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto psi = random_pure_state({2, 2, 2}, seed);
    const int q = static_cast<int>(seed % 3);
    const auto moved = apply_local_unitary(psi, q, haar_unitary(2, seed + 40));
    for (MeasureId m : kAll) {
      for (double a : {-1.0, 1.0, 2.0}) {
        const auto r0 = alpha_residual(psi, m, a);
        const auto r1 = alpha_residual(moved, m, a);
        CHECK(std::abs(r0.residual - r1.residual) < 1e-9);
      }
    }
  }
}

TEST_CASE("hierarchical family") {
  const auto psi = random_pure_state({2, 2, 2, 2}, 8);
  for (MeasureId m : kAll) {
    const auto full = alpha_residual(psi, m, 2.0);
    const auto top = hierarchical_residual(psi, m, 2.0, 4);
    CHECK(std::abs(full.residual - top.residual) < 1e-14);
    CHECK(top.exact);
  }
  const auto w3 = hierarchical_residual(w_state(3), MeasureId::negativity, 2.0, 3);
  CHECK(std::abs(w3.residual - alpha_residual(w_state(3), MeasureId::negativity, 2.0).residual) < 1e-14);

  const auto g = hierarchical_residual(ghz_state(4), MeasureId::negativity, 2.0, 3);
  REQUIRE(g.rhs_terms.size() == 2);
  CHECK(g.rhs_terms[1].partners == std::vector<int>{2, 3});
  CHECK(std::abs(g.lhs - 1.0) < 1e-12);
  CHECK(g.rhs_terms[0].measure_value < 1e-12);
  CHECK(g.rhs_terms[1].measure_value < 1e-12);
  CHECK(std::abs(g.residual - 1.0) < 1e-12);
  // 8x8 oracle on the GHZ tail marginal.
  const Matrix tail = oracle::partial_trace(to_density(ghz_state(4)).matrix(), {2, 2, 2, 2}, {0, 2, 3});
  CHECK(oracle::hermitian_trace_norm(oracle::partial_transpose(tail, {2, 2, 2}, {0})) - 1.0 < 1e-12);

  const auto neg = hierarchical_residual(psi, MeasureId::negativity, 2.0, 3);
  CHECK(neg.exact);
  CHECK(neg.residual >= -1e-9);

  RoofConfig quick;
  quick.restarts = 4;
  const auto con = hierarchical_residual(psi, MeasureId::concurrence, 2.0, 3, 0, quick);
  CHECK_FALSE(con.exact);
  CHECK_FALSE(con.rhs_terms.back().exact);
  CHECK(con.rhs_terms.front().exact);
  CHECK(con.bound_direction.find("LOWER bound") != std::string::npos);
  CHECK(con.residual >= -1e-6);

  CHECK_THROWS_AS(hierarchical_residual(psi, MeasureId::eof, 2.0, 3), UnsupportedRoute);
  // Qubit 1 factors out, so the tail marginal on {0, 2, 3} is pure and eof
  // takes the pure route.
  const auto prod = swap_qubits(tensor_product(random_pure_state({2, 2, 2}, 2), basis_state({2}, 0)), 1, 3);
  const auto e = hierarchical_residual(prod, MeasureId::eof, 2.0, 3);
  CHECK(e.exact);
  CHECK(e.rhs_terms[0].measure_value < 1e-12);
  CHECK(std::abs(e.residual) < 1e-10);
}

TEST_CASE("concurrence closed forms") {
  CHECK(std::abs(tau_concurrence_w_closed_form(3, 1.0) - (2.0 / 3.0) * (std::sqrt(2.0) - 2.0)) < 1e-15);
  CHECK(std::abs(tau_concurrence_w_closed_form(3, 1.0) + 0.39052429175) < 1e-10);
  CHECK(std::abs(tau_concurrence_w_closed_form(3, 2.0)) < 1e-15);
  CHECK(tau_concurrence_ghz_closed_form(7, 0.4) == 1.0);
  for (int n = 3; n <= 6; ++n) {
    for (int i = 1; i <= 50; ++i) {
      const double a = 2.0 * i / 51.0;
      CHECK(std::abs(alpha_residual(w_state(n), MeasureId::concurrence, a).residual -
                     tau_concurrence_w_closed_form(n, a)) < 1e-10);
      CHECK(std::abs(alpha_residual(ghz_state(n), MeasureId::concurrence, a).residual -
                     tau_concurrence_ghz_closed_form(n, a)) < 1e-10);
      CHECK(std::abs(alpha_residual(w_state(n), MeasureId::negativity, a).residual -
                     tau_negativity_w_closed_form(n, a)) < 1e-10);
      CHECK(tau_concurrence_w_closed_form(n, a) < 0.0);
    }
  }
  CHECK_THROWS_AS(tau_concurrence_w_closed_form(2, 1.0), ArgumentError);
  CHECK_THROWS_AS(tau_concurrence_w_closed_form(3, 0.0), ArgumentError);
  CHECK_THROWS_AS(tau_negativity_w_closed_form(3, -1.0), ArgumentError);
}

TEST_CASE("W negativity closed form") {
  CHECK(std::abs(w_pairwise_negativity_closed_form(3) - (std::sqrt(5.0) - 1.0) / 3.0) < 1e-15);
  for (int n = 3; n <= 6; ++n) {
    CHECK(std::abs(w_pairwise_negativity_closed_form(n) - w_pair_negativity_oracle(n)) < 1e-12);
  }
  const auto check = verify_w_negativity_reading();
  CHECK(check.verified);
  CHECK(check.max_pairwise_deviation < 1e-12);
  CHECK(check.max_residual_deviation < 1e-12);

  CHECK(std::abs(tau_negativity_w_closed_form(3, 2.0) - (4.0 * std::sqrt(5.0) - 4.0) / 9.0) < 1e-12);
  CHECK(std::abs(tau_negativity_w_closed_form(3, 1e-6) + 1.0) < 1e-4);

  for (int n = 3; n <= 5; ++n) {
    const double x = tau_negativity_w_crossing(n);
    CHECK(x > 0.0);
    CHECK(x < 2.0);
    CHECK(tau_negativity_w_closed_form(n, x - 1e-6) < 0.0);
    CHECK(tau_negativity_w_closed_form(n, x + 1e-6) > 0.0);
  }
  CHECK_THROWS_AS(tau_negativity_w_crossing(3, 1.5, 2.0), ArgumentError);
}

TEST_CASE("alpha sweeps") {
  std::vector<double> grid;
  for (int i = 1; i <= 19; ++i) grid.push_back(0.1 * i);
  const auto w5 = alpha_sweep(w_state(5), MeasureId::negativity, grid);
  REQUIRE(w5.size() == 19);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(w5[i].alpha == grid[i]);
    CHECK(std::abs(w5[i].residual - tau_negativity_w_closed_form(5, grid[i])) < 1e-10);
  }
  for (const auto& r : alpha_sweep(ghz_state(3), MeasureId::concurrence, grid)) {
    CHECK(std::abs(r.residual - 1.0) < 1e-10);
  }
  const std::vector<double> one{2.0};
  const auto single = alpha_sweep(w_state(4), MeasureId::negativity, one);
  CHECK(single.size() == 1);
  CHECK(single[0].residual == alpha_residual(w_state(4), MeasureId::negativity, 2.0).residual);
}
