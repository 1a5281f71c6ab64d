#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qmono/errors.hpp"
#include "qmono/factories.hpp"
#include "qmono/measures.hpp"
#include "qmono/tensor_ops.hpp"

using namespace qmono;

namespace {

const Bipartition kTwo({0}, {1});

DensityMatrix werner(double p) { return DensityMatrix(oracle::werner(p), {2, 2}); }

}  // namespace

TEST_CASE("negativity") {
  CHECK(std::abs(negativity(bell_state(), kTwo).value - 1.0) < 1e-14);
  CHECK(negativity(basis_state({2, 3}, 4), kTwo).value < 1e-14);
  const auto prod = tensor_product(random_mixed_state({2}, 2, 1), random_mixed_state({3}, 3, 2));
  CHECK(negativity(prod, kTwo).value < 1e-12);

  const auto w_pair = partial_trace(w_state(3), {0, 1});
  const double expect = (std::sqrt(5.0) - 1.0) / 3.0;
  CHECK(std::abs(negativity(w_pair, kTwo).value - expect) < 1e-12);
  // Same value from the brute-force partial transpose.
  const double ref = oracle::hermitian_trace_norm(oracle::partial_transpose(w_pair.matrix(), {2, 2}, {0})) - 1.0;
  CHECK(std::abs(ref - expect) < 1e-12);
  CHECK(std::abs(negativity(w_pair, kTwo).halved() - expect / 2.0) < 1e-12);
  CHECK_THROWS_AS(negativity(w_pair, Bipartition({0}, {1, 2})), ArgumentError);
}

TEST_CASE("pure-state concurrence") {
  CHECK(std::abs(concurrence_pure(bell_state(), kTwo).value - 1.0) < 1e-14);
  for (int n = 3; n <= 6; ++n) {
    const auto rest = Bipartition::complement_of({0}, n);
    CHECK(std::abs(concurrence_pure(ghz_state(n), rest).value - 1.0) < 1e-14);
    CHECK(std::abs(concurrence_pure(w_state(n), rest).value - 2.0 * std::sqrt(n - 1.0) / n) < 1e-14);
  }
  // Qubit side: C = 2 sqrt(det rho_A).
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto psi = random_pure_state({2, 3}, seed);
    const Matrix a = oracle::partial_trace(to_density(psi).matrix(), {2, 3}, {0});
    CHECK(std::abs(concurrence_pure(psi, kTwo).value - 2.0 * std::sqrt(a.determinant().real())) < 1e-12);
  }
  CHECK(concurrence_pure(basis_state({2, 2}, 3), kTwo).value == 0.0);
}

TEST_CASE("spin flip") {
  const auto bell = to_density(bell_state());
  CHECK((spin_flip(bell) - bell.matrix()).cwiseAbs().maxCoeff() < 1e-15);
  const Matrix flipped = spin_flip(to_density(basis_state({2, 2}, 0)));
  CHECK(std::abs(flipped(3, 3) - 1.0) < 1e-15);
  const auto rho = random_mixed_state({2, 2}, 3, 4);
  CHECK(std::abs(spin_flip(rho).trace().real() - 1.0) < 1e-12);
  CHECK_THROWS_AS(spin_flip(to_density(ghz_state(3))), ArgumentError);
}

TEST_CASE("Wootters concurrence") {
  CHECK(std::abs(concurrence_two_qubit(to_density(bell_state())).value - 1.0) < 1e-12);
  CHECK(concurrence_two_qubit(DensityMatrix(Matrix::Identity(4, 4) * 0.25, {2, 2})).value == 0.0);
  CHECK(std::abs(concurrence_two_qubit(werner(0.8)).value - 0.7) < 1e-12);
  CHECK(std::abs(oracle::wootters(oracle::werner(0.8)) - 0.7) < 1e-12);
  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.9, 1.0}) {
    CHECK(std::abs(concurrence_two_qubit(werner(p)).value - oracle::werner_concurrence(p)) < 1e-10);
  }
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int rank = 2 + static_cast<int>(seed % 3);
    const auto rho = random_mixed_state({2, 2}, rank, seed);
    CHECK(std::abs(concurrence_two_qubit(rho).value - oracle::wootters(rho.matrix())) < 1e-7);
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto psi = random_pure_state({2, 2}, seed);
    CHECK(std::abs(concurrence_two_qubit(to_density(psi)).value - concurrence_pure(psi, kTwo).value) < 1e-10);
  }
  CHECK_THROWS_AS(concurrence_two_qubit(to_density(random_pure_state({2, 3}, 1))), ArgumentError);
}

TEST_CASE("binary entropy and eof") {
  CHECK(std::abs(binary_entropy(0.5) - 1.0) < 1e-15);
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(std::abs(binary_entropy(0.2) - 0.721928094887) < 1e-12);
  CHECK(std::abs(binary_entropy(0.2) - binary_entropy(0.8)) < 1e-15);
  CHECK_THROWS_AS(binary_entropy(1.1), ArgumentError);
  CHECK_THROWS_AS(binary_entropy(-0.01), ArgumentError);
  CHECK_NOTHROW(binary_entropy(1.0 + 1e-13));

  CHECK(std::abs(eof_two_qubit(to_density(bell_state())).value - 1.0) < 1e-12);
  CHECK(eof_two_qubit(to_density(basis_state({2, 2}, 1))).value < 1e-12);
  // Werner p = 0.8: C = 0.7, E = h((1 + sqrt(0.51)) / 2).
  const double expect = oracle::h((1.0 + std::sqrt(0.51)) / 2.0);
  CHECK(std::abs(expect - 0.591857407171) < 1e-12);
  CHECK(std::abs(eof_two_qubit(werner(0.8)).value - expect) < 1e-10);
  double previous = -1.0;
  for (double c = 0.0; c <= 1.0; c += 0.05) {
    const double e = eof_from_concurrence(c);
    CHECK(e >= previous);
    previous = e;
  }
}

TEST_CASE("pure-state eof") {
  CHECK(std::abs(eof_pure(bell_state(), kTwo).value - 1.0) < 1e-14);
  CHECK(eof_pure(basis_state({2, 2}, 0), kTwo).value < 1e-14);
  CHECK(std::abs(eof_pure(ghz_state(3), Bipartition({0}, {1, 2})).value - 1.0) < 1e-14);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto psi = random_pure_state({2, 2, 3}, seed);
    const Bipartition cut({0}, {1, 2});
    const double c = concurrence_pure(psi, cut).value;
    CHECK(std::abs(eof_pure(psi, cut).value - oracle::h((1.0 + std::sqrt(1.0 - c * c)) / 2.0)) < 1e-10);
    CHECK(std::abs(eof_pure(psi, cut).value - eof_pure(psi, cut.swapped()).value) < 1e-12);
    const Bipartition big({0, 1}, {2});
    CHECK(eof_pure(psi, big).value <= std::log2(3.0) + 1e-10);
  }
}

TEST_CASE("negativity equals concurrence for a qubit against anything") {
  for (const Dims& dims : {Dims{2, 2, 2}, Dims{2, 2, 3}, Dims{2, 3, 3}, Dims{2, 2, 4}, Dims{2, 4, 4}}) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto psi = random_pure_state(dims, seed);
      const Bipartition cut({0}, {1, 2});
      CHECK(std::abs(negativity(psi, cut).value - concurrence_pure(psi, cut).value) <= 1e-10);
    }
  }
}

TEST_CASE("negativity never exceeds concurrence on two qubits") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto rho = random_mixed_state({2, 2}, 1 + static_cast<int>(seed % 4), seed);
    CHECK(negativity(rho, kTwo).value <= concurrence_two_qubit(rho).value + 1e-10);
  }
}

TEST_CASE("measures are local-unitary invariant") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto rho = random_mixed_state({2, 2}, 3, seed);
    const auto moved = apply_local_unitary(apply_local_unitary(rho, 0, haar_unitary(2, seed + 1)), 1,
                                           haar_unitary(2, seed + 2));
    CHECK(std::abs(negativity(rho, kTwo).value - negativity(moved, kTwo).value) < 1e-9);
    CHECK(std::abs(concurrence_two_qubit(rho).value - concurrence_two_qubit(moved).value) < 1e-9);
    CHECK(std::abs(eof_two_qubit(rho).value - eof_two_qubit(moved).value) < 1e-9);

    const auto psi = random_pure_state({2, 2, 2}, seed);
    const auto psi2 = apply_local_unitary(psi, 2, haar_unitary(2, seed + 3));
    const Bipartition cut({0}, {1, 2});
    CHECK(std::abs(concurrence_pure(psi, cut).value - concurrence_pure(psi2, cut).value) < 1e-9);
    CHECK(std::abs(eof_pure(psi, cut).value - eof_pure(psi2, cut).value) < 1e-9);
  }
}

TEST_CASE("cren routes") {
  CHECK(std::abs(cren(bell_state(), kTwo).value - 1.0) < 1e-14);
  const auto w8 = cren(werner(0.8), kTwo);
  CHECK(std::abs(w8.value - 0.7) < 1e-12);
  CHECK(w8.exact);
  CHECK(w8.id == MeasureId::cren);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto psi = random_pure_state({2, 2, 2}, seed);
    const Bipartition cut({0}, {1, 2});
    CHECK(cren(psi, cut).value == negativity(psi, cut).value);
    const auto rho = random_mixed_state({2, 2}, 3, seed);
    CHECK(cren(rho, kTwo).value == concurrence_two_qubit(rho).value);
  }
  // Qubit against a qutrit: optimizer route, flagged inexact.
  RoofConfig quick;
  quick.restarts = 3;
  const auto mixed = cren(random_mixed_state({2, 3}, 2, 5), kTwo, quick);
  CHECK_FALSE(mixed.exact);
  CHECK_THROWS_AS(cren(random_mixed_state({3, 3}, 2, 5), kTwo), UnsupportedRoute);
}

TEST_CASE("evaluate dispatch") {
  const State ghz = ghz_state(3);
  CHECK(std::abs(evaluate(ghz, MeasureId::negativity, Bipartition({0}, {1, 2})).value - 1.0) < 1e-14);
  const State mixed3 = random_mixed_state({2, 2, 2}, 2, 1);
  CHECK_THROWS_AS(evaluate(mixed3, MeasureId::eof, Bipartition({0}, {1, 2})), UnsupportedRoute);
  RoofConfig quick;
  quick.restarts = 2;
  CHECK_FALSE(evaluate(mixed3, MeasureId::concurrence, Bipartition({0}, {1, 2}), quick).exact);
  const State rank_one = to_density(random_pure_state({2, 2, 2}, 3));
  const auto v = evaluate(rank_one, MeasureId::eof, Bipartition({0}, {1, 2}));
  CHECK(v.exact);
  CHECK(parse_measure_id("cren") == MeasureId::cren);
  CHECK_THROWS_AS(parse_measure_id("tangle"), ParseError);
}

TEST_CASE("clamping") {
  CHECK(clamp_nonnegative(-5e-11, "x") == 0.0);
  CHECK(clamp_nonnegative(0.3, "x") == 0.3);
  CHECK_THROWS_AS(clamp_nonnegative(-1e-6, "x"), NumericalIntegrityError);
}
