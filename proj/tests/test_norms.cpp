#include <catch2/catch_amalgamated.hpp>

#include "matineq/norms.hpp"
#include "matineq/sampling.hpp"

using namespace matineq;

TEST_CASE("norm examples") {
  const ComplexMatrix m = ComplexMatrix::from_rows(
      {{Complex(3, 0), Complex(4, 0)}, {Complex(0, 0), Complex(0, 0)}});
  CHECK(norm(NormSpec::hs(), m) == Catch::Approx(5.0).epsilon(1e-14));
  CHECK(norm(NormSpec::trace_norm(), ComplexMatrix::diag({1, -2})) ==
        Catch::Approx(3.0).epsilon(1e-12));
  CHECK(norm(NormSpec::operator_norm(), m) == Catch::Approx(5.0).epsilon(1e-12));
  CHECK(norm(NormSpec::ky_fan(2), m) == Catch::Approx(5.0).epsilon(1e-12));

  CHECK_THROWS_AS(norm(NormSpec::ky_fan(3), m), DomainError);
  CHECK_THROWS_AS(NormSpec::schatten(0.5), DomainError);
  CHECK_THROWS_AS(NormSpec::ky_fan(0), DomainError);
}

TEST_CASE("norm spec strings") {
  CHECK(NormSpec::parse("hs").kind == NormSpec::Kind::HilbertSchmidt);
  CHECK(NormSpec::parse("trace").kind == NormSpec::Kind::TraceNorm);
  CHECK(NormSpec::parse("op").kind == NormSpec::Kind::OperatorNorm);
  CHECK(NormSpec::parse("kyfan:3").k == 3);
  CHECK(NormSpec::parse("schatten:2.5").p == 2.5);
  CHECK_THROWS_AS(NormSpec::parse("frobenius"), DomainError);
  for (const NormSpec& s : all_default_specs(5))
    CHECK(NormSpec::parse(s.to_string()).to_string() == s.to_string());
}

TEST_CASE("default family has eight members") {
  CHECK(all_default_specs(3).size() == 8);
  CHECK(all_default_specs(6).size() == 8);
  // small dimensions drop duplicate Ky Fan orders
  CHECK(all_default_specs(2).size() == 7);
  CHECK(all_default_specs(1).size() == 6);
}

TEST_CASE("schatten and ky fan coincide with their closed forms") {
  SplitMix64 g(123);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(g.next() % 6);
    const ComplexMatrix m = gen_matrix(g.next(), n, n);
    const double hs = norm(NormSpec::hs(), m);
    CHECK(norm(NormSpec::schatten(2.0), m) ==
          Catch::Approx(hs).margin(1e-12 * std::max(1.0, hs)));
    CHECK(norm(NormSpec::schatten(1.0), m) ==
          Catch::Approx(norm(NormSpec::trace_norm(), m))
              .margin(1e-12 * std::max(1.0, hs)));
    CHECK(norm(NormSpec::ky_fan(1), m) ==
          Catch::Approx(norm(NormSpec::operator_norm(), m))
              .margin(1e-14 * std::max(1.0, hs)));
    CHECK(norm(NormSpec::ky_fan(n), m) ==
          Catch::Approx(norm(NormSpec::trace_norm(), m))
              .margin(1e-12 * std::max(1.0, hs)));
  }
}

TEST_CASE("unitary invariance over the default family") {
  SplitMix64 g(321);
  for (int i = 0; i < 60; ++i) {
    const int n = 2 + static_cast<int>(g.next() % 5);
    const ComplexMatrix m = gen_matrix(g.next(), n, n);
    const ComplexMatrix u = gen_unitary(g.next(), n);
    const ComplexMatrix v = gen_unitary(g.next(), n);
    const ComplexMatrix rotated = u * m * v;
    for (const NormSpec& spec : all_default_specs(n)) {
      const double base = norm(spec, m);
      const double rot = norm(spec, rotated);
      REQUIRE(std::abs(rot - base) <= 1e-9 * std::max(1.0, base));
    }
  }
}

TEST_CASE("triangle inequality and homogeneity") {
  SplitMix64 g(77);
  for (int i = 0; i < 60; ++i) {
    const int n = 1 + static_cast<int>(g.next() % 6);
    const ComplexMatrix a = gen_matrix(g.next(), n, n);
    const ComplexMatrix b = gen_matrix(g.next(), n, n);
    const double t = g.uniform(-3.0, 3.0);
    for (const NormSpec& spec : all_default_specs(n)) {
      const double na = norm(spec, a);
      const double nb = norm(spec, b);
      const double nab = norm(spec, a + b);
      REQUIRE(nab <= na + nb + 1e-9 * std::max(1.0, na + nb));
      const double scaled = norm(spec, t * a);
      REQUIRE(std::abs(scaled - std::abs(t) * na) <=
              1e-9 * std::max(1.0, std::abs(t) * na));
      REQUIRE(na >= 0.0);
    }
  }
}

TEST_CASE("hs entrywise equals singular value route") {
  SplitMix64 g(99);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(g.next() % 6);
    const ComplexMatrix m = gen_matrix(g.next(), n, n);
    double sv_route = 0.0;
    for (double s : singular_values(m)) sv_route += s * s;
    sv_route = std::sqrt(sv_route);
    const double entry_route = m.hs_norm();
    REQUIRE(std::abs(sv_route - entry_route) <=
            1e-10 * std::max(1.0, entry_route));
  }
}
