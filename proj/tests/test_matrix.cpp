#include <catch2/catch_amalgamated.hpp>

#include "matineq/hermitian.hpp"
#include "matineq/sampling.hpp"

using namespace matineq;

namespace {

ComplexMatrix random_hermitian(std::uint64_t seed, int n) {
  const ComplexMatrix g = gen_matrix(seed, n, n);
  return 0.5 * (g + g.adjoint());
}

}  // namespace

TEST_CASE("matrix basics") {
  ComplexMatrix m = ComplexMatrix::from_rows({{Complex(1, 2), Complex(3, -1)},
                                              {Complex(0, 0), Complex(2, 0)}});
  CHECK(m.rows() == 2);
  CHECK(m.trace() == Complex(3, 2));
  CHECK(m.adjoint().adjoint().entries() == m.entries());

  CHECK(det(ComplexMatrix::identity(5)) == Complex(1, 0));
  CHECK(ComplexMatrix::diag({1, 2, 3}).trace().real() == 6.0);

  CHECK_THROWS_AS(ComplexMatrix(65, 1), DomainError);
  CHECK_THROWS_AS(ComplexMatrix(0, 1), DomainError);
  CHECK_THROWS_AS(m * ComplexMatrix::identity(3), DomainError);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(inf, 0)}), DomainError);
}

TEST_CASE("det is multiplicative") {
  SplitMix64 g(123);
  for (int i = 0; i < 50; ++i) {
    const ComplexMatrix a = gen_matrix(g.next(), 4, 4);
    const ComplexMatrix b = gen_matrix(g.next(), 4, 4);
    const Complex lhs = det(a * b);
    const Complex rhs = det(a) * det(b);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("jacobi eigendecomposition examples") {
  SpectralDecomp d = eig_hermitian(ComplexMatrix::diag({3, 1}));
  CHECK(d.eigenvalues[0] == 3.0);
  CHECK(d.eigenvalues[1] == 1.0);
  // identity up to column phase
  for (int j = 0; j < 2; ++j)
    CHECK(std::abs(std::abs(d.unitary(j, j)) - 1.0) < 1e-14);

  d = eig_hermitian(ComplexMatrix::from_rows(
      {{Complex(2, 0), Complex(1, 0)}, {Complex(1, 0), Complex(2, 0)}}));
  CHECK(d.eigenvalues[0] == Catch::Approx(3.0).epsilon(1e-14));
  CHECK(d.eigenvalues[1] == Catch::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(eig_hermitian(gen_matrix(9, 3, 3)), DomainError);
  CHECK_THROWS_AS(eig_hermitian(gen_matrix(9, 2, 3)), DomainError);
}

TEST_CASE("jacobi reconstruction and unitarity") {
  SplitMix64 g(7);
  for (int n : {1, 2, 3, 6, 12}) {
    const ComplexMatrix m = random_hermitian(g.next(), n);
    const SpectralDecomp d = eig_hermitian(m);
    for (std::size_t j = 1; j < d.eigenvalues.size(); ++j)
      CHECK(d.eigenvalues[j - 1] >= d.eigenvalues[j]);

    ComplexMatrix w(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w(i, j) = d.unitary(i, j) * d.eigenvalues[j];
    const ComplexMatrix recon = w * d.unitary.adjoint();
    CHECK((recon - m).hs_norm() <= 1e-12 * std::max(1.0, m.hs_norm()));
    const ComplexMatrix gram =
        d.unitary.adjoint() * d.unitary - ComplexMatrix::identity(n);
    CHECK(gram.hs_norm() <= 1e-12);
  }
}

TEST_CASE("hermitian psd validation") {
  CHECK_THROWS_AS(HermitianPSD::make(ComplexMatrix::diag({1, -1})),
                  DomainError);
  // tiny negatives clamp to zero
  const HermitianPSD a = HermitianPSD::make(ComplexMatrix::diag({1.0, -1e-12}));
  CHECK(a.min_eig() == 0.0);
  CHECK_FALSE(a.positive_definite());

  const HermitianPSD b = HermitianPSD::make(ComplexMatrix::diag({2.0, 0.5}));
  CHECK(b.positive_definite());
  CHECK(b.trace_real() == 2.5);
  CHECK(b.det_real() == 1.0);
}

TEST_CASE("fractional powers") {
  const HermitianPSD a = HermitianPSD::make(ComplexMatrix::diag({4, 9}));
  const ComplexMatrix h = a.frac_power(0.5);
  CHECK(h(0, 0).real() == Catch::Approx(2.0).epsilon(1e-15));
  CHECK(h(1, 1).real() == Catch::Approx(3.0).epsilon(1e-15));
  CHECK(std::abs(h(0, 1)) < 1e-15);

  SplitMix64 g(11);
  for (int i = 0; i < 30; ++i) {
    const int n = 1 + static_cast<int>(g.next() % 6);
    const HermitianPSD w = gen_psd(g.next(), n);
    const double t = g.uniform(0.0, 2.0);
    const double u = g.uniform(0.0, 2.0);
    const ComplexMatrix prod = w.frac_power(t) * w.frac_power(u);
    const ComplexMatrix direct = w.frac_power(t + u);
    CHECK((prod - direct).hs_norm() <=
          1e-9 * std::max(1.0, direct.hs_norm()));
    CHECK((w.frac_power(1.0) - w.matrix()).hs_norm() <=
          1e-12 * std::max(1.0, w.matrix().hs_norm()));
  }

  // zeroth power of a singular matrix is the identity
  const HermitianPSD s = HermitianPSD::make(ComplexMatrix::diag({1.0, 0.0}));
  const ComplexMatrix id = s.frac_power(0.0);
  CHECK((id - ComplexMatrix::identity(2)).hs_norm() < 1e-15);
  CHECK(s.frac_power(0.5)(1, 1) == Complex(0.0, 0.0));
  CHECK_THROWS_AS(s.frac_power(-0.5), DomainError);
  // negative powers of a definite matrix are allowed
  const HermitianPSD pd = HermitianPSD::make(ComplexMatrix::diag({4.0}));
  CHECK(pd.frac_power(-0.5)(0, 0).real() == Catch::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("singular values") {
  const ComplexMatrix m = ComplexMatrix::from_rows(
      {{Complex(3, 0), Complex(4, 0)}, {Complex(0, 0), Complex(0, 0)}});
  const std::vector<double> s = singular_values(m);
  CHECK(s[0] == Catch::Approx(5.0).epsilon(1e-14));
  CHECK(s[1] == Catch::Approx(0.0).margin(1e-12));

  SplitMix64 g(13);
  const ComplexMatrix u = gen_unitary(g.next(), 4);
  for (double sv : singular_values(u))
    CHECK(sv == Catch::Approx(1.0).epsilon(1e-12));

  for (int i = 0; i < 20; ++i) {
    const ComplexMatrix r = gen_matrix(g.next(), 5, 5);
    double sum_sq = 0.0;
    for (double sv : singular_values(r)) sum_sq += sv * sv;
    CHECK(sum_sq ==
          Catch::Approx(r.hs_norm_sq()).epsilon(1e-10));
  }

  // singular values of a PSD matrix are its eigenvalues
  for (int i = 0; i < 10; ++i) {
    const HermitianPSD w = gen_psd(g.next(), 4);
    const std::vector<double> sv = singular_values(w.matrix());
    for (int j = 0; j < 4; ++j)
      CHECK(sv[j] == Catch::Approx(w.decomp().eigenvalues[j])
                         .margin(1e-10 * std::max(1.0, w.max_eig())));
  }
}

TEST_CASE("1x1 operations reduce to scalar arithmetic") {
  const double a = 2.7182818284590452;
  const HermitianPSD w = HermitianPSD::make(ComplexMatrix::diag({a}));
  CHECK(w.decomp().eigenvalues[0] == a);
  for (double t : {0.0, 0.3, 0.5, 1.0, 1.7}) {
    CHECK(w.frac_power(t)(0, 0).real() == std::pow(a, t));
  }
  CHECK(w.det_real() == a);
  CHECK(w.trace_real() == a);
  CHECK(singular_values(w.matrix())[0] == std::sqrt(a * a));
}

TEST_CASE("psd det agrees with LU det") {
  SplitMix64 g(17);
  for (int i = 0; i < 20; ++i) {
    const int n = 1 + static_cast<int>(g.next() % 5);
    const HermitianPSD w = gen_psd(g.next(), n);
    const Complex lu = det(w.matrix());
    CHECK(std::abs(lu.imag()) <= 1e-10 * std::max(1.0, std::abs(lu)));
    CHECK(lu.real() == Catch::Approx(w.det_real())
                           .margin(1e-10 * std::max(1.0, w.det_real())));
  }
}
