#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "swanson/fock_matrix.hpp"
#include "swanson/fock_ops.hpp"
#include "swanson/hermitian_eigen.hpp"
#include "swanson/matrix_exp.hpp"

using namespace swanson;

namespace {

FockMatrix random_hermitian(std::size_t dim, std::mt19937& rng, double scale = 1.0) {
    std::normal_distribution<double> dist(0.0, scale);
    FockMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = dist(rng);
        for (std::size_t j = i + 1; j < dim; ++j) {
            const Complex v(dist(rng), dist(rng));
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    return m;
}

FockMatrix random_matrix(std::size_t dim, std::mt19937& rng, double scale = 1.0) {
    std::normal_distribution<double> dist(0.0, scale);
    FockMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = Complex(dist(rng), dist(rng));
    return m;
}

} // namespace

TEST_CASE("ladder_a entries") {
    const FockMatrix a2 = ladder_a(2);
    CHECK(a2(0, 1) == Complex(1.0));
    CHECK(a2(0, 0) == Complex(0.0));
    CHECK(a2(1, 0) == Complex(0.0));
    CHECK(a2(1, 1) == Complex(0.0));

    const FockMatrix a4 = ladder_a(4);
    CHECK(a4(0, 1) == Complex(1.0));
    CHECK(a4(1, 2) == Complex(std::sqrt(2.0)));
    CHECK(a4(2, 3) == Complex(std::sqrt(3.0)));
    int nonzero = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (a4(i, j) != Complex(0.0)) ++nonzero;
    CHECK(nonzero == 3);

    CHECK_THROWS_AS(ladder_a(1), DimensionError);
}

TEST_CASE("a^dagger a is the number operator") {
    // direct multiplication oracle; sqrt(n)^2 lands within one ulp of n
    for (std::size_t dim : {2u, 4u, 9u, 16u}) {
        const FockMatrix a = ladder_a(dim);
        const FockMatrix n = a.adjoint() * a;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                const Complex expect = i == j ? Complex(double(i)) : Complex(0.0);
                CHECK(std::abs(n(i, j) - expect) <= 4e-15 * double(dim));
            }
    }
}

TEST_CASE("position and momentum operators") {
    const FockMatrix x2 = position_op(2, 1.0);
    CHECK(x2(0, 1).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(x2(1, 0).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(x2(0, 0) == Complex(0.0));

    for (double omega : {0.5, 1.0, 2.7}) {
        CHECK(hermiticity_residual(position_op(12, omega)) == 0.0);
        CHECK(hermiticity_residual(momentum_op(12, omega)) == 0.0);
    }

    // [x, p] = i I on the lower (dim-1) sector
    const std::size_t dim = 16;
    const FockMatrix x = position_op(dim, 1.0);
    const FockMatrix p = momentum_op(dim, 1.0);
    const FockMatrix comm = x * p - p * x;
    for (std::size_t i = 0; i + 1 < dim; ++i)
        for (std::size_t j = 0; j + 1 < dim; ++j)
            CHECK(std::abs(comm(i, j) - (i == j ? Complex(0.0, 1.0) : Complex(0.0))) < 1e-14);

    CHECK_THROWS_AS(position_op(8, 0.0), InvalidParameterError);
    CHECK_THROWS_AS(momentum_op(8, -1.0), InvalidParameterError);
}

TEST_CASE("matrix_exp basics") {
    CHECK((matrix_exp(FockMatrix(5)) - FockMatrix::identity(5)).frobenius_norm() == 0.0);

    FockMatrix d(4);
    d(0, 0) = 0.3;
    d(1, 1) = -1.2;
    d(2, 2) = Complex(0.0, 0.7);
    d(3, 3) = Complex(-0.4, 2.0);
    const FockMatrix e = matrix_exp(d);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(std::abs(e(i, i) - std::exp(d(i, i))) < 1e-14 * std::abs(std::exp(d(i, i))));
}

TEST_CASE("matrix_exp of a nilpotent matrix is the exact finite series") {
    const FockMatrix a = ladder_a(4);
    const FockMatrix m = a * a;
    // explicit polynomial oracle: m^3 = 0 so exp(m) = I + m + m^2/2
    const FockMatrix oracle = FockMatrix::identity(4) + m + 0.5 * (m * m);
    CHECK((m * m * m).frobenius_norm() == 0.0);
    const FockMatrix e = matrix_exp(m);
    CHECK((e - oracle).frobenius_norm() <= 1e-15 * oracle.frobenius_norm());
}

TEST_CASE("matrix_exp inverse property") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t dim = 2 + std::size_t(rng() % 11);
        FockMatrix m = random_matrix(dim, rng);
        const double norm = m.frobenius_norm();
        if (norm > 5.0) m *= Complex(5.0 / norm);
        const FockMatrix e = matrix_exp(m);
        const FockMatrix einv = matrix_exp(-1.0 * m);
        const double resid = (e * einv - FockMatrix::identity(dim)).frobenius_norm();
        CHECK(resid <= 1e-10 * (1.0 + e.frobenius_norm()));
    }
}

TEST_CASE("matrix_exp of a Hermitian matrix is positive definite") {
    std::mt19937 rng(7);
    for (double s : {-2.0, -0.5, 0.3, 1.7}) {
        const FockMatrix m = random_hermitian(8, rng);
        const SpectralDecomposition dec = hermitian_eigen(matrix_exp(s * m));
        for (double ev : dec.eigenvalues) CHECK(ev > 0.0);
    }
}

TEST_CASE("hermitian_eigen on simple matrices") {
    FockMatrix d(3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    const SpectralDecomposition dec = hermitian_eigen(d);
    CHECK(dec.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(dec.eigenvalues[1] == doctest::Approx(2.0));
    CHECK(dec.eigenvalues[2] == doctest::Approx(3.0));

    FockMatrix px(2);
    px(0, 1) = 1.0;
    px(1, 0) = 1.0;
    const SpectralDecomposition dp = hermitian_eigen(px);
    CHECK(dp.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(dp.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-13));

    const FockMatrix a = ladder_a(8);
    const SpectralDecomposition dn = hermitian_eigen(a.adjoint() * a);
    for (std::size_t n = 0; n < 8; ++n)
        CHECK(std::abs(dn.eigenvalues[n] - double(n)) < 1e-12);
}

TEST_CASE("hermitian_eigen reconstruction property") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t dim = 2 + std::size_t(rng() % 15);
        const FockMatrix m = random_hermitian(dim, rng);
        const SpectralDecomposition dec = hermitian_eigen(m);

        // ascending eigenvalues, orthonormal columns
        for (std::size_t k = 0; k + 1 < dim; ++k)
            CHECK(dec.eigenvalues[k] <= dec.eigenvalues[k + 1]);
        const FockMatrix vtv = dec.eigenvectors.adjoint() * dec.eigenvectors;
        CHECK((vtv - FockMatrix::identity(dim)).frobenius_norm() < 1e-10);

        FockMatrix vd = dec.eigenvectors;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t k = 0; k < dim; ++k) vd(i, k) *= dec.eigenvalues[k];
        const FockMatrix recon = vd * dec.eigenvectors.adjoint();
        CHECK((m - recon).frobenius_norm() <= 1e-9 * m.frobenius_norm());
    }
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input") {
    CHECK_THROWS_AS(hermitian_eigen(ladder_a(4)), NotHermitianError);
}

TEST_CASE("norms, residuals, sector projection") {
    CHECK(hermiticity_residual(ladder_a(4)) == doctest::Approx(std::sqrt(12.0)).epsilon(1e-15));
    CHECK(hermiticity_residual(position_op(9, 1.3)) == 0.0);

    const FockMatrix i3 = FockMatrix::identity(8).project_sector(3);
    CHECK((i3 - FockMatrix::identity(3)).frobenius_norm() == 0.0);
    CHECK_THROWS_AS(FockMatrix::identity(8).project_sector(9), DimensionError);

    FockMatrix a(3), b(4);
    CHECK_THROWS_AS(a + b, DimensionError);
    CHECK_THROWS_AS(a * b, DimensionError);
}

TEST_CASE("ladder commutator is the identity below the truncation edge") {
    for (std::size_t dim : {4u, 16u, 32u}) {
        const FockMatrix a = ladder_a(dim);
        const FockMatrix comm = a * a.adjoint() - a.adjoint() * a;
        for (std::size_t i = 0; i + 1 < dim; ++i)
            for (std::size_t j = 0; j + 1 < dim; ++j) {
                const Complex expect = i == j ? Complex(1.0) : Complex(0.0);
                CHECK(std::abs(comm(i, j) - expect) <= 4e-15 * double(dim));
            }
    }
}
