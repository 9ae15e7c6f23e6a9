#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "rimhook/unitary.hpp"

using namespace rimhook;

namespace {

// |estimate - target| within z standard errors; exact floating roundoff is
// allowed when the variance vanishes.
bool within(const MomentEstimate& e, double target, double z) {
    return std::abs(e.mean - target) <= z * e.standard_error + 1e-12 * std::max(1.0, target);
}

}  // namespace

TEST_CASE("Haar samples are unitary") {
    Rng rng(1);
    for (int i = 0; i < 100; ++i) {
        const auto u = haar_sample(8, rng);
        CHECK((u * u.adjoint()).frobenius_distance(ComplexMatrix::identity(8)) < 1e-12);
        CHECK((u.adjoint() * u).frobenius_distance(ComplexMatrix::identity(8)) < 1e-12);
    }
    const auto one = haar_sample(1, rng);
    CHECK(std::abs(std::abs(one(0, 0)) - 1.0) < 1e-15);
}

TEST_CASE("trace powers agree with eigenvalue powers") {
    Rng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 1 + static_cast<int>(rng.below(8));
        const auto u = haar_sample(k, rng);
        Eigen::MatrixXcd m(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m(i, j) = u(i, j);
        const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
        const auto traces = trace_powers(u, 6);
        REQUIRE(traces.size() == 6);
        for (int p = 1; p <= 6; ++p) {
            Complex expected = 0;
            for (int i = 0; i < k; ++i) expected += std::pow(solver.eigenvalues()(i), p);
            CHECK(std::abs(traces[static_cast<std::size_t>(p - 1)] - expected) <= 1e-9 * std::max(1.0, std::abs(expected)));
        }
    }
}

TEST_CASE("running moments") {
    RunningMoments a, b, all;
    const std::vector<double> xs{1.0, 4.0, 2.0, 8.0, 5.0, 7.0};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        (i < 2 ? a : b).push(xs[i]);
        all.push(xs[i]);
    }
    a.merge(b);
    const auto merged = a.estimate();
    const auto direct = all.estimate();
    CHECK(merged.samples == 6);
    CHECK(merged.mean == doctest::Approx(4.5));
    CHECK(merged.standard_error == doctest::Approx(direct.standard_error));
    // sample stddev of xs is sqrt(7.5)
    CHECK(direct.standard_error == doctest::Approx(std::sqrt(7.5 / 6.0)));
}

TEST_CASE("first moments of the trace") {
    Rng rng(3);
    CHECK(within(moment_colored(3, 1, 1, 100'000, rng), 1.0, 3.0));

    RunningMoments re, im;
    for (int i = 0; i < 100'000; ++i) {
        const Complex t = haar_sample(3, rng).trace();
        re.push(t.real());
        im.push(t.imag());
    }
    CHECK(within(re.estimate(), 0.0, 3.0));
    CHECK(within(im.estimate(), 0.0, 3.0));
}

TEST_CASE("colored moments") {
    Rng rng(4);
    CHECK(within(moment_colored(4, 2, 2, 100'000, rng), 8.0, 3.0));
    CHECK(within(moment_colored(2, 2, 2, 100'000, rng), 6.0, 3.0));
    CHECK(within(moment_colored(1, 1, 3, 1'000, rng), 1.0, 3.0));
}

TEST_CASE("odd moments") {
    Rng rng(5);
    CHECK(within(moment_odd(5, 2, 100'000, rng), 8.0, 3.0));
    CHECK(within(moment_odd(2, 1, 100'000, rng), 1.0, 3.0));
    CHECK(within(moment_odd(3, 1, 100'000, rng), 2.0, 3.0));
}

TEST_CASE("batched moments are deterministic per seed and worker count") {
    const std::vector<TraceMonomial> monomials{{1, 1, 0}, {2, 2, 0}, {2, 1, 1}};
    const auto a = moment_batch(3, monomials, 2000, MonteCarloConfig{7, 3});
    const auto b = moment_batch(3, monomials, 2000, MonteCarloConfig{7, 3});
    REQUIRE(a.size() == 3);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].mean == b[i].mean);
        CHECK(a[i].standard_error == b[i].standard_error);
        CHECK(a[i].samples == 2000);
    }
}
