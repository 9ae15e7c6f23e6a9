#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "rimhook/plancherel.hpp"
#include "rimhook/rng.hpp"

namespace rimhook {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int k) : k_(k), data_(static_cast<std::size_t>(k) * k) {}

    static ComplexMatrix identity(int k);

    int dim() const noexcept { return k_; }
    Complex& operator()(int i, int j) { return data_[index(i, j)]; }
    const Complex& operator()(int i, int j) const { return data_[index(i, j)]; }

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix adjoint() const;
    Complex trace() const;
    double frobenius_distance(const ComplexMatrix& other) const;

private:
    std::size_t index(int i, int j) const noexcept {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(j);
    }

    int k_;
    std::vector<Complex> data_;
};

/// Haar-distributed element of U(k): Householder QR of a standard complex
/// Gaussian matrix with the phases of R's diagonal moved into Q.
ComplexMatrix haar_sample(int k, Rng& rng);

/// Tr(U^j) for j = 1..max_power by iterated multiplication.
std::vector<Complex> trace_powers(const ComplexMatrix& u, int max_power);

struct MomentEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
    std::int64_t samples = 0;
};

/// Streaming mean and variance (Welford).
class RunningMoments {
public:
    void push(double x) noexcept {
        ++count_;
        const double delta = x - mean_;
        mean_ += delta / static_cast<double>(count_);
        m2_ += delta * (x - mean_);
    }
    void merge(const RunningMoments& other) noexcept;
    MomentEstimate estimate() const noexcept;

private:
    std::int64_t count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

/// |Tr(U^power)^exponent * Tr(U)^trace_factor|^2 as a Monte Carlo target.
struct TraceMonomial {
    int power = 1;
    int exponent = 1;
    int trace_factor = 0;
};

/// Estimates of E|...|^2 over U(k) for several monomials from one set of draws.
std::vector<MomentEstimate> moment_batch(int k, std::span<const TraceMonomial> monomials,
                                         std::int64_t count, Rng& rng);
std::vector<MomentEstimate> moment_batch(int k, std::span<const TraceMonomial> monomials,
                                         std::int64_t count, const MonteCarloConfig& config);

/// E|Tr(U^m)^n|^2 over U(k).
MomentEstimate moment_colored(int k, int m, int n, std::int64_t count, Rng& rng);
/// E|Tr(U^2)^n Tr(U)|^2 over U(k).
MomentEstimate moment_odd(int k, int n, std::int64_t count, Rng& rng);

}  // namespace rimhook
