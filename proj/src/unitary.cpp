#include "rimhook/unitary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parallel.hpp"

namespace rimhook {

ComplexMatrix ComplexMatrix::identity(int k) {
    ComplexMatrix id(k);
    for (int i = 0; i < k; ++i) id(i, i) = 1.0;
    return id;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    ComplexMatrix out(k_);
    for (int i = 0; i < k_; ++i)
        for (int l = 0; l < k_; ++l) {
            const Complex a = (*this)(i, l);
            for (int j = 0; j < k_; ++j) out(i, j) += a * rhs(l, j);
        }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(k_);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < k_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_distance(const ComplexMatrix& other) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) sum += std::norm(data_[i] - other.data_[i]);
    return std::sqrt(sum);
}

ComplexMatrix haar_sample(int k, Rng& rng) {
    if (k < 1) throw std::invalid_argument("haar_sample: k must be >= 1");
    // Ginibre matrix with E|z|^2 = 1.
    ComplexMatrix a(k);
    const double s = std::sqrt(0.5);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const double re = rng.normal();
            a(i, j) = Complex(re, rng.normal()) * s;
        }

    // Householder QR: A = H_0 ... H_{k-1} R; Q accumulated by applying the
    // reflectors in reverse to the identity.
    std::vector<std::vector<Complex>> reflectors;
    std::vector<Complex> diag(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
        double norm2 = 0.0;
        for (int i = c; i < k; ++i) norm2 += std::norm(a(i, c));
        const double norm = std::sqrt(norm2);
        const Complex head = a(c, c);
        const Complex phase = std::abs(head) > 0.0 ? head / std::abs(head) : Complex(1.0);
        const Complex alpha = -phase * norm;
        std::vector<Complex> v(static_cast<std::size_t>(k - c));
        for (int i = c; i < k; ++i) v[static_cast<std::size_t>(i - c)] = a(i, c);
        v[0] -= alpha;
        double vnorm2 = 0.0;
        for (const auto& z : v) vnorm2 += std::norm(z);
        if (vnorm2 > 0.0) {
            for (int j = c; j < k; ++j) {
                Complex dot = 0.0;
                for (int i = c; i < k; ++i) dot += std::conj(v[static_cast<std::size_t>(i - c)]) * a(i, j);
                const Complex f = 2.0 * dot / vnorm2;
                for (int i = c; i < k; ++i) a(i, j) -= f * v[static_cast<std::size_t>(i - c)];
            }
        }
        diag[static_cast<std::size_t>(c)] = a(c, c);
        reflectors.push_back(std::move(v));
    }

    ComplexMatrix q = ComplexMatrix::identity(k);
    for (int c = k - 1; c >= 0; --c) {
        const auto& v = reflectors[static_cast<std::size_t>(c)];
        double vnorm2 = 0.0;
        for (const auto& z : v) vnorm2 += std::norm(z);
        if (vnorm2 == 0.0) continue;
        for (int j = 0; j < k; ++j) {
            Complex dot = 0.0;
            for (int i = c; i < k; ++i) dot += std::conj(v[static_cast<std::size_t>(i - c)]) * q(i, j);
            const Complex f = 2.0 * dot / vnorm2;
            for (int i = c; i < k; ++i) q(i, j) -= f * v[static_cast<std::size_t>(i - c)];
        }
    }

    // Make R's diagonal positive real: Q <- Q diag(r_jj / |r_jj|).
    for (int j = 0; j < k; ++j) {
        const Complex r = diag[static_cast<std::size_t>(j)];
        const Complex phase = std::abs(r) > 0.0 ? r / std::abs(r) : Complex(1.0);
        for (int i = 0; i < k; ++i) q(i, j) *= phase;
    }
    return q;
}

std::vector<Complex> trace_powers(const ComplexMatrix& u, int max_power) {
    std::vector<Complex> traces;
    if (max_power < 1) return traces;
    ComplexMatrix power = u;
    traces.push_back(power.trace());
    for (int j = 2; j <= max_power; ++j) {
        power = power * u;
        traces.push_back(power.trace());
    }
    return traces;
}

void RunningMoments::merge(const RunningMoments& other) noexcept {
    if (other.count_ == 0) return;
    if (count_ == 0) {
        *this = other;
        return;
    }
    const auto total = count_ + other.count_;
    const double delta = other.mean_ - mean_;
    mean_ += delta * static_cast<double>(other.count_) / static_cast<double>(total);
    m2_ += other.m2_ + delta * delta * static_cast<double>(count_) *
                           static_cast<double>(other.count_) / static_cast<double>(total);
    count_ = total;
}

MomentEstimate RunningMoments::estimate() const noexcept {
    MomentEstimate e;
    e.samples = count_;
    e.mean = mean_;
    if (count_ > 1) {
        const double variance = m2_ / static_cast<double>(count_ - 1);
        e.standard_error = std::sqrt(variance / static_cast<double>(count_));
    }
    return e;
}

namespace {

void validate(int k, std::span<const TraceMonomial> monomials, std::int64_t count) {
    if (k < 1) throw std::invalid_argument("moment estimate: k must be >= 1");
    if (count < 1) throw std::invalid_argument("moment estimate: count must be >= 1");
    for (const auto& t : monomials)
        if (t.power < 1 || t.exponent < 0 || t.trace_factor < 0)
            throw std::invalid_argument("moment estimate: bad trace monomial");
}

std::vector<RunningMoments> accumulate(int k, std::span<const TraceMonomial> monomials,
                                       std::int64_t count, Rng& rng) {
    int max_power = 1;
    for (const auto& t : monomials) max_power = std::max(max_power, t.power);
    std::vector<RunningMoments> moments(monomials.size());
    for (std::int64_t s = 0; s < count; ++s) {
        const auto traces = trace_powers(haar_sample(k, rng), max_power);
        for (std::size_t i = 0; i < monomials.size(); ++i) {
            const auto& t = monomials[i];
            double value = std::pow(std::norm(traces[static_cast<std::size_t>(t.power - 1)]), t.exponent);
            value *= std::pow(std::norm(traces[0]), t.trace_factor);
            moments[i].push(value);
        }
    }
    return moments;
}

std::vector<MomentEstimate> finish(const std::vector<RunningMoments>& moments) {
    std::vector<MomentEstimate> out;
    for (const auto& m : moments) out.push_back(m.estimate());
    return out;
}

}  // namespace

std::vector<MomentEstimate> moment_batch(int k, std::span<const TraceMonomial> monomials,
                                         std::int64_t count, Rng& rng) {
    validate(k, monomials, count);
    return finish(accumulate(k, monomials, count, rng));
}

std::vector<MomentEstimate> moment_batch(int k, std::span<const TraceMonomial> monomials,
                                         std::int64_t count, const MonteCarloConfig& config) {
    validate(k, monomials, count);
    auto partial = detail::map_reduce<std::vector<RunningMoments>>(
        count, config.threads, config.seed, [&](std::int64_t share, Rng& rng) {
            return std::vector<std::vector<RunningMoments>>{accumulate(k, monomials, share, rng)};
        });
    std::vector<RunningMoments> total(monomials.size());
    for (const auto& worker : partial)
        for (std::size_t i = 0; i < total.size(); ++i) total[i].merge(worker[i]);
    return finish(total);
}

MomentEstimate moment_colored(int k, int m, int n, std::int64_t count, Rng& rng) {
    if (m < 1 || n < 1) throw std::invalid_argument("moment_colored: m, n must be >= 1");
    const TraceMonomial t{m, n, 0};
    return moment_batch(k, std::span(&t, 1), count, rng).front();
}

MomentEstimate moment_odd(int k, int n, std::int64_t count, Rng& rng) {
    if (n < 1) throw std::invalid_argument("moment_odd: n must be >= 1");
    const TraceMonomial t{2, n, 1};
    return moment_batch(k, std::span(&t, 1), count, rng).front();
}

}  // namespace rimhook
