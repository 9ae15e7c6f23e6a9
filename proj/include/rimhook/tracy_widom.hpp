#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rimhook {

/// Ai(x) and Ai'(x) on [-15, 20]; throws std::out_of_range elsewhere.
double airy_ai(double x);
double airy_ai_prime(double x);

/// Raised when the Painleve II integration leaves the Hastings-McLeod branch.
class PainleveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when the Fredholm quadrature fails to converge under doubling.
class FredholmConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PainleveOptions {
    double x_start = 8.0;
    double x_end = -10.0;
    double grid_step = 1.0 / 128.0;
    /// Relative local error per step (extended-precision arithmetic).
    double tolerance = 1e-16;
    /// Multiplies the Airy initial data; 1 selects Hastings-McLeod.
    double initial_scale = 1.0;
};

/// Tabulated Hastings-McLeod solution and log F on a uniform ascending grid.
///
/// log F(x) = -int_x^inf (s - x) q(s)^2 ds, (log F)' = int_x^inf q^2 ds and
/// (log F)'' = -q^2, so every tabulated quantity has its first two
/// derivatives available at the nodes; values between nodes come from
/// quintic Hermite interpolation.
class TracyWidomTable {
public:
    struct Value {
        double value;
        bool clamped;
    };

    /// Integrates q'' = x q + 2 q^3 backward from options.x_start.
    static TracyWidomTable solve(const PainleveOptions& options = {});

    /// Reads a table written by save(); throws std::runtime_error on a bad file.
    static TracyWidomTable load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    double x_min() const noexcept { return x_.front(); }
    double x_max() const noexcept { return x_.back(); }
    std::span<const double> grid() const noexcept { return x_; }

    double q(double x) const;
    double q_prime(double x) const;
    double log_cdf(double x) const;
    /// F(x); outside the table the nearest end value is returned with clamped = true.
    Value cdf(double x) const;
    double density(double x) const;

    /// int x dF over the table range.
    double mean() const;

    /// Certified absolute error bound for F; set by certify().
    double tolerance() const noexcept { return tolerance_; }
    /// Compares against the Fredholm oracle at `points`, stores and returns the max deviation.
    double certify(std::span<const double> points);

private:
    std::size_t locate(double x) const;
    double second(std::size_t j) const;

    double step_ = 0.0;
    double tolerance_ = 1e-6;
    std::vector<double> x_, q_, dq_, log_f_, tail_;
};

/// $RIMHOOK_CACHE_DIR/tracy_widom_v1.csv when the variable is set.
std::optional<std::filesystem::path> tw_cache_path();

/// Process-wide table with default options, built on first use. Loaded from
/// and written to tw_cache_path() when set.
const TracyWidomTable& default_tw_table();

/// q values of the Hastings-McLeod solution at grid points in [-10, 8].
std::vector<double> hastings_mcleod(std::span<const double> grid);

/// Tracy-Widom GUE distribution function F(x) for x in [-10, 8].
TracyWidomTable::Value tw_cdf(double x);

struct FredholmResult {
    double value;
    int order;
};

/// det(I - K_Airy) on L^2(x, inf) by Gauss-Legendre Nystrom discretization,
/// doubling the order from `start_order` until successive values agree to `tolerance`.
FredholmResult fredholm_airy_determinant(double x, double tolerance = 1e-8,
                                         int start_order = 32, int max_order = 512);
double fredholm_airy_oracle(double x);

/// int x dF over [-10, 8] with F from the Fredholm oracle.
double fredholm_mean();

/// F(m^{-2/3} x)^m.
double limit_cdf(double x, int m);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(int order);

}  // namespace rimhook
