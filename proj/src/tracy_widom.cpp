#include "rimhook/tracy_widom.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <sstream>

#include <boost/math/special_functions/airy.hpp>

namespace rimhook {

namespace {

constexpr double kAiryMin = -15.0;
constexpr double kAiryMax = 20.0;
constexpr double kTableMin = -10.0;
constexpr double kTableMax = 8.0;

void check_airy_range(double x) {
    if (!(x >= kAiryMin && x <= kAiryMax))
        throw std::out_of_range("airy: x = " + std::to_string(x) +
                                " outside supported range [-15, 20]");
}

}  // namespace

double airy_ai(double x) {
    check_airy_range(x);
    return boost::math::airy_ai(x);
}

double airy_ai_prime(double x) {
    check_airy_range(x);
    return boost::math::airy_ai_prime(x);
}

namespace {

// State: q, q', int_x^inf q^2, int_x^inf s q^2.
using Real = long double;
using State = std::array<Real, 4>;

State painleve_rhs(Real x, const State& y) {
    const Real q2 = y[0] * y[0];
    return {y[1], x * y[0] + 2 * y[0] * q2, -q2, -x * q2};
}

// Dormand-Prince 5(4) tableau.
constexpr Real c2 = 1.0L / 5, c3 = 3.0L / 10, c4 = 4.0L / 5, c5 = 8.0L / 9;
constexpr Real a21 = 1.0L / 5;
constexpr Real a31 = 3.0L / 40, a32 = 9.0L / 40;
constexpr Real a41 = 44.0L / 45, a42 = -56.0L / 15, a43 = 32.0L / 9;
constexpr Real a51 = 19372.0L / 6561, a52 = -25360.0L / 2187, a53 = 64448.0L / 6561,
               a54 = -212.0L / 729;
constexpr Real a61 = 9017.0L / 3168, a62 = -355.0L / 33, a63 = 46732.0L / 5247,
               a64 = 49.0L / 176, a65 = -5103.0L / 18656;
constexpr Real b1 = 35.0L / 384, b3 = 500.0L / 1113, b4 = 125.0L / 192, b5 = -2187.0L / 6784,
               b6 = 11.0L / 84;
constexpr Real e1 = 71.0L / 57600, e3 = -71.0L / 16695, e4 = 71.0L / 1920,
               e5 = -17253.0L / 339200, e6 = 22.0L / 525, e7 = -1.0L / 40;

struct StepResult {
    State y;
    Real error;
};

StepResult dopri_step(Real x, const State& y, Real h, Real tol) {
    auto stage = [&](std::initializer_list<std::pair<Real, const State*>> terms) {
        State out = y;
        for (const auto& [coef, k] : terms)
            for (std::size_t i = 0; i < out.size(); ++i) out[i] += h * coef * (*k)[i];
        return out;
    };
    const State k1 = painleve_rhs(x, y);
    const State k2 = painleve_rhs(x + c2 * h, stage({{a21, &k1}}));
    const State k3 = painleve_rhs(x + c3 * h, stage({{a31, &k1}, {a32, &k2}}));
    const State k4 = painleve_rhs(x + c4 * h, stage({{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State k5 =
        painleve_rhs(x + c5 * h, stage({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State k6 = painleve_rhs(
        x + h, stage({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const State next = stage({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const State k7 = painleve_rhs(x + h, next);
    Real sum = 0;
    for (std::size_t i = 0; i < next.size(); ++i) {
        const Real err =
            h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        const Real scale = tol * std::max({std::abs(y[i]), std::abs(next[i]), 1e-300L});
        sum += (err / scale) * (err / scale);
    }
    return {next, std::sqrt(sum / static_cast<Real>(next.size()))};
}

// Quintic Hermite interpolant on [x_i, x_i + h] from value, first and second
// derivative at both ends.
double hermite(double t, double h, double y0, double d0, double s0, double y1, double d1, double s1) {
    const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
    const double h0 = 1 - 10 * t3 + 15 * t4 - 6 * t5;
    const double h1 = t - 6 * t3 + 8 * t4 - 3 * t5;
    const double h2 = 0.5 * (t2 - 3 * t3 + 3 * t4 - t5);
    const double h3 = 10 * t3 - 15 * t4 + 6 * t5;
    const double h4 = -4 * t3 + 7 * t4 - 3 * t5;
    const double h5 = 0.5 * (t3 - 2 * t4 + t5);
    return h0 * y0 + h * (h1 * d0 + h4 * d1) + h * h * (h2 * s0 + h5 * s1) + h3 * y1;
}

}  // namespace

TracyWidomTable TracyWidomTable::solve(const PainleveOptions& options) {
    if (!(options.x_start > options.x_end) || options.grid_step <= 0.0 || options.tolerance <= 0.0)
        throw std::invalid_argument("TracyWidomTable::solve: bad options");
    const Real x0 = options.x_start;
    const Real ai = boost::math::airy_ai(x0) * options.initial_scale;
    const Real aip = boost::math::airy_ai_prime(x0) * options.initial_scale;
    // Tails of the integrals for q = Ai beyond x0:
    //   int_x^inf Ai^2 = Ai'^2 - x Ai^2,  int_x^inf s Ai^2 = -(x^2 Ai^2 - x Ai'^2 + Ai Ai') / 3.
    State y{ai, aip, aip * aip - x0 * ai * ai,
            -(x0 * x0 * ai * ai - x0 * aip * aip + ai * aip) / 3};

    const auto intervals =
        static_cast<std::size_t>(std::llround((options.x_start - options.x_end) / options.grid_step));
    const Real step = (x0 - static_cast<Real>(options.x_end)) / static_cast<Real>(intervals);
    const Real tol = options.tolerance;

    std::vector<State> states{y};
    Real x = x0;
    Real h = -step;
    for (std::size_t j = 1; j <= intervals; ++j) {
        const Real target = x0 - static_cast<Real>(j) * step;
        while (x > target) {
            bool last = false;
            if (x + h <= target) {
                h = target - x;
                last = true;
            }
            const auto [next, error] = dopri_step(x, y, h, tol);
            if (error <= 1) {
                x = last ? target : x + h;
                y = next;
                if (!std::isfinite(y[0]) || std::abs(y[0]) > 1e8L)
                    throw PainleveError("Painleve II solution blew up near x = " +
                                        std::to_string(static_cast<double>(x)) +
                                        "; initial data off the Hastings-McLeod branch");
            }
            const Real factor =
                error == 0 ? 5.0L : std::clamp(0.9L * std::pow(error, -0.2L), 0.2L, 5.0L);
            h = std::max(h * factor, -step);
            if (std::abs(h) < 1e-13L * std::max(1.0L, std::abs(x)))
                throw PainleveError("Painleve II step size underflow near x = " +
                                    std::to_string(static_cast<double>(x)) +
                                    "; initial data off the Hastings-McLeod branch");
        }
        states.push_back(y);
    }

    TracyWidomTable table;
    table.step_ = static_cast<double>(step);
    const std::size_t count = states.size();
    for (std::size_t i = 0; i < count; ++i) {
        const State& s = states[count - 1 - i];
        const Real xi = x0 - static_cast<Real>(count - 1 - i) * step;
        table.x_.push_back(static_cast<double>(xi));
        table.q_.push_back(static_cast<double>(s[0]));
        table.dq_.push_back(static_cast<double>(s[1]));
        table.tail_.push_back(static_cast<double>(s[2]));
        table.log_f_.push_back(static_cast<double>(-(s[3] - xi * s[2])));
    }
    return table;
}

std::size_t TracyWidomTable::locate(double x) const {
    const double pos = (x - x_.front()) / step_;
    const auto last = x_.size() - 2;
    if (pos <= 0.0) return 0;
    return std::min(static_cast<std::size_t>(pos), last);
}

double TracyWidomTable::second(std::size_t j) const {
    return x_[j] * q_[j] + 2.0 * q_[j] * q_[j] * q_[j];
}

double TracyWidomTable::q(double x) const {
    const std::size_t i = locate(x);
    const double t = (x - x_[i]) / step_;
    return hermite(t, step_, q_[i], dq_[i], second(i), q_[i + 1], dq_[i + 1], second(i + 1));
}

double TracyWidomTable::q_prime(double x) const {
    const std::size_t i = locate(x);
    const double t = (x - x_[i]) / step_;
    auto third = [&](std::size_t j) { return q_[j] + x_[j] * dq_[j] + 6.0 * q_[j] * q_[j] * dq_[j]; };
    return hermite(t, step_, dq_[i], second(i), third(i), dq_[i + 1], second(i + 1), third(i + 1));
}

double TracyWidomTable::log_cdf(double x) const {
    const std::size_t i = locate(x);
    const double t = (x - x_[i]) / step_;
    return hermite(t, step_, log_f_[i], tail_[i], -q_[i] * q_[i], log_f_[i + 1], tail_[i + 1],
                   -q_[i + 1] * q_[i + 1]);
}

TracyWidomTable::Value TracyWidomTable::cdf(double x) const {
    if (x < x_min()) return {std::exp(log_f_.front()), true};
    if (x > x_max()) return {std::exp(log_f_.back()), true};
    return {std::clamp(std::exp(log_cdf(x)), 0.0, 1.0), false};
}

double TracyWidomTable::density(double x) const {
    if (x < x_min() || x > x_max()) return 0.0;
    const std::size_t i = locate(x);
    const double t = (x - x_[i]) / step_;
    const double tail = hermite(t, step_, tail_[i], -q_[i] * q_[i], -2.0 * q_[i] * dq_[i], tail_[i + 1],
                                -q_[i + 1] * q_[i + 1], -2.0 * q_[i + 1] * dq_[i + 1]);
    return std::exp(log_cdf(x)) * tail;
}

double TracyWidomTable::mean() const {
    // Composite Simpson over an even number of intervals, trapezoid on a leftover one.
    auto f = [&](std::size_t i) { return x_[i] * std::exp(log_f_[i]) * tail_[i]; };
    const std::size_t intervals = x_.size() - 1;
    const std::size_t even = intervals - intervals % 2;
    double sum = f(0) + f(even);
    for (std::size_t i = 1; i < even; ++i) sum += f(i) * (i % 2 ? 4.0 : 2.0);
    double integral = sum * step_ / 3.0;
    if (even < intervals) integral += 0.5 * step_ * (f(even) + f(intervals));
    return integral;
}

double TracyWidomTable::certify(std::span<const double> points) {
    double worst = 0.0;
    for (double x : points)
        worst = std::max(worst, std::abs(cdf(x).value - fredholm_airy_oracle(x)));
    tolerance_ = worst;
    return worst;
}

void TracyWidomTable::save(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "# rimhook tracy-widom table v1\n";
    char meta[128];
    std::snprintf(meta, sizeof meta, "# step=%.17g tolerance=%.17g\n", step_, tolerance_);
    out << meta;
    out << "x,q,dq,logF,int_q2\n";
    char line[256];
    for (std::size_t i = 0; i < x_.size(); ++i) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g\n", x_[i], q_[i], dq_[i],
                      log_f_[i], tail_[i]);
        out << line;
    }
}

TracyWidomTable TracyWidomTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != "# rimhook tracy-widom table v1")
        throw std::runtime_error(path.string() + ": not a v1 tracy-widom table");
    TracyWidomTable table;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.starts_with("# ")) {
            const auto pos = line.find("tolerance=");
            if (pos != std::string::npos) table.tolerance_ = std::stod(line.substr(pos + 10));
            const auto step = line.find("step=");
            if (step != std::string::npos) table.step_ = std::stod(line.substr(step + 5));
            continue;
        }
        if (!header) {
            if (line != "x,q,dq,logF,int_q2")
                throw std::runtime_error(path.string() + ": unexpected column header");
            header = true;
            continue;
        }
        std::array<double, 5> v{};
        std::istringstream fields(line);
        std::string cell;
        for (auto& value : v) {
            if (!std::getline(fields, cell, ','))
                throw std::runtime_error(path.string() + ": short row");
            value = std::stod(cell);
        }
        table.x_.push_back(v[0]);
        table.q_.push_back(v[1]);
        table.dq_.push_back(v[2]);
        table.log_f_.push_back(v[3]);
        table.tail_.push_back(v[4]);
    }
    if (table.x_.size() < 3) throw std::runtime_error(path.string() + ": too few rows");
    if (!(table.step_ > 0.0))
        table.step_ = (table.x_.back() - table.x_.front()) / static_cast<double>(table.x_.size() - 1);
    return table;
}

std::optional<std::filesystem::path> tw_cache_path() {
    const char* dir = std::getenv("RIMHOOK_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    return std::filesystem::path(dir) / "tracy_widom_v1.csv";
}

namespace {

TracyWidomTable load_or_solve() {
    const auto path = tw_cache_path();
    if (path && std::filesystem::exists(*path)) {
        try {
            return TracyWidomTable::load(*path);
        } catch (const std::exception&) {
            // unreadable cache: rebuild below
        }
    }
    TracyWidomTable table = TracyWidomTable::solve();
    if (path) {
        std::error_code ec;
        std::filesystem::create_directories(path->parent_path(), ec);
        const auto tmp = path->string() + ".tmp";
        try {
            table.save(tmp);
            std::filesystem::rename(tmp, *path, ec);
        } catch (const std::exception&) {
        }
    }
    return table;
}

}  // namespace

const TracyWidomTable& default_tw_table() {
    static const TracyWidomTable table = load_or_solve();
    return table;
}

std::vector<double> hastings_mcleod(std::span<const double> grid) {
    const auto& table = default_tw_table();
    std::vector<double> out;
    out.reserve(grid.size());
    for (double x : grid) {
        if (x < kTableMin || x > kTableMax)
            throw std::out_of_range("hastings_mcleod: grid point outside [-10, 8]");
        out.push_back(table.q(x));
    }
    return out;
}

TracyWidomTable::Value tw_cdf(double x) { return default_tw_table().cdf(x); }

double limit_cdf(double x, int m) {
    if (m < 1) throw std::invalid_argument("limit_cdf: m must be >= 1");
    const double f = tw_cdf(x / std::cbrt(static_cast<double>(m) * m)).value;
    return std::pow(f, m);
}

const GaussLegendre& gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    static std::mutex mutex;
    static std::map<int, GaussLegendre> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
    GaussLegendre rule;
    rule.nodes.resize(static_cast<std::size_t>(order));
    rule.weights.resize(static_cast<std::size_t>(order));
    const int n = order;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (z * p1 - p0) / (z * z - 1.0);
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -z;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = z;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return cache.emplace(order, std::move(rule)).first->second;
}

namespace {

double airy_determinant(double x, int order) {
    const auto& rule = gauss_legendre(order);
    const double upper = std::max(x, 0.0) + 12.0;
    const double half = 0.5 * (upper - x);
    const auto n = static_cast<std::size_t>(order);
    std::vector<double> u(n), sw(n), ai(n), aip(n);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = x + half * (rule.nodes[i] + 1.0);
        sw[i] = std::sqrt(half * rule.weights[i]);
        ai[i] = airy_ai(u[i]);
        aip[i] = airy_ai_prime(u[i]);
    }
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double kernel = i == j ? aip[i] * aip[i] - u[i] * ai[i] * ai[i]
                                         : (ai[i] * aip[j] - aip[i] * ai[j]) / (u[i] - u[j]);
            a[i * n + j] = (i == j ? 1.0 : 0.0) - sw[i] * kernel * sw[j];
        }
    // LU with partial pivoting.
    double det = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r * n + c]) > std::abs(a[pivot * n + c])) pivot = r;
        if (a[pivot * n + c] == 0.0) return 0.0;
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[c * n + j], a[pivot * n + j]);
            det = -det;
        }
        const double d = a[c * n + c];
        det *= d;
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = a[r * n + c] / d;
            if (f == 0.0) continue;
            for (std::size_t j = c + 1; j < n; ++j) a[r * n + j] -= f * a[c * n + j];
        }
    }
    return det;
}

}  // namespace

FredholmResult fredholm_airy_determinant(double x, double tolerance, int start_order,
                                         int max_order) {
    if (!(x >= kTableMin && x <= kTableMax))
        throw std::out_of_range("fredholm_airy_oracle: x outside [-10, 8]");
    int order = start_order;
    double previous = airy_determinant(x, order);
    while (order * 2 <= max_order) {
        order *= 2;
        const double current = airy_determinant(x, order);
        if (std::abs(current - previous) < tolerance) return {current, order};
        previous = current;
    }
    throw FredholmConvergenceError("Fredholm determinant at x = " + std::to_string(x) +
                                   " did not converge up to order " + std::to_string(max_order));
}

double fredholm_airy_oracle(double x) { return fredholm_airy_determinant(x).value; }

double fredholm_mean() {
    // int_a^b x dF = b F(b) - a F(a) - int_a^b F.
    const auto& rule = gauss_legendre(16);
    double integral = 0.0;
    for (int panel = static_cast<int>(kTableMin); panel < static_cast<int>(kTableMax); ++panel) {
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double x = panel + 0.5 * (rule.nodes[i] + 1.0);
            integral += 0.5 * rule.weights[i] * fredholm_airy_oracle(x);
        }
    }
    return kTableMax * fredholm_airy_oracle(kTableMax) - kTableMin * fredholm_airy_oracle(kTableMin) -
           integral;
}

}  // namespace rimhook
