#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rimhook/experiments.hpp"
#include "rimhook/permutation.hpp"
#include "rimhook/plancherel.hpp"
#include "rimhook/quotient.hpp"
#include "rimhook/tracy_widom.hpp"
#include "rimhook/unitary.hpp"
#include "rimhook/verify.hpp"

using namespace rimhook;
using nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitStatistical = 2;
constexpr int kExitGuard = 3;

std::string output_path;

void emit(const std::string& text) {
    if (output_path.empty() || output_path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + output_path);
    out << text;
}

std::string fixed(double value, int digits) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
    return buffer;
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        std::size_t used = 0;
        out.push_back(std::stoi(cell, &used));
        if (used != cell.size()) throw std::invalid_argument("not an integer: " + cell);
    }
    return out;
}

std::string header(const std::string& command, const std::string& echo) {
    return "# rimhook " + std::string(kVersion) + ' ' + command + "\n# " + echo + '\n';
}

// verify

struct VerifyArgs {
    int max_n = 5;
    int max_m = 3;
    std::string format = "csv";
};

int run_verify(const VerifyArgs& args) {
    VerifyOptions options;
    options.max_n = args.max_n;
    options.max_m = args.max_m;
    const auto report = verify_identities(options);
    auto status = [](const IdentityCheck& r) {
        return r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
    };
    const std::string echo = "max_n=" + std::to_string(args.max_n) + " max_m=" + std::to_string(args.max_m);
    if (args.format == "json") {
        ordered_json doc;
        doc["version"] = kVersion;
        doc["command"] = "verify";
        doc["config"] = {{"max_n", args.max_n}, {"max_m", args.max_m}};
        doc["passed"] = report.all_passed();
        doc["skipped"] = report.any_skipped();
        doc["rows"] = ordered_json::array();
        for (const auto& r : report.rows)
            doc["rows"].push_back({{"identity", r.identity},
                                   {"label", r.label},
                                   {"status", status(r)},
                                   {"checked", r.checked},
                                   {"detail", r.detail}});
        emit(doc.dump(2) + '\n');
    } else {
        std::string text = header("verify", echo);
        text += "identity,label,status,checked,detail\n";
        for (const auto& r : report.rows)
            text += r.identity + ',' + r.label + ',' + status(r) + ',' + std::to_string(r.checked) +
                    ',' + r.detail + '\n';
        text += "# overall=" + std::string(report.all_passed() ? "PASS" : "FAIL") + '\n';
        emit(text);
    }
    if (!report.all_passed()) return kExitFailure;
    return report.any_skipped() ? kExitGuard : kExitPass;
}

// quotient

struct QuotientArgs {
    std::string shape;
    int m = 2;
    bool inverse = false;
};

int run_quotient(const QuotientArgs& args) {
    std::string text = header("quotient", "shape=" + args.shape + " m=" + std::to_string(args.m) +
                                              (args.inverse ? " inverse" : ""));
    text += "partition,m,core,quotient,decomposable,width_defect,dim_m\n";
    Partition lambda;
    if (args.inverse) {
        lambda = combine(PartitionTuple::parse(args.shape));
    } else {
        lambda = Partition::parse(args.shape);
    }
    const int m = args.inverse ? PartitionTuple::parse(args.shape).m() : args.m;
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    const auto cq = core_and_quotient(lambda, m);
    const bool decomposable = cq.core.empty();
    text += '"' + lambda.to_string() + "\"," + std::to_string(m) + ",\"" + cq.core.to_string() + "\",\"" +
            cq.quotient.to_string() + "\"," + (decomposable ? "true" : "false") + ',' +
            (decomposable ? std::to_string(width_defect(lambda, m)) : "") + ',' +
            (decomposable ? dim_m_formula(cq.quotient).str() : "0") + '\n';
    emit(text);
    return kExitPass;
}

// lis

struct LisArgs {
    std::string perm;
    std::string colors;
    std::string signs;
    int n = 0;
    int m = 1;
    bool enumerate = false;
    std::string group = "colored";
};

int run_lis(const LisArgs& args) {
    if (args.enumerate) {
        const std::string echo = "group=" + args.group + " n=" + std::to_string(args.n) +
                                 (args.group == "colored" ? " m=" + std::to_string(args.m) : "");
        std::map<int, std::uint64_t> counts;
        if (args.group == "colored") {
            ColoredPermutationStream stream(args.n, args.m);
            while (auto pi = stream.next()) ++counts[lis_colored(*pi)];
        } else if (args.group == "even" || args.group == "odd") {
            SignedPermutationStream stream(args.n);
            const bool odd = args.group == "odd";
            while (auto sigma = stream.next()) ++counts[odd ? l_odd(*sigma) : l_even(*sigma)];
        } else {
            throw std::invalid_argument("group must be colored, even or odd");
        }
        std::string text = header("lis", echo) + "value,count\n";
        for (const auto& [value, count] : counts)
            text += std::to_string(value) + ',' + std::to_string(count) + '\n';
        emit(text);
        return kExitPass;
    }
    if (args.perm.empty()) throw std::invalid_argument("lis needs --perm or --enumerate");
    auto sigma = parse_ints(args.perm);
    std::string text;
    if (!args.signs.empty()) {
        const SignedPermutation s(sigma, parse_ints(args.signs));
        text = header("lis", "perm=" + args.perm + " signs=" + args.signs) + "statistic,value\n";
        text += "l_even," + std::to_string(l_even(s)) + '\n';
        text += "l_odd," + std::to_string(l_odd(s)) + '\n';
    } else {
        std::vector<int> colors = args.colors.empty() ? std::vector<int>(sigma.size(), 1)
                                                      : parse_ints(args.colors);
        const ColoredPermutation pi(sigma, colors, args.m);
        text = header("lis", "perm=" + args.perm + " colors=" + args.colors + " m=" +
                                 std::to_string(args.m)) +
               "statistic,value\n";
        text += "lis_colored," + std::to_string(lis_colored(pi)) + '\n';
        text += "shape,\"" + shape_of_colored(pi).to_string() + "\"\n";
    }
    emit(text);
    return kExitPass;
}

// exact-cdf

struct ExactArgs {
    int n = 2;
    int m = 2;
    int digits = 30;
    std::string method = "shapes";
};

int run_exact_cdf(const ExactArgs& args) {
    ExactDistribution dist;
    if (args.method == "shapes")
        dist = exact_L_distribution(args.n, args.m);
    else if (args.method == "enumerate")
        dist = enumerate_L_colored(args.n, args.m);
    else
        throw std::invalid_argument("method must be shapes or enumerate");
    std::string text = header("exact-cdf", "n=" + std::to_string(args.n) + " m=" + std::to_string(args.m) +
                                               " method=" + args.method +
                                               " digits=" + std::to_string(args.digits));
    text += "k,pmf,cdf,cdf_exact\n";
    for (int k = dist.min_value(); k <= dist.max_value(); ++k) {
        const Rational cdf = dist.cdf(k);
        text += std::to_string(k) + ',' + to_decimal(dist.probability(k), args.digits) + ',' +
                to_decimal(cdf, args.digits) + ',' + cdf.str() + '\n';
    }
    emit(text);
    return kExitPass;
}

// simulate / theorem81

struct LimitArgs {
    LimitComparisonConfig config;
    std::string grid;
    std::string scaling;
};

int run_limit(const std::string& command, LimitArgs args) {
    if (!args.grid.empty()) args.config.grid = GridSpec::parse(args.grid);
    if (args.scaling == "abstract")
        args.config.scaling = Scaling::kAbstract;
    else if (args.scaling == "theorem")
        args.config.scaling = Scaling::kTheorem;
    else
        throw std::invalid_argument("scaling must be abstract or theorem");
    const auto result = compare_with_limit(args.config);
    emit(result.to_csv(command));
    return result.within_threshold() ? kExitPass : kExitStatistical;
}

// independence

struct IndependenceArgs {
    IndependenceConfig config;
    std::string grid;
};

int run_independence(IndependenceArgs args) {
    if (!args.grid.empty()) {
        args.config.grid.clear();
        std::stringstream in(args.grid);
        std::string cell;
        while (std::getline(in, cell, ',')) args.config.grid.push_back(std::stod(cell));
    }
    const auto result = check_independence(args.config);
    emit(result.to_csv());
    return result.within_threshold() ? kExitPass : kExitStatistical;
}

// haar-moment

struct MomentArgs {
    int k = 1;
    int m = 1;
    int n = 1;
    std::int64_t samples = 100'000;
    std::uint64_t seed = 0;
    int threads = 1;
    bool odd = false;
    double z_threshold = 3.5;
};

int run_haar_moment(const MomentArgs& args) {
    if (args.k < 1 || args.m < 1 || args.n < 1 || args.samples < 2)
        throw std::invalid_argument("haar-moment needs k, m, n >= 1 and samples >= 2");
    const TraceMonomial monomial =
        args.odd ? TraceMonomial{2, args.n, 1} : TraceMonomial{args.m, args.n, 0};
    const auto estimate = moment_batch(args.k, std::span<const TraceMonomial>(&monomial, 1), args.samples,
                                       MonteCarloConfig{args.seed, args.threads})
                              .front();

    std::optional<Rational> target;
    try {
        if (args.odd) {
            const auto dist = enumerate_L_odd(args.n);
            target = dist.cdf(args.k) * Rational(BigInt(colored_group_order(args.n, 2)));
        } else {
            const auto dist = exact_L_distribution(args.n, args.m);
            target = dist.cdf(args.k) * Rational(BigInt(colored_group_order(args.n, args.m)));
        }
    } catch (const GuardError&) {
    }

    ordered_json doc;
    doc["version"] = kVersion;
    doc["command"] = "haar-moment";
    doc["config"] = {{"k", args.k},       {"m", args.odd ? 2 : args.m}, {"n", args.n},
                     {"odd", args.odd},   {"samples", args.samples},    {"seed", args.seed},
                     {"threads", args.threads}};
    doc["estimate"] = estimate.mean;
    doc["stderr"] = estimate.standard_error;
    doc["samples"] = estimate.samples;
    int code = kExitPass;
    if (target) {
        const double exact = static_cast<double>(*target);
        doc["target_exact"] = exact;
        doc["target_rational"] = target->str();
        double z = 0.0;
        if (estimate.standard_error > 0.0)
            z = (estimate.mean - exact) / estimate.standard_error;
        else if (std::abs(estimate.mean - exact) > 1e-9 * std::max(1.0, exact))
            z = estimate.mean > exact ? INFINITY : -INFINITY;
        if (std::isfinite(z))
            doc["z_score"] = z;
        else
            doc["z_score"] = nullptr;
        if (!(std::abs(z) <= args.z_threshold)) code = kExitStatistical;
    }
    emit(doc.dump(2) + '\n');
    return code;
}

// tw-table

struct TableArgs {
    double xmin = -10.0;
    double xmax = 8.0;
    int steps = 181;
    int m = 1;
};

int run_tw_table(const TableArgs& args) {
    if (args.steps < 2 || !(args.xmax > args.xmin)) throw std::invalid_argument("need xmax > xmin and steps >= 2");
    if (args.xmin < -10.0 || args.xmax > 8.0) throw std::out_of_range("tw-table range must lie in [-10, 8]");
    if (args.m < 1) throw std::invalid_argument("m must be >= 1");
    const auto& table = default_tw_table();
    const auto cache = tw_cache_path();
    std::string text = header("tw-table", "xmin=" + fixed(args.xmin, 6) + " xmax=" + fixed(args.xmax, 6) +
                                              " steps=" + std::to_string(args.steps) +
                                              " m=" + std::to_string(args.m) +
                                              " cache=" + (cache ? cache->string() : "none"));
    text += "x,q,F,F_limit_m\n";
    char line[160];
    for (int i = 0; i < args.steps; ++i) {
        const double x = args.xmin + (args.xmax - args.xmin) * i / (args.steps - 1);
        std::snprintf(line, sizeof line, "%.6f,%.12e,%.12e,%.12e\n", x, table.q(x), table.cdf(x).value,
                      limit_cdf(x, args.m));
        text += line;
    }
    emit(text);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colored permutations, rim hook lattices and their limit laws"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.add_option("-o,--output", output_path, "Write the result here instead of stdout");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run the exact identity suite");
    verify_cmd->add_option("--max-n", verify.max_n)->capture_default_str();
    verify_cmd->add_option("--max-m", verify.max_m)->capture_default_str();
    verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    QuotientArgs quotient;
    auto* quotient_cmd = app.add_subcommand("quotient", "m-core and m-quotient of a partition");
    quotient_cmd->add_option("shape", quotient.shape, "Partition like 4,2 (or a tuple like 1/1 with --inverse)")
        ->required();
    quotient_cmd->add_option("-m,--m", quotient.m)->capture_default_str();
    quotient_cmd->add_flag("--inverse", quotient.inverse, "Treat shape as a quotient and rebuild the partition");

    LisArgs lis;
    auto* lis_cmd = app.add_subcommand("lis", "LIS statistics of one permutation or a whole group");
    lis_cmd->add_option("--perm", lis.perm, "Images sigma(1..n), comma separated");
    lis_cmd->add_option("--colors", lis.colors, "Colors in 1..m, comma separated");
    lis_cmd->add_option("--signs", lis.signs, "Signs +1/-1 for a signed permutation");
    lis_cmd->add_option("-n,--n", lis.n);
    lis_cmd->add_option("-m,--m", lis.m)->capture_default_str();
    lis_cmd->add_flag("--enumerate", lis.enumerate, "Tabulate the statistic over the whole group");
    lis_cmd->add_option("--group", lis.group)->check(CLI::IsMember({"colored", "even", "odd"}))->capture_default_str();

    ExactArgs exact;
    auto* exact_cmd = app.add_subcommand("exact-cdf", "Exact law of the colored LIS");
    exact_cmd->add_option("-n,--n", exact.n)->required();
    exact_cmd->add_option("-m,--m", exact.m)->required();
    exact_cmd->add_option("--digits", exact.digits)->check(CLI::Range(0, 200))->capture_default_str();
    exact_cmd->add_option("--method", exact.method)->check(CLI::IsMember({"shapes", "enumerate"}))->capture_default_str();

    auto add_limit_options = [](CLI::App* cmd, LimitArgs& args) {
        cmd->add_option("-n,--n", args.config.n)->capture_default_str();
        cmd->add_option("-m,--m", args.config.m)->capture_default_str();
        cmd->add_option("--samples", args.config.samples)->capture_default_str();
        cmd->add_option("--seed", args.config.seed)->required();
        cmd->add_option("--threads", args.config.threads)->check(CLI::Range(1, 256))->capture_default_str();
        cmd->add_option("--limit-m", args.config.limit_m, "Compare against this m's limit (default: own m)");
        cmd->add_option("--grid", args.grid, "x0:x1:steps");
        cmd->add_option("--threshold", args.config.threshold)->capture_default_str();
        cmd->add_option("--scaling", args.scaling)->check(CLI::IsMember({"abstract", "theorem"}))->capture_default_str();
    };
    LimitArgs simulate;
    simulate.scaling = "abstract";
    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo law of the scaled colored LIS vs its limit");
    add_limit_options(simulate_cmd, simulate);

    LimitArgs theorem;
    theorem.scaling = "theorem";
    auto* theorem_cmd = app.add_subcommand("theorem81", "Scaled colored LIS against F(m^{-2/3} x)^m");
    add_limit_options(theorem_cmd, theorem);

    IndependenceArgs independence;
    auto* independence_cmd = app.add_subcommand("independence", "Joint vs product CDF of per-color LIS");
    independence_cmd->add_option("-n,--n", independence.config.n)->capture_default_str();
    independence_cmd->add_option("-m,--m", independence.config.m)->capture_default_str();
    independence_cmd->add_option("--samples", independence.config.samples)->capture_default_str();
    independence_cmd->add_option("--seed", independence.config.seed)->required();
    independence_cmd->add_option("--threads", independence.config.threads)->check(CLI::Range(1, 256))->capture_default_str();
    independence_cmd->add_option("--grid", independence.grid, "Comma separated x values");
    independence_cmd->add_option("--threshold", independence.config.threshold)->capture_default_str();

    MomentArgs moment;
    auto* moment_cmd = app.add_subcommand("haar-moment", "Monte Carlo trace moment over Haar U(k)");
    moment_cmd->add_option("-k,--k", moment.k)->required();
    moment_cmd->add_option("-m,--m", moment.m)->capture_default_str();
    moment_cmd->add_option("-n,--n", moment.n)->required();
    moment_cmd->add_option("--samples", moment.samples)->capture_default_str();
    moment_cmd->add_option("--seed", moment.seed)->required();
    moment_cmd->add_option("--threads", moment.threads)->check(CLI::Range(1, 256))->capture_default_str();
    moment_cmd->add_flag("--odd", moment.odd, "Estimate E|Tr(U^2)^n Tr U|^2 instead");
    moment_cmd->add_option("--z-threshold", moment.z_threshold)->capture_default_str();

    TableArgs table;
    auto* table_cmd = app.add_subcommand("tw-table", "Tabulate q, F and F(m^{-2/3} x)^m");
    table_cmd->add_option("--xmin", table.xmin)->capture_default_str();
    table_cmd->add_option("--xmax", table.xmax)->capture_default_str();
    table_cmd->add_option("--steps", table.steps)->capture_default_str();
    table_cmd->add_option("-m,--m", table.m)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*verify_cmd) return run_verify(verify);
        if (*quotient_cmd) return run_quotient(quotient);
        if (*lis_cmd) return run_lis(lis);
        if (*exact_cmd) return run_exact_cdf(exact);
        if (*simulate_cmd) return run_limit("simulate", simulate);
        if (*theorem_cmd) return run_limit("theorem81", theorem);
        if (*independence_cmd) return run_independence(independence);
        if (*moment_cmd) return run_haar_moment(moment);
        if (*table_cmd) return run_tw_table(table);
    } catch (const GuardError& e) {
        std::cerr << "rimhook: refused: " << e.what() << '\n';
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "rimhook: error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}
