#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rimhook/experiments.hpp"
#include "rimhook/permutation.hpp"
#include "rimhook/plancherel.hpp"
#include "rimhook/quotient.hpp"
#include "rimhook/tracy_widom.hpp"
#include "rimhook/unitary.hpp"
#include "rimhook/verify.hpp"

namespace py = pybind11;
using namespace rimhook;

namespace {

using Rows = std::vector<int>;

Rows rows_of(const Partition& p) { return Rows(p.rows().begin(), p.rows().end()); }

PartitionTuple tuple_of(const std::vector<Rows>& components) {
    std::vector<Partition> parts;
    for (const auto& c : components) parts.emplace_back(c);
    return PartitionTuple(std::move(parts));
}

std::vector<Rows> components_of(const PartitionTuple& q) {
    std::vector<Rows> out;
    for (const auto& c : q.components()) out.push_back(rows_of(c));
    return out;
}

// Python ints are arbitrary precision; go through the decimal string.
py::object to_python_int(const BigInt& value) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(value.str().c_str(), nullptr, 10));
}

py::dict pmf_of(const ExactDistribution& dist) {
    py::dict out;
    for (const auto& [value, mass] : dist.pmf())
        out[py::int_(value)] = py::make_tuple(to_python_int(boost::multiprecision::numerator(mass)),
                                              to_python_int(boost::multiprecision::denominator(mass)));
    return out;
}

Scaling scaling_of(const std::string& name) {
    if (name == "abstract") return Scaling::kAbstract;
    if (name == "theorem") return Scaling::kTheorem;
    throw std::invalid_argument("scaling must be 'abstract' or 'theorem'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Colored permutations, rim hook lattices and their limit laws";
    m.attr("__version__") = kVersion;

    py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
    py::register_exception<PainleveError>(m, "PainleveError", PyExc_RuntimeError);

    m.def("partitions_of", [](int n) {
        std::vector<Rows> out;
        for (const auto& p : partitions_of(n)) out.push_back(rows_of(p));
        return out;
    }, py::arg("n"));
    m.def("dim_1", [](const Rows& rows) { return to_python_int(dim_1(Partition(rows))); }, py::arg("rows"));
    m.def("conjugate", [](const Rows& rows) { return rows_of(conjugate(Partition(rows))); }, py::arg("rows"));

    m.def("core_and_quotient", [](const Rows& rows, int mm) {
        const auto cq = core_and_quotient(Partition(rows), mm);
        return py::make_tuple(rows_of(cq.core), components_of(cq.quotient));
    }, py::arg("rows"), py::arg("m"));
    m.def("combine", [](const std::vector<Rows>& q) { return rows_of(combine(tuple_of(q))); }, py::arg("quotient"));
    m.def("is_decomposable", [](const Rows& rows, int mm) { return is_decomposable(Partition(rows), mm); },
          py::arg("rows"), py::arg("m"));
    m.def("removable_rim_hooks", [](const Rows& rows, int mm) {
        std::vector<Rows> out;
        for (const auto& mu : removable_rim_hooks(Partition(rows), mm)) out.push_back(rows_of(mu));
        return out;
    }, py::arg("rows"), py::arg("m"));
    m.def("dim_m_formula", [](const std::vector<Rows>& q) { return to_python_int(dim_m_formula(tuple_of(q))); },
          py::arg("quotient"));
    m.def("dim_m_removal", [](const Rows& rows, int mm) { return to_python_int(dim_m_removal(Partition(rows), mm)); },
          py::arg("rows"), py::arg("m"));
    m.def("width_defect", [](const Rows& rows, int mm) { return width_defect(Partition(rows), mm); },
          py::arg("rows"), py::arg("m"));

    m.def("lis_plain", [](const std::vector<int>& seq) { return lis_plain(seq); }, py::arg("seq"));
    m.def("lis_colored", [](const std::vector<int>& sigma, const std::vector<int>& colors, int mm) {
        return lis_colored(ColoredPermutation(sigma, colors, mm));
    }, py::arg("sigma"), py::arg("colors"), py::arg("m"));
    m.def("shape_of_colored", [](const std::vector<int>& sigma, const std::vector<int>& colors, int mm) {
        return rows_of(shape_of_colored(ColoredPermutation(sigma, colors, mm)));
    }, py::arg("sigma"), py::arg("colors"), py::arg("m"));
    m.def("l_even", [](const std::vector<int>& perm, const std::vector<int>& signs) {
        return l_even(SignedPermutation(perm, signs));
    }, py::arg("perm"), py::arg("signs"));
    m.def("l_odd", [](const std::vector<int>& perm, const std::vector<int>& signs) {
        return l_odd(SignedPermutation(perm, signs));
    }, py::arg("perm"), py::arg("signs"));

    m.def("exact_L_pmf", [](int n, int mm) { return pmf_of(exact_L_distribution(n, mm)); }, py::arg("n"), py::arg("m"),
          "Exact law of the colored LIS as {value: (numerator, denominator)}.");
    m.def("enumerate_L_even_pmf", [](int n) { return pmf_of(enumerate_L_even(n)); }, py::arg("n"));
    m.def("enumerate_L_odd_pmf", [](int n) { return pmf_of(enumerate_L_odd(n)); }, py::arg("n"));

    m.def("sample_scaled_L", [](int n, int mm, std::int64_t count, std::uint64_t seed, int threads,
                                const std::string& scaling) {
        const auto e = [&] {
            py::gil_scoped_release release;
            return sample_scaled_L(n, mm, count, MonteCarloConfig{seed, threads}, scaling_of(scaling));
        }();
        return std::vector<double>(e.sorted().begin(), e.sorted().end());
    }, py::arg("n"), py::arg("m"), py::arg("count"), py::arg("seed"), py::arg("threads") = 1,
       py::arg("scaling") = "abstract", "Sorted scaled colored LIS values.");

    m.def("haar_moment", [](int k, int mm, int n, std::int64_t count, std::uint64_t seed, int threads, bool odd) {
        const TraceMonomial t = odd ? TraceMonomial{2, n, 1} : TraceMonomial{mm, n, 0};
        MomentEstimate e;
        {
            py::gil_scoped_release release;
            e = moment_batch(k, std::span<const TraceMonomial>(&t, 1), count, MonteCarloConfig{seed, threads}).front();
        }
        py::dict out;
        out["estimate"] = e.mean;
        out["stderr"] = e.standard_error;
        out["samples"] = e.samples;
        return out;
    }, py::arg("k"), py::arg("m"), py::arg("n"), py::arg("count"), py::arg("seed"), py::arg("threads") = 1,
       py::arg("odd") = false);

    m.def("airy_ai", &airy_ai, py::arg("x"));
    m.def("tw_cdf", [](double x) { return tw_cdf(x).value; }, py::arg("x"));
    m.def("hastings_mcleod", [](const std::vector<double>& grid) { return hastings_mcleod(grid); }, py::arg("grid"));
    m.def("fredholm_airy_oracle", &fredholm_airy_oracle, py::arg("x"));
    m.def("limit_cdf", &limit_cdf, py::arg("x"), py::arg("m"));

    m.def("verify_identities", [](int max_n, int max_m) {
        VerifyOptions options;
        options.max_n = max_n;
        options.max_m = max_m;
        py::list rows;
        for (const auto& r : verify_identities(options).rows) {
            py::dict row;
            row["identity"] = r.identity;
            row["label"] = r.label;
            row["status"] = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
            row["checked"] = r.checked;
            row["detail"] = r.detail;
            rows.append(row);
        }
        return rows;
    }, py::arg("max_n") = 5, py::arg("max_m") = 3);

    m.def("theorem81_csv", [](int n, int mm, std::int64_t samples, std::uint64_t seed, int threads) {
        LimitComparisonConfig config;
        config.n = n;
        config.m = mm;
        config.samples = samples;
        config.seed = seed;
        config.threads = threads;
        config.scaling = Scaling::kTheorem;
        py::gil_scoped_release release;
        return compare_with_limit(config).to_csv("theorem81");
    }, py::arg("n"), py::arg("m"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 1);
}
