// Benchmark comparing the serial oracle kernels against the OpenMP ones.
// Every pair is also checked for exact equality while timing.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fschur/composition.hpp"
#include "fschur/expansion.hpp"
#include "fschur/par.hpp"
#include "fschur/polynomial.hpp"
#include "fschur/tableau.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace fschur;
using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

struct Row {
    std::string name;
    double serial_s = 0;
    double parallel_s = 0;
    bool match = false;
};

Row bench_jacobi_trudi(Int max_size, std::size_t nvars) {
    Row row{"jacobi-trudi batch |L|<=" + std::to_string(max_size) + ", " +
                std::to_string(nvars) + " vars",
            0, 0, true};
    auto comps = compositions_up_to(max_size);

    auto t0 = clock_type::now();
    std::vector<SparsePolynomial> serial;
    serial.reserve(comps.size());
    for (const auto& L : comps)
        serial.push_back(jacobi_trudi_poly(L, nvars));
    row.serial_s = seconds_since(t0);

    t0 = clock_type::now();
    std::vector<SparsePolynomial> parallel;
    parallel.reserve(comps.size());
    for (const auto& L : comps)
        parallel.push_back(par::jacobi_trudi_poly(L, nvars));
    row.parallel_s = seconds_since(t0);

    row.match = serial == parallel;
    return row;
}

Row bench_expansion(Int size, std::size_t nvars) {
    // The F expansion of the staircase-ish shape with the most tableaux.
    Partition shape;
    Int best = -1;
    for (const auto& p : all_partitions(size)) {
        Int count = count_syt(p);
        if (count > best) {
            best = count;
            shape = p;
        }
    }
    FExpansion f = schur_to_f(shape);
    Row row{"expansion_poly of s" + to_string(shape) + " (" +
                std::to_string(f.size()) + " F terms, " + std::to_string(nvars) +
                " vars)",
            0, 0, true};

    auto t0 = clock_type::now();
    SparsePolynomial serial = expansion_poly(f, nvars);
    row.serial_s = seconds_since(t0);

    t0 = clock_type::now();
    SparsePolynomial parallel = par::expansion_poly(f, nvars);
    row.parallel_s = seconds_since(t0);

    row.match = serial == parallel;
    return row;
}

Row bench_schur_sum(Int max_size) {
    Row row{"telescoping sum batch |shape|<=" + std::to_string(max_size), 0, 0, true};

    auto t0 = clock_type::now();
    std::vector<Partition> serial_failures;
    for (const auto& shape : partitions_up_to(max_size)) {
        SchurExpansion sum;
        for_each_syt(shape, [&](const StandardTableau& t) {
            SignedPartition sp = straighten(descent_data(t).composition);
            if (!sp.is_zero())
                add_term(sum, sp.shape(), sp.sign());
        });
        SchurExpansion expected;
        expected.emplace(shape, 1);
        if (!(sum == expected))
            serial_failures.push_back(shape);
    }
    row.serial_s = seconds_since(t0);

    t0 = clock_type::now();
    std::vector<Partition> parallel_failures = par::schur_sum_failures(max_size);
    row.parallel_s = seconds_since(t0);

    row.match = serial_failures == parallel_failures && serial_failures.empty();
    return row;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel benchmark"};
    Int jt_size = 7;
    std::size_t jt_vars = 6;
    Int exp_size = 9;
    std::size_t exp_vars = 7;
    Int sum_size = 10;
    app.add_option("--jt-size", jt_size, "max composition size for the determinant batch");
    app.add_option("--jt-vars", jt_vars, "variables for the determinant batch");
    app.add_option("--exp-size", exp_size, "shape size for the expansion benchmark");
    app.add_option("--exp-vars", exp_vars, "variables for the expansion benchmark");
    app.add_option("--sum-size", sum_size, "max shape size for the telescoping batch");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel kernels run serially\n");
#endif
    std::printf("%-58s %10s %10s %8s %s\n", "benchmark", "serial", "openmp",
                "speedup", "match");

    std::vector<Row> rows;
    rows.push_back(bench_jacobi_trudi(jt_size, jt_vars));
    rows.push_back(bench_expansion(exp_size, exp_vars));
    rows.push_back(bench_schur_sum(sum_size));

    bool all_match = true;
    for (const auto& row : rows) {
        std::printf("%-58s %9.3fs %9.3fs %7.2fx %s\n", row.name.c_str(), row.serial_s,
                    row.parallel_s,
                    row.parallel_s > 0 ? row.serial_s / row.parallel_s : 0.0,
                    row.match ? "yes" : "NO");
        all_match = all_match && row.match;
    }
    return all_match ? 0 : 1;
}
