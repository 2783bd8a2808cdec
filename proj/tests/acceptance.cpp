// Acceptance suite: every criterion prints one PASS/FAIL line and the
// binary exits with the number of failures. The CLI binary path comes in
// as argv[1].

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "fschur/composition.hpp"
#include "fschur/expansion.hpp"
#include "fschur/expr.hpp"
#include "fschur/polynomial.hpp"
#include "fschur/tableau.hpp"
#include "run_cli.hpp"

using namespace fschur;
using clock_type = std::chrono::steady_clock;

namespace {

std::string g_cli;

struct Criterion {
    std::string name;
    double limit_seconds;
    std::function<bool(std::string&)> run;
};

bool check(bool condition, std::string& why, const std::string& message) {
    if (!condition && why.empty())
        why = message;
    return condition;
}

// 1. The paper's worked example, via the library and the CLI.
bool worked_example(std::string& why) {
    bool ok = true;
    FExpansion f;
    for (auto parts : {std::vector<Int>{4, 1}, {3, 2}, {2, 3}, {1, 4}})
        add_term(f, Composition(parts), 1);
    SchurExpansion expected;
    add_term(expected, Partition({4, 1}), 1);
    ok &= check(f_to_schur(f) == expected, why, "conversion is not exactly {(4,1): 1}");

    ok &= check(straighten(Composition({2, 3})) == SignedPartition::zero(), why,
                "straighten((2,3)) is not zero");
    ok &= check(straighten(Composition({1, 4})) ==
                    SignedPartition(-1, Partition({3, 2})),
                why, "straighten((1,4)) is not -(3,2)");

    CliResult conv = run_cli(g_cli, {"convert", "F[4,1]+F[3,2]+F[2,3]+F[1,4]"});
    ok &= check(conv.exit_code == 0 && conv.out == "s[4,1]\n", why,
                "CLI convert output mismatch");

    CliResult verify = run_cli(g_cli, {"verify", "--shape", "4,1"});
    ok &= check(verify.exit_code == 0, why, "CLI verify exited nonzero");
    ok &= check(verify.out.find("C=(2,3)  0  FIXED") != std::string::npos, why,
                "verify does not report straighten((2,3)) = 0");
    ok &= check(verify.out.find("C=(1,4)  - s[3,2]") != std::string::npos, why,
                "verify does not report straighten((1,4)) = -(3,2)");
    return ok;
}

// 2. The telescoping identity for every shape of size at most 8.
bool schur_sum_suite(std::string& why) {
    bool ok = true;
    long shapes = 0;
    for (Int n = 0; n <= 8; ++n) {
        for (const auto& shape : all_partitions(n)) {
            ++shapes;
            SchurExpansion sum;
            for_each_syt(shape, [&](const StandardTableau& t) {
                SignedPartition sp = straighten(descent_data(t).composition);
                if (!sp.is_zero())
                    add_term(sum, sp.shape(), sp.sign());
            });
            SchurExpansion expected;
            add_term(expected, shape, 1);
            ok &= check(sum == expected, why,
                        "telescoped sum wrong for shape " + to_string(shape));
        }
    }
    ok &= check(shapes == 67, why, "expected 67 shapes of size <= 8");
    return ok;
}

// 3. The involution suite for every shape of size at most 8.
bool involution_suite(std::string& why) {
    bool ok = true;
    for (Int n = 0; n <= 8 && ok; ++n) {
        for (const auto& shape : all_partitions(n)) {
            PairingReport report;
            try {
                report = cancellation_pairing(shape);
            } catch (const std::exception& e) {
                return check(false, why, std::string("pairing failed: ") + e.what());
            }
            for (std::size_t i = 0; i < report.entries.size(); ++i) {
                const auto& e = report.entries[i];
                if (e.cls == PairingClass::Superstandard)
                    continue;
                const Composition& c = e.descent.composition;
                ok &= check(e.raise_index.has_value(), why, "missing raise index");
                if (!ok)
                    return ok;
                if (e.cls == PairingClass::Fixed) {
                    ok &= check(raise(c, *e.raise_index) == c, why,
                                "fixed tableau raise witness broken");
                    ok &= check(e.straightened == SignedPartition::zero(), why,
                                "fixed tableau straightens nonzero at " +
                                    to_string(e.tableau));
                    continue;
                }
                const auto& p = report.entries[*e.partner];
                ok &= check(p.partner && *p.partner == i, why,
                            "theta is not an involution at " + to_string(e.tableau));
                ok &= check(p.tableau.shape() == e.tableau.shape(), why,
                            "theta does not preserve the shape");
                ok &= check(raise(c, *e.raise_index) == p.descent.composition, why,
                            "reported raise index does not realize C(theta(T))");
                ok &= check(p.straightened == e.straightened.negated(), why,
                            "straightened values are not exact negatives");
                if (!ok)
                    return ok;
            }
        }
    }
    return ok;
}

// 4. Two-run standard tableaux of a two-row shape are counted by s1-s2+1.
bool two_run_count(std::string& why) {
    bool ok = true;
    for (Int s1 = 1; s1 <= 8; ++s1) {
        for (Int s2 = 1; s2 <= s1; ++s2) {
            Int two_run = 0;
            for_each_syt(Partition({s1, s2}), [&](const StandardTableau& t) {
                if (descent_data(t).composition.length() == 2)
                    ++two_run;
            });
            ok &= check(two_run == s1 - s2 + 1, why,
                        "count wrong for shape (" + std::to_string(s1) + "," +
                            std::to_string(s2) + ")");
        }
    }
    return ok;
}

// 5. Oracle equivalences at six variables, and the straightening pair.
bool oracle_equivalences(std::string& why) {
    bool ok = true;
    for (Int n = 0; n <= 6; ++n) {
        for (const auto& shape : all_partitions(n)) {
            ok &= check(expansion_poly(schur_to_f(shape), 6) == schur_poly(shape, 6),
                        why, "Stanley oracle fails for " + to_string(shape));
        }
    }
    long comps = 0;
    for (Int n = 1; n <= 6; ++n) {
        for (const auto& L : all_compositions(n)) {
            ++comps;
            SignedPartition s = straighten(L);
            SparsePolynomial rhs(6);
            if (!s.is_zero())
                rhs = schur_poly(s.shape(), 6).scaled(s.sign());
            ok &= check(jacobi_trudi_poly(L, 6) == rhs, why,
                        "determinant oracle fails for " + to_string(L));
        }
    }
    ok &= check(comps == 63, why, "expected 63 nonempty compositions of size <= 6");
    for (const auto& L : compositions_up_to(9))
        ok &= check(straighten(L) == straighten_by_raises(L), why,
                    "straighten routes disagree at " + to_string(L));
    return ok;
}

// 6. Round trip through the F basis on random Schur expansions.
bool round_trip(std::string& why) {
    bool ok = true;
    std::mt19937_64 rng(20240817);
    auto shapes = partitions_up_to(8);
    std::uniform_int_distribution<std::size_t> pick(1, shapes.size() - 1);
    std::uniform_int_distribution<Int> coeff(-20, 20);
    std::uniform_int_distribution<int> howmany(1, 5);
    for (int trial = 0; trial < 120; ++trial) {
        SchurExpansion g;
        int k = howmany(rng);
        for (int i = 0; i < k; ++i) {
            Int c = coeff(rng);
            if (c != 0)
                add_term(g, shapes[pick(rng)], c);
        }
        FExpansion f;
        for (const auto& [mu, c] : g)
            for (const auto& [L, m] : schur_to_f(mu))
                add_term(f, L, checked_mul(c, m));
        ok &= check(f_to_schur(f) == g, why,
                    "round trip failed at trial " + std::to_string(trial));
    }
    return ok;
}

// 7. The symmetry gate on the CLI.
bool symmetry_gate(std::string& why) {
    bool ok = true;
    CliResult bad = run_cli(g_cli, {"convert", "--check-symmetric", "F[1,2]"}, true);
    ok &= check(bad.exit_code == 3, why,
                "non-symmetric input exited " + std::to_string(bad.exit_code));

    for (auto parts : {std::vector<Int>{3, 2}, {2, 2, 1}, {4, 1}, {1, 1, 1}}) {
        Expression e;
        e.f_terms = schur_to_f(Partition(parts));
        CliResult good =
            run_cli(g_cli, {"convert", "--check-symmetric", serialize(e)});
        ok &= check(good.exit_code == 0, why,
                    "schur_to_f expansion rejected for " +
                        to_string(Partition(parts)));
    }
    return ok;
}

// 8. Byte-exact theta output for the paper's tableau examples.
bool theta_goldens(std::string& why) {
    struct Golden {
        const char* tableau;
        const char* expected;
    };
    const Golden goldens[] = {
        {"[[1,2,3,6,8,9],[4,5,7]]", "[[1,2,5,6,8,9],[3,4,7]]\nC=(2,4,3)\ni=2\n"},
        {"[[1,2,3,4,5],[6,7,9],[8]]", "[[1,2,3,4,5],[6,8,9],[7]]\nC=(5,1,3)\ni=3\n"},
        {"[[1,2,3,6],[4,5]]", "[[1,2,5,6],[3,4]]\nC=(2,4)\ni=2\n"},
    };
    bool ok = true;
    for (const auto& g : goldens) {
        CliResult r = run_cli(g_cli, {"theta", "--tableau", g.tableau});
        ok &= check(r.exit_code == 0 && r.out == g.expected, why,
                    std::string("theta output mismatch for ") + g.tableau);
    }
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <path-to-fschur-cli>\n", argv[0]);
        return 64;
    }
    g_cli = argv[1];

    std::vector<Criterion> criteria = {
        {"worked example (4,1): conversion, straightenings, CLI verify", 1.0,
         worked_example},
        {"telescoping suite: every |shape| <= 8 sums to its Schur term", 10.0,
         schur_sum_suite},
        {"involution suite: theta on every non-superstandard tableau, |shape| <= 8",
         10.0, involution_suite},
        {"two-run count: s1 - s2 + 1 for all two-row shapes, s1 <= 8", 10.0,
         two_run_count},
        {"oracle equivalences: Stanley + determinant at 6 vars, raises to size 9",
         30.0, oracle_equivalences},
        {"round trip: 120 random Schur expansions, |shape| <= 8, fixed seed", 30.0,
         round_trip},
        {"symmetry gate: exit 3 on F[1,2], exit 0 on Schur expansions", 10.0,
         symmetry_gate},
        {"theta goldens: byte-exact CLI output for the worked tableaux", 10.0,
         theta_goldens},
    };

    int failures = 0;
    for (auto& criterion : criteria) {
        std::string why;
        auto start = clock_type::now();
        bool ok = false;
        try {
            ok = criterion.run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double seconds = std::chrono::duration<double>(clock_type::now() - start).count();
        if (seconds > criterion.limit_seconds) {
            ok = false;
            if (why.empty())
                why = "exceeded " + std::to_string(criterion.limit_seconds) + "s limit";
        }
        if (ok) {
            std::printf("[PASS] %s (%.2fs)\n", criterion.name.c_str(), seconds);
        } else {
            std::printf("[FAIL] %s (%.2fs): %s\n", criterion.name.c_str(), seconds,
                        why.c_str());
            ++failures;
        }
    }
    return failures;
}
