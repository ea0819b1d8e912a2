// Compares the serial reference scans against the OpenMP kernels and the
// propagating backtracker on generated inputs of growing size.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cnaf/enumerate.hpp"
#include "cnaf/oracle.hpp"
#include "cnaf/translate.hpp"
#include "cnaf/two_world.hpp"

using namespace cnaf;

namespace {

Af random_af(std::mt19937_64& rng, std::size_t n, double p) {
    Af af;
    for (std::size_t i = 0; i < n; ++i)
        af.arguments.push_back("a" + std::to_string(i));
    std::uniform_real_distribution<double> pd(0.0, 1.0);
    for (const auto& s : af.arguments)
        for (const auto& t : af.arguments)
            if (pd(rng) < p) af.attacks.emplace_back(s, t);
    return af;
}

template <typename F>
double time_ms(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; parallel kernels run serially\n");
#endif

    std::printf("\n%-34s %10s %10s %8s\n", "workload", "serial ms", "kernel ms",
                "speedup");

    std::mt19937_64 rng(12345);
    for (std::size_t n : {10, 12, 14}) {
        Af af = random_af(rng, n, 0.25);
        Theory t = delta_af(af);
        EnumerateOptions serial{24, false}, parallel{24, true};
        std::vector<CnModel> ms, mp;
        double ts = time_ms([&] { ms = enumerate_models_serial(t, serial); });
        double tp = time_ms([&] { mp = enumerate_models(t, parallel); });
        std::printf("%-34s %10.1f %10.1f %7.2fx%s\n",
                    ("model scan, " + std::to_string(n) + " atoms").c_str(), ts,
                    tp, ts / tp, ms == mp ? "" : "  MISMATCH");
    }

    for (std::size_t n : {10, 12, 14}) {
        Af af = random_af(rng, n, 0.25);
        OracleOptions serial{24, false}, parallel{24, true};
        std::vector<Labelling> ls, lp, lb;
        double ts = time_ms([&] { ls = complete_labellings_serial(af, serial); });
        double tp = time_ms([&] { lp = complete_labellings_scan(af, parallel); });
        double tb = time_ms([&] { lb = complete_labellings(af, parallel); });
        std::printf("%-34s %10.1f %10.1f %7.2fx%s\n",
                    ("labelling scan, " + std::to_string(n) + " args").c_str(),
                    ts, tp, ts / tp, ls == lp ? "" : "  MISMATCH");
        std::printf("%-34s %10.1f %10.1f %7.2fx%s\n",
                    ("  vs backtracker, " + std::to_string(n) + " args").c_str(),
                    ts, tb, ts / tb, ls == lb ? "" : "  MISMATCH");
    }

    {
        // Two-world validity of a wide tautology.
        std::string text = "~(q0 & N q0)";
        for (int i = 1; i < 11; ++i)
            text += " & ~(q" + std::to_string(i) + " & N q" + std::to_string(i) + ")";
        FormulaPtr f = parse_formula(text);
        TwoWorldOptions serial{12, false}, parallel{12, true};
        bool vs = false, vp = false;
        double ts = time_ms([&] { vs = is_valid(f, ValidityMode::World1, serial); });
        double tp = time_ms([&] { vp = is_valid(f, ValidityMode::World1, parallel); });
        std::printf("%-34s %10.1f %10.1f %7.2fx%s\n", "validity scan, 11 atoms",
                    ts, tp, ts / tp, vs == vp ? "" : "  MISMATCH");
    }
    return 0;
}
