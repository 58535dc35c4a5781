// Benchmark: serial reference scan vs the OpenMP scan on the two
// enumeration workloads the verify module runs most (exhaustive PG(2,5)
// and sampled PG(2,17)). Also cross-checks that both paths report the
// same counts.

#include "pgcover/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

using namespace pgcover;

namespace {

double time_run(const Geometry& g, int a, ScanOptions opt) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport r = verify_hole_theorem(g, a, opt);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "    instances=" << r.instances_checked
              << " qualifying=" << r.hypothesis_met_count
              << " violations=" << r.violations.size() << "  " << dt << " s\n";
    return dt;
}

void bench(const char* label, const Geometry& g, int a, ScanOptions opt) {
    std::cout << label << "\n";
    opt.serial_reference = true;
    std::cout << "  serial:\n";
    double serial = time_run(g, a, opt);
    opt.serial_reference = false;
    opt.threads = 0;
    std::cout << "  openmp:\n";
    double parallel = time_run(g, a, opt);
    std::cout << "  speedup: " << serial / parallel << "x\n";
}

} // namespace

int main(int argc, char** argv) {
    uint64_t samples = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 200000;

    Geometry pg25(2, FieldSpec::make(5, 1));
    ScanOptions ex;
    ex.mode = ScanMode::Exhaustive;
    bench("exhaustive PG(2,5), size 5 (C(31,5) = 169911 subsets)", pg25, 0, ex);

    Geometry pg217(2, FieldSpec::make(17, 1));
    ScanOptions sa;
    sa.mode = ScanMode::Sampled;
    sa.samples = samples;
    sa.seed = 42;
    std::cout << "\n";
    bench("sampled PG(2,17), size 19", pg217, 2, sa);
    return 0;
}
