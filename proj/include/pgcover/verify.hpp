#pragma once

#include "pgcover/constructions.hpp"
#include "pgcover/covers.hpp"
#include "pgcover/subset_scan.hpp"

#include <optional>
#include <string>

namespace pgcover {

enum class ScanMode { Exhaustive, Sampled };

constexpr uint64_t kDefaultBudget = 1'000'000'000ULL;

struct VerifyReport {
    std::string theorem;
    int n = 0;
    int q = 0;
    int a = 0;
    ScanMode mode = ScanMode::Exhaustive;
    uint64_t seed = 0;
    uint64_t sample_count = 0;
    uint64_t instances_checked = 0;
    uint64_t hypothesis_met_count = 0;
    /// a < (q-2)/3, the hypothesis under which the paper's conclusions are
    /// guaranteed; runs outside it still scan and report.
    bool hypothesis_met = true;
    std::vector<PartialCover> violations;
    std::vector<int> violation_points; // tangent-bound checks record points
    double wall_time_s = 0;

    bool pass() const { return violations.empty() && violation_points.empty(); }
};

/// Corollary 15 decomposition: exactly q members through a common
/// (n-2)-space, the rest not through it.
struct PencilStructure {
    Subspace center;
    std::vector<int> pencil_members;
    std::vector<int> extras;
};

std::optional<PencilStructure> detect_pencil_structure(const Geometry& g,
                                                       const PartialCover& s);

struct ScanOptions {
    ScanMode mode = ScanMode::Exhaustive;
    uint64_t samples = 100000;
    uint64_t seed = 0;
    uint64_t budget = kDefaultBudget;
    int threads = 0;      // 0 = all available
    bool serial_reference = false; // force the serial scan path
};

/// Scan size-(q+a) hyperplane subsets; every partial cover with
/// 1 <= |holes| <= q^{n-1} must have at least q^{n-1} - a q^{n-2} holes,
/// all in one hyperplane (and for n = 2, at most q collinear holes).
VerifyReport verify_hole_theorem(const Geometry& g, int a, const ScanOptions& opt);

/// Same qualifying subsets; each must decompose as q hyperplanes through a
/// common (n-2)-space plus a others not through it. Requires q prime.
VerifyReport verify_structure_theorem(const Geometry& g, int a, const ScanOptions& opt);

/// Every essential point of the blocking set b (|b| = q+a+1 <= 2q) must
/// lie on at least q^{n-1} - a q^{n-2} tangent hyperplanes.
VerifyReport verify_tangent_bound(const Geometry& g, const PointSet& b);

/// Seeded random covers inside the unique-reducibility size bound, each
/// reduced under `orders` random removal orders; all orders must agree.
VerifyReport verify_reduction_uniqueness(const Geometry& g, int trials,
                                         uint64_t seed, int orders = 20);

/// Number of size-k hyperplane subsets an exhaustive run would visit;
/// throws if it exceeds the budget.
uint64_t exhaustive_instance_count(const Geometry& g, int k, uint64_t budget);

long long hole_lower_bound(int n, int q, int a); // q^{n-1} - a q^{n-2}

} // namespace pgcover
