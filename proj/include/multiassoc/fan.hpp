#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "multiassoc/linalg.hpp"
#include "multiassoc/rays.hpp"
#include "multiassoc/subword_complex.hpp"

namespace multiassoc {

enum class RidgeStatus { Good, Bad, Degenerate };
std::string to_string(RidgeStatus s);

struct RidgeReport {
    Facet ridge;
    int leaving = 0;   // position in f only
    int entering = 0;  // position in f' only
    RidgeStatus status = RidgeStatus::Degenerate;
    // coefficients over the sorted positions of f u f', leaving coefficient positive
    std::vector<Rational> dependence;
};

int facet_rank(const RayAssignment& ra, Facet f);
RidgeReport classify_ridge(const RayAssignment& ra, Facet f, Facet g);

struct ConditionOneResult {
    bool holds = true;
    std::optional<Facet> witness;
    std::size_t checked = 0;
    bool sampled = false;
};

enum class SweepPolicy { Full, Sampled, Skip };

// LP sweep of every (or a deterministic stride sample of) facets against `base`.
ConditionOneResult condition_one(const RayAssignment& ra, const ComplexIndex& idx, Facet base,
                                 SweepPolicy policy = SweepPolicy::Full, std::size_t sample = 10000,
                                 int threads = 1);

struct FanStats {
    int n = 0;
    std::uint64_t bad_ridges = 0;
    std::uint64_t degenerate_ridges = 0;
    std::uint64_t ridges = 0;
    std::uint64_t degenerate_cones = 0;
    std::uint64_t cones = 0;
    int min_dimension = 0;

    bool operator==(const FanStats&) const = default;
};

// 100 * count / total rounded half up to two decimals, from exact integers
std::string format_ratio(std::uint64_t count, std::uint64_t total);

struct CertifyOptions {
    int threads = 1;
    SweepPolicy sweep = SweepPolicy::Full;
    std::size_t sample = 10000;
};

struct CertifyResult {
    bool certified = false;
    bool partial = false;  // condition (1) only sampled or skipped
    FanStats stats;
    std::optional<RidgeReport> first_failure;
    ConditionOneResult condition_one;
    std::optional<Facet> base;
};

// per-facet ranks and ridge counts; ridges via one determinant per facet
FanStats fan_stats(const RayAssignment& ra, const ComplexIndex& idx, int threads = 1,
                   std::optional<RidgeReport>* first_failure = nullptr);
CertifyResult certify_fan(const RayAssignment& ra, const ComplexIndex& idx, const CertifyOptions& opt = {});

// default sweep: full for n <= 5, sampled above
SweepPolicy default_sweep(int n);

std::string format_stats_table(const std::vector<FanStats>& columns);
nlohmann::json to_json(const FanStats& s);
nlohmann::json to_json(const CertifyResult& r);

}  // namespace multiassoc
