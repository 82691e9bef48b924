#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcss/correlation.hpp"
#include "qcss/core.hpp"

namespace qcss {

/// measured / qcss_lower_bound(M, K, N); the bound must be positive (M > K).
double optimality_ratio(double measured_max, long long M, long long K, long long N);

enum class FamilyKind { prop1_interleaved, thm41, thm42 };

struct TrendRow {
    long long size_param = 0;   // q for prop1-interleaved, N for thm41/thm42
    long long M = 0, K = 0, N = 0;
    double measured = 0.0;
    double bound = 0.0;
    double ratio = 0.0;
};

struct TrendTable {
    FamilyKind kind;
    std::vector<TrendRow> rows;          // increasing size order
    std::vector<std::string> notices;    // skipped points etc.
    std::string direction;               // "decreasing", "increasing", "mixed", "n/a"
};

/// Measured-vs-bound ratios across a parameter sweep. For prop1-interleaved
/// the points are prime powers q and K defaults to the smallest nontrivial
/// divisor of q-1 (a K = o(M) stand-in; the source never fixes one).
TrendTable ratio_trend(FamilyKind kind, const std::vector<long long>& points);

struct Verdict {
    double measured = 0.0;
    double declared = 0.0;
    double bound = 0.0;
    bool within_declared = false;        // measured <= declared + 1e-6
    bool meets_bound = false;            // measured >= bound - 1e-9
    std::optional<bool> case_structure_ok;  // histogram support check, known kinds only
    std::string kind;
    bool pass() const {
        return within_declared && meets_bound && case_structure_ok.value_or(true);
    }
};

Verdict verify_declared(const QcssFamily& fam, Engine engine = Engine::naive);
Verdict verify_declared(const SequenceFamily& fam, Engine engine = Engine::naive);

/// Histogram magnitudes a known family kind is allowed to produce away from
/// the in-phase peak; empty when the kind is not recognized.
std::vector<double> expected_magnitudes(const std::string& kind, int flock, int length,
                                        const Meta& meta);

}  // namespace qcss
