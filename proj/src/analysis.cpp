#include "qcss/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "qcss/generators.hpp"
#include "qcss/interleave.hpp"

namespace qcss {

namespace {

// q = p^n for prime p, or nothing.
std::optional<std::pair<int, int>> prime_power_split(long long q) {
    if (q < 2) return std::nullopt;
    int p = smallest_prime_factor(q);
    int n = 0;
    long long v = q;
    while (v % p == 0) {
        v /= p;
        ++n;
    }
    if (v != 1) return std::nullopt;
    return std::make_pair(p, n);
}

std::string trend_direction(const std::vector<TrendRow>& rows) {
    if (rows.size() < 2) return "n/a";
    bool dec = true, inc = true;
    for (size_t i = 1; i < rows.size(); ++i) {
        dec &= rows[i].ratio < rows[i - 1].ratio;
        inc &= rows[i].ratio > rows[i - 1].ratio;
    }
    return dec ? "decreasing" : inc ? "increasing" : "mixed";
}

bool histogram_matches(const CorrelationReport& report, const std::vector<double>& expected) {
    for (const auto& [key, cnt] : report.histogram) {
        bool found = false;
        for (double v : expected)
            if (std::llabs(key - histogram_key(v)) <= 1) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

Verdict make_verdict(const CorrelationReport& report, double declared, double bound,
                     const std::string& kind, int flock, int length, const Meta& meta) {
    Verdict v;
    v.measured = report.measured_max;
    v.declared = declared;
    v.bound = bound;
    v.kind = kind;
    v.within_declared = v.measured <= declared + 1e-6;
    v.meets_bound = v.measured >= bound - 1e-9;
    auto expected = expected_magnitudes(kind, flock, length, meta);
    if (!expected.empty()) v.case_structure_ok = histogram_matches(report, expected);
    return v;
}

}  // namespace

double optimality_ratio(double measured_max, long long M, long long K, long long N) {
    const double bound = qcss_lower_bound(M, K, N);
    if (bound <= 0.0) throw std::invalid_argument("bound is zero (M = K); ratio undefined");
    return measured_max / bound;
}

TrendTable ratio_trend(FamilyKind kind, const std::vector<long long>& points) {
    TrendTable table;
    table.kind = kind;
    for (long long pt : points) {
        TrendRow row;
        row.size_param = pt;
        try {
            if (kind == FamilyKind::prop1_interleaved) {
                auto pn = prime_power_split(pt);
                if (!pn) throw std::invalid_argument("q is not a prime power");
                if (pt - 1 < 4) throw std::invalid_argument("q too small");
                const int K = smallest_prime_factor(pt - 1);
                const long long N = (pt - 1) / K;
                if (K >= pt - 1 || N <= 1)
                    throw std::invalid_argument("q-1 has no nontrivial split");
                auto ctx = FieldContext::build(pn->first, pn->second);
                auto fam = interleave_family(gen_prop1_family(ctx), K);
                auto report = measure_theta_max(fam, N > 64 ? Engine::fft : Engine::naive);
                row.M = pt - 1;
                row.K = K;
                row.N = N;
                row.measured = report.measured_max;
            } else {
                auto rho = Permutation::identity(static_cast<int>(pt));
                auto fam = kind == FamilyKind::thm41 ? gen_thm41_family(static_cast<int>(pt), rho)
                                                     : gen_thm42_family(static_cast<int>(pt), rho);
                auto report = measure_theta_max(fam, pt > 64 ? Engine::fft : Engine::naive);
                row.M = fam.size();
                row.K = fam.flock();
                row.N = fam.length();
                row.measured = report.measured_max;
            }
            row.bound = qcss_lower_bound(row.M, row.K, row.N);
            row.ratio = row.measured / row.bound;
            table.rows.push_back(row);
        } catch (const std::exception& e) {
            table.notices.push_back("point " + std::to_string(pt) + " skipped: " + e.what());
        }
    }
    table.direction = trend_direction(table.rows);
    return table;
}

std::vector<double> expected_magnitudes(const std::string& kind, int /*flock*/, int length,
                                        const Meta& meta) {
    if (kind == "thm41" || kind == "thm42" || kind == "thm41-del")
        return {0.0, static_cast<double>(length)};
    if (kind == "prop1" || kind == "prop1-interleaved") {
        const std::string qs = lookup_meta(meta, "q");
        if (qs.empty()) return {};
        return {0.0, 1.0, std::sqrt(std::stod(qs))};
    }
    return {};
}

Verdict verify_declared(const QcssFamily& fam, Engine engine) {
    if (!fam.declared_vartheta_max) throw std::invalid_argument("family has no declared vartheta_max");
    auto report = measure_theta_max(fam, engine);
    const double bound = qcss_lower_bound(fam.size(), fam.flock(), fam.length());
    return make_verdict(report, *fam.declared_vartheta_max, bound, lookup_meta(fam.meta, "kind"),
                        fam.flock(), fam.length(), fam.meta);
}

Verdict verify_declared(const SequenceFamily& fam, Engine engine) {
    if (!fam.declared_theta_max) throw std::invalid_argument("family has no declared theta_max");
    auto report = measure_theta_max(fam, engine);
    const double bound = welch_bound(fam.period(), fam.size());
    return make_verdict(report, *fam.declared_theta_max, bound, lookup_meta(fam.meta, "kind"),
                        1, fam.period(), fam.meta);
}

}  // namespace qcss
