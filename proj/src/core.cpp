#include "qcss/core.hpp"

#include <cmath>
#include <numbers>

namespace qcss {

namespace {

void check_exponents(int order, const std::vector<int>& exps) {
    if (order < 1) throw std::invalid_argument("order must be positive");
    for (int e : exps)
        if (e < 0 || e >= order) throw std::invalid_argument("exponent out of range [0, order)");
}

}  // namespace

void PhaseExponentSequence::validate() const {
    if (exponents.empty()) throw std::invalid_argument("period must be >= 1");
    check_exponents(order, exponents);
}

void ComplementaryMatrix::validate() const {
    if (flock < 1 || length < 1) throw std::invalid_argument("matrix dimensions must be >= 1");
    if (exponents.size() != static_cast<size_t>(flock) * length)
        throw std::invalid_argument("exponent grid is not K x N");
    check_exponents(order, exponents);
}

void SequenceFamily::validate() const {
    if (members.empty()) throw std::invalid_argument("family must have at least one member");
    for (const auto& s : members) {
        s.validate();
        if (s.order != order() || s.period() != period())
            throw std::invalid_argument("family members must share order and period");
    }
}

void QcssFamily::validate() const {
    if (members.empty()) throw std::invalid_argument("family must have at least one member");
    for (const auto& m : members) {
        m.validate();
        if (m.order != order() || m.flock != flock() || m.length != length())
            throw std::invalid_argument("family members must share order, flock and length");
    }
}

Complex unit_phase(long long order, long long exponent) {
    long long e = exponent % order;
    if (e < 0) e += order;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / order;
    return {std::cos(angle), std::sin(angle)};
}

Complex entry_value(const PhaseExponentSequence& seq, int t) {
    if (t < 0 || t >= seq.period()) throw std::out_of_range("sequence index out of range");
    return unit_phase(seq.order, seq.exponents[t]);
}

double qcss_lower_bound(long long M, long long K, long long N) {
    if (K < 1 || N < 1 || M < K) throw std::invalid_argument("require M >= K >= 1, N >= 1");
    if (M * N <= 1) throw std::invalid_argument("require M*N > 1");
    double radicand = (static_cast<double>(M) / K - 1.0) / (static_cast<double>(M) * N - 1.0);
    return static_cast<double>(K) * N * std::sqrt(radicand);
}

double welch_bound(long long n, long long M) {
    if (n < 1 || M < 1) throw std::invalid_argument("require n >= 1, M >= 1");
    if (n * M <= 1) throw std::invalid_argument("require n*M > 1");
    return static_cast<double>(n) * std::sqrt(static_cast<double>(M - 1) / (static_cast<double>(n) * M - 1));
}

std::string lookup_meta(const Meta& meta, const std::string& key) {
    for (const auto& [k, v] : meta)
        if (k == key) return v;
    return {};
}

}  // namespace qcss
