#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcss {

using Complex = std::complex<double>;
using Meta = std::vector<std::pair<std::string, std::string>>;

/// Unit-modulus sequence stored as integer exponents e mod L; entry t is exp(2*pi*i*e_t/L).
struct PhaseExponentSequence {
    int order = 1;                  // root-of-unity order L
    std::vector<int> exponents;     // each in [0, L)

    int period() const { return static_cast<int>(exponents.size()); }
    void validate() const;
};

/// One QCSS element: a K x N grid of phase exponents over a common order L.
struct ComplementaryMatrix {
    int order = 1;
    int flock = 1;                  // K
    int length = 1;                 // N
    std::vector<int> exponents;     // row-major, size K*N

    int at(int k, int t) const { return exponents[static_cast<size_t>(k) * length + t]; }
    int& at(int k, int t) { return exponents[static_cast<size_t>(k) * length + t]; }
    void validate() const;
};

struct SequenceFamily {
    std::vector<PhaseExponentSequence> members;
    std::optional<double> declared_theta_max;
    std::string name;
    Meta meta;

    int order() const { return members.empty() ? 1 : members.front().order; }
    int period() const { return members.empty() ? 0 : members.front().period(); }
    int size() const { return static_cast<int>(members.size()); }
    void validate() const;
};

struct QcssFamily {
    std::vector<ComplementaryMatrix> members;
    std::optional<double> declared_vartheta_max;
    std::string name;
    Meta meta;

    int order() const { return members.empty() ? 1 : members.front().order; }
    int flock() const { return members.empty() ? 0 : members.front().flock; }
    int length() const { return members.empty() ? 0 : members.front().length; }
    int size() const { return static_cast<int>(members.size()); }
    void validate() const;
    // M > K > 1 is what the QCSS label requires; generation never enforces it.
    bool qualifies_as_qcss() const { return size() > flock() && flock() > 1; }
};

/// exp(2*pi*i*exponent/order)
Complex unit_phase(long long order, long long exponent);

Complex entry_value(const PhaseExponentSequence& seq, int t);

/// Generalized Welch bound K*N*sqrt((M/K - 1)/(M*N - 1)).
double qcss_lower_bound(long long M, long long K, long long N);

/// Welch bound n*sqrt((M - 1)/(n*M - 1)).
double welch_bound(long long n, long long M);

std::string lookup_meta(const Meta& meta, const std::string& key);

}  // namespace qcss
