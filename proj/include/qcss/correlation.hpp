#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "qcss/core.hpp"

namespace qcss {

enum class Engine { naive, fft };

/// Measured correlation summary of a family sweep over all (i, j, tau)
/// triples, excluding the in-phase auto term (i == j, tau == 0).
struct CorrelationReport {
    double measured_max = 0.0;                          // vartheta_max
    std::vector<std::tuple<int, int, int>> argmax;      // (i, j, tau), ties within 1e-9 of max
    std::map<long long, std::uint64_t> histogram;       // key = llround(magnitude * 1e6)
    double peak = 0.0;                                  // K*N
    std::uint64_t pair_count = 0;                       // scanned triples, M*M*N - M
};

long long histogram_key(double magnitude);

/// Eq.-(1) double sum; tau shifts the conjugated second argument, indices mod N.
Complex pcf(const ComplementaryMatrix& A, const ComplementaryMatrix& B, int tau);

Complex pcf_sequence(const PhaseExponentSequence& a, const PhaseExponentSequence& b, int tau);

/// pcf(A, B, tau) for every tau at once; naive O(K N^2).
std::vector<Complex> pcf_spectrum_naive(const ComplementaryMatrix& A, const ComplementaryMatrix& B);

/// Same values via per-row circular cross-correlation with length-N transforms.
std::vector<Complex> pcf_spectrum_fft(const ComplementaryMatrix& A, const ComplementaryMatrix& B);

CorrelationReport measure_theta_max(const QcssFamily& fam, Engine engine = Engine::naive);
CorrelationReport measure_theta_max(const SequenceFamily& fam, Engine engine = Engine::naive);

/// Sequence family viewed as 1 x n matrices (the K = 1 case).
QcssFamily as_row_matrices(const SequenceFamily& fam);

}  // namespace qcss
