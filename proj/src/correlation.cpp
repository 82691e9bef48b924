#include "qcss/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "qcss/fft.hpp"

namespace qcss {

namespace {

void check_compatible(const ComplementaryMatrix& A, const ComplementaryMatrix& B) {
    if (A.order != B.order || A.flock != B.flock || A.length != B.length)
        throw std::invalid_argument("matrices must share order, flock and length");
}

std::vector<Complex> root_table(int order) {
    std::vector<Complex> roots(order);
    for (int e = 0; e < order; ++e) roots[e] = unit_phase(order, e);
    return roots;
}

std::vector<Complex> to_values(const ComplementaryMatrix& mat, const std::vector<Complex>& roots) {
    std::vector<Complex> vals(mat.exponents.size());
    for (size_t i = 0; i < vals.size(); ++i) vals[i] = roots[mat.exponents[i]];
    return vals;
}

std::vector<Complex> spectrum_naive_vals(const std::vector<Complex>& a, const std::vector<Complex>& b,
                                         int K, int N) {
    std::vector<Complex> spec(N, 0.0);
    for (int tau = 0; tau < N; ++tau) {
        Complex sum = 0.0;
        for (int k = 0; k < K; ++k) {
            const Complex* ra = a.data() + static_cast<size_t>(k) * N;
            const Complex* rb = b.data() + static_cast<size_t>(k) * N;
            for (int t = 0; t < N; ++t) sum += ra[t] * std::conj(rb[(t + tau) % N]);
        }
        spec[tau] = sum;
    }
    return spec;
}

std::vector<Complex> spectrum_fft_vals(const std::vector<Complex>& a, const std::vector<Complex>& b,
                                       int K, int N) {
    std::vector<Complex> spec(N, 0.0);
    std::vector<Complex> row(N);
    for (int k = 0; k < K; ++k) {
        std::copy_n(a.begin() + static_cast<size_t>(k) * N, N, row.begin());
        auto fa = dft(row);
        std::copy_n(b.begin() + static_cast<size_t>(k) * N, N, row.begin());
        auto fb = dft(row);
        for (int f = 0; f < N; ++f) fa[f] *= std::conj(fb[f]);
        auto corr = dft(fa);  // c(tau) = DFT_tau[FA .* conj(FB)] / N
        for (int tau = 0; tau < N; ++tau) spec[tau] += corr[tau] / static_cast<double>(N);
    }
    return spec;
}

int worker_count() {
    if (const char* env = std::getenv("THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

struct Partial {
    double max = 0.0;
    std::vector<std::tuple<int, int, int, double>> candidates;  // within 1e-9 of chunk max
    std::map<long long, std::uint64_t> histogram;
    std::uint64_t count = 0;
};

}  // namespace

long long histogram_key(double magnitude) { return std::llround(magnitude * 1e6); }

Complex pcf(const ComplementaryMatrix& A, const ComplementaryMatrix& B, int tau) {
    check_compatible(A, B);
    if (tau < 0 || tau >= A.length) throw std::invalid_argument("tau out of range");
    auto roots = root_table(A.order);
    auto va = to_values(A, roots);
    auto vb = to_values(B, roots);
    Complex sum = 0.0;
    for (int k = 0; k < A.flock; ++k)
        for (int t = 0; t < A.length; ++t)
            sum += va[static_cast<size_t>(k) * A.length + t] *
                   std::conj(vb[static_cast<size_t>(k) * A.length + (t + tau) % A.length]);
    return sum;
}

Complex pcf_sequence(const PhaseExponentSequence& a, const PhaseExponentSequence& b, int tau) {
    if (a.order != b.order || a.period() != b.period())
        throw std::invalid_argument("sequences must share order and period");
    if (tau < 0 || tau >= a.period()) throw std::invalid_argument("tau out of range");
    auto roots = root_table(a.order);
    Complex sum = 0.0;
    const int n = a.period();
    for (int t = 0; t < n; ++t)
        sum += roots[a.exponents[t]] * std::conj(roots[b.exponents[(t + tau) % n]]);
    return sum;
}

std::vector<Complex> pcf_spectrum_naive(const ComplementaryMatrix& A, const ComplementaryMatrix& B) {
    check_compatible(A, B);
    auto roots = root_table(A.order);
    return spectrum_naive_vals(to_values(A, roots), to_values(B, roots), A.flock, A.length);
}

std::vector<Complex> pcf_spectrum_fft(const ComplementaryMatrix& A, const ComplementaryMatrix& B) {
    check_compatible(A, B);
    auto roots = root_table(A.order);
    return spectrum_fft_vals(to_values(A, roots), to_values(B, roots), A.flock, A.length);
}

CorrelationReport measure_theta_max(const QcssFamily& fam, Engine engine) {
    fam.validate();
    const int M = fam.size();
    const int K = fam.flock();
    const int N = fam.length();

    auto roots = root_table(fam.order());
    std::vector<std::vector<Complex>> vals;
    vals.reserve(M);
    for (const auto& mat : fam.members) vals.push_back(to_values(mat, roots));

    auto scan_rows = [&](int i_begin, int i_end, Partial& part) {
        for (int i = i_begin; i < i_end; ++i) {
            for (int j = 0; j < M; ++j) {
                auto spec = engine == Engine::fft ? spectrum_fft_vals(vals[i], vals[j], K, N)
                                                  : spectrum_naive_vals(vals[i], vals[j], K, N);
                for (int tau = 0; tau < N; ++tau) {
                    if (i == j && tau == 0) continue;  // in-phase auto term, Eq. (2)
                    const double mag = std::abs(spec[tau]);
                    ++part.histogram[histogram_key(mag)];
                    ++part.count;
                    if (mag > part.max) part.max = mag;
                    if (mag >= part.max - 1e-9) part.candidates.emplace_back(i, j, tau, mag);
                }
            }
        }
    };

    const int threads = std::min(worker_count(), M);
    std::vector<Partial> parts(threads);
    if (threads <= 1) {
        scan_rows(0, M, parts[0]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            int lo = static_cast<int>(static_cast<long long>(M) * w / threads);
            int hi = static_cast<int>(static_cast<long long>(M) * (w + 1) / threads);
            pool.emplace_back(scan_rows, lo, hi, std::ref(parts[w]));
        }
        for (auto& t : pool) t.join();
    }

    CorrelationReport report;
    report.peak = static_cast<double>(K) * N;
    for (const auto& part : parts) {
        report.measured_max = std::max(report.measured_max, part.max);
        report.pair_count += part.count;
        for (const auto& [key, cnt] : part.histogram) report.histogram[key] += cnt;
    }
    for (const auto& part : parts)
        for (const auto& [i, j, tau, mag] : part.candidates)
            if (mag >= report.measured_max - 1e-9) report.argmax.emplace_back(i, j, tau);
    std::sort(report.argmax.begin(), report.argmax.end());
    return report;
}

CorrelationReport measure_theta_max(const SequenceFamily& fam, Engine engine) {
    return measure_theta_max(as_row_matrices(fam), engine);
}

QcssFamily as_row_matrices(const SequenceFamily& fam) {
    QcssFamily out;
    out.declared_vartheta_max = fam.declared_theta_max;
    out.name = fam.name;
    out.meta = fam.meta;
    out.members.reserve(fam.members.size());
    for (const auto& s : fam.members) {
        ComplementaryMatrix mat;
        mat.order = s.order;
        mat.flock = 1;
        mat.length = s.period();
        mat.exponents = s.exponents;
        out.members.push_back(std::move(mat));
    }
    return out;
}

}  // namespace qcss
