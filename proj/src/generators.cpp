#include "qcss/generators.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qcss {

void Permutation::validate() const {
    std::vector<char> seen(mapping.size(), 0);
    for (int v : mapping) {
        if (v < 0 || v >= size() || seen[v]) throw std::invalid_argument("mapping is not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int N) {
    Permutation rho;
    rho.mapping.resize(N);
    std::iota(rho.mapping.begin(), rho.mapping.end(), 0);
    rho.name = "identity";
    return rho;
}

Permutation Permutation::reversal(int N) {
    Permutation rho;
    rho.mapping.resize(N);
    for (int i = 0; i < N; ++i) rho.mapping[i] = N - 1 - i;
    rho.name = "reversal";
    return rho;
}

SequenceFamily gen_prop1_family(const FieldContext& ctx) {
    const long long q = ctx.q();
    if (q < 4) throw std::invalid_argument("prop1 family requires q >= 4");
    const int p = ctx.p();
    const long long m = q - 1;
    const long long L = p * m;  // gcd(p, q-1) = 1 always

    SequenceFamily fam;
    fam.declared_theta_max = std::sqrt(static_cast<double>(q));
    fam.name = "prop1 q=" + std::to_string(q);
    fam.meta = {{"kind", "prop1"},
                {"p", std::to_string(p)},
                {"n", std::to_string(ctx.n())},
                {"q", std::to_string(q)}};
    fam.members.reserve(m);
    for (long long j = 0; j < m; ++j) {
        PhaseExponentSequence s;
        s.order = static_cast<int>(L);
        s.exponents.resize(m);
        for (long long t = 0; t < m; ++t) {
            long long add_e = ctx.trace(ctx.alpha_pow(t));         // exponent of xi_p
            long long mult_e = (j * t) % m;                        // exponent of xi_{q-1}
            s.exponents[t] = static_cast<int>((add_e * m + mult_e * p) % L);
        }
        fam.members.push_back(std::move(s));
    }
    return fam;
}

namespace {

QcssFamily thm41_core(int N, const Permutation& rho) {
    if (N <= 1 || N % 2 == 0) throw std::invalid_argument("N must be odd and > 1");
    if (rho.size() != N) throw std::invalid_argument("rho must act on [0, N)");
    rho.validate();
    const int mu = smallest_prime_factor(N);

    QcssFamily fam;
    fam.declared_vartheta_max = static_cast<double>(N);
    fam.members.reserve(static_cast<size_t>(mu - 1) * N);
    for (int b = 0; b < N; ++b) {
        for (int a = 1; a < mu; ++a) {
            ComplementaryMatrix mat;
            mat.order = N;
            mat.flock = N;
            mat.length = N;
            mat.exponents.resize(static_cast<size_t>(N) * N);
            for (int i = 0; i < N; ++i) {
                const long long base = (static_cast<long long>(a) * rho(i) + b) % N;
                for (int j = 0; j < N; ++j) mat.at(i, j) = static_cast<int>(base * j % N);
            }
            fam.members.push_back(std::move(mat));
        }
    }
    return fam;
}

void delete_row(QcssFamily& fam, int row) {  // 0-based
    for (auto& mat : fam.members) {
        mat.exponents.erase(mat.exponents.begin() + static_cast<long>(row) * mat.length,
                            mat.exponents.begin() + static_cast<long>(row + 1) * mat.length);
        mat.flock -= 1;
    }
}

}  // namespace

QcssFamily gen_thm41_family(int N, const Permutation& rho) {
    QcssFamily fam = thm41_core(N, rho);
    fam.name = "thm41 N=" + std::to_string(N);
    fam.meta = {{"kind", "thm41"}, {"rho", rho.name}};
    return fam;
}

QcssFamily gen_thm42_family(int N, const Permutation& rho) {
    if (!rho.mapping.empty() && rho(0) != 0) throw std::invalid_argument("thm42 requires rho(0) = 0");
    QcssFamily fam = thm41_core(N, rho);
    delete_row(fam, 0);  // rho(0) = 0, so row 0 is the rho-zero row
    fam.name = "thm42 N=" + std::to_string(N);
    fam.meta = {{"kind", "thm42"}, {"rho", rho.name}};
    return fam;
}

QcssFamily gen_thm41_row_deleted(int N, const Permutation& rho, int deleted_row) {
    if (deleted_row < 1 || deleted_row > N) throw std::invalid_argument("deleted_row must be in [1, N]");
    QcssFamily fam = thm41_core(N, rho);
    delete_row(fam, deleted_row - 1);
    fam.name = "thm41-del N=" + std::to_string(N) + " row=" + std::to_string(deleted_row);
    fam.meta = {{"kind", "thm41-del"}, {"rho", rho.name}, {"row", std::to_string(deleted_row)}};
    return fam;
}

int smallest_prime_factor(long long N) {
    if (N <= 1) throw std::invalid_argument("N must be > 1");
    for (long long d = 2; d * d <= N; ++d)
        if (N % d == 0) return static_cast<int>(d);
    return static_cast<int>(N);
}

std::vector<long long> solve_linear_congruence(long long a, long long b, long long m) {
    if (m <= 1) throw std::invalid_argument("modulus must be > 1");
    a = ((a % m) + m) % m;
    b = ((b % m) + m) % m;
    const long long g = std::gcd(a, m);
    if (b % g != 0) return {};
    std::vector<long long> sols;
    for (long long y = 0; y < m; ++y)
        if (a * y % m == b) sols.push_back(y);
    return sols;
}

}  // namespace qcss
