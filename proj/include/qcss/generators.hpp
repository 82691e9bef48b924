#pragma once

#include <string>
#include <vector>

#include "qcss/core.hpp"
#include "qcss/field.hpp"

namespace qcss {

/// Bijection on [0, N), used as the row relabeling rho.
struct Permutation {
    std::vector<int> mapping;
    std::string name = "custom";

    int size() const { return static_cast<int>(mapping.size()); }
    int operator()(int i) const { return mapping[i]; }
    void validate() const;

    static Permutation identity(int N);
    static Permutation reversal(int N);
};

/// Character-product family s_j(t) = chi_1(alpha^t) * phi_j(alpha^t), j in [0, q-2],
/// stored as exponents mod L = p(q-1). Declared theta_max = sqrt(q).
SequenceFamily gen_prop1_family(const FieldContext& ctx);

/// N x N matrices with entry (i, j) = xi_N^{(a*rho(i)+b)*j}, for a in [1, mu_min)
/// and b in [0, N); member index is b*(mu_min-1) + (a-1). Declared vartheta_max = N.
QcssFamily gen_thm41_family(int N, const Permutation& rho);

/// Same construction with the rho(i) = 0 row dropped; requires rho(0) = 0, K = N-1.
QcssFamily gen_thm42_family(int N, const Permutation& rho);

/// Full family with the deleted_row-th row (1-based) removed from every matrix.
QcssFamily gen_thm41_row_deleted(int N, const Permutation& rho, int deleted_row);

int smallest_prime_factor(long long N);

/// All y in [0, m) with a*y = b (mod m); gcd(a, m) solutions when it divides b.
std::vector<long long> solve_linear_congruence(long long a, long long b, long long m);

}  // namespace qcss
