#pragma once

#include <cstdint>
#include <vector>

#include "qcss/core.hpp"

namespace qcss {

/// GF(p^n) with a fixed modulus and primitive element, plus dlog and trace
/// tables. Elements are integers in [0, q) via base-p coefficient packing.
/// Immutable after build(); concurrent readers are fine.
class FieldContext {
public:
    static constexpr long long kDefaultCap = 1 << 20;

    static FieldContext build(int p, int n, long long cap = kDefaultCap);

    int p() const { return p_; }
    int n() const { return n_; }
    long long q() const { return q_; }
    // Monic modulus, low-degree first, n+1 coefficients.
    const std::vector<int>& modulus() const { return modulus_; }
    long long alpha() const { return alpha_; }

    long long alpha_pow(long long j) const;          // alpha^j, j taken mod q-1
    long long dlog(long long elem) const;            // inverse of alpha_pow; elem != 0
    int trace(long long elem) const { return trace_[check(elem)]; }

    long long add(long long a, long long b) const;   // base-p digitwise
    long long neg(long long a) const;
    long long mul(long long a, long long b) const;   // via dlog tables

private:
    long long check(long long elem) const;

    int p_ = 0, n_ = 0;
    long long q_ = 0;
    long long alpha_ = 0;
    std::vector<int> modulus_;
    std::vector<long long> alpha_pow_;   // size q-1
    std::vector<long long> dlog_;        // size q, dlog_[0] = -1
    std::vector<int> trace_;             // size q, values in [0, p)
};

/// Tr(a*x) as an exponent of xi_p; the additive character chi_a(x), Eq. form xi_p^Tr(ax).
int additive_char_exponent(const FieldContext& ctx, long long a, long long x);

/// (i * dlog(elem)) mod (q-1); the multiplicative character phi_i, elem must be nonzero.
long long multiplicative_char_exponent(const FieldContext& ctx, long long i, long long elem);

/// G(phi_i, chi_a) summed over the q-1 nonzero field elements.
Complex gauss_sum(const FieldContext& ctx, long long i, long long a);

}  // namespace qcss
