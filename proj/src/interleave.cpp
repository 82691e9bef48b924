#include "qcss/interleave.hpp"

#include <stdexcept>

namespace qcss {

ComplementaryMatrix interleave(const PhaseExponentSequence& seq, int K) {
    const int n = seq.period();
    if (K <= 1) throw std::invalid_argument("flock size must be > 1");
    if (n % K != 0) throw std::invalid_argument("flock size must divide the period");
    const int N = n / K;
    if (N <= 1) throw std::invalid_argument("resulting length must be > 1");

    ComplementaryMatrix mat;
    mat.order = seq.order;
    mat.flock = K;
    mat.length = N;
    mat.exponents.resize(n);
    for (int k = 0; k < K; ++k)
        for (int t = 0; t < N; ++t) mat.at(k, t) = seq.exponents[k + K * t];
    return mat;
}

PhaseExponentSequence flatten(const ComplementaryMatrix& mat) {
    PhaseExponentSequence seq;
    seq.order = mat.order;
    seq.exponents.resize(static_cast<size_t>(mat.flock) * mat.length);
    for (int k = 0; k < mat.flock; ++k)
        for (int t = 0; t < mat.length; ++t) seq.exponents[k + mat.flock * t] = mat.at(k, t);
    return seq;
}

QcssFamily interleave_family(const SequenceFamily& fam, int K) {
    QcssFamily out;
    out.declared_vartheta_max = fam.declared_theta_max;
    out.name = fam.name + " interleaved K=" + std::to_string(K);
    out.meta = fam.meta;
    for (auto& [key, value] : out.meta)
        if (key == "kind") value += "-interleaved";
    out.members.reserve(fam.members.size());
    for (const auto& s : fam.members) out.members.push_back(interleave(s, K));
    return out;
}

}  // namespace qcss
