#include "qcss/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcss {

namespace {

bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

using Poly = std::vector<int>;  // low-degree first, coefficients in [0, p)

int degree(const Poly& f) {
    for (int d = static_cast<int>(f.size()) - 1; d >= 0; --d)
        if (f[d] != 0) return d;
    return -1;
}

Poly poly_from_int(long long code, int p) {
    Poly f;
    while (code > 0) {
        f.push_back(static_cast<int>(code % p));
        code /= p;
    }
    return f;
}

long long poly_to_int(const Poly& f, int p) {
    long long code = 0;
    for (int d = degree(f); d >= 0; --d) code = code * p + f[d];
    return code;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    int da = degree(a), db = degree(b);
    if (da < 0 || db < 0) return {};
    Poly r(da + db + 1, 0);
    for (int i = 0; i <= da; ++i)
        for (int j = 0; j <= db; ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

// a mod m, m monic
Poly poly_mod(Poly a, const Poly& m, int p) {
    int dm = degree(m);
    for (int d = degree(a); d >= dm && d >= 0; d = degree(a)) {
        int c = a[d];
        if (c != 0) {
            for (int i = 0; i <= dm; ++i) {
                int idx = d - dm + i;
                a[idx] = ((a[idx] - c * m[i]) % p + p * p) % p;
            }
        } else {
            a[d] = 0;
        }
        a.resize(d);  // leading term eliminated
        if (a.empty()) break;
    }
    return a;
}

bool divides(const Poly& d, const Poly& f, int p) {
    return degree(poly_mod(f, d, p)) < 0;
}

// Trial division by every monic polynomial of degree 1..n/2.
bool is_irreducible(const Poly& f, int p) {
    int n = degree(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    for (int d = 1; 2 * d <= n; ++d) {
        long long lo = 1, hi = 1;
        for (int i = 0; i < d; ++i) lo *= p;
        hi = lo * p;
        for (long long code = lo; code < hi; ++code) {
            Poly g = poly_from_int(code, p);
            if (g.back() != 1) continue;  // monic only
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

std::vector<long long> prime_factors(long long v) {
    std::vector<long long> fs;
    for (long long d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            fs.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) fs.push_back(v);
    return fs;
}

}  // namespace

FieldContext FieldContext::build(int p, int n, long long cap) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (n < 1) throw std::invalid_argument("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > cap) throw std::invalid_argument("q = p^n exceeds the field-size cap");
    }

    FieldContext ctx;
    ctx.p_ = p;
    ctx.n_ = n;
    ctx.q_ = q;

    // Scan monic degree-n polynomials in increasing base-p encoding; take the
    // first irreducible one whose residue class of x is primitive.
    long long lead = q;  // coefficient vector encoding of x^n
    for (long long code = lead; code < 2 * lead; ++code) {
        Poly m = poly_from_int(code, p);
        if (!is_irreducible(m, p)) continue;

        Poly x_class = poly_mod(Poly{0, 1}, m, p);
        long long alpha = poly_to_int(x_class, p);
        if (alpha == 0) continue;

        // Enumerate alpha^j; primitivity shows up as q-1 distinct powers.
        std::vector<long long> pows;
        std::vector<long long> dlog(q, -1);
        Poly cur = {1};
        bool primitive = true;
        for (long long j = 0; j < q - 1; ++j) {
            long long v = poly_to_int(cur, p);
            if (v == 0 || dlog[v] != -1) { primitive = false; break; }
            dlog[v] = j;
            pows.push_back(v);
            cur = poly_mod(poly_mul(cur, x_class, p), m, p);
        }
        if (!primitive || poly_to_int(cur, p) != 1) continue;

        ctx.modulus_ = m;
        ctx.alpha_ = alpha;
        ctx.alpha_pow_ = std::move(pows);
        ctx.dlog_ = std::move(dlog);

        // Trace table: Tr(x) = x + x^p + ... + x^{p^(n-1)}, a base-field constant.
        ctx.trace_.assign(q, 0);
        for (long long v = 1; v < q; ++v) {
            long long acc = 0;
            long long e = ctx.dlog_[v];
            long long pk = 1;
            for (int k = 0; k < n; ++k) {
                acc = ctx.add(acc, ctx.alpha_pow_[(e * pk) % (q - 1)]);
                pk *= p;
            }
            if (acc >= p) throw std::logic_error("trace landed outside the prime subfield");
            ctx.trace_[v] = static_cast<int>(acc);
        }
        return ctx;
    }
    throw std::logic_error("no irreducible modulus with primitive x found");
}

long long FieldContext::check(long long elem) const {
    if (elem < 0 || elem >= q_) throw std::invalid_argument("invalid field element");
    return elem;
}

long long FieldContext::alpha_pow(long long j) const {
    long long m = q_ - 1;
    if (m == 1) return 1;
    j %= m;
    if (j < 0) j += m;
    return alpha_pow_[j];
}

long long FieldContext::dlog(long long elem) const {
    if (check(elem) == 0) throw std::invalid_argument("dlog undefined at 0");
    return dlog_[elem];
}

long long FieldContext::add(long long a, long long b) const {
    check(a); check(b);
    long long r = 0, mult = 1;
    while (a > 0 || b > 0) {
        r += mult * ((a % p_ + b % p_) % p_);
        a /= p_; b /= p_;
        mult *= p_;
    }
    return r;
}

long long FieldContext::neg(long long a) const {
    check(a);
    long long r = 0, mult = 1;
    while (a > 0) {
        r += mult * ((p_ - a % p_) % p_);
        a /= p_;
        mult *= p_;
    }
    return r;
}

long long FieldContext::mul(long long a, long long b) const {
    check(a); check(b);
    if (a == 0 || b == 0) return 0;
    if (q_ == 2) return 1;
    return alpha_pow_[(dlog_[a] + dlog_[b]) % (q_ - 1)];
}

int additive_char_exponent(const FieldContext& ctx, long long a, long long x) {
    return ctx.trace(ctx.mul(a, x));
}

long long multiplicative_char_exponent(const FieldContext& ctx, long long i, long long elem) {
    long long m = ctx.q() - 1;
    if (m == 1) return 0;
    long long ii = i % m;
    if (ii < 0) ii += m;
    return (ii * ctx.dlog(elem)) % m;
}

Complex gauss_sum(const FieldContext& ctx, long long i, long long a) {
    const long long q = ctx.q();
    Complex sum = 0.0;
    for (long long j = 0; j < q - 1; ++j) {
        long long x = ctx.alpha_pow(j);
        long long me = multiplicative_char_exponent(ctx, i, x);
        int ae = additive_char_exponent(ctx, a, x);
        // xi_{q-1}^me * xi_p^ae over the common order p(q-1)
        sum += unit_phase((q - 1) * ctx.p(),
                          me * ctx.p() + static_cast<long long>(ae) * (q - 1));
    }
    return sum;
}

}  // namespace qcss
