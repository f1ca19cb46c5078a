// Brute-force reference computations for the test suites. Everything here works on plain
// integers and is deliberately independent of the library's field, polynomial and
// elimination code.
#ifndef QCYC_TESTS_ORACLES_HPP
#define QCYC_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using IntVec = std::vector<int>;

// Polynomials over Z_p, low-degree-first, trailing zeros stripped.
inline IntVec trim(IntVec a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline IntVec poly_mul(const IntVec& a, const IntVec& b, int p) {
    if (a.empty() || b.empty()) return {};
    IntVec out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return trim(out);
}

// Remainder of a by a monic b.
inline IntVec poly_rem_monic(IntVec a, const IntVec& b, int p) {
    a = trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db && !a.empty()) {
        const int c = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
        a = trim(a);
    }
    return a;
}

// Integer index of a polynomial: sum c_i p^i, constant term least significant.
inline std::uint64_t index_of(const IntVec& a, int p) {
    std::uint64_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

inline IntVec monic_from_index(std::uint64_t idx, int degree, int p) {
    IntVec a(degree + 1, 0);
    for (int i = 0; i < degree; ++i) {
        a[i] = static_cast<int>(idx % p);
        idx /= p;
    }
    a[degree] = 1;
    return a;
}

inline std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// The set of indices of all reducible monic polynomials of the given degree: every product of
// two monic polynomials of positive degree.
inline std::set<std::uint64_t> reducible_monics(int degree, int p) {
    std::set<std::uint64_t> out;
    for (int a = 1; a < degree; ++a) {
        const int b = degree - a;
        if (a > b) break;
        for (std::uint64_t i = 0; i < ipow(p, a); ++i)
            for (std::uint64_t j = 0; j < ipow(p, b); ++j)
                out.insert(index_of(poly_mul(monic_from_index(i, a, p), monic_from_index(j, b, p), p), p) -
                           ipow(p, degree));
    }
    return out;
}

inline bool is_irreducible_by_products(const IntVec& f, int p) {
    const int d = static_cast<int>(f.size()) - 1;
    if (d < 1) return false;
    const auto red = reducible_monics(d, p);
    return !red.count(index_of(f, p) - ipow(p, d));
}

// Lowest-index monic irreducible of a degree over Z_p.
inline IntVec first_irreducible(int degree, int p) {
    const auto red = reducible_monics(degree, p);
    for (std::uint64_t i = 0;; ++i)
        if (!red.count(i)) return monic_from_index(i, degree, p);
}

// GF(2)[x]/(modulus) with elements as bit masks.
inline unsigned gf2_mul(unsigned a, unsigned b, unsigned modulus) {
    unsigned deg = 0;
    while ((modulus >> (deg + 1)) != 0) ++deg;
    unsigned r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> deg & 1) a ^= modulus;
    }
    return r;
}

// GF(4) = GF(2)[t]/(t^2+t+1): 0, 1, t = 2, t+1 = 3.
inline int gf4_add(int a, int b) { return a ^ b; }
inline int gf4_mul(int a, int b) { return static_cast<int>(gf2_mul(static_cast<unsigned>(a), static_cast<unsigned>(b), 0b111)); }

// Elements of GF(p^n) = Z_p[x]/(f) as length-n coefficient vectors.
inline IntVec ext_mul(const IntVec& a, const IntVec& b, const IntVec& f, int p) {
    const std::size_t n = f.size() - 1;
    IntVec r = poly_rem_monic(poly_mul(trim(a), trim(b), p), f, p);
    r.resize(n, 0);
    return r;
}

inline IntVec ext_pow(IntVec a, std::uint64_t e, const IntVec& f, int p) {
    IntVec r(f.size() - 1, 0);
    r[0] = 1;
    while (e--) r = ext_mul(r, a, f, p);
    return r;
}

// Order of a nonzero element by repeated multiplication.
inline std::uint64_t ext_order(const IntVec& a, const IntVec& f, int p) {
    IntVec one(f.size() - 1, 0);
    one[0] = 1;
    IntVec cur = a;
    std::uint64_t k = 1;
    while (cur != one) {
        cur = ext_mul(cur, a, f, p);
        ++k;
    }
    return k;
}

// Size of the Z_p-span of `rows` (all vectors of equal length), by closure.
inline std::uint64_t span_size(const std::vector<IntVec>& rows, std::size_t len, int p) {
    std::set<IntVec> span{IntVec(len, 0)};
    for (const auto& r : rows) {
        std::set<IntVec> next;
        for (const auto& v : span)
            for (int c = 0; c < p; ++c) {
                IntVec w(len);
                for (std::size_t i = 0; i < len; ++i) w[i] = (v[i] + c * r[i]) % p;
                next.insert(w);
            }
        span = std::move(next);
    }
    return span.size();
}

inline std::size_t rank_by_span(const std::vector<IntVec>& rows, std::size_t len, int p) {
    std::uint64_t size = span_size(rows, len, p);
    std::size_t r = 0;
    while (size > 1) {
        size /= static_cast<std::uint64_t>(p);
        ++r;
    }
    return r;
}

// Every vector of Z_p^len, constant coordinate fastest.
inline std::vector<IntVec> all_vectors(std::size_t len, int p) {
    std::vector<IntVec> out;
    IntVec v(len, 0);
    for (std::uint64_t i = 0; i < ipow(p, static_cast<int>(len)); ++i) {
        out.push_back(v);
        for (auto& c : v) {
            if (++c < p) break;
            c = 0;
        }
    }
    return out;
}

// <g> of length n over Z_p as {c : g divides c(x)}, sorted.
inline std::vector<IntVec> cyclic_code_by_divisibility(const IntVec& g, std::size_t n, int p) {
    std::vector<IntVec> out;
    for (const auto& c : all_vectors(n, p))
        if (poly_rem_monic(c, g, p).empty()) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t min_weight(const std::vector<IntVec>& words) {
    std::size_t best = SIZE_MAX;
    for (const auto& w : words) {
        const auto wt = static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](int c) { return c != 0; }));
        if (wt) best = std::min(best, wt);
    }
    return best;
}

}  // namespace oracle

#endif  // QCYC_TESTS_ORACLES_HPP
