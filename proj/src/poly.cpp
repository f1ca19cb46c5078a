#include "qcyc/poly.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qcyc {

Poly::Poly(ScalarVec coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().code == 0) coeffs_.pop_back();
}

Poly Poly::monomial(Scalar c, std::size_t degree) {
    ScalarVec v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

namespace poly {

Poly add(const BaseField& f, const Poly& a, const Poly& b) {
    ScalarVec out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly(std::move(out));
}

Poly sub(const BaseField& f, const Poly& a, const Poly& b) {
    ScalarVec out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
    return Poly(std::move(out));
}

Poly scale(const BaseField& f, Scalar c, const Poly& a) {
    ScalarVec out(a.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(c, a.coeff(i));
    return Poly(std::move(out));
}

Poly mul(const BaseField& f, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ScalarVec out(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeff(i).code == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a.coeff(i), b.coeff(j)));
    }
    return Poly(std::move(out));
}

DivMod divmod(const BaseField& f, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    ScalarVec rem = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    ScalarVec quot(rem.size() - db);
    const Scalar lead_inv = f.inv(b.leading());
    for (std::size_t d = rem.size(); d-- > db;) {
        const Scalar c = f.mul(rem[d], lead_inv);
        quot[d - db] = c;
        if (c.code == 0) continue;
        for (std::size_t i = 0; i <= db; ++i) rem[d - db + i] = f.sub(rem[d - db + i], f.mul(c, b.coeff(i)));
    }
    rem.resize(db);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly mod(const BaseField& f, const Poly& a, const Poly& b) { return divmod(f, a, b).remainder; }

bool divides(const BaseField& f, const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return mod(f, a, d).is_zero();
}

Poly make_monic(const BaseField& f, const Poly& a) {
    if (a.is_zero()) return a;
    return scale(f, f.inv(a.leading()), a);
}

Poly gcd(const BaseField& f, const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = mod(f, x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(f, x);
}

Bezout extended_gcd(const BaseField& f, const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(f.one()), s1;
    Poly t0, t1 = Poly::constant(f.one());
    while (!r1.is_zero()) {
        auto [quot, rem] = divmod(f, r0, r1);
        r0 = std::exchange(r1, std::move(rem));
        s0 = std::exchange(s1, sub(f, s0, mul(f, quot, s1)));
        t0 = std::exchange(t1, sub(f, t0, mul(f, quot, t1)));
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Scalar c = f.inv(r0.leading());
    return {scale(f, c, r0), scale(f, c, s0), scale(f, c, t0)};
}

Poly x_pow_minus_one(const BaseField& f, std::size_t n) {
    ScalarVec v(n + 1);
    v[0] = f.neg(f.one());
    v[n] = f.add(v[n], f.one());
    return Poly(std::move(v));
}

ScalarVec fold_cyclic(const BaseField& f, const Poly& a, std::size_t n) {
    if (n == 0) throw std::invalid_argument("cyclic length must be positive");
    ScalarVec out(n);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) out[i % n] = f.add(out[i % n], a.coeff(i));
    return out;
}

std::uint64_t monic_count(const BaseField& f, std::size_t degree) noexcept {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < degree; ++i) {
        if (c > std::numeric_limits<std::uint64_t>::max() / f.order()) return 0;
        c *= f.order();
    }
    return c;
}

Poly monic_from_index(const BaseField& f, std::size_t degree, std::uint64_t index) {
    ScalarVec v(degree + 1);
    for (std::size_t i = 0; i < degree; ++i) {
        v[i] = Scalar{static_cast<std::uint32_t>(index % f.order())};
        index /= f.order();
    }
    if (index != 0) throw std::out_of_range("monic polynomial index out of range");
    v[degree] = f.one();
    return Poly(std::move(v));
}

bool is_irreducible(const BaseField& f, const Poly& a) {
    const int deg = a.degree();
    if (deg < 1) return false;
    for (int d = 1; 2 * d <= deg; ++d) {
        const std::uint64_t count = monic_count(f, static_cast<std::size_t>(d));
        for (std::uint64_t i = 0; i < count; ++i)
            if (divides(f, monic_from_index(f, static_cast<std::size_t>(d), i), a)) return false;
    }
    return true;
}

Poly find_irreducible(const BaseField& f, std::size_t degree) {
    if (degree == 0) throw std::invalid_argument("irreducible polynomials have degree >= 1");
    const std::uint64_t count = monic_count(f, degree);
    if (count == 0) throw std::overflow_error("degree too large for an exhaustive irreducibility scan");
    for (std::uint64_t i = 0; i < count; ++i) {
        Poly cand = monic_from_index(f, degree, i);
        if (is_irreducible(f, cand)) return cand;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace poly
}  // namespace qcyc
