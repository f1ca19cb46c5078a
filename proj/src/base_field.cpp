#include "qcyc/base_field.hpp"

#include <stdexcept>
#include <string>

#include "qcyc/poly.hpp"

namespace qcyc {

bool is_prime(std::uint64_t v) noexcept {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

namespace {

// Product of two GF(q) elements by schoolbook multiplication of their digit vectors modulo
// `modulus`. Only used while building the log tables.
std::uint32_t slow_mul(std::uint32_t p, const std::vector<std::uint32_t>& modulus, std::uint32_t a,
                       std::uint32_t b) {
    const std::size_t m = modulus.size() - 1;
    std::vector<std::uint64_t> da(m), db(m), prod(2 * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        da[i] = a % p;
        a /= p;
        db[i] = b % p;
        b /= p;
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (std::size_t d = 2 * m - 1; d >= m; --d) {
        const std::uint64_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (std::size_t i = 0; i < m; ++i) prod[d - m + i] = (prod[d - m + i] + (p - c) * modulus[i]) % p;
    }
    std::uint32_t out = 0;
    for (std::size_t i = m; i-- > 0;) out = out * p + static_cast<std::uint32_t>(prod[i]);
    return out;
}

}  // namespace

BaseField::BaseField(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw std::invalid_argument(std::to_string(p_) + " is not prime");
    if (modulus_.size() < 2 || modulus_.back() != 1)
        throw std::invalid_argument("base modulus must be monic of degree >= 1");
    m_ = static_cast<std::uint32_t>(modulus_.size() - 1);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        q *= p_;
        if (q > kMaxOrder) throw std::invalid_argument("GF(p^m) larger than 2^16 is not supported");
    }
    q_ = static_cast<std::uint32_t>(q);
    for (auto c : modulus_)
        if (c >= p_) throw std::invalid_argument("base modulus coefficient out of range");

    if (m_ > 1) {
        const BaseField gfp = prime(p_);
        ScalarVec coeffs;
        for (auto c : modulus_) coeffs.push_back(Scalar{c});
        if (!poly::is_irreducible(gfp, Poly(std::move(coeffs))))
            throw std::invalid_argument("base modulus is not irreducible over GF(p)");
    }

    // Find a generator of GF(q)^*: the first element whose order is exactly q - 1.
    std::vector<std::uint64_t> factors;
    {
        std::uint64_t v = q_ - 1;
        for (std::uint64_t d = 2; d * d <= v; ++d) {
            if (v % d) continue;
            factors.push_back(d);
            while (v % d == 0) v /= d;
        }
        if (v > 1) factors.push_back(v);
    }
    const auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = slow_mul(p_, modulus_, r, a);
            a = slow_mul(p_, modulus_, a, a);
            e >>= 1;
        }
        return r;
    };
    std::uint32_t gen = 1;
    for (std::uint32_t cand = 1; cand < q_; ++cand) {
        bool ok = slow_pow(cand, q_ - 1) == 1;
        for (auto f : factors) ok = ok && slow_pow(cand, (q_ - 1) / f) != 1;
        if (ok) {
            gen = cand;
            break;
        }
    }

    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = exp_[i + q_ - 1] = cur;
        log_[cur] = i;
        cur = slow_mul(p_, modulus_, cur, gen);
    }
}

BaseField BaseField::prime(std::uint32_t p) { return BaseField(p, {0, 1}); }

Scalar BaseField::from_integer(std::int64_t k) const noexcept {
    const std::int64_t r = k % static_cast<std::int64_t>(p_);
    return Scalar{static_cast<std::uint32_t>(r < 0 ? r + p_ : r)};
}

Scalar BaseField::add_digits(Scalar a, Scalar b) const noexcept {
    std::uint32_t out = 0, place = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((a.code % p_ + b.code % p_) % p_) * place;
        a.code /= p_;
        b.code /= p_;
        place *= p_;
    }
    return Scalar{out};
}

Scalar BaseField::neg(Scalar a) const noexcept {
    if (p_ == 2) return a;
    if (m_ == 1) return Scalar{(p_ - a.code) % p_};
    std::uint32_t out = 0, place = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((p_ - a.code % p_) % p_) * place;
        a.code /= p_;
        place *= p_;
    }
    return Scalar{out};
}

Scalar BaseField::sub(Scalar a, Scalar b) const noexcept { return add(a, neg(b)); }

Scalar BaseField::inv(Scalar a) const {
    if (a.code == 0) throw std::domain_error("inverse of zero in GF(q)");
    return Scalar{exp_[(q_ - 1 - log_[a.code]) % (q_ - 1)]};
}

Scalar BaseField::pow(Scalar a, std::uint64_t e) const noexcept {
    if (e == 0) return one();
    if (a.code == 0) return zero();
    return Scalar{exp_[static_cast<std::uint32_t>((log_[a.code] * (e % (q_ - 1))) % (q_ - 1))]};
}

std::vector<std::uint32_t> BaseField::digits(Scalar a) const {
    std::vector<std::uint32_t> out(m_);
    for (auto& d : out) {
        d = a.code % p_;
        a.code /= p_;
    }
    return out;
}

Scalar BaseField::from_digits(std::span<const std::uint32_t> digits) const {
    if (digits.size() != m_) throw std::invalid_argument("digit vector length must equal m");
    std::uint32_t out = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= p_) throw std::invalid_argument("digit out of range");
        out = out * p_ + digits[i];
    }
    return Scalar{out};
}

}  // namespace qcyc
