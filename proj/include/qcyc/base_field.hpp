#ifndef QCYC_BASE_FIELD_HPP
#define QCYC_BASE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace qcyc {

/// Element of the scalar field GF(q) = GF(p^m).
///
/// `code` packs the coefficient vector over GF(p) as base-p digits, constant term least
/// significant: over GF(9) = GF(3)[t]/(t^2+1), code 5 = 2 + 1*3 is the element 2 + t.
/// The integers 0..p-1 are the embedded prime field.
struct Scalar {
    std::uint32_t code = 0;

    friend constexpr auto operator<=>(const Scalar&, const Scalar&) = default;
};

using ScalarVec = std::vector<Scalar>;

/// GF(q) = GF(p)[t]/(modulus). Multiplication and inversion run off exp/log tables built at
/// construction, so q is limited to kMaxOrder.
class BaseField {
   public:
    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    /// `modulus` is monic, low-degree-first, with integer coefficients in [0, p). Throws
    /// std::invalid_argument if p is not prime, the modulus is not monic irreducible, or
    /// p^deg exceeds kMaxOrder.
    BaseField(std::uint32_t p, std::vector<std::uint32_t> modulus);

    /// GF(p) itself, with the degree-1 modulus x.
    static BaseField prime(std::uint32_t p);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return m_; }
    std::uint32_t order() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    bool contains(Scalar a) const noexcept { return a.code < q_; }

    Scalar zero() const noexcept { return Scalar{0}; }
    Scalar one() const noexcept { return Scalar{1}; }
    /// Image of the integer k under Z -> GF(p) -> GF(q).
    Scalar from_integer(std::int64_t k) const noexcept;

    Scalar add(Scalar a, Scalar b) const noexcept {
        if (p_ == 2) return Scalar{a.code ^ b.code};
        if (m_ == 1) return Scalar{(a.code + b.code) % p_};
        return add_digits(a, b);
    }
    Scalar sub(Scalar a, Scalar b) const noexcept;
    Scalar neg(Scalar a) const noexcept;
    Scalar mul(Scalar a, Scalar b) const noexcept {
        if (a.code == 0 || b.code == 0) return Scalar{0};
        return Scalar{exp_[log_[a.code] + log_[b.code]]};
    }
    /// Throws std::domain_error on a == 0.
    Scalar inv(Scalar a) const;
    Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
    Scalar pow(Scalar a, std::uint64_t e) const noexcept;

    /// Coefficient vector over GF(p), length m.
    std::vector<std::uint32_t> digits(Scalar a) const;
    Scalar from_digits(std::span<const std::uint32_t> digits) const;

    /// The generator of GF(q)^* the log tables are built on.
    Scalar primitive() const noexcept { return Scalar{exp_[1]}; }

    friend bool operator==(const BaseField& a, const BaseField& b) noexcept {
        return a.p_ == b.p_ && a.modulus_ == b.modulus_;
    }

   private:
    Scalar add_digits(Scalar a, Scalar b) const noexcept;

    std::uint32_t p_;
    std::uint32_t m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;  // length 2(q-1), so exp_[log a + log b] needs no reduction
    std::vector<std::uint32_t> log_;  // log_[0] unused
};

bool is_prime(std::uint64_t v) noexcept;

}  // namespace qcyc

#endif  // QCYC_BASE_FIELD_HPP
