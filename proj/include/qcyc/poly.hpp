#ifndef QCYC_POLY_HPP
#define QCYC_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <utility>

#include "qcyc/base_field.hpp"

namespace qcyc {

/// Univariate polynomial over GF(q), low-degree-first. Always normalized: no trailing zero
/// coefficients, so the zero polynomial has an empty coefficient vector.
class Poly {
   public:
    Poly() = default;
    explicit Poly(ScalarVec coeffs);

    static Poly constant(Scalar c) { return Poly(ScalarVec{c}); }
    static Poly monomial(Scalar c, std::size_t degree);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Scalar coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Scalar{}; }
    Scalar leading() const noexcept { return coeffs_.empty() ? Scalar{} : coeffs_.back(); }
    const ScalarVec& coeffs() const noexcept { return coeffs_; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().code == 1; }

    friend bool operator==(const Poly&, const Poly&) = default;

   private:
    ScalarVec coeffs_;
};

namespace poly {

struct DivMod {
    Poly quotient;
    Poly remainder;
};

Poly add(const BaseField& f, const Poly& a, const Poly& b);
Poly sub(const BaseField& f, const Poly& a, const Poly& b);
Poly scale(const BaseField& f, Scalar c, const Poly& a);
Poly mul(const BaseField& f, const Poly& a, const Poly& b);
/// Throws std::domain_error when b is zero.
DivMod divmod(const BaseField& f, const Poly& a, const Poly& b);
Poly mod(const BaseField& f, const Poly& a, const Poly& b);
bool divides(const BaseField& f, const Poly& d, const Poly& a);
Poly make_monic(const BaseField& f, const Poly& a);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const BaseField& f, const Poly& a, const Poly& b);

/// Bezout data: s*a + t*b = g with g the monic gcd.
struct Bezout {
    Poly g;
    Poly s;
    Poly t;
};
Bezout extended_gcd(const BaseField& f, const Poly& a, const Poly& b);

/// x^n - 1.
Poly x_pow_minus_one(const BaseField& f, std::size_t n);
/// a mod (x^n - 1), as a length-n coefficient vector (exponents folded mod n).
ScalarVec fold_cyclic(const BaseField& f, const Poly& a, std::size_t n);

/// Number of monic polynomials of the given degree (q^degree), or 0 when that overflows.
std::uint64_t monic_count(const BaseField& f, std::size_t degree) noexcept;
/// The index-th monic polynomial of the given degree; lower coefficients are the base-q digits
/// of index, constant term fastest.
Poly monic_from_index(const BaseField& f, std::size_t degree, std::uint64_t index);

/// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const BaseField& f, const Poly& a);
/// First monic irreducible of the given degree in monic_from_index order.
Poly find_irreducible(const BaseField& f, std::size_t degree);

}  // namespace poly
}  // namespace qcyc

#endif  // QCYC_POLY_HPP
