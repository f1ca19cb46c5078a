#ifndef QCYC_QPOLY_HPP
#define QCYC_QPOLY_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcyc/field.hpp"
#include "qcyc/matrix.hpp"
#include "qcyc/normal_basis.hpp"

namespace qcyc {

/// l(x) = sum_{i<n} l_i x^(q^i) with every l_i in GF(q): a GF(q)-linear map on GF(q^n).
class QPolynomial {
   public:
    /// Shorter coefficient vectors are zero-padded to n; longer ones throw.
    QPolynomial(TowerPtr tower, ScalarVec coeffs);

    const TowerPtr& tower() const noexcept { return tower_; }
    const ScalarVec& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept;

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
        return a.tower_ == b.tower_ && a.coeffs_ == b.coeffs_;
    }

   private:
    TowerPtr tower_;
    ScalarVec coeffs_;
};

/// sum l_i y^(q^i).
Element evaluate(const QPolynomial& ell, const Element& y);

/// Matrix of y -> l(y) in normal coordinates: column j = coords(l(beta^(q^j))).
GFqMatrix linear_map_matrix(const QPolynomial& ell, const NormalBasis& basis);

/// Basis of Im(l) in normal coordinates (reduced echelon rows).
std::vector<ScalarVec> image_basis(const QPolynomial& ell, const NormalBasis& basis);
std::size_t kernel_dimension(const QPolynomial& ell, const NormalBasis& basis);

/// c_i = sum_j l_j y_{(i-j) mod n}: evaluation carried out entirely on normal coordinates.
/// Frobenius shifts normal coordinates cyclically, so this equals
/// coords(evaluate(l, from_coords(y))) for every normal basis.
ScalarVec evaluate_in_coords(const QPolynomial& ell, std::span<const Scalar> y);

/// "qpoly:" followed by the coefficient list.
std::string format_qpoly(const QPolynomial& ell);
QPolynomial parse_qpoly(const TowerPtr& tower, std::string_view s);

}  // namespace qcyc

#endif  // QCYC_QPOLY_HPP
