#ifndef QCYC_NORMAL_BASIS_HPP
#define QCYC_NORMAL_BASIS_HPP

#include <cstddef>
#include <span>

#include "qcyc/field.hpp"
#include "qcyc/matrix.hpp"

namespace qcyc {

/// n x n matrix over GF(q) whose column i holds the power-basis coordinates of a^(q^i).
GFqMatrix conjugate_matrix(const TowerPtr& tower, const Element& a);

/// True iff a, a^q, ..., a^(q^(n-1)) are linearly independent over GF(q).
bool is_normal(const TowerPtr& tower, const Element& a);

/// A normal basis {alpha^(q^i)} of GF(q^n) over GF(q) together with the change-of-basis
/// matrices to and from the power basis.
class NormalBasis {
   public:
    /// Throws std::invalid_argument if alpha is not normal.
    NormalBasis(TowerPtr tower, Element alpha);

    const TowerPtr& tower() const noexcept { return tower_; }
    const Element& element() const noexcept { return alpha_; }
    /// Column i = alpha^(q^i) in power-basis coordinates.
    const GFqMatrix& basis_matrix() const noexcept { return basis_; }
    const GFqMatrix& inverse_matrix() const noexcept { return inverse_; }

    /// The unique (x_0, ..., x_{n-1}) with x = sum x_i alpha^(q^i).
    ScalarVec coords(const Element& x) const;
    /// sum v_i alpha^(q^i).
    Element from_coords(std::span<const Scalar> v) const;

   private:
    TowerPtr tower_;
    Element alpha_;
    GFqMatrix basis_;
    GFqMatrix inverse_;
};

/// The (skip+1)-th normal element of GF(q^n) in elements() order. skip = 0 is the canonical
/// normal basis used throughout.
NormalBasis find_normal(const TowerPtr& tower, std::size_t skip = 0);

}  // namespace qcyc

#endif  // QCYC_NORMAL_BASIS_HPP
