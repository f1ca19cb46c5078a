#include "qcyc/normal_basis.hpp"

#include <stdexcept>

namespace qcyc {

GFqMatrix conjugate_matrix(const TowerPtr& tower, const Element& a) {
    const std::size_t n = tower->n();
    ScalarVec e(n * n);
    Element conj = a;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t row = 0; row < n; ++row) e[row * n + i] = conj.coeffs[row];
        conj = tower->frobenius(conj, 1);
    }
    return GFqMatrix(FieldTower::base_ptr(tower), n, n, std::move(e));
}

bool is_normal(const TowerPtr& tower, const Element& a) { return rank(conjugate_matrix(tower, a)) == tower->n(); }

NormalBasis::NormalBasis(TowerPtr tower, Element alpha)
    : tower_(std::move(tower)),
      alpha_(std::move(alpha)),
      basis_(conjugate_matrix(tower_, alpha_)),
      inverse_(basis_) {
    if (rank(basis_) != tower_->n()) throw std::invalid_argument("element is not normal");
    inverse_ = inverse(basis_);
}

ScalarVec NormalBasis::coords(const Element& x) const {
    if (!tower_->contains(x)) throw std::invalid_argument("element does not belong to this GF(q^n)");
    return mat_vec(inverse_, x.coeffs);
}

Element NormalBasis::from_coords(std::span<const Scalar> v) const {
    if (v.size() != tower_->n()) throw std::invalid_argument("coordinate vector length must equal n");
    return Element{mat_vec(basis_, v)};
}

NormalBasis find_normal(const TowerPtr& tower, std::size_t skip) {
    for (const Element& cand : tower->elements()) {
        if (!is_normal(tower, cand)) continue;
        if (skip-- == 0) return NormalBasis(tower, cand);
    }
    throw std::out_of_range("fewer normal elements than requested");
}

}  // namespace qcyc
