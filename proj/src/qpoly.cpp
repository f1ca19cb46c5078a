#include "qcyc/qpoly.hpp"

#include <stdexcept>

#include "qcyc/error.hpp"
#include "qcyc/text.hpp"

namespace qcyc {

QPolynomial::QPolynomial(TowerPtr tower, ScalarVec coeffs) : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {
    const std::size_t n = tower_->n();
    if (coeffs_.size() > n) throw std::invalid_argument("q-polynomial has more than n coefficients");
    coeffs_.resize(n);
    for (auto c : coeffs_)
        if (!tower_->base().contains(c)) throw std::invalid_argument("q-polynomial coefficient outside GF(q)");
}

bool QPolynomial::is_zero() const noexcept {
    for (auto c : coeffs_)
        if (c.code != 0) return false;
    return true;
}

Element evaluate(const QPolynomial& ell, const Element& y) {
    const FieldTower& t = *ell.tower();
    Element acc = t.zero();
    Element conj = y;
    for (std::size_t i = 0; i < t.n(); ++i) {
        if (ell.coeffs()[i].code != 0) acc = t.add(acc, t.scale(ell.coeffs()[i], conj));
        if (i + 1 < t.n()) conj = t.frobenius(conj, 1);
    }
    return acc;
}

GFqMatrix linear_map_matrix(const QPolynomial& ell, const NormalBasis& basis) {
    if (basis.tower() != ell.tower()) throw std::invalid_argument("normal basis belongs to a different tower");
    const FieldTower& t = *ell.tower();
    const std::size_t n = t.n();
    ScalarVec e(n * n);
    ScalarVec unit(n);
    for (std::size_t j = 0; j < n; ++j) {
        unit.assign(n, Scalar{});
        unit[j] = t.base().one();
        const ScalarVec col = basis.coords(evaluate(ell, basis.from_coords(unit)));
        for (std::size_t i = 0; i < n; ++i) e[i * n + j] = col[i];
    }
    return GFqMatrix(FieldTower::base_ptr(ell.tower()), n, n, std::move(e));
}

std::vector<ScalarVec> image_basis(const QPolynomial& ell, const NormalBasis& basis) {
    return row_basis(linear_map_matrix(ell, basis).transpose()).row_vectors();
}

std::size_t kernel_dimension(const QPolynomial& ell, const NormalBasis& basis) {
    return nullspace(linear_map_matrix(ell, basis)).size();
}

ScalarVec evaluate_in_coords(const QPolynomial& ell, std::span<const Scalar> y) {
    const BaseField& f = ell.tower()->base();
    const std::size_t n = ell.tower()->n();
    if (y.size() != n) throw std::invalid_argument("coordinate vector length must equal n");
    ScalarVec c(n);
    for (std::size_t i = 0; i < n; ++i) {
        Scalar acc{};
        for (std::size_t j = 0; j < n; ++j) acc = f.add(acc, f.mul(ell.coeffs()[j], y[(i + n - j) % n]));
        c[i] = acc;
    }
    return c;
}

std::string format_qpoly(const QPolynomial& ell) { return "qpoly:" + text::format_scalars(ell.coeffs()); }

QPolynomial parse_qpoly(const TowerPtr& tower, std::string_view s) {
    constexpr std::string_view prefix = "qpoly:";
    if (s.substr(0, prefix.size()) == prefix) s.remove_prefix(prefix.size());
    ScalarVec v = text::parse_scalars(tower->base(), s);
    if (v.size() > tower->n()) throw ParseError("q-polynomial has more than n coefficients");
    return QPolynomial(tower, std::move(v));
}

}  // namespace qcyc
