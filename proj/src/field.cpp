#include "qcyc/field.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace qcyc {

ElementRange::iterator& ElementRange::iterator::operator++() {
    ++index_;
    for (auto& c : current_.coeffs) {
        if (++c.code < q_) break;
        c.code = 0;
    }
    return *this;
}

FieldTower::FieldTower(BaseField base, Poly ext_poly)
    : base_(std::move(base)), ext_poly_(std::move(ext_poly)) {
    if (ext_poly_.degree() < 1 || !ext_poly_.is_monic())
        throw std::invalid_argument("extension polynomial must be monic of degree >= 1");
    for (auto c : ext_poly_.coeffs())
        if (!base_.contains(c)) throw std::invalid_argument("extension polynomial coefficient outside GF(q)");
    if (!poly::is_irreducible(base_, ext_poly_))
        throw std::invalid_argument("extension polynomial is not irreducible over GF(q)");
    n_ = static_cast<std::size_t>(ext_poly_.degree());

    std::uint64_t r = 1;
    bool fits = true;
    for (std::size_t i = 0; i < n_ && fits; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / base_.order())
            fits = false;
        else
            r *= base_.order();
    }
    if (fits) order_ = r;

    // (sum a_i X^i)^q = sum a_i (X^q)^i because every a_i is fixed by the q-th power map.
    frobenius_.assign(n_ * n_, Scalar{});
    const Element xq = pow(generator(), base_.order());
    Element col = one();
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t row = 0; row < n_; ++row) frobenius_[row * n_ + i] = col.coeffs[row];
        col = mul(col, xq);
    }
}

TowerPtr FieldTower::build(std::uint32_t p, std::uint32_t m, std::uint32_t n) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (m == 0 || n == 0) throw std::invalid_argument("extension degrees must be positive");
    const BaseField gfp = BaseField::prime(p);
    const Poly base_poly = poly::find_irreducible(gfp, m);
    std::vector<std::uint32_t> modulus;
    for (std::size_t i = 0; i <= m; ++i) modulus.push_back(base_poly.coeff(i).code);
    BaseField base(p, std::move(modulus));
    Poly ext = poly::find_irreducible(base, n);
    return std::make_shared<const FieldTower>(std::move(base), std::move(ext));
}

bool FieldTower::contains(const Element& a) const noexcept {
    if (a.coeffs.size() != n_) return false;
    for (auto c : a.coeffs)
        if (!base_.contains(c)) return false;
    return true;
}

void FieldTower::check(const Element& a) const {
    if (!contains(a)) throw std::invalid_argument("element does not belong to this GF(q^n)");
}

Element FieldTower::generator() const {
    // X mod ext_poly; for n == 1 that is minus the constant term.
    return Element{poly::fold_cyclic(base_, poly::mod(base_, Poly::monomial(base_.one(), 1), ext_poly_), n_)};
}

Element FieldTower::embed(Scalar c) const {
    if (!base_.contains(c)) throw std::invalid_argument("scalar does not belong to GF(q)");
    Element e = zero();
    e.coeffs[0] = c;
    return e;
}

std::optional<Scalar> FieldTower::to_scalar(const Element& a) const {
    check(a);
    for (std::size_t i = 1; i < n_; ++i)
        if (a.coeffs[i].code != 0) return std::nullopt;
    return a.coeffs[0];
}

Element FieldTower::add(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element out = zero();
    for (std::size_t i = 0; i < n_; ++i) out.coeffs[i] = base_.add(a.coeffs[i], b.coeffs[i]);
    return out;
}

Element FieldTower::sub(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element out = zero();
    for (std::size_t i = 0; i < n_; ++i) out.coeffs[i] = base_.sub(a.coeffs[i], b.coeffs[i]);
    return out;
}

Element FieldTower::neg(const Element& a) const {
    check(a);
    Element out = zero();
    for (std::size_t i = 0; i < n_; ++i) out.coeffs[i] = base_.neg(a.coeffs[i]);
    return out;
}

Element FieldTower::scale(Scalar c, const Element& a) const {
    check(a);
    Element out = zero();
    for (std::size_t i = 0; i < n_; ++i) out.coeffs[i] = base_.mul(c, a.coeffs[i]);
    return out;
}

Element FieldTower::mul(const Element& a, const Element& b) const {
    check(a);
    check(b);
    ScalarVec prod(2 * n_ - 1);
    for (std::size_t i = 0; i < n_; ++i) {
        if (a.coeffs[i].code == 0) continue;
        for (std::size_t j = 0; j < n_; ++j)
            prod[i + j] = base_.add(prod[i + j], base_.mul(a.coeffs[i], b.coeffs[j]));
    }
    // ext_poly is monic: X^n = -(e_0 + ... + e_{n-1} X^{n-1}).
    for (std::size_t d = prod.size(); d-- > n_;) {
        const Scalar c = prod[d];
        if (c.code == 0) continue;
        for (std::size_t i = 0; i < n_; ++i)
            prod[d - n_ + i] = base_.sub(prod[d - n_ + i], base_.mul(c, ext_poly_.coeff(i)));
    }
    prod.resize(n_);
    return Element{std::move(prod)};
}

Element FieldTower::inv(const Element& a) const {
    check(a);
    const Poly pa(a.coeffs);
    if (pa.is_zero()) throw std::domain_error("inverse of zero in GF(q^n)");
    const auto bez = poly::extended_gcd(base_, pa, ext_poly_);
    return Element{poly::fold_cyclic(base_, poly::mod(base_, bez.s, ext_poly_), n_)};
}

Element FieldTower::pow(const Element& a, std::uint64_t e) const {
    check(a);
    Element result = one(), base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

Element FieldTower::frobenius(const Element& a, std::uint64_t j) const {
    check(a);
    Element cur = a;
    for (std::uint64_t step = 0; step < j % n_; ++step) {
        Element next = zero();
        for (std::size_t col = 0; col < n_; ++col) {
            const Scalar c = cur.coeffs[col];
            if (c.code == 0) continue;
            for (std::size_t row = 0; row < n_; ++row)
                next.coeffs[row] = base_.add(next.coeffs[row], base_.mul(frobenius_[row * n_ + col], c));
        }
        cur = std::move(next);
    }
    return cur;
}

std::uint64_t FieldTower::index(const Element& a) const {
    check(a);
    if (!order_) throw std::overflow_error("GF(q^n) is too large to index");
    std::uint64_t idx = 0;
    for (std::size_t i = n_; i-- > 0;) idx = idx * base_.order() + a.coeffs[i].code;
    return idx;
}

Element FieldTower::element_at(std::uint64_t index) const {
    if (!order_ || index >= *order_) throw std::out_of_range("element index out of range");
    Element out = zero();
    for (auto& c : out.coeffs) {
        c.code = static_cast<std::uint32_t>(index % base_.order());
        index /= base_.order();
    }
    return out;
}

ElementRange FieldTower::elements() const {
    if (!order_) throw std::overflow_error("GF(q^n) is too large to enumerate");
    return ElementRange(base_.order(), n_, *order_);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d) continue;
        out.push_back(d);
        while (v % d == 0) v /= d;
    }
    if (v > 1) out.push_back(v);
    return out;
}

std::uint64_t multiplicative_order(const FieldTower& tower, const Element& a) {
    if (Poly(a.coeffs).is_zero()) throw std::invalid_argument("zero has no multiplicative order");
    const auto r = tower.order();
    if (!r || *r - 1 > kMaxFactorableOrder) throw std::overflow_error("field too large for order computation");
    std::uint64_t ord = *r - 1;
    const Element one = tower.one();
    for (auto f : prime_factors(*r - 1))
        while (ord % f == 0 && tower.pow(a, ord / f) == one) ord /= f;
    return ord;
}

Element primitive_element(const FieldTower& tower) {
    const auto r = tower.order();
    if (!r || *r - 1 > kMaxFactorableOrder) throw std::overflow_error("field too large for primitive element search");
    const std::uint64_t group = *r - 1;
    const auto factors = prime_factors(group);
    const Element one = tower.one();
    for (const Element& cand : tower.elements()) {
        if (Poly(cand.coeffs).is_zero()) continue;
        bool primitive = true;
        for (auto f : factors) {
            if (tower.pow(cand, group / f) == one) {
                primitive = false;
                break;
            }
        }
        if (primitive) return cand;
    }
    throw std::logic_error("GF(q^n)^* has no generator");
}

std::uint64_t discrete_log(const FieldTower& tower, const Element& gamma, const Element& lambda,
                           std::uint64_t bound) {
    if (Poly(lambda.coeffs).is_zero()) throw std::invalid_argument("discrete log of zero");
    const auto r = tower.order();
    if (!r || *r - 1 > bound) throw std::overflow_error("r - 1 exceeds the discrete-log bound");
    const std::uint64_t group = *r - 1;
    const auto steps = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(group))));

    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(steps);
    Element cur = tower.one();
    for (std::uint64_t j = 0; j < steps; ++j) {
        baby.emplace(tower.index(cur), j);
        cur = tower.mul(cur, gamma);
    }
    // giant = gamma^(-steps)
    const Element giant = tower.inv(tower.pow(gamma, steps));
    Element probe = lambda;
    for (std::uint64_t i = 0; i <= steps; ++i) {
        if (auto it = baby.find(tower.index(probe)); it != baby.end()) {
            const std::uint64_t s = (i * steps + it->second) % group;
            if (tower.pow(gamma, s) == lambda) return s;
        }
        probe = tower.mul(probe, giant);
    }
    throw std::invalid_argument("gamma is not a generator of GF(q^n)^*");
}

}  // namespace qcyc
