#ifndef QCYC_FIELD_HPP
#define QCYC_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "qcyc/base_field.hpp"
#include "qcyc/poly.hpp"

namespace qcyc {

/// Element of GF(q^n): coefficients over GF(q) in the power basis 1, X, ..., X^{n-1} of the
/// tower's extension polynomial.
struct Element {
    ScalarVec coeffs;

    friend bool operator==(const Element&, const Element&) = default;
};

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

/// Forward range over every element of GF(q^n), starting at 0, constant coefficient fastest.
class ElementRange {
   public:
    class iterator {
       public:
        using value_type = Element;
        using difference_type = std::ptrdiff_t;
        using reference = const Element&;
        using pointer = const Element*;
        using iterator_category = std::forward_iterator_tag;

        iterator() = default;
        reference operator*() const noexcept { return current_; }
        pointer operator->() const noexcept { return &current_; }
        iterator& operator++();
        iterator operator++(int) {
            auto old = *this;
            ++*this;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.index_ == b.index_; }

       private:
        friend class ElementRange;
        iterator(std::uint32_t q, Element start, std::uint64_t index) : q_(q), current_(std::move(start)), index_(index) {}

        std::uint32_t q_ = 0;
        Element current_;
        std::uint64_t index_ = 0;
    };

    ElementRange(std::uint32_t q, std::size_t n, std::uint64_t count) : q_(q), n_(n), count_(count) {}
    iterator begin() const { return iterator(q_, Element{ScalarVec(n_)}, 0); }
    iterator end() const { return iterator(q_, Element{}, count_); }
    std::uint64_t size() const noexcept { return count_; }

   private:
    std::uint32_t q_;
    std::size_t n_;
    std::uint64_t count_;
};

/// The chain GF(p) <= GF(q) = GF(p^m) <= GF(q^n). GF(q^n) is built as a degree-n extension
/// of GF(q), so x -> x^q is a GF(q)-linear map on the coefficient vector.
class FieldTower {
   public:
    /// Throws std::invalid_argument unless ext_poly is monic irreducible over `base` with
    /// degree >= 1.
    FieldTower(BaseField base, Poly ext_poly);

    /// Tower over the lowest-index monic irreducibles of degree m over GF(p) and degree n over
    /// GF(q). Throws std::invalid_argument for non-prime p, m == 0 or n == 0.
    static TowerPtr build(std::uint32_t p, std::uint32_t m, std::uint32_t n);

    const BaseField& base() const noexcept { return base_; }
    /// Aliasing pointer to base(), sharing ownership with `tower`.
    static std::shared_ptr<const BaseField> base_ptr(const TowerPtr& tower) { return {tower, &tower->base_}; }

    std::uint32_t p() const noexcept { return base_.characteristic(); }
    std::uint32_t m() const noexcept { return base_.degree(); }
    std::uint32_t q() const noexcept { return base_.order(); }
    std::size_t n() const noexcept { return n_; }
    /// r = q^n, or nullopt when it does not fit in 64 bits.
    std::optional<std::uint64_t> order() const noexcept { return order_; }
    const Poly& ext_poly() const noexcept { return ext_poly_; }

    bool contains(const Element& a) const noexcept;

    Element zero() const { return Element{ScalarVec(n_)}; }
    Element one() const { return embed(base_.one()); }
    /// The class of X modulo ext_poly.
    Element generator() const;
    Element embed(Scalar c) const;
    /// The scalar a equals, when a lies in the embedded GF(q).
    std::optional<Scalar> to_scalar(const Element& a) const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element scale(Scalar c, const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    /// Throws std::domain_error on zero.
    Element inv(const Element& a) const;
    Element pow(const Element& a, std::uint64_t e) const;
    /// a^(q^j).
    Element frobenius(const Element& a, std::uint64_t j) const;

    /// Position of a in elements(); requires order().
    std::uint64_t index(const Element& a) const;
    Element element_at(std::uint64_t index) const;
    /// Throws std::overflow_error if order() is unset.
    ElementRange elements() const;

   private:
    void check(const Element& a) const;

    BaseField base_;
    Poly ext_poly_;
    std::size_t n_;
    std::optional<std::uint64_t> order_;
    std::vector<Scalar> frobenius_;  // n x n row-major; column i holds X^(iq)
};

/// Default ceiling on r - 1 for discrete logarithms and coset queries.
inline constexpr std::uint64_t kDefaultDlogBound = std::uint64_t{1} << 24;
/// Largest r - 1 whose prime factorization is attempted (trial division).
inline constexpr std::uint64_t kMaxFactorableOrder = std::uint64_t{1} << 48;

/// Prime factors of v, ascending, without multiplicity.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

/// Multiplicative order of a nonzero element of GF(q^n).
std::uint64_t multiplicative_order(const FieldTower& tower, const Element& a);

/// First element in elements() order with multiplicative order r - 1. Throws
/// std::overflow_error when r - 1 exceeds kMaxFactorableOrder.
Element primitive_element(const FieldTower& tower);

/// s in [0, r-2] with gamma^s = lambda, by baby-step giant-step. Throws std::invalid_argument
/// for lambda == 0 and std::overflow_error when r - 1 > bound.
std::uint64_t discrete_log(const FieldTower& tower, const Element& gamma, const Element& lambda,
                           std::uint64_t bound = kDefaultDlogBound);

}  // namespace qcyc

#endif  // QCYC_FIELD_HPP
