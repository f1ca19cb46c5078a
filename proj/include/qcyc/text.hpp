#ifndef QCYC_TEXT_HPP
#define QCYC_TEXT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcyc/field.hpp"
#include "qcyc/poly.hpp"

// Coefficient text format: comma-separated non-negative integers, lowest index first, e.g.
// "1,1,0,1" is 1 + x + x^3. Over GF(q) with m > 1 each token is a scalar's integer code.
// Formatting never emits whitespace, so format(parse(s)) == s for canonical input.

namespace qcyc::text {

/// Throws ParseError on empty tokens, non-digits or overflow.
std::vector<std::uint32_t> parse_integers(std::string_view s);
std::string format_integers(std::span<const std::uint32_t> v);

ScalarVec parse_scalars(const BaseField& f, std::string_view s);
std::string format_scalars(std::span<const Scalar> v);

/// "0" is the zero polynomial; trailing zero coefficients are dropped.
Poly parse_poly(const BaseField& f, std::string_view s);
std::string format_poly(const Poly& p);

/// Exactly n coefficients over GF(q).
Element parse_element(const FieldTower& tower, std::string_view s);
std::string format_element(const Element& e);

/// Human-oriented rendering such as "x^3 + x + 1" (coefficients as scalar codes).
std::string pretty_poly(const Poly& p, std::string_view var = "x");

}  // namespace qcyc::text

#endif  // QCYC_TEXT_HPP
