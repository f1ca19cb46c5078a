#include "qcyc/text.hpp"

#include <charconv>

#include "qcyc/error.hpp"

namespace qcyc::text {

std::vector<std::uint32_t> parse_integers(std::string_view s) {
    std::vector<std::uint32_t> out;
    if (s.empty()) throw ParseError("empty coefficient list");
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = s.find(',', pos);
        const std::string_view tok = s.substr(pos, comma == std::string_view::npos ? s.npos : comma - pos);
        if (tok.empty()) throw ParseError("empty coefficient in \"" + std::string(s) + "\"");
        std::uint32_t v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("bad coefficient \"" + std::string(tok) + "\"");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string format_integers(std::span<const std::uint32_t> v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

ScalarVec parse_scalars(const BaseField& f, std::string_view s) {
    ScalarVec out;
    for (auto v : parse_integers(s)) {
        if (v >= f.order())
            throw ParseError("coefficient " + std::to_string(v) + " is not in GF(" + std::to_string(f.order()) + ")");
        out.push_back(Scalar{v});
    }
    return out;
}

std::string format_scalars(std::span<const Scalar> v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i].code);
    }
    return out;
}

Poly parse_poly(const BaseField& f, std::string_view s) { return Poly(parse_scalars(f, s)); }

std::string format_poly(const Poly& p) { return p.is_zero() ? "0" : format_scalars(p.coeffs()); }

Element parse_element(const FieldTower& tower, std::string_view s) {
    ScalarVec v = parse_scalars(tower.base(), s);
    if (v.size() != tower.n())
        throw ParseError("expected " + std::to_string(tower.n()) + " coefficients, got " + std::to_string(v.size()));
    return Element{std::move(v)};
}

std::string format_element(const Element& e) { return format_scalars(e.coeffs); }

std::string pretty_poly(const Poly& p, std::string_view var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const std::uint32_t c = p.coeff(i).code;
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (c != 1 || i == 0) out += std::to_string(c);
        if (i >= 1) out += var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace qcyc::text
