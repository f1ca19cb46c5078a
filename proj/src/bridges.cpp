#include "qcyc/bridges.hpp"

#include <algorithm>
#include <stdexcept>

#include "qcyc/error.hpp"
#include "qcyc/text.hpp"

namespace qcyc {

CheckElement::CheckElement(TowerPtr tower, Element lambda) : tower_(std::move(tower)), lambda_(std::move(lambda)) {
    if (!tower_->contains(lambda_)) throw std::invalid_argument("check element does not belong to GF(q^n)");
    if (lambda_ == tower_->zero()) throw std::invalid_argument("check element must be nonzero");
}

GFqMatrix image_code_generator_matrix(const QPolynomial& ell) {
    return GFqMatrix::circulant(FieldTower::base_ptr(ell.tower()), ell.coeffs());
}

std::vector<ScalarVec> image_code_by_definition(const ImageCodeSpec& spec, std::uint64_t cap) {
    const FieldTower& t = *spec.ell.tower();
    if (spec.basis.tower() != spec.ell.tower()) throw std::invalid_argument("normal basis belongs to a different tower");
    const auto r = t.order();
    if (!r || *r > cap)
        throw CapExceeded("GF(q^n) has more than " + std::to_string(cap) + " elements; definitional enumeration skipped");
    std::vector<ScalarVec> words;
    words.reserve(*r);
    for (const Element& y : t.elements()) words.push_back(spec.basis.coords(evaluate(spec.ell, y)));
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

QPolynomial ell_from_generator(const TowerPtr& tower, const Poly& g) {
    const BaseField& f = tower->base();
    const std::size_t n = tower->n();
    const CyclicCode code(FieldTower::base_ptr(tower), g, n);  // validates g
    ScalarVec ell(n);
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
        const std::size_t slot = (n - i % n) % n;
        ell[slot] = f.add(ell[slot], g.coeff(i));
    }
    return QPolynomial(tower, std::move(ell));
}

QPolynomial ell_direct_from_generator(const TowerPtr& tower, const Poly& g) {
    const CyclicCode code(FieldTower::base_ptr(tower), g, tower->n());
    return QPolynomial(tower, poly::fold_cyclic(tower->base(), g, tower->n()));
}

CheckElement lambda_from_parity_check(const Poly& h, const NormalBasis& basis) {
    const TowerPtr& tower = basis.tower();
    const std::size_t n = tower->n();
    if (h.is_zero()) throw std::invalid_argument("parity-check polynomial must be nonzero");
    if (static_cast<std::size_t>(h.degree()) >= n)
        throw std::invalid_argument("parity-check polynomial of degree n (the full space) has no check element");
    code_from_parity_check(FieldTower::base_ptr(tower), h, n);  // validates h
    ScalarVec coords(n);
    std::copy(h.coeffs().begin(), h.coeffs().end(), coords.begin());
    return CheckElement(tower, basis.from_coords(coords));
}

LambdaCode code_from_lambda(const CheckElement& lambda) {
    GFqMatrix check = conjugate_matrix(lambda.tower(), lambda.value());
    const auto null = nullspace(check);
    GFqMatrix basis = GFqMatrix::from_rows(check.field_ptr(), null, check.cols());
    return {std::move(check), std::move(basis)};
}

GFqMatrix b_lambda_matrix(const CheckElement& lambda, const NormalBasis& basis) {
    if (basis.tower() != lambda.tower()) throw std::invalid_argument("normal basis belongs to a different tower");
    return GFqMatrix::circulant(FieldTower::base_ptr(lambda.tower()), basis.coords(lambda.value()));
}

std::size_t coset_dimension_bound(const CheckElement& lambda, const Element& gamma, std::uint64_t dlog_bound) {
    const FieldTower& t = *lambda.tower();
    const std::uint64_t log_exponent = discrete_log(t, gamma, lambda.value(), dlog_bound);
    const std::size_t coset_size = q_cyclotomic_coset(log_exponent, *t.order() - 1, t.q()).size();
    return t.n() - coset_size;
}

bool VerificationReport::passed() const noexcept { return count(CheckStatus::fail) == 0; }

std::size_t VerificationReport::count(CheckStatus s) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass:
            return "PASS";
        case CheckStatus::fail:
            return "FAIL";
        case CheckStatus::skip:
            return "SKIP";
    }
    return "?";
}

namespace {

std::string size_text(std::size_t v) { return std::to_string(v); }

CheckResult verdict(std::string id, bool ok, std::string detail) {
    return {std::move(id), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

std::optional<std::vector<ScalarVec>> try_enumerate(const GFqMatrix& m, std::uint64_t cap) {
    try {
        return enumerate_row_space(m, cap);
    } catch (const CapExceeded&) {
        return std::nullopt;
    }
}

}  // namespace

VerificationReport verify_equivalence(const Poly& g, const NormalBasis& basis, const VerifyOptions& options) {
    const TowerPtr& tower = basis.tower();
    const std::size_t n = tower->n();
    const FieldPtr field = FieldTower::base_ptr(tower);

    VerificationReport rep;
    rep.subject = "q=" + std::to_string(tower->q()) + " n=" + std::to_string(n) + " g=" + text::format_poly(g);

    const CyclicCode code(field, g, n);
    const std::size_t k = code.dimension();
    const QPolynomial ell = ell_from_generator(tower, g);
    const GFqMatrix circ = image_code_generator_matrix(ell);
    const GFqMatrix g1 = g1_matrix(code);
    const GFqMatrix standard = standard_generator_matrix(code);
    const std::string expected_k = "n-deg g=" + size_text(k);

    const std::size_t rank_g1 = rank(g1);
    rep.checks.push_back(verdict("rank-g1", rank_g1 == k, "rank=" + size_text(rank_g1) + " " + expected_k));
    rep.checks.push_back(verdict("g1-generates", row_space_equal(g1, standard), "rowspace(G1) vs x^i g(x), i<k"));
    rep.checks.push_back(verdict("ell-matches-g1", circ == g1, "ell=" + text::format_scalars(ell.coeffs())));
    const std::size_t rank_circ = rank(circ);
    rep.checks.push_back(verdict("rank-circulant", rank_circ == k, "rank=" + size_text(rank_circ) + " " + expected_k));
    rep.checks.push_back(verdict("circulant-route", row_space_equal(circ, standard), "rowspace(circulant(ell)) vs <g>"));

    std::vector<std::pair<std::string, std::vector<ScalarVec>>> enumerated;
    const auto code_words = try_enumerate(standard, options.cap);
    if (code_words) {
        enumerated.emplace_back("<g>", *code_words);
        if (auto circ_words = try_enumerate(circ, options.cap)) enumerated.emplace_back("circulant", *circ_words);
    }

    try {
        const auto def_words = image_code_by_definition(ImageCodeSpec{ell, basis}, options.cap);
        const auto direct_words =
            image_code_by_definition(ImageCodeSpec{ell_direct_from_generator(tower, g), basis}, options.cap);
        if (code_words) {
            const bool same = def_words == *code_words;
            std::string detail =
                size_text(def_words.size()) + " words by definition, " + size_text(code_words->size()) + " in <g>";
            if (!same) {
                const Poly recip = reciprocal_generator(*field, g);
                const bool is_recip = def_words == enumerate_codewords(CyclicCode(field, recip, n), options.cap);
                detail += is_recip ? "; the set is <g*>, g*=" + text::format_poly(recip) : "; the set is not <g*> either";
            }
            rep.checks.push_back(verdict("definition-route", same, detail));
            rep.checks.push_back(verdict("definition-direct", direct_words == *code_words,
                                         "ell=" + text::format_scalars(ell_direct_from_generator(tower, g).coeffs())));
        } else {
            rep.checks.push_back({"definition-route", CheckStatus::skip, "q^k exceeds cap"});
            rep.checks.push_back({"definition-direct", CheckStatus::skip, "q^k exceeds cap"});
        }
        enumerated.emplace_back("definition", def_words);
        enumerated.emplace_back("definition-direct", direct_words);
    } catch (const CapExceeded&) {
        rep.checks.push_back({"definition-route", CheckStatus::skip, "q^n exceeds cap"});
        rep.checks.push_back({"definition-direct", CheckStatus::skip, "q^n exceeds cap"});
    }

    const Poly& h = code.parity_check();
    std::optional<CheckElement> lambda;
    if (static_cast<std::size_t>(h.degree()) <= n - 1) {
        lambda = lambda_from_parity_check(h, basis);
        const LambdaCode lc = code_from_lambda(*lambda);
        rep.checks.push_back(verdict("lambda-route", row_space_equal(lc.basis, standard),
                                     "lambda=" + text::format_element(lambda->value()) + " h=" + text::format_poly(h)));
        const std::size_t dim = lc.basis.rows();
        const std::size_t rank_b = rank(b_lambda_matrix(*lambda, basis));
        rep.checks.push_back(verdict("dim-b-lambda", dim == n - rank_b && dim == static_cast<std::size_t>(h.degree()),
                                     "dim=" + size_text(dim) + " n-rank(B)=" + size_text(n - rank_b) +
                                         " deg h=" + size_text(static_cast<std::size_t>(h.degree()))));
        if (auto words = try_enumerate(lc.basis, options.cap))
            enumerated.emplace_back("C_lambda", *words);

        if (options.gamma) {
            try {
                const std::size_t bound = coset_dimension_bound(*lambda, *options.gamma, options.dlog_bound);
                rep.checks.push_back(verdict("coset-bound", dim >= bound,
                                             "dim=" + size_text(dim) + " >= n-l_s=" + size_text(bound)));
            } catch (const std::overflow_error&) {
                rep.checks.push_back({"coset-bound", CheckStatus::skip, "r-1 exceeds the discrete-log bound"});
            }
        } else {
            rep.checks.push_back({"coset-bound", CheckStatus::skip, "no primitive element supplied"});
        }
    } else {
        const std::string why = "deg h = n: the full space has no nonzero check element";
        rep.checks.push_back({"lambda-route", CheckStatus::skip, why});
        rep.checks.push_back({"dim-b-lambda", CheckStatus::skip, why});
        rep.checks.push_back({"coset-bound", CheckStatus::skip, why});
    }

    if (enumerated.empty()) {
        rep.checks.push_back({"cyclic", CheckStatus::skip, "no route enumerable within cap"});
    } else {
        bool all = true;
        std::string routes;
        for (const auto& [name, words] : enumerated) {
            const bool ok = is_cyclic_set(words);
            all = all && ok;
            routes += (routes.empty() ? "" : ",") + name + (ok ? "" : "(not cyclic)");
        }
        rep.checks.push_back(verdict("cyclic", all, "routes=" + routes));
    }
    return rep;
}

std::string format_report(const VerificationReport& report) {
    std::string out;
    for (const auto& c : report.checks)
        out += to_string(c.status) + " " + c.id + " " + report.subject + " " + c.detail + "\n";
    return out;
}

}  // namespace qcyc
