#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcyc/bridges.hpp"
#include "qcyc/error.hpp"
#include "qcyc/text.hpp"

namespace qcyc::cli {

namespace {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Input helpers

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q) {
    if (q < 2 || q > (1u << 16)) throw std::invalid_argument("q must be a prime power in [2, 65536]");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t m = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return {p, m};
}

TowerPtr tower_for(std::uint64_t q, std::uint32_t n) {
    auto [p, m] = split_prime_power(q);
    return FieldTower::build(p, m, n);
}

std::uint64_t parse_u64(std::string_view s) {
    const auto v = text::parse_integers(s);
    if (v.size() != 1) throw ParseError("expected one integer, got '" + std::string(s) + "'");
    return v[0];
}

/// "3,5,7", "3..8" or a mix such as "2..4,7". Sorted and deduplicated.
std::vector<std::uint32_t> parse_list(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(static_cast<std::uint32_t>(parse_u64(item)));
            continue;
        }
        const auto lo = parse_u64(item.substr(0, dots)), hi = parse_u64(item.substr(dots + 2));
        if (lo > hi) throw ParseError("empty range '" + item + "'");
        for (auto v = lo; v <= hi; ++v) out.push_back(static_cast<std::uint32_t>(v));
    }
    if (out.empty()) throw ParseError("empty list");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint32_t> codes(std::span<const Scalar> v) {
    std::vector<std::uint32_t> out;
    for (auto s : v) out.push_back(s.code);
    return out;
}

json matrix_rows(const GFqMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(codes(m.row(i)));
    return rows;
}

void print_matrix(std::ostream& out, const GFqMatrix& m) {
    if (m.rows() == 0) out << "  (no rows)\n";
    for (std::size_t i = 0; i < m.rows(); ++i) out << "  " << text::format_scalars(m.row(i)) << "\n";
}

std::string poly_text(const Poly& p) { return text::format_poly(p) + "  (" + text::pretty_poly(p) + ")"; }

std::optional<Element> try_primitive(const FieldTower& t) {
    try {
        return primitive_element(t);
    } catch (const std::overflow_error&) {
        return std::nullopt;
    }
}

void emit(std::ostream& out, const RunConfig& cfg, const json& doc, const std::string& text_form) {
    if (cfg.format == "doc")
        out << doc.dump(2) << "\n";
    else
        out << text_form;
}

// ---------------------------------------------------------------------------
// Codes from any of the four descriptions

struct CodeSource {
    std::string from = "g";
    std::string value;
    std::uint64_t q = 2;
    std::uint32_t n = 0;
};

struct ResolvedCode {
    TowerPtr tower;
    NormalBasis basis;
    CyclicCode code;
    GFqMatrix source_rows;  // the code as produced by the requested route
};

ResolvedCode resolve(const CodeSource& src) {
    if (src.n == 0) throw std::invalid_argument("--n must be positive");
    const TowerPtr tower = tower_for(src.q, src.n);
    const FieldPtr field = FieldTower::base_ptr(tower);
    NormalBasis basis = find_normal(tower);

    auto from_rows = [&](const GFqMatrix& rows) {
        CyclicCode code(field, generator_of_span(*field, rows.row_vectors(), src.n), src.n);
        return ResolvedCode{tower, basis, std::move(code), rows};
    };

    if (src.from == "g") {
        CyclicCode code(field, text::parse_poly(*field, src.value), src.n);
        GFqMatrix rows = standard_generator_matrix(code);
        return {tower, basis, std::move(code), std::move(rows)};
    }
    if (src.from == "h") {
        CyclicCode code = code_from_parity_check(field, text::parse_poly(*field, src.value), src.n);
        GFqMatrix rows = standard_generator_matrix(code);
        return {tower, basis, std::move(code), std::move(rows)};
    }
    if (src.from == "lambda") {
        Element lambda;
        if (src.value.rfind("g^", 0) == 0) {
            const auto gamma = try_primitive(*tower);
            if (!gamma) throw std::invalid_argument("no primitive element: q^n - 1 is too large to factor");
            lambda = tower->pow(*gamma, parse_u64(std::string_view(src.value).substr(2)));
        } else {
            const ScalarVec coords = text::parse_scalars(*field, src.value);
            if (coords.size() != src.n) throw ParseError("lambda needs exactly n normal coordinates");
            lambda = basis.from_coords(coords);
        }
        return from_rows(code_from_lambda(CheckElement(tower, lambda)).basis);
    }
    if (src.from == "ell") {
        const QPolynomial ell = parse_qpoly(tower, src.value);
        return from_rows(row_basis(image_code_generator_matrix(ell).transpose()));
    }
    throw std::invalid_argument("--from must be one of g, h, lambda, ell");
}

// ---------------------------------------------------------------------------
// build

int cmd_build(std::uint32_t p, std::uint32_t m, std::uint32_t n, const RunConfig& cfg, std::ostream& out) {
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime; request GF(p^m) as the pair p m, e.g. 2 2 for q = 4");
    const TowerPtr t = FieldTower::build(p, m, n);
    const NormalBasis nb = find_normal(t);
    const auto gamma = try_primitive(*t);
    const Poly base_poly(ScalarVec([&] {
        ScalarVec v;
        for (auto c : t->base().modulus()) v.push_back(Scalar{c});
        return v;
    }()));

    json doc = {{"command", "build"},
                {"p", p},
                {"m", m},
                {"n", n},
                {"q", t->q()},
                {"base_poly", t->base().modulus()},
                {"ext_poly", codes(t->ext_poly().coeffs())},
                {"normal_element", codes(nb.element().coeffs)},
                {"conjugate_matrix", matrix_rows(nb.basis_matrix())},
                {"primitive_element", gamma ? json(codes(gamma->coeffs)) : json(nullptr)},
                {"seed", cfg.seed}};
    if (t->order()) doc["order"] = *t->order();

    std::ostringstream s;
    s << "tower GF(" << p << "^" << m << ")^" << n << "  q=" << t->q() << " n=" << n;
    if (t->order()) s << " r=" << *t->order();
    s << "\nbase_poly: " << poly_text(base_poly) << "\n";
    s << "ext_poly: " << poly_text(t->ext_poly()) << "\n";
    s << "normal_element: " << text::format_element(nb.element()) << "\n";
    s << "conjugate_matrix (column i = alpha^(q^i)):\n";
    print_matrix(s, nb.basis_matrix());
    s << "primitive_element: " << (gamma ? text::format_element(*gamma) : "unavailable (r-1 too large to factor)") << "\n";
    s << "seed: " << cfg.seed << "\n";
    emit(out, cfg, doc, s.str());
    return kOk;
}

// ---------------------------------------------------------------------------
// code

int cmd_code(const CodeSource& src, const RunConfig& cfg, std::ostream& out) {
    const ResolvedCode rc = resolve(src);
    const FieldTower& t = *rc.tower;
    const CyclicCode& code = rc.code;
    const std::size_t n = code.length();
    const GFqMatrix standard = standard_generator_matrix(code);
    const CodeReport rep = make_report(code, cfg.cap);

    const QPolynomial ell = ell_from_generator(rc.tower, code.generator());
    const QPolynomial ell_image = ell_direct_from_generator(rc.tower, code.generator());

    std::optional<CheckElement> lambda;
    std::optional<std::uint64_t> lambda_log;
    if (static_cast<std::size_t>(code.parity_check().degree()) < n) {
        lambda = lambda_from_parity_check(code.parity_check(), rc.basis);
        if (const auto gamma = try_primitive(t)) {
            try {
                lambda_log = discrete_log(t, *gamma, lambda->value(), cfg.dlog_bound);
            } catch (const std::overflow_error&) {
            }
        }
    }

    // Every printed description must describe the same code.
    std::vector<std::pair<std::string, bool>> checks;
    checks.emplace_back("source-route", row_space_equal(rc.source_rows, standard));
    checks.emplace_back("ell-circulant-rows", row_space_equal(image_code_generator_matrix(ell), standard));
    checks.emplace_back("ell-image-columns",
                        row_space_equal(image_code_generator_matrix(ell_image).transpose(), standard));
    if (t.order() && *t.order() <= cfg.cap && span_size(t.base(), code.dimension()) <= cfg.cap)
        checks.emplace_back("ell-image-definition",
                            image_code_by_definition({ell_image, rc.basis}, cfg.cap) == enumerate_codewords(code, cfg.cap));
    if (lambda) checks.emplace_back("lambda-nullspace", row_space_equal(code_from_lambda(*lambda).basis, standard));
    const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });

    json doc = {{"command", "code"},
                {"from", src.from},
                {"value", src.value},
                {"q", t.q()},
                {"n", n},
                {"k", rep.k},
                {"d", rep.d ? json(*rep.d) : json(nullptr)},
                {"g", codes(code.generator().coeffs())},
                {"h", codes(code.parity_check().coeffs())},
                {"ell", codes(ell.coeffs())},
                {"ell_image", codes(ell_image.coeffs())},
                {"normal_element", codes(rc.basis.element().coeffs)},
                {"generator_matrix", matrix_rows(standard)},
                {"seed", cfg.seed}};
    if (lambda) {
        doc["lambda"] = {{"element", codes(lambda->value().coeffs)},
                         {"normal_coords", codes(rc.basis.coords(lambda->value()))},
                         {"log", lambda_log ? json(*lambda_log) : json(nullptr)}};
    } else {
        doc["lambda"] = nullptr;
    }
    json jchecks = json::object();
    for (const auto& [id, pass] : checks) jchecks[id] = pass ? "PASS" : "FAIL";
    doc["checks"] = jchecks;

    std::ostringstream s;
    s << "[" << n << "," << rep.k;
    if (rep.d)
        s << "," << *rep.d << "]";
    else
        s << "]" << (rep.k == 0 ? "  zero code" : "  d not computed (q^k exceeds the cap)");
    s << "  over GF(" << t.q() << ")\n";
    s << "g: " << poly_text(code.generator()) << "\n";
    s << "h: " << poly_text(code.parity_check()) << "\n";
    s << "ell: " << text::format_scalars(ell.coeffs()) << "  (circulant rows span the code)\n";
    s << "ell_image: " << text::format_scalars(ell_image.coeffs()) << "  (image code is the code)\n";
    if (lambda) {
        s << "lambda: " << text::format_element(lambda->value()) << "  normal coords "
          << text::format_scalars(rc.basis.coords(lambda->value()));
        if (lambda_log) s << "  = g^" << *lambda_log;
        s << "\n";
    } else {
        s << "lambda: none (the full space has no nonzero check element)\n";
    }
    s << "normal_element: " << text::format_element(rc.basis.element()) << "\n";
    s << "generator_matrix:\n";
    print_matrix(s, standard);
    for (const auto& [id, pass] : checks) s << (pass ? "PASS " : "FAIL ") << id << "\n";
    s << "seed: " << cfg.seed << "\n";
    emit(out, cfg, doc, s.str());
    return ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& q_list, const std::string& n_list, const RunConfig& cfg, std::ostream& out) {
    const auto qs = parse_list(q_list);
    const auto ns = parse_list(n_list);
    json configs = json::array();
    std::ostringstream s;
    std::map<CheckStatus, std::size_t> totals;
    std::size_t divisors = 0;

    for (auto q : qs)
        for (auto n : ns) {
            if (n == 0) throw std::invalid_argument("n must be positive");
            const TowerPtr t = tower_for(q, n);
            const NormalBasis nb = find_normal(t);
            VerifyOptions opts;
            opts.cap = cfg.cap;
            opts.dlog_bound = cfg.dlog_bound;
            opts.gamma = try_primitive(*t);

            json reports = json::array();
            for (const Poly& g : monic_divisors(t->base(), n)) {
                const VerificationReport rep = verify_equivalence(g, nb, opts);
                ++divisors;
                json checks = json::array();
                for (const auto& c : rep.checks) {
                    ++totals[c.status];
                    checks.push_back({{"id", c.id}, {"status", to_string(c.status)}, {"detail", c.detail}});
                }
                reports.push_back({{"g", codes(g.coeffs())},
                                   {"k", n - static_cast<std::size_t>(g.degree())},
                                   {"passed", rep.passed()},
                                   {"checks", checks}});
                s << format_report(rep);
            }
            configs.push_back({{"q", q},
                               {"n", n},
                               {"ext_poly", codes(t->ext_poly().coeffs())},
                               {"normal_element", codes(nb.element().coeffs)},
                               {"divisors", reports}});
        }

    const std::size_t fails = totals[CheckStatus::fail];
    json doc = {{"command", "verify"},
                {"cap", cfg.cap},
                {"dlog_bound", cfg.dlog_bound},
                {"seed", cfg.seed},
                {"configs", configs},
                {"summary",
                 {{"divisors", divisors},
                  {"pass", totals[CheckStatus::pass]},
                  {"fail", fails},
                  {"skip", totals[CheckStatus::skip]}}}};
    s << "summary: " << divisors << " divisors, " << totals[CheckStatus::pass] << " PASS, " << fails << " FAIL, "
      << totals[CheckStatus::skip] << " SKIP\n";
    s << "seed: " << cfg.seed << "\n";
    emit(out, cfg, doc, s.str());
    return fails == 0 ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// search

struct Found {
    ScalarVec ell;
    std::size_t k = 0;
    std::size_t d = 0;
    Poly g;
};

int cmd_search(std::uint64_t q, std::uint32_t n, std::size_t min_d, std::size_t max_results, std::uint64_t samples,
               const RunConfig& cfg, std::ostream& out) {
    if (n == 0) throw std::invalid_argument("--n must be positive");
    const TowerPtr t = tower_for(q, n);
    const FieldPtr field = FieldTower::base_ptr(t);
    const std::uint64_t space = span_size(t->base(), n);
    const bool exhaustive = space != 0 && space <= cfg.cap;
    if (!exhaustive && samples == 0)
        throw std::invalid_argument("q^n candidate q-polynomials exceed the cap; pass --samples to sample them");
    const std::uint64_t count = exhaustive ? space : samples;

    std::mt19937_64 rng(cfg.seed);
    std::map<ScalarVec, bool> seen;  // reduced basis entries (+ row count) -> visited
    std::vector<Found> found;
    std::size_t distinct = 0, too_large = 0;
    ScalarVec ell(n);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        if (exhaustive) {
            std::uint64_t v = idx;
            for (auto& c : ell) {
                c.code = static_cast<std::uint32_t>(v % t->q());
                v /= t->q();
            }
        } else {
            for (auto& c : ell) c.code = static_cast<std::uint32_t>(rng() % t->q());
        }
        const GFqMatrix basis = row_basis(image_code_generator_matrix(QPolynomial(t, ell)).transpose());
        ScalarVec key = basis.entries();
        key.push_back(Scalar{static_cast<std::uint32_t>(basis.rows())});
        if (!seen.emplace(std::move(key), true).second) continue;
        ++distinct;
        const std::size_t k = basis.rows();
        if (k == 0) continue;
        const std::uint64_t words = span_size(t->base(), k);
        if (words == 0 || words > cfg.cap) {
            ++too_large;
            continue;
        }
        const std::size_t d = minimum_distance(basis, cfg.cap);
        if (d >= min_d) found.push_back({ell, k, d, generator_of_span(*field, basis.row_vectors(), n)});
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const Found& a, const Found& b) { return a.k != b.k ? a.k > b.k : a.d > b.d; });
    if (max_results != 0 && found.size() > max_results) found.resize(max_results);

    json rows = json::array();
    std::ostringstream s;
    s << "search q=" << t->q() << " n=" << n << " min_d=" << min_d << " mode=" << (exhaustive ? "exhaustive" : "sampled")
      << " candidates=" << count << " distinct_codes=" << distinct << "\n";
    if (too_large) s << "skipped " << too_large << " codes with q^k above the cap (d not computed)\n";
    for (const auto& f : found) {
        rows.push_back({{"ell", codes(f.ell)}, {"n", n}, {"k", f.k}, {"d", f.d}, {"g", codes(f.g.coeffs())}});
        s << "[" << n << "," << f.k << "," << f.d << "]  ell=" << text::format_scalars(f.ell)
          << "  g=" << text::format_poly(f.g) << "\n";
    }
    if (found.empty()) s << "no codes found\n";
    s << "seed: " << cfg.seed << "\n";
    json doc = {{"command", "search"},
                {"q", t->q()},
                {"n", n},
                {"min_d", min_d},
                {"mode", exhaustive ? "exhaustive" : "sampled"},
                {"candidates", count},
                {"distinct_codes", distinct},
                {"skipped_over_cap", too_large},
                {"codes", rows},
                {"seed", cfg.seed}};
    emit(out, cfg, doc, s.str());
    return kOk;
}

// ---------------------------------------------------------------------------
// export / import

int cmd_export(const CodeSource& src, const std::string& which, const std::string& path, const RunConfig& cfg,
               std::ostream& out) {
    const ResolvedCode rc = resolve(src);
    GFqMatrix m = [&] {
        if (which == "generator") return standard_generator_matrix(rc.code);
        if (which == "g1") return g1_matrix(rc.code);
        if (which == "circulant") return image_code_generator_matrix(ell_from_generator(rc.tower, rc.code.generator()));
        throw std::invalid_argument("--matrix must be generator, g1 or circulant");
    }();
    const std::string body = export_matrix(m);
    if (path == "-") {
        out << body;
        return kOk;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << body)) throw std::runtime_error("cannot write " + path);
    json doc = {{"command", "export"}, {"path", path}, {"matrix", which}, {"rows", m.rows()}, {"cols", m.cols()},
                {"seed", cfg.seed}};
    emit(out, cfg, doc,
         "wrote " + which + " matrix " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " to " + path +
             "\nseed: " + std::to_string(cfg.seed) + "\n");
    return kOk;
}

int cmd_import(const std::string& path, std::optional<std::uint64_t> q, const RunConfig& cfg, std::ostream& out) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot read " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    FieldPtr expected;
    if (q) {
        auto [p, m] = split_prime_power(*q);
        expected = FieldTower::base_ptr(FieldTower::build(p, m, 1));
    }
    const GFqMatrix mat = import_matrix(buf.str(), expected);
    const std::size_t r = rank(mat);

    // If the row space is a cyclic code, name its generator.
    std::optional<Poly> g;
    if (mat.cols() > 0) {
        const Poly cand = generator_of_span(mat.field(), mat.row_vectors(), mat.cols());
        const CyclicCode code(mat.field_ptr(), cand, mat.cols());
        if (row_space_equal(standard_generator_matrix(code), mat)) g = cand;
    }

    json doc = {{"command", "import"},
                {"path", path},
                {"q", mat.field().order()},
                {"rows", mat.rows()},
                {"cols", mat.cols()},
                {"rank", r},
                {"matrix", matrix_rows(mat)},
                {"cyclic_generator", g ? json(codes(g->coeffs())) : json(nullptr)},
                {"seed", cfg.seed}};
    std::ostringstream s;
    s << "matrix " << mat.rows() << "x" << mat.cols() << " over GF(" << mat.field().order() << "), rank " << r << "\n";
    print_matrix(s, mat);
    if (g)
        s << "row space is the cyclic code with g: " << poly_text(*g) << "\n";
    else
        s << "row space is not cyclic\n";
    s << "seed: " << cfg.seed << "\n";
    emit(out, cfg, doc, s.str());
    return kOk;
}

void add_code_source(CLI::App* sub, CodeSource& src) {
    sub->add_option("--from", src.from, "Source description: g, h, lambda or ell")
        ->check(CLI::IsMember({"g", "h", "lambda", "ell"}));
    sub->add_option("--value", src.value, "Coefficients; lambda also accepts g^s")->required();
    sub->add_option("--q", src.q, "Field size (prime power)");
    sub->add_option("--n", src.n, "Code length")->required();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Cyclic codes over GF(q) as q-polynomial image codes"};
    app.require_subcommand(1);
    app.add_option("--cap", cfg.cap, "Enumeration cap")->check(CLI::PositiveNumber);
    app.add_option("--dlog-bound", cfg.dlog_bound, "Largest group order for discrete logs")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "doc"}));
    app.add_option("--seed", cfg.seed, "Seed for sampled searches");

    std::uint32_t bp = 0, bm = 0, bn = 0;
    auto* build = app.add_subcommand("build", "Construct GF(p^m)^n and print its canonical elements");
    build->add_option("p", bp)->required();
    build->add_option("m", bm)->required();
    build->add_option("n", bn)->required();

    CodeSource code_src;
    auto* code = app.add_subcommand("code", "Describe a cyclic code through all four representations");
    add_code_source(code, code_src);

    std::string vq = "2", vn;
    auto* verify = app.add_subcommand("verify", "Cross-check every divisor of x^n - 1");
    verify->add_option("--q", vq, "Field sizes, e.g. 2,3,4");
    verify->add_option("--n", vn, "Lengths, e.g. 7 or 3..8")->required();

    std::uint64_t sq = 2, samples = 0;
    std::uint32_t sn = 0;
    std::size_t min_d = 1, max_results = 20;
    auto* search = app.add_subcommand("search", "Search image codes of q-polynomials by minimum distance");
    search->add_option("--q", sq, "Field size (prime power)");
    search->add_option("--n", sn, "Code length")->required();
    search->add_option("--min-d", min_d, "Minimum distance threshold");
    search->add_option("--max-results", max_results, "Rows to print (0 = all)");
    search->add_option("--samples", samples, "Sample this many q-polynomials when q^n exceeds the cap");

    CodeSource export_src;
    std::string which = "generator", out_path = "-";
    auto* exp = app.add_subcommand("export", "Write a code matrix in the gfq-matrix text format");
    add_code_source(exp, export_src);
    exp->add_option("--matrix", which, "generator, g1 or circulant");
    exp->add_option("--output", out_path, "File path, - for stdout");

    std::string in_path;
    std::optional<std::uint64_t> iq;
    auto* imp = app.add_subcommand("import", "Read a gfq-matrix file and report on it");
    imp->add_option("--input", in_path, "File path")->required();
    imp->add_option("--q", iq, "Expected field size");

    for (auto* sub : {build, code, verify, search, exp, imp}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*build) return cmd_build(bp, bm, bn, cfg, out);
        if (*code) return cmd_code(code_src, cfg, out);
        if (*verify) return cmd_verify(vq, vn, cfg, out);
        if (*search) return cmd_search(sq, sn, min_d, max_results, samples, cfg, out);
        if (*exp) return cmd_export(export_src, which, out_path, cfg, out);
        if (*imp) return cmd_import(in_path, iq, cfg, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace qcyc::cli
