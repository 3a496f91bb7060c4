#include "series.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "frobenius.hpp"

namespace frobcx {

namespace {

std::string power(const std::string& symbol, std::int64_t exponent) {
    if (exponent == 1) return symbol;
    return symbol + "^" + std::to_string(exponent);
}

std::string grade_power(const Element& g) {
    if (g.dim() == 1) return power("z", g[0]);
    return "z^" + g.str();
}

template <typename Terms, typename MonomialFn>
std::string terms_str(const Terms& terms, MonomialFn&& monomial) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms) {
        if (!first) os << " + ";
        first = false;
        auto m = monomial(key);
        if (m.empty()) {
            os << c;
        } else {
            if (c != 1) os << c << ' ';
            os << m;
        }
    }
    return os.str();
}

std::string monomial_str(int i, bool grade_is_zero, const std::string& grade_part) {
    std::string out;
    if (i == 1)
        out = "t";
    else if (i != 0)
        out = "t^" + std::to_string(i);
    if (!grade_is_zero) {
        if (!out.empty()) out += ' ';
        out += grade_part;
    }
    return out;
}

}  // namespace

long long MonoidSeries::coeff(const Element& grade, int i) const {
    auto it = terms.find({grade, i});
    return it == terms.end() ? 0 : it->second;
}

void MonoidSeries::add(const Element& grade, int i, long long c) {
    if (c == 0) return;
    if (!grade.within(cap))
        throw std::invalid_argument("series: term grade exceeds the cap");
    auto [it, inserted] = terms.emplace(std::make_pair(grade, i), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

std::string MonoidSeries::str() const {
    return terms_str(terms, [](const std::pair<Element, int>& key) {
        return monomial_str(key.second, key.first.is_zero(), grade_power(key.first));
    });
}

long long ExtSeries::coeff(const ExtElement& grade, int i) const {
    auto it = terms.find({grade, i});
    return it == terms.end() ? 0 : it->second;
}

void ExtSeries::add(const ExtElement& grade, int i, long long c) {
    if (c == 0) return;
    if (!grade.lambda.within(lambda_cap))
        throw std::invalid_argument("series: term grade exceeds the cap");
    auto [it, inserted] = terms.emplace(std::make_pair(grade, i), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

std::string ExtSeries::str() const {
    return terms_str(terms, [](const std::pair<ExtElement, int>& key) {
        const auto& g = key.first;
        const bool zero = g.lambda.is_zero() && g.k == 0;
        return monomial_str(key.second, zero, "z^" + g.str());
    });
}

std::string RationalSeriesExpr::str() const {
    std::ostringstream os;
    if (numerator.empty()) {
        os << "1";
    } else {
        for (const auto& [a, g] : numerator)
            os << "(1 + " << power("t", a) << ' ' << grade_power(g) << ')';
    }
    if (!denominator.empty()) {
        os << " / ";
        for (const auto& [a, g] : denominator)
            os << "(1 - " << power("t", a) << ' ' << grade_power(g) << ')';
    }
    return os.str();
}

MonoidSeries direct_series(const AffineMonoid& m, const Element& cap, const Field& field) {
    MonoidSeries s;
    s.cap = cap;
    for (const auto& [grade, vec] : betti_table(m, cap, field).rows)
        for (auto [i, c] : vec.entries()) s.add(grade, i, c);
    return s;
}

ExtSeries direct_series(const ExtMonoid& e, const Element& lambda_cap, const Field& field) {
    ExtSeries s;
    s.lambda_cap = lambda_cap;
    s.r = e.r();
    for (const auto& [grade, vec] : betti_table(e, lambda_cap, field).rows)
        for (auto [i, c] : vec.entries()) s.add(grade, i, c);
    return s;
}

ExtSeries extension_series(const MonoidSeries& base_series, const Element& rho,
                           std::int64_t r, const Element& cap) {
    if (r < 2)
        throw std::invalid_argument("series: extension requires r >= 2");
    if (rho.is_zero())
        throw std::invalid_argument("series: extension requires a nonzero rho");
    if (rho.dim() != cap.dim() || base_series.cap.dim() != cap.dim())
        throw std::invalid_argument("series: dimension mismatch");
    if (!cap.within(base_series.cap))
        throw std::invalid_argument("series: base series cap is below the requested cap");

    ExtSeries out;
    out.lambda_cap = cap;
    out.r = r;
    for (const auto& [key, c] : base_series.terms) {
        const auto& [mu, i] = key;
        Element shifted = mu;  // mu + l * rho
        for (std::int64_t ell = 0; shifted.within(cap); ++ell, shifted = shifted.plus(rho))
            for (std::int64_t k = 0; k <= 1; ++k)
                out.add(ExtElement{shifted, k}, i + static_cast<int>(2 * ell + k), c);
    }
    return out;
}

MonoidSeries series_one(const Element& cap) {
    MonoidSeries s;
    s.cap = cap;
    s.add(Element::zero(cap.dim()), 0, 1);
    return s;
}

MonoidSeries series_product(const MonoidSeries& a, const MonoidSeries& b, const Element& cap) {
    MonoidSeries out;
    out.cap = cap;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            Element grade = ka.first.plus(kb.first);
            if (grade.within(cap)) out.add(grade, ka.second + kb.second, ca * cb);
        }
    return out;
}

MonoidSeries expand_closed_form(const RationalSeriesExpr& expr, const Element& cap) {
    MonoidSeries acc = series_one(cap);
    for (const auto& [a, g] : expr.numerator) {
        if (g.dim() != cap.dim())
            throw std::invalid_argument("series: expression dimension mismatch");
        MonoidSeries factor = series_one(cap);
        if (g.within(cap)) factor.add(g, a, 1);
        acc = series_product(acc, factor, cap);
    }
    for (const auto& [a, g] : expr.denominator) {
        if (g.dim() != cap.dim())
            throw std::invalid_argument("series: expression dimension mismatch");
        if (g.is_zero())
            throw std::invalid_argument("series: denominator grade must be nonzero");
        MonoidSeries geometric = series_one(cap);
        Element grade = g;
        for (std::int64_t ell = 1; grade.within(cap); ++ell, grade = grade.plus(g))
            geometric.add(grade, static_cast<int>(a * ell), 1);
        acc = series_product(acc, geometric, cap);
    }
    return acc;
}

RationalSeriesExpr closed_form_two_gen(std::int64_t a, std::int64_t b) {
    if (a < 2) throw std::invalid_argument("two_gen: requires a >= 2");
    if (b <= a) throw std::invalid_argument("two_gen: requires a < b");
    if (b % a == 0) throw std::invalid_argument("two_gen: b must not be a multiple of a");
    const std::int64_t m = std::lcm(a, b);
    RationalSeriesExpr expr;
    expr.numerator = {{1, Element::scalar(a)}, {1, Element::scalar(b)}};
    expr.denominator = {{2, Element::scalar(m)}};
    return expr;
}

RationalSeriesExpr closed_form_pqr(std::int64_t p, std::int64_t q, std::int64_t r) {
    if (p < 2 || q <= p || r <= q)
        throw std::invalid_argument("pqr: requires 2 <= p < q < r");
    if (std::gcd(p, q) != 1 || std::gcd(p, r) != 1 || std::gcd(q, r) != 1)
        throw std::invalid_argument("pqr: p, q, r must be pairwise coprime");
    RationalSeriesExpr expr;
    expr.numerator = {{1, Element::scalar(p * q)},
                      {1, Element::scalar(p * r)},
                      {1, Element::scalar(q * r)}};
    expr.denominator = {{2, Element::scalar(p * q * r)}, {2, Element::scalar(p * q * r)}};
    return expr;
}

RationalSeriesExpr closed_form_arithmetic(std::int64_t a, std::int64_t d) {
    if (a < 2 || a % 2 != 0) throw std::invalid_argument("arithmetic: a must be even and positive");
    if (d < 1 || d % 2 != 1) throw std::invalid_argument("arithmetic: d must be odd and positive");
    if ((a + 2 * d) % a == 0)
        throw std::invalid_argument("arithmetic: a + 2d must not be a multiple of a");
    const std::int64_t m = std::lcm(a, a + 2 * d);
    RationalSeriesExpr expr;
    expr.numerator = {{1, Element::scalar(a)}, {1, Element::scalar(a + 2 * d)}};
    expr.denominator = {{2, Element::scalar(m)}, {1, Element::scalar(a + d)}};
    return expr;
}

namespace {

std::int64_t ipow(std::int64_t base, std::int64_t exp) {
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (out > (1ll << 40) / base)
            throw std::invalid_argument("geometric: parameters overflow the grade range");
        out *= base;
    }
    return out;
}

void check_geometric(std::int64_t p, std::int64_t q, std::int64_t n) {
    if (p < 2 || q <= p) throw std::invalid_argument("geometric: requires 2 <= p < q");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("geometric: p, q must be coprime");
    if (n < 1) throw std::invalid_argument("geometric: requires n >= 1");
}

}  // namespace

RationalSeriesExpr closed_form_geometric(std::int64_t p, std::int64_t q, std::int64_t n) {
    check_geometric(p, q, n);
    RationalSeriesExpr expr;
    for (std::int64_t i = 0; i <= n; ++i)
        expr.numerator.push_back({1, Element::scalar(ipow(p, n - i) * ipow(q, i))});
    for (std::int64_t i = 1; i <= n; ++i)
        expr.denominator.push_back({2, Element::scalar(ipow(p, n - i + 1) * ipow(q, i))});
    return expr;
}

RationalSeriesExpr closed_form_geometric_p2(std::int64_t q, std::int64_t n) {
    check_geometric(2, q, n);
    RationalSeriesExpr expr;
    expr.numerator.push_back({1, Element::scalar(ipow(2, n))});
    for (std::int64_t i = 1; i <= n; ++i)
        expr.denominator.push_back({1, Element::scalar(ipow(2, n - i) * ipow(q, i))});
    return expr;
}

namespace {

std::int64_t param(const std::map<std::string, std::int64_t>& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end())
        throw std::invalid_argument("closed_form: missing parameter '" + name + "'");
    return it->second;
}

}  // namespace

RationalSeriesExpr closed_form(const std::string& family,
                               const std::map<std::string, std::int64_t>& params) {
    if (family == "two_gen") return closed_form_two_gen(param(params, "a"), param(params, "b"));
    if (family == "pqr")
        return closed_form_pqr(param(params, "p"), param(params, "q"), param(params, "r"));
    if (family == "arithmetic")
        return closed_form_arithmetic(param(params, "a"), param(params, "d"));
    if (family == "geometric")
        return closed_form_geometric(param(params, "p"), param(params, "q"), param(params, "n"));
    throw std::invalid_argument("closed_form: unknown family '" + family + "'");
}

AffineMonoid family_monoid(const std::string& family,
                           const std::map<std::string, std::int64_t>& params) {
    if (family == "two_gen") {
        closed_form_two_gen(param(params, "a"), param(params, "b"));  // hypothesis check
        return AffineMonoid::numerical({param(params, "a"), param(params, "b")});
    }
    if (family == "pqr") {
        const auto p = param(params, "p"), q = param(params, "q"), r = param(params, "r");
        closed_form_pqr(p, q, r);
        return AffineMonoid::numerical({p * q, p * r, q * r});
    }
    if (family == "arithmetic") {
        const auto a = param(params, "a"), d = param(params, "d");
        closed_form_arithmetic(a, d);
        return AffineMonoid::numerical({a, a + d, a + 2 * d});
    }
    if (family == "geometric") {
        const auto p = param(params, "p"), q = param(params, "q"), n = param(params, "n");
        check_geometric(p, q, n);
        std::vector<std::int64_t> gens;
        for (std::int64_t i = 0; i <= n; ++i) gens.push_back(ipow(p, n - i) * ipow(q, i));
        return AffineMonoid::numerical(gens);
    }
    throw std::invalid_argument("family_monoid: unknown family '" + family + "'");
}

MonoidSeries substitute_scale(const MonoidSeries& series, std::int64_t p) {
    if (p < 1) throw std::invalid_argument("series: scale factor must be positive");
    MonoidSeries out;
    out.cap = series.cap.scaled(p);
    for (const auto& [key, c] : series.terms) out.add(key.first.scaled(p), key.second, c);
    return out;
}

RationalSeriesExpr substitute_scale(const RationalSeriesExpr& expr, std::int64_t p) {
    if (p < 1) throw std::invalid_argument("series: scale factor must be positive");
    RationalSeriesExpr out;
    for (const auto& [a, g] : expr.numerator) out.numerator.push_back({a, g.scaled(p)});
    for (const auto& [a, g] : expr.denominator) out.denominator.push_back({a, g.scaled(p)});
    return out;
}

MonoidSeries realize_series(const ExtSeries& series, const NumericalRealization& real,
                            const Element& cap) {
    if (cap.dim() != 1)
        throw std::invalid_argument("series: realization grades are one-dimensional");
    MonoidSeries out;
    out.cap = cap;
    for (const auto& [key, c] : series.terms) {
        Element grade = real.grade(key.first);
        if (grade.within(cap)) out.add(grade, key.second, c);
    }
    return out;
}

}  // namespace frobcx
