#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "element.hpp"
#include "extension.hpp"
#include "field.hpp"
#include "monoid.hpp"

namespace frobcx {

/// A truncated multigraded series with exact nonnegative integer
/// coefficients: sum of c * t^i z^grade terms. Every stored grade is
/// componentwise at most the cap; the homological degree i is never capped
/// (it is finite per grade on its own).
struct MonoidSeries {
    Element cap;
    std::map<std::pair<Element, int>, long long> terms;  // (grade, i) -> coeff

    long long coeff(const Element& grade, int i) const;
    void add(const Element& grade, int i, long long c);

    /// Human-readable polynomial, terms sorted by (grade, i).
    std::string str() const;

    friend bool operator==(const MonoidSeries&, const MonoidSeries&) = default;
};

/// The extension-monoid counterpart; grades are (lambda, k) pairs and the
/// cap bounds the lambda component.
struct ExtSeries {
    Element lambda_cap;
    std::int64_t r = 0;
    std::map<std::pair<ExtElement, int>, long long> terms;

    long long coeff(const ExtElement& grade, int i) const;
    void add(const ExtElement& grade, int i, long long c);

    std::string str() const;

    friend bool operator==(const ExtSeries&, const ExtSeries&) = default;
};

/// A rational series expression: the product of (1 + t^a z^g) over the
/// numerator factors divided by the product of (1 - t^a z^g) over the
/// denominator factors (with multiplicity). Denominator grades must be
/// nonzero so that geometric expansion terminates under any cap.
struct RationalSeriesExpr {
    std::vector<std::pair<int, Element>> numerator;
    std::vector<std::pair<int, Element>> denominator;

    std::string str() const;
};

/// Tor-graded series read off the Betti table; exact integers.
MonoidSeries direct_series(const AffineMonoid& m, const Element& cap, const Field& field);
ExtSeries direct_series(const ExtMonoid& e, const Element& lambda_cap, const Field& field);

/// Transfer to the extension monoid: multiplies P by the geometric series in
/// t^2 z^rho and by (1 + t z^(rho r-th part)), with extension-pair grades.
/// P must have been computed with a cap at least the target cap.
ExtSeries extension_series(const MonoidSeries& base_series, const Element& rho,
                           std::int64_t r, const Element& cap);

/// Exact truncated expansion of a rational expression.
MonoidSeries expand_closed_form(const RationalSeriesExpr& expr, const Element& cap);

/// Closed forms for the classical numerical-semigroup families. Parameter
/// hypotheses are checked; violations name the failed condition.
RationalSeriesExpr closed_form_two_gen(std::int64_t a, std::int64_t b);
RationalSeriesExpr closed_form_pqr(std::int64_t p, std::int64_t q, std::int64_t r);
RationalSeriesExpr closed_form_arithmetic(std::int64_t a, std::int64_t d);
RationalSeriesExpr closed_form_geometric(std::int64_t p, std::int64_t q, std::int64_t n);

/// The collapsed form of the geometric family at p = 2:
/// (1 + t z^(2^n)) / prod_i (1 - t z^(2^(n-i) q^i)).
RationalSeriesExpr closed_form_geometric_p2(std::int64_t q, std::int64_t n);

/// Name-based dispatch used by the CLI and the C API. Families: "two_gen"
/// (a, b), "pqr" (p, q, r), "arithmetic" (a, d), "geometric" (p, q, n).
RationalSeriesExpr closed_form(const std::string& family,
                               const std::map<std::string, std::int64_t>& params);

/// The numerical semigroup each family describes.
AffineMonoid family_monoid(const std::string& family,
                           const std::map<std::string, std::int64_t>& params);

/// Grade substitution z -> z^p.
MonoidSeries substitute_scale(const MonoidSeries& series, std::int64_t p);
RationalSeriesExpr substitute_scale(const RationalSeriesExpr& expr, std::int64_t p);

/// Pushes an extension series through a numerical realization, keeping the
/// terms whose realized grade stays under the cap.
MonoidSeries realize_series(const ExtSeries& series, const NumericalRealization& real,
                            const Element& cap);

/// Truncated product of two series over the same dimension.
MonoidSeries series_product(const MonoidSeries& a, const MonoidSeries& b, const Element& cap);

/// The constant series 1 at the given cap.
MonoidSeries series_one(const Element& cap);

}  // namespace frobcx
