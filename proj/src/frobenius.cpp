#include "frobenius.hpp"

#include <stdexcept>

#include "parallel.hpp"

namespace frobcx {

BettiVector frobenius_betti(const AffineMonoid& m, const Element& grade, const Field& field) {
    if (grade.is_zero() && grade.dim() == m.dim()) return BettiVector::delta(-2);
    return reduced_betti(order_complex(m.open_interval(grade)), field);
}

BettiVector frobenius_betti(const ExtMonoid& e, const ExtElement& grade, const Field& field) {
    if (grade.lambda.is_zero() && grade.k == 0 && grade.lambda.dim() == e.base().dim())
        return BettiVector::delta(-2);
    return reduced_betti(order_complex(e.open_interval(grade)), field);
}

BettiVector tor_betti(const AffineMonoid& m, const Element& grade, const Field& field) {
    return frobenius_betti(m, grade, field).shifted(2);
}

BettiVector tor_betti(const ExtMonoid& e, const ExtElement& grade, const Field& field) {
    return frobenius_betti(e, grade, field).shifted(2);
}

BettiTable betti_table(const AffineMonoid& m, const Element& cap, const Field& field) {
    const auto grades = m.elements_up_to(cap);
    BettiTable table;
    table.rows.resize(grades.size());
    parallel_for(grades.size(), [&](std::size_t i) {
        table.rows[i] = {grades[i], tor_betti(m, grades[i], field)};
    });
    return table;
}

ExtBettiTable betti_table(const ExtMonoid& e, const Element& lambda_cap, const Field& field) {
    const auto grades = e.elements_up_to(lambda_cap);
    ExtBettiTable table;
    table.rows.resize(grades.size());
    parallel_for(grades.size(), [&](std::size_t i) {
        table.rows[i] = {grades[i], tor_betti(e, grades[i], field)};
    });
    return table;
}

BettiVector predicted_ext_betti(const ExtMonoid& e, const ExtElement& grade,
                                const Field& field) {
    if (!e.contains(grade))
        throw std::invalid_argument("frobenius: predicted_ext_betti: grade not in extension");
    if (grade.k >= 2) return BettiVector{};

    const auto& base = e.base();
    BettiVector out;
    Element mu = grade.lambda;  // lambda - l * rho as l advances
    const std::int64_t top = base.ell_rho(e.rho(), grade.lambda);
    for (std::int64_t ell = 0;; ++ell) {
        out.accumulate(frobenius_betti(base, mu, field),
                       static_cast<int>(2 * ell + grade.k));
        if (ell == top) break;
        mu = *base.subtract(mu, e.rho());  // defined while ell < ell_rho(lambda)
    }
    return out;
}

VerificationReport verify_extension(const ExtMonoid& e, const Element& lambda_cap,
                                    const Field& field) {
    const auto grades = e.elements_up_to(lambda_cap);
    VerificationReport report;
    report.cap = lambda_cap;
    report.field = field.name();
    report.entries.resize(grades.size());

    parallel_for(grades.size(), [&](std::size_t i) {
        const auto& grade = grades[i];
        VerificationEntry entry;
        entry.grade = grade;
        if (grade.lambda.is_zero() && grade.k == 0) {
            entry.direct = BettiVector::delta(-2);
            entry.euler = 0;  // no complex on the grade-0 branch
        } else {
            auto complex = order_complex(e.open_interval(grade));
            entry.direct = reduced_betti(complex, field);
            entry.euler = euler_characteristic(complex);
        }
        entry.predicted = predicted_ext_betti(e, grade, field);
        entry.equal = entry.direct == entry.predicted;
        report.entries[i] = std::move(entry);
    });

    report.grades_checked = report.entries.size();
    for (const auto& entry : report.entries)
        if (!entry.equal) ++report.mismatches;
    report.pass = report.mismatches == 0;
    return report;
}

SuspensionReport check_suspension_prop(const ExtMonoid& e, const Element& lambda_cap,
                                       const Field& field) {
    if (e.r() != 2)
        throw std::invalid_argument("frobenius: suspension check requires r = 2");

    const auto lambdas = e.base().elements_up_to(lambda_cap);
    SuspensionReport report;
    report.cap = lambda_cap;
    report.field = field.name();
    report.entries.resize(lambdas.size());

    parallel_for(lambdas.size(), [&](std::size_t i) {
        SuspensionEntry entry;
        entry.lambda = lambdas[i];
        auto upper_complex = order_complex(e.open_interval(ExtElement{lambdas[i], 1}));
        entry.upper = reduced_betti(upper_complex, field);
        entry.euler_upper = euler_characteristic(upper_complex);
        if (lambdas[i].is_zero()) {
            entry.lower = BettiVector::delta(-2);
            entry.euler_lower = 0;
        } else {
            auto lower_complex = order_complex(e.open_interval(ExtElement{lambdas[i], 0}));
            entry.lower = reduced_betti(lower_complex, field);
            entry.euler_lower = euler_characteristic(lower_complex);
        }
        entry.equal = entry.upper == entry.lower.shifted(1);
        report.entries[i] = std::move(entry);
    });

    report.grades_checked = report.entries.size();
    for (const auto& entry : report.entries)
        if (!entry.equal) ++report.mismatches;
    report.pass = report.mismatches == 0;
    return report;
}

}  // namespace frobcx
