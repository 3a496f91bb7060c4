#pragma once

#include <string>

#include "extension.hpp"
#include "frobenius.hpp"
#include "monoid.hpp"
#include "series.hpp"

namespace frobcx {

/// Monoid specification: {"dim": d, "generators": [[..], ..]}; for d = 1 the
/// shorthand {"generators": [2, 3]} is accepted.
AffineMonoid parse_monoid_spec(const std::string& json_text);

/// Extension specification: {"base": <monoid spec>, "rho": <int|array>,
/// "r": <int>}.
ExtMonoid parse_extension_spec(const std::string& json_text);

/// True when the JSON holds an extension spec (a "base" key) rather than a
/// plain monoid spec.
bool looks_like_extension_spec(const std::string& json_text);

/// Cap strings are JSON: a number for d = 1 or an array of d numbers.
Element parse_cap(const std::string& text, std::size_t dim);

// Betti tables serialize as (grade, i, betti) triples, nonzero entries only,
// in table order: TSV with exactly those columns, or the same triples as a
// JSON array.
std::string table_tsv(const BettiTable& table);
std::string table_tsv(const ExtBettiTable& table);
std::string table_json(const BettiTable& table);
std::string table_json(const ExtBettiTable& table);

/// Series as a JSON array of {"i", "grade", "coeff"} objects sorted by
/// (grade, i); the human-readable form is MonoidSeries::str().
std::string series_json(const MonoidSeries& series);
std::string series_json(const ExtSeries& series);

std::string report_json(const VerificationReport& report);
std::string report_json(const SuspensionReport& report);

}  // namespace frobcx
