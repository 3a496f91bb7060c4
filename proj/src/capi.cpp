#include "frobcx/frobcx.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <new>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "extension.hpp"
#include "field.hpp"
#include "frobenius.hpp"
#include "monoid.hpp"
#include "series.hpp"
#include "specio.hpp"

struct frobcx_monoid {
    frobcx::AffineMonoid value;
};

struct frobcx_extension {
    frobcx::ExtMonoid value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename T>
T* require(T* value, const char* name) {
    if (!value) throw std::invalid_argument(std::string(name) + " must not be null");
    return value;
}

// Runs the body, translating exceptions into status codes + the thread-local
// error message.
template <typename Fn>
frobcx_status guarded(Fn&& body) {
    g_last_error.clear();
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return FROBCX_INVALID_INPUT;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return FROBCX_INTERNAL_ERROR;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FROBCX_INTERNAL_ERROR;
    }
}

std::map<std::string, std::int64_t> parse_params(const char* params_json) {
    auto j = nlohmann::json::parse(require(params_json, "params"), nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw std::invalid_argument("params: expected a JSON object");
    std::map<std::string, std::int64_t> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_number_integer())
            throw std::invalid_argument("params: '" + it.key() + "' must be an integer");
        out[it.key()] = it.value().get<std::int64_t>();
    }
    return out;
}

std::string format_table(const frobcx::BettiTable& table, const std::string& format) {
    if (format == "tsv") return frobcx::table_tsv(table);
    if (format == "json") return frobcx::table_json(table);
    throw std::invalid_argument("format: expected 'tsv' or 'json'");
}

std::string format_table(const frobcx::ExtBettiTable& table, const std::string& format) {
    if (format == "tsv") return frobcx::table_tsv(table);
    if (format == "json") return frobcx::table_json(table);
    throw std::invalid_argument("format: expected 'tsv' or 'json'");
}

std::string format_series(const frobcx::MonoidSeries& s, const std::string& format) {
    if (format == "text") return s.str();
    if (format == "json") return frobcx::series_json(s);
    throw std::invalid_argument("format: expected 'text' or 'json'");
}

std::string format_series(const frobcx::ExtSeries& s, const std::string& format) {
    if (format == "text") return s.str();
    if (format == "json") return frobcx::series_json(s);
    throw std::invalid_argument("format: expected 'text' or 'json'");
}

}  // namespace

extern "C" {

const char* frobcx_version(void) {
    return "1.0.0";
}

const char* frobcx_last_error(void) {
    return g_last_error.c_str();
}

void frobcx_string_free(char* s) {
    std::free(s);
}

frobcx_status frobcx_spec_kind(const char* spec_json, int* is_extension) {
    return guarded([&]() -> frobcx_status {
        require(is_extension, "is_extension");
        *is_extension = frobcx::looks_like_extension_spec(require(spec_json, "spec")) ? 1 : 0;
        return FROBCX_OK;
    });
}

frobcx_status frobcx_monoid_parse(const char* spec_json, frobcx_monoid** out) {
    return guarded([&]() -> frobcx_status {
        require(out, "out");
        *out = new frobcx_monoid{frobcx::parse_monoid_spec(require(spec_json, "spec"))};
        return FROBCX_OK;
    });
}

frobcx_status frobcx_monoid_from_generators(const int64_t* generators, size_t count,
                                            frobcx_monoid** out) {
    return guarded([&]() -> frobcx_status {
        require(out, "out");
        if (!generators || count == 0)
            throw std::invalid_argument("generators: at least one generator is required");
        std::vector<std::int64_t> gens(generators, generators + count);
        *out = new frobcx_monoid{frobcx::AffineMonoid::numerical(gens)};
        return FROBCX_OK;
    });
}

void frobcx_monoid_free(frobcx_monoid* m) {
    delete m;
}

frobcx_status frobcx_extension_parse(const char* spec_json, frobcx_extension** out) {
    return guarded([&]() -> frobcx_status {
        require(out, "out");
        *out = new frobcx_extension{frobcx::parse_extension_spec(require(spec_json, "spec"))};
        return FROBCX_OK;
    });
}

frobcx_status frobcx_extension_create(const frobcx_monoid* base, const int64_t* rho,
                                      size_t rho_len, int64_t r, frobcx_extension** out) {
    return guarded([&]() -> frobcx_status {
        require(out, "out");
        if (!base) throw std::invalid_argument("base must not be null");
        if (!rho || rho_len == 0) throw std::invalid_argument("rho must not be empty");
        frobcx::Element rho_elem{std::vector<std::int64_t>(rho, rho + rho_len)};
        *out = new frobcx_extension{
            frobcx::ExtMonoid(base->value, std::move(rho_elem), r)};
        return FROBCX_OK;
    });
}

void frobcx_extension_free(frobcx_extension* e) {
    delete e;
}

frobcx_status frobcx_monoid_betti_table(const frobcx_monoid* m, const char* cap_json,
                                        const char* field, const char* format, char** out) {
    return guarded([&]() -> frobcx_status {
        require(out, "out");
        if (!m) throw std::invalid_argument("monoid must not be null");
        auto cap = frobcx::parse_cap(require(cap_json, "cap"), m->value.dim());
        auto table = frobcx::betti_table(m->value, cap,
                                         frobcx::Field::parse(require(field, "field")));
        *out = dup_string(format_table(table, require(format, "format")));
        return FROBCX_OK;
    });
}

frobcx_status frobcx_extension_betti_table(const frobcx_extension* e, const char* cap_json,
                                           const char* field, const char* format, char** out) {
    return guarded([&]() -> frobcx_status {
        require(out, "out");
        if (!e) throw std::invalid_argument("extension must not be null");
        auto cap = frobcx::parse_cap(require(cap_json, "cap"), e->value.base().dim());
        auto table = frobcx::betti_table(e->value, cap,
                                         frobcx::Field::parse(require(field, "field")));
        *out = dup_string(format_table(table, require(format, "format")));
        return FROBCX_OK;
    });
}

frobcx_status frobcx_monoid_poincare(const frobcx_monoid* m, const char* cap_json,
                                     const char* field, const char* format, char** out) {
    return guarded([&]() -> frobcx_status {
        require(out, "out");
        if (!m) throw std::invalid_argument("monoid must not be null");
        auto cap = frobcx::parse_cap(require(cap_json, "cap"), m->value.dim());
        auto series = frobcx::direct_series(m->value, cap,
                                            frobcx::Field::parse(require(field, "field")));
        *out = dup_string(format_series(series, require(format, "format")));
        return FROBCX_OK;
    });
}

frobcx_status frobcx_extension_poincare(const frobcx_extension* e, const char* cap_json,
                                        const char* field, const char* format, char** out) {
    return guarded([&]() -> frobcx_status {
        require(out, "out");
        if (!e) throw std::invalid_argument("extension must not be null");
        auto cap = frobcx::parse_cap(require(cap_json, "cap"), e->value.base().dim());
        auto series = frobcx::direct_series(e->value, cap,
                                            frobcx::Field::parse(require(field, "field")));
        *out = dup_string(format_series(series, require(format, "format")));
        return FROBCX_OK;
    });
}

frobcx_status frobcx_verify_extension(const frobcx_extension* e, const char* cap_json,
                                      const char* field, char** report_json, int* pass) {
    return guarded([&]() -> frobcx_status {
        if (!e) throw std::invalid_argument("extension must not be null");
        auto cap = frobcx::parse_cap(require(cap_json, "cap"), e->value.base().dim());
        auto report = frobcx::verify_extension(e->value, cap,
                                               frobcx::Field::parse(require(field, "field")));
        if (pass) *pass = report.pass ? 1 : 0;
        if (report_json) *report_json = dup_string(frobcx::report_json(report));
        return report.pass ? FROBCX_OK : FROBCX_MISMATCH;
    });
}

frobcx_status frobcx_suspension_check(const frobcx_extension* e, const char* cap_json,
                                      const char* field, char** report_json, int* pass) {
    return guarded([&]() -> frobcx_status {
        if (!e) throw std::invalid_argument("extension must not be null");
        auto cap = frobcx::parse_cap(require(cap_json, "cap"), e->value.base().dim());
        auto report = frobcx::check_suspension_prop(
            e->value, cap, frobcx::Field::parse(require(field, "field")));
        if (pass) *pass = report.pass ? 1 : 0;
        if (report_json) *report_json = dup_string(frobcx::report_json(report));
        return report.pass ? FROBCX_OK : FROBCX_MISMATCH;
    });
}

frobcx_status frobcx_closed_form(const char* family, const char* params_json, char** out) {
    return guarded([&]() -> frobcx_status {
        require(out, "out");
        auto expr = frobcx::closed_form(require(family, "family"), parse_params(params_json));
        *out = dup_string(expr.str());
        return FROBCX_OK;
    });
}

frobcx_status frobcx_closed_form_expand(const char* family, const char* params_json,
                                        const char* cap_json, const char* format, char** out) {
    return guarded([&]() -> frobcx_status {
        require(out, "out");
        auto expr = frobcx::closed_form(require(family, "family"), parse_params(params_json));
        auto cap = frobcx::parse_cap(require(cap_json, "cap"), 1);
        auto series = frobcx::expand_closed_form(expr, cap);
        *out = dup_string(format_series(series, require(format, "format")));
        return FROBCX_OK;
    });
}

frobcx_status frobcx_compare_series(const char* family, const char* params_json,
                                    const char* cap_json, const char* field,
                                    char** summary_json, int* equal) {
    return guarded([&]() -> frobcx_status {
        const auto params = parse_params(params_json);
        const std::string family_name = require(family, "family");
        auto cap = frobcx::parse_cap(require(cap_json, "cap"), 1);
        auto monoid = frobcx::family_monoid(family_name, params);
        auto direct = frobcx::direct_series(monoid, cap,
                                            frobcx::Field::parse(require(field, "field")));
        auto expanded = frobcx::expand_closed_form(frobcx::closed_form(family_name, params), cap);
        const bool same = direct == expanded;
        if (equal) *equal = same ? 1 : 0;
        if (summary_json) {
            nlohmann::json summary{{"family", family_name},
                                   {"equal", same},
                                   {"direct_terms", direct.terms.size()},
                                   {"closed_form_terms", expanded.terms.size()}};
            *summary_json = dup_string(summary.dump());
        }
        return same ? FROBCX_OK : FROBCX_MISMATCH;
    });
}

}  // extern "C"
