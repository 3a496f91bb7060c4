// Command-line front end. All numeric work happens behind the shared
// library's C interface; this translator only builds specs from flags,
// dispatches, and routes output.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "frobcx/frobcx.h"

namespace {

int fail(frobcx_status status) {
    const char* message = frobcx_last_error();
    if (message && *message) std::cerr << "frobcx: " << message << "\n";
    return static_cast<int>(status);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--spec", "cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// "2,3" -> ["2","3"]; validates integer syntax
std::vector<std::string> split_ints(const std::string& csv, const std::string& flag) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw CLI::ValidationError(flag, "expected a comma-separated list of integers");
        out.push_back(item);
    }
    if (out.empty()) throw CLI::ValidationError(flag, "expected at least one integer");
    return out;
}

std::string join(const std::vector<std::string>& items, char sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

std::string cap_json(const std::string& cap) {
    auto parts = split_ints(cap, "--cap");
    if (parts.size() == 1) return parts[0];
    return "[" + join(parts, ',') + "]";
}

struct StringOut {
    char* value = nullptr;
    ~StringOut() { frobcx_string_free(value); }
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw CLI::ValidationError("--out", "cannot write file '" + out_path + "'");
    out << text;
}

// Shared source flags: a d = 1 generator list, a spec file (monoid or
// extension), or base generators plus rho and r for an extension.
struct Source {
    std::string gens;
    std::string spec_path;
    std::string base_gens;
    std::string rho;
    std::int64_t r = 0;

    void attach(CLI::App* cmd, bool extension_only) {
        if (!extension_only)
            cmd->add_option("--gens", gens, "generators of a numerical semigroup, e.g. 2,3");
        cmd->add_option("--spec", spec_path, "JSON spec file (monoid or extension)");
        cmd->add_option("--base-gens", base_gens, "generators of the base semigroup");
        cmd->add_option("--rho", rho, "element whose r-th part is adjoined");
        cmd->add_option("--r", r, "denominator of the adjoined part");
    }

    bool wants_extension() const { return !base_gens.empty() || !rho.empty() || r != 0; }

    std::string monoid_spec() const {
        if (!gens.empty())
            return "{\"generators\":[" + join(split_ints(gens, "--gens"), ',') + "]}";
        if (!spec_path.empty()) return read_file(spec_path);
        throw CLI::ValidationError("--gens", "a monoid source (--gens or --spec) is required");
    }

    std::string extension_spec() const {
        if (!spec_path.empty() && !wants_extension()) return read_file(spec_path);
        if (base_gens.empty() || rho.empty() || r == 0)
            throw CLI::ValidationError(
                "--base-gens", "an extension source (--spec or --base-gens/--rho/--r) is required");
        std::string base = "{\"generators\":[" + join(split_ints(base_gens, "--base-gens"), ',') + "]}";
        std::string rho_json = cap_json(rho);  // same int-or-array syntax as caps
        return "{\"base\":" + base + ",\"rho\":" + rho_json + ",\"r\":" + std::to_string(r) + "}";
    }

    // true when the source denotes an extension (flags or a spec file with a base)
    bool is_extension() const {
        if (wants_extension()) return true;
        if (spec_path.empty()) return false;
        int ext = 0;
        std::string text = read_file(spec_path);
        if (frobcx_spec_kind(text.c_str(), &ext) != FROBCX_OK) return false;
        return ext == 1;
    }
};

using MonoidPtr = std::unique_ptr<frobcx_monoid, decltype(&frobcx_monoid_free)>;
using ExtensionPtr = std::unique_ptr<frobcx_extension, decltype(&frobcx_extension_free)>;

int run_table_or_series(const Source& source, const std::string& cap, const std::string& field,
                        const std::string& format, const std::string& out_path, bool series) {
    StringOut text;
    frobcx_status status;
    if (source.is_extension()) {
        frobcx_extension* raw = nullptr;
        status = frobcx_extension_parse(source.extension_spec().c_str(), &raw);
        if (status != FROBCX_OK) return fail(status);
        ExtensionPtr ext(raw, frobcx_extension_free);
        status = series ? frobcx_extension_poincare(ext.get(), cap_json(cap).c_str(),
                                                    field.c_str(), format.c_str(), &text.value)
                        : frobcx_extension_betti_table(ext.get(), cap_json(cap).c_str(),
                                                       field.c_str(), format.c_str(), &text.value);
    } else {
        frobcx_monoid* raw = nullptr;
        status = frobcx_monoid_parse(source.monoid_spec().c_str(), &raw);
        if (status != FROBCX_OK) return fail(status);
        MonoidPtr monoid(raw, frobcx_monoid_free);
        status = series ? frobcx_monoid_poincare(monoid.get(), cap_json(cap).c_str(),
                                                 field.c_str(), format.c_str(), &text.value)
                        : frobcx_monoid_betti_table(monoid.get(), cap_json(cap).c_str(),
                                                    field.c_str(), format.c_str(), &text.value);
    }
    if (status != FROBCX_OK) return fail(status);
    emit(text.value, out_path);
    return 0;
}

int run_check(const Source& source, const std::string& cap, const std::string& field,
              const std::string& out_path, bool suspension) {
    frobcx_extension* raw = nullptr;
    frobcx_status status = frobcx_extension_parse(source.extension_spec().c_str(), &raw);
    if (status != FROBCX_OK) return fail(status);
    ExtensionPtr ext(raw, frobcx_extension_free);

    StringOut report;
    int pass = 0;
    status = suspension
                 ? frobcx_suspension_check(ext.get(), cap_json(cap).c_str(), field.c_str(),
                                           &report.value, &pass)
                 : frobcx_verify_extension(ext.get(), cap_json(cap).c_str(), field.c_str(),
                                           &report.value, &pass);
    if (status != FROBCX_OK && status != FROBCX_MISMATCH) return fail(status);
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
    if (!out_path.empty()) emit(report.value, out_path);
    return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius complexes, Betti tables, and Poincare series of "
                 "finitely generated submonoids of N^d"};
    app.require_subcommand(1);

    std::string cap, field = "gf2", out_path, family;
    std::string betti_format = "tsv", poincare_format = "text", closed_format = "text";
    std::int64_t a = 0, b = 0, d = 0, n = 0, p = 0, q = 0, r_param = 0;

    Source betti_source;
    auto* betti = app.add_subcommand("betti", "Betti table of a monoid or extension");
    betti_source.attach(betti, false);
    betti->add_option("--cap", cap, "grade cap (integer, or comma list for d > 1)")->required();
    betti->add_option("--field", field, "gf2 | gf3 | gf5 | gf<p> | rational");
    betti->add_option("--format", betti_format, "tsv | json");
    betti->add_option("--out", out_path, "write the result to a file");

    Source poincare_source;
    auto* poincare = app.add_subcommand("poincare", "truncated Poincare series");
    poincare_source.attach(poincare, false);
    poincare->add_option("--cap", cap, "grade cap")->required();
    poincare->add_option("--field", field, "coefficient field");
    poincare->add_option("--format", poincare_format, "text | json");
    poincare->add_option("--out", out_path, "write the result to a file");

    Source verify_source;
    auto* verify = app.add_subcommand(
        "verify-extension", "compare direct homology with the wedge prediction on every grade");
    verify_source.attach(verify, true);
    verify->add_option("--cap", cap, "grade cap on the base component")->required();
    verify->add_option("--field", field, "coefficient field");
    verify->add_option("--out", out_path, "write the full JSON report to a file");

    Source suspension_source;
    auto* suspension = app.add_subcommand(
        "suspension-check", "check the half-shift suspension identity (r = 2 only)");
    suspension_source.attach(suspension, true);
    suspension->add_option("--cap", cap, "grade cap on the base component")->required();
    suspension->add_option("--field", field, "coefficient field");
    suspension->add_option("--out", out_path, "write the full JSON report to a file");

    auto add_family_options = [&](CLI::App* cmd) {
        cmd->add_option("--family", family, "two_gen | pqr | arithmetic | geometric")->required();
        cmd->add_option("--a", a, "family parameter a");
        cmd->add_option("--b", b, "family parameter b");
        cmd->add_option("--d", d, "family parameter d");
        cmd->add_option("--n", n, "family parameter n");
        cmd->add_option("--p", p, "family parameter p");
        cmd->add_option("--q", q, "family parameter q");
        cmd->add_option("--r", r_param, "family parameter r");
    };

    auto* closed = app.add_subcommand("closed-form",
                                      "rational closed form of a classical family");
    add_family_options(closed);
    closed->add_option("--cap", cap, "expand the closed form up to this grade");
    closed->add_option("--format", closed_format, "text | json (expansion only)");
    closed->add_option("--out", out_path, "write the result to a file");

    auto* compare = app.add_subcommand(
        "compare-series", "direct series vs. closed-form expansion for a family");
    add_family_options(compare);
    compare->add_option("--cap", cap, "grade cap")->required();
    compare->add_option("--field", field, "coefficient field");
    compare->add_option("--out", out_path, "write the comparison summary to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // malformed flags are invalid input
    }

    auto family_params = [&]() {
        std::string params = "{";
        bool first = true;
        auto put = [&](const char* name, std::int64_t value) {
            if (value == 0) return;
            if (!first) params += ',';
            first = false;
            params += std::string("\"") + name + "\":" + std::to_string(value);
        };
        put("a", a);
        put("b", b);
        put("d", d);
        put("n", n);
        put("p", p);
        put("q", q);
        put("r", r_param);
        return params + "}";
    };

    try {
        if (betti->parsed())
            return run_table_or_series(betti_source, cap, field, betti_format, out_path, false);
        if (poincare->parsed())
            return run_table_or_series(poincare_source, cap, field, poincare_format, out_path,
                                       true);
        if (verify->parsed()) return run_check(verify_source, cap, field, out_path, false);
        if (suspension->parsed()) return run_check(suspension_source, cap, field, out_path, true);
        if (closed->parsed()) {
            StringOut text;
            frobcx_status status =
                cap.empty()
                    ? frobcx_closed_form(family.c_str(), family_params().c_str(), &text.value)
                    : frobcx_closed_form_expand(family.c_str(), family_params().c_str(),
                                                cap_json(cap).c_str(), closed_format.c_str(),
                                                &text.value);
            if (status != FROBCX_OK) return fail(status);
            emit(text.value, out_path);
            return 0;
        }
        if (compare->parsed()) {
            StringOut summary;
            int equal = 0;
            frobcx_status status =
                frobcx_compare_series(family.c_str(), family_params().c_str(),
                                      cap_json(cap).c_str(), field.c_str(), &summary.value,
                                      &equal);
            if (status != FROBCX_OK && status != FROBCX_MISMATCH) return fail(status);
            std::cout << (equal ? "EQUAL" : "DIFFER") << "\n";
            if (!out_path.empty()) emit(summary.value, out_path);
            return static_cast<int>(status);
        }
    } catch (const CLI::Error& e) {
        std::cerr << "frobcx: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
