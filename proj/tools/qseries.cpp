// qseries -- exact integer q-series engine for t-core partition tuple
// counting functions.
//
//   expand   coefficient table of a family or eta quotient
//   verify   run the identity catalog, one row per entry
//   scan     search coefficient streams for congruences F(an+b) == 0 (mod m)
//   omega    representation counts x^2-block + 3 y^2-block (theta or lattice)
//   oracle   brute-force t-core tuple counts (independent cross-check)
//
// Data rows go to stdout (tsv, csv or json-lines); diagnostics to stderr.
// Exit codes: 0 success / all-pass, 1 verification or runtime failure,
// 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qseries/catalog.hpp"
#include "qseries/eta_theta.hpp"
#include "qseries/partitions.hpp"
#include "qseries/quadforms.hpp"
#include "qseries/scanner.hpp"
#include "qseries/series.hpp"

using json = nlohmann::ordered_json;
using namespace qseries;

namespace {

enum class Format { tsv, csv, jsonl };

Format parse_format(const std::string& f) {
    if (f == "tsv") return Format::tsv;
    if (f == "csv") return Format::csv;
    if (f == "json-lines") return Format::jsonl;
    throw CLI::ValidationError("--format", "unknown format '" + f + "'");
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

char sep_of(Format f) { return f == Format::csv ? ',' : '\t'; }

void print_header(Format fmt, const std::vector<std::string>& keys) {
    if (fmt == Format::jsonl) return;
    for (size_t i = 0; i < keys.size(); ++i) {
        if (i) std::cout << sep_of(fmt);
        std::cout << keys[i];
    }
    std::cout << '\n';
}

// A (family | eta) selector with a canonical name usable as a cache id.
struct SeriesChoice {
    std::string name;
    std::function<IntSeries(int)> expand;
};

SeriesChoice parse_series_choice(const std::string& text) {
    if (text == "a3") return {"a3", [](int N) { return family_series({3, 1}, N); }};
    if (text == "A3") return {"A3", [](int N) { return family_series({3, 2}, N); }};
    if (text == "B3") return {"B3", [](int N) { return family_series({3, 3}, N); }};
    if (text.rfind("a3k:", 0) == 0) {
        const std::string arg = text.substr(4);
        char* end = nullptr;
        long k = std::strtol(arg.c_str(), &end, 10);
        if (arg.empty() || end != arg.c_str() + arg.size() || k < 1)
            throw UsageError("bad tuple length in family '" + text + "'");
        return {"a3k:" + std::to_string(k), [k](int N) {
                    return family_series({3, static_cast<int>(k)}, N);
                }};
    }
    if (text.rfind("eta:", 0) == 0) {
        EtaQuotientSpec spec;
        try {
            spec = EtaQuotientSpec::parse(text.substr(4));
        } catch (const QSeriesError& e) {
            throw UsageError(e.what());
        }
        return {"eta:" + spec.to_string(),
                [spec](int N) { return eta_quotient(spec, N); }};
    }
    throw UsageError("unknown family '" + text +
                     "' (expected a3 | A3 | B3 | a3k:<k> | eta:<k:e,...>)");
}

std::string sanitize_filename(const std::string& name) {
    std::string out;
    for (char ch : name)
        out += (std::isalnum(static_cast<unsigned char>(ch)) || ch == '.' ||
                ch == '-' || ch == '_')
                   ? ch
                   : '_';
    return out;
}

// Load from the cache when present, else compute and store. Cached series
// are exact, so replay is byte-identical to recomputation.
IntSeries expand_with_cache(const SeriesChoice& choice, int order,
                            const std::string& cache_dir) {
    if (cache_dir.empty()) return choice.expand(order);
    std::filesystem::create_directories(cache_dir);
    std::filesystem::path path =
        std::filesystem::path(cache_dir) /
        (sanitize_filename(choice.name) + ".o" + std::to_string(order) + ".qs");
    if (std::filesystem::exists(path)) {
        try {
            std::string stored;
            IntSeries s = load_series(path.string(), &stored);
            if (stored == choice.name && s.order() == order) return s;
        } catch (const QSeriesError& e) {
            std::cerr << "note: ignoring unreadable cache file " << path
                      << ": " << e.what() << '\n';
        }
        // stale, foreign or unreadable file: recompute and overwrite
    }
    IntSeries s = choice.expand(order);
    save_series(path.string(), s, choice.name);
    return s;
}

void emit_value_rows(Format fmt, const IntSeries& s) {
    print_header(fmt, {"n", "value"});
    for (int n = 0; n <= s.order(); ++n) {
        if (fmt == Format::jsonl) {
            json row;
            row["n"] = n;
            row["value"] = s.coeffs()[n].get_str();
            std::cout << row.dump() << '\n';
        } else {
            std::cout << n << sep_of(fmt) << s.coeffs()[n].get_str() << '\n';
        }
    }
}

int cmd_expand(const std::string& family, int order, Format fmt,
               const std::string& cache_dir) {
    SeriesChoice choice = parse_series_choice(family);
    IntSeries s = expand_with_cache(choice, order, cache_dir);
    emit_value_rows(fmt, s);
    return 0;
}

int cmd_verify(int order, const std::string& filter, Format fmt) {
    for (char ch : filter)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '*' &&
            ch != '?' && ch != '.' && ch != '_' && ch != '-')
            throw UsageError(std::string("bad filter character '") + ch + "'");
    std::vector<VerificationReport> reports = verify_all(order, filter);
    print_header(fmt, {"id", "verdict", "mismatch", "ms"});
    bool all_pass = true;
    for (const VerificationReport& r : reports) {
        all_pass = all_pass && r.pass;
        long ms = std::lround(r.millis);
        if (fmt == Format::jsonl) {
            json row;
            row["id"] = r.id;
            row["verdict"] = r.pass ? "pass" : "fail";
            if (r.pass) row["mismatch"] = nullptr;
            else row["mismatch"] = r.mismatch_index;
            row["ms"] = ms;
            std::cout << row.dump() << '\n';
        } else {
            std::cout << r.id << sep_of(fmt) << (r.pass ? "pass" : "fail")
                      << sep_of(fmt);
            if (!r.pass && r.error.empty()) std::cout << r.mismatch_index;
            std::cout << sep_of(fmt) << ms << '\n';
        }
        if (!r.error.empty()) std::cerr << r.error << '\n';
        else if (!r.pass)
            std::cerr << r.id << ": first mismatch at index "
                      << r.mismatch_index << ": lhs=" << r.lhs_value
                      << " rhs=" << r.rhs_value << '\n';
    }
    return all_pass ? 0 : 1;
}

int cmd_scan(const std::string& family, int order, int max_step,
             int min_evidence, Format fmt, const std::string& cache_dir) {
    SeriesChoice choice = parse_series_choice(family);
    IntSeries s = expand_with_cache(choice, order, cache_dir);
    ScanResult result = scan(s, max_step, min_evidence);
    print_header(fmt, {"step", "residue", "modulus", "evidence", "status"});
    for (const CongruenceClaim& cl : result.claims) {
        if (fmt == Format::jsonl) {
            json row;
            row["step"] = cl.step;
            row["residue"] = cl.residue;
            row["modulus"] = cl.modulus.get_str();
            row["evidence"] = cl.evidence;
            row["status"] = status_name(cl.status);
            std::cout << row.dump() << '\n';
        } else {
            char sep = sep_of(fmt);
            std::cout << cl.step << sep << cl.residue << sep
                      << cl.modulus.get_str() << sep << cl.evidence << sep
                      << status_name(cl.status) << '\n';
        }
    }
    for (const auto& [a, b] : result.zero_classes)
        std::cerr << "note: progression " << a << "n+" << b
                  << " is identically zero to order " << order << '\n';
    return 0;
}

int cmd_omega(int k, int upto, const std::string& method, Format fmt) {
    if (method != "theta" && method != "enumerate")
        throw UsageError("unknown method '" + method +
                         "' (expected theta | enumerate)");
    print_header(fmt, {"n", "value"});
    IntSeries s(0);
    if (method == "theta") s = omega_series(k, upto);
    for (int n = 0; n <= upto; ++n) {
        Integer val = (method == "theta") ? s.coefficient(n)
                                          : omega_enumerate(k, n);
        if (fmt == Format::jsonl) {
            json row;
            row["n"] = n;
            row["value"] = val.get_str();
            std::cout << row.dump() << '\n';
        } else {
            std::cout << n << sep_of(fmt) << val.get_str() << '\n';
        }
    }
    return 0;
}

int cmd_oracle(int t, int k, int upto, Format fmt) {
    print_header(fmt, {"n", "value"});
    for (int n = 0; n <= upto; ++n) {
        Integer val = tuple_oracle(t, k, n);
        if (fmt == Format::jsonl) {
            json row;
            row["n"] = n;
            row["value"] = val.get_str();
            std::cout << row.dump() << '\n';
        } else {
            std::cout << n << sep_of(fmt) << val.get_str() << '\n';
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact integer q-series engine for 3-core partition triples"};
    app.require_subcommand(1);

    std::string default_cache;
    if (const char* env = std::getenv("QSERIES_CACHE")) default_cache = env;

    struct Common {
        std::string format = "tsv";
        std::string cache_dir;
    };
    auto add_common = [&](CLI::App* sub, Common& c, bool with_cache = false) {
        c.cache_dir = default_cache;
        sub->add_option("--format", c.format, "tsv | csv | json-lines")
            ->default_val("tsv");
        if (with_cache)
            sub->add_option("--cache-dir", c.cache_dir,
                            "series cache directory (env QSERIES_CACHE)");
    };

    // expand
    auto* expand = app.add_subcommand("expand", "coefficient table");
    std::string ex_family, ex_eta;
    int ex_upto = -1;
    Common ex_common;
    expand->add_option("--family", ex_family, "a3 | A3 | B3 | a3k:<k> | eta:<spec>");
    expand->add_option("--eta", ex_eta, "eta quotient spec k1:e1,k2:e2,...");
    expand->add_option("--upto", ex_upto, "truncation order")->required();
    add_common(expand, ex_common, true);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the identity catalog");
    int vf_order = 0;
    std::string vf_filter;
    Common vf_common;
    verify_cmd->add_option("--order", vf_order, "truncation order")->required();
    verify_cmd->add_option("--filter", vf_filter, "glob over entry ids");
    add_common(verify_cmd, vf_common);

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "congruence scan");
    std::string sc_family;
    int sc_order = 0, sc_max_step = 0, sc_min_evidence = 10;
    Common sc_common;
    scan_cmd->add_option("--family", sc_family)->required();
    scan_cmd->add_option("--order", sc_order, "truncation order")->required();
    scan_cmd->add_option("--max-step", sc_max_step)->required();
    scan_cmd->add_option("--min-evidence", sc_min_evidence)->default_val(10);
    add_common(scan_cmd, sc_common, true);

    // omega
    auto* omega_cmd = app.add_subcommand("omega", "representation counts");
    int om_k = 0, om_upto = -1;
    std::string om_method = "theta";
    Common om_common;
    omega_cmd->add_option("-k,--k", om_k)->required();
    omega_cmd->add_option("--upto", om_upto)->required();
    omega_cmd->add_option("--method", om_method, "theta | enumerate")
        ->default_val("theta");
    add_common(omega_cmd, om_common);

    // oracle
    auto* oracle_cmd =
        app.add_subcommand("oracle", "brute-force t-core tuple counts");
    int or_t = 0, or_k = 0, or_upto = -1;
    Common or_common;
    oracle_cmd->add_option("--t", or_t)->required();
    oracle_cmd->add_option("-k,--k", or_k)->required();
    oracle_cmd->add_option("--upto", or_upto)->required();
    add_common(oracle_cmd, or_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (expand->parsed()) {
            if (ex_family.empty() == ex_eta.empty())
                throw UsageError("expand needs exactly one of --family / --eta");
            if (ex_upto < 0) throw UsageError("--upto must be >= 0");
            std::string family =
                ex_family.empty() ? "eta:" + ex_eta : ex_family;
            return cmd_expand(family, ex_upto, parse_format(ex_common.format),
                              ex_common.cache_dir);
        }
        if (verify_cmd->parsed()) {
            if (vf_order < 1) throw UsageError("--order must be >= 1");
            return cmd_verify(vf_order, vf_filter, parse_format(vf_common.format));
        }
        if (scan_cmd->parsed()) {
            if (sc_order < 1 || sc_max_step < 1 || sc_min_evidence < 2)
                throw UsageError("scan needs --order >= 1, --max-step >= 1, "
                                 "--min-evidence >= 2");
            return cmd_scan(sc_family, sc_order, sc_max_step, sc_min_evidence,
                            parse_format(sc_common.format), sc_common.cache_dir);
        }
        if (omega_cmd->parsed()) {
            if (om_k < 1 || om_upto < 0)
                throw UsageError("omega needs -k >= 1 and --upto >= 0");
            return cmd_omega(om_k, om_upto, om_method,
                             parse_format(om_common.format));
        }
        if (oracle_cmd->parsed()) {
            if (or_t < 2 || or_k < 1 || or_upto < 0)
                throw UsageError("oracle needs --t >= 2, -k >= 1, --upto >= 0");
            return cmd_oracle(or_t, or_k, or_upto,
                              parse_format(or_common.format));
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
