#include "cli.hpp"

#include "dendrispec/energy.hpp"
#include "dendrispec/errors.hpp"
#include "dendrispec/poly_engine.hpp"
#include "dendrispec/serialize.hpp"
#include "dendrispec/spectra.hpp"
#include "dendrispec/tree_model.hpp"
#include "dendrispec/verification.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace dendrispec::cli {

namespace {

enum class Format { text, json, csv };

struct CommonOptions {
    std::string dendrimer;
    std::string tuple;
    std::string format = "text";
    std::string out_path;
    double tol = kDefaultRootTolerance;
};

struct Invocation {
    std::string command;
    Json params = Json::object();
    Json result;
    // Plain renderings; csv_header empty means csv is unsupported for the command.
    std::string text;
    std::string csv_header;
    std::vector<std::string> csv_rows;
    int exit_code = kExitOk;
};

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string optional_cell(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        q += c;
        if (c == '"') {
            q += '"';
        }
    }
    return q + "\"";
}

std::int64_t parse_integer(const std::string& text, const char* what) {
    std::int64_t v = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto res = std::from_chars(first, last, v);
    if (text.empty() || res.ec != std::errc() || res.ptr != last) {
        throw ValidationError(std::string("invalid integer in ") + what + ": '" + text + "'");
    }
    return v;
}

std::vector<std::int64_t> parse_integer_list(const std::string& text, const char* what) {
    std::vector<std::int64_t> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        values.push_back(parse_integer(item, what));
    }
    if (values.empty() || (!text.empty() && text.back() == ',')) {
        throw ValidationError(std::string("malformed list for ") + what + ": '" + text + "'");
    }
    return values;
}

struct Range {
    std::int64_t first = 0;
    std::int64_t last = -1;
};

Range parse_range(const std::string& text, const char* what) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const auto v = parse_integer(text, what);
        return {v, v};
    }
    return {parse_integer(text.substr(0, dots), what), parse_integer(text.substr(dots + 2), what)};
}

Format parse_format(const std::string& s) {
    if (s == "json") {
        return Format::json;
    }
    if (s == "csv") {
        return Format::csv;
    }
    return Format::text;
}

std::optional<std::size_t> env_max_n() {
    const char* raw = std::getenv("DENDRISPEC_MAX_N");
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    const auto v = parse_integer(raw, "DENDRISPEC_MAX_N");
    if (v <= 0) {
        throw ValidationError("DENDRISPEC_MAX_N must be positive");
    }
    return static_cast<std::size_t>(v);
}

struct SelectedTree {
    BalancedTreeSpec spec;
    Json params;
};

SelectedTree select_tree(const CommonOptions& o) {
    const bool has_d = !o.dendrimer.empty();
    const bool has_t = !o.tuple.empty();
    if (has_d == has_t) {
        throw ValidationError("exactly one of --dendrimer L,K or --tuple c1,c2,... is required");
    }
    if (has_d) {
        const auto lk = parse_integer_list(o.dendrimer, "--dendrimer");
        if (lk.size() != 2) {
            throw ValidationError("--dendrimer expects two integers L,K");
        }
        if (lk[0] < 1 || lk[0] > 1000000) {
            throw DomainError("dendrimer depth l must be in 1..1000000");
        }
        Json p;
        p["dendrimer"] = {{"l", lk[0]}, {"k", lk[1]}};
        return {dendrimer_spec(static_cast<int>(lk[0]), lk[1]), std::move(p)};
    }
    auto entries = parse_integer_list(o.tuple, "--tuple");
    Json p;
    p["tuple"] = entries;
    return {balanced_tree_from_tuple(CharacteristicTuple(std::move(entries))), std::move(p)};
}

void require_positive(double v, const char* what) {
    if (!(v > 0.0)) {
        throw ValidationError(std::string(what) + " must be positive");
    }
}

void add_common(CLI::App* sub, CommonOptions& o, bool tree_selector) {
    if (tree_selector) {
        sub->add_option("--dendrimer", o.dendrimer, "Dendrimer d(l,k) given as L,K");
        sub->add_option("--tuple", o.tuple, "Characteristic tuple c1,c2,...");
    }
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--tol", o.tol, "Root location tolerance");
    sub->add_option("--out", o.out_path, "Write output to FILE instead of standard output");
}

// charpoly ------------------------------------------------------------------

Invocation cmd_charpoly(const CommonOptions& o, bool expand_requested) {
    auto [spec, params] = select_tree(o);
    Invocation inv;
    inv.command = "charpoly";
    inv.params = std::move(params);
    inv.params["expand"] = expand_requested;

    const FactoredCharPoly fp = factored_charpoly(spec);
    inv.result["n"] = to_decimal(spec.total_vertices);
    inv.result["factors"] = to_json(fp);

    std::ostringstream text;
    text << "n = " << to_decimal(spec.total_vertices) << "\n";
    inv.csv_header = "kind,index,multiplicity,coeffs";
    for (const auto& f : fp.factors) {
        text << "Q_" << f.index << "(x) = " << f.poly.to_string() << "    multiplicity "
             << to_decimal(f.multiplicity) << "\n";
        std::string coeffs;
        for (const auto& c : f.poly.coefficients()) {
            coeffs += (coeffs.empty() ? "" : " ") + to_decimal(c);
        }
        inv.csv_rows.push_back("factor," + std::to_string(f.index) + "," +
                               to_decimal(f.multiplicity) + "," + coeffs);
    }
    if (expand_requested) {
        const auto cap = env_max_n().value_or(kDefaultExpandCap);
        const ExactPolynomial p = expand(fp, cap);
        inv.result["expanded"] = to_json(p);
        text << "expanded: " << p.to_string() << "\n";
        std::string coeffs;
        for (const auto& c : p.coefficients()) {
            coeffs += (coeffs.empty() ? "" : " ") + to_decimal(c);
        }
        inv.csv_rows.push_back("expanded,,1," + coeffs);
    }
    inv.text = text.str();
    return inv;
}

// spectrum ------------------------------------------------------------------

Invocation cmd_spectrum(const CommonOptions& o, bool raw_requested) {
    require_positive(o.tol, "--tol");
    auto [spec, params] = select_tree(o);
    Invocation inv;
    inv.command = "spectrum";
    inv.params = std::move(params);
    inv.params["tol"] = o.tol;
    inv.params["view"] = raw_requested ? "raw" : "collapsed";

    Spectrum s = spectrum(spec, o.tol);
    if (!raw_requested) {
        s = collapse(s);
    }
    inv.result = to_json(s);

    std::ostringstream text;
    text << "n = " << to_decimal(s.total_vertices) << ", " << s.entries.size()
         << (raw_requested ? " raw" : " distinct") << " entries\n";
    inv.csv_header = "value,multiplicity,factor,method";
    for (const auto& e : s.entries) {
        text << format_double(e.value) << "  x" << to_decimal(e.multiplicity) << "  (Q_"
             << e.factor_index << ", " << to_string(e.method) << ")\n";
        inv.csv_rows.push_back(format_double(e.value) + "," + to_decimal(e.multiplicity) + "," +
                               std::to_string(e.factor_index) + "," +
                               std::string(to_string(e.method)));
    }
    inv.text = text.str();
    return inv;
}

// energy --------------------------------------------------------------------

std::string interval_cells(const std::optional<Interval>& i) {
    return i ? format_double(i->lower) + "," + format_double(i->upper) : ",";
}

Invocation cmd_energy(const CommonOptions& o, bool bounds, double mu_tol) {
    require_positive(o.tol, "--tol");
    require_positive(mu_tol, "--mu-tol");
    auto [spec, params] = select_tree(o);
    Invocation inv;
    inv.command = "energy";
    inv.params = std::move(params);
    inv.params["tol"] = o.tol;
    inv.params["bounds"] = bounds;
    inv.params["mu_tol"] = mu_tol;

    const EnergyReport r = energy_report(spec, {.tol = o.tol, .mu_tol = mu_tol, .include_bounds = bounds});
    inv.result = to_json(r);

    std::ostringstream text;
    text << "energy: " << format_double(r.energy) << " (" << to_string(r.method) << ")\n";
    if (r.normalized_ratio) {
        text << "ratio E/(k-1)^(l-1/2): " << format_double(*r.normalized_ratio) << "\n";
    }
    if (r.thm51) {
        text << "series bounds: [" << format_double(r.thm51->lower) << ", "
             << format_double(r.thm51->upper) << "]"
             << (r.thm51_lower_negative ? " (lower bound negative)" : "") << "\n";
    }
    if (r.thmB) {
        text << "leading-order bounds: [" << format_double(r.thmB->lower) << ", "
             << format_double(r.thmB->upper) << "]\n";
    }
    if (r.mu) {
        text << "mu_k: " << format_double(*r.mu) << "\n";
    }
    inv.text = text.str();

    inv.csv_header = "l,k,energy,method,ratio,thm51_lower,thm51_upper,thmB_lower,thmB_upper,mu_k";
    const std::string l = r.dendrimer ? std::to_string(r.dendrimer->l) : "";
    const std::string k = r.dendrimer ? std::to_string(r.dendrimer->k) : "";
    inv.csv_rows.push_back(l + "," + k + "," + format_double(r.energy) + "," +
                           std::string(to_string(r.method)) + "," +
                           optional_cell(r.normalized_ratio) + "," + interval_cells(r.thm51) + "," +
                           interval_cells(r.thmB) + "," + optional_cell(r.mu));
    return inv;
}

// sweep ---------------------------------------------------------------------

Invocation cmd_sweep(const CommonOptions& o, const std::string& l_text, const std::string& k_text,
                     double mu_tol) {
    require_positive(o.tol, "--tol");
    require_positive(mu_tol, "--mu-tol");
    const Range lr = parse_range(l_text, "--l-range");
    const Range kr = parse_range(k_text, "--k-range");
    Invocation inv;
    inv.command = "sweep";
    inv.params["l_range"] = {lr.first, lr.last};
    inv.params["k_range"] = {kr.first, kr.last};
    inv.params["tol"] = o.tol;
    inv.params["mu_tol"] = mu_tol;

    inv.csv_header =
        "l,k,energy,ratio,thm51_lower,thm51_upper,thmB_lower,thmB_upper,mu_k,dist_to_2,dist_to_mu";
    Json rows = Json::array();
    std::ostringstream text;
    for (std::int64_t l = lr.first; l <= lr.last; ++l) {
        for (std::int64_t k = kr.first; k <= kr.last; ++k) {
            if (l < 1 || l > 1000000) {
                throw DomainError("sweep depth l must be in 1..1000000");
            }
            const auto spec = dendrimer_spec(static_cast<int>(l), k);
            const EnergyReport r = energy_report(spec, {.tol = o.tol, .mu_tol = mu_tol});
            const double ratio = *r.normalized_ratio;
            const double d2 = std::fabs(ratio - 2.0);
            // NaN stands for "no mu_k" (k = 2) until the cells are written.
            const double dmu = r.mu ? std::fabs(ratio - *r.mu) : std::nan("");
            const bool has_mu = !std::isnan(dmu);

            Json row;
            row["l"] = l;
            row["k"] = k;
            row["energy"] = r.energy;
            row["ratio"] = ratio;
            row["thm51"] = r.thm51 ? to_json(*r.thm51) : Json(nullptr);
            row["thmB"] = r.thmB ? to_json(*r.thmB) : Json(nullptr);
            row["mu_k"] = r.mu ? Json(*r.mu) : Json(nullptr);
            row["dist_to_2"] = d2;
            row["dist_to_mu"] = has_mu ? Json(dmu) : Json(nullptr);
            rows.push_back(std::move(row));

            inv.csv_rows.push_back(std::to_string(l) + "," + std::to_string(k) + "," +
                                   format_double(r.energy) + "," + format_double(ratio) + "," +
                                   interval_cells(r.thm51) + "," + interval_cells(r.thmB) + "," +
                                   optional_cell(r.mu) + "," + format_double(d2) + "," +
                                   (has_mu ? format_double(dmu) : std::string()));
            text << "l=" << l << " k=" << k << "  E=" << format_double(r.energy)
                 << "  ratio=" << format_double(ratio);
            if (has_mu) {
                text << "  |ratio-mu_k|=" << format_double(dmu);
            }
            text << "\n";
        }
    }
    inv.result["rows"] = std::move(rows);
    inv.text = text.str();
    return inv;
}

// verify --------------------------------------------------------------------

#ifdef DENDRISPEC_DEBUG_FLAGS
// Replaces the outermost factor of d(3,k) by the published but incorrect
// quartic x^4 - 2(k+1)x^2 + 4(k-1).
void inject_erroneous_quartic(const BalancedTreeSpec& spec, FactoredCharPoly& fp) {
    const auto d = as_dendrimer(spec.tuple);
    if (!d || d->l != 3) {
        return;
    }
    const long k = static_cast<long>(d->k);
    for (auto& f : fp.factors) {
        if (f.index == 4) {
            f.poly = ExactPolynomial({4 * (k - 1), 0, -2 * (k + 1), 0, 1});
        }
    }
}
#endif

Invocation cmd_verify(const CommonOptions& o, std::int64_t max_n, std::uint64_t seed,
                      bool inject_bug) {
    if (max_n < 1) {
        throw ValidationError("--max-n must be positive");
    }
    Invocation inv;
    inv.command = "verify";
    inv.params["max_n"] = max_n;
    inv.params["seed"] = seed;

    VerifyOptions options;
    options.max_n = static_cast<std::size_t>(max_n);
    options.seed = seed;
    if (const auto cap = env_max_n()) {
        options.oracle_cap = *cap;
    }
#ifdef DENDRISPEC_DEBUG_FLAGS
    inv.params["inject_bokhary_bug"] = inject_bug;
    if (inject_bug) {
        options.factor_hook = inject_erroneous_quartic;
    }
#else
    (void)inject_bug;
#endif
    (void)o;

    const CorpusVerification v = verify_corpus(options);
    Json trees = Json::array();
    std::ostringstream text;
    inv.csv_header = "tree,n,charpoly,spectrum,energy,spectrum_max_diff,energy_diff,pass";
    for (const auto& t : v.trees) {
        trees.push_back(to_json(t));
        auto flag = [](bool b) { return b ? "pass" : "FAIL"; };
        text << (t.ok() ? "PASS " : "FAIL ") << t.label << " n=" << t.n
             << "  charpoly=" << flag(t.charpoly_ok) << " spectrum=" << flag(t.spectrum_ok)
             << " energy=" << flag(t.energy_ok);
        if (!t.detail.empty()) {
            text << "  [" << t.detail << "]";
        }
        text << "\n";
        inv.csv_rows.push_back(csv_quote(t.label) + "," + std::to_string(t.n) + "," +
                               flag(t.charpoly_ok) + "," + flag(t.spectrum_ok) + "," +
                               flag(t.energy_ok) + "," + format_double(t.spectrum_max_diff) + "," +
                               format_double(t.energy_diff) + "," + flag(t.ok()));
    }
    text << v.trees.size() << " trees, " << v.failures() << " failed\n";
    inv.result["trees"] = std::move(trees);
    inv.result["total"] = v.trees.size();
    inv.result["failures"] = v.failures();
    inv.result["pass"] = v.ok();
    inv.text = text.str();
    inv.exit_code = v.ok() ? kExitOk : kExitVerificationFailed;
    return inv;
}

// output --------------------------------------------------------------------

void render(const Invocation& inv, Format format, std::ostream& os) {
    switch (format) {
        case Format::json: {
            Json envelope;
            envelope["command"] = inv.command;
            envelope["params"] = inv.params;
            envelope["result"] = inv.result;
            envelope["version"] = kVersion;
            os << envelope.dump(2) << "\n";
            break;
        }
        case Format::csv:
            os << inv.csv_header << "\n";
            for (const auto& row : inv.csv_rows) {
                os << row << "\n";
            }
            break;
        case Format::text:
            os << inv.text;
            break;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Characteristic polynomials, spectra and energy of balanced trees and dendrimers",
                 "dendrispec"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    CommonOptions common;
    bool expand_requested = false;
    bool collapsed = false;
    bool raw = false;
    bool bounds = false;
    double mu_tol = kDefaultMuTolerance;
    std::string l_range;
    std::string k_range;
    std::int64_t max_n = static_cast<std::int64_t>(kDefaultCorpusMaxN);
    std::uint64_t seed = kDefaultCorpusSeed;
    bool inject_bug = false;

    auto* charpoly = app.add_subcommand("charpoly", "Factored characteristic polynomial");
    add_common(charpoly, common, true);
    charpoly->add_flag("--expand", expand_requested, "Also print the expanded polynomial");

    auto* spec_cmd = app.add_subcommand("spectrum", "Adjacency spectrum with multiplicities");
    add_common(spec_cmd, common, true);
    auto* collapsed_flag =
        spec_cmd->add_flag("--collapsed", collapsed, "Merge equal eigenvalues (default)");
    spec_cmd->add_flag("--raw", raw, "Keep one entry per factor root")->excludes(collapsed_flag);

    auto* energy = app.add_subcommand("energy", "Graph energy report");
    add_common(energy, common, true);
    energy->add_flag("--bounds", bounds, "Include analytic bounds (dendrimers, k >= 3)");
    energy->add_option("--mu-tol", mu_tol, "Tolerance for the asymptotic constant mu_k");

    auto* sweep = app.add_subcommand("sweep", "Energy and bounds over an (l, k) grid of dendrimers");
    add_common(sweep, common, false);
    sweep->add_option("--l-range", l_range, "Depth range a..b")->required();
    sweep->add_option("--k-range", k_range, "Degree range a..b")->required();
    sweep->add_option("--mu-tol", mu_tol, "Tolerance for the asymptotic constant mu_k");

    auto* verify = app.add_subcommand("verify", "Compare against the brute-force oracle");
    add_common(verify, common, false);
    verify->add_option("--max-n", max_n, "Largest tree in the corpus");
    verify->add_option("--seed", seed, "Seed for the random tuples");
#ifdef DENDRISPEC_DEBUG_FLAGS
    verify->add_flag("--inject-bokhary-bug", inject_bug,
                     "Substitute the erroneous d(3,k) quartic (debug builds only)");
#endif

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        Invocation inv;
        if (charpoly->parsed()) {
            inv = cmd_charpoly(common, expand_requested);
        } else if (spec_cmd->parsed()) {
            inv = cmd_spectrum(common, raw);
        } else if (energy->parsed()) {
            inv = cmd_energy(common, bounds, mu_tol);
        } else if (sweep->parsed()) {
            inv = cmd_sweep(common, l_range, k_range, mu_tol);
        } else {
            inv = cmd_verify(common, max_n, seed, inject_bug);
        }

        const Format format = parse_format(common.format);
        if (common.out_path.empty()) {
            render(inv, format, out);
        } else {
            std::ofstream file(common.out_path);
            if (!file) {
                err << "error: cannot open " << common.out_path << " for writing\n";
                return kExitInvalidInput;
            }
            render(inv, format, file);
        }
        return inv.exit_code;
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
}

}  // namespace dendrispec::cli
