#include "symhodge/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "symhodge/identities.hpp"
#include "symhodge/json_io.hpp"

namespace symhodge {

namespace {

/// Command-line misuse detected after parsing (unknown preset, inconsistent
/// numeric parameters). Maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SourceOpts {
    std::string preset;
    std::string file;
    int d = 0;
    std::vector<int> r;
    int m = 0;
    std::string gens;
};

std::vector<std::pair<int, int>> parse_gens(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        const std::size_t colon = token.find(':');
        if (colon == std::string::npos)
            throw UsageError("--gens expects 'degree:multiplicity' pairs, got '" + token + "'");
        try {
            out.emplace_back(std::stoi(token.substr(0, colon)),
                             std::stoi(token.substr(colon + 1)));
        } catch (const std::exception&) {
            throw UsageError("--gens: bad pair '" + token + "'");
        }
    }
    if (out.empty())
        throw UsageError("--gens: no generator families given");
    return out;
}

ExteriorPresentation resolve_presentation(const SourceOpts& src) {
    if (!src.preset.empty() && !src.file.empty())
        throw UsageError("give either --preset or --file, not both");
    if (src.file.empty() && src.preset.empty())
        throw UsageError("a presentation source is required (--preset or --file)");
    if (!src.file.empty())
        return load_presentation(src.file);

    if (src.preset == "torus") {
        if (src.d < 1)
            throw UsageError("preset torus requires --d <dimension>");
        return torus_preset(src.d);
    }
    if (src.preset == "cstar") {
        if (src.r.size() != 1)
            throw UsageError("preset cstar requires --r <multiplicity>");
        return cstar_preset(src.r.front());
    }
    if (src.preset == "gl") {
        if (src.m < 1)
            throw UsageError("preset gl requires --m <size>");
        return gl_preset(src.m);
    }
    if (src.preset == "lag") {
        if (src.r.empty())
            throw UsageError("preset lag requires --r <r1,r2,...>");
        return lag_preset(src.r);
    }
    if (src.preset == "lie") {
        if (src.gens.empty())
            throw UsageError("preset lie requires --gens <d1:r1,d2:r2,...>");
        return lie_preset(parse_gens(src.gens));
    }
    throw UsageError("unknown preset '" + src.preset +
                     "' (expected torus, cstar, gl, lag or lie)");
}

void add_source_options(CLI::App* cmd, SourceOpts& src) {
    cmd->add_option("--preset", src.preset, "preset name: torus, cstar, gl, lag, lie");
    cmd->add_option("--file", src.file, "path to a presentation JSON file");
    cmd->add_option("--d", src.d, "torus preset: complex dimension");
    cmd->add_option("--r", src.r, "cstar/lag presets: multiplicities")->delimiter(',');
    cmd->add_option("--m", src.m, "gl preset: matrix size");
    cmd->add_option("--gens", src.gens, "lie preset: degree:multiplicity pairs");
}

void note_formal_weights(const ExteriorPresentation& pres, std::ostream& err) {
    if (pres.weightless())
        err << "note: presentation has weightless generators; the u,v grading is formal "
               "and only the Poincare specialization is meaningful\n";
}

void print_poly(const TriPoly& poly, bool json, std::ostream& out, const Json& envelope) {
    if (json) {
        Json j = envelope;
        j["poly"] = poly_to_json(poly);
        out << j.dump(2) << '\n';
    } else {
        out << poly.str() << '\n';
    }
}

void run_sym(const ExteriorPresentation& pres, int n, const std::string& method, bool json,
             std::ostream& out) {
    std::vector<SymResult> results;
    if (method == "all") {
        results.push_back(sym_mhp_det(pres, n));
        results.push_back(sym_mhp_partition(pres, n));
        results.push_back(sym_mhp_cheah(pres, n));
    } else if (method == "det") {
        results.push_back(sym_mhp_det(pres, n));
    } else if (method == "partition") {
        results.push_back(sym_mhp_partition(pres, n));
    } else {
        results.push_back(sym_mhp_cheah(pres, n));
    }

    if (json) {
        if (results.size() == 1) {
            out << sym_result_to_json(results.front()).dump(2) << '\n';
        } else {
            Json j = Json::array();
            for (const SymResult& result : results)
                j.push_back(sym_result_to_json(result));
            out << j.dump(2) << '\n';
        }
    } else {
        for (const SymResult& result : results) {
            if (results.size() > 1)
                out << method_name(result.method) << ": ";
            out << result.poly.str() << '\n';
        }
    }
    if (!results_agree(results))
        throw std::domain_error("sym evaluation paths disagree");
}

std::vector<PermutationWord> load_subgroup(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read subgroup file '" + path + "'");
    std::vector<PermutationWord> words;
    std::string line;
    while (std::getline(in, line)) {
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos || line[begin] == '#')
            continue;
        words.push_back(PermutationWord::parse(line));
    }
    return words;
}

void run_identity(const std::string& name, const IdentityReport& report, bool json,
                  std::ostream& out) {
    if (json) {
        out << report_to_json(report, name).dump(2) << '\n';
    } else if (report.equal) {
        out << "PASS\n";
    } else {
        out << "FAIL at z^" << report.first_discrepancy->first
            << ": lhs - rhs = " << report.first_discrepancy->second.str() << '\n';
    }
    if (!report.equal)
        throw std::domain_error("identity check failed");
}

}  // namespace

bool results_agree(const std::vector<SymResult>& results) {
    for (const SymResult& result : results)
        if (result.poly != results.front().poly)
            return false;
    return true;
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact mixed Hodge polynomials of symmetric products"};
    app.require_subcommand(1);

    // sym ----------------------------------------------------------------
    SourceOpts sym_src;
    int sym_n = 0;
    std::string sym_method = "det";
    bool sym_json = false;
    CLI::App* sym_cmd = app.add_subcommand("sym", "mixed Hodge polynomial of Sym^n X");
    add_source_options(sym_cmd, sym_src);
    sym_cmd->add_option("--n", sym_n, "symmetric power")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sym_cmd->add_option("--method", sym_method, "det, partition, cheah or all")
        ->check(CLI::IsMember({"det", "partition", "cheah", "all"}));
    sym_cmd->add_flag("--json", sym_json, "emit JSON");
    sym_cmd->callback([&] {
        const ExteriorPresentation pres = resolve_presentation(sym_src);
        note_formal_weights(pres, err);
        run_sym(pres, sym_n, sym_method, sym_json, out);
    });

    // mhp ----------------------------------------------------------------
    SourceOpts mhp_src;
    bool mhp_json = false;
    CLI::App* mhp_cmd = app.add_subcommand("mhp", "mixed Hodge polynomial of X itself");
    add_source_options(mhp_cmd, mhp_src);
    mhp_cmd->add_flag("--json", mhp_json, "emit JSON");
    mhp_cmd->callback([&] {
        const ExteriorPresentation pres = resolve_presentation(mhp_src);
        note_formal_weights(pres, err);
        Json envelope;
        if (!pres.label().empty())
            envelope["label"] = pres.label();
        print_poly(mhp(pres), mhp_json, out, envelope);
    });

    // poincare / epoly -----------------------------------------------------
    SourceOpts poin_src;
    int poin_n = 1;
    bool poin_json = false;
    CLI::App* poin_cmd =
        app.add_subcommand("poincare", "Poincare polynomial of Sym^n X (default n=1: X itself)");
    add_source_options(poin_cmd, poin_src);
    poin_cmd->add_option("--n", poin_n, "symmetric power")->check(CLI::NonNegativeNumber);
    poin_cmd->add_flag("--json", poin_json, "emit JSON");
    poin_cmd->callback([&] {
        const ExteriorPresentation pres = resolve_presentation(poin_src);
        print_poly(sym_poincare(pres, poin_n), poin_json, out, Json{{"n", poin_n}});
    });

    SourceOpts epoly_src;
    int epoly_n = 1;
    bool epoly_json = false;
    CLI::App* epoly_cmd =
        app.add_subcommand("epoly", "E-polynomial of Sym^n X (default n=1: X itself)");
    add_source_options(epoly_cmd, epoly_src);
    epoly_cmd->add_option("--n", epoly_n, "symmetric power")->check(CLI::NonNegativeNumber);
    epoly_cmd->add_flag("--json", epoly_json, "emit JSON");
    epoly_cmd->callback([&] {
        const ExteriorPresentation pres = resolve_presentation(epoly_src);
        note_formal_weights(pres, err);
        print_poly(sym_epoly(pres, epoly_n), epoly_json, out, Json{{"n", epoly_n}});
    });

    // equivariant ----------------------------------------------------------
    SourceOpts equi_src;
    int equi_n = 1;
    bool equi_json = false;
    CLI::App* equi_cmd =
        app.add_subcommand("equivariant", "class function of the S_n action on X^n");
    add_source_options(equi_cmd, equi_src);
    equi_cmd->add_option("--n", equi_n, "symmetric power")
        ->required()
        ->check(CLI::PositiveNumber);
    equi_cmd->add_flag("--json", equi_json, "emit JSON");
    equi_cmd->callback([&] {
        const ExteriorPresentation pres = resolve_presentation(equi_src);
        note_formal_weights(pres, err);
        const ClassFunction cf = equivariant_class_function(pres, equi_n);
        if (equi_json) {
            out << class_function_to_json(cf).dump(2) << '\n';
        } else {
            for (std::size_t i = 0; i < cf.class_count(); ++i) {
                const CycleType c = CycleType::from_partition(cf.classes()[i]);
                out << c.str() << " (size " << class_size(c).str()
                    << "): " << cf.value_at(i).str() << '\n';
            }
        }
    });

    // isotypic ---------------------------------------------------------------
    SourceOpts iso_src;
    int iso_n = 1;
    std::string iso_lambda;
    bool iso_json = false;
    CLI::App* iso_cmd = app.add_subcommand(
        "isotypic", "multiplicity of the irreducible chi_lambda in the S_n action");
    add_source_options(iso_cmd, iso_src);
    iso_cmd->add_option("--n", iso_n, "symmetric power")
        ->required()
        ->check(CLI::PositiveNumber);
    iso_cmd->add_option("--lambda", iso_lambda, "partition of n, e.g. '2,1'")->required();
    iso_cmd->add_flag("--json", iso_json, "emit JSON");
    iso_cmd->callback([&] {
        const ExteriorPresentation pres = resolve_presentation(iso_src);
        note_formal_weights(pres, err);
        Partition lambda;
        try {
            lambda = Partition::parse(iso_lambda);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (lambda.n() != iso_n)
            throw UsageError("--lambda must be a partition of n = " + std::to_string(iso_n) +
                             ", got |lambda| = " + std::to_string(lambda.n()));
        const ClassFunction cf = equivariant_class_function(pres, iso_n);
        print_poly(isotypic_multiplicity(cf, lambda), iso_json, out,
                   Json{{"n", iso_n}, {"lambda", lambda.str()}});
    });

    // quotient ---------------------------------------------------------------
    SourceOpts quot_src;
    int quot_n = 1;
    std::string quot_file;
    bool quot_json = false;
    CLI::App* quot_cmd =
        app.add_subcommand("quotient", "mixed Hodge polynomial of X^n / H for explicit H");
    add_source_options(quot_cmd, quot_src);
    quot_cmd->add_option("--n", quot_n, "number of factors")
        ->required()
        ->check(CLI::PositiveNumber);
    quot_cmd->add_option("--subgroup", quot_file,
                         "file with one permutation per line, e.g. [2,3,1]")
        ->required();
    quot_cmd->add_flag("--json", quot_json, "emit JSON");
    quot_cmd->callback([&] {
        const ExteriorPresentation pres = resolve_presentation(quot_src);
        note_formal_weights(pres, err);
        const std::vector<PermutationWord> subgroup = load_subgroup(quot_file);
        print_poly(quotient_by_subgroup(pres, quot_n, subgroup), quot_json, out,
                   Json{{"n", quot_n}, {"subgroup_order", subgroup.size()}});
    });

    // cheah -------------------------------------------------------------------
    SourceOpts cheah_src;
    int cheah_order = 0;
    int cheah_dim = -1;
    bool cheah_compact = false;
    bool cheah_json = false;
    CLI::App* cheah_cmd =
        app.add_subcommand("cheah", "generating series sum_n mu_{Sym^n X} z^n");
    add_source_options(cheah_cmd, cheah_src);
    cheah_cmd->add_option("--order", cheah_order, "truncation order in z")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cheah_cmd->add_flag("--compact", cheah_compact,
                        "use compactly supported Hodge numbers (via duality; needs --dim)");
    cheah_cmd->add_option("--dim", cheah_dim, "complex dimension of X (with --compact)");
    cheah_cmd->add_flag("--json", cheah_json, "emit JSON");
    cheah_cmd->callback([&] {
        const ExteriorPresentation pres = resolve_presentation(cheah_src);
        note_formal_weights(pres, err);
        HodgeTable table = hodge_table(pres);
        CheahVariant variant = CheahVariant::ordinary;
        if (cheah_compact) {
            if (cheah_dim < 0)
                throw UsageError("--compact requires --dim <complex dimension>");
            table = compact_duality(table, cheah_dim);
            variant = CheahVariant::compactly_supported;
        }
        const ZSeries series = cheah_series(table, cheah_order, variant);
        if (cheah_json) {
            Json j;
            j["variant"] = cheah_compact ? "compactly_supported" : "ordinary";
            j["series"] = series_to_json(series);
            out << j.dump(2) << '\n';
        } else {
            for (int n = 0; n <= series.order(); ++n)
                out << "z^" << n << ": " << series.coeff(n).str() << '\n';
        }
    });

    // identity ------------------------------------------------------------------
    CLI::App* id_cmd = app.add_subcommand("identity", "combinatorial identity checkers");
    id_cmd->require_subcommand(1);

    int combgl_m = 1, combgl_order = 0;
    bool combgl_json = false;
    CLI::App* combgl_cmd = id_cmd->add_subcommand(
        "combgl", "signed determinant average vs distinct-odd-parts Euler product");
    combgl_cmd->add_option("--m", combgl_m, "GL(m) size")->required()->check(CLI::PositiveNumber);
    combgl_cmd->add_option("--order", combgl_order, "truncation order in z")
        ->required()
        ->check(CLI::NonNegativeNumber);
    combgl_cmd->add_flag("--json", combgl_json, "emit JSON");
    combgl_cmd->callback(
        [&] { run_identity("combgl", check_combgl(combgl_m, combgl_order), combgl_json, out); });

    std::vector<int> betti_r;
    int betti_order = 0;
    bool betti_json = false;
    CLI::App* betti_cmd =
        id_cmd->add_subcommand("betti", "Poincare determinant average vs Betti Euler product");
    betti_cmd->add_option("--r", betti_r, "multiplicities r1,r2,...")
        ->required()
        ->delimiter(',');
    betti_cmd->add_option("--order", betti_order, "truncation order in z")
        ->required()
        ->check(CLI::NonNegativeNumber);
    betti_cmd->add_flag("--json", betti_json, "emit JSON");
    betti_cmd->callback([&] {
        run_identity("betti", check_betti_identity(betti_r, betti_order), betti_json, out);
    });

    std::vector<int> chfls_r;
    int chfls_order = 0;
    bool chfls_json = false;
    CLI::App* chfls_cmd = id_cmd->add_subcommand(
        "cheahfls", "two-variable determinant average vs Hodge-number Euler product");
    chfls_cmd->add_option("--r", chfls_r, "multiplicities r1,r2,...")
        ->required()
        ->delimiter(',');
    chfls_cmd->add_option("--order", chfls_order, "truncation order in z")
        ->required()
        ->check(CLI::NonNegativeNumber);
    chfls_cmd->add_flag("--json", chfls_json, "emit JSON");
    chfls_cmd->callback([&] {
        run_identity("cheahfls", check_cheahfls(chfls_r, chfls_order), chfls_json, out);
    });

    // preset -----------------------------------------------------------------
    SourceOpts preset_src;
    CLI::App* preset_cmd =
        app.add_subcommand("preset", "print the canonical presentation JSON");
    add_source_options(preset_cmd, preset_src);
    preset_cmd->callback([&] {
        const ExteriorPresentation pres = resolve_presentation(preset_src);
        out << presentation_to_json(pres).dump(2) << '\n';
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace symhodge
