// Command-line front end: deterministic JSON/CSV reports for ring queries,
// Hodge-number vectors, coupling lengths and the bundled verification
// suites.  All diagnostics go to stderr; stdout carries exactly one report.
//
// Exit codes: 0 success, 1 usage error, 2 verification check failed,
// 3 smoothness certificate failed, 4 internal limit exceeded.

#include <climits>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jacring/coupling.hpp"
#include "jacring/errors.hpp"
#include "jacring/fields.hpp"
#include "jacring/form.hpp"
#include "jacring/graded_ring.hpp"
#include "jacring/hodge.hpp"
#include "jacring/verify.hpp"

namespace {

using nlohmann::ordered_json;

struct Args {
    std::string command;

    std::string field = "rational";
    std::uint64_t seed = 0;
    bool csv = false;
    long max_degree = 64;

    // ring selector
    bool fermat = false;
    bool random_base = false;
    long d = 0;
    int vars = 0;
    std::string form_text;
    std::string form_file;

    // hodge eigen
    int base_vars = 0;
    int eigen_i = -1;
    bool eigen_all = false;

    // yukawa
    bool tower = false;
    int n = 0;
    int levels = -1;
    long long mu = LLONG_MIN;

    std::string suite;
};

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitNotSmooth = 3;
constexpr int kExitLimit = 4;

void add_ring_selector(CLI::App* cmd, Args& a) {
    cmd->add_flag("--fermat", a.fermat, "Fermat form x0^d + ... + x{k-1}^d");
    cmd->add_flag("--random", a.random_base, "deterministic random smooth form from --seed");
    cmd->add_option("--d", a.d, "form degree");
    cmd->add_option("--vars", a.vars, "number of variables");
    cmd->add_option("--form", a.form_text, "explicit form text");
    cmd->add_option("--form-file", a.form_file, "path to a file holding the form text");
}

std::string read_form_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw jacring::parse_error("cannot open form file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <class K>
jacring::GradedRing<K> make_ring(const Args& a, const K& field) {
    const int picked = int(a.fermat) + int(a.random_base) + int(!a.form_text.empty()) +
                       int(!a.form_file.empty());
    if (picked != 1)
        throw std::invalid_argument(
            "pick exactly one of --fermat, --random, --form, --form-file");
    if (a.fermat || a.random_base) {
        if (a.d < 2 || a.vars < 2)
            throw std::invalid_argument("--fermat/--random need --d >= 2 and --vars >= 2");
        return a.fermat ? jacring::GradedRing<K>::fermat(a.d, a.vars, field)
                        : jacring::GradedRing<K>::random_smooth(a.d, a.vars, field, a.seed);
    }
    const std::string text = a.form_text.empty() ? read_form_file(a.form_file) : a.form_text;
    return jacring::GradedRing<K>(jacring::parse_form<K>(text, field));
}

void enforce_degree_cap(long socle, const Args& a) {
    if (socle > a.max_degree)
        throw jacring::limit_error("socle degree " + std::to_string(socle) +
                                   " exceeds --max-degree " + std::to_string(a.max_degree));
}

template <class K>
ordered_json field_mode_json(const K& field) {
    ordered_json j;
    auto mode = field.mode();
    j["kind"] = mode.kind == jacring::FieldKind::rational ? "rational" : "prime";
    if (mode.kind == jacring::FieldKind::prime) j["p"] = mode.modulus;
    return j;
}

ordered_json ring_params(const Args& a) {
    ordered_json p;
    if (a.fermat) p["base"] = "fermat";
    if (a.random_base) {
        p["base"] = "random";
        p["seed"] = a.seed;
    }
    if (a.d) p["d"] = a.d;
    if (a.vars) p["vars"] = a.vars;
    if (!a.form_text.empty()) p["form"] = a.form_text;
    if (!a.form_file.empty()) p["form_file"] = a.form_file;
    return p;
}

ordered_json checks_json(const std::vector<jacring::Check>& checks) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json j;
        j["name"] = c.name;
        j["expected"] = c.expected;
        j["actual"] = c.actual;
        j["pass"] = c.pass;
        arr.push_back(std::move(j));
    }
    return arr;
}

int emit_report(const std::string& command, ordered_json params, ordered_json field_mode,
                ordered_json results, const std::vector<jacring::Check>& checks,
                bool probabilistic, int exit_code = kExitOk) {
    ordered_json report;
    report["command"] = command;
    report["params"] = std::move(params);
    report["field_mode"] = std::move(field_mode);
    report["results"] = std::move(results);
    report["checks"] = checks_json(checks);
    report["probabilistic"] = probabilistic;
    std::cout << report.dump(2) << "\n";
    if (exit_code == kExitOk && !jacring::all_pass(checks)) return kExitCheckFailed;
    return exit_code;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

template <class K>
bool probabilistic_mode(const K& field, bool monomial_jacobian) {
    return field.mode().kind == jacring::FieldKind::prime && !monomial_jacobian;
}

template <class K>
int cmd_ring_info(const Args& a, const K& field) {
    auto ring = make_ring<K>(a, field);
    enforce_degree_cap(ring.socle_degree(), a);
    const bool smooth = ring.is_smooth();
    ordered_json results;
    results["form"] = jacring::form_to_string(ring.form());
    results["degree"] = ring.form_degree();
    results["nvars"] = ring.nvars();
    results["ambient_dim"] = ring.ambient_dim();
    results["socle_degree"] = ring.socle_degree();
    results["smooth"] = smooth;
    results["monomial_jacobian"] = ring.monomial_jacobian();
    std::vector<long> dims;
    for (long mu = 0; mu <= ring.socle_degree(); ++mu) dims.push_back(ring.dim(mu));
    results["dims"] = dims;
    if (!smooth)
        std::cerr << "smoothness certificate failed: the graded ring does not vanish above "
                     "its socle degree\n";
    return emit_report("ring info", ring_params(a), field_mode_json(field), results, {},
                       probabilistic_mode(field, ring.monomial_jacobian()),
                       smooth ? kExitOk : kExitNotSmooth);
}

template <class K>
int cmd_hodge(const Args& a, const K& field) {
    if (a.command == "hodge eigen") {
        if (a.d < 2 || a.base_vars < 2)
            throw std::invalid_argument("hodge eigen needs --d >= 2 and --base-vars >= 2");
        if (a.eigen_all == (a.eigen_i >= 0))
            throw std::invalid_argument("hodge eigen needs exactly one of --i or --all");
        auto base = jacring::GradedRing<K>::fermat(a.d, a.base_vars, field);
        enforce_degree_cap(base.socle_degree(), a);
        ordered_json params;
        params["d"] = a.d;
        params["base_vars"] = a.base_vars;
        ordered_json results;
        if (a.eigen_all) {
            params["all"] = true;
            for (int i = 1; i <= a.d - 1; ++i)
                results[std::to_string(i)] = jacring::eigen_hodge(base, i).h;
        } else {
            params["i"] = a.eigen_i;
            results = jacring::eigen_hodge(base, a.eigen_i).h;
        }
        return emit_report("hodge eigen", std::move(params), field_mode_json(field), results,
                           {}, probabilistic_mode(field, base.monomial_jacobian()));
    }
    auto ring = make_ring<K>(a, field);
    enforce_degree_cap(ring.socle_degree(), a);
    ordered_json results;
    if (a.command == "hodge primitive") {
        auto hv = jacring::primitive_hodge(ring);
        results["m"] = hv.m;
        results["h"] = hv.h;
        results["primitive"] = true;
    } else {
        auto dia = jacring::hodge_diamond(ring);
        results["m"] = dia.m;
        results["middle"] = dia.middle;
        results["rows"] = jacring::hodge_diamond_rows(dia);
    }
    return emit_report(a.command, ring_params(a), field_mode_json(field), results, {},
                       probabilistic_mode(field, ring.monomial_jacobian()));
}

template <class K>
int cmd_yukawa_length(const Args& a, const K& field) {
    ordered_json params;
    ordered_json results;
    bool monomial = true;
    if (a.tower) {
        if (a.fermat || !a.form_text.empty() || !a.form_file.empty())
            throw std::invalid_argument("--tower does not combine with a ring selector");
        if (a.d < 2 || a.n < 1 || a.levels < 0)
            throw std::invalid_argument("--tower needs --d, --n and --levels");
        const int base_nvars = a.n - a.levels + 1;
        if (base_nvars < 2)
            throw std::invalid_argument("tower base would have fewer than 2 variables");
        jacring::TowerSpec<K> spec;
        spec.d = a.d;
        spec.base_nvars = base_nvars;
        spec.levels = a.levels;
        spec.kind = a.random_base ? jacring::BaseKind::random_smooth : jacring::BaseKind::fermat;
        spec.seed = a.seed;
        spec.field = field;
        auto tower = jacring::build_tower(spec);
        enforce_degree_cap(tower.top.socle_degree(), a);
        const long mu = a.mu == LLONG_MIN ? a.d - a.n - 1 : static_cast<long>(a.mu);
        params["tower"] = true;
        params["d"] = a.d;
        params["n"] = a.n;
        params["levels"] = a.levels;
        params["base"] = a.random_base ? "random" : "fermat";
        if (a.random_base) params["seed"] = a.seed;
        params["mu"] = mu;
        results["length"] = jacring::coupling_length(tower.top, tower.tangent, mu);
        results["mu"] = mu;
        results["dim_V"] = tower.tangent.dimension();
        results["hypothesis_ok"] = a.d >= a.n + 1;
        monomial = tower.top.monomial_jacobian();
    } else {
        auto ring = make_ring<K>(a, field);
        enforce_degree_cap(ring.socle_degree(), a);
        params = ring_params(a);
        const int n = ring.ambient_dim();
        const long mu =
            a.mu == LLONG_MIN ? ring.form_degree() - n - 1 : static_cast<long>(a.mu);
        params["mu"] = mu;
        results["length"] =
            jacring::coupling_length(ring, jacring::tangent_subspace_full(ring), mu);
        results["mu"] = mu;
        results["hypothesis_ok"] = ring.form_degree() >= n + 1;
        monomial = ring.monomial_jacobian();
    }
    if (!results["hypothesis_ok"].get<bool>())
        std::cerr << "warning: d < n+1, outside the hypothesis of the length theory\n";
    return emit_report("yukawa length", std::move(params), field_mode_json(field), results, {},
                       probabilistic_mode(field, monomial));
}

template <class K>
int cmd_yukawa_profile(const Args& a, const K& field) {
    auto ring = make_ring<K>(a, field);
    enforce_degree_cap(ring.socle_degree(), a);
    auto prof = jacring::coupling_profile(ring, jacring::tangent_subspace_full(ring));
    if (a.csv) {
        std::cout << "mu,length\n";
        for (std::size_t mu = 0; mu < prof.lengths.size(); ++mu)
            std::cout << mu << "," << prof.lengths[mu] << "\n";
        return kExitOk;
    }
    ordered_json results;
    results["sigma"] = prof.sigma;
    results["lengths"] = prof.lengths;
    return emit_report("yukawa profile", ring_params(a), field_mode_json(field), results, {},
                       probabilistic_mode(field, ring.monomial_jacobian()));
}

template <class K>
int cmd_yukawa_table(const Args& a, const K& field) {
    if (a.d < 2 || a.n < 3) throw std::invalid_argument("yukawa table needs --d and --n >= 3");
    const auto kind =
        a.random_base ? jacring::BaseKind::random_smooth : jacring::BaseKind::fermat;
    enforce_degree_cap((a.n + 1) * (a.d - 2), a);
    auto table = jacring::tower_length_table<K>(a.d, a.n, kind, a.seed, field);
    if (a.csv) {
        std::cout << "level,computed,closed_form,match,base\n";
        for (const auto& row : table.rows)
            std::cout << row.level << "," << row.computed << "," << row.closed_form << ","
                      << (row.match ? "true" : "false") << "," << csv_escape(row.base_desc)
                      << "\n";
        return table.all_match ? kExitOk : kExitCheckFailed;
    }
    ordered_json params;
    params["d"] = a.d;
    params["n"] = a.n;
    params["base"] = a.random_base ? "random" : "fermat";
    if (a.random_base) params["seed"] = a.seed;
    ordered_json results;
    std::vector<jacring::Check> checks;
    for (const auto& row : table.rows) {
        results[std::to_string(row.level)] = row.computed;
        checks.push_back(jacring::make_check("length_level_" + std::to_string(row.level),
                                             row.closed_form, row.computed));
    }
    return emit_report("yukawa table", std::move(params), field_mode_json(field), results,
                       checks, probabilistic_mode(field, !a.random_base));
}

template <class K>
int cmd_verify(const Args& a, const K& field) {
    std::vector<jacring::Check> checks;
    ordered_json params;
    bool monomial = true;
    if (a.suite == "prop64" || a.suite == "theorem65") {
        if (a.d < 2 || a.n < 1)
            throw std::invalid_argument("verify " + a.suite + " needs --d and --n");
        params["d"] = a.d;
        params["n"] = a.n;
        if (a.suite == "prop64") {
            enforce_degree_cap((a.n + 3) * (a.d - 2), a);
            checks = jacring::verify_prop64<K>(a.d, a.n, field);
        } else {
            enforce_degree_cap((a.n + 1) * (a.d - 2), a);
            const auto kind =
                a.random_base ? jacring::BaseKind::random_smooth : jacring::BaseKind::fermat;
            params["base"] = a.random_base ? "random" : "fermat";
            if (a.random_base) params["seed"] = a.seed;
            monomial = !a.random_base;
            checks = jacring::verify_theorem65<K>(a.d, a.n, kind, a.seed, field);
        }
    } else {
        auto ring = make_ring<K>(a, field);
        enforce_degree_cap(
            ring.socle_degree() + (a.suite == "tower" ? ring.form_degree() - 2 : 0), a);
        params = ring_params(a);
        monomial = ring.monomial_jacobian();
        if (a.suite == "hilbert")
            checks = jacring::verify_hilbert(ring);
        else if (a.suite == "macaulay")
            checks = jacring::verify_macaulay(ring);
        else if (a.suite == "koszul")
            checks = jacring::verify_koszul(ring);
        else if (a.suite == "tower")
            checks = jacring::verify_tower(ring);
        else if (a.suite == "lemma18")
            checks = jacring::verify_lemma18(ring);
        else
            throw std::invalid_argument("unknown verify suite: " + a.suite);
    }
    long passed = 0;
    for (const auto& c : checks) passed += c.pass ? 1 : 0;
    ordered_json results;
    results["suite"] = a.suite;
    results["total"] = checks.size();
    results["passed"] = passed;
    results["failed"] = static_cast<long>(checks.size()) - passed;
    return emit_report("verify " + a.suite, std::move(params), field_mode_json(field), results,
                       checks, probabilistic_mode(field, monomial));
}

template <class K>
int execute(const Args& a, const K& field) {
    if (a.command == "ring info") return cmd_ring_info(a, field);
    if (a.command.rfind("hodge", 0) == 0) return cmd_hodge(a, field);
    if (a.command == "yukawa length") return cmd_yukawa_length(a, field);
    if (a.command == "yukawa profile") return cmd_yukawa_profile(a, field);
    if (a.command == "yukawa table") return cmd_yukawa_table(a, field);
    if (a.command.rfind("verify", 0) == 0) return cmd_verify(a, field);
    throw std::invalid_argument("no subcommand given");
}

int dispatch(const Args& a) {
    if (a.csv && a.command != "yukawa table" && a.command != "yukawa profile")
        throw std::invalid_argument("--csv is available for yukawa table and yukawa profile only");
    if (a.field == "rational") return execute(a, jacring::RationalField{});
    if (a.field == "prime") return execute(a, jacring::PrimeField{jacring::default_prime});
    if (a.field.rfind("prime:", 0) == 0) {
        const std::string digits = a.field.substr(6);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed --field; use rational or prime:<p>");
        return execute(a, jacring::PrimeField{std::stoull(digits)});
    }
    throw std::invalid_argument("unknown field mode: " + a.field);
}

}  // namespace

int main(int argc, char** argv) {
    Args args;
    CLI::App app{"graded Jacobian rings of smooth hypersurfaces: Hodge numbers of cyclic "
                 "covers and Griffiths-Yukawa coupling lengths"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.add_option("--field", args.field, "rational (default) | prime | prime:<p>");
    app.add_option("--seed", args.seed, "seed for deterministic random forms");
    app.add_flag("--csv", args.csv, "CSV output (tables only)");
    app.add_option("--max-degree", args.max_degree, "cap on the socle degree (exit 4 beyond)");

    auto* ring = app.add_subcommand("ring", "ring-level queries");
    ring->require_subcommand(1);
    auto* ring_info = ring->add_subcommand("info", "dimensions and certificate of a ring");
    add_ring_selector(ring_info, args);
    ring_info->callback([&] { args.command = "ring info"; });

    auto* hodge = app.add_subcommand("hodge", "Hodge-number vectors");
    hodge->require_subcommand(1);
    auto* hodge_diamond = hodge->add_subcommand("diamond", "full Hodge diamond");
    add_ring_selector(hodge_diamond, args);
    hodge_diamond->callback([&] { args.command = "hodge diamond"; });
    auto* hodge_prim = hodge->add_subcommand("primitive", "primitive middle Hodge numbers");
    add_ring_selector(hodge_prim, args);
    hodge_prim->callback([&] { args.command = "hodge primitive"; });
    auto* hodge_eigen =
        hodge->add_subcommand("eigen", "eigenspace Hodge numbers of the d-th root cover");
    hodge_eigen->add_option("--d", args.d, "form degree");
    hodge_eigen->add_option("--base-vars", args.base_vars, "variables of the Fermat base");
    hodge_eigen->add_option("--i", args.eigen_i, "eigenspace index in [1, d-1]");
    hodge_eigen->add_flag("--all", args.eigen_all, "all eigenspace indices");
    hodge_eigen->callback([&] { args.command = "hodge eigen"; });

    auto* yukawa = app.add_subcommand("yukawa", "coupling lengths");
    yukawa->require_subcommand(1);
    auto* ylen = yukawa->add_subcommand("length", "coupling length of a family");
    add_ring_selector(ylen, args);
    ylen->add_flag("--tower", args.tower, "iterated-cover family");
    ylen->add_option("--n", args.n, "top ambient dimension of the tower");
    ylen->add_option("--levels", args.levels, "number of cover iterations");
    ylen->add_option("--mu", args.mu, "starting degree (default d-n-1)");
    ylen->callback([&] { args.command = "yukawa length"; });
    auto* yprof = yukawa->add_subcommand("profile", "length for every starting degree");
    add_ring_selector(yprof, args);
    yprof->callback([&] { args.command = "yukawa profile"; });
    auto* ytab = yukawa->add_subcommand("table", "iterated-cover table vs closed form");
    ytab->add_option("--d", args.d, "form degree");
    ytab->add_option("--n", args.n, "ambient dimension of the underlying hypersurfaces");
    ytab->add_flag("--random", args.random_base, "seeded random smooth bases instead of Fermat");
    ytab->callback([&] { args.command = "yukawa table"; });

    auto* verify = app.add_subcommand("verify", "bundled property suites");
    verify->require_subcommand(1);
    for (const char* name :
         {"macaulay", "hilbert", "koszul", "prop64", "lemma18", "tower", "theorem65"}) {
        auto* suite = verify->add_subcommand(name, std::string("suite ") + name);
        if (std::string(name) == "prop64" || std::string(name) == "theorem65") {
            suite->add_option("--d", args.d, "form degree");
            suite->add_option("--n", args.n, "ambient dimension");
            if (std::string(name) == "theorem65")
                suite->add_flag("--random", args.random_base, "seeded random smooth bases");
        } else {
            add_ring_selector(suite, args);
        }
        suite->callback([&args, name] { args.command = std::string("verify ") + name;
                                        args.suite = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        return dispatch(args);
    } catch (const jacring::smoothness_error& e) {
        std::cerr << "smoothness certificate failed: " << e.what() << "\n";
        return kExitNotSmooth;
    } catch (const jacring::limit_error& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return kExitLimit;
    } catch (const jacring::parse_error& e) {
        std::cerr << "form parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
