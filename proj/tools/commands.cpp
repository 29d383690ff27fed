#include "commands.hpp"

#include "stair/atf.hpp"
#include "stair/capacities.hpp"
#include "stair/embedfn.hpp"
#include "stair/error.hpp"
#include "stair/families.hpp"
#include "stair/latticepaths.hpp"
#include "stair/numtheory.hpp"
#include "stair/staircases.hpp"
#include "stair/weights.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace stair::cli {

namespace {

using Kind = Table::Kind;

struct OptSpec {
    std::string name;
    std::string fallback;
    std::string help;
};

class Options {
public:
    std::map<std::string, std::string> values;

    const std::string& str(const std::string& name) const { return values.at(name); }
    bool has(const std::string& name) const { return !values.at(name).empty(); }

    const std::string& required(const std::string& name) const {
        if (!has(name)) throw DomainError("--" + name + " is required");
        return str(name);
    }
    Rational rational(const std::string& name) const {
        try {
            return parse_rational(required(name));
        } catch (const DomainError& e) {
            throw DomainError("--" + name + ": " + e.what());
        }
    }
    long integer(const std::string& name) const {
        Rational q = rational(name);
        if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw DomainError("--" + name + " must be an integer");
        return q.get_num().get_si();
    }
    std::size_t count(const std::string& name) const {
        long v = integer(name);
        if (v < 0) throw DomainError("--" + name + " must be nonnegative");
        return static_cast<std::size_t>(v);
    }
};

struct CommandSpec {
    std::string command, subcommand, help;
    std::vector<OptSpec> options;
    std::function<Report(const Options&)> handler;
};

const OptSpec kCase{"case", "", "named family: (3), (4;2,2), (3;1,1,1), (3;1,1,1,1), (3;1), (3;1,1)"};
const OptSpec kExpansion{"expansion", "", "negative weight expansion \"b;b1,b2,...\""};

NegativeWeightExpansion target(const Options& o) {
    if (o.has("case")) return family_by_name(o.str("case")).expansion;
    if (o.has("expansion")) return NegativeWeightExpansion::parse(o.str("expansion"));
    throw DomainError("give --case or --expansion");
}

const RecurrenceFamily& target_family(const Options& o) {
    if (o.has("case")) return family_by_name(o.str("case"));
    if (o.has("expansion")) {
        auto X = NegativeWeightExpansion::parse(o.str("expansion"));
        if (const auto* f = find_family(X)) return *f;
        throw DomainError(X.to_string() + " is not one of the six staircase families");
    }
    throw DomainError("give --case");
}

template <class T>
std::string show(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string show(const std::vector<LPoint>& poly) {
    std::string s;
    for (const auto& p : poly) s += show(p);
    return s;
}

Integer as_integer(std::size_t v) { return Integer(static_cast<unsigned long>(v)); }

Cell exact_cell(const QuadraticSurd& s) {
    if (s.is_rational()) return s.to_rational();
    return s;
}

Json expansion_summary(const NegativeWeightExpansion& X) {
    return {{"expansion", X.to_string()}, {"per", to_string(X.per())}, {"vol", to_string(X.vol())}};
}

void write_svg(const std::string& file, const std::string& svg) {
    std::ofstream f(file);
    if (!f) throw DomainError("cannot write " + file);
    f << svg;
}

Report cmd_capacities(const Options& o) {
    const auto X = target(o);
    const std::size_t count = o.count("count");
    const CapacitySequence c = ech_convex_toric(X, count);
    Report r;
    r.summary = expansion_summary(X);
    r.summary["certified"] = c.certified_len();
    r.table.column("k", Kind::integer).column("c", Kind::exact).column("certified", Kind::boolean);
    for (std::size_t k = 0; k < std::min(count, c.size()); ++k)
        r.table.add_row({as_integer(k), c[k], k < c.certified_len()});
    return r;
}

Report cmd_weights(const Options& o) {
    const Rational a = o.rational("a");
    const WeightExpansion w = weight_expansion(a);
    Report r;
    r.summary = {{"a", to_string(a)},
                 {"length", w.length()},
                 {"partial_quotient_sum", weight_length(a)},
                 {"identities", check_weight_identities(a, w)}};
    r.table.column("i", Kind::integer).column("weight", Kind::exact);
    for (std::size_t i = 0; i < w.length(); ++i) r.table.add_row({as_integer(i + 1), w.weights[i]});
    return r;
}

Report cmd_embedfn(const Options& o) {
    const auto X = target(o);
    const auto samples = sample_embedding_function(X, o.rational("amin"), o.rational("amax"), o.rational("astep"),
                                                   o.count("count"));
    Report r;
    r.summary = expansion_summary(X);
    std::size_t uncertified = 0;
    r.table.column("a", Kind::exact)
        .column("value", Kind::exact)
        .column("witness_k", Kind::integer)
        .column("certified", Kind::boolean)
        .column("below_volume", Kind::boolean)
        .column("volume", Kind::exact);
    for (const auto& s : samples) {
        if (!s.certified) ++uncertified;
        r.table.add_row({s.a, s.value, as_integer(s.witness_k), s.certified, s.below_volume,
                         exact_cell(sqrt(s.a / X.vol()))});
    }
    r.summary["samples"] = samples.size();
    r.summary["uncertified"] = uncertified;
    return r;
}

Report cmd_accpoint(const Options& o) {
    const auto X = target(o);
    const auto a0 = accumulation_point(X);
    if (!a0) throw DomainError(X.to_string() + " has per^2/vol - 2 < 2; no real accumulation point");
    Report r;
    r.summary = expansion_summary(X);
    r.summary["K"] = to_string(X.K());
    r.summary["a0"] = a0->to_string();
    r.summary["a0_decimal"] = to_decimal(*a0, 20);
    r.summary["a0_5dp"] = to_fixed(*a0, 5);
    r.table.column("expansion", Kind::text)
        .column("per", Kind::exact)
        .column("vol", Kind::exact)
        .column("K", Kind::exact)
        .column("a0", Kind::exact);
    r.table.add_row({X.to_string(), X.per(), X.vol(), X.K(), exact_cell(*a0)});
    return r;
}

Report cmd_obstruction(const Options& o) {
    const auto X = target(o);
    const auto rep = staircase_obstruction(X, o.count("count"), o.rational("radius"));
    Report r;
    r.summary = expansion_summary(X);
    r.summary["a0"] = rep.a0.to_string();
    r.summary["volume_value"] = rep.volume_value.to_string();
    r.summary["volume_value_decimal"] = to_decimal(rep.volume_value, 20);
    r.summary["lower_bound"] = to_string(rep.lower_bound);
    r.summary["best_probe"] = to_string(rep.best_probe);
    r.summary["lower_bound_at_a0"] = rep.lower_bound_at_a0.to_string();
    r.summary["lower_bound_at_a0_decimal"] = to_decimal(rep.lower_bound_at_a0, 20);
    r.summary["gap_positive"] = rep.gap_positive;
    r.table.column("probe", Kind::exact)
        .column("ratio", Kind::exact)
        .column("witness_k", Kind::integer)
        .column("bound_at_a0", Kind::exact);
    for (const auto& p : rep.probes)
        r.table.add_row({p.a, p.ratio, as_integer(p.witness_k), exact_cell(p.bound_at_a0)});
    return r;
}

Report cmd_corners(const Options& o) {
    const auto& fam = target_family(o);
    long lo = 0, hi = o.integer("nmax");
    if (o.has("n")) lo = hi = o.integer("n");
    if (lo < 0) throw DomainError("--n must be nonnegative");
    Report r;
    r.summary = {{"case", fam.name}, {"a0", fam.a0.to_string()}};
    r.table.column("n", Kind::integer).column("kind", Kind::text).column("x", Kind::exact).column("y", Kind::exact);
    for (long n = lo; n <= hi; ++n) {
        const CornerPair c = corners(fam, n);
        for (const Corner* k : {&c.outer, &c.inner})
            r.table.add_row({Integer(n), std::string(to_string(k->kind)), k->x, k->y});
    }
    return r;
}

Report cmd_graph(const Options& o) {
    const auto& fam = target_family(o);
    const Rational amin = o.has("amin") ? o.rational("amin") : corners(fam, 0).outer.x;
    const Rational amax = o.has("amax") ? o.rational("amax") : corners(fam, 3).inner.x;
    const Rational step = o.rational("astep");
    if (step <= 0) throw DomainError("--astep must be positive");
    const StaircaseGraph g = staircase_graph(fam);
    std::set<Rational> corner_x;
    for (const auto& c : g.corners_up_to(amax)) corner_x.insert(c.x);
    Report r;
    r.summary = {{"case", fam.name}, {"amin", to_string(amin)}, {"amax", to_string(amax)}};
    r.table.column("a", Kind::exact).column("value", Kind::exact).column("corner", Kind::boolean);
    for (Rational a = amin; a <= amax; a += step) r.table.add_row({a, g.evaluate(a), corner_x.count(a) > 0});
    return r;
}

Report cmd_identities(const Options& o) {
    std::vector<const RecurrenceFamily*> fams;
    if (o.has("case") || o.has("expansion")) fams.push_back(&target_family(o));
    else fams = all_families();
    const long n_max = o.integer("nmax"), n_struct = o.integer("structure-n");
    const Rational eps = o.rational("eps");
    Report r;
    r.table.column("case", Kind::text)
        .column("identities", Kind::boolean)
        .column("tables", Kind::boolean)
        .column("structure", Kind::boolean)
        .column("diagnostic", Kind::text);
    bool all = true;
    for (const auto* f : fams) {
        std::string d1, d2, d3;
        const bool a = verify_identities(*f, n_max, &d1), b = verify_constant_tables(*f, &d2),
                   c = verify_structure(*f, n_struct, eps, &d3);
        all = all && a && b && c;
        std::string diag;
        for (const auto* d : {&d1, &d2, &d3})
            if (!d->empty()) diag += (diag.empty() ? "" : "; ") + *d;
        r.table.add_row({f->name, a, b, c, diag});
    }
    r.summary = {{"all_pass", all}};
    if (!all) r.exit_code = 4;
    return r;
}

void add_path_rows(Report& r, const LatticePath& path) {
    r.table.column("i", Kind::integer).column("x", Kind::integer).column("y", Kind::integer);
    for (std::size_t i = 0; i < path.vertices.size(); ++i)
        r.table.add_row({as_integer(i), Integer(static_cast<long>(path.vertices[i].x)),
                         Integer(static_cast<long>(path.vertices[i].y))});
}

Report cmd_latticepath(const Options& o) {
    const auto& fam = target_family(o);
    const ConvexRegion omega = family_region(fam);
    Report r;
    r.summary = {{"case", fam.name}};
    if (o.has("k")) {
        const std::size_t k = o.count("k");
        const LatticePath path = ck_witness(omega, k);
        r.summary["k"] = k;
        r.summary["c_k"] = to_string(ck_via_paths(omega, k));
        r.summary["lattice_points"] = to_string(lattice_point_count(path));
        add_path_rows(r, path);
        if (o.has("svg")) write_svg(o.str("svg"), to_svg(path, &omega));
        return r;
    }
    const long n = o.integer("n");
    const LambdaData lam = lambda_family(fam, n);
    const LambdaCheck chk = verify_lambda(fam, n);
    r.summary["n"] = n;
    r.summary["s"] = to_string(lam.s);
    r.summary["t"] = to_string(lam.t);
    r.summary["ok"] = chk.ok;
    r.summary["L_target"] = to_string(chk.L_target);
    r.summary["L_direct"] = to_string(chk.L_direct);
    r.summary["L_pick"] = to_string(chk.L_pick);
    r.summary["L_closed"] = to_string(chk.L_closed);
    r.summary["ell_target"] = to_string(chk.ell_target);
    r.summary["ell_direct"] = to_string(chk.ell_direct);
    r.summary["ell_closed"] = to_string(chk.ell_closed);
    r.summary["ell_blowup"] = to_string(chk.ell_blowup);
    if (!chk.diagnostic.empty()) r.diagnostics["lambda"] = chk.diagnostic;
    add_path_rows(r, lam.path);
    if (o.has("svg")) write_svg(o.str("svg"), to_svg(lam.path, &omega));
    if (!chk.ok) r.exit_code = 4;
    return r;
}

Report cmd_atf_replay(const Options& o) {
    const auto& fam = target_family(o);
    const PregameScript script = pregame_script(fam.id);
    const auto diagrams = replay(script);
    Report r;
    r.summary = {{"case", fam.name},
                 {"moves", script.moves.size()},
                 {"reaches_seed", lattice_equivalent(diagrams.back(), script.expected)},
                 {"seed", script.expected.to_string()}};
    r.table.column("step", Kind::integer)
        .column("move", Kind::text)
        .column("diagram", Kind::text)
        .column("area", Kind::exact)
        .column("nodes", Kind::integer);
    for (std::size_t i = 0; i < diagrams.size(); ++i)
        r.table.add_row({as_integer(i), i == 0 ? std::string("start") : script.moves[i - 1].describe(),
                         diagrams[i].to_string(), diagrams[i].area(), as_integer(diagrams[i].total_nodes())});
    if (o.has("svg")) write_svg(o.str("svg"), to_svg(diagrams.back()));
    if (!r.summary["reaches_seed"].get<bool>()) r.exit_code = 4;
    return r;
}

Report cmd_atf_recurse(const Options& o) {
    const auto& fam = target_family(o);
    const long steps = o.integer("steps");
    if (steps < 0) throw DomainError("--steps must be nonnegative");
    const RecursionRun run = run_recursion(fam.id, steps);
    Report r;
    r.summary = {{"case", fam.name}, {"J", fam.J}, {"steps", steps}, {"items_checked", run.items_checked}};
    r.table.column("n", Kind::integer)
        .column("a", Kind::exact)
        .column("b", Kind::exact)
        .column("c", Kind::exact)
        .column("d", Kind::exact)
        .column("u", Kind::text)
        .column("v", Kind::text)
        .column("w", Kind::text)
        .column("shear", Kind::text)
        .column("contains", Kind::boolean)
        .column("fills", Kind::boolean);
    for (std::size_t i = 0; i < run.states.size(); ++i) {
        const auto& s = run.states[i];
        r.table.add_row({Integer(s.n), s.a, s.b, s.c, s.d, show(s.u), show(s.v), show(s.w),
                         i == 0 ? std::string() : show(run.shears[i - 1]), contains_ellipsoid_triangle(s),
                         fills_with_ellipsoid_triangle(s)});
    }
    if (o.has("svg")) write_svg(o.str("svg"), to_svg(run.states.back().diagram));
    return r;
}

Report cmd_ctheta(const Options& o) {
    QuadraticSurd theta;
    if (o.has("K")) {
        auto roots = solve_accumulation_quadratic(o.rational("K"));
        if (!roots) throw DomainError("a^2 - K a + 1 has no real roots");
        theta = roots->first;
    } else {
        auto a0 = accumulation_point(target(o));
        if (!a0) throw DomainError("no real accumulation point");
        theta = *a0;
    }
    const long n_max = o.integer("nmax");
    const auto a = c_theta_series(theta, n_max), b = c_theta_series(QuadraticSurd(1) / theta, n_max);
    Report r;
    long pos = 0, neg = 0, zero = 0;
    Integer den = 1;
    bool rational_sums = true;
    r.table.column("n", Kind::integer).column("C_theta", Kind::exact).column("C_inverse", Kind::exact).column("sum", Kind::exact);
    for (long n = 0; n <= n_max; ++n) {
        const QuadraticSurd s = a[static_cast<std::size_t>(n)] + b[static_cast<std::size_t>(n)];
        const int sg = s.sign();
        (sg > 0 ? pos : sg < 0 ? neg : zero)++;
        if (s.is_rational()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.to_rational().get_den().get_mpz_t());
        else rational_sums = false;
        r.table.add_row({Integer(n), exact_cell(a[static_cast<std::size_t>(n)]), exact_cell(b[static_cast<std::size_t>(n)]),
                         exact_cell(s)});
    }
    r.summary = {{"theta", theta.to_string()},
                 {"theta_decimal", to_decimal(theta, 20)},
                 {"positive", pos},
                 {"negative", neg},
                 {"zero", zero},
                 {"rational_sums", rational_sums}};
    if (rational_sums) r.summary["sum_denominator_lcm"] = to_string(den);
    return r;
}

Report cmd_ehrhart(const Options& o) {
    const auto X = target(o);
    const SurdPair pair = surd_pair(X);
    const long t_max = o.integer("tmax");
    if (t_max < 0) throw DomainError("--tmax must be nonnegative");
    const auto d = d_series(pair, t_max);
    Report r;
    r.summary = expansion_summary(X);
    r.summary["a0"] = pair.a0().to_string();
    r.summary["quasipolynomial"] = quasipolynomial_test(pair);
    const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
    r.summary["d_min"] = to_string(*lo);
    r.summary["d_max"] = to_string(*hi);
    r.summary["d_distinct"] = std::set<Rational>(d.begin(), d.end()).size();
    r.table.column("T", Kind::integer).column("ehr", Kind::integer).column("d", Kind::exact);
    for (long T = 0; T <= t_max; ++T) {
        const Rational t(T);
        const Rational ehr = d[static_cast<std::size_t>(T)] + t * t / (2 * pair.vol) + pair.per * t / (2 * pair.vol);
        r.table.add_row({Integer(T), ehr.get_num(), d[static_cast<std::size_t>(T)]});
    }
    return r;
}

Report cmd_capfn(const Options& o) {
    const auto X = target(o);
    const QuasiPoly q = fit_gamma(X, o.integer("tmax"), o.integer("min-periods"));
    Report r;
    r.summary = expansion_summary(X);
    r.summary["modulus"] = q.modulus;
    r.summary["quadratic"] = to_string(q.quadratic);
    r.summary["linear"] = to_string(q.linear);
    r.summary["stable_from"] = q.stable_from;
    r.summary["checked_to"] = q.checked_to;
    r.table.column("r", Kind::integer).column("gamma", Kind::exact);
    for (std::size_t i = 0; i < q.gamma.size(); ++i) r.table.add_row({as_integer(i), q.gamma[i]});
    return r;
}

Report cmd_reflexive(const Options& o) {
    Report r;
    if (o.has("case") || o.has("expansion")) {
        const auto X = target(o);
        r.summary = expansion_summary(X);
        r.summary["quasipolynomial_conditions"] = quasipolynomial_conditions(X.per(), X.vol());
        r.summary["scaled_reflexive"] = scaled_reflexive_test(X);
        return r;
    }
    r.table.column("name", Kind::text)
        .column("vertices", Kind::text)
        .column("boundary", Kind::integer)
        .column("interior", Kind::integer)
        .column("per", Kind::exact)
        .column("vol", Kind::exact)
        .column("reflexive_class", Kind::boolean)
        .column("reflexive", Kind::boolean)
        .column("scaled_reflexive", Kind::boolean)
        .column("quasipolynomial_conditions", Kind::boolean);
    bool agree = true;
    for (const auto& d : domain_catalog()) {
        const bool scaled = scaled_reflexive_test(d.expansion, d.polygon);
        const bool qp = quasipolynomial_conditions(d.expansion.per(), d.expansion.vol());
        agree = agree && scaled == qp;
        r.table.add_row({d.name, show(d.polygon), Integer(static_cast<long>(boundary_points(d.polygon))),
                         Integer(static_cast<long>(interior_points(d.polygon))), d.expansion.per(), d.expansion.vol(),
                         d.reflexive_class, reflexive_check(d.polygon), scaled, qp});
    }
    r.summary = {{"domains", domain_catalog().size()}, {"scaled_matches_conditions", agree}};
    return r;
}

const std::vector<CommandSpec>& commands() {
    static const std::vector<CommandSpec> specs = {
        {"capacities", "", "ECH capacities of a convex toric domain",
         {kCase, kExpansion, {"count", "50", "number of capacities"}}, cmd_capacities},
        {"weights", "", "weight expansion of a rational", {{"a", "", "rational a >= 1"}}, cmd_weights},
        {"embedfn", "", "sampled ellipsoid embedding function",
         {kCase, kExpansion,
          {"amin", "1", "first grid point"},
          {"amax", "6", "last grid point (inclusive when on the grid)"},
          {"astep", "1/100", "grid step"},
          {"count", "50000", "capacities of the target to compute"}},
         cmd_embedfn},
        {"accpoint", "", "accumulation point a0", {kCase, kExpansion}, cmd_accpoint},
        {"obstruction", "", "staircase obstruction at a0",
         {kCase, kExpansion,
          {"count", "100000", "capacities of the target to compute"},
          {"radius", "1/10", "probe window around a0"}},
         cmd_obstruction},
        {"corners", "", "exact staircase corners",
         {kCase, kExpansion, {"n", "", "single index"}, {"nmax", "8", "last index"}}, cmd_corners},
        {"graph", "", "staircase graph on a grid",
         {kCase, kExpansion,
          {"amin", "", "first grid point (default: first outer corner)"},
          {"amax", "", "last grid point (default: inner corner 3)"},
          {"astep", "1/100", "grid step"}},
         cmd_graph},
        {"identities", "", "recurrence identities, constant tables and corner structure",
         {kCase, kExpansion,
          {"nmax", "200", "identities for n <= nmax"},
          {"structure-n", "25", "interleaving and convergence for n <= structure-n"},
          {"eps", "1/100000000", "convergence tolerance at structure-n"}},
         cmd_identities},
        {"latticepath", "", "obstruction lattice paths and Omega-length minimizers",
         {kCase, kExpansion,
          {"n", "0", "index of the family path"},
          {"k", "", "instead: minimal path for c_k of the family region"},
          {"svg", "", "write the path as SVG"}},
         cmd_latticepath},
        {"atf", "replay", "replay the mutation sequence leading to the recursion seed",
         {kCase, kExpansion, {"svg", "", "write the final diagram as SVG"}}, cmd_atf_replay},
        {"atf", "recurse", "run the checked mutation recursion",
         {kCase, kExpansion, {"steps", "30", "recursion steps"}, {"svg", "", "write the last diagram as SVG"}},
         cmd_atf_recurse},
        {"ctheta", "", "fractional part sums C_theta(n) + C_{1/theta}(n)",
         {kCase, kExpansion, {"K", "", "theta = larger root of a^2 - K a + 1"}, {"nmax", "2000", "last n"}},
         cmd_ctheta},
        {"ehrhart", "", "lattice counts of the surd triangle and d(T)",
         {kCase, kExpansion, {"tmax", "1000", "last T"}}, cmd_ehrhart},
        {"capfn", "", "cap function quasipolynomial fit",
         {kCase, kExpansion,
          {"tmax", "400", "last T"},
          {"min-periods", "4", "full periods required after stabilization"}},
         cmd_capfn},
        {"reflexive", "", "reflexive polygon catalog and scaled test", {kCase, kExpansion}, cmd_reflexive},
    };
    return specs;
}

Json config_of(const CommandSpec& spec, const Options& o) {
    Json c = Json::object();
    c["command"] = spec.command;
    if (!spec.subcommand.empty()) c["subcommand"] = spec.subcommand;
    for (const auto& opt : spec.options) c[opt.name] = o.str(opt.name);
    c["format"] = o.str("format");
    return c;
}

}  // namespace

std::vector<std::string> args_from_config(const Json& config) {
    std::vector<std::string> args{config.at("command").get<std::string>()};
    if (config.contains("subcommand")) args.push_back(config.at("subcommand").get<std::string>());
    for (const auto& [key, value] : config.items()) {
        if (key == "command" || key == "subcommand" || key == "tool" || key == "version") continue;
        const auto v = value.get<std::string>();
        if (v.empty()) continue;
        args.push_back("--" + key);
        args.push_back(v);
    }
    return args;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations for ellipsoid embeddings into convex toric domains", kToolName};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

    // std::map nodes stay put, so CLI11 can bind to them
    std::vector<Options> bound(commands().size());
    std::vector<CLI::App*> leaves;
    std::map<std::string, CLI::App*> parents;
    for (std::size_t i = 0; i < commands().size(); ++i) {
        const auto& spec = commands()[i];
        CLI::App* sub;
        if (spec.subcommand.empty()) {
            sub = app.add_subcommand(spec.command, spec.help);
        } else {
            auto& parent = parents[spec.command];
            if (!parent) {
                parent = app.add_subcommand(spec.command, "almost toric base diagrams");
                parent->require_subcommand(1);
            }
            sub = parent->add_subcommand(spec.subcommand, spec.help);
        }
        auto& o = bound[i];
        for (const auto& opt : spec.options) {
            o.values[opt.name] = opt.fallback;
            sub->add_option("--" + opt.name, o.values[opt.name], opt.help);
        }
        o.values["format"] = "csv";
        o.values["output"] = "";
        sub->add_option("--format", o.values["format"], "csv or json");
        sub->add_option("--output,-o", o.values["output"], "write the report to a file instead of stdout");
        leaves.push_back(sub);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kToolName << " " << kToolVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << error_json("config", e.what(), 2).dump() << "\n";
        return 2;
    }

    for (std::size_t i = 0; i < leaves.size(); ++i) {
        if (!leaves[i]->parsed()) continue;
        const auto& spec = commands()[i];
        const auto& o = bound[i];
        try {
            const Format format = parse_format(o.str("format"));
            Report r = spec.handler(o);
            r.config = config_of(spec, o);
            if (o.has("output")) {
                std::ofstream f(o.str("output"));
                if (!f) throw DomainError("cannot write " + o.str("output"));
                write_report(r, format, f);
            } else {
                write_report(r, format, out);
            }
            return r.exit_code;
        } catch (const Error& e) {
            const int code = e.exit_code() == 1 ? 4 : e.exit_code();
            Json j = error_json(e.kind(), e.what(), code);
            if (const auto* s = dynamic_cast<const ShortfallError*>(&e)) j["error"]["achieved"] = s->achieved();
            if (const auto* c = dynamic_cast<const CheckFailure*>(&e)) j["error"]["item"] = c->item();
            err << j.dump() << "\n";
            return code;
        } catch (const std::exception& e) {
            err << error_json("internal", e.what(), 4).dump() << "\n";
            return 4;
        }
    }
    err << error_json("config", "no command given", 2).dump() << "\n";
    return 2;
}

}  // namespace stair::cli
