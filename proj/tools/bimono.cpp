#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bimono/bigraph.hpp"
#include "bimono/errors.hpp"
#include "bimono/extremal.hpp"
#include "bimono/families.hpp"
#include "bimono/long_routes.hpp"
#include "bimono/mono_structure.hpp"
#include "bimono/random.hpp"
#include "bimono/sweep.hpp"

namespace {

using namespace bimono;

constexpr int kExitOk = 0;
constexpr int kExitLawFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw PreconditionError("cannot write file: " + path);
    out << text;
}

Mask mask_from_json(const nlohmann::json& arr, int n) {
    Mask m = 0;
    for (const auto& v : arr) {
        int i = v.get<int>();
        if (i < 0 || i >= n) throw PreconditionError("witness vertex out of range");
        m |= bit(i);
    }
    return m;
}

nlohmann::json mask_to_json(Mask m) {
    nlohmann::json arr = nlohmann::json::array();
    BIMONO_FOR_BITS(i, m) arr.push_back(i);
    return arr;
}

ExtremalWitness witness_from_json(const std::string& text, int n) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        ExtremalWitness w;
        std::string orient = j.at("orientation").get<std::string>();
        if (orient != "X" && orient != "Y") throw PreconditionError("witness invalid: orientation");
        w.orientation = orient == "X" ? Side::X : Side::Y;
        w.xprime = mask_from_json(j.at("xprime"), n);
        w.y1 = mask_from_json(j.at("y1"), n);
        w.y2 = mask_from_json(j.at("y2"), n);
        w.eta = parse_rat(j.at("eta").get<std::string>());
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("witness invalid: ") + e.what());
    }
}

std::string witness_to_json(const ExtremalWitness& w) {
    nlohmann::json j{{"orientation", w.orientation == Side::X ? "X" : "Y"},
                     {"xprime", mask_to_json(w.xprime)},
                     {"y1", mask_to_json(w.y1)},
                     {"y2", mask_to_json(w.y2)},
                     {"eta", to_string(w.eta)}};
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

struct GenArgs {
    std::string family;
    int n = 0;
    int k = 0;
    std::string out;
};

int run_gen(const GenArgs& a) {
    FamilySpec spec{family_from_name(a.family), a.n, a.k};
    auto [g, claims] = generate(spec);
    std::string base = a.out;
    if (base.empty()) {
        base = a.family + "-" + std::to_string(a.n);
        if (spec.family == Family::MediumDeg || spec.family == Family::SmallDeg)
            base += "-" + std::to_string(a.k);
        base += ".bigraph";
    }
    spit(base, g.serialize());
    spit(base + ".claims.json", claims.to_json());
    std::cout << base << "\n" << claims.to_json();
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::vector<std::string> files;
    int exhaustive_n = 0;
    int random_n = 0;
    int random_count = 1;
    std::uint64_t seed = 0;
    std::string red_prob = "1/2", blue_prob = "1/2";
    int min_degree_floor = 0;
    std::vector<std::string> laws{"path-GL", "cycle-cor1", "matching-bound", "component-bound"};
    int cap = kDefaultSearchCap;
    std::string eps = "1/10";
    std::string out;
    int jobs = 0;
};

struct Row {
    std::string instance, law;
    int n;
    int delta;
    std::string measured, bound, ratio;
    bool pass, hard;
};

void eval_instance(const std::string& name, const ColoredBigraph& g, const VerifyArgs& a,
                   std::vector<Row>& rows) {
    const int n = g.n();
    const int delta = g.min_degree();
    Rat delta_ratio = n > 0 ? Rat(delta, n) : Rat(0);
    std::optional<PathResult> path;
    std::optional<std::optional<CycleResult>> cycle;
    auto need_path = [&]() -> const PathResult& {
        if (!path) path = longest_mono_path_exact(g, a.cap);
        return *path;
    };
    auto need_cycle = [&]() -> int {
        if (!cycle) cycle = longest_mono_cycle_exact(g, a.cap);
        return *cycle ? (*cycle)->length() : 0;
    };
    for (const std::string& law : a.laws) {
        Row row{name, law, n, delta, "", "", "", true, true};
        long long measured = 0, bound = 0;
        if (law == "path-GL") {
            measured = need_path().order();
            bound = 2 * ((n + 1) / 2);
        } else if (law == "cycle-cor1") {
            measured = need_cycle();
            bound = 2 * (n / 2) >= 4 ? 2 * (n / 2) : 0;
        } else if (law == "matching-bound") {
            for (Color c : {Color::Red, Color::Blue})
                measured = std::max<long long>(measured, max_connected_matching(g, c).size());
            bound = static_cast<long long>(rat_ceil(matching_bound(delta_ratio, n)));
        } else if (law == "component-bound") {
            measured = g.edge_count() > 0 ? best_balanced_component(g).min_side() : 0;
            bound = static_cast<long long>(rat_ceil(matching_bound(delta_ratio, n)));
        } else if (law == "cycle-bound") {
            row.hard = false;
            measured = need_cycle();
            Rat b = (cycle_bound(delta_ratio) - parse_rat(a.eps)) * n;
            if (b < Rat(0)) b = Rat(0);
            row.bound = to_string(b);
            row.measured = std::to_string(measured);
            row.ratio = b > Rat(0) ? to_string(Rat(measured) / b) : "inf";
            row.pass = Rat(measured) >= b;
            rows.push_back(row);
            continue;
        } else {
            throw PreconditionError("unknown law: " + law);
        }
        row.measured = std::to_string(measured);
        row.bound = std::to_string(bound);
        row.ratio = bound > 0 ? to_string(Rat(measured, bound)) : "inf";
        row.pass = measured >= bound;
        rows.push_back(row);
    }
}

int run_verify(const VerifyArgs& a) {
    std::vector<Row> rows;
    nlohmann::json summary;

    if (a.exhaustive_n > 0) {
        int n = a.exhaustive_n;
        if (n > 5) throw PreconditionError("exhaustive mode supports n <= 5");
        std::uint64_t total = 1ULL << (n * n);
        SweepResult r = sweep_parallel(n, 0, total, a.jobs);
        summary["exhaustive"] = {{"n", n},
                                 {"colorings", r.colorings},
                                 {"path_violations", r.path_violations},
                                 {"cycle_violations", r.cycle_violations},
                                 {"min_path", r.min_path},
                                 {"min_cycle", r.min_cycle}};
        Row row{"exhaustive:" + std::to_string(n), "path-GL", n, -1,
                std::to_string(r.min_path), std::to_string(2 * ((n + 1) / 2)), "",
                r.path_violations == 0, true};
        rows.push_back(row);
        Row crow{"exhaustive:" + std::to_string(n), "cycle-cor1", n, -1,
                 std::to_string(r.min_cycle),
                 std::to_string(2 * (n / 2) >= 4 ? 2 * (n / 2) : 0), "",
                 r.cycle_violations == 0, true};
        rows.push_back(crow);
    }
    for (const std::string& f : a.files)
        eval_instance(f, ColoredBigraph::parse(slurp(f)), a, rows);
    if (a.random_n > 0) {
        for (int i = 0; i < a.random_count; ++i) {
            ColoredBigraph g =
                random_coloring_with_floor(a.random_n, parse_rat(a.red_prob),
                                           parse_rat(a.blue_prob), a.seed + i,
                                           a.min_degree_floor);
            eval_instance("random:" + std::to_string(a.seed + i), g, a, rows);
        }
    }

    std::sort(rows.begin(), rows.end(), [](const Row& r1, const Row& r2) {
        return std::tie(r1.instance, r1.law) < std::tie(r2.instance, r2.law);
    });
    std::ostringstream csv;
    csv << "instance,law,n,delta,measured,bound,ratio,pass,hard\n";
    int hard_failures = 0;
    for (const Row& r : rows) {
        csv << r.instance << ',' << r.law << ',' << r.n << ',' << r.delta << ',' << r.measured
            << ',' << r.bound << ',' << r.ratio << ',' << (r.pass ? "pass" : "FAIL") << ','
            << (r.hard ? "hard" : "report-only") << '\n';
        if (r.hard && !r.pass) ++hard_failures;
    }
    if (!a.out.empty())
        spit(a.out, csv.str());
    else
        std::cout << csv.str();
    summary["rows"] = rows.size();
    summary["hard_failures"] = hard_failures;
    std::cout << summary.dump() << "\n";
    return hard_failures == 0 ? kExitOk : kExitLawFailure;
}

// ---------------------------------------------------------------------------

struct RouteArgs {
    std::string instance;
    std::string witness;
    std::string gamma = "1/4";
    std::string eta = "0";
    std::string out = "cert.json";
};

int run_route(const RouteArgs& a) {
    ColoredBigraph g = ColoredBigraph::parse(slurp(a.instance));
    Rat gamma = parse_rat(a.gamma), eta = parse_rat(a.eta);
    ExtremalWitness w;
    if (!a.witness.empty()) {
        w = witness_from_json(slurp(a.witness), g.n());
    } else {
        auto found = find_witness(g, eta);
        if (!found) throw PreconditionError("no witness found at eta = " + to_string(eta));
        w = *found;
    }
    RouteCertificate cert = extremal_route(g, w, RouteParams{gamma, eta, Rat(0)});
    spit(a.out, cert.to_json());
    std::cout << "certificate: " << a.out << " cycle=" << cert.cycle.length()
              << " path=" << cert.path.order() << " trace=";
    for (size_t i = 0; i < cert.branch_trace.size(); ++i)
        std::cout << (i ? ">" : "") << cert.branch_trace[i];
    std::cout << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct RandomArgs {
    int n = 0;
    std::uint64_t seed = 0;
    std::string red_prob = "1/2", blue_prob = "1/2";
    int min_degree_floor = 0;
    std::string out;
};

int run_random(const RandomArgs& a) {
    ColoredBigraph g = random_coloring_with_floor(a.n, parse_rat(a.red_prob),
                                                  parse_rat(a.blue_prob), a.seed,
                                                  a.min_degree_floor);
    if (!a.out.empty())
        spit(a.out, g.serialize());
    else
        std::cout << g.serialize();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-colored balanced bipartite graph analyzer"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* cmd_gen = app.add_subcommand("gen", "generate a tightness family instance");
    cmd_gen->add_option("family", gen.family, "large-deg|medium-deg|small-deg|cycle-extremal")
        ->required();
    cmd_gen->add_option("n", gen.n, "side size")->required();
    cmd_gen->add_option("k", gen.k, "family parameter (medium-deg/small-deg)");
    cmd_gen->add_option("--out", gen.out, "output path (claims sidecar gets .claims.json)");

    VerifyArgs verify;
    auto* cmd_verify = app.add_subcommand("verify", "check theorem laws on instances");
    cmd_verify->add_option("files", verify.files, "instance files");
    cmd_verify->add_option("--exhaustive", verify.exhaustive_n, "sweep all colorings of K_{n,n}");
    cmd_verify->add_option("--random", verify.random_n, "random instances of this side size");
    cmd_verify->add_option("--count", verify.random_count, "number of random instances");
    cmd_verify->add_option("--seed", verify.seed, "random seed");
    cmd_verify->add_option("--red", verify.red_prob, "red probability p/q");
    cmd_verify->add_option("--blue", verify.blue_prob, "blue probability p/q");
    cmd_verify->add_option("--min-degree-floor", verify.min_degree_floor, "rejection floor");
    cmd_verify->add_option("--laws", verify.laws, "subset of laws")->delimiter(',');
    cmd_verify->add_option("--cap", verify.cap, "exact-search cap per side");
    cmd_verify->add_option("--eps", verify.eps, "slack for the report-only cycle-bound law");
    cmd_verify->add_option("--out", verify.out, "CSV report path (default stdout)");
    cmd_verify->add_option("--jobs", verify.jobs, "worker threads for exhaustive mode");

    RouteArgs route;
    auto* cmd_route = app.add_subcommand("route", "extremal-case routing to a certificate");
    cmd_route->add_option("instance", route.instance, "instance file")->required();
    cmd_route->add_option("--witness", route.witness, "witness JSON (else auto-search)");
    cmd_route->add_option("--gamma", route.gamma, "gamma as p/q");
    cmd_route->add_option("--eta", route.eta, "eta as p/q");
    cmd_route->add_option("--out", route.out, "certificate path");

    std::string cc_instance, cc_cert;
    auto* cmd_check = app.add_subcommand("check-cert", "independently validate a certificate");
    cmd_check->add_option("instance", cc_instance, "instance file")->required();
    cmd_check->add_option("cert", cc_cert, "certificate JSON")->required();

    RandomArgs rnd;
    auto* cmd_random = app.add_subcommand("random", "sample a random coloring");
    cmd_random->add_option("n", rnd.n, "side size")->required();
    cmd_random->add_option("--seed", rnd.seed, "seed");
    cmd_random->add_option("--red", rnd.red_prob, "red probability p/q");
    cmd_random->add_option("--blue", rnd.blue_prob, "blue probability p/q");
    cmd_random->add_option("--min-degree-floor", rnd.min_degree_floor, "rejection floor");
    cmd_random->add_option("--out", rnd.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_gen->parsed()) return run_gen(gen);
        if (cmd_verify->parsed()) return run_verify(verify);
        if (cmd_route->parsed()) return run_route(route);
        if (cmd_random->parsed()) return run_random(rnd);
        if (cmd_check->parsed()) {
            ColoredBigraph g = ColoredBigraph::parse(slurp(cc_instance));
            RouteCertificate cert = RouteCertificate::from_json(slurp(cc_cert));
            check_certificate(g, cert);
            std::cout << "certificate ok\n";
            return kExitOk;
        }
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const BelowRegimeError& e) {
        std::cerr << "below-regime: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << "validation failure: " << e.what() << "\n";
        return kExitLawFailure;
    }
    return kExitUsage;
}
