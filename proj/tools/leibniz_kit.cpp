// leibniz-kit: command-line front end for the leibniz_kit library.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 input error,
// 3 resource cap refused, 4 internal error.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "leibniz/errors.hpp"
#include "leibniz/json_io.hpp"
#include "leibniz/semidirect.hpp"

using namespace leibniz;

namespace {

enum ExitCode { kPass = 0, kCheckFailed = 1, kInputError = 2, kResourceCap = 3, kInternal = 4 };

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

struct Run {
    std::vector<std::string> argv;
    Json inputs = Json::array();
    Json results = Json::object();
    Json checks = Json::array();
    bool failed = false;
    bool stdin_used = false;
    bool json = false;
    std::size_t cap = kDefaultCochainCap;
    std::ostringstream text;

    void check(const std::string& name, bool passed) {
        checks.push_back(Json{{"name", name}, {"passed", passed}});
        if (!passed) failed = true;
    }

    Json load(const std::string& path) {
        std::string bytes;
        if (path == "-") {
            if (stdin_used) throw InputError("standard input can only be read once");
            stdin_used = true;
            bytes.assign(std::istreambuf_iterator<char>(std::cin), {});
        } else {
            std::ifstream in(path, std::ios::binary);
            if (!in) throw InputError(path + ": cannot open");
            bytes.assign(std::istreambuf_iterator<char>(in), {});
        }
        inputs.push_back(Json{{"path", path}, {"fnv1a64", hex64(fnv1a64(bytes))}});
        return parse_json_text(bytes, path == "-" ? "<stdin>" : path);
    }
};

std::size_t cap_from_env() {
    const char* env = std::getenv("LEIBNIZ_KIT_MAX_COCHAIN_DIM");
    if (!env || !*env) return kDefaultCochainCap;
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(env, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != std::string_view(env).size() || v == 0)
        throw InputError("LEIBNIZ_KIT_MAX_COCHAIN_DIM must be a positive integer");
    return static_cast<std::size_t>(v);
}

void print_witnesses(std::ostream& os, const IdentityReport& report, std::size_t limit = 5) {
    for (std::size_t i = 0; i < report.witnesses().size() && i < limit; ++i)
        os << "  witness: " << describe(report.witnesses()[i]) << "\n";
    if (report.witnesses().size() > limit)
        os << "  ... " << report.witnesses().size() - limit << " more\n";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string basis_text(const Subspace& s) {
    std::string out;
    for (const auto& v : s.basis()) out += (out.empty() ? "" : " ") + format_vector(v);
    return out.empty() ? "(none)" : out;
}

void betti_table(std::ostream& os, const BettiReport& b) {
    os << "   k   dim C  rank d  dim ker  dim H\n";
    for (const auto& d : b.degrees)
        os << std::setw(4) << d.k << std::setw(8) << d.dim_cochains << std::setw(8) << d.rank_d << std::setw(9)
           << d.dim_kernel << std::setw(7) << d.dim_cohomology << "\n";
}

void comparison_table(std::ostream& os, const ComparisonReport& c) {
    os << "branch: " << c.branch << "\n";
    os << "   k  naive  classical  equal\n";
    for (const auto& d : c.degrees)
        os << std::setw(4) << d.k << std::setw(7) << d.dim_naive << std::setw(11) << d.dim_classical << "  "
           << (d.informational ? "(degree 0, not compared)" : yes_no(d.equal)) << "\n";
    if (!c.correspondence.holds()) {
        os << "cochain correspondence: FAILED\n";
        print_witnesses(os, c.correspondence);
    }
}

LeibnizAlgebra load_algebra(Run& run, const std::string& path) { return algebra_from_json(run.load(path)); }

bool require_leibniz(Run& run, const LeibnizAlgebra& g) {
    const auto report = check_leibniz(g);
    run.check("leibniz", report.holds());
    if (!report.holds()) {
        run.results["leibniz"] = to_json(report);
        run.text << "Leibniz: no\n";
        print_witnesses(run.text, report);
    }
    return report.holds();
}

// A --rep argument: "trivial", "adjoint", or a representation or naive
// representation file.
struct RepInput {
    std::string name;
    std::optional<Representation> classical;
    std::optional<NaiveRepresentation> naive;
};

RepInput load_rep(Run& run, const std::string& which, const LeibnizAlgebra& g) {
    if (which == "trivial") return {which, trivial_rep(g), std::nullopt};
    if (which == "adjoint") return {which, adjoint_rep(g), std::nullopt};
    const Json j = run.load(which);
    if (j.is_object() && j.contains("phi")) return {which, std::nullopt, naive_from_json(j, g)};
    Representation rep = representation_from_json(j, g);
    rep.validate_shape();
    return {which, std::move(rep), std::nullopt};
}

bool require_rep(Run& run, const Representation& rep) {
    const auto report = check_representation(rep);
    run.check("representation", report.holds());
    if (!report.holds()) {
        run.results["representation"] = to_json(report);
        run.text << "representation: no\n";
        print_witnesses(run.text, report);
    }
    return report.holds();
}

bool require_naive(Run& run, const NaiveRepresentation& rho) {
    const auto report = naive_check(rho);
    run.check("naive-representation", report.holds());
    if (!report.holds()) {
        run.results["naive_representation"] = to_json(report);
        run.text << "naive representation: no\n";
        print_witnesses(run.text, report);
    }
    return report.holds();
}

void cmd_check(Run& run, const std::string& path) {
    const LeibnizAlgebra g = load_algebra(run, path);
    const auto leib = check_leibniz(g);
    run.check("leibniz", leib.holds());
    run.results["dim"] = g.dim();
    run.results["leibniz"] = to_json(leib);
    run.text << "dim: " << g.dim() << "\n";
    run.text << "Leibniz: " << yes_no(leib.holds()) << "\n";
    print_witnesses(run.text, leib);

    const Subspace z = left_center(g);
    const Subspace d = derived_subalgebra(g);
    Json zb = Json::array();
    for (const auto& v : z.basis()) zb.push_back(to_json(v));
    run.results["left_center"] = Json{{"dim", z.dim()}, {"basis", zb}};
    run.results["derived_dim"] = d.dim();
    run.results["lie"] = is_lie(g);
    run.text << "Z dim: " << z.dim() << "  basis: " << basis_text(z) << "\n";
    run.text << "[g,g] dim: " << d.dim() << "\n";
    run.text << "Lie: " << yes_no(is_lie(g)) << "\n";
    if (!leib.holds()) return;

    const auto squares = square_in_center_check(g);
    const auto ideal = left_center_ideal_check(g);
    run.check("square-in-center", squares.holds());
    run.check("center-ideal", ideal.holds());
    run.results["square_in_center"] = to_json(squares);
    run.results["center_ideal"] = to_json(ideal);
    run.text << "[x,x] in Z: " << yes_no(squares.holds()) << "\n";
    run.text << "Z ideal: " << yes_no(ideal.holds()) << "\n";
}

void cmd_lie2(Run& run, const std::string& path) {
    const LeibnizAlgebra g = load_algebra(run, path);
    if (!require_leibniz(run, g)) return;
    const auto jac = check_jacobiator_identities(g);
    run.check("jacobiator", jac.holds());
    const Lie2Algebra L = build_lie2(g);
    const AxiomReport axioms = verify_lie2(L);
    run.check("lie2-axioms", axioms.passes());
    run.results["jacobiator"] = to_json(jac);
    run.results["lie2"] = lie2_to_json(L);
    run.results["axioms"] = to_json(axioms);
    run.results["l3_zero"] = L.l3.is_zero();

    run.text << "g1 = Z(g) dim: " << L.dim1 << "\n";
    run.text << "g0 = g dim: " << L.dim0 << "\n";
    run.text << "Jacobiator identities: " << (jac.holds() ? "pass" : "FAIL") << "\n";
    print_witnesses(run.text, jac);
    run.text << "l3: " << (L.l3.is_zero() ? "zero" : "nonzero") << "\n";
    for (std::size_t i = 0; i < axioms.axioms.size(); ++i) {
        run.text << "axiom " << AxiomReport::names[i] << ": " << (axioms.axioms[i].holds() ? "pass" : "FAIL") << "\n";
        print_witnesses(run.text, axioms.axioms[i]);
    }
}

struct CohomologyOptions {
    std::string rep = "trivial";
    std::size_t max_degree = 3;
    bool naive = false;
    bool compare = false;
    std::string graph;
};

void report_comparison(Run& run, const ComparisonReport& c) {
    run.check("comparison", c.all_equal());
    run.results["comparison"] = to_json(c);
    comparison_table(run.text, c);
}

void cmd_cohomology(Run& run, const std::string& path, const CohomologyOptions& opt) {
    const LeibnizAlgebra g = load_algebra(run, path);
    if (!require_leibniz(run, g)) return;
    RepInput rep = load_rep(run, opt.rep, g);
    std::optional<GraphMap> phi;
    if (!opt.graph.empty()) phi = graph_from_json(run.load(opt.graph));
    if (phi && !rep.naive) throw InputError("--graph needs a naive representation file for --rep");
    if (rep.naive && !require_naive(run, *rep.naive)) return;
    if (rep.classical && !require_rep(run, *rep.classical)) return;
    const std::size_t K = opt.max_degree;

    if (opt.compare) {
        if (rep.name == "trivial") {
            report_comparison(run, compare_trivial(g, K, run.cap));
        } else if (rep.name == "adjoint") {
            report_comparison(run, compare_adjoint(g, K, run.cap));
        } else if (rep.naive && phi) {
            report_comparison(run, graph_rep_cohomology(*rep.naive, *phi, K, run.cap));
        } else {
            throw InputError("--compare needs --rep trivial, --rep adjoint, or a naive representation with --graph");
        }
        return;
    }

    if (rep.classical) {
        const BettiReport b = betti(*rep.classical, K, run.cap);
        run.results["betti"] = to_json(b);
        run.text << "H(g; " << rep.name << ")\n";
        betti_table(run.text, b);
    } else if (phi) {
        const Representation classical = graph_representation(*rep.naive, *phi);
        if (!require_rep(run, classical)) return;
        const BettiReport b = betti(classical, K, run.cap);
        run.results["betti"] = to_json(b);
        run.text << "H(g; l, r) from the graph\n";
        betti_table(run.text, b);
    }

    if (opt.naive || rep.naive) {
        std::optional<NaiveRepresentation> rho = rep.naive;
        if (!rho) {
            if (rep.name == "trivial") {
                const Subspace xi = trivial_naive_space(g);
                rho = xi.dim() == 0 ? NaiveRepresentation(g, 1, std::vector<Matrix>(g.dim(), Matrix(1, 1)),
                                                          std::vector<Vector>(g.dim(), Vector(1)))
                                    : trivial_naive(g, xi.basis().front());
            } else if (rep.name == "adjoint") {
                rho = adjoint_naive(g);
            } else {
                rho = naive_from_rep(*rep.classical);
            }
        }
        const BettiReport b = naive_betti(*rho, K, run.cap);
        run.results["naive_betti"] = to_json(b);
        run.results["naive_image_dim"] = rho->image().dim();
        run.text << "H_naive (dim Im rho = " << rho->image().dim() << ")\n";
        betti_table(run.text, b);
    }
}

void cmd_mc(Run& run, const std::string& path, const std::string& rep_arg) {
    const LeibnizAlgebra g = load_algebra(run, path);
    if (!require_leibniz(run, g)) return;
    const RepInput rep = load_rep(run, rep_arg, g);
    if (!rep.classical) throw InputError("mc needs a representation, not a naive representation");
    if (!require_rep(run, *rep.classical)) return;
    const auto report = maurer_cartan_check(*rep.classical);
    run.check("maurer-cartan", report.holds());
    run.results["maurer_cartan"] = to_json(report);
    run.text << "Maurer-Cartan equation for rbar: " << (report.holds() ? "holds" : "FAILS") << "\n";
    print_witnesses(run.text, report);

    const auto cocycle = cocycle_check(conjugation_rep(without_right_action(*rep.classical)),
                                       right_action_cochain(*rep.classical), run.cap);
    run.check("right-action-cocycle", cocycle.holds());
    run.results["right_action_cocycle"] = to_json(cocycle);
    run.text << "r is a 1-cocycle: " << yes_no(cocycle.holds()) << "\n";
    print_witnesses(run.text, cocycle);
}

// Commands that print an algebra; check results go to stderr so stdout stays
// a valid algebra document.
int emit_algebra(const LeibnizAlgebra& g) {
    std::cout << algebra_to_json(g).dump(2) << "\n";
    return kPass;
}

int cmd_semidirect(Run& run, const std::string& path, const std::string& rep_arg, const std::string& mode) {
    const LeibnizAlgebra g = load_algebra(run, path);
    if (!require_leibniz(run, g)) return kCheckFailed;
    const RepInput rep = load_rep(run, rep_arg, g);
    if (!rep.classical) throw InputError("semidirect needs a representation, not a naive representation");
    if (!require_rep(run, *rep.classical)) return kCheckFailed;
    return emit_algebra(semidirect(*rep.classical, mode == "l0" ? SemidirectMode::LeftOnly : SemidirectMode::LeftRight));
}

int cmd_graph(Run& run, const std::string& path, bool induced) {
    const GraphMap phi = graph_from_json(run.load(path));
    phi.validate_shape();
    const auto report = graph_check(phi);
    run.check("graph", report.holds());
    if (induced) {
        if (!report.holds()) {
            std::cerr << "graph condition fails\n";
            print_witnesses(std::cerr, report);
            return kCheckFailed;
        }
        return emit_algebra(induced_leibniz(phi));
    }
    run.results["graph"] = to_json(report);
    run.text << "graph is a subalgebra: " << yes_no(report.holds()) << "\n";
    print_witnesses(run.text, report);
    if (report.holds()) {
        const LeibnizAlgebra g = induced_leibniz(phi);
        run.results["induced_lie"] = is_lie(g);
        run.text << "induced Leibniz algebra: dim " << g.dim() << ", Lie: " << yes_no(is_lie(g)) << "\n";
    }
    return -1;
}

}  // namespace

int main(int argc, char** argv) {
    Run run;
    run.argv.assign(argv, argv + argc);
    const auto start = std::chrono::steady_clock::now();

    CLI::App app{"Exact computations with finite-dimensional Leibniz algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", run.json, "Print a JSON run report instead of text");

    std::string algebra, rep_arg = "adjoint", mode = "lr", graph_path;
    std::size_t omni_dim_arg = 0;
    bool induced = false;
    CohomologyOptions coh;

    auto* check = app.add_subcommand("check", "Leibniz identity, left center, derived subalgebra, Lie test");
    check->add_option("algebra", algebra, "Algebra file, or - for stdin")->required();

    auto* lie2 = app.add_subcommand("lie2", "Build and verify the Lie 2-algebra of the skew-symmetrization");
    lie2->add_option("algebra", algebra)->required();

    auto* cohom = app.add_subcommand("cohomology", "Leibniz and naive cohomology dimensions");
    cohom->add_option("algebra", algebra)->required();
    cohom->add_option("--rep", coh.rep, "trivial, adjoint, or a (naive) representation file")
        ->capture_default_str();
    cohom->add_option("--max-degree", coh.max_degree)->capture_default_str();
    cohom->add_flag("--naive", coh.naive, "Also compute naive cohomology");
    cohom->add_flag("--compare", coh.compare, "Compare naive and Leibniz cohomology degree by degree");
    cohom->add_option("--graph", coh.graph, "Graph map file for a naive representation inside its graph");

    auto* mc = app.add_subcommand("mc", "Maurer-Cartan check for rbar and the 1-cocycle check for r");
    mc->add_option("algebra", algebra)->required();
    mc->add_option("rep", rep_arg, "trivial, adjoint, or a representation file")->capture_default_str();

    auto* semi = app.add_subcommand("semidirect", "Print the semidirect product algebra");
    semi->add_option("algebra", algebra)->required();
    semi->add_option("rep", rep_arg)->required();
    semi->add_option("--mode", mode)->check(CLI::IsMember({"lr", "l0"}))->capture_default_str();

    auto* omni = app.add_subcommand("omni", "Print the omni-Lie algebra ol(V)");
    omni->add_option("--dim", omni_dim_arg, "dim V")->required();

    auto* graph = app.add_subcommand("graph", "Check the graph condition for phi : V -> gl(V)");
    graph->add_option("phi", graph_path)->required();
    graph->add_flag("--induced", induced, "Print the induced Leibniz algebra on V");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kInputError;
    }

    int code = kPass;
    try {
        run.cap = cap_from_env();
        int direct = -1;
        if (*check) cmd_check(run, algebra);
        else if (*lie2) cmd_lie2(run, algebra);
        else if (*cohom) cmd_cohomology(run, algebra, coh);
        else if (*mc) cmd_mc(run, algebra, rep_arg);
        else if (*semi) direct = cmd_semidirect(run, algebra, rep_arg, mode);
        else if (*omni) direct = emit_algebra(omni_lie(omni_dim_arg));
        else if (*graph) direct = cmd_graph(run, graph_path, induced);
        if (direct >= 0) {
            if (direct != kPass) std::cerr << run.text.str();
            return direct;
        }
        code = run.failed ? kCheckFailed : kPass;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource cap: cochain dimension " << e.requested() << " exceeds cap " << e.cap()
                  << " (set LEIBNIZ_KIT_MAX_COCHAIN_DIM to raise it)\n";
        return kResourceCap;
    } catch (const CheckFailure& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }

    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (run.json) {
        Json report = Json::object();
        report["schema"] = kSchema;
        report["command"] = run.argv;
        report["inputs"] = run.inputs;
        report["results"] = run.results;
        report["checks"] = run.checks;
        report["elapsed_ms"] = std::round(ms * 1000) / 1000;
        report["exit_status"] = code;
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << run.text.str();
        std::cout << (code == kPass ? "result: pass" : "result: FAIL") << "\n";
    }
    return code;
}
