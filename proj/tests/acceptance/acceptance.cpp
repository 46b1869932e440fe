// Acceptance run: one PASS/FAIL line per criterion, each with a wall-clock budget.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>

#include "leibniz/errors.hpp"
#include "leibniz/graded_bracket.hpp"
#include "leibniz/semidirect.hpp"
#include "leibniz/shuffle.hpp"
#include "../support.hpp"

using namespace leibniz;
using namespace testing_support;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream notes;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes << " [failed: " << what << "]";
        }
    }
};

int run(int id, long budget_ms, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.notes << " [exception: " << e.what() << "]";
    }
    const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = ms < budget_ms;
    const bool pass = out.ok && in_budget;
    std::printf("criterion %2d: %s  (%ld ms, budget %ld ms%s)%s\n", id, pass ? "PASS" : "FAIL", ms, budget_ms,
                in_budget ? "" : ", over budget", out.notes.str().c_str());
    std::fflush(stdout);
    return pass ? 0 : 1;
}

std::vector<Representation> module_reps(const LeibnizAlgebra& g) {
    const auto l_only = without_right_action(adjoint_rep(g));
    return {trivial_rep(g), adjoint_rep(g), dual_rep(l_only), conjugation_rep(l_only)};
}

const char* const kRepNames[] = {"trivial", "adjoint", "dual", "conjugation"};

// δ∘δ on every basis cochain of degree k, without assembling matrices.
template <class Delta>
bool squares_to_zero(std::size_t k, std::size_t n, std::size_t m, Delta delta) {
    const std::size_t dim = tuple_count(n, k) * m;
    for (std::size_t c = 0; c < dim; ++c)
        if (!delta(delta(Cochain::basis(k, n, m, c))).is_zero()) return false;
    return true;
}

std::vector<Shuffle> shuffles_by_filter(std::size_t k, std::size_t q) {
    std::vector<std::size_t> p(k + q);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Shuffle> out;
    do {
        if (!std::is_sorted(p.begin(), p.begin() + k) || !std::is_sorted(p.begin() + k, p.end())) continue;
        std::size_t inv = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
        out.push_back({p, inv % 2 == 0 ? 1 : -1});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

int main() {
    int failures = 0;

    failures += run(1, 1000, [](Outcome& o) {
        for (const auto& name : positive_fixtures()) o.require(check_leibniz(fixture(name)).holds(), name);
        const auto bad = check_leibniz(fixture("negative/nonleibniz_square"));
        o.require(!bad.holds(), "nonleibniz_square");
        if (!bad.holds()) o.notes << "\n    nonleibniz_square: " << describe(bad.witnesses().front());
        const auto sl2 = fixture("sl2");
        const auto rep = check_representation(
            representation_from_json(read_json("negative/sl2_adjoint_r_negated.rep.json"), sl2));
        o.require(!rep.holds(), "sl2_adjoint_r_negated");
        if (!rep.holds()) o.notes << "\n    sl2_adjoint_r_negated: " << describe(rep.witnesses().front());
        for (const char* file : {"negative/graph_scalar.json", "negative/graph_E11_E12.json"}) {
            const auto r = graph_check(graph_from_json(read_json(file)));
            o.require(!r.holds(), file);
            if (!r.holds()) o.notes << "\n    " << file << ": " << describe(r.witnesses().front());
        }
    });

    failures += run(2, 5000, [](Outcome& o) {
        for (const auto& name : positive_fixtures()) {
            const auto r = check_jacobiator_identities(fixture(name));
            o.require(r.holds(), name + (r.holds() ? "" : ": " + describe(r.witnesses().front())));
        }
    });

    failures += run(3, 5000, [](Outcome& o) {
        for (const auto& name : positive_fixtures()) {
            const auto L = build_lie2(fixture(name));
            o.require(verify_lie2(L).passes(), name);
            if (name == "omni2") o.require(!L.l3.is_zero(), "omni2 has l3 != 0");
        }
    });

    failures += run(4, 30000, [](Outcome& o) {
        std::size_t checked = 0;
        std::vector<std::string> skipped;
        for (const auto& name : positive_fixtures()) {
            const auto g = fixture(name);
            const std::size_t n = g.dim();
            const auto reps = module_reps(g);
            for (std::size_t r = 0; r < reps.size(); ++r)
                for (std::size_t k = 0; k <= 3; ++k) {
                    if (tuple_count(n, k + 2) * reps[r].vdim > kDefaultCochainCap) {
                        skipped.push_back(name + " " + kRepNames[r] + " k=" + std::to_string(k));
                        continue;
                    }
                    o.require(squares_to_zero(k, n, reps[r].vdim,
                                              [&](const Cochain& c) { return coboundary(reps[r], c); }),
                              name + " " + kRepNames[r] + " k=" + std::to_string(k));
                    ++checked;
                }
            std::vector<NaiveRepresentation> naive{adjoint_naive(g)};
            if (const auto xi = trivial_naive_space(g); xi.dim() > 0) naive.push_back(trivial_naive(g, xi.basis().front()));
            if (n <= 3) naive.push_back(naive_from_rep(adjoint_rep(g)));
            for (const auto& rho : naive)
                for (std::size_t k = 0; k <= 3; ++k) {
                    const std::size_t d = rho.image().dim();
                    if (tuple_count(n, k + 2) * d > kDefaultCochainCap) {
                        skipped.push_back(name + " naive k=" + std::to_string(k));
                        continue;
                    }
                    o.require(squares_to_zero(k, n, d, [&](const Cochain& c) { return naive_coboundary(rho, c); }),
                              name + " naive k=" + std::to_string(k));
                    ++checked;
                }
        }
        o.notes << " " << checked << " (complex, k) pairs checked, " << skipped.size() << " above the cochain cap:";
        for (const auto& s : skipped) o.notes << "\n    skipped " << s;
    });

    failures += run(5, 5000, [](Outcome& o) {
        std::vector<std::pair<std::string, bool>> cases;
        for (const auto& name : positive_fixtures()) cases.emplace_back(name, true);
        cases.emplace_back("negative/nonleibniz_square", false);
        for (const auto& [name, leibniz] : cases) {
            const Cochain a = structure_cochain(fixture(name));
            const Cochain aa = graded_bracket(a, a);
            o.require(aa.is_zero() == leibniz, name + " [a,a]");
            const std::size_t n = a.n();
            auto f = [&](const Vector& x, const Vector& y) { return a.evaluate(std::vector<Vector>{x, y}); };
            std::array<std::size_t, 3> t{};
            for (std::size_t ti = 0; ti < tuple_count(n, 3); ++ti) {
                decode_tuple(ti, n, t);
                const Vector x = unit_vector(n, t[0]), y = unit_vector(n, t[1]), z = unit_vector(n, t[2]);
                const Vector expansion = Rational(2) * (f(f(x, y), z) - f(x, f(y, z)) + f(y, f(x, z)));
                if (!std::equal(expansion.begin(), expansion.end(), aa.value_at(ti).begin())) {
                    o.require(false, name + " expansion");
                    break;
                }
            }
        }
    });

    failures += run(6, 10000, [](Outcome& o) {
        for (const char* name : {"L2", "heis3", "sl2"}) {
            const auto r = maurer_cartan_check(adjoint_rep(fixture(name)));
            o.require(r.holds(), std::string(name) + (r.holds() ? "" : ": " + describe(r.witnesses().front())));
        }
    });

    failures += run(7, 5000, [](Outcome& o) {
        std::vector<std::pair<std::string, Representation>> reps;
        for (const auto& name : positive_fixtures()) {
            const auto g = fixture(name);
            reps.emplace_back(name + " trivial", trivial_rep(g));
            reps.emplace_back(name + " adjoint", adjoint_rep(g));
        }
        reps.emplace_back("L2_adjoint.rep", representation_from_json(read_json("L2_adjoint.rep.json"), fixture("L2")));
        reps.emplace_back("heis3_adjoint.rep",
                          representation_from_json(read_json("heis3_adjoint.rep.json"), fixture("heis3")));
        for (const auto& [label, rep] : reps) {
            if (!check_representation(rep).holds()) continue;
            const auto conj = conjugation_rep(without_right_action(rep));
            o.require(cocycle_check(conj, right_action_cochain(rep)).holds(), label);
        }
        o.notes << " " << reps.size() << " representations";
    });

    failures += run(8, 60000, [](Outcome& o) {
        for (const char* name : {"abelian2", "L2", "heis3"}) {
            const auto g = fixture(name);
            o.require(compare_trivial(g, 2).all_equal(), std::string(name) + " trivial");
            o.require(compare_adjoint(g, 2).all_equal(), std::string(name) + " adjoint");
        }
        const auto sl2 = compare_trivial(fixture("sl2"), 3);
        o.require(sl2.all_equal(), "sl2 trivial");
        o.require(sl2.branch.find("[g,g] = g") != std::string::npos, "sl2 takes the perfect branch");
        for (const auto& d : sl2.degrees)
            if (d.k >= 1) o.require(d.dim_naive == 0 && d.dim_classical == 0, "sl2 zero for k >= 1");
        const auto g = fixture("L2");
        const auto graph = graph_rep_cohomology(naive_from_json(read_json("L2_graph.naive.json"), g),
                                                graph_from_json(read_json("graph_L2.json")), 3);
        o.require(graph.all_equal() && graph.branch == "graph", "L2 tautological graph");
    });

    failures += run(9, 5000, [](Outcome& o) {
        for (std::size_t n = 1; n <= 3; ++n) {
            const auto b = betti(trivial_rep(fixture("abelian" + std::to_string(n))), 3);
            std::size_t power = n;
            for (std::size_t k = 1; k <= 3; ++k, power *= n)
                o.require(b.degrees[k].dim_cohomology == power, "abelian" + std::to_string(n) + " H^" + std::to_string(k));
        }
        for (const auto& name : positive_fixtures()) {
            const auto g = fixture(name);
            o.require(betti(adjoint_rep(g), 0).degrees[0].dim_cohomology == left_center(g).dim(), name + " H^0");
        }
        // left center of ol(R^2) by stacking the left multiplications
        const auto ol = omni_lie(2);
        std::vector<Vector> rows;
        for (std::size_t j = 0; j < ol.dim(); ++j)
            for (std::size_t k = 0; k < ol.dim(); ++k) {
                Vector row(ol.dim());
                for (std::size_t i = 0; i < ol.dim(); ++i) row[i] = ol.c(i, j, k);
                rows.push_back(row);
            }
        const auto oracle = kernel_basis(Matrix::from_rows(rows, ol.dim()));
        o.require(oracle.dim() == 2 && left_center(ol).dim() == 2, "omni2 left center");
    });

    failures += run(10, 1000, [](Outcome& o) {
        for (auto [k, q] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
            auto fast = shuffles(k, q);
            auto slow = shuffles_by_filter(k, q);
            std::sort(fast.begin(), fast.end());
            std::sort(slow.begin(), slow.end());
            o.require(fast == slow, "(" + std::to_string(k) + "," + std::to_string(q) + ")");
            o.notes << " sh(" << k << "," << q << ")=" << slow.size();
        }
    });

    std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
