#include <functional>

#include <gtest/gtest.h>

#include "leibniz/errors.hpp"
#include "support.hpp"

using namespace leibniz;
using namespace testing_support;

namespace {

std::string error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Json, RationalForms) {
    EXPECT_EQ(rational_from_json(Json("-3/4"), "x"), Rational(-3, 4));
    EXPECT_EQ(rational_from_json(Json(7), "x"), Rational(7));
    EXPECT_EQ(rational_from_json(Json("6/4"), "x"), Rational(3, 2));
    EXPECT_THROW(rational_from_json(Json(0.5), "x"), InputError);
    EXPECT_THROW(rational_from_json(Json("1/0"), "x"), InputError);
    EXPECT_EQ(to_json(Rational(6, -4)), Json("-3/2"));
    EXPECT_EQ(to_json(Rational(2)), Json("2"));
}

TEST(Json, AlgebraRoundTrip) {
    for (const auto& name : positive_fixtures()) {
        const auto g = fixture(name);
        const Json j = algebra_to_json(g);
        EXPECT_EQ(j["schema"], kSchema);
        EXPECT_EQ(algebra_from_json(j), g) << name;
        EXPECT_EQ(algebra_from_json(parse_json_text(j.dump(), name)), g) << name;
    }
}

TEST(Json, RepresentationRoundTrip) {
    const auto g = fixture("heis3");
    const auto rep = adjoint_rep(g);
    const auto back = representation_from_json(representation_to_json(rep), g);
    EXPECT_EQ(back.l, rep.l);
    EXPECT_EQ(back.r, rep.r);
    const auto fromfile = representation_from_json(read_json("heis3_adjoint.rep.json"), g);
    EXPECT_EQ(fromfile.l, rep.l);
    EXPECT_EQ(fromfile.r, rep.r);
}

TEST(Json, NaiveAndGraphRoundTrip) {
    const auto g = fixture("L2");
    const auto rho = naive_from_json(read_json("L2_graph.naive.json"), g);
    const auto back = naive_from_json(naive_to_json(rho), g);
    EXPECT_EQ(back.phi(), rho.phi());
    EXPECT_EQ(back.theta(), rho.theta());
    EXPECT_EQ(rho.phi(), adjoint_naive(g).phi());

    const auto phi = graph_from_json(read_json("graph_heis3.json"));
    EXPECT_EQ(graph_from_json(graph_to_json(phi)).phi, phi.phi);
    EXPECT_EQ(phi.phi, left_multiplication_map(fixture("heis3")).phi);
}

TEST(Json, Lie2RoundTrip) {
    const auto L = build_lie2(fixture("omni2"));
    const auto back = lie2_from_json(lie2_to_json(L));
    EXPECT_EQ(back.dim0, L.dim0);
    EXPECT_EQ(back.dim1, L.dim1);
    EXPECT_EQ(back.l1, L.l1);
    EXPECT_EQ(back.l2_00, L.l2_00);
    EXPECT_EQ(back.l2_01, L.l2_01);
    EXPECT_EQ(back.l3, L.l3);
    EXPECT_TRUE(verify_lie2(back).passes());
}

TEST(Json, MalformedTextReportsLineAndColumn) {
    const std::string msg = error_of([] { parse_json_text("{\n  \"dim\": 2,\n  oops\n}", "in.json"); });
    EXPECT_NE(msg.find("in.json:3:"), std::string::npos) << msg;
    EXPECT_NE(msg.find("malformed JSON"), std::string::npos) << msg;
}

TEST(Json, StructuralErrorsNameTheLocation) {
    Json j = algebra_to_json(fixture("L2"));
    j["c"][1][0] = Json::array({"0"});
    const std::string msg = error_of([&] { algebra_from_json(j); });
    EXPECT_NE(msg.find("c[1][0]"), std::string::npos) << msg;

    Json k = algebra_to_json(fixture("L2"));
    k["c"][0][1][1] = "x";
    EXPECT_NE(error_of([&] { algebra_from_json(k); }).find("c[0][1][1]"), std::string::npos);

    Json missing = algebra_to_json(fixture("L2"));
    missing.erase("c");
    EXPECT_NE(error_of([&] { algebra_from_json(missing); }).find("\"c\""), std::string::npos);

    EXPECT_THROW(algebra_from_json(Json::array()), InputError);
}

TEST(Json, SchemaMismatchIsRejected) {
    Json j = algebra_to_json(fixture("L2"));
    j["schema"] = "leibniz-kit/2";
    EXPECT_NE(error_of([&] { algebra_from_json(j); }).find("schema"), std::string::npos);
    j.erase("schema");
    EXPECT_NO_THROW(algebra_from_json(j));
}

TEST(Json, RepresentationShapeErrors) {
    const auto g = fixture("L2");
    Json j = representation_to_json(adjoint_rep(g));
    j["l"].erase(1);
    EXPECT_THROW(representation_from_json(j, g), InputError);
    EXPECT_THROW(representation_from_json(representation_to_json(adjoint_rep(fixture("heis3"))), g), InputError);
}

TEST(Json, Reports) {
    const auto bad = check_leibniz(fixture("negative/nonleibniz_square"));
    const Json j = to_json(bad, 1);
    EXPECT_FALSE(j["holds"].get<bool>());
    EXPECT_EQ(j["witnesses"].size(), 1u);
    EXPECT_EQ(j["witnesses"][0]["indices"], Json::array({0, 0, 0}));
    EXPECT_EQ(j["witnesses"][0]["defect"], Json::array({"-1"}));

    const Json b = to_json(betti(trivial_rep(fixture("abelian2")), 2));
    EXPECT_EQ(b["degrees"][2]["dim_H"], 4);

    const Json c = to_json(compare_trivial(fixture("L2"), 2));
    EXPECT_TRUE(c["all_equal"].get<bool>());
    EXPECT_TRUE(c["degrees"][0]["informational"].get<bool>());
}
