#include "chromacode/errors.hpp"
#include "chromacode/json_io.hpp"
#include "chromacode/or_product.hpp"

#include <gtest/gtest.h>

using namespace chromacode;

TEST(JsonIo, GraphRoundTrip) {
    const Graph g = or_power(make_prism(), 2);
    const Json j = to_json(g);
    EXPECT_EQ(j["tuple_base"], 6);
    const Graph back = graph_from_json(j);
    EXPECT_EQ(back, g);
    EXPECT_EQ(graph_from_json(Json{{"kind", "cycle"}, {"size", 5}}), make_cycle(5));
    EXPECT_THROW(graph_from_json(Json{{"kind", "hypercube"}, {"size", 3}}), InvalidArgument);
}

TEST(JsonIo, FunctionAndDistribution) {
    const auto spec = example1_spec();
    const auto back = function_spec_from_json(to_json(spec));
    EXPECT_EQ(back.table, spec.table);
    const auto pmf = joint_pmf_from_json(to_json(example1_pmf()), 4, 2);
    EXPECT_EQ(pmf.probs, example1_pmf().probs);
    EXPECT_EQ(joint_pmf_from_json(Json("uniform"), 4, 2).probs, uniform_joint_pmf(4, 2).probs);
}

TEST(JsonIo, Rationals) {
    EXPECT_EQ(rational_from_json(Json("3/12")), Rational(1, 4));
    EXPECT_EQ(rational_from_json(rational_to_json(Rational(7, 9))), Rational(7, 9));
    EXPECT_THROW(parse_rational("1/0"), InvalidArgument);
}

TEST(JsonIo, DumpHasTrailingNewline) {
    const auto text = dump_json(Json{{"a", 1}});
    EXPECT_EQ(text.back(), '\n');
}
