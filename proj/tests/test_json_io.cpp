#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "revfree/json_io.hpp"

using namespace revfree;

TEST(JsonMatrix, RoundTripAndWireFormat) {
    const BinaryMatrix m{{1, 0, 1}, {0, 1, 0}};
    const json j = matrix_to_json(m);
    EXPECT_EQ(j, json::parse(R"({"rows":2,"cols":3,"ones":[[1,1],[1,3],[2,2]]})"));
    EXPECT_EQ(matrix_from_json(j), m);

    std::mt19937_64 rng(8);
    for (int t = 0; t < 50; ++t) {
        const auto r = oracle::random_matrix(rng, 1 + t % 9, 1 + t % 70, 0.3);
        EXPECT_EQ(matrix_from_json(matrix_to_json(r)), r);
    }
}

TEST(JsonMatrix, Canonicalizes) {
    // Unsorted and duplicated entries read back to the same matrix and sorted output.
    const auto m = matrix_from_json(json::parse(R"({"rows":2,"cols":2,"ones":[[2,2],[1,1],[2,2]]})"));
    EXPECT_EQ(matrix_to_json(m)["ones"], json::parse("[[1,1],[2,2]]"));
}

TEST(JsonMatrix, Errors) {
    EXPECT_THROW(matrix_from_json(json::parse(R"({"rows":2,"ones":[]})")), precondition_error);
    EXPECT_THROW(matrix_from_json(json::parse(R"({"rows":0,"cols":2,"ones":[]})")), precondition_error);
    EXPECT_THROW(matrix_from_json(json::parse(R"({"rows":2,"cols":2,"ones":[[3,1]]})")), precondition_error);
    EXPECT_THROW(matrix_from_json(json::parse(R"({"rows":2,"cols":2,"ones":[[0,1]]})")), precondition_error);
    EXPECT_THROW(matrix_from_json(json::parse(R"({"rows":2,"cols":2,"ones":[[1]]})")), precondition_error);
    EXPECT_THROW(matrix_from_json(json::parse("[1,2]")), precondition_error);
}

TEST(JsonPlane, RoundTrip) {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const auto p = plane_build(GaloisField::of_order(q));
        const auto back = plane_from_json(plane_to_json(p));
        EXPECT_EQ(back.order, p.order);
        EXPECT_EQ(back.points, p.points);
        EXPECT_EQ(back.lines, p.lines);
        EXPECT_EQ(back.point_count, p.point_count);
        EXPECT_TRUE(plane_verify(back).all_passed());
    }
}

TEST(JsonPlane, LinesOnlyAndErrors) {
    const auto fano = plane_to_json(plane_build(GaloisField::of_order(2)));
    json bare = fano;
    bare["points"] = json::array();
    const auto p = plane_from_json(bare);
    EXPECT_EQ(p.point_count, 7u);
    EXPECT_TRUE(plane_verify(p).all_passed());

    json zero = fano;
    zero["lines"][0][0] = 0;
    EXPECT_THROW(plane_from_json(zero), precondition_error);
    json bad_point = fano;
    bad_point["points"][0] = json::array({1, 2});
    EXPECT_THROW(plane_from_json(bad_point), precondition_error);
}

TEST(JsonPlane, ReportListsFailures) {
    auto p = plane_build(GaloisField::of_order(2));
    std::swap(p.lines[0][0], p.lines[1][0]);
    const json r = plane_report_to_json(plane_verify(p));
    EXPECT_FALSE(r["passed"].get<bool>());
    bool any_counterexample = false;
    for (const auto& c : r["checks"])
        if (!c["passed"].get<bool>()) any_counterexample |= c.contains("counterexample");
    EXPECT_TRUE(any_counterexample);
}

TEST(JsonCode, RoundTrip) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 40; ++t) {
        const bool rf = t % 2 == 0;
        const auto c = oracle::random_code(rng, 6, 1 + t % 5, rf, 10);
        const auto back = code_from_json(code_to_json(c));
        EXPECT_EQ(back.words(), c.words());
        EXPECT_EQ(back.n(), c.n());
        EXPECT_EQ(back.k(), c.k());
        EXPECT_EQ(back.repetition_free(), c.repetition_free());
    }
    const auto j = json::parse(R"({"n":3,"k":2,"repetition_free":true,"words":[[1,2],[3,1]]})");
    EXPECT_EQ(code_to_json(code_from_json(j)), j);
}

TEST(JsonCode, Errors) {
    auto parse = [](const char* s) { return code_from_json(json::parse(s)); };
    EXPECT_THROW(parse(R"({"n":3,"k":2,"words":[]})"), precondition_error);
    EXPECT_THROW(parse(R"({"n":3,"k":2,"repetition_free":1,"words":[]})"), precondition_error);
    EXPECT_THROW(parse(R"({"n":3,"k":2,"repetition_free":true,"words":[[1,4]]})"), precondition_error);
    EXPECT_THROW(parse(R"({"n":3,"k":2,"repetition_free":true,"words":[[1,1]]})"), precondition_error);
    EXPECT_THROW(parse(R"({"n":3,"k":2,"repetition_free":true,"words":[[1,2,3]]})"), precondition_error);
    EXPECT_THROW(parse(R"({"n":3,"k":2,"repetition_free":true,"words":[[1,2],[1,2]]})"), precondition_error);
    EXPECT_THROW(parse(R"({"n":3,"k":2,"repetition_free":true,"words":[[0,2]]})"), precondition_error);
}

TEST(JsonVerify, WitnessIsOneBased) {
    const auto c = code_from_json(
        json::parse(R"({"n":3,"k":3,"repetition_free":true,"words":[[1,2,3],[2,1,3]]})"));
    const json v = verify_to_json(c, verify_reverse_free(c));
    EXPECT_FALSE(v["holds"].get<bool>());
    EXPECT_EQ(v["witness"]["positions"], json::parse("[1,2]"));
    EXPECT_EQ(v["witness"]["word_indices"], json::parse("[1,2]"));
    EXPECT_EQ(v["witness"]["words"], json::parse("[[1,2,3],[2,1,3]]"));
    const json ok = verify_to_json(c, verify_full_of_flips(c));
    EXPECT_TRUE(ok["holds"].get<bool>());
    EXPECT_FALSE(ok.contains("witness"));
}

TEST(JsonShrink, TraceSchema) {
    Code c(3, 2, true);
    for (auto w : {std::vector<Letter>{1, 2}, {1, 3}, {2, 3}}) c.add(Word::from_one_based(w));
    const json t = trace_to_json(run_shrink(c, 0.0));
    for (const char* key : {"steps", "heavy_count", "phase_starts", "initial_size", "final_size", "final_density",
                            "threshold", "log2_size_bound_trivial", "log2_size_bound_combined"})
        EXPECT_TRUE(t.contains(key)) << key;
    ASSERT_FALSE(t["steps"].empty());
    const json& s = t["steps"][0];
    EXPECT_EQ(s["kind"], "light");
    EXPECT_EQ(s["entry"], json::parse("[1,2]"));
    EXPECT_EQ(s["weight_before"], 4);
    EXPECT_EQ(s["weight_after"], 3);
    EXPECT_FALSE(s.contains("avoided_count"));
}

TEST(JsonBounds, CsvAndJson) {
    const auto b = bound_table(7, 7, 24);
    EXPECT_EQ(bounds_csv_header().find("n,k,size,exponent_achieved"), 0u);
    const auto row = bounds_csv_row(b);
    EXPECT_EQ(row.rfind("7,7,24,1.63", 0), 0u);
    const auto header = bounds_csv_header();
    EXPECT_EQ(std::count(row.begin(), row.end(), ','), std::count(header.begin(), header.end(), ','));
    EXPECT_NEAR(bounds_to_json(b)["exponent_achieved"].get<double>(), b.exponent_achieved, 0);
}

TEST(JsonExact, Shape) {
    const json j = exact_to_json(3, 3, "F", max_reverse_free(3, 3, true));
    EXPECT_EQ(j["value"], 3);
    EXPECT_EQ(j["witness"].size(), 3u);
    EXPECT_EQ(j["mode"], "F");
}
