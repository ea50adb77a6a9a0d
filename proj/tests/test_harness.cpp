#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <vector>

#include "json.hpp"
#include "srpow/harness.hpp"

using namespace srpow;

namespace {

Graph c4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
Graph c5() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }
Graph k4() {
    return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

} // namespace

TEST_CASE("labeled enumeration counts and order") {
    const std::vector<Graph> g3 = enumerate_graphs(3);
    CHECK(g3.size() == 4); // triangle and the three labelings of the 2-edge path
    const std::vector<Graph> g4 = enumerate_graphs(4);
    CHECK(g4.size() == 41);
    const std::vector<Graph> g5 = enumerate_graphs(5);
    CHECK(g5.size() == 768);
    for (std::size_t i = 1; i < g4.size(); ++i)
        CHECK(g4[i - 1].edge_bitmask() < g4[i].edge_bitmask());
    for (const Graph& g : g3) CHECK(!g.edges().empty());
    CHECK_THROWS_AS(enumerate_graphs(2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_graphs(8), std::invalid_argument);
}

TEST_CASE("seeded sampling is deterministic and duplicate-free") {
    const std::vector<Graph> a = sample_graphs(6, 50, 12345);
    const std::vector<Graph> b = sample_graphs(6, 50, 12345);
    REQUIRE(a.size() == 50);
    std::vector<std::uint64_t> seen;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].edge_bitmask() == b[i].edge_bitmask());
        seen.push_back(a[i].edge_bitmask());
    }
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    const std::vector<Graph> c = sample_graphs(6, 50, 54321);
    bool differs = false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].edge_bitmask() != a[i].edge_bitmask()) differs = true;
    CHECK(differs);
}

TEST_CASE("analyze C5: the m = 2 / m = 3 split") {
    const AnalysisReport r = analyze(c5(), 3);
    CHECK(r.mismatches.empty());
    REQUIRE(r.per_m.size() == 3);
    CHECK(r.per_m[0].cm_symbolic);
    CHECK(r.per_m[0].cm_ordinary);
    CHECK(r.per_m[0].powers_equal);

    CHECK(r.per_m[1].cm_symbolic);
    CHECK(r.per_m[1].cm_ordinary);
    CHECK(r.per_m[1].powers_equal);

    CHECK_FALSE(r.per_m[2].cm_symbolic);
    CHECK_FALSE(r.per_m[2].cm_ordinary);
    CHECK_FALSE(r.per_m[2].powers_equal);
    REQUIRE(r.per_m[2].witness_non_cm_symbolic.has_value());
    REQUIRE(r.per_m[2].witness_power_gap.has_value());
    // witnesses are verifiable in isolation
    const MonomialIdeal sym3 = symbolic_power(c5(), 3);
    const auto& w = *r.per_m[2].witness_non_cm_symbolic;
    CHECK(graded_lc_dim(sym3, w.i, w.a) == w.dim);
    CHECK(w.i < krull_dim(sym3));
    const Monomial& gap = *r.per_m[2].witness_power_gap;
    CHECK(in_symbolic_power(c5(), 3, gap));
    CHECK_FALSE(ideal_of_graph(c5()).power(3).contains(gap));
}

TEST_CASE("analyze C4: everything holds at all powers") {
    const AnalysisReport r = analyze(c4(), 4);
    CHECK(r.mismatches.empty());
    for (const PerMRecord& rec : r.per_m) {
        CHECK(rec.cm_symbolic);
        CHECK(rec.cm_ordinary);
        CHECK(rec.powers_equal);
        CHECK_FALSE(rec.witness_non_cm_symbolic.has_value());
        CHECK_FALSE(rec.witness_power_gap.has_value());
    }
}

TEST_CASE("analyze K4: symbolic CM without power equality") {
    const AnalysisReport r = analyze(k4(), 3);
    CHECK(r.mismatches.empty());
    for (const PerMRecord& rec : r.per_m) CHECK(rec.cm_symbolic);
    CHECK(r.per_m[0].powers_equal);
    CHECK_FALSE(r.per_m[1].powers_equal);
    CHECK_FALSE(r.per_m[2].powers_equal);
    REQUIRE(r.per_m[1].witness_power_gap.has_value());
    CHECK(*r.per_m[1].witness_power_gap == Monomial({1, 1, 1, 1}));
    CHECK_THROWS_AS(analyze(k4(), 1), std::invalid_argument);
}

TEST_CASE("theorem id round trip and defaults") {
    for (TheoremId id : {TheoremId::CmSym2, TheoremId::CmSymHigh, TheoremId::Eq2,
                         TheoremId::EqHigh, TheoremId::CmOrd2, TheoremId::CmOrdHigh,
                         TheoremId::CoverStd})
        CHECK(parse_theorem_id(to_string(id)) == id);
    CHECK_THROWS_AS(parse_theorem_id("EQ-9"), std::invalid_argument);
    CHECK(default_m(TheoremId::CmSym2) == 2);
    CHECK(default_m(TheoremId::EqHigh) == 3);
}

TEST_CASE("check_theorem: cover algebra verdicts") {
    CHECK(check_theorem(TheoremId::CoverStd, c4(), 3).algebraic);
    CHECK(check_theorem(TheoremId::CoverStd, c4(), 3).predicted);
    CHECK_FALSE(check_theorem(TheoremId::CoverStd, k4(), 3).algebraic);
    CHECK_FALSE(check_theorem(TheoremId::CoverStd, k4(), 3).predicted);
    CHECK_FALSE(check_theorem(TheoremId::CoverStd, c5(), 3).algebraic);
    CHECK_FALSE(check_theorem(TheoremId::CoverStd, c5(), 3).predicted);
    const Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(check_theorem(TheoremId::CoverStd, p3, 3).algebraic);
    CHECK(check_theorem(TheoremId::CoverStd, p3, 3).predicted);
}

TEST_CASE("verify: clean censuses on four vertices") {
    int observed = 0;
    const CensusResult r =
        verify(TheoremId::CmSym2, 4, 4, 2, std::nullopt, 1,
               [&](int, std::uint64_t, bool, bool) { ++observed; });
    CHECK(r.mismatches.empty());
    CHECK(r.graphs_examined == 41);
    CHECK(observed == 41);
    CHECK_FALSE(r.sample_size.has_value());

    CHECK(verify(TheoremId::Eq2, 4, 4, 2).mismatches.empty());
    CHECK(verify(TheoremId::EqHigh, 4, 4, 3).mismatches.empty());
    CHECK(verify(TheoremId::CoverStd, 4, 4, 3).mismatches.empty());
    CHECK(verify(TheoremId::CoverStd, 3, 3, 3).mismatches.empty());
}

TEST_CASE("verify input validation") {
    CHECK_THROWS_AS(verify(TheoremId::CmSym2, 5, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify(TheoremId::CmSym2, 2, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify(TheoremId::CmSymHigh, 4, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify(TheoremId::EqHigh, 4, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify(TheoremId::CmSym2, 4, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(verify(TheoremId::CoverStd, 4, 4, 2), std::invalid_argument);
}

TEST_CASE("census reports are deterministic") {
    const std::vector<AnalysisReport> a = run_census(3, 2);
    const std::vector<AnalysisReport> b = run_census(3, 2);
    REQUIRE(a.size() == 4);
    std::ostringstream csv_a, csv_b;
    write_census_csv(csv_a, a);
    write_census_csv(csv_b, b);
    CHECK(csv_a.str() == csv_b.str());
    std::istringstream lines(csv_a.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header ==
          "bitmask,n,edges,class,diameter,m,cm_symbolic,cm_ordinary,powers_equal,"
          "cm_sym2,cm_sym_high,eq2,eq_high,cm_ord2,cm_ord_high");
    int rows = 0;
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 8); // 4 graphs, m = 1, 2
}

TEST_CASE("json serializations carry the stable field names") {
    const AnalysisReport r = analyze(c5(), 2);
    const nlohmann::json j = nlohmann::json::parse(to_json_string(r));
    CHECK(j["n"] == 5);
    CHECK(j["class"] == "Cycle");
    CHECK(j["diameter"] == 2);
    CHECK(j["per_m"].size() == 2);
    CHECK(j["per_m"][0]["criteria"].contains("cm_sym_high"));
    CHECK(j["per_m"][1]["m"] == 2);
    CHECK(j["per_m"][1]["cm_symbolic"] == true);
    CHECK(j["mismatches"].empty());

    const CensusResult v = verify(TheoremId::Eq2, 3, 3, 2);
    const nlohmann::json jv = nlohmann::json::parse(to_json_string(v));
    CHECK(jv["theorem"] == "EQ-2");
    CHECK(jv["graphs_examined"] == 4);
    CHECK(jv["mismatches"].empty());
    CHECK(jv["sample"].is_null());
    CHECK(jv.contains("elapsed_seconds"));

    // disconnected graph: diameter serializes as null
    const AnalysisReport rd = analyze(Graph(4, {{0, 1}, {2, 3}}), 2);
    const nlohmann::json jd = nlohmann::json::parse(to_json_string(rd));
    CHECK(jd["diameter"].is_null());
}
