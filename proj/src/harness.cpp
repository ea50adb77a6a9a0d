#include "srpow/harness.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "srpow/cover.hpp"
#include "json.hpp"

namespace srpow {

using nlohmann::json;

namespace {

const char* bool_str(bool b) { return b ? "yes" : "no"; }

std::string describe_criteria_mismatch(int m, const char* field, bool algebraic,
                                       bool predicted) {
    std::ostringstream out;
    out << "m=" << m << ": " << field << " algebraic=" << bool_str(algebraic)
        << " combinatorial=" << bool_str(predicted);
    return out.str();
}

} // namespace

AnalysisReport analyze(const Graph& g, int m_max, long field_char) {
    if (m_max < 2)
        throw std::invalid_argument("analyze: need m_max >= 2");
    AnalysisReport report;
    report.n = g.vertex_count();
    report.bitmask = g.edge_bitmask();
    report.edges = g.edges_to_string();
    report.graph_class = classify(g);
    report.diameter = diameter(g);
    report.m_max = m_max;

    const CriteriaRecord predictions = criteria(g, 2);
    const MonomialIdeal base = ideal_of_graph(g, field_char);
    for (int m = 1; m <= m_max; ++m) {
        PerMRecord rec;
        rec.m = m;
        rec.predictions = predictions;
        const MonomialIdeal sym = symbolic_power(g, m, field_char);
        const MonomialIdeal ord = base.power(m);
        rec.witness_non_cm_symbolic = find_depth_witness(sym);
        rec.witness_non_cm_ordinary = find_depth_witness(ord);
        rec.cm_symbolic = !rec.witness_non_cm_symbolic.has_value();
        rec.cm_ordinary = !rec.witness_non_cm_ordinary.has_value();
        rec.powers_equal = sym == ord;
        if (!rec.powers_equal) {
            for (const Monomial& gen : sym.generators()) {
                if (!ord.contains(gen)) {
                    rec.witness_power_gap = gen;
                    break;
                }
            }
        }
        if (m >= 2) {
            const bool pred_sym = m == 2 ? predictions.cm_sym2 : predictions.cm_sym_high;
            const bool pred_eq = m == 2 ? predictions.eq2 : predictions.eq_high;
            const bool pred_ord = m == 2 ? predictions.cm_ord2 : predictions.cm_ord_high;
            if (rec.cm_symbolic != pred_sym)
                rec.mismatches.push_back(
                    describe_criteria_mismatch(m, "cm_symbolic", rec.cm_symbolic, pred_sym));
            if (rec.powers_equal != pred_eq)
                rec.mismatches.push_back(
                    describe_criteria_mismatch(m, "powers_equal", rec.powers_equal, pred_eq));
            if (rec.cm_ordinary != pred_ord)
                rec.mismatches.push_back(
                    describe_criteria_mismatch(m, "cm_ordinary", rec.cm_ordinary, pred_ord));
        }
        if (rec.cm_ordinary && !rec.powers_equal)
            rec.mismatches.push_back("m=" + std::to_string(m) +
                                     ": cm_ordinary without power equality");
        for (const std::string& s : rec.mismatches) report.mismatches.push_back(s);
        report.per_m.push_back(std::move(rec));
    }
    return report;
}

std::string to_string(TheoremId id) {
    switch (id) {
    case TheoremId::CmSym2: return "CM-SYM-2";
    case TheoremId::CmSymHigh: return "CM-SYM-HIGH";
    case TheoremId::Eq2: return "EQ-2";
    case TheoremId::EqHigh: return "EQ-HIGH";
    case TheoremId::CmOrd2: return "CM-ORD-2";
    case TheoremId::CmOrdHigh: return "CM-ORD-HIGH";
    case TheoremId::CoverStd: return "COVER-STD";
    }
    return "?";
}

TheoremId parse_theorem_id(const std::string& text) {
    if (text == "CM-SYM-2") return TheoremId::CmSym2;
    if (text == "CM-SYM-HIGH") return TheoremId::CmSymHigh;
    if (text == "EQ-2") return TheoremId::Eq2;
    if (text == "EQ-HIGH") return TheoremId::EqHigh;
    if (text == "CM-ORD-2") return TheoremId::CmOrd2;
    if (text == "CM-ORD-HIGH") return TheoremId::CmOrdHigh;
    if (text == "COVER-STD") return TheoremId::CoverStd;
    throw std::invalid_argument("unknown theorem id: " + text);
}

int default_m(TheoremId id) {
    switch (id) {
    case TheoremId::CmSymHigh:
    case TheoremId::EqHigh:
    case TheoremId::CmOrdHigh:
    case TheoremId::CoverStd: return 3;
    default: return 2;
    }
}

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 3 || n > 7)
        throw std::invalid_argument("enumerate_graphs: need 3 <= n <= 7");
    const int pairs = Graph::pair_count(n);
    std::vector<Graph> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pairs); ++mask)
        if (Graph::bitmask_valid(n, mask)) out.push_back(Graph::from_bitmask(n, mask));
    return out;
}

std::vector<Graph> sample_graphs(int n, int count, std::uint32_t seed) {
    if (n < 3 || n > 7)
        throw std::invalid_argument("sample_graphs: need 3 <= n <= 7");
    if (count < 1)
        throw std::invalid_argument("sample_graphs: need count >= 1");
    const int pairs = Graph::pair_count(n);
    const std::uint64_t space = std::uint64_t{1} << pairs;
    std::mt19937 rng(seed);
    std::vector<bool> seen(space, false);
    std::vector<Graph> out;
    // raw engine output with a mask keeps draws identical across platforms
    std::uint64_t attempts = 0;
    const std::uint64_t attempt_cap = 1000ull * static_cast<std::uint64_t>(count) + 1000000ull;
    while (out.size() < static_cast<std::size_t>(count)) {
        if (++attempts > attempt_cap)
            throw std::invalid_argument("sample_graphs: sample size exceeds population");
        const std::uint64_t mask = rng() & (space - 1);
        if (mask == 0 || seen[mask] || !Graph::bitmask_valid(n, mask)) continue;
        seen[mask] = true;
        out.push_back(Graph::from_bitmask(n, mask));
    }
    return out;
}

TheoremCheck check_theorem(TheoremId id, const Graph& g, int m, long field_char) {
    const int n = g.vertex_count();
    switch (id) {
    case TheoremId::CmSym2:
        if (m != 2) throw std::invalid_argument("CM-SYM-2: fixed at m = 2");
        return {is_cohen_macaulay(symbolic_power(g, 2, field_char)), criteria(g, 2).cm_sym2};
    case TheoremId::CmSymHigh:
        if (m < 3) throw std::invalid_argument("CM-SYM-HIGH: need m >= 3");
        return {is_cohen_macaulay(symbolic_power(g, m, field_char)),
                criteria(g, m).cm_sym_high};
    case TheoremId::Eq2:
        if (m != 2) throw std::invalid_argument("EQ-2: fixed at m = 2");
        return {symbolic_power(g, 2, field_char) == ideal_of_graph(g, field_char).power(2),
                criteria(g, 2).eq2};
    case TheoremId::EqHigh:
        if (m < 3) throw std::invalid_argument("EQ-HIGH: need m >= 3");
        return {symbolic_power(g, m, field_char) == ideal_of_graph(g, field_char).power(m),
                criteria(g, m).eq_high};
    case TheoremId::CmOrd2:
        if (m != 2) throw std::invalid_argument("CM-ORD-2: fixed at m = 2");
        return {is_cohen_macaulay(ideal_of_graph(g, field_char).power(2)),
                criteria(g, 2).cm_ord2};
    case TheoremId::CmOrdHigh:
        if (m < 3) throw std::invalid_argument("CM-ORD-HIGH: need m >= 3");
        return {is_cohen_macaulay(ideal_of_graph(g, field_char).power(m)),
                criteria(g, m).cm_ord_high};
    case TheoremId::CoverStd: {
        // m is the equality bound; powers 2..m are checked and m = 3 already
        // separates every class in this family
        if (m < 3) throw std::invalid_argument("COVER-STD: need m >= 3");
        // the pure (n-3)-dimensional complex whose facet complements are the
        // edges of G
        const FaceMask full = (FaceMask{1} << n) - 1;
        std::vector<FaceMask> facets;
        for (std::size_t e = 0; e < g.edges().size(); ++e)
            facets.push_back(full & ~g.edge_mask(e));
        const SimplicialComplex delta = SimplicialComplex::from_facets(n, std::move(facets));
        const bool algebraic = is_standard_graded(delta, m);
        bool predicted = n == 3;
        if (n == 4 && delta.vertex_set() == full) {
            std::vector<std::pair<int, int>> edges;
            for (FaceMask f : delta.facets()) {
                int verts[2], k = 0;
                for (int v = 0; v < n; ++v)
                    if (f >> v & 1u) verts[k++] = v;
                edges.emplace_back(verts[0], verts[1]);
            }
            const GraphClass cls = classify(Graph(n, std::move(edges)));
            predicted = cls == GraphClass::Path || cls == GraphClass::Cycle ||
                        cls == GraphClass::TwoDisjointEdges;
        }
        return {algebraic, predicted};
    }
    }
    throw std::invalid_argument("check_theorem: unknown theorem id");
}

CensusResult verify(TheoremId id, int n_min, int n_max, int m, std::optional<int> sample,
                    std::uint32_t seed, const VerdictObserver& observer) {
    if (n_min > n_max || n_min < 3 || n_max > 7)
        throw std::invalid_argument("verify: bad n range (need 3 <= n_min <= n_max <= 7)");
    const auto start = std::chrono::steady_clock::now();
    CensusResult result;
    result.theorem = id;
    result.n_min = n_min;
    result.n_max = n_max;
    result.m = m;
    result.graphs_examined = 0;
    for (int n = n_min; n <= n_max; ++n) {
        const bool sampled = n >= 6;
        std::vector<Graph> graphs;
        if (sampled) {
            const int size = sample.value_or(500);
            graphs = sample_graphs(n, size, seed);
            result.sample_size = size;
            result.seed = seed;
        } else {
            graphs = enumerate_graphs(n);
        }
        for (const Graph& g : graphs) {
            const TheoremCheck check = check_theorem(id, g, m);
            ++result.graphs_examined;
            if (observer) observer(n, g.edge_bitmask(), check.algebraic, check.predicted);
            if (check.algebraic != check.predicted) {
                std::ostringstream details;
                details << "edges=" << g.edges_to_string()
                        << " algebraic=" << bool_str(check.algebraic)
                        << " predicted=" << bool_str(check.predicted);
                result.mismatches.push_back(
                    Mismatch{n, g.edge_bitmask(), to_string(id), details.str()});
            }
        }
    }
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<AnalysisReport> run_census(int n, int m_max, long field_char) {
    std::vector<AnalysisReport> reports;
    for (const Graph& g : enumerate_graphs(n))
        reports.push_back(analyze(g, m_max, field_char));
    return reports;
}

namespace {

json criteria_json(const CriteriaRecord& c) {
    return json{{"cm_sym2", c.cm_sym2},   {"cm_sym_high", c.cm_sym_high},
                {"eq2", c.eq2},           {"eq_high", c.eq_high},
                {"cm_ord2", c.cm_ord2},   {"cm_ord_high", c.cm_ord_high}};
}

json depth_witness_json(const std::optional<DepthWitness>& w) {
    if (!w) return nullptr;
    return json{{"i", w->i}, {"a", w->a.coords}, {"dim", w->dim}};
}

} // namespace

std::string to_json_string(const AnalysisReport& report) {
    json per_m = json::array();
    for (const PerMRecord& rec : report.per_m) {
        json j{{"m", rec.m},
               {"cm_symbolic", rec.cm_symbolic},
               {"cm_ordinary", rec.cm_ordinary},
               {"powers_equal", rec.powers_equal},
               {"criteria", criteria_json(rec.predictions)},
               {"witness_non_cm_symbolic", depth_witness_json(rec.witness_non_cm_symbolic)},
               {"witness_non_cm_ordinary", depth_witness_json(rec.witness_non_cm_ordinary)},
               {"witness_power_gap",
                rec.witness_power_gap ? json(rec.witness_power_gap->exponents()) : json(nullptr)},
               {"mismatches", rec.mismatches}};
        per_m.push_back(std::move(j));
    }
    json j{{"n", report.n},
           {"bitmask", report.bitmask},
           {"edges", report.edges},
           {"class", to_string(report.graph_class)},
           {"diameter", report.diameter ? json(*report.diameter) : json(nullptr)},
           {"m_max", report.m_max},
           {"per_m", std::move(per_m)},
           {"mismatches", report.mismatches}};
    return j.dump(2);
}

std::string to_json_string(const CensusResult& result) {
    json mism = json::array();
    for (const Mismatch& m : result.mismatches)
        mism.push_back(json{{"n", m.n},
                            {"bitmask", m.bitmask},
                            {"theorem", m.theorem},
                            {"details", m.details}});
    json j{{"theorem", to_string(result.theorem)},
           {"n_min", result.n_min},
           {"n_max", result.n_max},
           {"m", result.m},
           {"graphs_examined", result.graphs_examined},
           {"mismatches", std::move(mism)},
           {"elapsed_seconds", result.elapsed_seconds},
           {"sample", result.sample_size ? json(*result.sample_size) : json(nullptr)},
           {"seed", result.seed ? json(*result.seed) : json(nullptr)}};
    return j.dump(2);
}

std::string to_text(const AnalysisReport& report) {
    std::ostringstream out;
    out << "graph: n=" << report.n << " edges=" << report.edges << " (bitmask "
        << report.bitmask << ")\n";
    out << "class: " << to_string(report.graph_class) << "  diameter: ";
    if (report.diameter)
        out << *report.diameter;
    else
        out << "infinite";
    out << "\n";
    const CriteriaRecord& c = report.per_m.front().predictions;
    out << "criteria: cm_sym2=" << bool_str(c.cm_sym2)
        << " cm_sym_high=" << bool_str(c.cm_sym_high) << " eq2=" << bool_str(c.eq2)
        << " eq_high=" << bool_str(c.eq_high) << " cm_ord2=" << bool_str(c.cm_ord2)
        << " cm_ord_high=" << bool_str(c.cm_ord_high) << "\n";
    for (const PerMRecord& rec : report.per_m) {
        out << "m=" << rec.m << ": cm_symbolic=" << bool_str(rec.cm_symbolic)
            << " cm_ordinary=" << bool_str(rec.cm_ordinary)
            << " powers_equal=" << bool_str(rec.powers_equal) << "\n";
        if (rec.witness_non_cm_symbolic)
            out << "  witness (symbolic non-CM): i=" << rec.witness_non_cm_symbolic->i
                << " a=" << rec.witness_non_cm_symbolic->a.to_string()
                << " dim=" << rec.witness_non_cm_symbolic->dim << "\n";
        if (rec.witness_non_cm_ordinary)
            out << "  witness (ordinary non-CM): i=" << rec.witness_non_cm_ordinary->i
                << " a=" << rec.witness_non_cm_ordinary->a.to_string()
                << " dim=" << rec.witness_non_cm_ordinary->dim << "\n";
        if (rec.witness_power_gap)
            out << "  witness (symbolic \\ ordinary): " << rec.witness_power_gap->to_string()
                << "\n";
        for (const std::string& s : rec.mismatches) out << "  MISMATCH " << s << "\n";
    }
    return out.str();
}

void write_census_csv(std::ostream& out, const std::vector<AnalysisReport>& reports) {
    out << "bitmask,n,edges,class,diameter,m,cm_symbolic,cm_ordinary,powers_equal,"
           "cm_sym2,cm_sym_high,eq2,eq_high,cm_ord2,cm_ord_high\n";
    for (const AnalysisReport& report : reports) {
        for (const PerMRecord& rec : report.per_m) {
            out << report.bitmask << ',' << report.n << ',' << report.edges << ','
                << to_string(report.graph_class) << ',';
            if (report.diameter)
                out << *report.diameter;
            else
                out << "inf";
            out << ',' << rec.m << ',' << rec.cm_symbolic << ',' << rec.cm_ordinary << ','
                << rec.powers_equal << ',' << rec.predictions.cm_sym2 << ','
                << rec.predictions.cm_sym_high << ',' << rec.predictions.eq2 << ','
                << rec.predictions.eq_high << ',' << rec.predictions.cm_ord2 << ','
                << rec.predictions.cm_ord_high << '\n';
        }
    }
}

} // namespace srpow
