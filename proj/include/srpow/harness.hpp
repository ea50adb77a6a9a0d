#ifndef SRPOW_HARNESS_HPP
#define SRPOW_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "srpow/cohomology.hpp"
#include "srpow/graph.hpp"

namespace srpow {

// Per-exponent slice of an analysis: algebraic verdicts, combinatorial
// predictions, and witnesses that can be re-checked in isolation.
struct PerMRecord {
    int m;
    bool cm_symbolic;
    bool cm_ordinary;
    bool powers_equal;
    CriteriaRecord predictions;
    std::optional<DepthWitness> witness_non_cm_symbolic;
    std::optional<DepthWitness> witness_non_cm_ordinary;
    std::optional<Monomial> witness_power_gap; // generator of I^(m) outside I^m
    std::vector<std::string> mismatches;       // algebraic vs combinatorial route
};

struct AnalysisReport {
    int n;
    std::uint64_t bitmask;
    std::string edges;
    GraphClass graph_class;
    std::optional<int> diameter;
    int m_max;
    std::vector<PerMRecord> per_m;
    std::vector<std::string> mismatches; // flattened
};

AnalysisReport analyze(const Graph& g, int m_max, long field_char = 0);

enum class TheoremId { CmSym2, CmSymHigh, Eq2, EqHigh, CmOrd2, CmOrdHigh, CoverStd };

std::string to_string(TheoremId id);
TheoremId parse_theorem_id(const std::string& text); // errors on unknown id
// The theorem's natural exponent when the caller gives none.
int default_m(TheoremId id);

struct Mismatch {
    int n;
    std::uint64_t bitmask;
    std::string theorem;
    std::string details;
};

struct CensusResult {
    TheoremId theorem;
    int n_min, n_max;
    int m;
    long graphs_examined;
    std::vector<Mismatch> mismatches;
    double elapsed_seconds;
    std::optional<int> sample_size; // set when sampling was used
    std::optional<std::uint32_t> seed;
};

// All labeled simple graphs on {1..n} without isolated vertices, in
// ascending edge-bitmask order.
std::vector<Graph> enumerate_graphs(int n); // 3 <= n <= 7
// Distinct valid graphs drawn by seeded rejection sampling, in draw order.
std::vector<Graph> sample_graphs(int n, int count, std::uint32_t seed);

// Both routes for one graph and one theorem.
struct TheoremCheck {
    bool algebraic;
    bool predicted;
};
TheoremCheck check_theorem(TheoremId id, const Graph& g, int m, long field_char = 0);

using VerdictObserver =
    std::function<void(int n, std::uint64_t bitmask, bool algebraic, bool predicted)>;

// Compares the algebraic verdict against the combinatorial criterion over the
// census; n >= 6 runs on a seeded sample (default 500 graphs).
CensusResult verify(TheoremId id, int n_min, int n_max, int m,
                    std::optional<int> sample = std::nullopt, std::uint32_t seed = 1,
                    const VerdictObserver& observer = {});

// Full-census analysis, one report per graph in bitmask order.
std::vector<AnalysisReport> run_census(int n, int m_max, long field_char = 0);

std::string to_json_string(const AnalysisReport& report);
std::string to_json_string(const CensusResult& result);
std::string to_text(const AnalysisReport& report);
// One row per (graph bitmask, m) with all booleans.
void write_census_csv(std::ostream& out, const std::vector<AnalysisReport>& reports);

} // namespace srpow

#endif
