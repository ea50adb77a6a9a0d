// Command-line surface: per-graph analysis, censuses, theorem verification,
// and direct Delta_a / local cohomology queries.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "srpow/cover.hpp"
#include "srpow/harness.hpp"

namespace {

srpow::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open graph file: " + path);
    return srpow::Graph::parse(in);
}

std::vector<int> parse_degree_list(const std::string& text, int n) {
    std::vector<int> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        coords.push_back(std::stoi(item, &used));
        if (used != item.size())
            throw std::invalid_argument("bad degree entry: " + item);
    }
    if (static_cast<int>(coords.size()) != n)
        throw std::invalid_argument("degree vector needs exactly " + std::to_string(n) +
                                    " entries");
    return coords;
}

std::string facet_string(const srpow::SimplicialComplex& k, srpow::FaceMask f) {
    if (f == 0) return "{}";
    std::string s = "{";
    bool first = true;
    for (int v = 0; v < k.vertex_capacity(); ++v)
        if (f >> v & 1u) {
            if (!first) s += ',';
            s += std::to_string(v + 1);
            first = false;
        }
    return s + "}";
}

int run_analyze(const std::string& file, int m_max, bool as_json) {
    const srpow::Graph g = load_graph(file);
    const srpow::AnalysisReport report = srpow::analyze(g, m_max);
    if (as_json)
        std::cout << srpow::to_json_string(report) << "\n";
    else
        std::cout << srpow::to_text(report);
    return 0;
}

int run_census(int n, int m_max, const std::string& out_path) {
    const std::vector<srpow::AnalysisReport> reports = srpow::run_census(n, m_max);
    if (out_path.empty()) {
        srpow::write_census_csv(std::cout, reports);
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw std::invalid_argument("cannot open output file: " + out_path);
        srpow::write_census_csv(out, reports);
        long mismatched = 0;
        for (const srpow::AnalysisReport& r : reports)
            if (!r.mismatches.empty()) ++mismatched;
        std::cout << "wrote " << reports.size() << " graphs to " << out_path << " ("
                  << mismatched << " with route mismatches)\n";
    }
    return 0;
}

int run_verify(const std::string& theorem, int n_min, int n_max, std::optional<int> m,
               std::optional<int> sample, std::uint32_t seed, bool as_json) {
    const srpow::TheoremId id = srpow::parse_theorem_id(theorem);
    const int m_used = m.value_or(srpow::default_m(id));
    const srpow::CensusResult result = srpow::verify(id, n_min, n_max, m_used, sample, seed);
    if (as_json) {
        std::cout << srpow::to_json_string(result) << "\n";
    } else {
        std::cout << "theorem " << srpow::to_string(id) << ": examined "
                  << result.graphs_examined << " graphs (n=" << n_min << ".." << n_max
                  << ", m=" << m_used << ") in " << result.elapsed_seconds << "s, "
                  << result.mismatches.size() << " mismatches\n";
        for (const srpow::Mismatch& mm : result.mismatches)
            std::cout << "  n=" << mm.n << " bitmask=" << mm.bitmask << " " << mm.details
                      << "\n";
    }
    return result.mismatches.empty() ? 0 : 2;
}

int run_delta(const std::string& file, int m, const std::string& a_text) {
    const srpow::Graph g = load_graph(file);
    const std::vector<int> coords = parse_degree_list(a_text, g.vertex_count());
    const srpow::DegreeVector a(coords);
    const srpow::SimplicialComplex d = srpow::delta_a(srpow::symbolic_power(g, m), a);
    if (d.is_void()) {
        std::cout << "void complex (no faces)\n";
        return 0;
    }
    std::cout << "facets of Delta_a(I_G^(" << m << ")) at a=" << a.to_string() << ":\n";
    for (srpow::FaceMask f : d.facets()) std::cout << "  " << facet_string(d, f) << "\n";
    return 0;
}

int run_cohomology(const std::string& file, int m, bool ordinary) {
    const srpow::Graph g = load_graph(file);
    const srpow::MonomialIdeal ideal =
        ordinary ? srpow::ideal_of_graph(g).power(m) : srpow::symbolic_power(g, m);
    const srpow::CohomologyTable table = srpow::cohomology_table(ideal);
    std::cout << "nonzero graded local cohomology of S/I_G" << (ordinary ? "^" : "^(")
              << m << (ordinary ? "" : ")") << " (depth " << srpow::depth(ideal)
              << ", dim " << srpow::krull_dim(ideal) << "):\n";
    std::cout << "i  a  dim\n";
    for (const auto& [key, dim] : table.entries) {
        std::cout << key.first << "  (";
        for (std::size_t t = 0; t < key.second.size(); ++t) {
            if (t > 0) std::cout << ',';
            std::cout << key.second[t];
        }
        std::cout << ")  " << dim << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for powers of graph Stanley-Reisner ideals"};
    app.require_subcommand(1);

    std::string graph_file, a_text, theorem, out_path;
    int m_max = 4, n = 4, n_min = 4, n_max = 5, m_delta = 2;
    std::optional<int> m_opt, sample;
    std::uint32_t seed = 1;
    bool as_json = false, ordinary = false;

    CLI::App* cmd_analyze = app.add_subcommand("analyze", "analyze one graph");
    cmd_analyze->add_option("graph-file", graph_file, "graph in text format")->required();
    cmd_analyze->add_option("--m-max", m_max, "largest power to analyze");
    cmd_analyze->add_flag("--json", as_json, "emit JSON");

    CLI::App* cmd_census = app.add_subcommand("census", "analyze every graph on n vertices");
    cmd_census->add_option("--n", n, "vertex count")->required();
    cmd_census->add_option("--m-max", m_max, "largest power to analyze");
    cmd_census->add_option("--out", out_path, "CSV output path (default stdout)");

    CLI::App* cmd_verify = app.add_subcommand("verify", "check one theorem over a census");
    cmd_verify->add_option("--theorem", theorem, "CM-SYM-2 CM-SYM-HIGH EQ-2 EQ-HIGH CM-ORD-2 CM-ORD-HIGH COVER-STD")
        ->required();
    cmd_verify->add_option("--n-min", n_min, "smallest vertex count")->required();
    cmd_verify->add_option("--n-max", n_max, "largest vertex count")->required();
    int m_value = 0;
    CLI::Option* m_given = cmd_verify->add_option("--m", m_value, "power (default per theorem)");
    int sample_value = 0;
    CLI::Option* sample_given =
        cmd_verify->add_option("--sample", sample_value, "sample size for n >= 6 (default 500)");
    cmd_verify->add_option("--seed", seed, "sampling seed");
    cmd_verify->add_flag("--json", as_json, "emit JSON");

    CLI::App* cmd_delta = app.add_subcommand("delta", "print the facets of Delta_a");
    cmd_delta->add_option("--graph", graph_file, "graph in text format")->required();
    cmd_delta->add_option("--m", m_delta, "symbolic power")->required();
    cmd_delta->add_option("--a", a_text, "degree vector a1,a2,...,an")->required();

    CLI::App* cmd_cohom = app.add_subcommand("cohomology", "print nonzero graded dimensions");
    cmd_cohom->add_option("--graph", graph_file, "graph in text format")->required();
    cmd_cohom->add_option("--m", m_delta, "power")->required();
    cmd_cohom->add_flag("--ordinary", ordinary, "use the ordinary power I^m");
    bool symbolic_flag = false;
    cmd_cohom->add_flag("--symbolic", symbolic_flag, "use the symbolic power (default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*cmd_analyze) return run_analyze(graph_file, m_max, as_json);
        if (*cmd_census) return run_census(n, m_max, out_path);
        if (*cmd_verify) {
            if (*m_given) m_opt = m_value;
            if (*sample_given) sample = sample_value;
            return run_verify(theorem, n_min, n_max, m_opt, sample, seed, as_json);
        }
        if (*cmd_delta) return run_delta(graph_file, m_delta, a_text);
        if (*cmd_cohom) {
            if (ordinary && symbolic_flag)
                throw std::invalid_argument("pick one of --symbolic / --ordinary");
            return run_cohomology(graph_file, m_delta, ordinary);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
