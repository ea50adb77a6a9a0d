#include "srpow/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace srpow {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* who) {
    if (ideal.is_unit())
        throw std::invalid_argument(std::string(who) + ": unit ideal");
    if (ideal.is_zero())
        throw std::invalid_argument(std::string(who) + ": zero ideal");
}

// Visits the box degrees for one negative support; the free coordinates run
// lexicographically ascending. Returns false if the visitor stops the sweep.
template <typename Visit>
bool sweep_support(const DegreeBox& box, int n, FaceMask support, Visit&& visit) {
    std::vector<int> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (support >> i & 1u) {
            lo[static_cast<std::size_t>(i)] = hi[static_cast<std::size_t>(i)] = -1;
        } else {
            lo[static_cast<std::size_t>(i)] = 0;
            hi[static_cast<std::size_t>(i)] = std::max(box.rho[static_cast<std::size_t>(i)] - 1, 0);
        }
    }
    std::vector<int> a = lo;
    while (true) {
        if (!visit(DegreeVector(a))) return false;
        int pos = n - 1;
        while (pos >= 0 && (a[static_cast<std::size_t>(pos)] == hi[static_cast<std::size_t>(pos)] ||
                            (support >> pos & 1u)))
            --pos;
        if (pos < 0) return true;
        ++a[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < n; ++i)
            a[static_cast<std::size_t>(i)] = lo[static_cast<std::size_t>(i)];
    }
}

struct SweepContext {
    SimplicialComplex delta; // Delta(I)
    DegreeBox box;
    int krull;

    explicit SweepContext(const MonomialIdeal& ideal)
        : delta(delta_of_ideal(ideal)), box{}, krull(delta.dimension() + 1) {
        box.rho = ideal.max_exponents();
        box.negative_supports = delta.faces();
    }
};

} // namespace

DegreeBox degree_box_of(const MonomialIdeal& ideal) {
    require_proper_nonzero(ideal, "degree_box");
    SweepContext ctx(ideal);
    return ctx.box;
}

std::vector<DegreeVector> degree_box(const MonomialIdeal& ideal) {
    const DegreeBox box = degree_box_of(ideal);
    const int n = ideal.ambient().n;
    std::vector<DegreeVector> out;
    for (FaceMask support : box.negative_supports)
        sweep_support(box, n, support, [&](const DegreeVector& a) {
            out.push_back(a);
            return true;
        });
    return out;
}

long graded_lc_dim(const MonomialIdeal& ideal, int i, const DegreeVector& a) {
    if (static_cast<int>(a.coords.size()) != ideal.ambient().n)
        throw std::invalid_argument("graded_lc_dim: degree vector has wrong length");
    if (ideal.is_unit()) return 0; // S/I = 0
    const FaceMask ga = a.negative_support();
    // G_a must be a face of Delta(I): no radical generator support inside it.
    const MonomialIdeal rad = ideal.radical();
    for (const Monomial& g : rad.generators())
        if ((g.support() & ga) == g.support()) return 0;
    return reduced_homology_dim(delta_a(ideal, a), i - std::popcount(ga) - 1,
                                ideal.ambient().field_char);
}

int krull_dim(const MonomialIdeal& ideal) {
    return delta_of_ideal(ideal).dimension() + 1;
}

namespace {

struct DepthResult {
    int depth;
    std::optional<DepthWitness> witness;
};

DepthResult depth_impl(const MonomialIdeal& ideal) {
    if (ideal.is_unit())
        throw std::invalid_argument("depth: unit ideal");
    if (ideal.is_zero())
        return {krull_dim(ideal), std::nullopt}; // S itself
    SweepContext ctx(ideal);
    const int n = ideal.ambient().n;
    const int dim_delta = ctx.delta.dimension();
    const long field_char = ideal.ambient().field_char;
    for (int i = 0; i < ctx.krull; ++i) {
        std::optional<DepthWitness> hit;
        for (FaceMask support : ctx.box.negative_supports) {
            const int card = std::popcount(support);
            // H~_{i-|G_a|-1} can be nonzero only for -1 <= i-|G_a|-1 <= dim.
            if (card > i || i - card - 1 > dim_delta) continue;
            sweep_support(ctx.box, n, support, [&](const DegreeVector& a) {
                const long d = reduced_homology_dim(delta_a(ideal, a), i - card - 1, field_char);
                if (d > 0) {
                    hit = DepthWitness{i, a, d};
                    return false;
                }
                return true;
            });
            if (hit) break;
        }
        if (hit) return {i, hit};
    }
    return {ctx.krull, std::nullopt};
}

} // namespace

int depth(const MonomialIdeal& ideal) { return depth_impl(ideal).depth; }

std::optional<DepthWitness> find_depth_witness(const MonomialIdeal& ideal) {
    return depth_impl(ideal).witness;
}

bool is_cohen_macaulay(const MonomialIdeal& ideal) {
    return depth(ideal) == krull_dim(ideal);
}

CohomologyTable cohomology_table(const MonomialIdeal& ideal) {
    require_proper_nonzero(ideal, "cohomology_table");
    SweepContext ctx(ideal);
    const int n = ideal.ambient().n;
    const int dim_delta = ctx.delta.dimension();
    const long field_char = ideal.ambient().field_char;
    CohomologyTable table;
    for (int i = 0; i <= ctx.krull; ++i) {
        for (FaceMask support : ctx.box.negative_supports) {
            const int card = std::popcount(support);
            if (card > i || i - card - 1 > dim_delta) continue;
            sweep_support(ctx.box, n, support, [&](const DegreeVector& a) {
                const long d = reduced_homology_dim(delta_a(ideal, a), i - card - 1, field_char);
                if (d > 0) table.entries[{i, a.coords}] = d;
                return true;
            });
        }
    }
    return table;
}

} // namespace srpow
