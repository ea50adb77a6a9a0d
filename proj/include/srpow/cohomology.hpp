#ifndef SRPOW_COHOMOLOGY_HPP
#define SRPOW_COHOMOLOGY_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "srpow/ideal.hpp"
#include "srpow/simplicial.hpp"

namespace srpow {

// The finite degree region that carries all nonvanishing graded pieces of
// local cohomology: one representative (-1) per negative coordinate, with the
// negative support running over the faces of Delta(I), and 0 <= a_i <= rho_i-1
// elsewhere. Coordinates absent from every generator are pinned to 0.
struct DegreeBox {
    std::vector<int> rho;
    std::vector<FaceMask> negative_supports; // faces of Delta(I), sorted
};

DegreeBox degree_box_of(const MonomialIdeal& ideal); // errors: zero/unit ideal
// The region enumerated in deterministic order: negative supports by
// (cardinality, mask), then lexicographic ascending on the free coordinates.
std::vector<DegreeVector> degree_box(const MonomialIdeal& ideal);

// Takayama's formula: dim H^i_m(S/I)_a as a reduced homology dimension of
// Delta_a(I); zero whenever G_a is not a face of Delta(I).
long graded_lc_dim(const MonomialIdeal& ideal, int i, const DegreeVector& a);

// 1 + dim Delta(I); errors on the unit ideal.
int krull_dim(const MonomialIdeal& ideal);

// Least i in 0..krull_dim with a nonvanishing graded piece over the degree
// box; krull_dim when none exists below it. Scans i ascending, degrees in
// box order, short-circuiting on the first hit.
int depth(const MonomialIdeal& ideal);

struct DepthWitness {
    int i;
    DegreeVector a;
    long dim;
};

// The first (i, a) in scan order with nonzero dimension below krull_dim;
// empty when the ideal is Cohen-Macaulay.
std::optional<DepthWitness> find_depth_witness(const MonomialIdeal& ideal);

bool is_cohen_macaulay(const MonomialIdeal& ideal);

// All nonzero graded local cohomology dimensions over the degree box,
// i = 0..krull_dim.
struct CohomologyTable {
    std::map<std::pair<int, std::vector<int>>, long> entries;
};

CohomologyTable cohomology_table(const MonomialIdeal& ideal);

} // namespace srpow

#endif
