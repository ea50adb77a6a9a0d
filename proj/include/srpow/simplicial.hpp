#ifndef SRPOW_SIMPLICIAL_HPP
#define SRPOW_SIMPLICIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "srpow/ideal.hpp"

namespace srpow {

using FaceMask = std::uint32_t; // bit i = vertex i+1

// Abstract simplicial complex on {1..n}, stored by facets. The void complex
// (no faces, not even the empty face) and the complex {emptyset} are distinct
// values; both occur in Takayama bookkeeping.
class SimplicialComplex {
public:
    static SimplicialComplex void_complex(int n);
    static SimplicialComplex empty_face_complex(int n);
    // Facets must be pairwise incomparable.
    static SimplicialComplex from_facets(int n, std::vector<FaceMask> facets);
    // Maximal elements of an arbitrary face list.
    static SimplicialComplex from_faces(int n, const std::vector<FaceMask>& faces);

    int vertex_capacity() const { return n_; }
    // Sorted by (cardinality, mask value).
    const std::vector<FaceMask>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_face_only() const { return facets_.size() == 1 && facets_[0] == 0; }
    // -2 for the void complex, -1 for {emptyset}.
    int dimension() const;
    bool has_face(FaceMask f) const;
    // All faces (including the empty face when nonvoid), sorted by
    // (cardinality, mask value).
    std::vector<FaceMask> faces() const;
    FaceMask vertex_set() const; // union of facets
    bool is_pure() const;

    bool operator==(const SimplicialComplex&) const = default;

    std::string to_string() const;

private:
    SimplicialComplex(int n, std::vector<FaceMask> facets);

    int n_;
    std::vector<FaceMask> facets_;
};

// A point of Z^n grading local cohomology; G_a is derived, never stored.
struct DegreeVector {
    std::vector<int> coords;

    explicit DegreeVector(std::vector<int> c) : coords(std::move(c)) {}
    static DegreeVector zero(int n) { return DegreeVector(std::vector<int>(static_cast<std::size_t>(n), 0)); }

    FaceMask negative_support() const {
        FaceMask m = 0;
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (coords[i] < 0) m |= FaceMask{1} << i;
        return m;
    }

    bool operator==(const DegreeVector&) const = default;
    std::string to_string() const;
};

// Delta(I): all F with squarefree monomial of F outside the radical of I.
// Undefined (error) for the unit ideal.
SimplicialComplex delta_of_ideal(const MonomialIdeal& ideal);

// Delta_a(I): the faces F with (1) F disjoint from G_a and (2) every minimal
// generator x^b of I exceeding a in some coordinate outside F and G_a.
SimplicialComplex delta_a(const MonomialIdeal& ideal, const DegreeVector& a);

// Connectivity of the 1-skeleton on the vertices that occur in K.
// Void and {emptyset} report false; a single vertex reports true.
bool is_connected(const SimplicialComplex& k);

// Exact reduced homology dimensions over the field of the given
// characteristic; entry [t] is dim H~_{t-1}, so [0] is H~_{-1}. The void
// complex yields an empty vector (all dimensions zero).
std::vector<long> reduced_homology_dims(const SimplicialComplex& k, long field_char);
// Single index; i may be any integer, out-of-range indices give 0.
long reduced_homology_dim(const SimplicialComplex& k, int i, long field_char);

// Substitutes x_i = 1 for i in F union N and minimalizes; the localization
// oracle behind the Delta_a cross-checks.
MonomialIdeal restrict_ideal(const MonomialIdeal& ideal, FaceMask f, FaceMask n);

} // namespace srpow

#endif
