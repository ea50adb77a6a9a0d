#ifndef SRPOW_COVER_HPP
#define SRPOW_COVER_HPP

#include <optional>
#include <vector>

#include "srpow/ideal.hpp"
#include "srpow/simplicial.hpp"

namespace srpow {

// Non-negative integer vertex weighting.
struct CoverVector {
    std::vector<int> coords;

    explicit CoverVector(std::vector<int> c);
    bool operator==(const CoverVector&) const = default;
};

// Total weight at least m on every facet.
bool is_m_cover(const CoverVector& c, const SimplicialComplex& k, int m);

// I*(Delta): intersection over the facets F of the prime generated by the
// variables indexed by F. Monomial x^c lies in its m-th symbolic power
// exactly when c is an m-cover.
MonomialIdeal ideal_star(const SimplicialComplex& k, long field_char = 0);
MonomialIdeal ideal_star_symbolic_power(const SimplicialComplex& k, int m,
                                        long field_char = 0);

// Bounded standard-gradedness of the vertex cover algebra: symbolic and
// ordinary powers of I*(Delta) agree for every m in 2..m_max. For the pure
// family coming from graphs, m_max = 3 is decisive.
bool is_standard_graded(const SimplicialComplex& k, int m_max);

// Splits an m-cover into m 1-covers with coordinatewise sum at most c, by
// exhaustive backtracking over minimal 1-covers; empty when no split exists.
std::optional<std::vector<CoverVector>> decompose_cover(const CoverVector& c,
                                                        const SimplicialComplex& k,
                                                        int m);

} // namespace srpow

#endif
