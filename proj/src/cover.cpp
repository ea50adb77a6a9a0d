#include "srpow/cover.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace srpow {

CoverVector::CoverVector(std::vector<int> c) : coords(std::move(c)) {
    if (coords.empty())
        throw std::invalid_argument("CoverVector: empty");
    for (int x : coords)
        if (x < 0)
            throw std::invalid_argument("CoverVector: negative coordinate");
}

bool is_m_cover(const CoverVector& c, const SimplicialComplex& k, int m) {
    if (static_cast<int>(c.coords.size()) != k.vertex_capacity())
        throw std::invalid_argument("is_m_cover: wrong coordinate count");
    for (FaceMask f : k.facets()) {
        int sum = 0;
        for (int v = 0; v < k.vertex_capacity(); ++v)
            if (f >> v & 1u) sum += c.coords[static_cast<std::size_t>(v)];
        if (sum < m) return false;
    }
    return true;
}

namespace {

void check_star_facets(const SimplicialComplex& k) {
    if (k.is_void())
        throw std::invalid_argument("ideal_star: complex has no facets");
    const FaceMask full = (FaceMask{1} << k.vertex_capacity()) - 1;
    for (FaceMask f : k.facets()) {
        if (f == full)
            throw std::invalid_argument("ideal_star: facet equals the full vertex set");
        if (f == 0)
            throw std::invalid_argument("ideal_star: facet with no vertices");
    }
}

} // namespace

MonomialIdeal ideal_star(const SimplicialComplex& k, long field_char) {
    return ideal_star_symbolic_power(k, 1, field_char);
}

MonomialIdeal ideal_star_symbolic_power(const SimplicialComplex& k, int m, long field_char) {
    check_star_facets(k);
    if (m < 1)
        throw std::invalid_argument("ideal_star_symbolic_power: need m >= 1");
    const AmbientContext ambient(k.vertex_capacity(), field_char);
    MonomialIdeal result = MonomialIdeal::unit(ambient);
    for (FaceMask f : k.facets())
        result = result.intersect(prime_power(ambient, f, m));
    return result;
}

bool is_standard_graded(const SimplicialComplex& k, int m_max) {
    if (!k.is_pure())
        throw std::invalid_argument("is_standard_graded: complex is not pure");
    if (m_max < 2)
        throw std::invalid_argument("is_standard_graded: need m_max >= 2");
    check_star_facets(k);
    if (k.dimension() == 0) return true; // I*(Delta) principal
    const MonomialIdeal star = ideal_star(k);
    for (int m = 2; m <= m_max; ++m)
        if (!(ideal_star_symbolic_power(k, m) == star.power(m))) return false;
    return true;
}

namespace {

// Minimal transversals of the facets, as masks sorted by (weight, value).
std::vector<FaceMask> minimal_one_covers(const SimplicialComplex& k) {
    const int n = k.vertex_capacity();
    std::vector<FaceMask> covers;
    for (FaceMask s = 0; s < (FaceMask{1} << n); ++s) {
        bool hits_all = true;
        for (FaceMask f : k.facets())
            if ((f & s) == 0) {
                hits_all = false;
                break;
            }
        if (hits_all) covers.push_back(s);
    }
    std::sort(covers.begin(), covers.end(), [](FaceMask a, FaceMask b) {
        const int ca = std::popcount(a), cb = std::popcount(b);
        if (ca != cb) return ca < cb;
        return a < b;
    });
    std::vector<FaceMask> minimal;
    for (FaceMask s : covers) {
        bool redundant = false;
        for (FaceMask t : minimal)
            if ((t & s) == t) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(s);
    }
    return minimal;
}

bool decompose_rec(const SimplicialComplex& k, const std::vector<FaceMask>& covers,
                   std::vector<int>& remaining, int levels,
                   std::vector<CoverVector>& out) {
    if (levels == 0) return true;
    const int n = k.vertex_capacity();
    FaceMask supp = 0;
    for (int v = 0; v < n; ++v)
        if (remaining[static_cast<std::size_t>(v)] > 0) supp |= FaceMask{1} << v;
    for (FaceMask d : covers) {
        if ((d & supp) != d) continue;
        std::vector<int> coords(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            if (d >> v & 1u) {
                coords[static_cast<std::size_t>(v)] = 1;
                --remaining[static_cast<std::size_t>(v)];
            }
        if (is_m_cover(CoverVector(std::vector<int>(remaining)), k, levels - 1)) {
            out.push_back(CoverVector(coords));
            if (decompose_rec(k, covers, remaining, levels - 1, out)) return true;
            out.pop_back();
        }
        for (int v = 0; v < n; ++v)
            if (d >> v & 1u) ++remaining[static_cast<std::size_t>(v)];
    }
    return false;
}

} // namespace

std::optional<std::vector<CoverVector>> decompose_cover(const CoverVector& c,
                                                        const SimplicialComplex& k,
                                                        int m) {
    if (m < 1)
        throw std::invalid_argument("decompose_cover: need m >= 1");
    if (!is_m_cover(c, k, m))
        throw std::invalid_argument("decompose_cover: input is not an m-cover");
    const std::vector<FaceMask> covers = minimal_one_covers(k);
    std::vector<int> remaining = c.coords;
    std::vector<CoverVector> out;
    if (decompose_rec(k, covers, remaining, m, out)) return out;
    return std::nullopt;
}

} // namespace srpow
