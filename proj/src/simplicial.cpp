#include "srpow/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace srpow {

namespace {

bool face_less(FaceMask a, FaceMask b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    return a < b;
}

void check_capacity(int n) {
    if (n < 1 || n > 25)
        throw std::invalid_argument("SimplicialComplex: vertex capacity out of range");
}

} // namespace

SimplicialComplex::SimplicialComplex(int n, std::vector<FaceMask> facets)
    : n_(n), facets_(std::move(facets)) {
    std::sort(facets_.begin(), facets_.end(), face_less);
}

SimplicialComplex SimplicialComplex::void_complex(int n) {
    check_capacity(n);
    return SimplicialComplex(n, {});
}

SimplicialComplex SimplicialComplex::empty_face_complex(int n) {
    check_capacity(n);
    return SimplicialComplex(n, {0});
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<FaceMask> facets) {
    check_capacity(n);
    const FaceMask full = (FaceMask{1} << n) - 1;
    for (FaceMask f : facets)
        if (f & ~full)
            throw std::invalid_argument("SimplicialComplex: facet has vertex beyond capacity");
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = 0; j < facets.size(); ++j)
            if (i != j && (facets[i] & facets[j]) == facets[i])
                throw std::invalid_argument("SimplicialComplex: facets must be incomparable");
    return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex SimplicialComplex::from_faces(int n, const std::vector<FaceMask>& faces) {
    check_capacity(n);
    std::vector<FaceMask> sorted = faces;
    std::sort(sorted.begin(), sorted.end(), face_less);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<FaceMask> maximal;
    for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
        bool contained = false;
        for (FaceMask m : maximal) {
            if ((*it & m) == *it) {
                contained = true;
                break;
            }
        }
        if (!contained) maximal.push_back(*it);
    }
    return SimplicialComplex(n, std::move(maximal));
}

int SimplicialComplex::dimension() const {
    if (is_void()) return -2;
    int maxcard = 0;
    for (FaceMask f : facets_) maxcard = std::max(maxcard, std::popcount(f));
    return maxcard - 1;
}

bool SimplicialComplex::has_face(FaceMask f) const {
    for (FaceMask m : facets_)
        if ((f & m) == f) return true;
    return false;
}

std::vector<FaceMask> SimplicialComplex::faces() const {
    std::vector<FaceMask> out;
    std::vector<bool> seen(std::size_t{1} << n_, false);
    for (FaceMask facet : facets_) {
        FaceMask sub = facet;
        while (true) {
            if (!seen[sub]) {
                seen[sub] = true;
                out.push_back(sub);
            }
            if (sub == 0) break;
            sub = (sub - 1) & facet;
        }
    }
    std::sort(out.begin(), out.end(), face_less);
    return out;
}

FaceMask SimplicialComplex::vertex_set() const {
    FaceMask m = 0;
    for (FaceMask f : facets_) m |= f;
    return m;
}

bool SimplicialComplex::is_pure() const {
    if (facets_.empty()) return true;
    int c = std::popcount(facets_.front());
    for (FaceMask f : facets_)
        if (std::popcount(f) != c) return false;
    return true;
}

std::string SimplicialComplex::to_string() const {
    if (is_void()) return "<void>";
    std::string s = "<";
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        if (i > 0) s += ", ";
        if (facets_[i] == 0) {
            s += "{}";
            continue;
        }
        s += '{';
        bool first = true;
        for (int v = 0; v < n_; ++v) {
            if (facets_[i] >> v & 1u) {
                if (!first) s += ',';
                s += std::to_string(v + 1);
                first = false;
            }
        }
        s += '}';
    }
    return s + ">";
}

std::string DegreeVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(coords[i]);
    }
    return s + ")";
}

namespace {

// Keep only the inclusion-minimal masks.
std::vector<FaceMask> minimal_masks(std::vector<FaceMask> masks) {
    std::sort(masks.begin(), masks.end(), face_less);
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<FaceMask> kept;
    for (FaceMask m : masks) {
        bool redundant = false;
        for (FaceMask k : kept) {
            if ((k & m) == k) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(m);
    }
    return kept;
}

// Complex of all F contained in `allowed` containing no blocker mask.
SimplicialComplex complex_avoiding(int n, FaceMask allowed,
                                   const std::vector<FaceMask>& blockers_in) {
    std::vector<FaceMask> blockers = minimal_masks(blockers_in);
    for (FaceMask b : blockers)
        if (b == 0) return SimplicialComplex::void_complex(n);
    std::vector<FaceMask> faces;
    FaceMask sub = allowed;
    while (true) {
        bool blocked = false;
        for (FaceMask b : blockers) {
            if ((b & sub) == b) {
                blocked = true;
                break;
            }
        }
        if (!blocked) faces.push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & allowed;
    }
    return SimplicialComplex::from_faces(n, faces);
}

} // namespace

SimplicialComplex delta_of_ideal(const MonomialIdeal& ideal) {
    if (ideal.is_unit())
        throw std::invalid_argument("delta_of_ideal: undefined for the unit ideal");
    const int n = ideal.ambient().n;
    const MonomialIdeal rad = ideal.radical();
    std::vector<FaceMask> blockers;
    for (const Monomial& g : rad.generators())
        blockers.push_back(g.support());
    const FaceMask full = (FaceMask{1} << n) - 1;
    return complex_avoiding(n, full, blockers);
}

SimplicialComplex delta_a(const MonomialIdeal& ideal, const DegreeVector& a) {
    const int n = ideal.ambient().n;
    if (static_cast<int>(a.coords.size()) != n)
        throw std::invalid_argument("delta_a: degree vector has wrong length");
    const FaceMask ga = a.negative_support();
    const FaceMask allowed = ((FaceMask{1} << n) - 1) & ~ga;
    // Condition (2) fails for F exactly when some generator has all of its
    // a-exceeding coordinates inside F; those coordinate sets are blockers.
    std::vector<FaceMask> blockers;
    blockers.reserve(ideal.generators().size());
    for (const Monomial& g : ideal.generators()) {
        FaceMask exceed = 0;
        for (int i = 0; i < n; ++i)
            if (!(ga >> i & 1u) && g.exponent(i) > a.coords[static_cast<std::size_t>(i)])
                exceed |= FaceMask{1} << i;
        blockers.push_back(exceed);
    }
    return complex_avoiding(n, allowed, blockers);
}

bool is_connected(const SimplicialComplex& k) {
    if (k.is_void() || k.is_empty_face_only()) return false;
    const int n = k.vertex_capacity();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (FaceMask f : k.facets()) {
        int first = -1;
        for (int v = 0; v < n; ++v) {
            if (!(f >> v & 1u)) continue;
            if (first < 0)
                first = v;
            else
                parent[static_cast<std::size_t>(find(v))] = find(first);
        }
    }
    const FaceMask verts = k.vertex_set();
    int components = 0;
    for (int v = 0; v < n; ++v)
        if ((verts >> v & 1u) && find(v) == v) ++components;
    return components == 1;
}

MonomialIdeal restrict_ideal(const MonomialIdeal& ideal, FaceMask f, FaceMask n) {
    if (f & n)
        throw std::invalid_argument("restrict_ideal: overlapping variable sets");
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const Monomial& g : ideal.generators())
        gens.push_back(g.set_ones(f | n));
    return MonomialIdeal::minimalize(ideal.ambient(), std::move(gens));
}

} // namespace srpow
