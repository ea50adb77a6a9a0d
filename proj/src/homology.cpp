#include "srpow/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace srpow {

namespace {

// Rank by fraction-free (Bareiss) elimination over the integers. Returns -1
// if an intermediate product would overflow int64; the caller then retries
// with arbitrary precision.
int rank_bareiss_i64(std::vector<std::vector<std::int64_t>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::int64_t prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                __int128 t = static_cast<__int128>(m[r][c]) * m[i][j] -
                             static_cast<__int128>(m[i][c]) * m[r][j];
                t /= prev; // exact by Bareiss
                if (t > INT64_MAX || t < INT64_MIN) return -1;
                m[i][j] = static_cast<std::int64_t>(t);
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

int rank_bareiss_mpz(const std::vector<std::vector<std::int64_t>>& in) {
    const std::size_t rows = in.size();
    if (rows == 0) return 0;
    const std::size_t cols = in[0].size();
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m[i][j] = static_cast<long>(in[i][j]);
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

int rank_mod_p(std::vector<std::vector<std::int64_t>> m, long p) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    for (auto& row : m)
        for (auto& x : row) {
            x %= p;
            if (x < 0) x += p;
        }
    auto inv_mod = [&](std::int64_t a) {
        // extended Euclid; p prime, a != 0 mod p
        std::int64_t t = 0, newt = 1, rr = p, newr = a;
        while (newr != 0) {
            std::int64_t q = rr / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = rr - q * newr;
            rr = newr;
            newr = tmp;
        }
        return t < 0 ? t + p : t;
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const std::int64_t inv = inv_mod(m[r][c]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const std::int64_t factor = m[i][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] = (m[i][j] - factor * m[r][j]) % p;
                if (m[i][j] < 0) m[i][j] += p;
            }
        }
        ++r;
    }
    return static_cast<int>(r);
}

int exact_rank(const std::vector<std::vector<std::int64_t>>& m, long field_char) {
    if (field_char != 0) return rank_mod_p(m, field_char);
    int r = rank_bareiss_i64(m);
    if (r >= 0) return r;
    return rank_bareiss_mpz(m);
}

} // namespace

std::vector<long> reduced_homology_dims(const SimplicialComplex& k, long field_char) {
    if (k.is_void()) return {};
    const std::vector<FaceMask> all = k.faces();
    int maxcard = 0;
    for (FaceMask f : all) maxcard = std::max(maxcard, std::popcount(f));

    // by_card[c]: sorted faces of cardinality c; by_card[0] = {emptyset}
    std::vector<std::vector<FaceMask>> by_card(static_cast<std::size_t>(maxcard) + 1);
    for (FaceMask f : all)
        by_card[static_cast<std::size_t>(std::popcount(f))].push_back(f);

    // ranks[c] = rank of the boundary map from cardinality c to c-1
    std::vector<int> ranks(static_cast<std::size_t>(maxcard) + 2, 0);
    for (int c = 1; c <= maxcard; ++c) {
        const auto& rows_faces = by_card[static_cast<std::size_t>(c - 1)];
        const auto& cols_faces = by_card[static_cast<std::size_t>(c)];
        if (rows_faces.empty() || cols_faces.empty()) continue;
        std::vector<std::vector<std::int64_t>> m(
            rows_faces.size(), std::vector<std::int64_t>(cols_faces.size(), 0));
        for (std::size_t j = 0; j < cols_faces.size(); ++j) {
            const FaceMask face = cols_faces[j];
            int sign = 1;
            for (int v = 0; v < k.vertex_capacity(); ++v) {
                if (!(face >> v & 1u)) continue;
                const FaceMask sub = face & ~(FaceMask{1} << v);
                const auto it = std::lower_bound(rows_faces.begin(), rows_faces.end(), sub);
                m[static_cast<std::size_t>(it - rows_faces.begin())][j] = sign;
                sign = -sign;
            }
        }
        ranks[static_cast<std::size_t>(c)] = exact_rank(m, field_char);
    }

    std::vector<long> dims(static_cast<std::size_t>(maxcard) + 1, 0);
    for (int c = 0; c <= maxcard; ++c)
        dims[static_cast<std::size_t>(c)] =
            static_cast<long>(by_card[static_cast<std::size_t>(c)].size()) -
            ranks[static_cast<std::size_t>(c)] - ranks[static_cast<std::size_t>(c) + 1];
    return dims;
}

long reduced_homology_dim(const SimplicialComplex& k, int i, long field_char) {
    const std::vector<long> dims = reduced_homology_dims(k, field_char);
    const int idx = i + 1;
    if (idx < 0 || idx >= static_cast<int>(dims.size())) return 0;
    return dims[static_cast<std::size_t>(idx)];
}

} // namespace srpow
