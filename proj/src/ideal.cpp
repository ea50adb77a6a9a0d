#include "srpow/ideal.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace srpow {

namespace {

void check_ambient(const AmbientContext& ambient, const std::vector<Monomial>& gens) {
    for (const Monomial& g : gens)
        if (g.num_vars() != ambient.n)
            throw std::invalid_argument("MonomialIdeal: mismatched ambient sizes");
}

void check_compatible(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (!(a.ambient() == b.ambient()))
        throw std::invalid_argument("MonomialIdeal: mismatched ambients");
}

} // namespace

MonomialIdeal MonomialIdeal::minimalize(const AmbientContext& ambient,
                                        std::vector<Monomial> gens) {
    check_ambient(ambient, gens);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // Sorted by degree, so any divisor of gens[i] was kept before i.
    std::vector<Monomial> kept;
    kept.reserve(gens.size());
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& k : kept) {
            if (k.divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(g);
    }
    return MonomialIdeal(ambient, std::move(kept));
}

MonomialIdeal MonomialIdeal::zero(const AmbientContext& ambient) {
    return MonomialIdeal(ambient, {});
}

MonomialIdeal MonomialIdeal::unit(const AmbientContext& ambient) {
    return MonomialIdeal(ambient, {Monomial::one(ambient.n)});
}

int MonomialIdeal::min_generator_degree() const {
    if (is_zero())
        throw std::invalid_argument("min_generator_degree: zero ideal");
    return gens_.front().degree(); // sorted by degree
}

std::vector<int> MonomialIdeal::max_exponents() const {
    std::vector<int> rho(static_cast<std::size_t>(ambient_.n), 0);
    for (const Monomial& g : gens_)
        for (int i = 0; i < ambient_.n; ++i)
            rho[static_cast<std::size_t>(i)] =
                std::max(rho[static_cast<std::size_t>(i)], g.exponent(i));
    return rho;
}

bool MonomialIdeal::contains(const Monomial& f) const {
    if (f.num_vars() != ambient_.n)
        throw std::invalid_argument("contains: mismatched ambient sizes");
    for (const Monomial& g : gens_)
        if (g.divides(f)) return true;
    return false;
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
    check_compatible(*this, other);
    std::vector<Monomial> cand;
    cand.reserve(gens_.size() * other.gens_.size());
    for (const Monomial& g : gens_)
        for (const Monomial& h : other.gens_)
            cand.push_back(g.lcm(h));
    return minimalize(ambient_, std::move(cand));
}

MonomialIdeal MonomialIdeal::multiply(const MonomialIdeal& other) const {
    check_compatible(*this, other);
    std::vector<Monomial> cand;
    cand.reserve(gens_.size() * other.gens_.size());
    for (const Monomial& g : gens_)
        for (const Monomial& h : other.gens_)
            cand.push_back(g * h);
    return minimalize(ambient_, std::move(cand));
}

MonomialIdeal MonomialIdeal::power(int m) const {
    if (m < 0)
        throw std::invalid_argument("power: negative exponent");
    MonomialIdeal result = unit(ambient_);
    for (int k = 0; k < m; ++k)
        result = result.multiply(*this);
    return result;
}

MonomialIdeal MonomialIdeal::radical() const {
    std::vector<Monomial> cand;
    cand.reserve(gens_.size());
    for (const Monomial& g : gens_)
        cand.push_back(g.squarefree_part());
    return minimalize(ambient_, std::move(cand));
}

std::string MonomialIdeal::to_string() const {
    if (is_zero()) return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i > 0) s += ", ";
        s += gens_[i].to_string();
    }
    return s + ")";
}

MonomialIdeal prime_power(const AmbientContext& ambient, VarMask vars, int m) {
    if (vars == 0)
        throw std::invalid_argument("prime_power: empty variable set");
    if (m < 1)
        throw std::invalid_argument("prime_power: need m >= 1");
    std::vector<int> idx;
    for (int i = 0; i < ambient.n; ++i)
        if (vars >> i & 1u) idx.push_back(i);

    std::vector<Monomial> gens;
    std::vector<int> exps(static_cast<std::size_t>(ambient.n), 0);
    // All compositions of m over the selected variables.
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos + 1 == idx.size()) {
            exps[static_cast<std::size_t>(idx[pos])] = left;
            gens.push_back(Monomial(exps));
            exps[static_cast<std::size_t>(idx[pos])] = 0;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            exps[static_cast<std::size_t>(idx[pos])] = e;
            self(self, pos + 1, left - e);
        }
        exps[static_cast<std::size_t>(idx[pos])] = 0;
    };
    rec(rec, 0, m);
    return MonomialIdeal::minimalize(ambient, std::move(gens));
}

} // namespace srpow
