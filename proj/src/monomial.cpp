#include "srpow/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace srpow {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty())
        throw std::invalid_argument("Monomial: empty exponent vector");
    for (int e : exps_)
        if (e < 0)
            throw std::invalid_argument("Monomial: negative exponent");
}

Monomial Monomial::one(int n) {
    return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0));
}

Monomial Monomial::variable(int n, int i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e.at(static_cast<std::size_t>(i)) = 1;
    return Monomial(std::move(e));
}

int Monomial::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0);
}

int Monomial::degree_outside(VarMask mask) const {
    int d = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (!(mask >> i & 1u)) d += exps_[i];
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
    if (exps_.size() != other.exps_.size())
        throw std::invalid_argument("Monomial::divides: mismatched ambient sizes");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
    if (exps_.size() != other.exps_.size())
        throw std::invalid_argument("Monomial::lcm: mismatched ambient sizes");
    std::vector<int> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        e[i] = std::max(exps_[i], other.exps_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (exps_.size() != other.exps_.size())
        throw std::invalid_argument("Monomial::operator*: mismatched ambient sizes");
    std::vector<int> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        e[i] = exps_[i] + other.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::squarefree_part() const {
    std::vector<int> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        e[i] = exps_[i] > 0 ? 1 : 0;
    return Monomial(std::move(e));
}

Monomial Monomial::set_ones(VarMask mask) const {
    std::vector<int> e = exps_;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (mask >> i & 1u) e[i] = 0;
    return Monomial(std::move(e));
}

VarMask Monomial::support() const {
    VarMask m = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0) m |= VarMask{1} << i;
    return m;
}

bool Monomial::operator<(const Monomial& other) const {
    int da = degree(), db = other.degree();
    if (da != db) return da < db;
    return exps_ < other.exps_;
}

std::string Monomial::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x';
        s += std::to_string(i + 1);
        if (exps_[i] > 1) {
            s += '^';
            s += std::to_string(exps_[i]);
        }
    }
    return s.empty() ? "1" : s;
}

} // namespace srpow
