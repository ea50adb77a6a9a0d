#ifndef SRPOW_MONOMIAL_HPP
#define SRPOW_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace srpow {

using VarMask = std::uint32_t; // bit i = variable x_{i+1}

// A monomial x_1^{e_0} ... x_n^{e_{n-1}}, stored as a dense exponent vector.
// Variable indices are 0-based internally; only text I/O is 1-based.
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(int n);
    static Monomial variable(int n, int i); // x_{i+1}, 0-based i

    int num_vars() const { return static_cast<int>(exps_.size()); }
    int exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exponents() const { return exps_; }

    int degree() const;
    // Sum of exponents at positions NOT in mask (localization degree).
    int degree_outside(VarMask mask) const;
    bool is_one() const;
    bool is_squarefree() const;

    bool divides(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    // Exponents clamped to {0,1}.
    Monomial squarefree_part() const;
    // Exponents at positions in mask set to 0 (substitute x_i = 1).
    Monomial set_ones(VarMask mask) const;
    VarMask support() const;

    bool operator==(const Monomial&) const = default;
    // Degree first, then lexicographic on exponent vectors. Canonical
    // generator order everywhere; keep deterministic.
    bool operator<(const Monomial& other) const;

    std::string to_string() const;

private:
    std::vector<int> exps_;
};

} // namespace srpow

#endif
