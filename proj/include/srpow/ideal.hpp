#ifndef SRPOW_IDEAL_HPP
#define SRPOW_IDEAL_HPP

#include <string>
#include <vector>

#include "srpow/ambient.hpp"
#include "srpow/monomial.hpp"

namespace srpow {

// A monomial ideal given by its unique minimal generating set, kept sorted.
// Structural equality of generator sets is ideal equality. The empty set is
// the zero ideal; the set {1} is the unit ideal.
class MonomialIdeal {
public:
    // Discards divisibility-redundant elements; the canonical constructor.
    static MonomialIdeal minimalize(const AmbientContext& ambient,
                                    std::vector<Monomial> gens);
    static MonomialIdeal zero(const AmbientContext& ambient);
    static MonomialIdeal unit(const AmbientContext& ambient);

    const AmbientContext& ambient() const { return ambient_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    // Degree of the smallest generator; ideal must be nonzero.
    int min_generator_degree() const;
    // rho_i = max i-th exponent over the generators (0 for the zero ideal).
    std::vector<int> max_exponents() const;

    bool contains(const Monomial& f) const;
    MonomialIdeal intersect(const MonomialIdeal& other) const;
    MonomialIdeal multiply(const MonomialIdeal& other) const;
    // m = 0 gives the unit ideal (convention, used only internally).
    MonomialIdeal power(int m) const;
    MonomialIdeal radical() const;

    bool operator==(const MonomialIdeal&) const = default;

    std::string to_string() const;

private:
    MonomialIdeal(AmbientContext ambient, std::vector<Monomial> gens)
        : ambient_(ambient), gens_(std::move(gens)) {}

    AmbientContext ambient_;
    std::vector<Monomial> gens_; // sorted, divisibility-minimal
};

// All monomials of total degree m supported on the variables of `vars`:
// the m-th power of the prime generated by those variables.
MonomialIdeal prime_power(const AmbientContext& ambient, VarMask vars, int m);

} // namespace srpow

#endif
