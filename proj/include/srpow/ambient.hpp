#ifndef SRPOW_AMBIENT_HPP
#define SRPOW_AMBIENT_HPP

#include <stdexcept>

namespace srpow {

bool is_prime(long p);

// The polynomial ring k[x_1,...,x_n]: number of variables plus the
// characteristic of the coefficient field used for homology ranks.
struct AmbientContext {
    int n;
    long field_char;

    explicit AmbientContext(int n_, long field_char_ = 0)
        : n(n_), field_char(field_char_) {
        if (n < 3)
            throw std::invalid_argument("AmbientContext: need n >= 3");
        if (field_char != 0 && !is_prime(field_char))
            throw std::invalid_argument("AmbientContext: field_char must be 0 or a prime");
    }

    bool operator==(const AmbientContext&) const = default;
};

} // namespace srpow

#endif
