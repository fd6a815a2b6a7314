#ifndef POLYFACTOR_UNIPOLY_HPP
#define POLYFACTOR_UNIPOLY_HPP

#include <vector>
#include <string>

#include "polyfactor/rat.hpp"

namespace polyfactor {

// Dense univariate polynomial over Q, lowest degree first.
// Invariant: no trailing zero coefficients (zero polynomial = empty vector).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return constant(rat(1)); }
    static UniPoly constant(const Rat& c);
    // c * y^k
    static UniPoly monomial(const Rat& c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const;

    // Coefficient of y^k; zero outside the stored range.
    const Rat& coeff(int k) const;
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

    // Euclidean division by a nonzero divisor; returns (quotient, remainder).
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& divisor) const;

    UniPoly derivative() const;
    Rat eval(const Rat& x) const;
    UniPoly monic() const;
    UniPoly shifted(int k) const; // multiply by y^k

    std::string str(const std::string& var = "y") const;

private:
    void trim();
    std::vector<Rat> c_;
};

// Monic gcd; gcd(0,0) = 0.
UniPoly poly_gcd(UniPoly a, UniPoly b);

// (g, u, v) with g = gcd(a,b) monic and u*a + v*b = g.
struct ExtGcd {
    UniPoly g, u, v;
};
ExtGcd poly_ext_gcd(const UniPoly& a, const UniPoly& b);

// Power sums Tr^0..Tr^{count-1} of the roots of a monic p, by Newton's
// identities. Tr^0 = deg(p). Throws NotMonic.
std::vector<Rat> power_sums(const UniPoly& p, int count);

} // namespace polyfactor

#endif
