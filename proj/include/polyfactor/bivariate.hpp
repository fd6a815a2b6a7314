#ifndef POLYFACTOR_BIVARIATE_HPP
#define POLYFACTOR_BIVARIATE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyfactor/rat.hpp"

namespace polyfactor {

struct LatticePoint {
    long m1 = 0, m2 = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline long dot(const LatticePoint& m, const LatticePoint& n) { return m.m1 * n.m1 + m.m2 * n.m2; }
inline long det(const LatticePoint& a, const LatticePoint& b) { return a.m1 * b.m2 - a.m2 * b.m1; }

// Finite map exponent -> coefficient. Zero coefficients are never stored,
// so the map is lexicographically ordered over the true support.
class SparseBivariate {
public:
    SparseBivariate() = default;

    static SparseBivariate one() { return constant(rat(1)); }
    static SparseBivariate constant(const Rat& c);
    static SparseBivariate term(const Rat& c, long m1, long m2);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<LatticePoint, Rat>& terms() const { return terms_; }
    Rat coeff(long m1, long m2) const;

    void add_term(const LatticePoint& m, const Rat& c);

    SparseBivariate operator+(const SparseBivariate& o) const;
    SparseBivariate operator-(const SparseBivariate& o) const;
    SparseBivariate operator*(const SparseBivariate& o) const;
    SparseBivariate operator*(const Rat& s) const;
    bool operator==(const SparseBivariate& o) const { return terms_ == o.terms_; }
    bool operator!=(const SparseBivariate& o) const { return terms_ != o.terms_; }
    bool operator<(const SparseBivariate& o) const { return terms_ < o.terms_; }

    std::vector<LatticePoint> support() const;

    // Content-free integer form with positive coefficient on the
    // lexicographically smallest exponent... sign chosen so the first
    // (lex-lowest) nonzero coefficient is positive.
    SparseBivariate primitive_part() const;
    // this == primitive_part() * scale
    Rat content_versus(const SparseBivariate& primitive) const;

    std::string str() const;

private:
    std::map<LatticePoint, Rat> terms_;
};

} // namespace polyfactor

#endif
