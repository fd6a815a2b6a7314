#ifndef POLYFACTOR_QUOTIENT_HPP
#define POLYFACTOR_QUOTIENT_HPP

#include <memory>

#include "polyfactor/unipoly.hpp"

namespace polyfactor {

// Q[y]/(P) for P monic of degree >= 1. Elements of the same ring share the
// modulus through a QuotRing handle.
class QuotRing {
public:
    static std::shared_ptr<const QuotRing> make(UniPoly modulus);

    const UniPoly& modulus() const { return modulus_; }
    int degree() const { return modulus_.degree(); }

private:
    explicit QuotRing(UniPoly m) : modulus_(std::move(m)) {}
    UniPoly modulus_;
};

using QuotRingPtr = std::shared_ptr<const QuotRing>;

class QuotElem {
public:
    QuotElem() = default;
    QuotElem(QuotRingPtr ring, UniPoly residue);

    static QuotElem zero(const QuotRingPtr& ring) { return QuotElem(ring, UniPoly::zero()); }
    static QuotElem one(const QuotRingPtr& ring) { return QuotElem(ring, UniPoly::one()); }
    static QuotElem scalar(const QuotRingPtr& ring, const Rat& c) { return QuotElem(ring, UniPoly::constant(c)); }
    // The class of y itself.
    static QuotElem generator(const QuotRingPtr& ring) { return QuotElem(ring, UniPoly::monomial(rat(1), 1)); }

    const QuotRingPtr& ring() const { return ring_; }
    const UniPoly& residue() const { return residue_; }
    bool is_zero() const { return residue_.is_zero(); }

    QuotElem operator+(const QuotElem& o) const;
    QuotElem operator-(const QuotElem& o) const;
    QuotElem operator-() const;
    QuotElem operator*(const QuotElem& o) const;
    QuotElem operator*(const Rat& s) const;
    bool operator==(const QuotElem& o) const { return residue_ == o.residue_; }
    bool operator!=(const QuotElem& o) const { return residue_ != o.residue_; }

    // Multiplicative inverse; throws ZeroConstantTerm on zero and
    // Inconsistent if the residue shares a factor with the modulus
    // (cannot happen for irreducible moduli).
    QuotElem inverse() const;

private:
    QuotRingPtr ring_;
    UniPoly residue_;
};

} // namespace polyfactor

#endif
