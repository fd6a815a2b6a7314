#include "polyfactor/quotient.hpp"

#include "polyfactor/errors.hpp"

namespace polyfactor {

std::shared_ptr<const QuotRing> QuotRing::make(UniPoly modulus) {
    if (!modulus.is_monic() || modulus.degree() < 1)
        throw NotMonic("quotient modulus must be monic of degree >= 1");
    return std::shared_ptr<const QuotRing>(new QuotRing(std::move(modulus)));
}

QuotElem::QuotElem(QuotRingPtr ring, UniPoly residue) : ring_(std::move(ring)) {
    if (residue.degree() >= ring_->degree())
        residue = residue.divrem(ring_->modulus()).second;
    residue_ = std::move(residue);
}

QuotElem QuotElem::operator+(const QuotElem& o) const { return QuotElem(ring_, residue_ + o.residue_); }
QuotElem QuotElem::operator-(const QuotElem& o) const { return QuotElem(ring_, residue_ - o.residue_); }
QuotElem QuotElem::operator-() const { return QuotElem(ring_, -residue_); }
QuotElem QuotElem::operator*(const QuotElem& o) const { return QuotElem(ring_, residue_ * o.residue_); }
QuotElem QuotElem::operator*(const Rat& s) const { return QuotElem(ring_, residue_ * s); }

QuotElem QuotElem::inverse() const {
    if (is_zero()) throw ZeroConstantTerm("inverse of zero in quotient ring");
    ExtGcd g = poly_ext_gcd(residue_, ring_->modulus());
    if (g.g.degree() != 0)
        throw Inconsistent("residue not invertible: modulus is reducible");
    return QuotElem(ring_, g.u);
}

} // namespace polyfactor
