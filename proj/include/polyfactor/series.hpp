#ifndef POLYFACTOR_SERIES_HPP
#define POLYFACTOR_SERIES_HPP

#include <vector>

#include "polyfactor/quotient.hpp"

namespace polyfactor {

// Truncated power series over a quotient ring: an element of K_P[[x]]/(x^N).
// coefficients[k] is the coefficient of x^k; exactly N of them are stored.
class TruncSeries {
public:
    TruncSeries(QuotRingPtr ring, int precision);
    TruncSeries(QuotRingPtr ring, std::vector<QuotElem> coeffs);

    static TruncSeries constant(const QuotRingPtr& ring, const QuotElem& c, int precision);
    static TruncSeries x(const QuotRingPtr& ring, int precision);

    const QuotRingPtr& ring() const { return ring_; }
    int precision() const { return static_cast<int>(c_.size()); }

    // Coefficient of x^k. Negative k gives zero (a regular series has no
    // negative-power terms); k >= precision throws PrecisionExceeded.
    const QuotElem& coeff(int k) const;
    void set_coeff(int k, QuotElem v);
    bool is_zero() const;

    TruncSeries truncated(int precision) const;   // precision <= current
    TruncSeries extended(int precision) const;    // pad with zeros

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator-() const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator*(const QuotElem& s) const;
    TruncSeries operator*(const Rat& s) const;
    bool operator==(const TruncSeries& o) const { return c_ == o.c_; }

    TruncSeries shifted(int k) const;  // multiply by x^k, k >= 0, truncating
    TruncSeries derivative() const;    // precision drops by one
    // Primitive vanishing at 0; precision grows by one.
    TruncSeries integrated() const;

private:
    QuotRingPtr ring_;
    std::vector<QuotElem> c_;
};

// u with s*u = 1 mod x^N. Throws ZeroConstantTerm.
TruncSeries series_inverse(const TruncSeries& s);

// L with L(0)=0 and L' = s'/s mod x^{N-1}; precision N preserved.
TruncSeries series_log_primitive(const TruncSeries& s);

// s^k mod x^N by binary exponentiation; k < 0 goes through series_inverse.
TruncSeries series_int_power(const TruncSeries& s, long k);

} // namespace polyfactor

#endif
