#include "polyfactor/series.hpp"

#include "polyfactor/errors.hpp"

namespace polyfactor {

TruncSeries::TruncSeries(QuotRingPtr ring, int precision)
    : ring_(std::move(ring)), c_(static_cast<size_t>(precision), QuotElem::zero(ring_)) {
    if (precision < 1) throw PrecisionExceeded("series precision must be positive");
}

TruncSeries::TruncSeries(QuotRingPtr ring, std::vector<QuotElem> coeffs)
    : ring_(std::move(ring)), c_(std::move(coeffs)) {
    if (c_.empty()) throw PrecisionExceeded("series precision must be positive");
}

TruncSeries TruncSeries::constant(const QuotRingPtr& ring, const QuotElem& c, int precision) {
    TruncSeries s(ring, precision);
    s.c_[0] = c;
    return s;
}

TruncSeries TruncSeries::x(const QuotRingPtr& ring, int precision) {
    TruncSeries s(ring, precision);
    if (precision > 1) s.c_[1] = QuotElem::one(ring);
    return s;
}

const QuotElem& TruncSeries::coeff(int k) const {
    if (k < 0) {
        static thread_local QuotElem zero;
        zero = QuotElem::zero(ring_);
        return zero;
    }
    if (k >= precision()) throw PrecisionExceeded("series coefficient beyond precision");
    return c_[static_cast<size_t>(k)];
}

void TruncSeries::set_coeff(int k, QuotElem v) {
    if (k < 0 || k >= precision()) throw PrecisionExceeded("series coefficient beyond precision");
    c_[static_cast<size_t>(k)] = std::move(v);
}

bool TruncSeries::is_zero() const {
    for (const auto& e : c_)
        if (!e.is_zero()) return false;
    return true;
}

TruncSeries TruncSeries::truncated(int precision) const {
    if (precision >= this->precision()) return *this;
    return TruncSeries(ring_, std::vector<QuotElem>(c_.begin(), c_.begin() + precision));
}

TruncSeries TruncSeries::extended(int precision) const {
    if (precision <= this->precision()) return truncated(precision);
    std::vector<QuotElem> r = c_;
    r.resize(static_cast<size_t>(precision), QuotElem::zero(ring_));
    return TruncSeries(ring_, std::move(r));
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    int n = std::min(precision(), o.precision());
    std::vector<QuotElem> r(c_.begin(), c_.begin() + n);
    for (int k = 0; k < n; ++k) r[static_cast<size_t>(k)] = r[static_cast<size_t>(k)] + o.c_[static_cast<size_t>(k)];
    return TruncSeries(ring_, std::move(r));
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::operator-() const {
    std::vector<QuotElem> r(c_);
    for (auto& e : r) e = -e;
    return TruncSeries(ring_, std::move(r));
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    int n = std::min(precision(), o.precision());
    std::vector<QuotElem> r(static_cast<size_t>(n), QuotElem::zero(ring_));
    for (int i = 0; i < n; ++i) {
        if (c_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j < n; ++j)
            r[static_cast<size_t>(i + j)] =
                r[static_cast<size_t>(i + j)] + c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
    }
    return TruncSeries(ring_, std::move(r));
}

TruncSeries TruncSeries::operator*(const QuotElem& s) const {
    std::vector<QuotElem> r(c_);
    for (auto& e : r) e = e * s;
    return TruncSeries(ring_, std::move(r));
}

TruncSeries TruncSeries::operator*(const Rat& s) const {
    std::vector<QuotElem> r(c_);
    for (auto& e : r) e = e * s;
    return TruncSeries(ring_, std::move(r));
}

TruncSeries TruncSeries::shifted(int k) const {
    if (k == 0) return *this;
    TruncSeries r(ring_, precision());
    for (int i = 0; i + k < precision(); ++i) r.c_[static_cast<size_t>(i + k)] = c_[static_cast<size_t>(i)];
    return r;
}

TruncSeries TruncSeries::derivative() const {
    if (precision() == 1) return TruncSeries(ring_, 1);
    std::vector<QuotElem> r(static_cast<size_t>(precision() - 1), QuotElem::zero(ring_));
    for (int k = 1; k < precision(); ++k)
        r[static_cast<size_t>(k - 1)] = c_[static_cast<size_t>(k)] * rat(k);
    return TruncSeries(ring_, std::move(r));
}

TruncSeries TruncSeries::integrated() const {
    std::vector<QuotElem> r(static_cast<size_t>(precision() + 1), QuotElem::zero(ring_));
    for (int k = 0; k < precision(); ++k)
        r[static_cast<size_t>(k + 1)] = c_[static_cast<size_t>(k)] * (rat(1) / rat(k + 1));
    return TruncSeries(ring_, std::move(r));
}

TruncSeries series_inverse(const TruncSeries& s) {
    if (s.coeff(0).is_zero()) throw ZeroConstantTerm("series has no inverse: zero constant term");
    int n = s.precision();
    QuotElem c0inv = s.coeff(0).inverse();
    TruncSeries u(s.ring(), n);
    u.set_coeff(0, c0inv);
    // u_k = -c0^{-1} * sum_{j=1..k} s_j u_{k-j}
    for (int k = 1; k < n; ++k) {
        QuotElem acc = QuotElem::zero(s.ring());
        for (int j = 1; j <= k; ++j) acc = acc + s.coeff(j) * u.coeff(k - j);
        u.set_coeff(k, -(c0inv * acc));
    }
    return u;
}

TruncSeries series_log_primitive(const TruncSeries& s) {
    if (s.coeff(0).is_zero()) throw ZeroConstantTerm("log primitive needs a unit constant term");
    if (s.precision() == 1) return TruncSeries(s.ring(), 1);
    TruncSeries g = s.derivative() * series_inverse(s.truncated(s.precision() - 1));
    return g.integrated();
}

TruncSeries series_int_power(const TruncSeries& s, long k) {
    TruncSeries base = k < 0 ? series_inverse(s) : s;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    TruncSeries acc = TruncSeries::constant(s.ring(), QuotElem::one(s.ring()), s.precision());
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

} // namespace polyfactor
