#include "polyfactor/unipoly.hpp"

#include <sstream>

#include "polyfactor/errors.hpp"

namespace polyfactor {

namespace {
const Rat kZero = rat(0);
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rat& c) {
    UniPoly p;
    if (c != 0) p.c_.push_back(c);
    return p;
}

UniPoly UniPoly::monomial(const Rat& c, int k) {
    UniPoly p;
    if (c != 0) {
        p.c_.assign(static_cast<size_t>(k) + 1, kZero);
        p.c_.back() = c;
    }
    return p;
}

bool UniPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

const Rat& UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

const Rat& UniPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), kZero);
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), kZero);
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rat> r(c_);
    for (auto& x : r) x = -x;
    UniPoly p;
    p.c_ = std::move(r);
    return p;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (c_.empty() || o.c_.empty()) return UniPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, kZero);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rat& s) const {
    if (s == 0) return UniPoly();
    std::vector<Rat> r(c_);
    for (auto& x : r) x *= s;
    UniPoly p;
    p.c_ = std::move(r);
    return p;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw ZeroPolynomial("division by zero polynomial");
    UniPoly q, r = *this;
    int dd = divisor.degree();
    const Rat& lead = divisor.leading();
    std::vector<Rat> qc;
    if (r.degree() >= dd) qc.assign(static_cast<size_t>(r.degree() - dd) + 1, kZero);
    while (!r.is_zero() && r.degree() >= dd) {
        int k = r.degree() - dd;
        Rat f = r.leading() / lead;
        qc[static_cast<size_t>(k)] = f;
        r = r - divisor.shifted(k) * f;
    }
    q = UniPoly(std::move(qc));
    return {q, r};
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> r(c_.size() - 1, kZero);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * rat(static_cast<long>(i));
    return UniPoly(std::move(r));
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return *this * (rat(1) / leading());
}

UniPoly UniPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rat> r(static_cast<size_t>(k), kZero);
    r.insert(r.end(), c_.begin(), c_.end());
    UniPoly p;
    p.c_ = std::move(r);
    return p;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& c = coeff(k);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat a = abs(c);
        if (a != 1 || k == 0) os << a.get_str();
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtGcd poly_ext_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    UniPoly u0 = UniPoly::one(), u1 = UniPoly::zero();
    UniPoly v0 = UniPoly::zero(), v1 = UniPoly::one();
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divrem(r1);
        UniPoly u2 = u0 - q * u1;
        UniPoly v2 = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    Rat inv = rat(1) / r0.leading();
    return {r0 * inv, u0 * inv, v0 * inv};
}

std::vector<Rat> power_sums(const UniPoly& p, int count) {
    if (!p.is_monic() || p.degree() < 1) throw NotMonic("power_sums needs a monic polynomial of degree >= 1");
    int n = p.degree();
    // e_k = (-1)^k * coeff(y^{n-k})
    std::vector<Rat> e(static_cast<size_t>(n) + 1);
    e[0] = rat(1);
    for (int k = 1; k <= n; ++k) e[static_cast<size_t>(k)] = (k % 2 ? -p.coeff(n - k) : p.coeff(n - k));
    std::vector<Rat> tr;
    tr.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        if (k == 0) {
            tr.push_back(rat(n));
            continue;
        }
        Rat s = 0;
        for (int i = 1; i < k && i <= n; ++i) {
            Rat term = e[static_cast<size_t>(i)] * tr[static_cast<size_t>(k - i)];
            s += (i % 2 ? term : -term);
        }
        if (k <= n) s += rat(k) * (k % 2 ? e[static_cast<size_t>(k)] : -e[static_cast<size_t>(k)]);
        tr.push_back(s);
    }
    return tr;
}

} // namespace polyfactor
