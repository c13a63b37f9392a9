#include "hsf/monomial.hpp"

#include <sstream>

namespace hsf {

std::string VarId::name() const {
    std::ostringstream os;
    switch (kind) {
        case VarKind::Z: os << "z" << index; break;
        case VarKind::Lambda: os << "lambda" << index; break;
        case VarKind::P: os << "p" << index; break;
        case VarKind::E: os << "e" << index; break;
        case VarKind::Tau: os << "tau" << index; break;
        case VarKind::X1: os << "x[1," << index << "]"; break;
        case VarKind::X2: os << "x[2," << index << "]"; break;
        case VarKind::X3: os << "x[3," << index << "]"; break;
    }
    return os.str();
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin(), ae = factors_.end();
    auto b = o.factors_.begin(), be = o.factors_.end();
    while (a != ae && b != be) {
        if (a->first < b->first) {
            r.factors_.push_back(*a++);
        } else if (b->first < a->first) {
            r.factors_.push_back(*b++);
        } else {
            r.factors_.push_back({a->first, a->second + b->second});
            ++a;
            ++b;
        }
    }
    r.factors_.insert(r.factors_.end(), a, ae);
    r.factors_.insert(r.factors_.end(), b, be);
    return r;
}

Monomial Monomial::times_var(VarId v, int exp) const {
    if (exp == 0) return *this;
    Monomial r;
    r.factors_.reserve(factors_.size() + 1);
    bool placed = false;
    for (const auto& f : factors_) {
        if (f.first == v) {
            int e = f.second + exp;
            if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
            if (e > 0) r.factors_.push_back({v, e});
            placed = true;
        } else {
            if (!placed && v < f.first) {
                if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
                r.factors_.push_back({v, exp});
                placed = true;
            }
            r.factors_.push_back(f);
        }
    }
    if (!placed) {
        if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
        r.factors_.push_back({v, exp});
    }
    return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    auto i = a.factors_.begin(), ie = a.factors_.end();
    auto j = b.factors_.begin(), je = b.factors_.end();
    while (i != ie || j != je) {
        if (i == ie) return std::strong_ordering::greater;  // b owns the earliest variable
        if (j == je) return std::strong_ordering::less;
        if (i->first == j->first) {
            if (i->second != j->second)
                return i->second > j->second ? std::strong_ordering::less : std::strong_ordering::greater;
            ++i;
            ++j;
        } else if (i->first < j->first) {
            return std::strong_ordering::less;  // a has a positive exponent where b has zero
        } else {
            return std::strong_ordering::greater;
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace hsf
