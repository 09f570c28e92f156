#include "qlrec/ratfunc.hpp"

#include <sstream>

namespace qlrec {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) { den_ = MultiPoly::constant(1); return; }
    // pull the denominator's monomial content into the numerator
    std::vector<std::pair<std::string, int32_t>> shift;
    for (const auto& v : den_.vars()) {
        int32_t m = den_.min_exponent_in(v);
        if (m != 0) shift.emplace_back(v, -m);
    }
    if (!shift.empty()) {
        den_ = den_.shifted(shift);
        num_ = num_.shifted(shift);
    }
    Rational c = den_.content();
    if (den_.leading_coeff().sign() < 0) c = -c;
    if (!c.is_one()) {
        den_ = den_.scaled(c.inverse());
        num_ = num_.scaled(c.inverse());
    }
    // cancel a full polynomial factor when the division happens to be exact;
    // bounded so failed attempts stay cheap
    if (!den_.is_constant() && !num_.is_constant() && den_.term_count() <= 64) {
        if (auto q = MultiPoly::try_divide(num_, den_)) {
            num_ = std::move(*q);
            den_ = MultiPoly::constant(1);
        }
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    if (auto q = MultiPoly::try_divide(a.den_, b.den_))
        return RatFunc(a.num_ + b.num_ * *q, a.den_);
    if (auto q = MultiPoly::try_divide(b.den_, a.den_))
        return RatFunc(a.num_ * *q + b.num_, b.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // cheap cross-cancellation before multiplying out
    if (auto q = MultiPoly::try_divide(a.num_, b.den_))
        return RatFunc(*q * b.num_, a.den_);
    if (auto q = MultiPoly::try_divide(b.num_, a.den_))
        return RatFunc(a.num_ * *q, b.den_);
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
    if (e == 0) return RatFunc(Rational(1));
    RatFunc base = e < 0 ? inverse() : *this;
    unsigned n = e < 0 ? static_cast<unsigned>(-(long)e) : static_cast<unsigned>(e);
    return RatFunc(base.num_.pow(n), base.den_.pow(n));
}

Rational RatFunc::eval(const std::map<std::string, Rational>& bindings) const {
    Rational d = den_.eval(bindings);
    if (d.is_zero()) fail(ErrorCode::DivisionByZero, "denominator vanishes at evaluation point");
    return num_.eval(bindings) / d;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/(" << den_.str() << ")";
    return os.str();
}

bool ratfunc_eq(const RatFunc& a, const RatFunc& b) {
    return a.num() * b.den() == b.num() * a.den();
}

RatFunc substitute(const MultiPoly& p, const std::map<std::string, RatFunc>& bindings) {
    const auto& vars = p.vars();
    std::vector<const RatFunc*> bound(vars.size(), nullptr);
    bool any = false;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = bindings.find(vars[i]);
        if (it != bindings.end()) { bound[i] = &it->second; any = true; }
    }
    if (!any) return RatFunc(p);
    RatFunc total;
    for (const auto& [e, c] : p.terms()) {
        RatFunc term{MultiPoly::constant(c)};
        MultiPoly passthrough = MultiPoly::constant(1);
        std::vector<std::pair<std::string, int32_t>> pows;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (bound[i]) {
                if (bound[i]->is_zero() && e[i] < 0)
                    fail(ErrorCode::DivisionByZero, "negative power of zero binding for " + vars[i]);
                term *= bound[i]->pow(e[i]);
            } else {
                pows.emplace_back(vars[i], e[i]);
            }
        }
        if (!pows.empty()) term *= RatFunc(passthrough.shifted(pows));
        total += term;
    }
    return total;
}

RatFunc substitute(const RatFunc& f, const std::map<std::string, RatFunc>& bindings) {
    RatFunc d = substitute(f.den(), bindings);
    if (d.is_zero()) fail(ErrorCode::DivisionByZero, "substitution makes denominator vanish");
    return substitute(f.num(), bindings) / d;
}

} // namespace qlrec
