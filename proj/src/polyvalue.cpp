#include "qlrec/polyvalue.hpp"

#include <sstream>

namespace qlrec {

void PolyValue::trim() {
    while (!nums_.empty() && nums_.back().is_zero()) nums_.pop_back();
    if (nums_.empty()) den_ = MultiPoly::constant(1);
}

PolyValue PolyValue::constant(const RatFunc& c, const std::string& var) {
    PolyValue p(var);
    if (!c.is_zero()) {
        p.nums_ = {c.num()};
        p.den_ = c.den();
    }
    return p;
}

PolyValue PolyValue::variable(const std::string& var) {
    PolyValue p(var);
    p.nums_ = {MultiPoly(), MultiPoly::constant(1)};
    return p;
}

PolyValue PolyValue::from_coeffs(const std::vector<RatFunc>& coeffs, const std::string& var) {
    PolyValue p(var);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        PolyValue t = constant(coeffs[i], var);
        p += t.times_var_pow(static_cast<int>(i));
    }
    return p;
}

RatFunc PolyValue::coeff(std::size_t i) const {
    if (i >= nums_.size()) return RatFunc();
    return RatFunc(nums_[i], den_);
}

PolyValue PolyValue::operator-() const {
    PolyValue p = *this;
    for (auto& n : p.nums_) n = -n;
    return p;
}

PolyValue operator+(const PolyValue& a, const PolyValue& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    PolyValue out(a.var_);
    MultiPoly ma = MultiPoly::constant(1), mb = MultiPoly::constant(1);
    if (a.den_ == b.den_) {
        out.den_ = a.den_;
    } else if (auto q = MultiPoly::try_divide(a.den_, b.den_)) {
        out.den_ = a.den_;
        mb = std::move(*q);
    } else if (auto q2 = MultiPoly::try_divide(b.den_, a.den_)) {
        out.den_ = b.den_;
        ma = std::move(*q2);
    } else {
        out.den_ = a.den_ * b.den_;
        ma = b.den_;
        mb = a.den_;
    }
    out.nums_.resize(std::max(a.nums_.size(), b.nums_.size()));
    for (std::size_t i = 0; i < out.nums_.size(); ++i) {
        MultiPoly v;
        if (i < a.nums_.size() && !a.nums_[i].is_zero())
            v = ma.is_one() ? a.nums_[i] : a.nums_[i] * ma;
        if (i < b.nums_.size() && !b.nums_[i].is_zero())
            v = v + (mb.is_one() ? b.nums_[i] : b.nums_[i] * mb);
        out.nums_[i] = std::move(v);
    }
    out.trim();
    return out;
}

PolyValue operator-(const PolyValue& a, const PolyValue& b) { return a + (-b); }

PolyValue operator*(const PolyValue& a, const PolyValue& b) {
    PolyValue out(a.var_);
    if (a.is_zero() || b.is_zero()) return out;
    out.den_ = a.den_ * b.den_;
    out.nums_.assign(a.nums_.size() + b.nums_.size() - 1, MultiPoly());
    for (std::size_t i = 0; i < a.nums_.size(); ++i) {
        if (a.nums_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.nums_.size(); ++j) {
            if (b.nums_[j].is_zero()) continue;
            out.nums_[i + j] += a.nums_[i] * b.nums_[j];
        }
    }
    out.trim();
    return out;
}

PolyValue PolyValue::scaled(const RatFunc& c) const {
    PolyValue out(var_);
    if (c.is_zero() || is_zero()) return out;
    out.nums_.reserve(nums_.size());
    for (const auto& n : nums_) out.nums_.push_back(n * c.num());
    out.den_ = den_ * c.den();
    out.trim();
    return out;
}

PolyValue PolyValue::arg_scaled(const RatFunc& factor) const {
    if (is_zero()) return *this;
    if (factor.den().is_one()) {
        // common case: monomial factor, denominator unchanged
        PolyValue out(var_);
        out.den_ = den_;
        out.nums_.resize(nums_.size());
        MultiPoly p = MultiPoly::constant(1);
        for (std::size_t i = 0; i < nums_.size(); ++i) {
            if (!nums_[i].is_zero()) out.nums_[i] = nums_[i] * p;
            if (i + 1 < nums_.size()) p = p * factor.num();
        }
        out.trim();
        return out;
    }
    PolyValue acc(var_);
    RatFunc p(Rational(1));
    for (std::size_t i = 0; i < nums_.size(); ++i) {
        if (!nums_[i].is_zero())
            acc += constant(RatFunc(nums_[i], den_) * p, var_).times_var_pow(static_cast<int>(i));
        p *= factor;
    }
    return acc;
}

PolyValue PolyValue::times_var_pow(int k) const {
    PolyValue out = *this;
    if (k == 0 || is_zero()) return out;
    out.nums_.insert(out.nums_.begin(), static_cast<std::size_t>(k), MultiPoly());
    return out;
}

PolyValue PolyValue::div_var() const {
    if (is_zero()) return *this;
    if (!nums_.front().is_zero())
        fail(ErrorCode::BadInput, "poly not divisible by its main variable");
    PolyValue out = *this;
    out.nums_.erase(out.nums_.begin());
    out.trim();
    return out;
}

RatFunc PolyValue::eval(const RatFunc& x) const {
    RatFunc acc;
    for (std::size_t i = nums_.size(); i-- > 0;)
        acc = acc * x + RatFunc(nums_[i]);
    return acc * RatFunc(MultiPoly::constant(1), den_);
}

RatFunc PolyValue::as_ratfunc() const {
    MultiPoly num;
    for (std::size_t i = 0; i < nums_.size(); ++i)
        num += nums_[i].shifted({{var_, static_cast<int32_t>(i)}});
    return RatFunc(num, den_);
}

PolyValue PolyValue::from_ratfunc(const RatFunc& f, const std::string& var) {
    if (f.den().depends_on(var))
        fail(ErrorCode::BadInput, "denominator depends on the main variable");
    PolyValue out(var);
    auto parts = f.num().coefficients_in(var);
    if (parts.empty()) return out;
    if (parts.begin()->first < 0)
        fail(ErrorCode::BadInput, "negative power of main variable");
    out.nums_.resize(static_cast<std::size_t>(parts.rbegin()->first) + 1);
    for (auto& [k, p] : parts) out.nums_[static_cast<std::size_t>(k)] = std::move(p);
    out.den_ = f.den();
    out.trim();
    return out;
}

std::string PolyValue::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = nums_.size(); i-- > 0;) {
        if (nums_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff(i).str() << ")";
        if (i > 0) os << "*" << var_;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

} // namespace qlrec
