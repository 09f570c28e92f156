#include "qlrec/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qlrec {

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

// Re-index exponents from `from` variable list into `to` (a superset).
Exponents remap(const Exponents& e, const std::vector<std::string>& from,
                const std::vector<std::string>& to) {
    Exponents out(to.size(), 0);
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (e[i] == 0) continue;
        auto it = std::lower_bound(to.begin(), to.end(), from[i]);
        out[static_cast<std::size_t>(it - to.begin())] = e[i];
    }
    return out;
}

} // namespace

void MultiPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    if (terms_.empty()) { vars_.clear(); return; }
    // prune variables that no term uses
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<std::string> nv;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) nv.push_back(vars_[i]);
    TermMap nt;
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(nv.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        nt.emplace(std::move(ne), c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars, TermMap terms) {
    MultiPoly p;
    p.vars_ = std::move(vars);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

MultiPoly MultiPoly::constant(const Rational& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(Exponents{}, c);
    return p;
}

MultiPoly MultiPoly::var(const std::string& name, int32_t exp) {
    if (exp == 0) return constant(1);
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{exp}, Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(const Rational& coeff,
                              const std::vector<std::pair<std::string, int32_t>>& pows) {
    MultiPoly p = constant(coeff);
    return p.shifted(pows);
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

const std::pair<const Exponents, Rational>& MultiPoly::leading() const {
    return *terms_.rbegin();
}

Rational MultiPoly::leading_coeff() const {
    if (terms_.empty()) return Rational(0);
    return terms_.rbegin()->second;
}

std::vector<std::string> align_universe(MultiPoly& a, MultiPoly& b) {
    if (a.vars() == b.vars()) return a.vars();
    std::vector<std::string> merged;
    std::set_union(a.vars().begin(), a.vars().end(), b.vars().begin(), b.vars().end(),
                   std::back_inserter(merged));
    // direct field assignment: terms are already coefficient-normalized and the
    // shared universe must not be pruned here
    auto rebuild = [&merged](MultiPoly& p) {
        MultiPoly::TermMap nt;
        for (const auto& [e, c] : p.terms_)
            nt.emplace(remap(e, p.vars_, merged), c);
        p.vars_ = merged;
        p.terms_ = std::move(nt);
    };
    rebuild(a);
    rebuild(b);
    return merged;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

MultiPoly operator+(const MultiPoly& a0, const MultiPoly& b0) {
    MultiPoly a = a0, b = b0;
    align_universe(a, b);
    for (const auto& [e, c] : b.terms_) {
        auto [it, fresh] = a.terms_.emplace(e, c);
        if (!fresh) it->second += c;
    }
    return MultiPoly::from_terms(std::move(a.vars_), std::move(a.terms_));
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a0, const MultiPoly& b0) {
    if (a0.is_zero() || b0.is_zero()) return MultiPoly();
    MultiPoly a = a0, b = b0;
    auto merged = align_universe(a, b);
    const std::size_t nv = merged.size();
    MultiPoly::TermMap out;
    const auto& small = a.terms_.size() <= b.terms_.size() ? a : b;
    const auto& large = a.terms_.size() <= b.terms_.size() ? b : a;
    for (const auto& [ea, ca] : small.terms_) {
        for (const auto& [eb, cb] : large.terms_) {
            Exponents e(nv);
            for (std::size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
            Rational c = ca * cb;
            auto [it, fresh] = out.emplace(std::move(e), c);
            if (!fresh) it->second += c;
        }
    }
    return MultiPoly::from_terms(std::move(merged), std::move(out));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return MultiPoly();
    MultiPoly p = *this;
    for (auto& [e, coef] : p.terms_) coef *= c;
    return p;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

std::optional<MultiPoly> MultiPoly::try_divide(const MultiPoly& p0, const MultiPoly& q0) {
    if (q0.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (p0.is_zero()) return MultiPoly();
    if (q0.is_constant()) return p0.scaled(q0.constant_value().inverse());
    MultiPoly p = p0, q = q0;
    auto merged = align_universe(p, q);
    const std::size_t nv = merged.size();
    // shift both to genuine polynomials (min exponent 0 per variable)
    Exponents pmin(nv, 0), qmin(nv, 0);
    auto min_exps = [&](const MultiPoly& f, Exponents& m) {
        bool first = true;
        for (const auto& [e, c] : f.terms_) {
            for (std::size_t i = 0; i < nv; ++i)
                m[i] = first ? e[i] : std::min(m[i], e[i]);
            first = false;
        }
    };
    min_exps(p, pmin);
    min_exps(q, qmin);
    auto shift_by = [&](MultiPoly& f, const Exponents& m, int dir) {
        TermMap nt;
        for (const auto& [e, c] : f.terms_) {
            Exponents ne(nv);
            for (std::size_t i = 0; i < nv; ++i) ne[i] = e[i] + dir * m[i];
            nt.emplace(std::move(ne), c);
        }
        f.terms_ = std::move(nt);
    };
    shift_by(p, pmin, -1);
    shift_by(q, qmin, -1);
    // classic leading-term division (single divisor, graded lex)
    TermMap quot;
    const auto& qlead = *q.terms_.rbegin();
    while (!p.terms_.empty()) {
        const auto& plead = *p.terms_.rbegin();
        Exponents m(nv);
        for (std::size_t i = 0; i < nv; ++i) {
            m[i] = plead.first[i] - qlead.first[i];
            if (m[i] < 0) return std::nullopt;
        }
        Rational c = plead.second / qlead.second;
        // p -= c * x^m * q
        for (const auto& [e, qc] : q.terms_) {
            Exponents ne(nv);
            for (std::size_t i = 0; i < nv; ++i) ne[i] = e[i] + m[i];
            Rational delta = -(c * qc);
            auto [it, fresh] = p.terms_.emplace(std::move(ne), delta);
            if (!fresh) {
                it->second += delta;
                if (it->second.is_zero()) p.terms_.erase(it);
            } else if (it->second.is_zero()) {
                p.terms_.erase(it);
            }
        }
        quot.emplace(std::move(m), c);
    }
    // restore the Laurent shift: quotient exponents += pmin - qmin
    TermMap shifted;
    for (const auto& [e, c] : quot) {
        Exponents ne(nv);
        for (std::size_t i = 0; i < nv; ++i) ne[i] = e[i] + pmin[i] - qmin[i];
        shifted.emplace(std::move(ne), c);
    }
    return from_terms(merged, std::move(shifted));
}

Rational MultiPoly::content() const {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        num_gcd = gcd(num_gcd, c.numerator());
        den_lcm = lcm(den_lcm, c.denominator());
    }
    if (num_gcd == 0) num_gcd = 1;
    return Rational(num_gcd, den_lcm);
}

MultiPoly MultiPoly::primitive_part() const {
    if (is_zero()) return *this;
    Rational c = content();
    if (leading_coeff().sign() < 0) c = -c;
    return scaled(c.inverse());
}

int32_t MultiPoly::degree_in(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return 0;
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    int32_t d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        d = first ? e[idx] : std::max(d, e[idx]);
        first = false;
    }
    return d;
}

int32_t MultiPoly::min_exponent_in(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return 0;
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    int32_t d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        d = first ? e[idx] : std::min(d, e[idx]);
        first = false;
    }
    return d;
}

std::map<int32_t, MultiPoly> MultiPoly::coefficients_in(const std::string& var) const {
    std::map<int32_t, MultiPoly> out;
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) {
        if (!is_zero()) out.emplace(0, *this);
        return out;
    }
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    std::map<int32_t, TermMap> buckets;
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        int32_t k = ne[idx];
        ne[idx] = 0;
        buckets[k].emplace(std::move(ne), c);
    }
    for (auto& [k, tm] : buckets)
        out.emplace(k, from_terms(vars_, std::move(tm)));
    return out;
}

MultiPoly MultiPoly::coefficient_of(const std::string& var, int32_t power) const {
    auto parts = coefficients_in(var);
    auto it = parts.find(power);
    return it == parts.end() ? MultiPoly() : it->second;
}

MultiPoly MultiPoly::shifted(const std::vector<std::pair<std::string, int32_t>>& pows) const {
    MultiPoly m;
    m.vars_.reserve(pows.size());
    std::vector<std::pair<std::string, int32_t>> sorted = pows;
    std::sort(sorted.begin(), sorted.end());
    Exponents e;
    for (const auto& [name, exp] : sorted) {
        if (exp == 0) continue;
        if (!m.vars_.empty() && m.vars_.back() == name) { e.back() += exp; continue; }
        m.vars_.push_back(name);
        e.push_back(exp);
    }
    m.terms_.emplace(std::move(e), Rational(1));
    m.normalize();
    return *this * m;
}

bool MultiPoly::depends_on(const std::string& var) const {
    return std::binary_search(vars_.begin(), vars_.end(), var);
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& bindings) const {
    std::vector<Rational> vals;
    vals.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = bindings.find(v);
        if (it == bindings.end()) fail(ErrorCode::BadInput, "unbound variable " + v);
        vals.push_back(it->second);
    }
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (vals[i].is_zero() && e[i] < 0)
                fail(ErrorCode::DivisionByZero, "negative power of zero for " + vars_[i]);
            term *= vals[i].pow(e[i]);
        }
        total += term;
    }
    return total;
}

std::string MultiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c.sign() >= 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational ac = c.abs();
        bool any_var = std::any_of(e.begin(), e.end(), [](int32_t x) { return x != 0; });
        if (!any_var || !ac.is_one()) os << ac.str();
        bool star = !any_var || !ac.is_one();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (star) os << "*";
            os << vars_[i];
            if (e[i] != 1) os << "^" << e[i];
            star = true;
        }
    }
    return os.str();
}

} // namespace qlrec
