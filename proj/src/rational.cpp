#include "qlrec/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace qlrec {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::UnsupportedLattice: return "UnsupportedLattice";
        case ErrorCode::DegenerateSigma: return "DegenerateSigma";
        case ErrorCode::PoleOnGrid: return "PoleOnGrid";
        case ErrorCode::DenominatorZero: return "DenominatorZero";
        case ErrorCode::BoundaryViolated: return "BoundaryViolated";
        case ErrorCode::NoRelation: return "NoRelation";
        case ErrorCode::DegenerateSpec: return "DegenerateSpec";
        case ErrorCode::AllSamplesDegenerate: return "AllSamplesDegenerate";
        case ErrorCode::IndexMismatch: return "IndexMismatch";
        case ErrorCode::DegenerateTau: return "DegenerateTau";
        case ErrorCode::SingularSystem: return "SingularSystem";
        case ErrorCode::RegistrationFailure: return "RegistrationFailure";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "UnknownError";
}

Rational::Rational(long num, long den) {
    if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
    v_ = mpq_class(num);
    v_ /= mpq_class(den);
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

std::optional<Rational> Rational::parse(std::string_view s) {
    auto is_int = [](std::string_view p) {
        if (!p.empty() && (p[0] == '-' || p[0] == '+')) p.remove_prefix(1);
        if (p.empty()) return false;
        for (char ch : p)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) return std::nullopt;
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorCode::DivisionByZero, "rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), base.v_.get_num().get_mpz_t(), n);
    mpz_pow_ui(pd.get_mpz_t(), base.v_.get_den().get_mpz_t(), n);
    return Rational(pn, pd);
}

std::string Rational::str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
}

std::string Rational::decimal(int significant_digits) const {
    if (is_zero()) return "0";
    mpz_class n = ::abs(v_.get_num()), d = v_.get_den();
    // integer digit count of n/d
    mpz_class ip = n / d;
    std::string sign = sgn(v_) < 0 ? "-" : "";
    std::string ipstr = ip.get_str();
    int int_digits = ip == 0 ? 0 : static_cast<int>(ipstr.size());
    int frac_digits = std::max(0, significant_digits - int_digits);
    if (ip == 0) {
        // count leading zeros after the point to keep significant digits
        mpz_class scaled = n;
        int zeros = 0;
        while (scaled * 10 / d == 0 && zeros < 10000) { scaled *= 10; ++zeros; }
        frac_digits = significant_digits + zeros;
    }
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(frac_digits));
    mpz_class scaled = (n * p10) / d;
    std::string digits = scaled.get_str();
    if (static_cast<int>(digits.size()) <= frac_digits)
        digits.insert(0, frac_digits + 1 - digits.size(), '0');
    std::string out = sign + digits.substr(0, digits.size() - frac_digits);
    std::string frac = digits.substr(digits.size() - frac_digits);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.raw(); }

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

} // namespace qlrec
