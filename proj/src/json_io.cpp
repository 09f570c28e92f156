#include "qlrec/json_io.hpp"

namespace qlrec {

ordered_json to_json(const MultiPoly& p) {
    ordered_json j;
    j["vars"] = p.vars();
    ordered_json terms = ordered_json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        ordered_json e = ordered_json::array();
        for (int32_t x : it->first) e.push_back(x);
        terms.push_back(ordered_json::array({e, it->second.str()}));
    }
    j["terms"] = std::move(terms);
    return j;
}

MultiPoly multipoly_from_json(const ordered_json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    MultiPoly::TermMap terms;
    for (const auto& te : j.at("terms")) {
        Exponents e;
        for (const auto& x : te.at(0)) e.push_back(x.get<int32_t>());
        auto c = Rational::parse(te.at(1).get<std::string>());
        if (!c) fail(ErrorCode::BadInput, "bad rational in polynomial JSON");
        terms.emplace(std::move(e), *c);
    }
    return MultiPoly::from_terms(std::move(vars), std::move(terms));
}

ordered_json to_json(const RatFunc& f) {
    ordered_json j;
    j["num"] = to_json(f.num());
    j["den"] = to_json(f.den());
    return j;
}

RatFunc ratfunc_from_json(const ordered_json& j) {
    return RatFunc(multipoly_from_json(j.at("num")), multipoly_from_json(j.at("den")));
}

ordered_json to_json(const PolyValue& p) {
    ordered_json j;
    j["var"] = p.main_var();
    ordered_json cs = ordered_json::array();
    for (int i = 0; i <= p.degree(); ++i) cs.push_back(to_json(p.coeff(static_cast<std::size_t>(i))));
    j["coeffs"] = std::move(cs);
    return j;
}

} // namespace qlrec
