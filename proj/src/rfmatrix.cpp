#include "qlrec/rfmatrix.hpp"

#include <algorithm>

namespace qlrec {

namespace {

// lcm-like accumulator without gcd: keeps l when d | l, replaces when l | d,
// otherwise multiplies.
MultiPoly lcm_ish(const MultiPoly& l, const MultiPoly& d) {
    if (MultiPoly::try_divide(l, d)) return l;
    if (MultiPoly::try_divide(d, l)) return d;
    return l * d;
}

} // namespace

std::vector<std::vector<MultiPoly>> nullspace(const RFMatrix& m) {
    const std::size_t R = m.rows, C = m.cols;
    // clear denominators per row
    std::vector<std::vector<MultiPoly>> a(R, std::vector<MultiPoly>(C));
    for (std::size_t i = 0; i < R; ++i) {
        MultiPoly mult = MultiPoly::constant(1);
        for (std::size_t j = 0; j < C; ++j)
            if (!m.at(i, j).den().is_one()) mult = lcm_ish(mult, m.at(i, j).den());
        for (std::size_t j = 0; j < C; ++j) {
            const RatFunc& e = m.at(i, j);
            if (e.is_zero()) continue;
            auto q = MultiPoly::try_divide(mult, e.den());
            a[i][j] = e.num() * *q;
        }
        // primitive rows keep Bareiss entries small
        mpz_class ng = 0, dl = 1;
        bool any = false;
        for (std::size_t j = 0; j < C; ++j)
            if (!a[i][j].is_zero()) {
                any = true;
                Rational rc = a[i][j].content();
                ng = gcd(ng, rc.numerator());
                dl = lcm(dl, rc.denominator());
            }
        if (any) {
            Rational rowc{ng == 0 ? mpz_class(1) : ng, dl};
            if (!rowc.is_one())
                for (std::size_t j = 0; j < C; ++j) a[i][j] = a[i][j].scaled(rowc.inverse());
        }
    }

    // fraction-free elimination with full pivoting by smallest term count
    std::vector<std::size_t> pivot_col;
    std::vector<std::size_t> row_of; // row index of k-th pivot
    MultiPoly prev_pivot = MultiPoly::constant(1);
    std::vector<bool> row_used(R, false), col_used(C, false);
    for (;;) {
        std::size_t bi = R, bj = C;
        std::size_t best = 0;
        for (std::size_t i = 0; i < R; ++i) {
            if (row_used[i]) continue;
            for (std::size_t j = 0; j < C; ++j) {
                if (col_used[j] || a[i][j].is_zero()) continue;
                std::size_t sz = a[i][j].term_count();
                if (bi == R || sz < best) { bi = i; bj = j; best = sz; }
            }
        }
        if (bi == R) break;
        row_used[bi] = true;
        col_used[bj] = true;
        pivot_col.push_back(bj);
        row_of.push_back(bi);
        const MultiPoly pivot = a[bi][bj];
        for (std::size_t i = 0; i < R; ++i) {
            if (row_used[i]) continue;
            const bool zero_in_pivot_col = a[i][bj].is_zero();
            for (std::size_t j = 0; j < C; ++j) {
                if (col_used[j]) continue;
                MultiPoly v = zero_in_pivot_col ? pivot * a[i][j]
                                                : pivot * a[i][j] - a[i][bj] * a[bi][j];
                if (!v.is_zero()) {
                    auto qn = MultiPoly::try_divide(v, prev_pivot);
                    if (!qn) fail(ErrorCode::BadInput, "fraction-free elimination lost exactness");
                    v = std::move(*qn);
                }
                a[i][j] = std::move(v);
            }
            a[i][bj] = MultiPoly();
        }
        prev_pivot = pivot;
    }

    const std::size_t rank = pivot_col.size();
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < C; ++j)
        if (!col_used[j]) free_cols.push_back(j);
    std::vector<std::vector<MultiPoly>> basis;
    basis.reserve(free_cols.size());
    for (std::size_t f : free_cols) {
        // back-substitute over the rational function field
        std::vector<RatFunc> v(C);
        v[f] = RatFunc(Rational(1));
        for (std::size_t k = rank; k-- > 0;) {
            std::size_t i = row_of[k], p = pivot_col[k];
            RatFunc s;
            for (std::size_t j = 0; j < C; ++j) {
                if (j == p || v[j].is_zero() || a[i][j].is_zero()) continue;
                s += RatFunc(a[i][j]) * v[j];
            }
            v[p] = -(s / RatFunc(a[i][p]));
        }
        // denominator-clear and make primitive
        MultiPoly mult = MultiPoly::constant(1);
        for (const auto& e : v)
            if (!e.den().is_one()) mult = lcm_ish(mult, e.den());
        std::vector<MultiPoly> w(C);
        mpz_class ng = 0, dl = 1;
        for (std::size_t j = 0; j < C; ++j) {
            if (v[j].is_zero()) continue;
            auto q = MultiPoly::try_divide(mult, v[j].den());
            w[j] = v[j].num() * *q;
            Rational rc = w[j].content();
            ng = gcd(ng, rc.numerator());
            dl = lcm(dl, rc.denominator());
        }
        Rational c{ng == 0 ? mpz_class(1) : ng, dl};
        for (std::size_t j = 0; j < C; ++j) {
            if (w[j].is_zero()) continue;
            w[j] = w[j].scaled(c.inverse());
        }
        // clear common Laurent monomial content across the vector
        std::map<std::string, int32_t> mins;
        for (const auto& e : w) {
            if (e.is_zero()) continue;
            for (const auto& v : e.vars()) {
                int32_t mn = e.min_exponent_in(v);
                auto [it, fresh] = mins.emplace(v, mn);
                if (!fresh) it->second = std::min(it->second, mn);
            }
        }
        std::vector<std::pair<std::string, int32_t>> shift;
        for (const auto& [v, mn] : mins) {
            // a variable absent from some nonzero entry has effective min 0 there
            bool everywhere = true;
            for (const auto& e : w)
                if (!e.is_zero() && !e.depends_on(v)) { everywhere = false; break; }
            int32_t m = everywhere ? mn : std::min(mn, 0);
            if (m != 0) shift.emplace_back(v, -m);
        }
        if (!shift.empty())
            for (auto& e : w)
                if (!e.is_zero()) e = e.shifted(shift);
        for (std::size_t j = 0; j < C; ++j) {
            if (w[j].is_zero()) continue;
            if (w[j].leading_coeff().sign() < 0)
                for (auto& e : w) e = -e;
            break;
        }
        basis.push_back(std::move(w));
    }
    return basis;
}

} // namespace qlrec
