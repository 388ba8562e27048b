#include "qstraighten/qmatrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qst {

Generator::Generator(int r, int c) {
    if (r < 1 || r > 255 || c < 1 || c > 255)
        throw std::invalid_argument("generator index out of range");
    row = static_cast<std::uint8_t>(r);
    col = static_cast<std::uint8_t>(c);
}

std::vector<int> row_weight(const Monomial& m) {
    std::vector<int> w;
    for (const auto& g : m) w.push_back(g.row);
    std::sort(w.begin(), w.end());
    return w;
}

std::vector<int> col_weight(const Monomial& m) {
    std::vector<int> w;
    for (const auto& g : m) w.push_back(g.col);
    std::sort(w.begin(), w.end());
    return w;
}

NCPoly::NCPoly(int c) : NCPoly(RationalQ(c)) {}

NCPoly::NCPoly(const RationalQ& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

NCPoly::NCPoly(Monomial m) { terms_.emplace(std::move(m), RationalQ(1)); }

NCPoly NCPoly::generator(int row, int col) { return NCPoly(Monomial{Generator(row, col)}); }

void NCPoly::add_term(const Monomial& m, const RationalQ& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
    NCPoly r = a;
    r += b;
    return r;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) {
    NCPoly r = a;
    r -= b;
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

NCPoly operator*(const RationalQ& c, const NCPoly& p) {
    NCPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, x] : p.terms()) r.add_term(m, c * x);
    return r;
}

std::string monomial_str(const Monomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += "*";
        s += "t[" + std::to_string(m[i].row) + "," + std::to_string(m[i].col) + "]";
    }
    return s;
}

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool neg = false;
        if (cs.front() == '-' && cs.find(' ') == std::string::npos) {
            neg = true;
            cs.erase(0, 1);
        }
        if (cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos)
            cs = "(" + cs + ")";
        std::string term = m.empty()          ? cs
                           : cs == "1"        ? monomial_str(m)
                                              : cs + "*" + monomial_str(m);
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        s += term;
    }
    return s;
}

NCPoly normalize(const NCPoly& p) {
    static const RationalQ q_minus_qinv = RationalQ::q_power(1) - RationalQ::q_power(-1);
    NCPoly out;
    std::vector<std::pair<Monomial, RationalQ>> work(p.terms().begin(), p.terms().end());
    std::size_t steps = 0;
    while (!work.empty()) {
        auto [m, c] = std::move(work.back());
        work.pop_back();
        if (++steps > 200000000) throw std::runtime_error("normalize: step budget exceeded");
        std::size_t pos = m.size();
        for (std::size_t i = 0; i + 1 < m.size(); ++i)
            if (m[i + 1] < m[i]) {
                pos = i;
                break;
            }
        if (pos == m.size()) {
            out.add_term(m, c);
            continue;
        }
        Generator a = m[pos], b = m[pos + 1];
        std::swap(m[pos], m[pos + 1]);
        if (a.row == b.row || a.col == b.col) {
            // t_il t_ik -> q t_ik t_il and t_jk t_ik -> q t_ik t_jk
            work.emplace_back(std::move(m), c * RationalQ::q_power(1));
        } else if (a.col < b.col) {
            // antidiagonal pair commutes
            work.emplace_back(std::move(m), c);
        } else {
            // diagonal: t_jl t_ik -> t_ik t_jl + (q - q^-1) t_il t_jk
            Monomial cross = m;
            cross[pos] = Generator(b.row, a.col);
            cross[pos + 1] = Generator(a.row, b.col);
            work.emplace_back(std::move(m), c);
            work.emplace_back(std::move(cross), c * q_minus_qinv);
        }
    }
    return out;
}

NCPoly mul(const NCPoly& a, const NCPoly& b) {
    NCPoly prod;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            prod.add_term(m, ca * cb);
        }
    return normalize(prod);
}

int permutation_length(const std::vector<int>& w) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

NCPoly qminor(const std::vector<int>& I, const std::vector<int>& J) {
    if (I.size() != J.size()) throw std::invalid_argument("qminor: size mismatch");
    auto increasing = [](const std::vector<int>& v) {
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] <= v[i - 1]) return false;
        return true;
    };
    if (!increasing(I) || !increasing(J))
        throw std::invalid_argument("qminor: index lists must be strictly increasing");
    std::size_t k = I.size();
    std::vector<int> w(k);
    std::iota(w.begin(), w.end(), 0);
    NCPoly sum;
    do {
        int len = permutation_length(w);
        Monomial m;
        m.reserve(k);
        for (std::size_t p = 0; p < k; ++p)
            m.emplace_back(I[p], J[static_cast<std::size_t>(w[p])]);
        RationalQ coeff = RationalQ::q_power(-len);
        if (len % 2) coeff = -coeff;
        sum.add_term(m, coeff);
    } while (std::next_permutation(w.begin(), w.end()));
    return normalize(sum);
}

NCPoly qdet(int n) {
    if (n < 1) throw std::invalid_argument("qdet: n must be positive");
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 1);
    return qminor(idx, idx);
}

std::map<Monomial, Rational> eval_at_one(const NCPoly& p) {
    auto poly_at_one = [](const QPoly& f) {
        Rational s = 0;
        for (int d = 0; d <= f.degree(); ++d) s += f.coeff(static_cast<std::size_t>(d));
        return s;
    };
    std::map<Monomial, Rational> out;
    for (const auto& [m, c] : p.terms()) {
        Rational den = poly_at_one(c.den());
        if (den == 0) throw std::domain_error("eval_at_one: pole at q=1");
        Rational v = poly_at_one(c.num()) / den;
        if (v != 0) out[m] = v;
    }
    return out;
}

std::vector<Monomial> monomials_with_weights(const std::vector<int>& rows,
                                             const std::vector<int>& cols, int n) {
    if (rows.size() != cols.size())
        throw std::invalid_argument("monomials_with_weights: degree mismatch");
    std::vector<int> rcount(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> ccount(static_cast<std::size_t>(n) + 1, 0);
    for (int r : rows) {
        if (r < 1 || r > n) throw std::invalid_argument("row index out of range");
        ++rcount[static_cast<std::size_t>(r)];
    }
    for (int c : cols) {
        if (c < 1 || c > n) throw std::invalid_argument("column index out of range");
        ++ccount[static_cast<std::size_t>(c)];
    }
    std::vector<Monomial> res;
    Monomial cur;
    int remaining = static_cast<int>(rows.size());
    // generators visited in sorted order, so emitted words are normal forms
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (remaining == 0) {
            res.push_back(cur);
            return;
        }
        if (r > n) return;
        int nr = c == n ? r + 1 : r;
        int nc = c == n ? 1 : c + 1;
        int cap = std::min(rcount[static_cast<std::size_t>(r)], ccount[static_cast<std::size_t>(c)]);
        for (int mult = 0; mult <= cap; ++mult) {
            if (mult > 0) {
                rcount[static_cast<std::size_t>(r)] -= 1;
                ccount[static_cast<std::size_t>(c)] -= 1;
                remaining -= 1;
                cur.emplace_back(r, c);
            }
            self(self, nr, nc);
        }
        for (int mult = 0; mult < cap; ++mult) {
            rcount[static_cast<std::size_t>(r)] += 1;
            ccount[static_cast<std::size_t>(c)] += 1;
            remaining += 1;
            cur.pop_back();
        }
    };
    rec(rec, 1, 1);
    return res;
}

}  // namespace qst
