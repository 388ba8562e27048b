#include "qstraighten/uqaction.hpp"

#include <algorithm>

namespace qst {

namespace {

int side_index(const Generator& g, Side side) { return side == Side::Right ? g.col : g.row; }

int count_index(const Monomial& m, std::size_t from, std::size_t to, int idx, Side side) {
    int c = 0;
    for (std::size_t p = from; p < to; ++p)
        if (side_index(m[p], side) == idx) ++c;
    return c;
}

Generator shifted(const Generator& g, Side side, int delta) {
    return side == Side::Right ? Generator(g.row, g.col + delta)
                               : Generator(g.row + delta, g.col);
}

}  // namespace

NCPoly act_qeps(int i, const NCPoly& p, Side side) {
    if (i < 1) throw std::invalid_argument("act_qeps: bad index");
    NCPoly out;
    for (const auto& [m, c] : p.terms()) {
        int w = count_index(m, 0, m.size(), i, side);
        out.add_term(m, c * RationalQ::q_power(w));
    }
    return normalize(out);
}

NCPoly act_e(int i, const NCPoly& p, Side side) {
    if (i < 1) throw std::invalid_argument("act_e: bad color");
    NCPoly out;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t pos = 0; pos < m.size(); ++pos) {
            if (side_index(m[pos], side) != i + 1) continue;
            // prefix picks up q^{-h_i}
            int h = count_index(m, 0, pos, i, side) - count_index(m, 0, pos, i + 1, side);
            Monomial img = m;
            img[pos] = shifted(m[pos], side, -1);
            out.add_term(img, c * RationalQ::q_power(-h));
        }
    }
    return normalize(out);
}

NCPoly act_f(int i, const NCPoly& p, Side side) {
    if (i < 1) throw std::invalid_argument("act_f: bad color");
    NCPoly out;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t pos = 0; pos < m.size(); ++pos) {
            if (side_index(m[pos], side) != i) continue;
            // suffix picks up q^{h_i}
            int h = count_index(m, pos + 1, m.size(), i, side) -
                    count_index(m, pos + 1, m.size(), i + 1, side);
            Monomial img = m;
            img[pos] = shifted(m[pos], side, +1);
            out.add_term(img, c * RationalQ::q_power(h));
        }
    }
    return normalize(out);
}

bool check_module_relations(const std::vector<NCPoly>& span, int i, int j, Side side,
                            std::string* diag) {
    for (const NCPoly& v : span) {
        NCPoly lhs = act_e(i, act_f(j, v, side), side) - act_f(j, act_e(i, v, side), side);
        NCPoly rhs;
        if (i == j) {
            NCPoly nv = normalize(v);
            for (const auto& [m, c] : nv.terms()) {
                int d = count_index(m, 0, m.size(), i, side) -
                        count_index(m, 0, m.size(), i + 1, side);
                rhs.add_term(m, c * q_int_signed(d));
            }
        }
        if (lhs != rhs) {
            if (diag)
                *diag = "commutation fails on " + normalize(v).str() + ": got " + lhs.str() +
                        ", expected " + rhs.str();
            return false;
        }
    }
    return true;
}

bool check_bimodule_commutation(const NCPoly& p, int i, int j, std::string* diag) {
    using Op = NCPoly (*)(int, const NCPoly&, Side);
    static constexpr Op ops[] = {&act_qeps, &act_e, &act_f};
    static constexpr const char* names[] = {"qeps", "e", "f"};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            NCPoly lr = ops[a](i, ops[b](j, p, Side::Right), Side::Left);
            NCPoly rl = ops[b](j, ops[a](i, p, Side::Left), Side::Right);
            if (normalize(lr) != normalize(rl)) {
                if (diag)
                    *diag = std::string(names[a]) + "^dagger_" + std::to_string(i) + " and " +
                            names[b] + "_" + std::to_string(j) + " do not commute on " + p.str();
                return false;
            }
        }
    return true;
}

std::optional<std::vector<int>> column_module_action(const std::vector<int>& c, int i, char op) {
    for (std::size_t k = 1; k < c.size(); ++k)
        if (c[k] <= c[k - 1]) throw std::invalid_argument("column must strictly increase");
    bool has_i = std::find(c.begin(), c.end(), i) != c.end();
    bool has_i1 = std::find(c.begin(), c.end(), i + 1) != c.end();
    int from, to;
    if (op == 'e') {
        if (!has_i1 || has_i) return std::nullopt;
        from = i + 1, to = i;
    } else if (op == 'f') {
        if (!has_i || has_i1) return std::nullopt;
        from = i, to = i + 1;
    } else {
        throw std::invalid_argument("column_module_action: op must be 'e' or 'f'");
    }
    std::vector<int> d = c;
    *std::find(d.begin(), d.end(), from) = to;
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace qst
