#include "qstraighten/straighten.hpp"

#include <algorithm>
#include <stdexcept>

namespace qst {

namespace {

// ------------------------- exact dense linear algebra over RationalQ -------

using Matrix = std::vector<std::vector<RationalQ>>;

Matrix invert(Matrix a) {
    std::size_t d = a.size();
    Matrix inv(d, std::vector<RationalQ>(d, RationalQ(0)));
    for (std::size_t i = 0; i < d; ++i) inv[i][i] = RationalQ(1);
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && a[piv][col].is_zero()) ++piv;
        if (piv == d) throw std::domain_error("singular expansion matrix (basis bug)");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        RationalQ s = a[col][col].inv();
        for (std::size_t j = 0; j < d; ++j) {
            a[col][j] *= s;
            inv[col][j] *= s;
        }
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            RationalQ f = a[r][col];
            for (std::size_t j = 0; j < d; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::vector<RationalQ> mat_vec(const Matrix& m, const std::vector<RationalQ>& v) {
    std::vector<RationalQ> out(m.size(), RationalQ(0));
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c)
            if (!m[r][c].is_zero() && !v[c].is_zero()) out[r] += m[r][c] * v[c];
    return out;
}

}  // namespace

int matrix_rank(Matrix m) {
    std::size_t rank = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        RationalQ s = m[rank][col].inv();
        for (std::size_t j = col; j < cols; ++j) m[rank][j] *= s;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            RationalQ f = m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

// ------------------------------------------------------------- products ----

Bitabloid::Bitabloid(Tabloid l, Tabloid r) : left(std::move(l)), right(std::move(r)) {
    if (left.shape() != right.shape())
        throw std::invalid_argument("bitabloid: shapes must match column by column");
}

Bitableau::Bitableau(Tableau l, Tableau r) : left(std::move(l)), right(std::move(r)) {
    if (left.shape() != right.shape())
        throw std::invalid_argument("bitableau: shapes must be equal");
}

NCPoly bitabloid_to_ncpoly(const Bitabloid& b) {
    NCPoly prod(1);
    const auto& lc = b.left.columns();
    const auto& rc = b.right.columns();
    for (std::size_t i = 0; i < lc.size(); ++i) prod = mul(prod, qminor(lc[i], rc[i]));
    return prod;
}

NCPoly bitableau_to_ncpoly(const Bitableau& b) {
    return bitabloid_to_ncpoly(
        Bitabloid(Tabloid::from_tableau(b.left), Tabloid::from_tableau(b.right)));
}

NCPoly quantum_tableau(const Tableau& tau) {
    return bitabloid_to_ncpoly(Bitabloid(Tabloid::from_tableau(yamanouchi_tableau(tau.shape())),
                                         Tabloid::from_tableau(tau)));
}

NCPoly quantum_tabloid(const Tabloid& delta) {
    NCPoly prod(1);
    for (const auto& col : delta.columns()) {
        std::vector<int> rows(col.size());
        for (std::size_t v = 0; v < col.size(); ++v) rows[v] = static_cast<int>(v) + 1;
        prod = mul(prod, qminor(rows, col));
    }
    return prod;
}

// -------------------------------------------------------------- Expander ----

struct Expander::Component {
    std::vector<Bitableau> bits;
    std::vector<Monomial> monos;
    std::map<Monomial, std::size_t> mono_index;
    Matrix inverse;
};

Expander::Expander(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("Expander: n must be positive");
}

std::shared_ptr<const Expander::Component> Expander::component(const std::vector<int>& rows,
                                                               const std::vector<int>& cols) {
    auto key = std::make_pair(rows, cols);
    {
        std::lock_guard lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    auto comp = std::make_shared<Component>();
    comp->monos = monomials_with_weights(rows, cols, n_);
    for (std::size_t i = 0; i < comp->monos.size(); ++i) comp->mono_index[comp->monos[i]] = i;
    int k = static_cast<int>(rows.size());
    for (const auto& shape : partitions_of(k, n_))
        for (const auto& tl : semistandard_tableaux(shape, n_, &rows))
            for (const auto& tr : semistandard_tableaux(shape, n_, &cols))
                comp->bits.emplace_back(tl, tr);
    if (comp->bits.size() != comp->monos.size())
        throw std::logic_error("graded component: bitableau count differs from dimension");
    std::size_t d = comp->bits.size();
    Matrix a(d, std::vector<RationalQ>(d, RationalQ(0)));
    for (std::size_t j = 0; j < d; ++j) {
        NCPoly e = bitableau_to_ncpoly(comp->bits[j]);
        for (const auto& [m, c] : e.terms()) {
            auto it = comp->mono_index.find(m);
            if (it == comp->mono_index.end())
                throw std::logic_error("graded component: expansion leaves the component");
            a[it->second][j] = c;
        }
    }
    comp->inverse = invert(std::move(a));
    std::lock_guard lock(mutex_);
    return cache_.try_emplace(std::move(key), std::move(comp)).first->second;
}

BitabExpansion Expander::expand(const NCPoly& p) {
    NCPoly nf = normalize(p);
    if (nf.is_zero()) return {};
    const Monomial& first = nf.terms().begin()->first;
    std::vector<int> rows = row_weight(first), cols = col_weight(first);
    for (const auto& [m, c] : nf.terms()) {
        if (row_weight(m) != rows || col_weight(m) != cols)
            throw std::invalid_argument("expand: element is not homogeneous in both weights");
    }
    if (!rows.empty() && (rows.back() > n_ || cols.back() > n_))
        throw std::invalid_argument("expand: indices exceed the alphabet");
    auto comp = component(rows, cols);
    std::vector<RationalQ> b(comp->monos.size(), RationalQ(0));
    for (const auto& [m, c] : nf.terms()) b[comp->mono_index.at(m)] = c;
    std::vector<RationalQ> x = mat_vec(comp->inverse, b);
    BitabExpansion out;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (!x[j].is_zero()) out.terms.emplace(comp->bits[j], std::move(x[j]));
    return out;
}

std::vector<Bitableau> Expander::component_labels(const std::vector<int>& rows,
                                                  const std::vector<int>& cols) const {
    std::vector<Bitableau> bits;
    for (const auto& shape : partitions_of(static_cast<int>(rows.size()), n_))
        for (const auto& tl : semistandard_tableaux(shape, n_, &rows))
            for (const auto& tr : semistandard_tableaux(shape, n_, &cols))
                bits.emplace_back(tl, tr);
    return bits;
}

std::pair<int, int> Expander::component_size(const std::vector<int>& rows,
                                             const std::vector<int>& cols) {
    auto comp = component(rows, cols);
    return {static_cast<int>(comp->bits.size()), static_cast<int>(comp->monos.size())};
}

BitabExpansion expand_in_bitableaux(const NCPoly& p, int n) {
    Expander ex(n);
    return ex.expand(p);
}

// -------------------------------------------------- flag straightening ----

namespace {

// q-alternating columns: kill repeated entries, sort the rest picking up
// (-q)^{-inversions}.
std::optional<std::pair<Tabloid, RationalQ>> normalize_columns(
    std::vector<std::vector<int>> cols, RationalQ coeff) {
    for (auto& col : cols) {
        int inv = 0;
        for (std::size_t i = 0; i < col.size(); ++i)
            for (std::size_t j = i + 1; j < col.size(); ++j) {
                if (col[i] == col[j]) return std::nullopt;
                if (col[i] > col[j]) ++inv;
            }
        if (inv) {
            std::sort(col.begin(), col.end());
            coeff *= RationalQ::q_power(-inv);
            if (inv % 2) coeff = -coeff;
        }
    }
    return std::make_pair(Tabloid(std::move(cols)), std::move(coeff));
}

// All splittings of {0..l-1} into a sorted block of size k and its sorted
// complement; fn receives (selected, rest, inversions of the concatenation).
template <typename Fn>
void for_each_shuffle(int l, int k, Fn&& fn) {
    std::vector<int> sel(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int next, int depth) -> void {
        if (depth == k) {
            std::vector<int> rest;
            std::vector<char> used(static_cast<std::size_t>(l), 0);
            for (int s : sel) used[static_cast<std::size_t>(s)] = 1;
            for (int v = 0; v < l; ++v)
                if (!used[static_cast<std::size_t>(v)]) rest.push_back(v);
            int inv = 0;
            for (int s : sel)
                for (int r : rest)
                    if (s > r) ++inv;
            fn(sel, rest, inv);
            return;
        }
        for (int v = next; v <= l - (k - depth); ++v) {
            sel[static_cast<std::size_t>(depth)] = v;
            self(self, v + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
}

void merge_term(std::map<Tabloid, RationalQ>& acc, std::pair<Tabloid, RationalQ> term) {
    auto [it, fresh] = acc.try_emplace(std::move(term.first), term.second);
    if (!fresh) {
        it->second += term.second;
        if (it->second.is_zero()) acc.erase(it);
    }
}

}  // namespace

FlagExpansion straighten_flag(const Tabloid& delta, int n) {
    for (const auto& col : delta.columns())
        if (!col.empty() && col.back() > n)
            throw std::invalid_argument("straighten_flag: entries exceed n");

    std::map<Tabloid, RationalQ> pending;
    pending.emplace(delta, RationalQ(1));
    std::map<Tableau, RationalQ> done;
    std::size_t steps = 0;

    while (!pending.empty()) {
        if (++steps > 2000000) throw std::runtime_error("straighten_flag: step budget exceeded");
        auto it = pending.begin();
        Tabloid t = it->first;
        RationalQ c = it->second;
        pending.erase(it);
        const auto& cols = t.columns();

        // column sizes must weakly decrease; fix the leftmost ascent by
        // the Sylvester-type shuffle exchange
        std::size_t asc = cols.size();
        for (std::size_t p = 0; p + 1 < cols.size(); ++p)
            if (cols[p].size() < cols[p + 1].size()) {
                asc = p;
                break;
            }
        if (asc != cols.size()) {
            const auto& a = cols[asc];
            const auto& b = cols[asc + 1];
            int k = static_cast<int>(a.size()), l = static_cast<int>(b.size());
            for_each_shuffle(l, k, [&](const std::vector<int>& sel, const std::vector<int>& rest,
                                       int inv) {
                std::vector<std::vector<int>> next(cols);
                next[asc] = a;
                for (int r : rest) next[asc].push_back(b[static_cast<std::size_t>(r)]);
                next[asc + 1].clear();
                for (int s : sel) next[asc + 1].push_back(b[static_cast<std::size_t>(s)]);
                RationalQ coeff = c * RationalQ::q_power(inv);
                if (inv % 2) coeff = -coeff;
                if (auto term = normalize_columns(std::move(next), std::move(coeff)))
                    merge_term(pending, std::move(*term));
            });
            continue;
        }

        // semistandard across columns; otherwise solve the q-Garnir
        // relation for the violating term at the leftmost pair, lowest row
        std::size_t vp = cols.size();
        std::size_t vr = 0;
        for (std::size_t p = 0; p + 1 < cols.size() && vp == cols.size(); ++p)
            for (std::size_t r = 0; r < cols[p + 1].size(); ++r)
                if (cols[p][r] > cols[p + 1][r]) {
                    vp = p;
                    vr = r;
                    break;
                }
        if (vp == cols.size()) {
            auto tab = t.as_tableau();
            if (!tab) throw std::logic_error("straighten_flag: non-tableau escaped rewriting");
            auto [dit, fresh] = done.try_emplace(std::move(*tab), c);
            if (!fresh) {
                dit->second += c;
                if (dit->second.is_zero()) done.erase(dit);
            }
            continue;
        }

        const auto& cl = cols[vp];
        const auto& cr = cols[vp + 1];
        // Garnir set: bottom of the right column through the violation row,
        // then the left column from that row up; strictly increasing since
        // cr[vr] < cl[vr]
        std::vector<int> garnir(cr.begin(), cr.begin() + static_cast<std::ptrdiff_t>(vr) + 1);
        garnir.insert(garnir.end(), cl.begin() + static_cast<std::ptrdiff_t>(vr), cl.end());
        int l = static_cast<int>(garnir.size());
        int k = static_cast<int>(vr) + 1;
        for_each_shuffle(l, k, [&](const std::vector<int>& sel, const std::vector<int>& rest,
                                   int inv) {
            if (inv == 0) return;  // the identity term is the one being solved for
            std::vector<std::vector<int>> next(cols);
            next[vp].assign(cl.begin(), cl.begin() + static_cast<std::ptrdiff_t>(vr));
            for (int r : rest) next[vp].push_back(garnir[static_cast<std::size_t>(r)]);
            next[vp + 1].clear();
            for (int s : sel) next[vp + 1].push_back(garnir[static_cast<std::size_t>(s)]);
            next[vp + 1].insert(next[vp + 1].end(),
                                cr.begin() + static_cast<std::ptrdiff_t>(vr) + 1, cr.end());
            RationalQ coeff = -c * RationalQ::q_power(inv);
            if (inv % 2) coeff = -coeff;
            if (auto term = normalize_columns(std::move(next), std::move(coeff)))
                merge_term(pending, std::move(*term));
        });
    }
    return FlagExpansion{std::move(done)};
}

// ------------------------------------------------------------ flag oracle ----

FlagExpansion flag_expand_oracle(const Tabloid& delta, int n) {
    std::vector<int> sizes = delta.shape();
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    std::vector<int> lambda = conjugate(sizes);
    std::vector<int> content = delta.content();
    if (!content.empty() && content.back() > n)
        throw std::invalid_argument("flag_expand_oracle: entries exceed n");

    std::vector<Tableau> tabs = semistandard_tableaux(lambda, n, &content);
    std::vector<NCPoly> exps;
    exps.reserve(tabs.size());
    for (const auto& t : tabs) exps.push_back(quantum_tableau(t));

    NCPoly target = quantum_tabloid(delta);
    if (target.is_zero()) return {};

    std::map<Monomial, std::size_t> mono_index;
    for (const auto& e : exps)
        for (const auto& [m, c] : e.terms()) mono_index.try_emplace(m, mono_index.size());
    for (const auto& [m, c] : target.terms())
        if (!mono_index.count(m))
            throw std::domain_error("flag oracle: target outside the tableau span");

    std::size_t d = tabs.size();
    Matrix a(mono_index.size(), std::vector<RationalQ>(d, RationalQ(0)));
    for (std::size_t j = 0; j < d; ++j)
        for (const auto& [m, c] : exps[j].terms()) a[mono_index.at(m)][j] = c;

    // select d independent rows, then solve through the square submatrix
    Matrix echelon = a;
    std::vector<std::size_t> pivot_rows;
    std::vector<char> used(echelon.size(), 0);
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = echelon.size();
        for (std::size_t r = 0; r < echelon.size(); ++r)
            if (!used[r] && !echelon[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv == echelon.size())
            throw std::domain_error("flag oracle: quantum tableaux are dependent (basis bug)");
        used[piv] = 1;
        pivot_rows.push_back(piv);
        RationalQ s = echelon[piv][col].inv();
        for (std::size_t j = 0; j < d; ++j) echelon[piv][j] *= s;
        for (std::size_t r = 0; r < echelon.size(); ++r) {
            if (r == piv || echelon[r][col].is_zero()) continue;
            RationalQ f = echelon[r][col];
            for (std::size_t j = 0; j < d; ++j) echelon[r][j] -= f * echelon[piv][j];
        }
    }
    Matrix sub(d, std::vector<RationalQ>(d, RationalQ(0)));
    for (std::size_t r = 0; r < d; ++r) sub[r] = a[pivot_rows[r]];
    Matrix inv = invert(std::move(sub));

    std::vector<RationalQ> b(d, RationalQ(0));
    for (std::size_t r = 0; r < d; ++r) {
        const Monomial* key = nullptr;
        for (const auto& [m, idx] : mono_index)
            if (idx == pivot_rows[r]) {
                key = &m;
                break;
            }
        auto it = target.terms().find(*key);
        if (it != target.terms().end()) b[r] = it->second;
    }
    std::vector<RationalQ> x = mat_vec(inv, b);

    // consistency of the full overdetermined system
    NCPoly recombined;
    for (std::size_t j = 0; j < d; ++j) recombined += x[j] * exps[j];
    if (recombined != target) throw std::domain_error("flag oracle: inconsistent system");

    FlagExpansion out;
    for (std::size_t j = 0; j < d; ++j)
        if (!x[j].is_zero()) out.terms.emplace(tabs[j], std::move(x[j]));
    return out;
}

// ---------------------------------------------------------- q -> 0 class ----

namespace {

template <typename Map>
std::optional<typename Map::key_type> zero_class(const Map& terms) {
    std::optional<typename Map::key_type> found;
    for (const auto& [label, coeff] : terms) {
        if (!coeff.is_regular_at_zero())
            throw std::domain_error("q_zero_class: coefficient has a pole at q=0");
        Rational v = coeff.value_at_zero();
        if (v == 0) continue;
        if (found) throw std::domain_error("q_zero_class: more than one label survives at q=0");
        if (v != 1) throw std::domain_error("q_zero_class: surviving value differs from 1");
        found = label;
    }
    return found;
}

}  // namespace

std::optional<Bitableau> q_zero_class(const BitabExpansion& e) { return zero_class(e.terms); }
std::optional<Tableau> q_zero_class(const FlagExpansion& e) { return zero_class(e.terms); }

// --------------------------------------------------------------- theorem ----

TheoremReport verify_theorem1(const Word& w, const Word& u, Expander& expander) {
    if (w.size() != u.size()) throw std::invalid_argument("verify_theorem1: unequal lengths");
    TheoremReport rep;
    rep.rows_word = w;
    rep.cols_word = u;
    Monomial m;
    m.reserve(w.size());
    for (std::size_t p = 0; p < w.size(); ++p) m.emplace_back(w[p], u[p]);
    rep.expansion = expander.expand(NCPoly(std::move(m)));
    rep.coeffs_polynomial = true;
    for (const auto& [b, c] : rep.expansion.terms)
        if (!c.is_polynomial()) rep.coeffs_polynomial = false;
    RSPair pw = rs(w), pu = rs(u);
    if (pw.q == pu.q) rep.rs_prediction = Bitableau(pw.p, pu.p);
    try {
        rep.q0_class = q_zero_class(rep.expansion);
        rep.match = rep.q0_class == rep.rs_prediction;
    } catch (const std::domain_error& err) {
        rep.match = false;
        rep.note = err.what();
    }
    return rep;
}

}  // namespace qst
