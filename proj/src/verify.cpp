#include "qstraighten/verify.hpp"

#include "qstraighten/crystal.hpp"
#include "qstraighten/straighten.hpp"
#include "qstraighten/uqaction.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>

namespace qst::verify {

namespace {

using Clock = std::chrono::steady_clock;

Result timed(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    Result r;
    r.name = name;
    auto t0 = Clock::now();
    try {
        auto [pass, detail] = body();
        r.pass = pass;
        r.detail = std::move(detail);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

std::vector<Word> all_words(int n, int len) {
    std::vector<Word> out{{}};
    for (int i = 0; i < len; ++i) {
        std::vector<Word> next;
        next.reserve(out.size() * static_cast<std::size_t>(n));
        for (const auto& w : out)
            for (int l = 1; l <= n; ++l) {
                Word v = w;
                v.push_back(l);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

Monomial random_monomial(std::mt19937_64& rng, int n, int maxdeg, bool exact = false) {
    std::uniform_int_distribution<int> deg(0, maxdeg), idx(1, n);
    Monomial m;
    int d = exact ? maxdeg : deg(rng);
    for (int i = 0; i < d; ++i) m.emplace_back(idx(rng), idx(rng));
    return m;
}

std::vector<std::vector<int>> contents(int k, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int lo) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= n; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace

Result theorem1(int n, int max_k, int jobs) {
    return timed("theorem1", [&]() -> std::pair<bool, std::string> {
        std::vector<std::pair<Word, Word>> pairs;
        for (int k = 0; k <= max_k; ++k) {
            auto words = all_words(n, k);
            for (const auto& w : words)
                for (const auto& u : words) pairs.emplace_back(w, u);
        }
        Expander expander(n);
        std::atomic<std::size_t> next{0};
        std::vector<std::string> failures(pairs.size());
        std::vector<char> ok(pairs.size(), 1);
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= pairs.size()) return;
                TheoremReport rep = verify_theorem1(pairs[i].first, pairs[i].second, expander);
                if (!rep.ok()) {
                    ok[i] = 0;
                    failures[i] = "w=" + word_str(rep.rows_word) + " u=" + word_str(rep.cols_word) +
                                  (rep.coeffs_polynomial ? "" : " (non-polynomial coefficient)") +
                                  (rep.note.empty() ? "" : " " + rep.note);
                }
            }
        };
        int threads = std::max(1, jobs);
        std::vector<std::thread> pool;
        for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (!ok[i]) return {false, "first mismatch: " + failures[i]};
        return {true, std::to_string(pairs.size()) + " word pairs, n=" + std::to_string(n) +
                          ", k<=" + std::to_string(max_k)};
    });
}

Result corollary(int n, int max_k) {
    return timed("corollary", [&]() -> std::pair<bool, std::string> {
        Expander expander(n);
        std::size_t checked = 0;
        for (int k = 0; k <= max_k; ++k) {
            auto words = all_words(n, k);
            // classes of the diagonal monomials t_{w_1 w_1} ... t_{w_k w_k}
            std::vector<std::optional<Bitableau>> cls(words.size());
            for (std::size_t i = 0; i < words.size(); ++i) {
                TheoremReport rep = verify_theorem1(words[i], words[i], expander);
                if (!rep.ok()) return {false, "diagonal mismatch at w=" + word_str(words[i])};
                cls[i] = rep.q0_class;
            }
            for (std::size_t i = 0; i < words.size(); ++i)
                for (std::size_t j = 0; j < words.size(); ++j) {
                    bool congruent = cls[i] == cls[j];
                    bool plactic = plactic_equiv(words[i], words[j]);
                    ++checked;
                    if (congruent != plactic)
                        return {false, "w=" + word_str(words[i]) + " u=" + word_str(words[j]) +
                                           ": congruent=" + std::to_string(congruent) +
                                           " plactic=" + std::to_string(plactic)};
                }
        }
        return {true, std::to_string(checked) + " diagonal pairs, n=" + std::to_string(n) +
                          ", k<=" + std::to_string(max_k)};
    });
}

Result flag_suite(int n, int max_cols, int max_size) {
    return timed("flag", [&]() -> std::pair<bool, std::string> {
        std::vector<std::vector<int>> shapes;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int total) -> void {
            if (!cur.empty()) shapes.push_back(cur);
            if (static_cast<int>(cur.size()) == max_cols) return;
            for (int s = 1; s <= n && total + s <= max_size; ++s) {
                cur.push_back(s);
                self(self, total + s);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        std::size_t checked = 0;
        for (const auto& shape : shapes) {
            for (const auto& t : enumerate_tabloids(shape, n)) {
                FlagExpansion a = straighten_flag(t, n);
                FlagExpansion b = flag_expand_oracle(t, n);
                if (a.terms != b.terms)
                    return {false, "rewriting disagrees with the solve on " + t.str()};
                std::vector<int> sizes = t.shape();
                std::sort(sizes.begin(), sizes.end(), std::greater<int>());
                Tableau p = rs_p(column_reading(t));
                auto cls = q_zero_class(a);
                bool in_shape = p.shape() == conjugate(sizes);
                if (in_shape != cls.has_value() || (in_shape && *cls != p))
                    return {false, "congruence class of " + t.str() + " is off"};
                ++checked;
            }
        }
        return {true, std::to_string(checked) + " tabloids, n=" + std::to_string(n) +
                          ", <=" + std::to_string(max_cols) + " columns, size<=" +
                          std::to_string(max_size)};
    });
}

Result bsigma() {
    return timed("bsigma", [&]() -> std::pair<bool, std::string> {
        const std::vector<int> lambda{2, 1};
        const int n = 3;
        std::vector<std::vector<int>> sigmas{{1, 2}, {2, 1}};
        std::size_t dim = semistandard_tableaux(lambda, n).size();

        std::vector<std::vector<Tabloid>> bases;
        for (const auto& sigma : sigmas) {
            auto b = b_sigma_labels(lambda, sigma, n);
            if (b.size() != dim)
                return {false, "labels of order " + std::to_string(sigma[0]) + " have size " +
                                   std::to_string(b.size())};
            // basis property: expansions over quantum tableaux have full rank
            auto tabs = semistandard_tableaux(lambda, n);
            std::map<Tableau, std::size_t> col;
            for (std::size_t i = 0; i < tabs.size(); ++i) col[tabs[i]] = i;
            std::vector<std::vector<RationalQ>> m;
            for (const auto& d : b) {
                std::vector<RationalQ> row(tabs.size(), RationalQ(0));
                for (const auto& [t, c] : straighten_flag(d, n).terms) row[col.at(t)] = c;
                m.push_back(std::move(row));
            }
            if (matrix_rank(m) != static_cast<int>(dim))
                return {false, "label set is not linearly independent"};
            bases.push_back(std::move(b));
        }

        // pairwise congruence across the two bases matches insertion equality
        std::size_t checked = 0;
        for (const auto& b1 : bases)
            for (const auto& b2 : bases)
                for (const auto& d : b1)
                    for (const auto& g : b2) {
                        auto cd = q_zero_class(straighten_flag(d, n));
                        auto cg = q_zero_class(straighten_flag(g, n));
                        if (!cd || !cg) return {false, "label has a vanishing class"};
                        bool same_p = rs_p(column_reading(d)) == rs_p(column_reading(g));
                        if ((cd == cg) != same_p)
                            return {false, "congruence mismatch between " + d.str() + " and " +
                                               g.str()};
                        ++checked;
                    }
        return {true, std::to_string(checked) + " label pairs, both column orders, dim=" +
                          std::to_string(dim)};
    });
}

Result bimodule_bases() {
    return timed("bimodule", [&]() -> std::pair<bool, std::string> {
        const int n = 2;
        Expander expander(n);
        std::size_t checked = 0;
        for (const std::vector<int>& lambda : {std::vector<int>{2}, std::vector<int>{1, 1}}) {
            int k = 0;
            for (int p : lambda) k += p;
            // partitions of k dominated by lambda, with their column-filled
            // standard tableaux
            std::vector<Tableau> taus;
            for (const auto& nu : partitions_of(k, n)) {
                bool dominated = true;
                int acc_nu = 0, acc_la = 0;
                for (std::size_t i = 0; i < nu.size(); ++i) {
                    acc_nu += nu[i];
                    acc_la += i < lambda.size() ? lambda[i] : 0;
                    if (acc_nu > acc_la) dominated = false;
                }
                if (!dominated) continue;
                // standard tableau filled down the columns
                std::vector<std::vector<int>> cols;
                int next = 1;
                for (int h : conjugate(nu)) {
                    std::vector<int> col;
                    for (int j = 0; j < h; ++j) col.push_back(next++);
                    cols.push_back(std::move(col));
                }
                auto tau = Tabloid(cols).as_tableau();
                if (!tau) return {false, "column filling is not a tableau"};
                taus.push_back(std::move(*tau));
            }

            std::vector<int> mu = conjugate(lambda);
            std::vector<Bitabloid> basis;
            auto tabloids = enumerate_tabloids(mu, n);
            for (const auto& d : tabloids)
                for (const auto& dp : tabloids) {
                    Tableau qd = rs(column_reading(d)).q;
                    Tableau qdp = rs(column_reading(dp)).q;
                    if (qd != qdp) continue;
                    if (std::find(taus.begin(), taus.end(), qd) == taus.end()) continue;
                    basis.emplace_back(d, dp);
                }

            std::size_t dim = 0;
            for (const auto& t : taus) {
                std::size_t d = semistandard_tableaux(t.shape(), n).size();
                dim += d * d;
            }
            if (basis.size() != dim)
                return {false, "basis size " + std::to_string(basis.size()) + " differs from " +
                                   std::to_string(dim)};

            // expand everything in bitableaux; check rank and classes
            std::map<Bitableau, std::size_t> col;
            std::vector<BitabExpansion> exps;
            for (const auto& b : basis) {
                BitabExpansion e = expander.expand(bitabloid_to_ncpoly(b));
                for (const auto& [bt, c] : e.terms) col.try_emplace(bt, col.size());
                exps.push_back(std::move(e));
            }
            std::vector<std::vector<RationalQ>> m(basis.size(),
                                                  std::vector<RationalQ>(col.size(), RationalQ(0)));
            for (std::size_t i = 0; i < exps.size(); ++i)
                for (const auto& [bt, c] : exps[i].terms) m[i][col.at(bt)] = c;
            if (matrix_rank(m) != static_cast<int>(basis.size()))
                return {false, "bimodule labels are not linearly independent"};

            for (std::size_t i = 0; i < basis.size(); ++i) {
                auto cls = q_zero_class(exps[i]);
                Bitableau want(rs_p(column_reading(basis[i].left)),
                               rs_p(column_reading(basis[i].right)));
                if (!cls || *cls != want)
                    return {false, "class of a bimodule label is not its insertion pair"};
                ++checked;
            }
        }
        return {true, std::to_string(checked) + " labels across both shapes, n=2"};
    });
}

Result centrality() {
    return timed("centrality", [&]() -> std::pair<bool, std::string> {
        std::size_t checked = 0;
        for (int n = 2; n <= 3; ++n) {
            NCPoly d = qdet(n);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    NCPoly t = NCPoly::generator(i, j);
                    if (!(mul(d, t) - mul(t, d)).is_zero())
                        return {false, "determinant does not commute with t[" +
                                           std::to_string(i) + "," + std::to_string(j) +
                                           "], n=" + std::to_string(n)};
                    ++checked;
                }
        }
        return {true, std::to_string(checked) + " generators, n in {2,3}"};
    });
}

Result module_relations() {
    return timed("module-relations", [&]() -> std::pair<bool, std::string> {
        std::size_t checked = 0;
        for (int n = 2; n <= 3; ++n) {
            std::vector<NCPoly> span;
            std::vector<Generator> gens;
            for (int r = 1; r <= n; ++r)
                for (int c = 1; c <= n; ++c) gens.emplace_back(r, c);
            for (const auto& g : gens) span.push_back(NCPoly(Monomial{g}));
            for (std::size_t a = 0; a < gens.size(); ++a)
                for (std::size_t b = a; b < gens.size(); ++b)
                    span.push_back(NCPoly(Monomial{gens[a], gens[b]}));
            for (Side s : {Side::Left, Side::Right})
                for (int i = 1; i < n; ++i)
                    for (int j = 1; j < n; ++j) {
                        std::string diag;
                        if (!check_module_relations(span, i, j, s, &diag)) return {false, diag};
                        checked += span.size();
                    }
        }
        return {true, std::to_string(checked) + " span elements, degrees 1-2, n<=3, both sides"};
    });
}

Result figures() {
    return timed("figures", [&]() -> std::pair<bool, std::string> {
        auto tabstr = [](std::vector<std::vector<int>> rows) {
            return Tableau(std::move(rows)).str();
        };
        CrystalGraph expected;
        {
            std::vector<std::string> labels = {
                tabstr({{1, 1}, {2}}), tabstr({{1, 2}, {2}}), tabstr({{1, 1}, {3}}),
                tabstr({{1, 2}, {3}}), tabstr({{2, 2}, {3}}), tabstr({{2, 3}, {3}}),
                tabstr({{1, 3}, {2}}), tabstr({{1, 3}, {3}})};
            std::vector<std::tuple<std::string, int, std::string>> edges = {
                {tabstr({{1, 1}, {2}}), 1, tabstr({{1, 2}, {2}})},
                {tabstr({{1, 1}, {2}}), 2, tabstr({{1, 1}, {3}})},
                {tabstr({{1, 1}, {3}}), 1, tabstr({{1, 2}, {3}})},
                {tabstr({{1, 2}, {3}}), 1, tabstr({{2, 2}, {3}})},
                {tabstr({{2, 2}, {3}}), 2, tabstr({{2, 3}, {3}})},
                {tabstr({{1, 2}, {2}}), 2, tabstr({{1, 3}, {2}})},
                {tabstr({{1, 3}, {2}}), 2, tabstr({{1, 3}, {3}})},
                {tabstr({{1, 3}, {3}}), 1, tabstr({{2, 3}, {3}})}};
            std::sort(labels.begin(), labels.end());
            expected.vertices = labels;
            std::map<std::string, int> idx;
            for (std::size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = static_cast<int>(i);
            for (const auto& [s, c, t] : edges) expected.edges.push_back({idx[s], c, idx[t]});
            std::sort(expected.edges.begin(), expected.edges.end());
        }
        CrystalGraph got = component(parse_word("112"), 3);
        if (!(got == expected)) return {false, "the (2,1) component differs from the figure"};

        CrystalGraph g22 = component(parse_word("1122"), 4);
        if (g22.vertices.size() != 20 || !g22.connected())
            return {false, "the (2,2) component is not a connected 20-vertex graph"};

        // full structure of the two-columned graph over four letters
        using Rows = std::vector<std::vector<int>>;
        std::vector<std::tuple<Rows, int, Rows>> arrows = {
            {{{1, 1}, {2, 2}}, 2, {{1, 1}, {2, 3}}}, {{{1, 1}, {2, 3}}, 1, {{1, 2}, {2, 3}}},
            {{{1, 1}, {2, 3}}, 2, {{1, 1}, {3, 3}}}, {{{1, 1}, {2, 3}}, 3, {{1, 1}, {2, 4}}},
            {{{1, 1}, {2, 4}}, 1, {{1, 2}, {2, 4}}}, {{{1, 1}, {2, 4}}, 2, {{1, 1}, {3, 4}}},
            {{{1, 2}, {2, 3}}, 2, {{1, 2}, {3, 3}}}, {{{1, 2}, {2, 3}}, 3, {{1, 2}, {2, 4}}},
            {{{1, 1}, {3, 3}}, 1, {{1, 2}, {3, 3}}}, {{{1, 1}, {3, 3}}, 3, {{1, 1}, {3, 4}}},
            {{{1, 2}, {2, 4}}, 2, {{1, 3}, {2, 4}}}, {{{1, 1}, {3, 4}}, 1, {{1, 2}, {3, 4}}},
            {{{1, 1}, {3, 4}}, 3, {{1, 1}, {4, 4}}}, {{{1, 2}, {3, 3}}, 1, {{2, 2}, {3, 3}}},
            {{{1, 2}, {3, 3}}, 3, {{1, 2}, {3, 4}}}, {{{1, 1}, {4, 4}}, 1, {{1, 2}, {4, 4}}},
            {{{1, 3}, {2, 4}}, 2, {{1, 3}, {3, 4}}}, {{{1, 2}, {3, 4}}, 1, {{2, 2}, {3, 4}}},
            {{{1, 2}, {3, 4}}, 3, {{1, 2}, {4, 4}}}, {{{2, 2}, {3, 3}}, 3, {{2, 2}, {3, 4}}},
            {{{1, 2}, {4, 4}}, 1, {{2, 2}, {4, 4}}}, {{{1, 2}, {4, 4}}, 2, {{1, 3}, {4, 4}}},
            {{{2, 2}, {3, 4}}, 2, {{2, 3}, {3, 4}}}, {{{2, 2}, {3, 4}}, 3, {{2, 2}, {4, 4}}},
            {{{1, 3}, {3, 4}}, 1, {{2, 3}, {3, 4}}}, {{{1, 3}, {3, 4}}, 3, {{1, 3}, {4, 4}}},
            {{{2, 2}, {4, 4}}, 2, {{2, 3}, {4, 4}}}, {{{1, 3}, {4, 4}}, 1, {{2, 3}, {4, 4}}},
            {{{2, 3}, {3, 4}}, 3, {{2, 3}, {4, 4}}}, {{{2, 3}, {4, 4}}, 2, {{3, 3}, {4, 4}}},
        };
        CrystalGraph e22;
        std::map<std::string, int> idx22;
        for (const auto& [s, c, t] : arrows)
            for (const Rows* r : {&s, &t}) idx22.try_emplace(Tableau(*r).str(), 0);
        for (auto& [k, v] : idx22) {
            v = static_cast<int>(e22.vertices.size());
            e22.vertices.push_back(k);
        }
        for (const auto& [s, c, t] : arrows)
            e22.edges.push_back({idx22.at(Tableau(s).str()), c, idx22.at(Tableau(t).str())});
        std::sort(e22.edges.begin(), e22.edges.end());
        if (!(g22 == e22)) return {false, "the (2,2) component differs from the figure"};

        using Edge = std::tuple<std::vector<int>, int, std::vector<int>>;
        std::set<Edge> col_edges;
        std::vector<std::vector<int>> cols;
        for (int a = 1; a <= 4; ++a)
            for (int b = a + 1; b <= 4; ++b) cols.push_back({a, b});
        for (const auto& c : cols)
            for (int i = 1; i <= 3; ++i)
                if (auto d = column_module_action(c, i, 'f')) col_edges.insert({c, i, *d});
        std::set<Edge> col_expected = {
            {{1, 2}, 2, {1, 3}}, {{1, 3}, 3, {1, 4}}, {{1, 3}, 1, {2, 3}},
            {{1, 4}, 1, {2, 4}}, {{2, 3}, 3, {2, 4}}, {{2, 4}, 2, {3, 4}},
        };
        if (col_edges != col_expected) return {false, "the two-rowed column graph differs"};
        return {true, "three graphs reproduced, the 20-vertex one edge by edge"};
    });
}

Result crystal_rs_compat() {
    return timed("crystal-rs", [&]() -> std::pair<bool, std::string> {
        std::size_t checked = 0;
        for (int len = 0; len <= 5; ++len)
            for (const auto& w : all_words(3, len))
                for (int i = 1; i <= 2; ++i)
                    if (auto u = raise(w, i)) {
                        if (rs(*u).q != rs(w).q)
                            return {false, "recording tableau changed at w=" + word_str(w)};
                        ++checked;
                    }
        std::map<std::string, std::vector<Word>> classes;
        for (const auto& w : all_words(3, 4)) classes[rs_p(w).str()].push_back(w);
        for (const auto& [p, ws] : classes)
            for (int i = 1; i <= 2; ++i) {
                auto first = raise(ws[0], i);
                for (const auto& w : ws) {
                    auto u = raise(w, i);
                    if (u.has_value() != first.has_value() ||
                        (u && rs_p(*u) != rs_p(*first)))
                        return {false, "plactic compatibility fails at w=" + word_str(w)};
                    ++checked;
                }
            }
        return {true, std::to_string(checked) + " raisings, n=3"};
    });
}

Result crystal_inverse_pairs() {
    return timed("inverse-pairs", [&]() -> std::pair<bool, std::string> {
        std::size_t checked = 0;
        for (int n = 2; n <= 3; ++n)
            for (int len = 0; len <= 6; ++len)
                for (const auto& w : all_words(n, len))
                    for (int i = 1; i < n; ++i) {
                        if (auto u = lower(w, i)) {
                            if (raise(*u, i) != w)
                                return {false, "lower then raise moves w=" + word_str(w)};
                            ++checked;
                        }
                        if (auto u = raise(w, i)) {
                            if (lower(*u, i) != w)
                                return {false, "raise then lower moves w=" + word_str(w)};
                            ++checked;
                        }
                    }
        return {true, std::to_string(checked) + " applications, n<=3, length<=6"};
    });
}

Result tensor_vs_bracket() {
    return timed("tensor-rule", [&]() -> std::pair<bool, std::string> {
        std::size_t checked = 0;
        for (int n = 2; n <= 3; ++n)
            for (int len = 0; len <= 5; ++len)
                for (const auto& w : all_words(n, len))
                    for (std::size_t cut = 0; cut <= w.size(); ++cut) {
                        Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
                        Word v(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
                        for (int i = 1; i < n; ++i) {
                            auto glue = [](const std::optional<Word>& a,
                                           const std::optional<Word>& b) -> std::optional<Word> {
                                if (!a || !b) return std::nullopt;
                                Word out = *a;
                                out.insert(out.end(), b->begin(), b->end());
                                return out;
                            };
                            std::optional<Word> low =
                                tensor_lower(stats(u, i), stats(v, i)) == TensorFactor::Right
                                    ? glue(u, lower(v, i))
                                    : glue(lower(u, i), v);
                            std::optional<Word> high =
                                tensor_raise(stats(u, i), stats(v, i)) == TensorFactor::Left
                                    ? glue(raise(u, i), v)
                                    : glue(u, raise(v, i));
                            if (lower(w, i) != low || raise(w, i) != high)
                                return {false, "split rule fails at w=" + word_str(w) + " cut " +
                                                   std::to_string(cut)};
                            checked += 2;
                        }
                    }
        return {true, std::to_string(checked) + " split applications, n<=3, length<=5"};
    });
}

Result normalize_confluence(std::uint64_t seed) {
    return timed("confluence", [&]() -> std::pair<bool, std::string> {
        static const RationalQ q_minus_qinv = RationalQ::q_power(1) - RationalQ::q_power(-1);
        std::mt19937_64 rng(seed);
        for (int iter = 0; iter < 1000; ++iter) {
            Monomial m = random_monomial(rng, 3, 5);
            NCPoly p{Monomial(m)};
            // random-position strategy
            NCPoly out;
            std::vector<std::pair<Monomial, RationalQ>> work(p.terms().begin(), p.terms().end());
            while (!work.empty()) {
                auto [word, c] = std::move(work.back());
                work.pop_back();
                std::vector<std::size_t> descents;
                for (std::size_t i = 0; i + 1 < word.size(); ++i)
                    if (word[i + 1] < word[i]) descents.push_back(i);
                if (descents.empty()) {
                    out.add_term(word, c);
                    continue;
                }
                std::size_t pos = descents[std::uniform_int_distribution<std::size_t>(
                    0, descents.size() - 1)(rng)];
                Generator a = word[pos], b = word[pos + 1];
                std::swap(word[pos], word[pos + 1]);
                if (a.row == b.row || a.col == b.col) {
                    work.emplace_back(std::move(word), c * RationalQ::q_power(1));
                } else if (a.col < b.col) {
                    work.emplace_back(std::move(word), c);
                } else {
                    Monomial cross = word;
                    cross[pos] = Generator(b.row, a.col);
                    cross[pos + 1] = Generator(a.row, b.col);
                    work.emplace_back(std::move(word), c);
                    work.emplace_back(std::move(cross), c * q_minus_qinv);
                }
            }
            if (out != normalize(p)) return {false, "strategies disagree on " + p.str()};
        }
        return {true, "1000 random words, n=3, degree<=5"};
    });
}

Result weight_preservation(std::uint64_t seed) {
    return timed("weights", [&]() -> std::pair<bool, std::string> {
        std::mt19937_64 rng(seed);
        for (int iter = 0; iter < 1000; ++iter) {
            Monomial m = random_monomial(rng, 3, 5);
            auto rw = row_weight(m), cw = col_weight(m);
            NCPoly nf = normalize(NCPoly{Monomial(m)});
            for (const auto& [t, c] : nf.terms())
                if (row_weight(t) != rw || col_weight(t) != cw)
                    return {false, "weight changed while rewriting " + monomial_str(m)};
        }
        return {true, "1000 random words, n=3, degree<=5"};
    });
}

Result bimodule_commutation_suite(std::uint64_t seed) {
    return timed("bimodule-commutation", [&]() -> std::pair<bool, std::string> {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> color(1, 2);
        for (int iter = 0; iter < 1000; ++iter) {
            NCPoly p{random_monomial(rng, 3, 3)};
            std::string diag;
            if (!check_bimodule_commutation(p, color(rng), color(rng), &diag))
                return {false, diag};
        }
        return {true, "1000 random elements, n=3, degree<=3"};
    });
}

Result hz_rank() {
    return timed("hz-rank", [&]() -> std::pair<bool, std::string> {
        std::size_t components = 0;
        for (int n = 2; n <= 3; ++n) {
            Expander ex(n);
            for (int k = 0; k <= 3; ++k)
                for (const auto& alpha : contents(k, n))
                    for (const auto& beta : contents(k, n)) {
                        auto [bits, monos] = ex.component_size(alpha, beta);
                        if (bits != monos)
                            return {false, "component dimension mismatch at k=" +
                                               std::to_string(k)};
                        ++components;
                    }
        }
        return {true, std::to_string(components) + " graded components, n<=3, degree<=3"};
    });
}

std::vector<Result> all_suites(std::uint64_t seed, int jobs) {
    std::vector<Result> rs;
    rs.push_back(theorem1(2, 4, jobs));
    rs.push_back(theorem1(3, 3, jobs));
    rs.push_back(corollary(3, 3));
    rs.push_back(flag_suite(4, 3, 6));
    rs.push_back(bsigma());
    rs.push_back(bimodule_bases());
    rs.push_back(centrality());
    rs.push_back(module_relations());
    rs.push_back(figures());
    rs.push_back(crystal_rs_compat());
    rs.push_back(crystal_inverse_pairs());
    rs.push_back(tensor_vs_bracket());
    rs.push_back(normalize_confluence(seed));
    rs.push_back(weight_preservation(seed + 1));
    rs.push_back(bimodule_commutation_suite(seed + 2));
    rs.push_back(hz_rank());
    return rs;
}

}  // namespace qst::verify
