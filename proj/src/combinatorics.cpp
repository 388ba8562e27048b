#include "qstraighten/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qst {

bool valid_word(const Word& w, int n) {
    return std::all_of(w.begin(), w.end(), [n](int x) { return 1 <= x && x <= n; });
}

std::string word_str(const Word& w) {
    bool digits = std::all_of(w.begin(), w.end(), [](int x) { return x <= 9; });
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!digits && i) s += ",";
        s += std::to_string(w[i]);
    }
    return s;
}

Word parse_word(std::string_view s) {
    Word w;
    if (s.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t next = s.find(',', pos);
            if (next == std::string_view::npos) next = s.size();
            int v = 0;
            if (next == pos) throw std::invalid_argument("empty letter in word");
            for (std::size_t i = pos; i < next; ++i) {
                char c = s[i];
                if (c < '0' || c > '9') throw std::invalid_argument("bad letter in word");
                v = v * 10 + (c - '0');
            }
            if (v < 1) throw std::invalid_argument("letters must be positive");
            w.push_back(v);
            pos = next + 1;
        }
    } else {
        for (char c : s) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad letter in word");
            w.push_back(c - '0');
        }
    }
    return w;
}

bool is_partition(const std::vector<int>& shape) {
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (shape[i] <= 0) return false;
        if (i && shape[i] > shape[i - 1]) return false;
    }
    return true;
}

std::vector<int> conjugate(const std::vector<int>& shape) {
    std::vector<int> out;
    if (shape.empty()) return out;
    for (int c = 1; c <= shape[0]; ++c)
        out.push_back(static_cast<int>(std::count_if(shape.begin(), shape.end(),
                                                     [c](int p) { return p >= c; })));
    return out;
}

std::vector<std::vector<int>> partitions_of(int k, int max_rows) {
    std::vector<std::vector<int>> res;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            res.push_back(acc);
            return;
        }
        if (static_cast<int>(acc.size()) == max_rows) return;
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            acc.push_back(p);
            self(self, rem - p, p);
            acc.pop_back();
        }
    };
    rec(rec, k, k);
    return res;
}

// -------------------------------------------------------------- Tableau ----

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty()) throw std::invalid_argument("tableau: empty row");
        if (r && row.size() > rows_[r - 1].size())
            throw std::invalid_argument("tableau: row lengths must weakly decrease");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1) throw std::invalid_argument("tableau: entries must be positive");
            if (c && row[c] < row[c - 1])
                throw std::invalid_argument("tableau: rows must weakly increase");
            if (r && row[c] <= rows_[r - 1][c])
                throw std::invalid_argument("tableau: columns must strictly increase");
        }
    }
}

int Tableau::size() const {
    int s = 0;
    for (const auto& r : rows_) s += static_cast<int>(r.size());
    return s;
}

std::vector<int> Tableau::shape() const {
    std::vector<int> s;
    for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
    return s;
}

std::vector<int> Tableau::content() const {
    std::vector<int> c;
    for (const auto& r : rows_) c.insert(c.end(), r.begin(), r.end());
    std::sort(c.begin(), c.end());
    return c;
}

std::vector<std::vector<int>> Tableau::columns() const {
    std::vector<std::vector<int>> cols;
    if (rows_.empty()) return cols;
    for (std::size_t c = 0; c < rows_[0].size(); ++c) {
        std::vector<int> col;
        for (const auto& r : rows_)
            if (c < r.size()) col.push_back(r[c]);
        cols.push_back(std::move(col));
    }
    return cols;
}

int Tableau::max_entry() const {
    int m = 0;
    for (const auto& r : rows_)
        for (int x : r) m = std::max(m, x);
    return m;
}

bool Tableau::is_standard() const {
    std::vector<int> c = content();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::string Tableau::str() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) s += ",";
        s += "[";
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) s += ",";
            s += std::to_string(rows_[r][c]);
        }
        s += "]";
    }
    return s + "]";
}

// -------------------------------------------------------------- Tabloid ----

Tabloid::Tabloid(std::vector<std::vector<int>> columns) : cols_(std::move(columns)) {
    for (const auto& col : cols_) {
        if (col.empty()) throw std::invalid_argument("tabloid: empty column");
        for (std::size_t i = 1; i < col.size(); ++i)
            if (col[i] <= col[i - 1])
                throw std::invalid_argument("tabloid: columns must strictly increase");
        if (col[0] < 1) throw std::invalid_argument("tabloid: entries must be positive");
    }
}

int Tabloid::size() const {
    int s = 0;
    for (const auto& c : cols_) s += static_cast<int>(c.size());
    return s;
}

std::vector<int> Tabloid::shape() const {
    std::vector<int> s;
    for (const auto& c : cols_) s.push_back(static_cast<int>(c.size()));
    return s;
}

std::vector<int> Tabloid::content() const {
    std::vector<int> c;
    for (const auto& col : cols_) c.insert(c.end(), col.begin(), col.end());
    std::sort(c.begin(), c.end());
    return c;
}

std::optional<Tableau> Tabloid::as_tableau() const {
    std::vector<int> sizes = shape();
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] > sizes[i - 1]) return std::nullopt;
    std::size_t nrows = cols_.empty() ? 0 : cols_[0].size();
    std::vector<std::vector<int>> rows(nrows);
    for (const auto& col : cols_)
        for (std::size_t r = 0; r < col.size(); ++r) rows[r].push_back(col[r]);
    try {
        return Tableau(std::move(rows));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

Tabloid Tabloid::from_tableau(const Tableau& t) { return Tabloid(t.columns()); }

std::string Tabloid::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < cols_.size(); ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < cols_[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(cols_[i][j]);
        }
        s += "]";
    }
    return s + "]";
}

// --------------------------------------------------------------- RS map ----

RSPair rs(const Word& w) {
    std::vector<std::vector<int>> p, q;
    int step = 0;
    for (int letter : w) {
        ++step;
        int x = letter;
        std::size_t r = 0;
        for (;; ++r) {
            if (r == p.size()) {
                p.emplace_back();
                q.emplace_back();
            }
            auto& row = p[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                q[r].push_back(step);
                break;
            }
            std::swap(*it, x);  // bump and continue one row up
        }
    }
    return {Tableau(std::move(p)), Tableau(std::move(q))};
}

Tableau rs_p(const Word& w) { return rs(w).p; }

bool plactic_equiv(const Word& w, const Word& u) { return rs_p(w) == rs_p(u); }

bool is_yamanouchi(const Word& w) {
    if (w.empty()) return true;
    int maxl = *std::max_element(w.begin(), w.end());
    std::vector<int> count(static_cast<std::size_t>(maxl) + 2, 0);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        ++count[static_cast<std::size_t>(*it)];
        int x = *it;
        if (x >= 2 && count[static_cast<std::size_t>(x)] > count[static_cast<std::size_t>(x) - 1])
            return false;
    }
    return true;
}

Tableau yamanouchi_tableau(const std::vector<int>& lambda) {
    if (!is_partition(lambda)) throw std::invalid_argument("yamanouchi_tableau: not a partition");
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        rows.emplace_back(static_cast<std::size_t>(lambda[i]), static_cast<int>(i) + 1);
    return Tableau(std::move(rows));
}

Word column_reading(const Tabloid& t) {
    Word w;
    for (const auto& col : t.columns())
        for (auto it = col.rbegin(); it != col.rend(); ++it) w.push_back(*it);
    return w;
}

namespace {

void columns_of_size(int size, int n, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int lo) -> void {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
}

}  // namespace

std::vector<Tabloid> enumerate_tabloids(const std::vector<int>& shape, int n) {
    std::vector<std::vector<std::vector<int>>> choices;
    for (int s : shape) {
        std::vector<std::vector<int>> cols;
        columns_of_size(s, n, cols);
        choices.push_back(std::move(cols));
    }
    std::vector<Tabloid> res;
    std::vector<std::vector<int>> cur;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == choices.size()) {
            res.emplace_back(cur);
            return;
        }
        for (const auto& col : choices[i]) {
            cur.push_back(col);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return res;
}

std::vector<Tableau> semistandard_tableaux(const std::vector<int>& shape, int n,
                                           const std::vector<int>* content) {
    if (!is_partition(shape) && !shape.empty())
        throw std::invalid_argument("semistandard_tableaux: not a partition");
    std::vector<Tableau> res;
    std::vector<std::vector<int>> rows;
    for (int len : shape) rows.emplace_back(static_cast<std::size_t>(len), 0);
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            cells.emplace_back(static_cast<int>(r), static_cast<int>(c));
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            Tableau t{std::vector<std::vector<int>>(rows)};
            if (!content || t.content() == *content) res.push_back(std::move(t));
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c) - 1]);
        if (r > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c)] + 1);
        for (int v = lo; v <= n; ++v) {
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            self(self, idx + 1);
        }
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
    };
    rec(rec, 0);
    return res;
}

std::vector<Tableau> standard_tableaux(int k, int max_rows) {
    std::vector<int> content(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) content[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Tableau> res;
    for (const auto& shape : partitions_of(k, max_rows)) {
        auto ts = semistandard_tableaux(shape, k, &content);
        res.insert(res.end(), ts.begin(), ts.end());
    }
    return res;
}

std::vector<Tabloid> b_sigma_labels(const std::vector<int>& lambda,
                                    const std::vector<int>& sigma, int n) {
    if (!is_partition(lambda)) throw std::invalid_argument("b_sigma_labels: not a partition");
    std::vector<int> conj = conjugate(lambda);
    if (sigma.size() != conj.size())
        throw std::invalid_argument("b_sigma_labels: sigma must permute the conjugate parts");
    std::vector<int> seen(sigma.size(), 0);
    std::vector<int> shape;
    for (int s : sigma) {
        if (s < 1 || s > static_cast<int>(conj.size()) || seen[static_cast<std::size_t>(s) - 1]++)
            throw std::invalid_argument("b_sigma_labels: sigma is not a permutation");
        shape.push_back(conj[static_cast<std::size_t>(s) - 1]);
    }
    std::vector<Tabloid> res;
    for (auto& t : enumerate_tabloids(shape, n))
        if (rs_p(column_reading(t)).shape() == lambda) res.push_back(std::move(t));
    return res;
}

}  // namespace qst
