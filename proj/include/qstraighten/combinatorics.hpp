/**
 * @file combinatorics.hpp
 * @brief Words, Young tableaux, tabloids and the Robinson-Schensted map.
 *
 * Tableaux are stored bottom row first: rows weakly increase left to right,
 * row lengths weakly decrease upwards, columns strictly increase upwards.
 * A tabloid is a sequence of strictly increasing columns with no condition
 * across columns; its columns are stored bottom-to-top.
 */
#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qst {

using Word = std::vector<int>;

bool valid_word(const Word& w, int n);
/// Digits for letters <= 9, comma-separated otherwise ("2143512", "10,2,11").
std::string word_str(const Word& w);
Word parse_word(std::string_view s);

bool is_partition(const std::vector<int>& shape);
std::vector<int> conjugate(const std::vector<int>& shape);
/// All partitions of k with at most max_rows parts, in a fixed order.
std::vector<std::vector<int>> partitions_of(int k, int max_rows);

class Tableau {
public:
    Tableau() = default;
    /// Validates semistandardness; throws std::invalid_argument.
    explicit Tableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    int size() const;
    std::vector<int> shape() const;
    /// Sorted multiset of entries.
    std::vector<int> content() const;
    /// Columns bottom-to-top, left to right.
    std::vector<std::vector<int>> columns() const;
    int max_entry() const;
    /// Entries are 1..size(), each exactly once.
    bool is_standard() const;

    std::string str() const;

    friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }
    friend bool operator!=(const Tableau& a, const Tableau& b) { return !(a == b); }
    friend bool operator<(const Tableau& a, const Tableau& b) { return a.rows_ < b.rows_; }

private:
    std::vector<std::vector<int>> rows_;
};

class Tabloid {
public:
    Tabloid() = default;
    /// Columns bottom-to-top; each must be strictly increasing.
    explicit Tabloid(std::vector<std::vector<int>> columns);

    const std::vector<std::vector<int>>& columns() const { return cols_; }
    bool empty() const { return cols_.empty(); }
    int size() const;
    /// Composition of column sizes.
    std::vector<int> shape() const;
    std::vector<int> content() const;

    /// The columns reassembled as rows; null unless the result is semistandard
    /// with weakly decreasing column sizes.
    std::optional<Tableau> as_tableau() const;
    static Tabloid from_tableau(const Tableau& t);

    std::string str() const;

    friend bool operator==(const Tabloid& a, const Tabloid& b) { return a.cols_ == b.cols_; }
    friend bool operator!=(const Tabloid& a, const Tabloid& b) { return !(a == b); }
    friend bool operator<(const Tabloid& a, const Tabloid& b) { return a.cols_ < b.cols_; }

private:
    std::vector<std::vector<int>> cols_;
};

struct RSPair {
    Tableau p;  // insertion tableau, semistandard
    Tableau q;  // recording tableau, standard
};

/// Schensted row insertion: each letter enters the bottom row, bumping the
/// leftmost entry strictly greater than it.
RSPair rs(const Word& w);
Tableau rs_p(const Word& w);

bool plactic_equiv(const Word& w, const Word& u);

/// Every suffix contains at least as many letters i as i+1, for all i.
bool is_yamanouchi(const Word& w);

/// The unique tableau of shape and weight lambda: row i filled with letter i.
Tableau yamanouchi_tableau(const std::vector<int>& lambda);

/// Columns read top to bottom, left to right.
Word column_reading(const Tabloid& t);

/// All tabloids with the given column sizes and entries <= n.
std::vector<Tabloid> enumerate_tabloids(const std::vector<int>& shape, int n);

/// All semistandard tableaux of the given shape with entries <= n,
/// optionally restricted to a fixed content multiset.
std::vector<Tableau> semistandard_tableaux(const std::vector<int>& shape, int n,
                                           const std::vector<int>* content = nullptr);

/// All standard tableaux with k cells and at most max_rows rows.
std::vector<Tableau> standard_tableaux(int k, int max_rows);

/// Tabloids of shape sigma(lambda') whose column reading inserts to shape
/// lambda.  sigma is a permutation of {1..len(lambda')} acting on the parts
/// of the conjugate shape.
std::vector<Tabloid> b_sigma_labels(const std::vector<int>& lambda,
                                    const std::vector<int>& sigma, int n);

}  // namespace qst
