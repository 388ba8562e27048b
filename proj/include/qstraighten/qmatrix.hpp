/**
 * @file qmatrix.hpp
 * @brief The quantized coordinate ring of n x n matrices.
 *
 * Elements are finite sums of words in the generators t_ij with RationalQ
 * coefficients.  normalize() rewrites every word to the sorted normal form
 * (generators nondecreasing in lex order on (row, col)) using the oriented
 * defining relations; sorted words form a linear basis, so normal forms are
 * canonical.
 */
#pragma once

#include "qstraighten/coeffs.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qst {

struct Generator {
    std::uint8_t row = 1;
    std::uint8_t col = 1;

    Generator() = default;
    Generator(int r, int c);
    auto operator<=>(const Generator&) const = default;
};

/// Word in the generators; normal form is nondecreasing.
using Monomial = std::vector<Generator>;

/// Sorted multiset of row indices.
std::vector<int> row_weight(const Monomial& m);
/// Sorted multiset of column indices.
std::vector<int> col_weight(const Monomial& m);

class NCPoly {
public:
    NCPoly() = default;
    NCPoly(int c);
    NCPoly(const RationalQ& c);
    /// Single word with coefficient 1 (not normalized).
    explicit NCPoly(Monomial m);

    static NCPoly generator(int row, int col);

    const std::map<Monomial, RationalQ>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Monomial& m, const RationalQ& c);

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    NCPoly operator-() const;
    friend NCPoly operator+(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator-(const NCPoly& a, const NCPoly& b);
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);

    friend NCPoly operator*(const RationalQ& c, const NCPoly& p);

    std::string str() const;

private:
    std::map<Monomial, RationalQ> terms_;  // zero coefficients absent
};

/// Rewrites every word to the sorted normal form.
NCPoly normalize(const NCPoly& p);

/// Concatenate, multiply coefficients, normalize.
NCPoly mul(const NCPoly& a, const NCPoly& b);

/// Inversion count of a permutation given in one-line notation.
int permutation_length(const std::vector<int>& w);

/// Quantum minor det_q T_IJ: alternating sum over S_k weighted by (-q)^{-l(w)},
/// normalized.  I and J must be strictly increasing of equal size.
NCPoly qminor(const std::vector<int>& I, const std::vector<int>& J);

/// Quantum determinant = qminor((1..n), (1..n)).
NCPoly qdet(int n);

/// Specialization at q = 1 of every coefficient; throws on a pole there.
/// Used by tests for the commutative sanity check.
std::map<Monomial, Rational> eval_at_one(const NCPoly& p);

/// All normal-form words with the given row and column multisets, entries <= n.
std::vector<Monomial> monomials_with_weights(const std::vector<int>& rows,
                                             const std::vector<int>& cols, int n);

std::string monomial_str(const Monomial& m);

}  // namespace qst
