/**
 * @file straighten.hpp
 * @brief Quantum bitableaux and the straightening of monomials and tabloids.
 *
 * A bitabloid (delta | delta') is the product, column by column from left to
 * right, of the quantum minors with row indices from a column of delta and
 * column indices from the matching column of delta'.  Bitableaux (both sides
 * semistandard of equal shape) form a linear basis; Expander computes the
 * coordinates of any homogeneous element in that basis by an exact linear
 * solve inside the graded component, one inverted matrix per grading.
 *
 * The flag algebra straightening (straighten_flag) instead rewrites a
 * quantum tabloid into quantum tableaux by the column relations: columns are
 * q-alternating, a shorter column commutes past a longer one at the price of
 * a Sylvester-type shuffle sum, and the q-Garnir shuffle sum vanishes.
 * flag_expand_oracle computes the same expansion by the linear solve, so the
 * two routes check each other.
 */
#pragma once

#include "qstraighten/combinatorics.hpp"
#include "qstraighten/qmatrix.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace qst {

struct Bitabloid {
    Tabloid left, right;

    Bitabloid(Tabloid l, Tabloid r);
};

struct Bitableau {
    Tableau left, right;

    Bitableau() = default;
    Bitableau(Tableau l, Tableau r);

    friend bool operator==(const Bitableau& a, const Bitableau& b) {
        return a.left == b.left && a.right == b.right;
    }
    friend bool operator!=(const Bitableau& a, const Bitableau& b) { return !(a == b); }
    friend bool operator<(const Bitableau& a, const Bitableau& b) {
        if (a.left != b.left) return a.left < b.left;
        return a.right < b.right;
    }
    std::string str() const { return "(" + left.str() + "|" + right.str() + ")"; }
};

struct BitabExpansion {
    std::map<Bitableau, RationalQ> terms;
};

struct FlagExpansion {
    std::map<Tableau, RationalQ> terms;
};

NCPoly bitabloid_to_ncpoly(const Bitabloid& b);
NCPoly bitableau_to_ncpoly(const Bitableau& b);

/// The quantum tableau (tau) = (y_shape(tau) | tau).
NCPoly quantum_tableau(const Tableau& tau);
/// Product of the minors on the initial rows selected by each column.
NCPoly quantum_tabloid(const Tabloid& delta);

/// Exact rank of a dense matrix over the rational function field.
int matrix_rank(std::vector<std::vector<RationalQ>> m);

/// Expands homogeneous elements in the bitableau basis.  Graded components
/// are inverted once and memoized; the cache is guarded, so one Expander may
/// be shared by concurrent workers.
class Expander {
public:
    explicit Expander(int n);

    int alphabet() const { return n_; }

    /// Unique coefficients with p = sum c * (tau|tau').  p is normalized
    /// first and must be homogeneous in both weights.
    BitabExpansion expand(const NCPoly& p);

    /// Basis labels of the graded component with the given contents.
    std::vector<Bitableau> component_labels(const std::vector<int>& rows,
                                            const std::vector<int>& cols) const;

    /// (#bitableaux, #monomials) of the component; equal by the basis
    /// property, and the expansion matrix is verified invertible.
    std::pair<int, int> component_size(const std::vector<int>& rows,
                                       const std::vector<int>& cols);

private:
    struct Component;
    std::shared_ptr<const Component> component(const std::vector<int>& rows,
                                               const std::vector<int>& cols);

    int n_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::shared_ptr<const Component>>
        cache_;
    std::mutex mutex_;
};

/// One-shot convenience wrapper around Expander.
BitabExpansion expand_in_bitableaux(const NCPoly& p, int n);

/// Straightening in the flag algebra by the column relations.  Entries of
/// delta must not exceed n.
FlagExpansion straighten_flag(const Tabloid& delta, int n);

/// Independent route: linear solve against the quantum tableaux of the
/// single shape determined by the column sizes of delta.
FlagExpansion flag_expand_oracle(const Tabloid& delta, int n);

/// The unique label whose coefficient survives at q = 0 (with value 1), or
/// null when the element lies in q times the lattice.  Throws
/// std::domain_error on a pole or when more than one label survives.
std::optional<Bitableau> q_zero_class(const BitabExpansion& e);
std::optional<Tableau> q_zero_class(const FlagExpansion& e);

struct TheoremReport {
    Word rows_word, cols_word;
    BitabExpansion expansion;
    std::optional<Bitableau> q0_class;
    std::optional<Bitableau> rs_prediction;
    bool coeffs_polynomial = false;
    bool match = false;
    std::string note;  // diagnostic when a class computation fails

    bool ok() const { return match && coeffs_polynomial; }
};

/// Expands t_{w_1 u_1} ... t_{w_k u_k} and compares the q -> 0 class with
/// the Robinson-Schensted prediction: (P(w)|P(u)) when Q(w) = Q(u), null
/// otherwise.  Also records whether all coefficients lie in K[q].
TheoremReport verify_theorem1(const Word& w, const Word& u, Expander& expander);

}  // namespace qst
