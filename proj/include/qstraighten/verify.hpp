/**
 * @file verify.hpp
 * @brief Named verification suites behind the command line and the
 *        acceptance harness.  Each suite reruns a statement of the theory
 *        mechanically at desk scale and reports pass/fail with a count.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qst::verify {

struct Result {
    std::string name;
    bool pass = false;
    std::string detail;   // counts, or the first counterexample
    double seconds = 0.0;
};

/// Monomial congruence against the Robinson-Schensted prediction for all
/// pairs of words of each length up to max_k; also checks that every
/// expansion coefficient is a polynomial in q.
Result theorem1(int n, int max_k, int jobs = 1);

/// Diagonal monomials are congruent exactly when plactic equivalent.
Result corollary(int n, int max_k);

/// Flag rewriting equals the linear-solve route, and the q -> 0 class
/// follows the shape of the inserted column reading, over every tabloid
/// with at most max_cols columns, entries <= n, total size <= max_size.
Result flag_suite(int n, int max_cols, int max_size);

/// Basis property and sigma-independence of the tabloid label sets for
/// lambda = (2,1), n = 3, both column orders.
Result bsigma();

/// Bimodule bases for lambda in {(2), (1,1)}, n = 2: cardinality, linear
/// independence, and q -> 0 labels.
Result bimodule_bases();

/// The quantum determinant is central, n in {2, 3}.
Result centrality();

/// Chevalley commutation on generator and degree-2 spans, n <= 3, both sides.
Result module_relations();

/// Frozen crystal graphs: the 8-vertex graph of the (2,1) module, the
/// 20-vertex connected graph of the (2,2) module over four letters, and the
/// two-rowed column graph over four letters.
Result figures();

// ------------------------------------------------------ property suites ----

/// Raising preserves the recording tableau and is plactic compatible.
Result crystal_rs_compat();
/// lower and raise are mutually inverse where defined (n <= 3, length <= 6).
Result crystal_inverse_pairs();
/// The tensor rule reproduces the bracket rule on every split point.
Result tensor_vs_bracket();
/// Random-order reduction reaches the leftmost-strategy normal form.
Result normalize_confluence(std::uint64_t seed);
/// Rewriting never changes the row or column weight of a word.
Result weight_preservation(std::uint64_t seed);
/// Left and right actions commute on random elements.
Result bimodule_commutation_suite(std::uint64_t seed);
/// Graded components are square and their expansion matrices invertible.
Result hz_rank();

/// Everything above, in a fixed order.
std::vector<Result> all_suites(std::uint64_t seed, int jobs);

}  // namespace qst::verify
