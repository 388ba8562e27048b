/**
 * @file uqaction.hpp
 * @brief Left (dagger) and right quantized enveloping algebra actions.
 *
 * The right action reads column indices (e_i sends a column index i+1 to i,
 * f_i sends i to i+1), the left action reads row indices.  Products are
 * handled by the Leibniz rules: e_i(PQ) = (e_i P)Q + (q^{-h_i}P)(e_i Q) and
 * f_i(PQ) = (f_i P)(q^{h_i}Q) + P(f_i Q), with q^{h_i} acting on a word as
 * the scalar q^{(#i) - (#i+1)} counted on the relevant side.
 */
#pragma once

#include "qstraighten/qmatrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qst {

enum class Side {
    Left,   // dagger action on row indices
    Right,  // action on column indices
};

/// q^{eps_i}: scales every word by q^{multiplicity of index i on the side}.
NCPoly act_qeps(int i, const NCPoly& p, Side side);

/// Chevalley raising operator extended by the Leibniz rule; normalized.
NCPoly act_e(int i, const NCPoly& p, Side side);

/// Chevalley lowering operator extended by the Leibniz rule; normalized.
NCPoly act_f(int i, const NCPoly& p, Side side);

/// Checks [e_i, f_j] = delta_ij (q^{h_i} - q^{-h_i})/(q - q^{-1}) on every
/// element of the span; on failure writes a counterexample into *diag.
bool check_module_relations(const std::vector<NCPoly>& span, int i, int j, Side side,
                            std::string* diag = nullptr);

/// Checks that all left-action operators with color i commute with all
/// right-action operators with color j on p.
bool check_bimodule_commutation(const NCPoly& p, int i, int j, std::string* diag = nullptr);

/// Combinatorial action on a column (strictly increasing subset of 1..n):
/// op 'e' replaces i+1 by i, op 'f' replaces i by i+1, null when the rule
/// does not apply.  Oracle for the action on column-shaped quantum tableaux.
std::optional<std::vector<int>> column_module_action(const std::vector<int>& c, int i, char op);

}  // namespace qst
