/**
 * @file crystal.hpp
 * @brief Combinatorial crystal operators on words and crystal graphs.
 *
 * The operators act through the bracket rule: inside the subword on the
 * letters {i, i+1}, factors (i+1, i) are deleted repeatedly; the residue
 * reads i^r (i+1)^s.  raise turns the leftmost surviving i+1 into i, lower
 * turns the rightmost surviving i into i+1, and a null result is the "0"
 * vertex at the end of a string.
 */
#pragma once

#include "qstraighten/combinatorics.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>

namespace qst {

struct StringStats {
    int epsilon = 0;  // steps to the origin of the i-string
    int phi = 0;      // steps to its end
    friend bool operator==(const StringStats& a, const StringStats& b) {
        return a.epsilon == b.epsilon && a.phi == b.phi;
    }
};

std::optional<Word> raise(const Word& w, int i);
std::optional<Word> lower(const Word& w, int i);
StringStats stats(const Word& w, int i);

enum class TensorFactor { Left, Right };

/// Which factor of u (x) v the lowering operator moves.
TensorFactor tensor_lower(const StringStats& u, const StringStats& v);
/// Dual rule for raising.
TensorFactor tensor_raise(const StringStats& u, const StringStats& v);

/// Colored directed graph with canonical string labels, vertices sorted and
/// edges sorted by (source, color, target).
struct CrystalGraph {
    std::vector<std::string> vertices;
    std::vector<std::array<int, 3>> edges;

    friend bool operator==(const CrystalGraph& a, const CrystalGraph& b) {
        return a.vertices == b.vertices && a.edges == b.edges;
    }
    bool connected() const;
};

/// Crystal graph of all n^m words; throws std::length_error past the cap.
CrystalGraph word_graph(int n, int m, std::size_t cap = 1u << 20);

/// Connected crystal graph of the irreducible module selected by the weight
/// of the seed, with vertices labelled by insertion tableaux.  The seed must
/// be a Yamanouchi word (in either reading orientation); the closure runs
/// from the column reading of the Yamanouchi tableau of its weight, so the
/// result depends only on that weight.
CrystalGraph component(const Word& highest, int n);

std::string to_dot(const CrystalGraph& g);
std::string to_json_string(const CrystalGraph& g);

}  // namespace qst
