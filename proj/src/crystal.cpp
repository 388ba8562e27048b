#include "qstraighten/crystal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qst {

namespace {

struct Residue {
    std::vector<std::size_t> unmatched_i;    // positions, increasing
    std::vector<std::size_t> unmatched_ip1;  // positions, increasing
};

// Single left-to-right scan equivalent to iterated deletion of (i+1, i)
// factors: letters i+1 open, letters i close.
Residue bracket_scan(const Word& w, int i) {
    Residue r;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (w[p] == i + 1) {
            r.unmatched_ip1.push_back(p);
        } else if (w[p] == i) {
            if (!r.unmatched_ip1.empty()) r.unmatched_ip1.pop_back();
            else r.unmatched_i.push_back(p);
        }
    }
    return r;
}

}  // namespace

std::optional<Word> raise(const Word& w, int i) {
    if (i < 1) throw std::invalid_argument("raise: color must be >= 1");
    Residue r = bracket_scan(w, i);
    if (r.unmatched_ip1.empty()) return std::nullopt;
    Word out = w;
    out[r.unmatched_ip1.front()] = i;
    return out;
}

std::optional<Word> lower(const Word& w, int i) {
    if (i < 1) throw std::invalid_argument("lower: color must be >= 1");
    Residue r = bracket_scan(w, i);
    if (r.unmatched_i.empty()) return std::nullopt;
    Word out = w;
    out[r.unmatched_i.back()] = i + 1;
    return out;
}

StringStats stats(const Word& w, int i) {
    Residue r = bracket_scan(w, i);
    return {static_cast<int>(r.unmatched_ip1.size()), static_cast<int>(r.unmatched_i.size())};
}

TensorFactor tensor_lower(const StringStats& u, const StringStats& v) {
    return u.epsilon < v.phi ? TensorFactor::Right : TensorFactor::Left;
}

TensorFactor tensor_raise(const StringStats& u, const StringStats& v) {
    return u.epsilon > v.phi ? TensorFactor::Left : TensorFactor::Right;
}

// ---------------------------------------------------------------- graphs ----

bool CrystalGraph::connected() const {
    if (vertices.empty()) return true;
    std::vector<std::vector<std::size_t>> adj(vertices.size());
    for (const auto& e : edges) {
        adj[static_cast<std::size_t>(e[0])].push_back(static_cast<std::size_t>(e[2]));
        adj[static_cast<std::size_t>(e[2])].push_back(static_cast<std::size_t>(e[0]));
    }
    std::vector<char> seen(vertices.size(), 0);
    std::queue<std::size_t> bfs;
    bfs.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!bfs.empty()) {
        std::size_t v = bfs.front();
        bfs.pop();
        for (std::size_t u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                bfs.push(u);
            }
    }
    return count == vertices.size();
}

namespace {

// Sort vertices by label and reindex; edges sorted for determinism.
CrystalGraph finalize(std::vector<std::string> labels,
                      std::vector<std::array<int, 3>> edges) {
    std::vector<std::size_t> order(labels.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
    std::vector<int> pos(labels.size());
    CrystalGraph g;
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        pos[order[rank]] = static_cast<int>(rank);
        g.vertices.push_back(labels[order[rank]]);
    }
    for (auto& e : edges)
        g.edges.push_back({pos[static_cast<std::size_t>(e[0])], e[1],
                           pos[static_cast<std::size_t>(e[2])]});
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

}  // namespace

CrystalGraph word_graph(int n, int m, std::size_t cap) {
    if (n < 1 || m < 0) throw std::invalid_argument("word_graph: need n >= 1, m >= 0");
    double count = std::pow(static_cast<double>(n), m);
    if (count > static_cast<double>(cap)) throw std::length_error("word_graph: n^m beyond cap");

    std::vector<Word> words{{}};
    for (int step = 0; step < m; ++step) {
        std::vector<Word> next;
        next.reserve(words.size() * static_cast<std::size_t>(n));
        for (const auto& w : words)
            for (int l = 1; l <= n; ++l) {
                Word v = w;
                v.push_back(l);
                next.push_back(std::move(v));
            }
        words = std::move(next);
    }
    std::map<Word, int> index;
    std::vector<std::string> labels;
    for (const auto& w : words) {
        index[w] = static_cast<int>(labels.size());
        labels.push_back(word_str(w));
    }
    std::vector<std::array<int, 3>> edges;
    for (const auto& w : words)
        for (int i = 1; i < n; ++i)
            if (auto v = lower(w, i)) edges.push_back({index[w], i, index[*v]});
    return finalize(std::move(labels), std::move(edges));
}

CrystalGraph component(const Word& highest, int n) {
    Word seed = highest;
    if (!is_yamanouchi(seed)) {
        Word rev(seed.rbegin(), seed.rend());
        if (!is_yamanouchi(rev)) throw std::invalid_argument("component: seed is not Yamanouchi");
        seed = std::move(rev);
    }
    if (!valid_word(seed, n)) throw std::invalid_argument("component: letters exceed n");

    // weight of a Yamanouchi word is a partition; start from the column
    // reading of its Yamanouchi tableau so the graph depends only on it
    std::vector<int> lambda;
    for (int l = 1; !seed.empty(); ++l) {
        int c = static_cast<int>(std::count(seed.begin(), seed.end(), l));
        if (c == 0) break;
        lambda.push_back(c);
    }
    Word start = lambda.empty() ? Word{}
                                : column_reading(Tabloid::from_tableau(yamanouchi_tableau(lambda)));

    std::map<Word, int> index;
    std::vector<std::string> labels;
    std::vector<std::array<int, 3>> edges;
    std::queue<Word> bfs;
    index[start] = 0;
    labels.push_back(rs_p(start).str());
    bfs.push(start);
    while (!bfs.empty()) {
        Word w = bfs.front();
        bfs.pop();
        for (int i = 1; i < n; ++i) {
            auto v = lower(w, i);
            if (!v) continue;
            auto [it, fresh] = index.try_emplace(*v, static_cast<int>(labels.size()));
            if (fresh) {
                labels.push_back(rs_p(*v).str());
                bfs.push(*v);
            }
            edges.push_back({index[w], i, it->second});
        }
    }
    return finalize(std::move(labels), std::move(edges));
}

std::string to_dot(const CrystalGraph& g) {
    std::string s = "digraph {\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        s += "  n" + std::to_string(v) + " [label=\"" + g.vertices[v] + "\"];\n";
    for (const auto& e : g.edges)
        s += "  n" + std::to_string(e[0]) + " -> n" + std::to_string(e[2]) +
             " [label=\"" + std::to_string(e[1]) + "\"];\n";
    return s + "}\n";
}

std::string to_json_string(const CrystalGraph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertices;
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges) j["edges"].push_back({e[0], e[1], e[2]});
    return j.dump();
}

}  // namespace qst
