// Command line surface: exact straightening, Robinson-Schensted, crystal
// graphs and the verification suites.  Exit codes: 0 success/verified,
// 1 verification mismatch, 2 usage error.
#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qstraighten/crystal.hpp"
#include "qstraighten/straighten.hpp"
#include "qstraighten/uqaction.hpp"
#include "qstraighten/verify.hpp"

#include <cstdio>
#include <iostream>

using json = nlohmann::json;
using namespace qst;

namespace {

json tableau_json(const Tableau& t) { return json{{"rows", t.rows()}}; }
json tabloid_json(const Tabloid& t) { return json{{"columns", t.columns()}}; }

json ncpoly_json(const NCPoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json mono = json::array();
        for (const auto& g : m) mono.push_back({g.row, g.col});
        terms.push_back({{"monomial", mono}, {"coeff", c.str()}});
    }
    return terms;
}

json bitab_expansion_json(const BitabExpansion& e) {
    json arr = json::array();
    for (const auto& [b, c] : e.terms)
        arr.push_back({{"left", tableau_json(b.left)},
                       {"right", tableau_json(b.right)},
                       {"coeff", c.str()}});
    return arr;
}

json flag_expansion_json(const FlagExpansion& e) {
    json arr = json::array();
    for (const auto& [t, c] : e.terms)
        arr.push_back({{"tableau", tableau_json(t)}, {"coeff", c.str()}});
    return arr;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

Tabloid parse_tabloid(const std::string& s) {
    std::vector<std::vector<int>> cols;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(';', pos);
        if (next == std::string::npos) next = s.size();
        std::string part = s.substr(pos, next - pos);
        if (!part.empty()) cols.push_back(parse_int_list(part));
        pos = next + 1;
    }
    return Tabloid(std::move(cols));
}

int check_word(const Word& w, int n) {
    if (!valid_word(w, n)) throw CLI::ValidationError("word", "letters must lie in 1..n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quantum straightening, Robinson-Schensted and crystal graphs"};
    app.require_subcommand(1);

    std::string word_arg, word2_arg, rows_word, cols_word, shape_arg, columns_arg;
    std::string rows_arg, cols_arg;
    int n = 3, m = 2, max_n = 4, max_degree = 6, jobs = 1;
    std::uint64_t seed = 20250809;
    bool dot = false, as_json = false, word_graph_mode = false;

    auto* c_rs = app.add_subcommand("rs", "Robinson-Schensted pair of a word");
    c_rs->add_option("word", word_arg, "the word, digits or comma separated")->required();

    auto* c_pl = app.add_subcommand("plactic", "test plactic equivalence of two words");
    c_pl->add_option("word", word_arg)->required();
    c_pl->add_option("other", word2_arg)->required();

    auto* c_cr = app.add_subcommand("crystal", "crystal graph of a component or of all words");
    c_cr->add_option("-n", n, "alphabet size")->required();
    c_cr->add_option("--shape", shape_arg, "partition, e.g. 2,1");
    c_cr->add_option("--seed-word", word_arg, "Yamanouchi seed word");
    c_cr->add_flag("--word-graph", word_graph_mode, "graph of all words of length m");
    c_cr->add_option("-m", m, "word length for --word-graph");
    c_cr->add_flag("--dot", dot, "emit DOT instead of JSON");
    c_cr->add_flag("--json", as_json, "emit JSON (default)");

    auto* c_qd = app.add_subcommand("qdet", "quantum determinant");
    c_qd->add_option("-n", n, "matrix size")->required();
    c_qd->add_flag("--json", as_json);

    auto* c_qm = app.add_subcommand("qminor", "quantum minor");
    c_qm->add_option("--rows", rows_arg, "row indices, e.g. 1,2")->required();
    c_qm->add_option("--cols", cols_arg, "column indices")->required();
    c_qm->add_flag("--json", as_json);

    auto* c_st = app.add_subcommand("straighten",
                                    "expand a monomial in bitableaux and compare with the "
                                    "Robinson-Schensted prediction");
    c_st->add_option("--rows-word", rows_word, "row indices of the monomial")->required();
    c_st->add_option("--cols-word", cols_word, "column indices of the monomial")->required();
    c_st->add_option("-n", n, "alphabet size")->required();
    c_st->add_option("--max-n", max_n, "resource cap on n");
    c_st->add_option("--max-degree", max_degree, "resource cap on the degree");

    auto* c_sf = app.add_subcommand("straighten-flag", "straighten a quantum tabloid");
    c_sf->add_option("--columns", columns_arg, "columns, e.g. 1,5;2,3,6")->required();
    c_sf->add_option("-n", n, "alphabet size")->required();
    c_sf->add_option("--max-degree", max_degree, "resource cap on the total size");

    auto* c_ve = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    c_ve->add_option("suite", suite,
                     "one of theorem1|corollary|flag|bsigma|bimodule|centrality|"
                     "module-relations|figures|all")
        ->required();
    int vk = 3;
    c_ve->add_option("-n", n, "alphabet size (theorem1/corollary)");
    c_ve->add_option("-k", vk, "maximal word length (theorem1/corollary)");
    c_ve->add_option("--seed", seed, "seed for the randomized suites");
    c_ve->add_option("--jobs", jobs, "worker threads for theorem1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_rs) {
            Word w = parse_word(word_arg);
            RSPair pq = rs(w);
            json out = {{"word", word_str(w)},
                        {"p", tableau_json(pq.p)},
                        {"q", tableau_json(pq.q)}};
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (*c_pl) {
            Word w = parse_word(word_arg), u = parse_word(word2_arg);
            json out = {{"word", word_str(w)},
                        {"other", word_str(u)},
                        {"equivalent", plactic_equiv(w, u)},
                        {"p", tableau_json(rs_p(w))}};
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (*c_cr) {
            CrystalGraph g;
            if (word_graph_mode) {
                g = word_graph(n, m);
            } else if (!shape_arg.empty()) {
                std::vector<int> lambda = parse_int_list(shape_arg);
                Word seed_word = column_reading(Tabloid::from_tableau(yamanouchi_tableau(lambda)));
                check_word(seed_word, n);
                g = component(seed_word, n);
            } else if (!word_arg.empty()) {
                Word w = parse_word(word_arg);
                check_word(w, n);
                g = component(w, n);
            } else {
                throw CLI::ValidationError("crystal",
                                           "need --shape, --seed-word or --word-graph");
            }
            std::cout << (dot ? to_dot(g) : to_json_string(g) + "\n");
            return 0;
        }

        if (*c_qd || *c_qm) {
            NCPoly p = *c_qd ? qdet(n) : qminor(parse_int_list(rows_arg), parse_int_list(cols_arg));
            if (as_json) std::cout << ncpoly_json(p).dump() << "\n";
            else std::cout << p.str() << "\n";
            return 0;
        }

        if (*c_st) {
            Word w = parse_word(rows_word), u = parse_word(cols_word);
            check_word(w, n);
            check_word(u, n);
            if (n > max_n || static_cast<int>(w.size()) > max_degree)
                throw CLI::ValidationError("straighten",
                                           "beyond resource caps; raise --max-n/--max-degree");
            Expander ex(n);
            TheoremReport rep = verify_theorem1(w, u, ex);
            json out = {{"input", {{"rows_word", word_str(w)}, {"cols_word", word_str(u)}, {"n", n}}},
                        {"expansion", bitab_expansion_json(rep.expansion)},
                        {"coeffs_polynomial", rep.coeffs_polynomial},
                        {"match", rep.match}};
            out["q0_class"] = rep.q0_class
                                  ? json{{"left", tableau_json(rep.q0_class->left)},
                                         {"right", tableau_json(rep.q0_class->right)}}
                                  : json();
            out["rs_prediction"] = rep.rs_prediction
                                       ? json{{"left", tableau_json(rep.rs_prediction->left)},
                                              {"right", tableau_json(rep.rs_prediction->right)}}
                                       : json();
            if (!rep.note.empty()) out["note"] = rep.note;
            std::cout << out.dump() << "\n";
            return rep.ok() ? 0 : 1;
        }

        if (*c_sf) {
            Tabloid delta = parse_tabloid(columns_arg);
            if (delta.size() > max_degree)
                throw CLI::ValidationError("straighten-flag",
                                           "beyond resource cap; raise --max-degree");
            FlagExpansion e = straighten_flag(delta, n);
            auto cls = q_zero_class(e);
            Tableau p = rs_p(column_reading(delta));
            std::vector<int> sizes = delta.shape();
            std::sort(sizes.begin(), sizes.end(), std::greater<int>());
            bool in_shape = p.shape() == conjugate(sizes);
            bool match = in_shape ? (cls.has_value() && *cls == p) : !cls.has_value();
            json out = {{"input", tabloid_json(delta)},
                        {"n", n},
                        {"expansion", flag_expansion_json(e)},
                        {"column_reading", word_str(column_reading(delta))},
                        {"rs_prediction", in_shape ? tableau_json(p) : json()},
                        {"q0_class", cls ? tableau_json(*cls) : json()},
                        {"match", match}};
            std::cout << out.dump() << "\n";
            return match ? 0 : 1;
        }

        if (*c_ve) {
            std::vector<verify::Result> results;
            if (suite == "theorem1") results.push_back(verify::theorem1(n, vk, jobs));
            else if (suite == "corollary") results.push_back(verify::corollary(n, vk));
            else if (suite == "flag") results.push_back(verify::flag_suite(4, 3, 6));
            else if (suite == "bsigma") results.push_back(verify::bsigma());
            else if (suite == "bimodule") results.push_back(verify::bimodule_bases());
            else if (suite == "centrality") results.push_back(verify::centrality());
            else if (suite == "module-relations") results.push_back(verify::module_relations());
            else if (suite == "figures") results.push_back(verify::figures());
            else if (suite == "all") results = verify::all_suites(seed, jobs);
            else throw CLI::ValidationError("verify", "unknown suite: " + suite);
            bool all_pass = true;
            for (const auto& r : results) {
                all_pass = all_pass && r.pass;
                std::printf("%-22s %s  (%.2fs)  %s\n", r.name.c_str(),
                            r.pass ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
            }
            return all_pass ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
