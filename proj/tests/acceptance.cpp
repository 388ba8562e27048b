// Acceptance harness: one pass/fail line per criterion, exact structural
// equality everywhere, stated runtime budgets enforced.
#include "qstraighten/crystal.hpp"
#include "qstraighten/straighten.hpp"
#include "qstraighten/uqaction.hpp"
#include "qstraighten/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace qst;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(const std::string& id, double budget_seconds,
               const std::function<std::pair<bool, std::string>()>& body) {
    auto t0 = Clock::now();
    bool pass = false;
    std::string detail;
    try {
        auto [p, d] = body();
        pass = p;
        detail = std::move(d);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > budget_seconds) {
        pass = false;
        detail += " [over the runtime budget]";
    }
    if (!pass) ++failures;
    std::printf("%-5s %s  (%.3fs of %gs)  %s\n", id.c_str(), pass ? "PASS" : "FAIL", secs,
                budget_seconds, detail.c_str());
    std::fflush(stdout);
}

Tableau tab(std::vector<std::vector<int>> rows) { return Tableau(std::move(rows)); }

std::multiset<std::string> coeffs_of(const std::map<Bitableau, RationalQ>& terms) {
    std::multiset<std::string> out;
    for (const auto& [k, c] : terms) out.insert(c.str());
    return out;
}

std::multiset<std::string> coeffs_of(const std::map<Tableau, RationalQ>& terms) {
    std::multiset<std::string> out;
    for (const auto& [k, c] : terms) out.insert(c.str());
    return out;
}

}  // namespace

int main() {
    criterion("AC-1", 1.0, []() -> std::pair<bool, std::string> {
        NCPoly p = mul(mul(NCPoly::generator(2, 3), NCPoly::generator(1, 1)),
                       NCPoly::generator(3, 2));
        BitabExpansion e = expand_in_bitableaux(p, 3);
        if (e.terms.size() != 6) return {false, "expected 6 terms"};
        std::multiset<std::string> want{"q^3", "-q^3", "1 - q^2 + q^4", "q^4", "q^5", "-q^5"};
        if (coeffs_of(e.terms) != want) return {false, "coefficient multiset differs"};
        auto cls = q_zero_class(e);
        Bitableau expect(tab({{1, 3}, {2}}), tab({{1, 2}, {3}}));
        if (!cls || *cls != expect) return {false, "class at q=0 differs"};
        RationalQ c = e.terms.at(expect);
        if (c.value_at_zero() != 1) return {false, "surviving value is not 1"};
        return {true, "6 terms, class ([[1,3],[2]]|[[1,2],[3]])"};
    });

    criterion("AC-2", 5.0, []() -> std::pair<bool, std::string> {
        Tabloid delta(std::vector<std::vector<int>>{{1, 5}, {2, 3, 6}});
        FlagExpansion e = straighten_flag(delta, 6);
        if (e.terms.size() != 5) return {false, "expected 5 terms"};
        std::multiset<std::string> want{"1 - q^2", "-q + q^3", "q", "-q^2", "-q^4"};
        if (coeffs_of(e.terms) != want) return {false, "coefficient multiset differs"};
        Tableau survivor = tab({{1, 2}, {3, 6}, {5}});
        if (e.terms.at(survivor) != RationalQ::parse("1 - q^2"))
            return {false, "the 1-q^2 term sits on the wrong tableau"};
        if (rs_p(parse_word("51632")) != survivor)
            return {false, "survivor is not the insertion tableau of 51632"};
        return {true, "5 terms, survivor [[1,2],[3,6],[5]] = P(51632)"};
    });

    criterion("AC-3", 300.0, []() -> std::pair<bool, std::string> {
        verify::Result a = verify::theorem1(2, 4, 1);
        if (!a.pass) return {false, a.detail};
        verify::Result b = verify::theorem1(3, 3, 1);
        if (!b.pass) return {false, b.detail};
        return {true, a.detail + "; " + b.detail};
    });

    criterion("AC-4", 60.0, []() -> std::pair<bool, std::string> {
        verify::Result r = verify::corollary(3, 3);
        return {r.pass, r.detail};
    });

    criterion("AC-5", 10.0, []() -> std::pair<bool, std::string> {
        verify::Result r = verify::centrality();
        return {r.pass, r.detail};
    });

    criterion("AC-6", 1.0, []() -> std::pair<bool, std::string> {
        verify::Result r = verify::figures();
        return {r.pass, r.detail};
    });

    criterion("AC-7", 0.001, []() -> std::pair<bool, std::string> {
        Word w = parse_word("21112211112");
        auto up = raise(w, 1);
        auto down = lower(w, 1);
        if (!up || *up != parse_word("21112211111")) return {false, "raising differs"};
        if (!down || *down != parse_word("21112211122")) return {false, "lowering differs"};
        return {true, "both displayed images reproduced"};
    });

    criterion("AC-8", 5.0, []() -> std::pair<bool, std::string> {
        NCPoly image = act_f(1, quantum_tableau(tab({{1, 1}, {3}})), Side::Right);
        BitabExpansion e = expand_in_bitableaux(image, 3);
        Tableau y = yamanouchi_tableau({2, 1});
        std::map<Bitableau, RationalQ> expected;
        expected[Bitableau(y, tab({{1, 2}, {3}}))] = RationalQ::parse("1 + q^2");
        expected[Bitableau(y, tab({{1, 3}, {2}}))] = RationalQ::parse("-q^3");
        if (e.terms != expected) return {false, "expansion differs"};
        return {true, "(1+q^2)([[1,2],[3]]) - q^3([[1,3],[2]])"};
    });

    criterion("AC-9", 600.0, []() -> std::pair<bool, std::string> {
        std::vector<verify::Result> rs;
        rs.push_back(verify::crystal_rs_compat());
        rs.push_back(verify::crystal_inverse_pairs());
        rs.push_back(verify::tensor_vs_bracket());
        rs.push_back(verify::normalize_confluence(20250809));
        rs.push_back(verify::weight_preservation(20250810));
        rs.push_back(verify::bimodule_commutation_suite(20250811));
        rs.push_back(verify::module_relations());
        rs.push_back(verify::hz_rank());
        rs.push_back(verify::bsigma());
        rs.push_back(verify::bimodule_bases());
        rs.push_back(verify::flag_suite(4, 3, 6));
        bool all = true;
        for (const auto& r : rs) {
            std::printf("      %-22s %s  (%.2fs)  %s\n", r.name.c_str(),
                        r.pass ? "pass" : "FAIL", r.seconds, r.detail.c_str());
            all = all && r.pass;
        }
        return {all, std::to_string(rs.size()) + " property suites"};
    });

    if (failures == 0) std::printf("all acceptance criteria passed\n");
    else std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
