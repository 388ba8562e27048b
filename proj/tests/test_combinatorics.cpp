#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qstraighten/combinatorics.hpp"

#include <map>
#include <set>

using namespace qst;

namespace {

Tableau tab(std::vector<std::vector<int>> rows) { return Tableau(std::move(rows)); }

std::vector<Word> all_words(int n, int len) {
    std::vector<Word> out{{}};
    for (int i = 0; i < len; ++i) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (int l = 1; l <= n; ++l) {
                Word v = w;
                v.push_back(l);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("rs worked example") {
    RSPair pq = rs(parse_word("2143512"));
    CHECK(pq.p == tab({{1, 1, 2}, {2, 3, 5}, {4}}));
    CHECK(pq.q == tab({{1, 3, 5}, {2, 4, 7}, {6}}));
    CHECK(pq.q.is_standard());
}

TEST_CASE("rs small cases") {
    RSPair e = rs({});
    CHECK(e.p.empty());
    CHECK(e.q.empty());
    RSPair pq = rs(parse_word("213"));
    CHECK(pq.p == tab({{1, 3}, {2}}));
    CHECK(pq.q == tab({{1, 3}, {2}}));
    CHECK(rs_p(parse_word("312")) == tab({{1, 2}, {3}}));
}

TEST_CASE("rs shapes agree and map is injective (exhaustive n<=3, len<=4)") {
    for (int n = 1; n <= 3; ++n) {
        std::set<std::pair<std::string, std::string>> images;
        for (int len = 0; len <= 4; ++len) {
            for (const auto& w : all_words(n, len)) {
                RSPair pq = rs(w);
                CHECK(pq.p.shape() == pq.q.shape());
                CHECK(pq.q.is_standard());
                CHECK(images.insert({pq.p.str(), pq.q.str()}).second);
            }
        }
    }
}

TEST_CASE("plactic equivalence") {
    CHECK(plactic_equiv(parse_word("213"), parse_word("231")));
    CHECK(plactic_equiv(parse_word("2143512"), parse_word("2143512")));
    CHECK_FALSE(plactic_equiv(parse_word("12"), parse_word("21")));
}

TEST_CASE("plactic equivalence is an equivalence relation") {
    auto words = all_words(3, 4);
    for (std::size_t a = 0; a < words.size(); a += 7)
        for (std::size_t b = 0; b < words.size(); b += 11)
            for (std::size_t c = 0; c < words.size(); c += 13) {
                const Word &w = words[a], &u = words[b], &v = words[c];
                CHECK(plactic_equiv(w, w));
                if (plactic_equiv(w, u)) CHECK(plactic_equiv(u, w));
                if (plactic_equiv(w, u) && plactic_equiv(u, v)) CHECK(plactic_equiv(w, v));
            }
}

TEST_CASE("yamanouchi words") {
    CHECK(is_yamanouchi(parse_word("121")));
    CHECK(is_yamanouchi({}));
    CHECK(is_yamanouchi(parse_word("211")));
    // the column reading of any Yamanouchi tableau is Yamanouchi
    CHECK(is_yamanouchi(parse_word("21")));
    CHECK(is_yamanouchi(parse_word("2121")));
    CHECK_FALSE(is_yamanouchi(parse_word("12")));
    CHECK_FALSE(is_yamanouchi(parse_word("122")));
    CHECK_FALSE(is_yamanouchi(parse_word("3")));
}

TEST_CASE("yamanouchi tableaux") {
    CHECK(yamanouchi_tableau({2, 1}) == tab({{1, 1}, {2}}));
    CHECK(yamanouchi_tableau({1, 1, 1}) == tab({{1}, {2}, {3}}));
    CHECK(yamanouchi_tableau({3, 2}) == tab({{1, 1, 1}, {2, 2}}));
    CHECK_THROWS_AS(yamanouchi_tableau({1, 2}), std::invalid_argument);
}

TEST_CASE("unique yamanouchi word per recording tableau (n=3, len<=5)") {
    std::map<int, std::map<std::string, int>> hits;  // length -> Q -> count
    for (int len = 0; len <= 5; ++len)
        for (const auto& w : all_words(3, len))
            if (is_yamanouchi(w)) ++hits[len][rs(w).q.str()];
    for (int len = 0; len <= 5; ++len) {
        std::size_t expected = 0;
        for (const auto& t : standard_tableaux(len, 3)) {
            ++expected;
            auto it = hits[len].find(t.str());
            REQUIRE(it != hits[len].end());
            CHECK(it->second == 1);
        }
        if (len == 0) expected = 1;  // the empty tableau
        CHECK(hits[len].size() == expected);
    }
}

TEST_CASE("column reading") {
    Tabloid d({{1, 5}, {2, 3, 6}});
    CHECK(column_reading(d) == parse_word("51632"));
    CHECK(column_reading(Tabloid({{1, 3, 4}})) == parse_word("431"));
    CHECK(column_reading(Tabloid()).empty());
}

TEST_CASE("enumerate tabloids") {
    CHECK(enumerate_tabloids({1}, 2).size() == 2);
    CHECK(enumerate_tabloids({2}, 3).size() == 3);
    auto ts = enumerate_tabloids({2, 1}, 2);
    REQUIRE(ts.size() == 2);
    CHECK(ts[0] == Tabloid({{1, 2}, {1}}));
    CHECK(ts[1] == Tabloid({{1, 2}, {2}}));
}

TEST_CASE("b_sigma label sets") {
    auto b_id = b_sigma_labels({2, 1}, {1, 2}, 3);
    CHECK(b_id.size() == 8);
    auto b_sw = b_sigma_labels({2, 1}, {2, 1}, 3);
    CHECK(b_sw.size() == 8);
    CHECK(b_sigma_labels({1}, {1}, 4).size() == 4);
    // |B_sigma| equals the number of semistandard tableaux of shape lambda
    CHECK(semistandard_tableaux({2, 1}, 3).size() == 8);
}

TEST_CASE("|b_sigma| independent of sigma") {
    std::vector<std::vector<int>> shapes = {{2, 1}, {2, 2}, {3, 1}, {1, 1}};
    for (const auto& lambda : shapes) {
        auto conj = conjugate(lambda);
        std::vector<int> sigma(conj.size());
        for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = static_cast<int>(i) + 1;
        std::set<std::size_t> sizes;
        do {
            sizes.insert(b_sigma_labels(lambda, sigma, 3).size());
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        CHECK(sizes.size() == 1);
        CHECK(*sizes.begin() == semistandard_tableaux(lambda, 3).size());
    }
}

TEST_CASE("tabloid/tableau conversions") {
    Tableau t = tab({{1, 1, 2}, {2, 3, 5}, {4}});
    Tabloid d = Tabloid::from_tableau(t);
    CHECK(d.shape() == std::vector<int>{3, 2, 2});
    REQUIRE(d.as_tableau().has_value());
    CHECK(*d.as_tableau() == t);
    CHECK_FALSE(Tabloid({{2}, {1}}).as_tableau().has_value());
    CHECK_FALSE(Tabloid({{1}, {1, 2}}).as_tableau().has_value());
}

TEST_CASE("shape utilities") {
    CHECK(conjugate({2, 1}) == std::vector<int>{2, 1});
    CHECK(conjugate({3, 2}) == std::vector<int>{2, 2, 1});
    CHECK(conjugate({}) == std::vector<int>{});
    CHECK(is_partition({3, 3, 1}));
    CHECK_FALSE(is_partition({1, 2}));
    CHECK(partitions_of(4, 2).size() == 3);
    CHECK(partitions_of(0, 3).size() == 1);
    CHECK(semistandard_tableaux({2, 2}, 4).size() == 20);
}

TEST_CASE("word parsing") {
    CHECK(parse_word("2143512") == Word{2, 1, 4, 3, 5, 1, 2});
    CHECK(parse_word("10,2,11") == Word{10, 2, 11});
    CHECK(word_str(Word{10, 2, 11}) == "10,2,11");
    CHECK(word_str(Word{2, 1, 3}) == "213");
    CHECK_THROWS_AS(parse_word("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("0"), std::invalid_argument);
    CHECK(valid_word({1, 2, 3}, 3));
    CHECK_FALSE(valid_word({1, 4}, 3));
}
