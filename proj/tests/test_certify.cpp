#include <doctest.h>

#include "rnacd/certify.hpp"
#include "rnacd/design.hpp"
#include "rnacd/errors.hpp"
#include "rnacd/fold.hpp"
#include "support/oracles.hpp"

using namespace rnacd;

namespace {

LabelledTree height4_example() {
    return natural_labelling(parse_tree(oracle::full_floral_text(3, std::vector<int>(8, 2))));
}

std::set<int> heights_of(const LabelledTree& l, const std::vector<int>& positions) {
    const auto h = l.position_heights();
    std::set<int> out;
    for (int p : positions)
        out.insert(h[static_cast<std::size_t>(p - 1)]);
    return out;
}

// height -> tag parity, from the tags of one iteration
std::map<int, int> parities(const LabelledTree& l, const std::map<int, int>& tags) {
    const auto h = l.position_heights();
    std::map<int, int> out;
    for (const auto& [p, t] : tags)
        out[h[static_cast<std::size_t>(p - 1)]] = ((t % 2) + 2) % 2;
    return out;
}

std::vector<int> positions_at(const LabelledTree& l, int height) {
    std::vector<int> out;
    const auto h = l.position_heights();
    for (std::size_t p = 0; p < h.size(); ++p)
        if (h[p] == height)
            out.push_back(static_cast<int>(p) + 1);
    return out;
}

} // namespace

TEST_SUITE("certify") {

TEST_CASE("running difference") {
    const auto tags = running_difference(Sequence("GACU"), {{1, 3}, BalanceKind::GC});
    CHECK(tags == std::map<int, int>{{2, 1}, {4, 0}});
    const auto empty = running_difference(Sequence("AC"), {{}, BalanceKind::AU});
    CHECK(empty == std::map<int, int>{{1, 0}, {2, 0}});
    CHECK_THROWS_AS(running_difference(Sequence("GACU"), {{1, 2}, BalanceKind::GC}), NotBalanced);
    CHECK_THROWS_AS(running_difference(Sequence("GGCU"), {{1, 2, 3}, BalanceKind::GC}), NotBalanced);
}

TEST_CASE("running differences of the height-4 example") {
    const LabelledTree l = height4_example();
    const Sequence s = l.flatten();
    BalancedSet gc{{}, BalanceKind::GC};
    for (int p = 1; p <= static_cast<int>(s.size()); ++p)
        if (s.at(p) == 'G' || s.at(p) == 'C')
            gc.positions.push_back(p);
    const auto tags = running_difference(s, gc);
    std::vector<int> first;
    for (const auto& [p, t] : tags)
        if (first.size() < 13)
            first.push_back(t);
    CHECK(first == std::vector<int>{0, 1, 2, 2, 0, 0, 1, 1, 2, 2, 0, 0, 1});
    // the same tags from prefix sums
    int run = 0;
    for (int p = 1; p <= static_cast<int>(s.size()); ++p) {
        if (s.at(p) == 'G')
            ++run;
        else if (s.at(p) == 'C')
            --run;
        else
            REQUIRE(tags.at(p) == run);
    }
}

TEST_CASE("three iterations at the maximum height") {
    const LabelledTree l = height4_example();
    const CertificateTrace tr = run_algorithm1(l, 4);
    REQUIRE(tr.iterations.size() == 3);
    CHECK(heights_of(l, tr.iterations[0].balanced.positions) == std::set<int>{1, 3});
    CHECK(parities(l, tr.iterations[0].tags) == std::map<int, int>{{0, 0}, {2, 1}, {4, 0}});
    CHECK(heights_of(l, tr.iterations[1].balanced.positions) == std::set<int>{2});
    CHECK(parities(l, tr.iterations[1].tags) == std::map<int, int>{{0, 0}, {4, 1}});
    CHECK(heights_of(l, tr.iterations[2].balanced.positions) == std::set<int>{0});
    CHECK(tr.iterations[2].tags.empty());
    CHECK(heights_of(l, tr.iterations[2].coloured) == std::set<int>{0, 1, 2, 3});
    CHECK(tr.forced_unpaired == positions_at(l, 4));
    CHECK_FALSE(tr.forced_height_pairings.at(4));
}

TEST_CASE("two iterations at height 1 of the reduced tree") {
    const LabelledTree r = reduce_to_saturated(height4_example());
    CHECK(is_saturated(r.tree()));
    CHECK(height(r.tree()) == 3);
    const CertificateTrace tr = run_algorithm1(r, 1);
    REQUIRE(tr.iterations.size() == 2);
    CHECK(heights_of(r, tr.iterations[0].balanced.positions) == std::set<int>{0, 2});
    CHECK(parities(r, tr.iterations[0].tags) == std::map<int, int>{{1, 1}, {3, 0}});
    CHECK(heights_of(r, tr.iterations[1].balanced.positions) == std::set<int>{3});
    CHECK(tr.forced_unpaired.empty());
    CHECK(tr.forced_height_pairings.at(1));
}

TEST_CASE("lone root") {
    const CertificateTrace tr = run_algorithm1(natural_labelling(parse_tree("()")), 0);
    CHECK(tr.iterations.empty());
    CHECK_THROWS_AS(run_algorithm1(natural_labelling(parse_tree("()")), 1), Error);
}

TEST_CASE("labellings outside the hypotheses are reported") {
    const LabelledTree l(parse_tree("((*)(*))"), {"AU", "GC", "A", "AU", "A"});
    REQUIRE(l.flatten().str() == "AGACAAUU");
    try {
        run_algorithm1(l, 2);
        FAIL("expected a violation");
    } catch (const PropertyViolated& e) {
        CHECK(e.property() == 5);
        CHECK(e.iteration() == 1);
    }
}

TEST_CASE("sweep rebuilds the arc set") {
    const LabelledTree full = height4_example();
    const LabelledTree r = reduce_to_saturated(full);
    const SecondaryStructure swept = claim2_sweep(r);
    CHECK(swept == tree_to_structure(r.tree()));
    const DesignCheck d = is_design(r.flatten(), PairingModel::WC);
    REQUIRE(d.optimum);
    CHECK(swept == *d.optimum);
    CHECK_THROWS_AS(claim2_sweep(full), NotSaturated);
}

TEST_CASE("lemma cases on the prune supertree") {
    const LabelledTree l = natural_labelling(parse_tree("((()(***))(()()))"));
    REQUIRE(l.flatten().str() == "AGAUUCCCACCAUUAGU");
    const LemmaCount c3 = lemma_count(l, 1, 2, 1);
    CHECK(c3.which == LemmaCase::Ascending);
    CHECK(c3.count == 1);
    const LemmaCount c1 = lemma_count(l, 9, 2, 1);
    CHECK(c1.which == LemmaCase::SameHeightBelow);
    CHECK(c1.count == 2);
    const LemmaCount c2 = lemma_count(l, 2, 1, 2);
    CHECK(c2.which == LemmaCase::SameHeightAbove);
    CHECK(c2.count == 4);
    const LemmaCount c4 = lemma_count(l, 4, 0, 1);
    CHECK(c4.which == LemmaCase::Descending);
    CHECK(c4.count % 2 == 1);
    CHECK_THROWS_AS(lemma_count(l, 1, 1, 1), CasePreconditionUnmet);
    CHECK_THROWS_AS(lemma_count(l, 17, 0, 1), CasePreconditionUnmet);
}

TEST_CASE("claims hold across the full floral family") {
    auto family = oracle::full_floral_family(2, 4);
    for (const auto& t : oracle::full_floral_family(3, 1))
        if (t.text.find('*') != std::string::npos && height(parse_tree(t.text)) == 4)
            family.push_back(t);
    for (const auto& t : family) {
        const LabelledTree l = natural_labelling(parse_tree(t.text));
        const int h = height(l.tree());
        const CertificateTrace tr = run_algorithm1(l, h);
        REQUIRE_MESSAGE(tr.forced_unpaired == positions_at(l, h), t.text);
        const std::vector<int>& last = tr.iterations.back().coloured;
        REQUIRE(last.size() + positions_at(l, h).size() == l.flatten().size());
        for (std::size_t i = 1; i < tr.iterations.size(); ++i)
            REQUIRE(tr.iterations[i].coloured.size() > tr.iterations[i - 1].coloured.size());
        for (const auto& it : tr.iterations)
            REQUIRE(is_balanced(l.flatten(), it.balanced));

        const LabelledTree r = reduce_to_saturated(l);
        const DesignCheck d = is_design(r.flatten(), PairingModel::WC);
        REQUIRE(d.optimum);
        REQUIRE(claim2_sweep(r) == *d.optimum);
        REQUIRE(check_adjacent_heights(l));
    }
}

TEST_CASE("lemma parity rule on every legal triple") {
    for (const auto& t : oracle::full_floral_family(2, 2)) {
        // the exact counts need a flower under every vertex one level up:
        // in "(()(*))" the path from position 1 to the flower meets height 1 three times
        const bool every_vertex_flowered = t.text.find("()") == std::string::npos;
        const LabelledTree l = natural_labelling(parse_tree(t.text));
        const auto hs = l.position_heights();
        const int n = static_cast<int>(hs.size());
        const int top = height(l.tree());
        for (int n1 = 1; n1 <= n; ++n1) {
            for (int ell = 0; ell <= top; ++ell) {
                for (int h = 0; h <= top; ++h) {
                    LemmaCount c;
                    try {
                        c = lemma_count(l, n1, ell, h);
                    } catch (const CasePreconditionUnmet&) {
                        continue;
                    }
                    const int k = hs[static_cast<std::size_t>(n1 - 1)];
                    REQUIRE((c.count % 2 == 0) == (ell == k));
                    if (c.predicted < 0)
                        REQUIRE(c.count % 2 == 1);
                    else if (every_vertex_flowered)
                        REQUIRE_MESSAGE(c.count == c.predicted, t.text << " " << n1 << " " << ell << " " << h);
                }
            }
        }
    }
}

TEST_CASE("ascending count exceeds one past a flowerless vertex") {
    const LabelledTree l = natural_labelling(parse_tree("(()(*))"));
    const LemmaCount c = lemma_count(l, 1, 2, 1);
    CHECK(c.which == LemmaCase::Ascending);
    CHECK(c.predicted == 1);
    CHECK(c.count == 3);
}

TEST_CASE("adjacent heights") {
    CHECK(check_adjacent_heights(natural_labelling(parse_tree("()"))));
    CHECK(check_adjacent_heights(natural_labelling(parse_tree("(((****)(**))(()(*)))"))));
    for (int n = 1; n <= 12; ++n) {
        for (const std::string& db : oracle::all_dotbrackets(n)) {
            const DottedTree t = structure_to_tree(parse_dotbracket(db));
            std::vector<std::string> labels(t.size());
            for (std::size_t v = 0; v < t.size(); ++v)
                labels[v] = t.dots(static_cast<VertexId>(v)) == Dots::Two ? "GC" : "A";
            REQUIRE(check_adjacent_heights(LabelledTree(t, labels)));
        }
    }
}

TEST_CASE("condensed rendering names every height") {
    const LabelledTree l = height4_example();
    const std::string art = render_condensed(l, run_algorithm1(l, 4));
    CHECK(art.find("iteration 3") != std::string::npos);
    CHECK(art.find("height 4") != std::string::npos);
}
}
