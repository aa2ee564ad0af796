#include <doctest.h>

#include "rnacd/classify.hpp"
#include "rnacd/errors.hpp"
#include "rnacd/fold.hpp"
#include "rnacd/structure.hpp"
#include "support/oracles.hpp"

using namespace rnacd;

namespace {

std::vector<int> as_oracle(const DottedTree& t, const Colouring& c) {
    // library vertex ids are assigned in parse order, which is the oracle's pre-order
    std::vector<int> out(t.size(), -1);
    for (std::size_t v = 0; v < t.size(); ++v)
        if (const auto col = c.at(static_cast<VertexId>(v)))
            out[v] = static_cast<int>(*col);
    return out;
}

// Rooted tree texts of every non-crossing structure of length n whose outer arc spans it.
std::vector<std::string> rooted_texts(int n) {
    std::vector<std::string> out;
    for (const std::string& db : oracle::all_dotbrackets(n)) {
        if (db.empty() || db.front() != '(' || db.back() != ')')
            continue;
        const auto p = parse_dotbracket(db).partners();
        if (p[1] != n)
            continue;
        std::string t = db;
        std::replace(t.begin(), t.end(), '.', '*');
        out.push_back(t);
    }
    return out;
}

} // namespace

TEST_SUITE("classify") {

TEST_CASE("figure 9 colouring") {
    const DottedTree t = parse_tree("((*)(*)()())");
    const auto c = find_separated_proper_colouring(t);
    REQUIRE(c);
    CHECK(is_proper(t, *c));
    CHECK(is_separated(t, *c));
    CHECK(oracle::colouring_ok(oracle::plain_tree("((*)(*)()())"), as_oracle(t, *c)));

    Colouring shown{std::vector<std::optional<Colour>>(t.size())};
    const auto& kids = t.children(t.root());
    shown.colour[kids[0]] = Colour::B;
    shown.colour[kids[1]] = Colour::W;
    shown.colour[kids[2]] = Colour::Y;
    shown.colour[kids[3]] = Colour::Y;
    CHECK(is_proper(t, shown));
    CHECK(is_separated(t, shown));
    CHECK(level(t, shown, t.root()) == 0);
    CHECK(level(t, shown, t.children(kids[0])[0]) == 1);
    CHECK(level(t, shown, t.children(kids[1])[0]) == -1);
    CHECK(level(t, shown, kids[2]) == 0);
}

TEST_CASE("colouring rules") {
    CHECK_FALSE(find_separated_proper_colouring(parse_tree("(()()()()())")));
    const DottedTree t = parse_tree("((()))");
    Colouring bb{std::vector<std::optional<Colour>>(t.size())};
    bb.colour[1] = Colour::B;
    bb.colour[2] = Colour::B;
    CHECK(is_proper(t, bb));
    CHECK(level(t, bb, 2) == 2);
    Colouring bw = bb;
    bw.colour[2] = Colour::W;
    CHECK_FALSE(is_proper(t, bw));
    Colouring missing = bb;
    missing.colour[2].reset();
    CHECK_FALSE(is_proper(t, missing));

    const DottedTree s = parse_tree("(()())");
    Colouring yy{std::vector<std::optional<Colour>>(s.size(), Colour::Y)};
    yy.colour[0].reset();
    CHECK(is_separated(s, yy));
}

TEST_CASE("search agrees with exhaustive colouring") {
    for (int n = 2; n <= 12; ++n) {
        for (const std::string& text : rooted_texts(n)) {
            const DottedTree t = parse_tree(text);
            const auto c = find_separated_proper_colouring(t);
            REQUIRE_MESSAGE(c.has_value() == oracle::any_colouring(text), text);
            if (c)
                REQUIRE(oracle::colouring_ok(oracle::plain_tree(text), as_oracle(t, *c)));
        }
    }
}

TEST_CASE("exterior tree") {
    const DottedTree e = exterior_tree(parse_tree("(()*)"));
    CHECK(e.virtual_root());
    CHECK(serialize_tree(e) == "((()*))");
    const DottedTree forest = structure_to_tree(parse_dotbracket("().()"));
    CHECK(exterior_tree(forest) == forest);
}

TEST_CASE("degree rule") {
    CHECK(saturated_designable(parse_tree("((()())(()()))")));
    CHECK(saturated_designable(parse_tree("(()()())")));
    CHECK_FALSE(saturated_designable(parse_tree("(()()()())")));
    CHECK_FALSE(saturated_designable(parse_tree("((()()()()))")));
    CHECK(saturated_designable(parse_tree("((()()()))")));
    CHECK(saturated_designable(structure_to_tree(parse_dotbracket("()()()()"))));
    CHECK_FALSE(saturated_designable(structure_to_tree(parse_dotbracket("()()()()()"))));
    CHECK_THROWS_AS(saturated_designable(parse_tree("(*)")), NotSaturated);
}

TEST_CASE("obstruction") {
    CHECK(has_obstruction(parse_tree("(()*())")));
    CHECK_FALSE(has_obstruction(parse_tree("((()())(()()))")));
    CHECK_FALSE(has_obstruction(parse_tree("(()***)")));
    CHECK(has_obstruction(parse_tree("((()(*)*))")));
    // the exterior loop is not a base pair
    CHECK_FALSE(has_obstruction(structure_to_tree(parse_dotbracket(".()()"))));
}

TEST_CASE("classify dispatch") {
    const DottedTree fig7 = parse_tree("(((****)(**))(()(*)))");
    const DesignOutcome a = classify(fig7);
    CHECK(a.verdict == Verdict::Designable);
    CHECK(a.reason == Reason::FloralNaturalLabelling);
    REQUIRE(a.design);
    CHECK(verify_design_for(*a.design, tree_to_structure(fig7), PairingModel::WC));

    const DesignOutcome b = classify(parse_tree("(()*())"));
    CHECK(b.verdict == Verdict::NotDesignable);
    CHECK(b.reason == Reason::Obstruction2Plus1);

    const DesignOutcome c = classify(parse_tree("(()()()()())"));
    CHECK(c.verdict == Verdict::NotDesignable);
    CHECK(c.reason == Reason::SaturatedDegreeRule);

    const DottedTree forest = structure_to_tree(parse_dotbracket("(.)(.)()()"));
    const DesignOutcome d = classify(forest);
    CHECK(d.verdict == Verdict::Designable);
    CHECK(d.reason == Reason::SeparatedColouring);
    REQUIRE(d.colouring);
    CHECK(is_proper(forest, *d.colouring));
    CHECK_FALSE(d.design);

    // the same shape under an outermost pair has five branches in one loop
    const DesignOutcome f = classify(parse_tree("((*)(*)()())"));
    CHECK(f.verdict == Verdict::NotDesignable);
    CHECK(f.reason == Reason::BruteForce);

    const DottedTree sat = parse_tree("(()()())");
    const DesignOutcome e = classify(sat);
    CHECK(e.verdict == Verdict::Designable);
    CHECK(e.reason == Reason::SaturatedDegreeRule);
    REQUIRE(e.design);
    CHECK(verify_design_for(*e.design, tree_to_structure(sat), PairingModel::WC));

    ClassifyOptions no_brute;
    no_brute.brute_max_n = 0;
    CHECK(classify(sat, no_brute).design == std::nullopt);
}

TEST_CASE("designs attached by classify always verify") {
    for (int n = 2; n <= 10; ++n) {
        for (const std::string& text : rooted_texts(n)) {
            const DottedTree t = parse_tree(text);
            const DesignOutcome o = classify(t);
            if (o.design)
                REQUIRE_MESSAGE(verify_design_for(*o.design, tree_to_structure(t), PairingModel::WC), text);
            if (o.colouring) {
                const DottedTree e = exterior_tree(t);
                REQUIRE(oracle::colouring_ok(oracle::plain_tree(serialize_tree(e)), as_oracle(e, *o.colouring)));
            }
        }
    }
}

TEST_CASE("shape verdicts agree with exhaustive search") {
    for (int n = 1; n <= 9; ++n) {
        for (const std::string& db : oracle::all_dotbrackets(n)) {
            const SecondaryStructure s = parse_dotbracket(db);
            const DottedTree t = structure_to_tree(s);
            const bool obstructed = has_obstruction(t);
            const bool coloured = find_separated_proper_colouring(exterior_tree(t)).has_value();
            const bool saturated = is_saturated(t);
            if (!obstructed && !coloured && !saturated)
                continue;
            const bool designable = brute_force_designable(s, PairingModel::WC, 9).has_value();
            if (obstructed)
                REQUIRE_MESSAGE(!designable, db);
            if (coloured)
                REQUIRE_MESSAGE(designable, db);
            if (saturated)
                REQUIRE_MESSAGE(saturated_designable(t) == designable, db);
        }
    }
}
}
