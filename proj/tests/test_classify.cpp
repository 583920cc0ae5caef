#include "doctest.h"

#include "p1n/classify.hpp"
#include "p1n/errors.hpp"

using namespace p1n;

namespace {

RepContent content_of(Equation eq) { return classify(build_equation_spec(eq, 1.0)); }

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("equation names round-trip") {
    for (Equation eq : all_equations()) {
        CAPTURE(equation_name(eq));
        REQUIRE(parse_equation(equation_name(eq)).has_value());
        CHECK(*parse_equation(equation_name(eq)) == eq);
    }
    CHECK_FALSE(parse_equation("dirac").has_value());
    CHECK_FALSE(parse_equation("").has_value());
}

TEST_CASE("four-component equation splits into opposite-label halves") {
    const RepContent content = content_of(Equation::dirac18a);
    REQUIRE(content.blocks.size() == 2);
    CHECK(content.blocks[0] == RepBlock{+1, 1, 0, 1});
    CHECK(content.blocks[1] == RepBlock{-1, 0, 1, 1});
    CHECK(content.redundant.empty());
    CHECK(content.str() == "D+(1/2,0) (+) D-(0,1/2)");
    CHECK_FALSE(is_ptc_pattern(content));
}

TEST_CASE("flipping the mass-term sign swaps the energy labels") {
    const RepContent content = classify_dirac18b();
    REQUIRE(content.blocks.size() == 2);
    CHECK(content.blocks[0] == RepBlock{+1, 0, 1, 1});
    CHECK(content.blocks[1] == RepBlock{-1, 1, 0, 1});
    CHECK(content == content_of(Equation::dirac18b));
    CHECK_FALSE(is_ptc_pattern(content));
}

TEST_CASE("eight-component equation carries the full quadruple") {
    const RepContent content = content_of(Equation::dirac26);
    REQUIRE(content.blocks.size() == 4);
    CHECK(content.blocks[0] == RepBlock{+1, 1, 0, 1});
    CHECK(content.blocks[1] == RepBlock{+1, 0, 1, 1});
    CHECK(content.blocks[2] == RepBlock{-1, 1, 0, 1});
    CHECK(content.blocks[3] == RepBlock{-1, 0, 1, 1});
    CHECK(content.redundant.empty());
    CHECK(is_ptc_pattern(content));
}

TEST_CASE("6x6 trilinear equation: scalar pair plus redundant components") {
    const RepContent content = classify_kdp6();
    REQUIRE(content.blocks.size() == 2);
    CHECK(content.blocks[0] == RepBlock{+1, 0, 0, 1});
    CHECK(content.blocks[1] == RepBlock{-1, 0, 0, 1});
    REQUIRE(content.redundant.size() == 1);
    CHECK(content.redundant[0] == RedundantBlock{1, 1, 1});
    CHECK(content == content_of(Equation::kdp6));
    CHECK(is_ptc_pattern(content));
}

TEST_CASE("15x15 trilinear equation: eight principal, seven redundant") {
    const RepContent content = content_of(Equation::kdp15);
    REQUIRE(content.blocks.size() == 2);
    CHECK(content.blocks[0] == RepBlock{+1, 1, 1, 1});
    CHECK(content.blocks[1] == RepBlock{-1, 1, 1, 1});
    REQUIRE(content.redundant.size() == 3);
    CHECK(content.redundant[0] == RedundantBlock{2, 0, 1});
    CHECK(content.redundant[1] == RedundantBlock{0, 2, 1});
    CHECK(content.redundant[2] == RedundantBlock{0, 0, 1});

    std::size_t principal = 0;
    for (const auto& b : content.blocks) {
        principal += std::size_t(b.mult) * (b.twice_s + 1) * (b.twice_t + 1);
    }
    std::size_t redundant = 0;
    for (const auto& b : content.redundant) {
        redundant += std::size_t(b.mult) * (b.twice_s + 1) * (b.twice_t + 1);
    }
    CHECK(principal == 8);
    CHECK(redundant == 7);
    CHECK(is_ptc_pattern(content));
}

TEST_CASE("mirror pattern test is exact about multiplicities") {
    // A quadruple with one member missing must fail.
    RepContent broken;
    broken.blocks = {RepBlock{+1, 1, 0, 1}, RepBlock{-1, 1, 0, 1}, RepBlock{+1, 0, 1, 1}};
    broken.dim = 6;
    CHECK_FALSE(is_ptc_pattern(broken));

    // The degenerate s == t case needs only the +/- pair.
    RepContent pair;
    pair.blocks = {RepBlock{+1, 1, 1, 2}, RepBlock{-1, 1, 1, 2}};
    pair.dim = 16;
    CHECK(is_ptc_pattern(pair));
}

TEST_CASE("canonical JSON rendering is stable") {
    const auto j = rep_content_json(content_of(Equation::dirac18a));
    CHECK(j.dump() ==
          R"({"blocks":[{"epsilon":1,"s":"1/2","t":"0","mult":1},)"
          R"({"epsilon":-1,"s":"0","t":"1/2","mult":1}],"redundant":[]})");
}

TEST_CASE("half-integer rendering") {
    CHECK(half_integer_str(0) == "0");
    CHECK(half_integer_str(1) == "1/2");
    CHECK(half_integer_str(2) == "1");
    CHECK(half_integer_str(3) == "3/2");
}

TEST_CASE("kappa scaling does not change the content") {
    CHECK(classify(build_equation_spec(Equation::dirac26, 3.5)) ==
          content_of(Equation::dirac26));
    CHECK_THROWS_AS((void)build_equation_spec(Equation::dirac26, 0.0), contract_error);
}

}  // TEST_SUITE
