#include "doctest.h"

#include "p1n/clifford.hpp"
#include "p1n/errors.hpp"

using namespace p1n;

namespace {

ExactMatrix half_sigma(int a) {
    ExactMatrix m(2, 2);
    const ExactScalar half = ExactScalar::frac(1, 2);
    switch (a) {
        case 1:
            m.at(0, 1) = half;
            m.at(1, 0) = half;
            break;
        case 2:
            m.at(0, 1) = -ExactScalar::i() * half;
            m.at(1, 0) = ExactScalar::i() * half;
            break;
        default:
            m.at(0, 0) = half;
            m.at(1, 1) = -half;
            break;
    }
    return m;
}

// 1/2 diag(sigma_a, 0) or 1/2 diag(0, sigma_a) inside a 4x4 frame.
ExactMatrix corner(int a, bool upper) {
    ExactMatrix m(4, 4);
    const ExactMatrix s = half_sigma(a);
    const std::size_t off = upper ? 0 : 2;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            m.at(off + r, off + c) = s.at(r, c);
        }
    }
    return m;
}

}  // namespace

TEST_SUITE("clifford") {

TEST_CASE("five-matrix set satisfies every pair relation") {
    const GammaSet set = build_gamma_5d();
    REQUIRE(set.matrices.size() == 5);
    REQUIRE(set.dim == 4);
    const RelationReport report = verify_clifford(set);
    CHECK(report.items.size() == 25);
    CHECK(report.pass());

    // Timelike matrix is the diagonal +/- block form; all are Hermitian in
    // the operator sense appropriate to the metric entry.
    CHECK(set.by_label(0) == ExactMatrix::diag({ExactScalar(1), ExactScalar(1),
                                                ExactScalar(-1), ExactScalar(-1)}));
}

TEST_CASE("five-matrix set obeys the product identity") {
    const auto result = check_product_constraint(build_gamma_5d());
    CHECK(result.holds_product_rule);
}

TEST_CASE("seven-matrix set: designated product holds, naive product does not") {
    const GammaSet set = build_gamma_8d();
    REQUIRE(set.matrices.size() == 7);
    REQUIRE(set.dim == 8);
    CHECK(verify_clifford(set).pass());

    const auto result = check_product_constraint(set);
    CHECK(result.holds_designated_product);
    CHECK_FALSE(result.holds_product_rule);
}

TEST_CASE("generic construction covers higher spatial counts") {
    for (int n : {1, 2, 3, 4, 5, 6, 7}) {
        CAPTURE(n);
        const GammaSet set = build_gamma_generic(n);
        CHECK(set.matrices.size() == std::size_t(n) + 1);
        CHECK(set.dim == std::size_t(1) << ((n + 1) / 2));
        CHECK(verify_clifford(set).pass());
    }
    CHECK_THROWS_AS((void)build_gamma_generic(13), resource_error);
    CHECK_THROWS_AS((void)build_gamma_generic(0), shape_error);
}

TEST_CASE("spin tensor components are Hermitian and antisymmetric") {
    const SpinTensor spin = spin_tensor(build_gamma_5d());
    CHECK(spin.dim() == 4);
    // Six stored pairs for four spatial labels.
    CHECK(spin.index_pairs().size() == 6);
    for (const auto& [k, l] : spin.index_pairs()) {
        CAPTURE(k);
        CAPTURE(l);
        CHECK(spin.component(k, l).is_hermitian());
        CHECK(spin.component(l, k) == -spin.component(k, l));
    }
    CHECK(spin.component(2, 2).is_zero());
}

TEST_CASE("spin/isospin split reproduces the corner form exactly") {
    const SpinIsospinPair split = spin_isospin_split(spin_tensor(build_gamma_5d()));
    for (int a = 1; a <= 3; ++a) {
        CAPTURE(a);
        CHECK(split.S[a - 1] == corner(a, true));
        CHECK(split.T[a - 1] == corner(a, false));
    }

    const ExactScalar q = ExactScalar::frac(3, 4);
    CHECK(split.S_sq == ExactMatrix::diag({q, q, ExactScalar(0), ExactScalar(0)}));
    CHECK(split.T_sq == ExactMatrix::diag({ExactScalar(0), ExactScalar(0), q, q}));
}

TEST_CASE("split triples close under the angular-momentum brackets") {
    const SpinIsospinPair split = spin_isospin_split(spin_tensor(build_gamma_5d()));
    const ExactScalar i = ExactScalar::i();
    for (int a = 0; a < 3; ++a) {
        const int b = (a + 1) % 3;
        const int c = (a + 2) % 3;
        CHECK(commutator(split.S[a], split.S[b]) == split.S[c].scaled(i));
        CHECK(commutator(split.T[a], split.T[b]) == split.T[c].scaled(i));
        for (int d = 0; d < 3; ++d) {
            CHECK(commutator(split.S[a], split.T[d]).is_zero());
        }
        CHECK(commutator(split.S[a], split.S_sq).is_zero());
        CHECK(commutator(split.T[a], split.T_sq).is_zero());
    }
}

TEST_CASE("label lookup rejects unknown labels") {
    const GammaSet set = build_gamma_5d();
    CHECK_THROWS_AS((void)set.by_label(9), shape_error);
}

}  // TEST_SUITE
