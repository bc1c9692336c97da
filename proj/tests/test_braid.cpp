#include <catch2/catch_amalgamated.hpp>

#include "braidchain/braid.hpp"

using namespace braidchain;

namespace {

int idx(int i, int j, int N) { return (i - 1) * N + (j - 1); }

SparseMat flip(int N) {
    SparseMat P(N * N);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) P.set(idx(i, j, N), idx(j, i, N), RatFunc::one());
    return P;
}

RatFunc L(const std::string& s) { return parse_ratfunc(s); }

} // namespace

TEST_CASE("group spec validation") {
    CHECK_THROWS_AS((GroupSpec{Family::Sp, 3}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((GroupSpec{Family::SL, 1}.validate()), std::invalid_argument);
    CHECK_NOTHROW((GroupSpec{Family::Sp, 4}.validate()));
}

TEST_CASE("sl2 matrix is the textbook one") {
    BraidMatrix R = build_rhat({Family::SL, 2});
    SparseMat expect(4);
    expect.set(0, 0, L("q"));
    expect.set(1, 1, L("q - q^-1"));
    expect.set(1, 2, L("1"));
    expect.set(2, 1, L("1"));
    expect.set(3, 3, L("q"));
    CHECK(R.mat == expect);
    CHECK(R.mat.nnz() == 5);
    CHECK(eval_matrix(R.mat, 1) == flip(2));

    SparseMat inv = build_rhat_inverse(R);
    SparseMat expect_inv(4);
    expect_inv.set(0, 0, L("q^-1"));
    expect_inv.set(1, 2, L("1"));
    expect_inv.set(2, 1, L("1"));
    expect_inv.set(2, 2, L("-q + q^-1"));
    expect_inv.set(3, 3, L("q^-1"));
    CHECK(inv == expect_inv);
}

TEST_CASE("braid equation and minimal polynomial") {
    for (GroupSpec g : {GroupSpec{Family::SL, 2}, GroupSpec{Family::SL, 3},
                        GroupSpec{Family::SO, 3}, GroupSpec{Family::Sp, 2}}) {
        BraidMatrix R = build_rhat(g); // construction verifies braid + minpoly
        SparseMat inv = build_rhat_inverse(R);
        CHECK(R.mat * inv == SparseMat::identity(R.mat.dim()));
        CHECK(check_braid(inv, g.N));
    }
    // SL quadratic: (R - q)(R + q^-1) = 0
    BraidMatrix R = build_rhat({Family::SL, 3});
    SparseMat I = SparseMat::identity(9);
    CHECK(((R.mat - I.scaled(L("q"))) * (R.mat + I.scaled(L("q^-1")))).is_zero());
    CHECK(R.mat.transposed() == R.mat);
}

TEST_CASE("perturbed matrix fails the braid equation") {
    BraidMatrix R = build_rhat({Family::SL, 2});
    SparseMat bad = R.mat;
    bad.add_to(0, 0, RatFunc::one()); // identity + e11 (x) e11 bump
    CHECK_FALSE(check_braid(bad, 2));
}

TEST_CASE("so3 matrix in the integer gauge") {
    BraidMatrix R = build_rhat({Family::SO, 3});
    CHECK(R.mat.dim() == 9);
    SparseMat expect(9);
    expect.set(0, 0, L("q"));
    expect.set(1, 1, L("q - q^-1"));
    expect.set(1, 3, L("1"));
    expect.set(2, 2, L("q - 1 - q^-1 + q^-2"));
    expect.set(2, 4, L("-q + q^-1"));
    expect.set(2, 6, L("q^-1"));
    expect.set(3, 1, L("1"));
    expect.set(4, 2, L("-1 + q^-2"));
    expect.set(4, 4, L("1"));
    expect.set(5, 5, L("q - q^-1"));
    expect.set(5, 7, L("1"));
    expect.set(6, 2, L("q^-1"));
    expect.set(7, 5, L("1"));
    expect.set(8, 8, L("q"));
    CHECK(R.mat == expect);
    // cubic minimal polynomial with third root q^{1-N} = q^-2
    SparseMat I = SparseMat::identity(9);
    CHECK(((R.mat - I.scaled(L("q"))) * (R.mat + I.scaled(L("q^-1"))) *
           (R.mat - I.scaled(L("q^-2"))))
              .is_zero());
}

TEST_CASE("spectral projectors: axioms and ranks") {
    struct Case {
        GroupSpec g;
        std::vector<int> ranks;
    };
    for (const Case& c : {Case{{Family::SL, 2}, {3, 1}}, Case{{Family::SL, 3}, {6, 3}},
                          Case{{Family::SO, 3}, {5, 3, 1}}, Case{{Family::Sp, 2}, {3, 0, 1}},
                          Case{{Family::SO, 4}, {9, 6, 1}}}) {
        BraidMatrix R = build_rhat(c.g);
        ProjectorSet ps = spectral_projectors(R); // verifies idempotency, ranks, completeness
        REQUIRE(ps.projectors.size() == c.ranks.size());
        SparseMat sum(R.mat.dim());
        SparseMat recompose(R.mat.dim());
        for (std::size_t i = 0; i < ps.projectors.size(); ++i) {
            CHECK(rank(ps.projectors[i].second) == c.ranks[i]);
            sum = sum + ps.projectors[i].second;
            recompose = recompose + ps.projectors[i].second.scaled(R.spectrum[i].eigenvalue);
        }
        CHECK(sum == SparseMat::identity(R.mat.dim()));
        CHECK(recompose == R.mat); // R = sum_mu c_mu P^mu
    }
}

TEST_CASE("sl2 antisymmetrizer block") {
    BraidMatrix R = build_rhat({Family::SL, 2});
    ProjectorSet ps = spectral_projectors(R);
    const SparseMat& PA = ps.by_label("A");
    // P^A = (q*1 - R)/(q + q^-1), nonzero only on the (12),(21) block
    SparseMat lagrange =
        (SparseMat::identity(4).scaled(L("q")) - R.mat).scaled(q_plus_qinv().inverse());
    CHECK(PA == lagrange);
    RatFunc d = q_plus_qinv().inverse();
    CHECK(PA.get(1, 1) == L("q^-1") * d);
    CHECK(PA.get(1, 2) == -d);
    CHECK(PA.get(2, 1) == -d);
    CHECK(PA.get(2, 2) == L("q") * d);
    CHECK(PA.get(0, 0).is_zero());
    CHECK(rank(PA) == 1);
}

TEST_CASE("assemble plus minus") {
    auto ranks_of = [](const GroupSpec& g) {
        ProjectorSet ps = spectral_projectors(build_rhat(g));
        auto [plus, minus] = assemble_pm(ps);
        return std::pair<int, int>(rank(plus), rank(minus));
    };
    CHECK(ranks_of({Family::SL, 2}) == std::pair<int, int>(3, 1));
    CHECK(ranks_of({Family::SO, 3}) == std::pair<int, int>(6, 3));
    CHECK(ranks_of({Family::Sp, 2}) == std::pair<int, int>(3, 1));
}

TEST_CASE("polynomial functions of R pass through the braid relation") {
    // f(R12) R23 R12 == R23 R12 f(R23) for f = each projector and inversion
    for (GroupSpec g : {GroupSpec{Family::SL, 2}, GroupSpec{Family::SO, 3}}) {
        BraidMatrix R = build_rhat(g);
        ProjectorSet ps = spectral_projectors(R);
        SparseMat r1 = embed_leg(R.mat, {3, g.N, 1}), r2 = embed_leg(R.mat, {3, g.N, 2});
        std::vector<SparseMat> fs;
        for (const auto& [label, P] : ps.projectors) fs.push_back(P);
        fs.push_back(build_rhat_inverse(R));
        for (const auto& F : fs)
            CHECK(embed_leg(F, {3, g.N, 1}) * r2 * r1 == r2 * r1 * embed_leg(F, {3, g.N, 2}));
    }
}

TEST_CASE("so3 metric") {
    BraidMatrix R = build_rhat({Family::SO, 3});
    ProjectorSet ps = spectral_projectors(R);
    Metric C = extract_metric(ps); // verifies the factorization identity exactly
    // antidiagonal with q-power entries, corners normalized to 1
    CHECK(C.up(1, 3) == RatFunc::one());
    CHECK(C.up(2, 2) == RatFunc::one());
    CHECK(C.up(3, 1) == L("q"));
    CHECK(C.low(1, 3) == L("q^-1"));
    CHECK(C.low(2, 2) == RatFunc::one());
    CHECK(C.low(3, 1) == RatFunc::one());
    CHECK(C.norm == L("q + 1 + q^-1"));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i + j != 4) {
                CHECK(C.up(i, j).is_zero());
                CHECK(C.low(i, j).is_zero());
            }
    // scale invariance of the defining identity: rescaled C reproduces P^t too
    const SparseMat& Pt = ps.by_label("t");
    RatFunc lam = L("q^3"), mu = L("(q)/(q + q^-1)");
    RatFunc norm2;
    for (int p = 0; p < 9; ++p) norm2 += (lam * C.upper[p]) * (mu * C.lower[p]);
    for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 9; ++c)
            CHECK(Pt.get(r, c) * norm2 == (lam * C.upper[r]) * (mu * C.lower[c]));
    // metric extraction is SO-only
    CHECK_THROWS_AS(extract_metric(spectral_projectors(build_rhat({Family::SL, 2}))),
                    std::invalid_argument);
}

TEST_CASE("sp2 degenerate antisymmetric label") {
    BraidMatrix R = build_rhat({Family::Sp, 2});
    ProjectorSet ps = spectral_projectors(R);
    CHECK(ps.by_label("a'").is_zero());
    CHECK(rank(ps.by_label("s'")) == 3);
    CHECK(rank(ps.by_label("t'")) == 1);
}

TEST_CASE("classical limit is the flip") {
    for (GroupSpec g : {GroupSpec{Family::SL, 3}, GroupSpec{Family::SO, 3},
                        GroupSpec{Family::Sp, 2}}) {
        BraidMatrix R = build_rhat(g);
        CHECK(eval_matrix(R.mat, 1) == flip(g.N));
    }
}
