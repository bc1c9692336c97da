#pragma once

#include "braidchain/presentation.hpp"

namespace braidchain {

/// The composite braid operators RR_+ = R_M (x) R and RR_- = R_M^{-1} (x) R
/// on (V_M (x) V_N)^(x2), R_M and R the SL braid matrices, plus their
/// projector decompositions built from tensor products of SL projectors.
struct CompositeBraid {
    int M, N;
    SparseMat r_plus, r_minus;     // RR_+ , RR_-
    SparseMat p_minus, p_plus;     // PP^- = S(x)A + A(x)S , PP^+ = S(x)S + A(x)A
    SparseMat ps1, ps2, pa1, pa2;  // S(x)S, A(x)A, A(x)S, S(x)A
};

inline CompositeBraid build_composite(int M, int N) {
    BraidMatrix RM = detail::build_sl_any(M);
    BraidMatrix RN = detail::build_sl_any(N);
    ProjectorSet psM = spectral_projectors(RM);
    ProjectorSet psN = spectral_projectors(RN);
    const SparseMat &SM = psM.by_label("S"), &AM = psM.by_label("A");
    const SparseMat &SN = psN.by_label("S"), &AN = psN.by_label("A");

    CompositeBraid cb;
    cb.M = M;
    cb.N = N;
    cb.r_plus = composite_kron(RM.mat, M, RN.mat, N);
    cb.r_minus = composite_kron(inverse(RM.mat), M, RN.mat, N);
    cb.ps1 = composite_kron(SM, M, SN, N);
    cb.ps2 = composite_kron(AM, M, AN, N);
    cb.pa1 = composite_kron(AM, M, SN, N);
    cb.pa2 = composite_kron(SM, M, AN, N);
    cb.p_minus = composite_kron(SM, M, AN, N) + composite_kron(AM, M, SN, N);
    cb.p_plus = cb.ps1 + cb.ps2;
    return cb;
}

/// Covariant Weyl/Clifford algebra on MN modes with collective indices
/// A = (alpha, a): quadratic sector from PP^-/PP^+, mixed sector
///   weyl:     A^A A+_B = delta + RR_+  A+ A   (variant -1: RR_+^{-1})
///   clifford: A^A A+_B = delta - RR_-  A+ A   (variant -1: -RR_-^{-1})
inline AlgebraPresentation gen_glm(int M, int N, AlgebraSign sign, int variant = 1) {
    if (M < 1 || N < 1) throw std::invalid_argument("M, N must be positive");
    if (variant != 1 && variant != -1) throw std::invalid_argument("variant must be +-1");
    CompositeBraid cb = build_composite(M, N);

    AlgebraPresentation pres;
    pres.group = {Family::SL, N};
    pres.M = M;
    pres.N = N;
    pres.flavors.assign(M, {parity_of(sign), variant});
    init_generators(pres);

    const int D = M * N;
    auto cr = [&](int A) { return pres.gen_index(Kind::Creator, A / N + 1, A % N + 1); };
    auto an = [&](int A) { return pres.gen_index(Kind::Annihilator, A / N + 1, A % N + 1); };

    const SparseMat& proj = sign == AlgebraSign::Weyl ? cb.p_minus : cb.p_plus;
    for (int p = 0; p < D * D; ++p) {
        Relation rel;
        rel.tag = "glm.cc";
        for (int rw = 0; rw < D * D; ++rw) {
            RatFunc c = proj.get(rw, p);
            if (!c.is_zero()) rel.add(cr(rw / D), cr(rw % D), c);
        }
        if (!rel.trivial()) pres.relations.push_back(std::move(rel));
    }
    for (int rw = 0; rw < D * D; ++rw) {
        Relation rel;
        rel.tag = "glm.aa";
        for (const auto& [cl, c] : proj.row(rw)) rel.add(an(cl % D), an(cl / D), c);
        if (!rel.trivial()) pres.relations.push_back(std::move(rel));
    }

    SparseMat S = sign == AlgebraSign::Weyl ? cb.r_plus : cb.r_minus.scaled(-RatFunc::one());
    if (variant == -1)
        S = sign == AlgebraSign::Weyl ? inverse(cb.r_plus)
                                      : inverse(cb.r_minus).scaled(-RatFunc::one());
    for (int A = 0; A < D; ++A)
        for (int B = 0; B < D; ++B) {
            Relation rel;
            rel.tag = "glm.am";
            rel.add(an(A), cr(B), RatFunc::one());
            if (A == B) rel.constant = -RatFunc::one();
            for (int C = 0; C < D; ++C)
                for (int E = 0; E < D; ++E) {
                    RatFunc c = S.get(A * D + C, B * D + E);
                    if (!c.is_zero()) rel.add(cr(C), an(E), -c);
                }
            pres.relations.push_back(std::move(rel));
        }
    return pres;
}

/// The same algebra presented over chain indices (alpha, a): per-copy SL
/// relations, R-braided cross relations, and mixed relations whose diagonal
/// carries the extra (q - q^-1) ladder sum over higher (weyl) or lower
/// (clifford) copies. Verifies sector-by-sector span equality against the
/// collective-index presentation before returning; a mismatch throws.
inline AlgebraPresentation expand_glm(const AlgebraPresentation& glm) {
    const int M = glm.M, N = glm.N;
    if (glm.flavors.empty() || glm.flavors.front().variant != 1)
        throw std::invalid_argument("expansion is defined for the primary braiding variant");
    AlgebraSign sign = glm.flavors.front().parity == 0 ? AlgebraSign::Weyl : AlgebraSign::Clifford;

    BraidMatrix RN = detail::build_sl_any(N);
    ProjectorSet psN = spectral_projectors(RN);
    SparseMat Rinv = inverse(RN.mat);
    const SparseMat& proj = sign == AlgebraSign::Weyl ? psN.by_label("A") : psN.by_label("S");
    // Creators braid across copies with R (weyl) / R^-1 (clifford); the
    // annihilator sector of the same algebra braids with the inverse matrix.
    const SparseMat& cross_cc = sign == AlgebraSign::Weyl ? RN.mat : Rinv;
    const SparseMat& cross_aa = sign == AlgebraSign::Weyl ? Rinv : RN.mat;
    RatFunc cross_sign = sign == AlgebraSign::Weyl ? -RatFunc::one() : RatFunc::one();

    AlgebraPresentation out;
    out.group = glm.group;
    out.M = M;
    out.N = N;
    out.flavors = glm.flavors;
    init_generators(out);

    for (int a = 1; a <= M; ++a) {
        detail::add_projector_creator_relations(out, proj, a, "exp.cc.same");
        detail::add_projector_annihilator_relations(out, proj, a, "exp.aa.same");
    }
    for (int a = 1; a <= M; ++a)
        for (int b = a + 1; b <= M; ++b)
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j) {
                    Relation cc, aa;
                    cc.tag = "exp.cc.cross";
                    aa.tag = "exp.aa.cross";
                    cc.add(out.gen_index(Kind::Creator, a, i), out.gen_index(Kind::Creator, b, j),
                           RatFunc::one());
                    aa.add(out.gen_index(Kind::Annihilator, a, j),
                           out.gen_index(Kind::Annihilator, b, i), RatFunc::one());
                    for (int h = 1; h <= N; ++h)
                        for (int k = 1; k <= N; ++k) {
                            RatFunc chk_ij =
                                cross_cc.get((h - 1) * N + (k - 1), (i - 1) * N + (j - 1));
                            if (!chk_ij.is_zero())
                                cc.add(out.gen_index(Kind::Creator, b, h),
                                       out.gen_index(Kind::Creator, a, k), cross_sign * chk_ij);
                            RatFunc cij_hk =
                                cross_aa.get((i - 1) * N + (j - 1), (h - 1) * N + (k - 1));
                            if (!cij_hk.is_zero())
                                aa.add(out.gen_index(Kind::Annihilator, b, k),
                                       out.gen_index(Kind::Annihilator, a, h),
                                       cross_sign * cij_hk);
                        }
                    out.relations.push_back(std::move(cc));
                    out.relations.push_back(std::move(aa));
                }

    // mixed sector: off-diagonal pairs braid with -+R; the diagonal carries
    // q^{+-1} R plus the (q - q^-1) ladder over beta > alpha (weyl) or
    // beta < alpha (clifford)
    RatFunc lam = q_minus_qinv();
    RatFunc offdiag = sign == AlgebraSign::Weyl ? -RatFunc::one() : RatFunc::one();
    RatFunc diag = sign == AlgebraSign::Weyl ? -RatFunc::q(1) : RatFunc::q(-1);
    for (int a = 1; a <= M; ++a)
        for (int b = 1; b <= M; ++b)
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j) {
                    Relation rel;
                    rel.tag = a == b ? "exp.am.diag" : "exp.am.offdiag";
                    rel.add(out.gen_index(Kind::Annihilator, a, i),
                            out.gen_index(Kind::Creator, b, j), RatFunc::one());
                    if (a != b) {
                        for (int h = 1; h <= N; ++h)
                            for (int k = 1; k <= N; ++k) {
                                RatFunc r = RN.mat.get((i - 1) * N + (h - 1),
                                                       (j - 1) * N + (k - 1));
                                if (!r.is_zero())
                                    rel.add(out.gen_index(Kind::Creator, b, h),
                                            out.gen_index(Kind::Annihilator, a, k), offdiag * r);
                            }
                    } else {
                        if (i == j) rel.constant = -RatFunc::one();
                        for (int h = 1; h <= N; ++h)
                            for (int k = 1; k <= N; ++k) {
                                RatFunc r = RN.mat.get((i - 1) * N + (h - 1),
                                                       (j - 1) * N + (k - 1));
                                if (r.is_zero()) continue;
                                rel.add(out.gen_index(Kind::Creator, a, h),
                                        out.gen_index(Kind::Annihilator, a, k), diag * r);
                                int lo = sign == AlgebraSign::Weyl ? a + 1 : 1;
                                int hi = sign == AlgebraSign::Weyl ? M : a - 1;
                                for (int c = lo; c <= hi; ++c)
                                    rel.add(out.gen_index(Kind::Creator, c, h),
                                            out.gen_index(Kind::Annihilator, c, k), -lam * r);
                            }
                    }
                    out.relations.push_back(std::move(rel));
                }

    // the two presentations must span the same relation space, sector by sector
    const int G = int(glm.generators.size());
    auto sector_of = [&](const Relation& r) {
        const auto& w = r.quad.begin()->first;
        Kind k1 = glm.generators[w.first].kind, k2 = glm.generators[w.second].kind;
        if (k1 == Kind::Creator && k2 == Kind::Creator) return 0;
        if (k1 == Kind::Annihilator && k2 == Kind::Annihilator) return 1;
        return 2;
    };
    for (int sector = 0; sector < 3; ++sector) {
        EchelonSpan sa, sb;
        for (const auto& r : glm.relations)
            if (sector_of(r) == sector) sa.add(relation_vector(r, G));
        for (const auto& r : out.relations)
            if (sector_of(r) == sector) sb.add(relation_vector(r, G));
        if (!(sa == sb))
            throw std::logic_error("collective and chain-indexed relation spans differ in sector " +
                                   std::to_string(sector));
    }
    return out;
}

} // namespace braidchain
