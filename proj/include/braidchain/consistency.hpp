#pragma once
#include "braidchain/glm.hpp"
#include "braidchain/rewrite.hpp"

namespace braidchain {

// ---------------------------------------------------------------------------
// Lemma-level admissibility with the obstruction witness

struct Lemma1Result {
    AdmissibilityVerdict verdict;
    // P^{-+}(1 + S) for S = -(c)^{-1} R with c the first required-sign
    // eigenvalue; zero exactly when the algebra is admissible
    SparseMat witness;
};

inline Lemma1Result check_lemma1(const GroupSpec& group, AlgebraSign sign) {
    BraidMatrix R = build_rhat(group);
    ProjectorSet ps = spectral_projectors(R);
    Lemma1Result res{check_admissibility(R, sign), SparseMat(R.mat.dim())};

    SparseMat bundle(R.mat.dim());
    for (std::size_t i = 0; i < R.spectrum.size(); ++i) {
        int want = sign == AlgebraSign::Weyl ? -1 : +1;
        if (R.spectrum[i].eigenvalue.sign_near_one() == want)
            bundle = bundle + ps.projectors[i].second;
    }
    if (!res.verdict.required_sign_lines.empty()) {
        RatFunc b = -res.verdict.required_sign_lines.front().eigenvalue.inverse();
        res.witness =
            bundle * (SparseMat::identity(R.mat.dim()) + R.mat.scaled(b));
    }
    if (res.verdict.admissible != res.witness.is_zero())
        throw std::logic_error("admissibility verdict and witness disagree");
    return res;
}

// ---------------------------------------------------------------------------
// uniqueness of the braiding: R12 V23 R12 == R23 V12 R23

inline bool check_prop1(const SparseMat& V, const SparseMat& R, int leg_dim) {
    if (V.dim() != R.dim()) throw std::invalid_argument("check_prop1: dimension mismatch");
    SparseMat r1 = embed_leg(R, {3, leg_dim, 1}), r2 = embed_leg(R, {3, leg_dim, 2});
    SparseMat v1 = embed_leg(V, {3, leg_dim, 1}), v2 = embed_leg(V, {3, leg_dim, 2});
    return r1 * v2 * r1 == r2 * v1 * r2;
}

// ---------------------------------------------------------------------------
// composite decompositions

/// RR_+ = -PP^- + q^2 S(x)S + q^-2 A(x)A,  RR_- = PP^+ - q^2 A(x)S - q^-2 S(x)A,
/// and (q+q^-1)^2 PP^- = 2(1(x)1 - R_M(x)R) + (q-q^-1)(1(x)R + R_M(x)1).
inline bool check_deco_identities(int M, int N) {
    CompositeBraid cb = build_composite(M, N);
    RatFunc q2 = RatFunc::q(2), qm2 = RatFunc::q(-2);
    bool plus_ok =
        cb.r_plus == cb.p_minus.scaled(-RatFunc::one()) + cb.ps1.scaled(q2) + cb.ps2.scaled(qm2);
    bool minus_ok =
        cb.r_minus == cb.p_plus - cb.pa1.scaled(q2) - cb.pa2.scaled(qm2);

    BraidMatrix RM = detail::build_sl_any(M), RN = detail::build_sl_any(N);
    SparseMat IM = SparseMat::identity(M * M), IN = SparseMat::identity(N * N);
    RatFunc lam = q_minus_qinv();
    SparseMat rhs = (composite_kron(IM, M, IN, N) - composite_kron(RM.mat, M, RN.mat, N))
                        .scaled(RatFunc(2)) +
                    (composite_kron(IM, M, RN.mat, N) + composite_kron(RM.mat, M, IN, N))
                        .scaled(lam);
    bool expansion_ok = cb.p_minus.scaled(q_plus_qinv() * q_plus_qinv()) == rhs;
    return plus_ok && minus_ok && expansion_ok;
}

// ---------------------------------------------------------------------------
// spectrum of R_M^{+-1} (x) R for the orthogonal/symplectic families

struct TensorSpectrumLine {
    RatFunc eigenvalue;
    int multiplicity;
};

struct TensorSpectrumResult {
    std::vector<TensorSpectrumLine> lines; // distinct eigenvalues, deterministic order
    int positives = 0, negatives = 0;      // counted with multiplicity over distinct values
    bool no_go = false;                    // >= 2 of each sign: no flat composite algebra
};

/// Spectrum of R_M^{variant} (x) R as products of the factor spectra, with
/// rank bookkeeping verified against the actual composite matrix:
/// the product decomposition sum_{mu,nu} c_mu d_nu P_mu (x) P_nu must
/// reproduce it exactly and the composite projector ranks must multiply.
inline TensorSpectrumResult check_tensor_spectrum(const GroupSpec& group, int M, int variant) {
    if (group.family == Family::SL) throw std::invalid_argument("meant for the SO/Sp families");
    if (variant != 1 && variant != -1) throw std::invalid_argument("variant must be +-1");
    BraidMatrix RM = detail::build_sl_any(M);
    BraidMatrix RG = build_rhat(group);
    ProjectorSet psM = spectral_projectors(RM), psG = spectral_projectors(RG);

    SparseMat left = variant == 1 ? RM.mat : inverse(RM.mat);
    SparseMat composite = composite_kron(left, M, RG.mat, group.N);

    std::vector<std::pair<RatFunc, int>> factorM;
    for (std::size_t i = 0; i < RM.spectrum.size(); ++i) {
        RatFunc ev = RM.spectrum[i].eigenvalue;
        factorM.emplace_back(variant == 1 ? ev : ev.inverse(), RM.spectrum[i].expected_rank);
    }

    SparseMat recompose(composite.dim());
    std::map<RatFunc, int> mult;
    for (std::size_t i = 0; i < factorM.size(); ++i)
        for (std::size_t j = 0; j < RG.spectrum.size(); ++j) {
            SparseMat P = composite_kron(psM.projectors[i].second, M, psG.projectors[j].second,
                                         group.N);
            int rk = rank(P);
            if (rk != factorM[i].second * RG.spectrum[j].expected_rank)
                throw std::logic_error("composite projector rank bookkeeping failed");
            RatFunc ev = factorM[i].first * RG.spectrum[j].eigenvalue;
            recompose = recompose + P.scaled(ev);
            mult[ev] += rk;
        }
    if (recompose != composite)
        throw std::logic_error("product spectrum does not reproduce the composite matrix");

    TensorSpectrumResult res;
    for (const auto& [ev, m] : mult) {
        if (m == 0) continue;
        res.lines.push_back({ev, m});
        (ev.sign_near_one() > 0 ? res.positives : res.negatives) += 1;
    }
    res.no_go = res.positives >= 2 && res.negatives >= 2;
    return res;
}

// ---------------------------------------------------------------------------
// star structures

struct StarSpec {
    std::vector<int> pi; // 1-based permutation of the copies, pi[alpha-1]
    bool metric = false; // creator-sector star twisted by the SO metric
};

struct StarResult {
    bool consistent;
    std::vector<std::string> witnesses; // tags of relations whose image leaves the span
};

namespace detail {

inline std::vector<int> invert_perm(const std::vector<int>& pi) {
    std::vector<int> inv(pi.size());
    for (std::size_t a = 0; a < pi.size(); ++a) inv[pi[a] - 1] = int(a + 1);
    return inv;
}

// image of a single generator under the star, as a linear combination
using GenImage = std::vector<std::pair<int, RatFunc>>;

inline GenImage star_generator(const AlgebraPresentation& pres, const StarSpec& spec,
                               const Metric* C, int g) {
    const GeneratorSymbol& s = pres.generators[g];
    if (!spec.metric) {
        int target = s.kind == Kind::Creator ? detail::invert_perm(spec.pi)[s.copy - 1]
                                             : spec.pi[s.copy - 1];
        Kind k = s.kind == Kind::Creator ? Kind::Annihilator : Kind::Creator;
        return {{pres.gen_index(k, target, s.mode), RatFunc::one()}};
    }
    // metric star on creators: A+_{alpha,i} -> sum_j W^{ji} A+_{pi(alpha),j}
    if (s.kind != Kind::Creator)
        throw std::invalid_argument("metric star is defined on the creator sector");
    GenImage img;
    for (int j = 1; j <= pres.N; ++j) {
        const RatFunc& c = C->twist(j, s.mode);
        if (!c.is_zero()) img.emplace_back(pres.gen_index(Kind::Creator, spec.pi[s.copy - 1], j), c);
    }
    return img;
}

} // namespace detail

/// Apply the antilinear antihomomorphism generated by the star spec to every
/// relation (coefficients are fixed: q is treated as real) and test whether
/// the image span equals the relation span. For the metric star only the
/// creator sector is transformed and compared.
inline StarResult check_star(const AlgebraPresentation& pres, const StarSpec& spec,
                             const Metric* C = nullptr) {
    if (int(spec.pi.size()) != pres.M) throw std::invalid_argument("permutation size != M");
    if (spec.metric && C == nullptr) throw std::invalid_argument("metric star needs the metric");

    const int G = int(pres.generators.size());
    auto in_scope = [&](const Relation& r) {
        if (!spec.metric) return true;
        for (const auto& [w, c] : r.quad)
            if (pres.generators[w.first].kind != Kind::Creator ||
                pres.generators[w.second].kind != Kind::Creator)
                return false;
        return !r.quad.empty();
    };

    EchelonSpan span;
    for (const auto& r : pres.relations)
        if (in_scope(r)) span.add(relation_vector(r, G));

    EchelonSpan image;
    std::vector<std::string> witnesses;
    for (const auto& r : pres.relations) {
        if (!in_scope(r)) continue;
        RelVec img;
        for (const auto& [w, c] : r.quad) {
            // (g1 g2)* = g2* g1*
            for (const auto& [h2, c2] : detail::star_generator(pres, spec, C, w.second))
                for (const auto& [h1, c1] : detail::star_generator(pres, spec, C, w.first)) {
                    long key = long(h2) * G + h1;
                    auto it = img.find(key);
                    RatFunc add = c * c2 * c1;
                    if (it == img.end())
                        img[key] = add;
                    else {
                        it->second += add;
                        if (it->second.is_zero()) img.erase(it);
                    }
                }
        }
        if (!r.constant.is_zero()) img[long(G) * G] = r.constant;
        if (!span.reduces_to_zero(img)) witnesses.push_back(r.tag);
        image.add(std::move(img));
    }
    bool ok = witnesses.empty() && image == span;
    return {ok, std::move(witnesses)};
}

/// The SO metric star on a bosonic chain's creator sector:
/// (A+_{alpha,i})* = A+_{pi(alpha),j} C^{ji}.
inline StarResult check_metric_star(const GroupSpec& group, int M, const std::vector<int>& pi,
                                    const ChainParams* custom = nullptr) {
    if (group.family != Family::SO) throw std::invalid_argument("metric star is an SO structure");
    ChainParams params = custom ? *custom : ChainParams::uniform(M, AlgebraSign::Weyl);
    AlgebraPresentation pres = gen_chain(group, params);
    Metric C = extract_metric(spectral_projectors(build_rhat(group)));
    return check_star(pres, StarSpec{pi, true}, &C);
}

// ---------------------------------------------------------------------------
// classical limit

/// Every relation, evaluated at q = 1 (couplings included), must span exactly
/// the classical (super)commutation relations of the generators.
inline bool check_classical_limit(const AlgebraPresentation& pres) {
    const int G = int(pres.generators.size());
    auto eval1 = [](const RatFunc& f) {
        Rational v = f.eval(1);
        return RatFunc(Laurent(Integer(boost::multiprecision::numerator(v))),
                       Laurent(Integer(boost::multiprecision::denominator(v))));
    };

    EchelonSpan deformed;
    for (const auto& r : pres.relations) {
        RelVec v;
        for (const auto& [w, c] : r.quad) {
            RatFunc e = eval1(c);
            if (!e.is_zero()) v[long(w.first) * G + w.second] = e;
        }
        if (!r.constant.is_zero()) {
            RatFunc e = eval1(r.constant);
            if (!e.is_zero()) v[long(G) * G] = e;
        }
        deformed.add(std::move(v));
    }

    EchelonSpan classical;
    auto sign_of = [&](int x, int y) {
        return pres.generators[x].parity * pres.generators[y].parity % 2 ? -1 : 1;
    };
    for (int x = 0; x < G; ++x)
        for (int y = 0; y < G; ++y) {
            const GeneratorSymbol &gx = pres.generators[x], &gy = pres.generators[y];
            if (gx.kind == gy.kind) {
                if (x > y) continue;
                if (x == y && sign_of(x, y) == 1) continue; // x^2 unconstrained for bosons
                RelVec v;
                v[long(x) * G + y] = RatFunc::one();
                if (x != y) {
                    auto key = long(y) * G + x;
                    v[key] = RatFunc(-sign_of(x, y));
                }
                classical.add(std::move(v));
            } else if (gx.kind == Kind::Annihilator && gy.kind == Kind::Creator) {
                RelVec v;
                v[long(x) * G + y] = RatFunc::one();
                v[long(y) * G + x] = RatFunc(-sign_of(x, y));
                if (gx.copy == gy.copy && gx.mode == gy.mode) v[long(G) * G] = -RatFunc::one();
                classical.add(std::move(v));
            }
        }
    return deformed == classical;
}

} // namespace braidchain
