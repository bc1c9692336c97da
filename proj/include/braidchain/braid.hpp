#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "braidchain/sparse_matrix.hpp"

namespace braidchain {

enum class Family { SL, SO, Sp };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::SL: return "sl";
        case Family::SO: return "so";
        case Family::Sp: return "sp";
    }
    return "?";
}

struct GroupSpec {
    Family family;
    int N; // dimension of the defining representation; for Sp, N = 2n

    void validate() const {
        if (N < 2) throw std::invalid_argument("N must be at least 2");
        if (family == Family::Sp && N % 2 != 0) throw std::invalid_argument("Sp requires even N");
        if (family == Family::SO && N < 3) throw std::invalid_argument("SO requires N >= 3");
    }
    std::string str() const { return family_name(family) + "(" + std::to_string(N) + ")"; }
};

struct SpectralLine {
    std::string label; // S, A (SL); s, a, t (SO); s', a', t' (Sp)
    RatFunc eigenvalue;
    int expected_rank;
};

struct BraidMatrix {
    GroupSpec group;
    SparseMat mat;
    std::vector<SpectralLine> spectrum;
};

/// R12 R23 R12 == R23 R12 R23 on the cube of the leg space, exactly.
inline bool check_braid(const SparseMat& R, int leg_dim) {
    if (R.dim() != leg_dim * leg_dim) throw std::invalid_argument("check_braid: dim != leg_dim^2");
    SparseMat a = embed_leg(R, {3, leg_dim, 1});
    SparseMat b = embed_leg(R, {3, leg_dim, 2});
    return a * b * a == b * a * b;
}

namespace detail {

inline int pair_index(int i, int j, int N) { return (i - 1) * N + (j - 1); } // 1-based legs

// Exponent vector for the SO/Sp trace coupling, in an integer-exponent
// diagonal gauge (odd SO is shifted off the textbook half-integer values;
// braid equation, spectrum and ranks are gauge-invariant and are re-verified
// on every construction).
inline std::vector<int> gauge_exponents(Family fam, int N) {
    std::vector<int> K(N + 1);
    if (fam == Family::SO && N % 2 == 1) {
        int m = (N + 1) / 2;
        for (int i = 1; i <= N; ++i) K[i] = i <= m ? (N + 1) / 2 - i : (N + 3) / 2 - i;
    } else if (fam == Family::SO) {
        for (int i = 1; i <= N; ++i) K[i] = i <= N / 2 ? N / 2 - i : N / 2 - i + 1;
    } else {
        int n = N / 2;
        for (int i = 1; i <= N; ++i) K[i] = i <= n ? N / 2 - i + 1 : N / 2 - i;
    }
    return K;
}

inline SparseMat rhat_sl(int N) {
    SparseMat R(N * N);
    RatFunc lam = q_minus_qinv();
    for (int i = 1; i <= N; ++i) R.set(pair_index(i, i, N), pair_index(i, i, N), RatFunc::q(1));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            if (i != j) R.set(pair_index(j, i, N), pair_index(i, j, N), RatFunc::one());
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) R.set(pair_index(i, j, N), pair_index(i, j, N), lam);
    return R;
}

inline SparseMat rhat_sl_inverse_formula(int N) {
    SparseMat R(N * N);
    RatFunc lam = -q_minus_qinv(); // q^-1 - q
    for (int i = 1; i <= N; ++i) R.set(pair_index(i, i, N), pair_index(i, i, N), RatFunc::q(-1));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            if (i != j) R.set(pair_index(j, i, N), pair_index(i, j, N), RatFunc::one());
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j < i; ++j) R.set(pair_index(i, j, N), pair_index(i, j, N), lam);
    return R;
}

inline SparseMat rhat_bcd(Family fam, int N) {
    const int conj = N + 1; // i' = conj - i
    std::vector<int> K = gauge_exponents(fam, N);
    std::vector<int> eps(N + 1, 1);
    if (fam == Family::Sp)
        for (int i = N / 2 + 1; i <= N; ++i) eps[i] = -1;

    SparseMat R(N * N);
    auto add = [&](int i, int j, int k, int l, const RatFunc& v) {
        R.add_to(pair_index(i, k, N), pair_index(j, l, N), v);
    };
    RatFunc lam = q_minus_qinv();
    for (int i = 1; i <= N; ++i)
        add(i, i, i, i, i != conj - i ? RatFunc::q(1) : RatFunc::one());
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            if (i != j && i != conj - j) add(i, i, j, j, RatFunc::one());
    for (int i = 1; i <= N; ++i)
        if (i != conj - i) add(i, i, conj - i, conj - i, RatFunc::q(-1));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j < i; ++j) {
            add(i, j, j, i, lam);
            add(i, j, conj - i, conj - j,
                lam * RatFunc(-eps[i] * eps[j]) * RatFunc::q(K[i] - K[j]));
        }
    // permuted form: Rhat^{ij}_{kl} = R^{ji}_{kl}
    SparseMat Rh(N * N);
    for (int r = 0; r < R.dim(); ++r) {
        int i = r / N + 1, j = r % N + 1;
        for (const auto& [c, v] : R.row(r)) Rh.set(pair_index(j, i, N), c, v);
    }
    return Rh;
}

} // namespace detail

namespace detail {

inline void verify_braid_invariants(const BraidMatrix& bm) {
    const int N = bm.group.N;
    int rank_sum = 0;
    for (const auto& line : bm.spectrum) rank_sum += line.expected_rank;
    if (rank_sum != N * N) throw std::logic_error("spectrum ranks do not sum to N^2");

    std::vector<RatFunc> distinct;
    for (const auto& line : bm.spectrum)
        if (std::find(distinct.begin(), distinct.end(), line.eigenvalue) == distinct.end())
            distinct.push_back(line.eigenvalue);
    SparseMat poly = SparseMat::identity(N * N);
    for (const auto& ev : distinct)
        poly = poly * (bm.mat - SparseMat::identity(N * N).scaled(ev));
    if (!poly.is_zero())
        throw std::logic_error(bm.group.str() + ": minimal polynomial check failed");
    if (!check_braid(bm.mat, N))
        throw std::logic_error(bm.group.str() + ": braid equation check failed");
}

/// SL braid data for any N >= 1 (N = 1 gives the 1x1 matrix [q]);
/// used when an SL factor of a composite construction may be trivial.
inline BraidMatrix build_sl_any(int N) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    BraidMatrix bm;
    bm.group = {Family::SL, N};
    bm.mat = rhat_sl(N);
    bm.spectrum = {{"S", RatFunc::q(1), N * (N + 1) / 2},
                   {"A", -RatFunc::q(-1), N * (N - 1) / 2}};
    verify_braid_invariants(bm);
    return bm;
}

} // namespace detail

/// Construct the braid matrix of the group with its declared spectrum
/// (eigenvalue and rank per projector label), then verify the defining
/// invariants: braid equation, vanishing minimal polynomial over the distinct
/// eigenvalues, ranks summing to N^2. Throws if the candidate fails any.
inline BraidMatrix build_rhat(const GroupSpec& group) {
    group.validate();
    const int N = group.N;
    BraidMatrix bm;
    bm.group = group;
    switch (group.family) {
        case Family::SL:
            return detail::build_sl_any(N);
        case Family::SO:
            bm.mat = detail::rhat_bcd(Family::SO, N);
            bm.spectrum = {{"s", RatFunc::q(1), N * (N + 1) / 2 - 1},
                           {"a", -RatFunc::q(-1), N * (N - 1) / 2},
                           {"t", RatFunc::q(1 - N), 1}};
            break;
        case Family::Sp:
            bm.mat = detail::rhat_bcd(Family::Sp, N);
            bm.spectrum = {{"s'", RatFunc::q(1), N * (N + 1) / 2},
                           {"a'", -RatFunc::q(-1), N * (N - 1) / 2 - 1},
                           {"t'", -RatFunc::q(-1 - N), 1}};
            break;
    }
    detail::verify_braid_invariants(bm);
    return bm;
}

/// Exact inverse; for SL also cross-checked against the closed-form inverse.
inline SparseMat build_rhat_inverse(const BraidMatrix& R) {
    SparseMat inv = inverse(R.mat);
    if (R.mat * inv != SparseMat::identity(R.mat.dim()))
        throw std::logic_error("inverse verification failed");
    if (R.group.family == Family::SL && inv != detail::rhat_sl_inverse_formula(R.group.N))
        throw std::logic_error("SL inverse disagrees with the closed form");
    return inv;
}

struct ProjectorSet {
    GroupSpec group;
    std::vector<std::pair<std::string, SparseMat>> projectors; // label order = spectrum order
    const SparseMat& by_label(const std::string& label) const {
        for (const auto& [l, m] : projectors)
            if (l == label) return m;
        throw std::invalid_argument("no projector labeled " + label);
    }
};

/// Spectral idempotents via Lagrange interpolation on the declared spectrum:
/// P_mu = prod_{nu != mu} (R - c_nu) / (c_mu - c_nu).
/// Orthogonality, completeness and the declared ranks are verified before
/// returning. A label whose expected rank is 0 gets the zero matrix (its
/// eigenvalue need not occur; Sp with n = 1 degenerates this way).
inline ProjectorSet spectral_projectors(const BraidMatrix& R) {
    const int D = R.mat.dim();
    ProjectorSet ps;
    ps.group = R.group;
    for (const auto& line : R.spectrum) {
        for (const auto& other : R.spectrum)
            if (&other != &line && other.eigenvalue == line.eigenvalue &&
                line.expected_rank != 0 && other.expected_rank != 0)
                throw std::logic_error("degenerate declared eigenvalues with nonzero ranks");
        if (line.expected_rank == 0) {
            ps.projectors.emplace_back(line.label, SparseMat(D));
            continue;
        }
        SparseMat P = SparseMat::identity(D);
        for (const auto& other : R.spectrum) {
            if (other.eigenvalue == line.eigenvalue) continue;
            P = (P * (R.mat - SparseMat::identity(D).scaled(other.eigenvalue)))
                    .scaled((line.eigenvalue - other.eigenvalue).inverse());
        }
        ps.projectors.emplace_back(line.label, std::move(P));
    }

    SparseMat sum(D);
    for (std::size_t i = 0; i < ps.projectors.size(); ++i) {
        const auto& [label, P] = ps.projectors[i];
        if (P * P != P) throw std::logic_error("projector " + label + " not idempotent");
        if (rank(P) != R.spectrum[i].expected_rank)
            throw std::logic_error("projector " + label + " has unexpected rank");
        for (std::size_t j = i + 1; j < ps.projectors.size(); ++j)
            if (!(P * ps.projectors[j].second).is_zero())
                throw std::logic_error("projectors not orthogonal");
        sum = sum + P;
    }
    if (sum != SparseMat::identity(D)) throw std::logic_error("projectors do not sum to 1");
    return ps;
}

/// Deformed symmetrizer / antisymmetrizer pair per family:
///   SL: (S | A),  SO: (s + t | a),  Sp: (s' | a' + t').
inline std::pair<SparseMat, SparseMat> assemble_pm(const ProjectorSet& ps) {
    switch (ps.group.family) {
        case Family::SL: return {ps.by_label("S"), ps.by_label("A")};
        case Family::SO: return {ps.by_label("s") + ps.by_label("t"), ps.by_label("a")};
        case Family::Sp: return {ps.by_label("s'"), ps.by_label("a'") + ps.by_label("t'")};
    }
    throw std::logic_error("unreachable");
}

/// The q-deformed invariant metric of SO, in raised and lowered variants,
/// defined by the rank-1 factorization P^t[r][c] * (C.C) = C_up[r] * C_low[c].
/// star_twist is the involutive diagonal rescale of the raised metric (the
/// representative with W^2 = 1); it is the matrix the conjugation
/// A+_i -> W^{ji} A+_j of the metric star actually uses, in any gauge.
struct Metric {
    int N;
    std::vector<RatFunc> upper, lower; // indexed by the pair (i,j) -> (i-1)*N + (j-1)
    RatFunc norm;                      // C^{lm} C_{lm}
    std::vector<RatFunc> star_twist;

    const RatFunc& up(int i, int j) const { return upper[(i - 1) * N + (j - 1)]; }
    const RatFunc& low(int i, int j) const { return lower[(i - 1) * N + (j - 1)]; }
    const RatFunc& twist(int i, int j) const { return star_twist[(i - 1) * N + (j - 1)]; }
};

/// Rank-1 factorization of the SO trace projector. Scale fixed by
/// C^{1N} = 1 and C_{N1} = 1; any rescaling reproduces the same projector.
inline Metric extract_metric(const ProjectorSet& ps) {
    if (ps.group.family != Family::SO)
        throw std::invalid_argument("metric extraction is defined for SO only");
    const SparseMat& Pt = ps.by_label("t");
    const int N = ps.group.N, D = Pt.dim();
    if (rank(Pt) != 1) throw std::logic_error("trace projector must have rank 1");

    int r0 = -1, c0 = -1;
    for (int r = 0; r < D && r0 < 0; ++r)
        if (!Pt.row(r).empty()) {
            r0 = r;
            c0 = Pt.row(r).begin()->first;
        }
    Metric m;
    m.N = N;
    m.upper.resize(D);
    m.lower.resize(D);
    for (int r = 0; r < D; ++r) m.upper[r] = Pt.get(r, c0);
    for (int c = 0; c < D; ++c) m.lower[c] = Pt.get(r0, c);
    const int corner_up = detail::pair_index(1, N, N), corner_low = detail::pair_index(N, 1, N);
    if (m.upper[corner_up].is_zero() || m.lower[corner_low].is_zero())
        throw std::logic_error("metric corner entries vanish; cannot normalize");
    RatFunc su = m.upper[corner_up].inverse(), sl = m.lower[corner_low].inverse();
    for (auto& v : m.upper) v *= su;
    for (auto& v : m.lower) v *= sl;
    m.norm = RatFunc();
    for (int p = 0; p < D; ++p) m.norm += m.upper[p] * m.lower[p];

    // defining identity, exactly
    for (int r = 0; r < D; ++r)
        for (int c = 0; c < D; ++c)
            if (Pt.get(r, c) * m.norm != m.upper[r] * m.lower[c])
                throw std::logic_error("metric factorization failed to reproduce P^t");

    // involutive representative: antidiagonal support, delta_i delta_{i'}
    // chosen so that W[(i,i')] W[(i',i)] = 1
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            if (i + j != N + 1 && !m.up(i, j).is_zero())
                throw std::logic_error("metric is not antidiagonal");
    m.star_twist.resize(D);
    for (int i = 1; i <= N; ++i) {
        int ip = N + 1 - i;
        RatFunc delta;
        if (i < ip)
            delta = RatFunc::one();
        else if (i == ip)
            delta = m.up(i, i).inverse();
        else
            delta = (m.up(ip, i) * m.up(i, ip)).inverse();
        m.star_twist[(ip - 1) * N + (i - 1)] = m.up(ip, i) * delta;
    }
    return m;
}

} // namespace braidchain
