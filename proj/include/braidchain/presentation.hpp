#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "braidchain/braid.hpp"

namespace braidchain {

enum class Kind { Creator, Annihilator };
enum class AlgebraSign { Weyl, Clifford }; // Weyl <-> parity 0, Clifford <-> parity 1

inline int parity_of(AlgebraSign s) { return s == AlgebraSign::Weyl ? 0 : 1; }

struct GeneratorSymbol {
    Kind kind;
    int copy; // alpha in 1..M
    int mode; // i in 1..N
    int parity;

    std::string str() const {
        return (kind == Kind::Creator ? "A+[" : "A[") + std::to_string(copy) + "," +
               std::to_string(mode) + "]";
    }
    friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

struct CopyFlavor {
    int parity;  // eps_alpha in {0, 1}
    int variant; // eta_alpha in {+1, -1}: +1 braids the same-copy cross relation
                 // with R, -1 with R^-1
};

struct ChainParams {
    int M = 1;
    std::vector<CopyFlavor> flavors;                     // size M
    std::map<std::pair<int, int>, RatFunc> couplings;    // (alpha, beta), alpha < beta

    RatFunc coupling(int a, int b) const {
        auto it = couplings.find({a, b});
        return it == couplings.end() ? RatFunc::one() : it->second;
    }
    static ChainParams uniform(int M, AlgebraSign sign, int variant = 1) {
        ChainParams p;
        p.M = M;
        p.flavors.assign(M, {parity_of(sign), variant});
        return p;
    }
};

/// One quadratic relation with an optional inhomogeneous term: the element
///   sum quad[(g1,g2)] * g1 g2  +  constant * 1
/// of the free algebra vanishes.
struct Relation {
    std::map<std::pair<int, int>, RatFunc> quad;
    RatFunc constant;
    std::string tag;

    void add(int g1, int g2, const RatFunc& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(g1, g2);
        auto it = quad.find(key);
        if (it == quad.end())
            quad.emplace(key, c);
        else {
            it->second += c;
            if (it->second.is_zero()) quad.erase(it);
        }
    }
    bool trivial() const { return quad.empty() && constant.is_zero(); }
};

struct AlgebraPresentation {
    GroupSpec group;
    int M = 1, N = 2;
    std::vector<GeneratorSymbol> generators; // canonical order: copy, kind (creators first), mode
    std::vector<CopyFlavor> flavors;
    std::vector<Relation> relations;

    int gen_index(Kind k, int copy, int mode) const {
        return (copy - 1) * 2 * N + (k == Kind::Creator ? 0 : N) + (mode - 1);
    }
    int num_bosonic() const {
        int b = 0;
        for (const auto& g : generators) b += g.parity == 0;
        return b;
    }
    int num_fermionic() const { return int(generators.size()) - num_bosonic(); }

    std::string dump() const;
};

inline void init_generators(AlgebraPresentation& pres) {
    pres.generators.clear();
    for (int a = 1; a <= pres.M; ++a) {
        int eps = pres.flavors[a - 1].parity;
        for (int i = 1; i <= pres.N; ++i)
            pres.generators.push_back({Kind::Creator, a, i, eps});
        for (int i = 1; i <= pres.N; ++i)
            pres.generators.push_back({Kind::Annihilator, a, i, eps});
    }
}

// ---------------------------------------------------------------------------
// linear spans of inhomogeneous quadratic relations

/// Sparse coefficient vector over the basis {degree-2 words} + {1}.
/// Key of word (g1, g2) is g1*G + g2; the constant gets key G*G.
using RelVec = std::map<long, RatFunc>;

inline RelVec relation_vector(const Relation& r, int G) {
    RelVec v;
    for (const auto& [w, c] : r.quad) v[long(w.first) * G + w.second] = c;
    if (!r.constant.is_zero()) v[long(G) * G] = r.constant;
    return v;
}

/// Row-echelon subspace basis with exact elimination; pivot on the largest key.
class EchelonSpan {
public:
    void add(RelVec v) {
        reduce(v);
        if (v.empty()) return;
        long piv = v.rbegin()->first;
        RatFunc lead = v.rbegin()->second;
        for (auto& [k, c] : v) c /= lead;
        // keep existing rows reduced against the new pivot
        for (auto& [p, row] : rows_) {
            auto it = row.find(piv);
            if (it == row.end()) continue;
            RatFunc f = it->second;
            axpy(row, v, -f);
        }
        rows_.emplace(piv, std::move(v));
    }
    bool reduces_to_zero(RelVec v) const {
        reduce(v);
        return v.empty();
    }
    std::size_t dim() const { return rows_.size(); }

    friend bool operator==(const EchelonSpan& a, const EchelonSpan& b) {
        if (a.dim() != b.dim()) return false;
        for (const auto& [p, row] : a.rows_)
            if (!b.reduces_to_zero(row)) return false;
        return true;
    }

private:
    static void axpy(RelVec& x, const RelVec& y, const RatFunc& f) {
        for (const auto& [k, c] : y) {
            auto it = x.find(k);
            if (it == x.end()) {
                if (!(f * c).is_zero()) x[k] = f * c;
            } else {
                it->second += f * c;
                if (it->second.is_zero()) x.erase(it);
            }
        }
    }
    void reduce(RelVec& v) const {
        while (!v.empty()) {
            auto it = rows_.find(v.rbegin()->first);
            if (it == rows_.end()) {
                // leading key has no pivot; eliminate lower keys that do
                bool changed = false;
                for (auto vi = v.rbegin(); vi != v.rend(); ++vi) {
                    auto p = rows_.find(vi->first);
                    if (p != rows_.end()) {
                        axpy(v, p->second, -vi->second);
                        changed = true;
                        break;
                    }
                }
                if (!changed) return;
            } else {
                axpy(v, it->second, -v.rbegin()->second);
            }
        }
    }

    std::map<long, RelVec> rows_;
};

inline EchelonSpan span_of(const std::vector<Relation>& rels, int G) {
    EchelonSpan s;
    for (const auto& r : rels) s.add(relation_vector(r, G));
    return s;
}

// ---------------------------------------------------------------------------
// Lemma-level admissibility: a deformed Weyl (resp. Clifford) algebra needs
// exactly one negative (resp. positive) eigenvalue in the projector
// decomposition. Labels with expected rank 0 still count: the family's
// decomposition fixes them (relevant to Sp with n = 1).

struct AdmissibilityVerdict {
    GroupSpec group;
    AlgebraSign sign;
    bool admissible;
    std::vector<SpectralLine> required_sign_lines; // eigenvalues of the required sign
    RatFunc forced_eigenvalue;                     // c_-/c_+ when admissible
};

inline AdmissibilityVerdict check_admissibility(const BraidMatrix& R, AlgebraSign sign) {
    AdmissibilityVerdict v{R.group, sign, false, {}, RatFunc()};
    int want = sign == AlgebraSign::Weyl ? -1 : +1;
    for (const auto& line : R.spectrum)
        if (line.eigenvalue.sign_near_one() == want) v.required_sign_lines.push_back(line);
    v.admissible = v.required_sign_lines.size() == 1;
    if (v.admissible) v.forced_eigenvalue = v.required_sign_lines.front().eigenvalue;
    return v;
}

inline std::string admissibility_evidence(const AdmissibilityVerdict& v) {
    std::string s = v.group.str() + " " + (v.sign == AlgebraSign::Weyl ? "weyl" : "clifford") +
                    ": eigenvalues of required sign {";
    for (std::size_t i = 0; i < v.required_sign_lines.size(); ++i) {
        if (i) s += ", ";
        s += v.required_sign_lines[i].eigenvalue.str();
    }
    return s + "}";
}

/// The cross-relation matrix S forced by admissibility:
/// variant +1: S = -(c)^{-1} R, variant -1: S = -c R^{-1}.
inline SparseMat forced_cross_matrix(const BraidMatrix& R, const RatFunc& c, int variant) {
    if (variant == 1) return R.mat.scaled(-c.inverse());
    return inverse(R.mat).scaled(-c);
}

// ---------------------------------------------------------------------------
// relation generators

namespace detail {

// creator-sector relations of projector P: one per column p,
//   sum_{(u,v)} P[(uv), p] A+_{cu,u} A+_{cv,v} = 0
inline void add_projector_creator_relations(AlgebraPresentation& pres, const SparseMat& P,
                                            int copy, const std::string& tag) {
    const int N = pres.N;
    for (int p = 0; p < P.dim(); ++p) {
        Relation rel;
        rel.tag = tag;
        for (int rw = 0; rw < P.dim(); ++rw) {
            RatFunc c = P.get(rw, p);
            if (c.is_zero()) continue;
            int u = rw / N + 1, v = rw % N + 1;
            rel.add(pres.gen_index(Kind::Creator, copy, u), pres.gen_index(Kind::Creator, copy, v),
                    c);
        }
        if (!rel.trivial()) pres.relations.push_back(std::move(rel));
    }
}

// annihilator sector: one per row (i,j),
//   sum_{(h,k)} P[(ij), (hk)] A^{copy,k} A^{copy,h} = 0
inline void add_projector_annihilator_relations(AlgebraPresentation& pres, const SparseMat& P,
                                                int copy, const std::string& tag) {
    const int N = pres.N;
    for (int rw = 0; rw < P.dim(); ++rw) {
        Relation rel;
        rel.tag = tag;
        for (const auto& [cl, c] : P.row(rw)) {
            int h = cl / N + 1, k = cl % N + 1;
            rel.add(pres.gen_index(Kind::Annihilator, copy, k),
                    pres.gen_index(Kind::Annihilator, copy, h), c);
        }
        if (!rel.trivial()) pres.relations.push_back(std::move(rel));
    }
}

// mixed sector: A^{copy,i} A+_{copy,j} - delta_ij - S^{ih}_{jk} A+_{copy,h} A^{copy,k} = 0
inline void add_mixed_relations(AlgebraPresentation& pres, const SparseMat& S, int copy,
                                const std::string& tag) {
    const int N = pres.N;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            Relation rel;
            rel.tag = tag;
            rel.add(pres.gen_index(Kind::Annihilator, copy, i),
                    pres.gen_index(Kind::Creator, copy, j), RatFunc::one());
            if (i == j) rel.constant = -RatFunc::one();
            for (int h = 1; h <= N; ++h)
                for (int k = 1; k <= N; ++k) {
                    RatFunc c = S.get((i - 1) * N + (h - 1), (j - 1) * N + (k - 1));
                    if (!c.is_zero())
                        rel.add(pres.gen_index(Kind::Creator, copy, h),
                                pres.gen_index(Kind::Annihilator, copy, k), -c);
                }
            pres.relations.push_back(std::move(rel));
        }
}

inline void add_single_copy_relations(AlgebraPresentation& pres, const BraidMatrix& R,
                                      const ProjectorSet& ps, int copy) {
    const CopyFlavor& fl = pres.flavors[copy - 1];
    AlgebraSign sign = fl.parity == 0 ? AlgebraSign::Weyl : AlgebraSign::Clifford;
    AdmissibilityVerdict verdict = check_admissibility(R, sign);
    if (!verdict.admissible)
        throw std::invalid_argument("no flat deformation: " + admissibility_evidence(verdict));
    auto [plus, minus] = assemble_pm(ps);
    const SparseMat& proj = fl.parity == 0 ? minus : plus;
    std::string a = std::to_string(copy);
    add_projector_creator_relations(pres, proj, copy, "cc.same[" + a + "]");
    add_projector_annihilator_relations(pres, proj, copy, "aa.same[" + a + "]");
    SparseMat S = forced_cross_matrix(R, verdict.forced_eigenvalue, fl.variant);
    add_mixed_relations(pres, S, copy, "am.same[" + a + "]");
}

} // namespace detail

/// Single-copy deformed Weyl/Clifford algebra over the group's braid matrix.
/// variant +1 braids the cross relation with R, -1 with R^-1.
inline AlgebraPresentation gen_single_copy(const GroupSpec& group, AlgebraSign sign,
                                           int variant = 1) {
    group.validate();
    if (variant != 1 && variant != -1) throw std::invalid_argument("variant must be +-1");
    AlgebraPresentation pres;
    pres.group = group;
    pres.M = 1;
    pres.N = group.N;
    pres.flavors = {{parity_of(sign), variant}};
    init_generators(pres);
    BraidMatrix R = build_rhat(group);
    ProjectorSet ps = spectral_projectors(R);
    detail::add_single_copy_relations(pres, R, ps, 1);
    return pres;
}

/// Braided chain of M copies: same-copy relations per copy flavor, plus the
/// cross-copy braidings (alpha < beta):
///   A+_{a,i} A+_{b,j} = s c_ab R^{hk}_{ij} A+_{b,h} A+_{a,k}
///   A^{a,j} A^{b,i}  = s c_ab R^{ij}_{hk} A^{b,k} A^{a,h}
///   A^{b,i} A+_{a,j} = s c_ab R^{ih}_{jk} A+_{a,h} A^{b,k}
///   A^{a,i} A+_{b,j} = s c_ab^{-1} (R^{-1})^{ih}_{jk} A+_{b,h} A^{a,k}
/// with s = (-1)^{eps_a eps_b}.
inline AlgebraPresentation gen_chain(const GroupSpec& group, const ChainParams& params) {
    group.validate();
    if (int(params.flavors.size()) != params.M)
        throw std::invalid_argument("chain needs one flavor per copy");
    for (const auto& fl : params.flavors) {
        if (fl.parity != 0 && fl.parity != 1) throw std::invalid_argument("parity must be 0 or 1");
        if (group.family == Family::SO && fl.parity != 0)
            throw std::invalid_argument("SO copies must be bosonic");
        if (group.family == Family::Sp && fl.parity != 1)
            throw std::invalid_argument("Sp copies must be fermionic");
        if (fl.variant != 1 && fl.variant != -1) throw std::invalid_argument("variant must be +-1");
    }
    for (const auto& [ab, c] : params.couplings) {
        if (ab.first < 1 || ab.second > params.M || ab.first >= ab.second)
            throw std::invalid_argument("coupling indices must satisfy 1 <= a < b <= M");
        if (c.is_zero()) throw std::invalid_argument("couplings must be invertible");
        if (c.eval(1) != 1)
            throw std::invalid_argument("couplings must tend to 1 in the classical limit");
    }

    AlgebraPresentation pres;
    pres.group = group;
    pres.M = params.M;
    pres.N = group.N;
    pres.flavors = params.flavors;
    init_generators(pres);

    BraidMatrix R = build_rhat(group);
    ProjectorSet ps = spectral_projectors(R);
    SparseMat Rinv = inverse(R.mat);
    const int N = group.N;

    for (int a = 1; a <= params.M; ++a) detail::add_single_copy_relations(pres, R, ps, a);

    for (int a = 1; a <= params.M; ++a)
        for (int b = a + 1; b <= params.M; ++b) {
            int se = params.flavors[a - 1].parity * params.flavors[b - 1].parity;
            RatFunc sgn = se % 2 ? -RatFunc::one() : RatFunc::one();
            RatFunc cab = params.coupling(a, b);
            std::string abtxt = "[" + std::to_string(a) + "<" + std::to_string(b) + "]";
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j) {
                    Relation cc, aa, m1, m2;
                    cc.tag = "cc.cross" + abtxt;
                    aa.tag = "aa.cross" + abtxt;
                    m1.tag = "am.cross.hi" + abtxt;
                    m2.tag = "am.cross.lo" + abtxt;
                    cc.add(pres.gen_index(Kind::Creator, a, i), pres.gen_index(Kind::Creator, b, j),
                           RatFunc::one());
                    aa.add(pres.gen_index(Kind::Annihilator, a, j),
                           pres.gen_index(Kind::Annihilator, b, i), RatFunc::one());
                    m1.add(pres.gen_index(Kind::Annihilator, b, i),
                           pres.gen_index(Kind::Creator, a, j), RatFunc::one());
                    m2.add(pres.gen_index(Kind::Annihilator, a, i),
                           pres.gen_index(Kind::Creator, b, j), RatFunc::one());
                    for (int h = 1; h <= N; ++h)
                        for (int k = 1; k <= N; ++k) {
                            RatFunc rhk_ij = R.mat.get((h - 1) * N + (k - 1), (i - 1) * N + (j - 1));
                            if (!rhk_ij.is_zero())
                                cc.add(pres.gen_index(Kind::Creator, b, h),
                                       pres.gen_index(Kind::Creator, a, k), -sgn * cab * rhk_ij);
                            RatFunc rij_hk = R.mat.get((i - 1) * N + (j - 1), (h - 1) * N + (k - 1));
                            if (!rij_hk.is_zero())
                                aa.add(pres.gen_index(Kind::Annihilator, b, k),
                                       pres.gen_index(Kind::Annihilator, a, h),
                                       -sgn * cab * rij_hk);
                            RatFunc rih_jk = R.mat.get((i - 1) * N + (h - 1), (j - 1) * N + (k - 1));
                            if (!rih_jk.is_zero())
                                m1.add(pres.gen_index(Kind::Creator, a, h),
                                       pres.gen_index(Kind::Annihilator, b, k),
                                       -sgn * cab * rih_jk);
                            RatFunc vih_jk = Rinv.get((i - 1) * N + (h - 1), (j - 1) * N + (k - 1));
                            if (!vih_jk.is_zero())
                                m2.add(pres.gen_index(Kind::Creator, b, h),
                                       pres.gen_index(Kind::Annihilator, a, k),
                                       -sgn * cab.inverse() * vih_jk);
                        }
                    pres.relations.push_back(std::move(cc));
                    pres.relations.push_back(std::move(aa));
                    pres.relations.push_back(std::move(m1));
                    pres.relations.push_back(std::move(m2));
                }
        }
    return pres;
}

inline std::string AlgebraPresentation::dump() const {
    std::ostringstream os;
    for (const auto& rel : relations) {
        bool first = true;
        for (const auto& [w, c] : rel.quad) {
            if (!first) os << " + ";
            os << "(" << c.str() << ") * " << generators[w.first].str()
               << generators[w.second].str();
            first = false;
        }
        if (!rel.constant.is_zero()) {
            if (!first) os << " + ";
            os << "(" << rel.constant.str() << ") * 1";
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

} // namespace braidchain
