#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "braidchain/presentation.hpp"

namespace braidchain {

using Word = std::vector<int>; // generator indices; empty word = the unit

/// Degree-lexicographic order induced by a ranking of the generators.
/// Normal-ordered words (creators first, copies sorted) come out minimal, so
/// the generated relations orient onto them.
struct MonomialOrder {
    std::vector<int> rank; // generator index -> rank, smaller = earlier

    /// creators before annihilators; creators by copy descending then mode
    /// ascending; annihilators by copy ascending then mode descending
    static MonomialOrder standard(const AlgebraPresentation& pres) {
        MonomialOrder o;
        o.rank.resize(pres.generators.size());
        const int M = pres.M, N = pres.N;
        for (std::size_t g = 0; g < pres.generators.size(); ++g) {
            const GeneratorSymbol& s = pres.generators[g];
            o.rank[g] = s.kind == Kind::Creator ? (M - s.copy) * N + (s.mode - 1)
                                                : M * N + (s.copy - 1) * N + (N - s.mode);
        }
        return o;
    }

    bool less(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (rank[a[i]] != rank[b[i]]) return rank[a[i]] < rank[b[i]];
        return false;
    }
};

struct WordLess {
    const MonomialOrder* order;
    bool operator()(const Word& a, const Word& b) const { return order->less(a, b); }
};

/// Polynomial in the free algebra, terms keyed ascending in the order.
/// Valid only while the referenced order is alive.
using Poly = std::map<Word, RatFunc, WordLess>;

inline Poly make_poly(const MonomialOrder& order) { return Poly(WordLess{&order}); }

inline void poly_add_term(Poly& p, const Word& w, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = p.find(w);
    if (it == p.end())
        p.emplace(w, c);
    else {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

using Terms = std::vector<std::pair<Word, RatFunc>>; // ascending in the order

struct RewriteSystem {
    MonomialOrder order;
    int num_generators = 0;
    // leading degree-2 word -> the (strictly smaller) right-hand side
    std::map<std::pair<int, int>, Terms> rules;

    bool reducible(int a, int b) const { return rules.count({a, b}) != 0; }
};

/// Solve the relation span for its leading degree-2 words: Gaussian
/// elimination pivoting on the largest word in the order, fully
/// inter-reduced. A row collapsing to a bare constant means the presentation
/// forces 1 = 0 and is rejected.
inline RewriteSystem orient(const AlgebraPresentation& pres, MonomialOrder order) {
    RewriteSystem rs;
    rs.order = std::move(order);
    rs.num_generators = int(pres.generators.size());

    std::map<Word, Poly, WordLess> pivots((WordLess{&rs.order}));
    auto reduce_row = [&](Poly& p) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = p.rbegin(); it != p.rend(); ++it) {
                auto piv = pivots.find(it->first);
                if (piv == pivots.end()) continue;
                RatFunc f = it->second;
                for (const auto& [w, c] : piv->second) poly_add_term(p, w, -f * c);
                changed = true;
                break;
            }
        }
    };

    for (const Relation& rel : pres.relations) {
        Poly p = make_poly(rs.order);
        for (const auto& [w, c] : rel.quad) poly_add_term(p, Word{w.first, w.second}, c);
        poly_add_term(p, Word{}, rel.constant);
        reduce_row(p);
        if (p.empty()) continue;
        if (p.rbegin()->first.size() != 2)
            throw std::domain_error("degenerate presentation: relation reduces to a constant");
        RatFunc lead = p.rbegin()->second;
        for (auto& [w, c] : p) c /= lead;
        Word lw = p.rbegin()->first;
        // keep earlier rows reduced against the new pivot
        for (auto& [pw, row] : pivots) {
            auto hit = row.find(lw);
            if (hit == row.end()) continue;
            RatFunc f = hit->second;
            for (const auto& [w, c] : p) poly_add_term(row, w, -f * c);
        }
        pivots.emplace(std::move(lw), std::move(p));
    }

    for (const auto& [lw, row] : pivots) {
        Terms rhs;
        for (const auto& [w, c] : row)
            if (w != lw) rhs.emplace_back(w, -c);
        rs.rules.emplace(std::make_pair(lw[0], lw[1]), std::move(rhs));
    }
    return rs;
}

/// Rewrite to normal form: repeatedly replace the leftmost reducible pair of
/// the largest reducible word. Terminates because every step is strictly
/// decreasing in the order.
inline Poly reduce(const RewriteSystem& rs, Poly p) {
    for (;;) {
        const Word* target = nullptr;
        std::size_t pos = 0;
        for (auto it = p.rbegin(); it != p.rend() && !target; ++it) {
            const Word& w = it->first;
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (rs.reducible(w[i], w[i + 1])) {
                    target = &it->first;
                    pos = i;
                    break;
                }
        }
        if (!target) return p;
        Word w = *target;
        RatFunc coeff = p.at(w);
        poly_add_term(p, w, -coeff);
        const Terms& rhs = rs.rules.at({w[pos], w[pos + 1]});
        for (const auto& [m, c] : rhs) {
            Word nw;
            nw.reserve(w.size() - 2 + m.size());
            nw.insert(nw.end(), w.begin(), w.begin() + pos);
            nw.insert(nw.end(), m.begin(), m.end());
            nw.insert(nw.end(), w.begin() + pos + 2, w.end());
            poly_add_term(p, nw, coeff * c);
        }
    }
}

struct Overlap {
    std::array<int, 3> word;            // x y z with (x,y) and (y,z) both reducible
    Terms residue;                      // normal-form difference of the two reductions
};

/// Diamond-lemma check at degree 3: every doubly-reducible word must reach
/// the same normal form along both reduction paths. Returns the unresolved
/// overlaps; empty means locally confluent, hence (order-decreasing quadratic
/// rules) a normal-form basis exists.
inline std::vector<Overlap> check_confluence(const RewriteSystem& rs) {
    std::vector<Overlap> bad;
    for (const auto& [xy, rhs_xy] : rs.rules)
        for (const auto& [yz, rhs_yz] : rs.rules) {
            if (xy.second != yz.first) continue;
            int x = xy.first, y = xy.second, z = yz.second;
            Poly left = make_poly(rs.order);
            for (const auto& [m, c] : rhs_xy) {
                Word w = m;
                w.push_back(z);
                poly_add_term(left, w, c);
            }
            Poly right = make_poly(rs.order);
            for (const auto& [m, c] : rhs_yz) {
                Word w;
                w.push_back(x);
                w.insert(w.end(), m.begin(), m.end());
                poly_add_term(right, w, c);
            }
            Poly diff = reduce(rs, std::move(left));
            for (const auto& [w, c] : reduce(rs, std::move(right))) poly_add_term(diff, w, -c);
            if (!diff.empty()) {
                Terms res(diff.begin(), diff.end());
                bad.push_back({{x, y, z}, std::move(res)});
            }
        }
    return bad;
}

struct SeriesRow {
    int degree;
    Integer deformed;
    Integer classical;
    bool match;
};

struct SeriesReport {
    std::vector<SeriesRow> degrees;
    std::vector<Overlap> unresolved;
    bool all_match() const {
        if (!unresolved.empty()) return false;
        for (const auto& r : degrees)
            if (!r.match) return false;
        return true;
    }
};

/// Coefficient of t^d in (1-t)^{-bosons} (1+t)^{fermions}.
inline Integer classical_count(int bosons, int fermions, int d) {
    auto binom = [](Integer n, int k) {
        Integer r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - (i - 1)) / i;
        return r;
    };
    Integer total = 0;
    for (int k = 0; k <= std::min(d, fermions); ++k)
        total += binom(fermions, k) * binom(Integer(bosons) + (d - k) - 1, d - k);
    return total;
}

/// Count irreducible words per degree and compare with the classical series.
/// Counting is only meaningful on a confluent system, so a non-confluent one
/// is refused: its overlaps are returned in the report, without counts.
inline SeriesReport poincare_series(const RewriteSystem& rs, const AlgebraPresentation& pres,
                                    int max_degree) {
    SeriesReport rep;
    rep.unresolved = check_confluence(rs);
    if (!rep.unresolved.empty()) return rep;

    const int G = rs.num_generators;
    const int B = pres.num_bosonic(), F = pres.num_fermionic();
    std::vector<Integer> cur(G, 1); // irreducible words of the current length, by first letter
    for (int d = 0; d <= max_degree; ++d) {
        Integer deformed;
        if (d == 0)
            deformed = 1;
        else if (d == 1)
            deformed = G;
        else {
            std::vector<Integer> nxt(G, 0);
            for (int a = 0; a < G; ++a)
                for (int b = 0; b < G; ++b)
                    if (!rs.reducible(a, b)) nxt[a] += cur[b];
            cur = std::move(nxt);
            deformed = 0;
            for (const auto& v : cur) deformed += v;
        }
        Integer classical = classical_count(B, F, d);
        rep.degrees.push_back({d, deformed, classical, deformed == classical});
    }
    return rep;
}

} // namespace braidchain
