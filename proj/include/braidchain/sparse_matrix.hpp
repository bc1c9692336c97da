#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "braidchain/ratfunc.hpp"

namespace braidchain {

/// Square sparse matrix over Q(q). Stored entries are never zero.
class SparseMat {
public:
    SparseMat() = default;
    explicit SparseMat(int dim) : dim_(dim), rows_(dim) {
        if (dim <= 0) throw std::invalid_argument("matrix dimension must be positive");
    }

    static SparseMat identity(int dim) {
        SparseMat m(dim);
        for (int i = 0; i < dim; ++i) m.rows_[i][i] = RatFunc::one();
        return m;
    }

    int dim() const { return dim_; }

    void set(int r, int c, RatFunc v) {
        check_index(r, c);
        if (v.is_zero())
            rows_[r].erase(c);
        else
            rows_[r][c] = std::move(v);
    }
    void add_to(int r, int c, const RatFunc& v) {
        check_index(r, c);
        auto it = rows_[r].find(c);
        if (it == rows_[r].end()) {
            if (!v.is_zero()) rows_[r][c] = v;
        } else {
            it->second += v;
            if (it->second.is_zero()) rows_[r].erase(it);
        }
    }
    RatFunc get(int r, int c) const {
        check_index(r, c);
        auto it = rows_[r].find(c);
        return it == rows_[r].end() ? RatFunc() : it->second;
    }
    const std::map<int, RatFunc>& row(int r) const { return rows_[r]; }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& r : rows_) n += r.size();
        return n;
    }
    bool is_zero() const { return nnz() == 0; }

    friend bool operator==(const SparseMat& a, const SparseMat& b) {
        return a.dim_ == b.dim_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const SparseMat& a, const SparseMat& b) { return !(a == b); }

    friend SparseMat operator*(const SparseMat& a, const SparseMat& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("matmul dimension mismatch");
        SparseMat out(a.dim_);
        for (int r = 0; r < a.dim_; ++r) {
            std::map<int, RatFunc> acc;
            for (const auto& [k, av] : a.rows_[r])
                for (const auto& [c, bv] : b.rows_[k]) {
                    auto it = acc.find(c);
                    if (it == acc.end())
                        acc.emplace(c, av * bv);
                    else
                        it->second += av * bv;
                }
            for (auto& [c, v] : acc)
                if (!v.is_zero()) out.rows_[r].emplace(c, std::move(v));
        }
        return out;
    }
    friend SparseMat operator+(const SparseMat& a, const SparseMat& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("matadd dimension mismatch");
        SparseMat out = a;
        for (int r = 0; r < b.dim_; ++r)
            for (const auto& [c, v] : b.rows_[r]) out.add_to(r, c, v);
        return out;
    }
    friend SparseMat operator-(const SparseMat& a, const SparseMat& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("matsub dimension mismatch");
        SparseMat out = a;
        for (int r = 0; r < b.dim_; ++r)
            for (const auto& [c, v] : b.rows_[r]) out.add_to(r, c, -v);
        return out;
    }

    SparseMat scaled(const RatFunc& c) const {
        SparseMat out(dim_);
        if (c.is_zero()) return out;
        for (int r = 0; r < dim_; ++r)
            for (const auto& [col, v] : rows_[r]) out.rows_[r][col] = c * v;
        return out;
    }

    SparseMat transposed() const {
        SparseMat out(dim_);
        for (int r = 0; r < dim_; ++r)
            for (const auto& [c, v] : rows_[r]) out.rows_[c][r] = v;
        return out;
    }

    /// Row-major Kronecker product: index (a,b) -> a*dimB + b, first factor slow.
    friend SparseMat kron(const SparseMat& A, const SparseMat& B) {
        SparseMat out(A.dim_ * B.dim_);
        for (int ra = 0; ra < A.dim_; ++ra)
            for (const auto& [ca, va] : A.rows_[ra])
                for (int rb = 0; rb < B.dim_; ++rb)
                    for (const auto& [cb, vb] : B.rows_[rb])
                        out.rows_[ra * B.dim_ + rb][ca * B.dim_ + cb] = va * vb;
        return out;
    }

    void dump(std::ostream& os) const {
        os << "dim=" << dim_ << "\n";
        for (int r = 0; r < dim_; ++r)
            for (const auto& [c, v] : rows_[r]) os << r << " " << c << " " << v.str() << "\n";
    }
    std::string dump_str() const {
        std::ostringstream os;
        dump(os);
        return os.str();
    }
    static SparseMat parse(std::istream& is) {
        std::string header;
        if (!std::getline(is, header) || header.rfind("dim=", 0) != 0)
            throw std::invalid_argument("missing dim= header");
        SparseMat m(std::stoi(header.substr(4)));
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            std::istringstream ls(line);
            int r, c;
            ls >> r >> c;
            std::string rest;
            std::getline(ls, rest);
            std::size_t start = rest.find_first_not_of(' ');
            m.set(r, c, parse_ratfunc(rest.substr(start == std::string::npos ? 0 : start)));
        }
        return m;
    }

private:
    void check_index(int r, int c) const {
        if (r < 0 || r >= dim_ || c < 0 || c >= dim_)
            throw std::out_of_range("matrix index out of range");
    }

    int dim_ = 0;
    std::vector<std::map<int, RatFunc>> rows_;
};

/// Which adjacent leg pair of a tensor power an operator acts on.
struct LegIndex {
    int total_legs;
    int leg_dim;
    int position; // 1-based, acts on legs (position, position+1)
};

/// Place A (acting on leg_dim^2) on the given adjacent pair of legs,
/// identity on all other legs.
inline SparseMat embed_leg(const SparseMat& A, const LegIndex& spec) {
    const int d = spec.leg_dim;
    if (spec.position < 1 || spec.position >= spec.total_legs)
        throw std::invalid_argument("leg position out of range");
    if (A.dim() != d * d) throw std::invalid_argument("embed_leg: operator must act on leg_dim^2");
    int left = 1, right = 1;
    for (int i = 1; i < spec.position; ++i) left *= d;
    for (int i = spec.position + 1; i < spec.total_legs; ++i) right *= d;

    SparseMat out(left * d * d * right);
    for (int r = 0; r < A.dim(); ++r)
        for (const auto& [c, v] : A.row(r))
            for (int l = 0; l < left; ++l)
                for (int rr = 0; rr < right; ++rr)
                    out.set((l * A.dim() + r) * right + rr, (l * A.dim() + c) * right + rr, v);
    return out;
}

/// Generic rank over Q(q): clear denominators per row, then one-step
/// fraction-free (Bareiss) elimination with exact Laurent division.
inline int rank(const SparseMat& A) {
    const int n = A.dim();
    std::vector<std::vector<Laurent>> M(n, std::vector<Laurent>(n));
    for (int r = 0; r < n; ++r) {
        Laurent den = Laurent::one();
        for (const auto& [c, v] : A.row(r)) den = exact_div(den * v.den(), laurent_gcd(den, v.den()));
        for (const auto& [c, v] : A.row(r)) M[r][c] = v.num() * exact_div(den, v.den());
    }
    int rk = 0;
    Laurent prev = Laurent::one();
    for (int col = 0; col < n && rk < n; ++col) {
        int piv = -1;
        for (int r = rk; r < n; ++r)
            if (!M[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[rk], M[piv]);
        for (int r = rk + 1; r < n; ++r) {
            for (int c = col + 1; c < n; ++c)
                M[r][c] = exact_div(M[r][c] * M[rk][col] - M[r][col] * M[rk][c], prev);
            M[r][col] = Laurent();
        }
        prev = M[rk][col];
        ++rk;
    }
    return rk;
}

/// Exact inverse by Gauss-Jordan over the field Q(q); throws if singular.
inline SparseMat inverse(const SparseMat& A) {
    const int n = A.dim();
    std::vector<std::vector<RatFunc>> M(n, std::vector<RatFunc>(n)), I(n, std::vector<RatFunc>(n));
    for (int r = 0; r < n; ++r) {
        I[r][r] = RatFunc::one();
        for (const auto& [c, v] : A.row(r)) M[r][c] = v;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!M[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("singular matrix");
        std::swap(M[col], M[piv]);
        std::swap(I[col], I[piv]);
        RatFunc inv = M[col][col].inverse();
        for (int c = 0; c < n; ++c) {
            M[col][c] *= inv;
            I[col][c] *= inv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || M[r][col].is_zero()) continue;
            RatFunc f = M[r][col];
            for (int c = 0; c < n; ++c) {
                M[r][c] -= f * M[col][c];
                I[r][c] -= f * I[col][c];
            }
        }
    }
    SparseMat out(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (!I[r][c].is_zero()) out.set(r, c, I[r][c]);
    return out;
}

/// Operator induced on (V_M (x) V_N)^(x2) by A on V_M^(x2) and B on V_N^(x2):
/// entry [(alpha a)(beta b), (gamma c)(delta d)] = A[(alpha beta),(gamma delta)] * B[(ab),(cd)].
/// This is kron(A, B) conjugated by the middle-leg swap.
inline SparseMat composite_kron(const SparseMat& A, int M, const SparseMat& B, int N) {
    if (A.dim() != M * M || B.dim() != N * N)
        throw std::invalid_argument("composite_kron: factor dims must be M^2, N^2");
    const int D = M * N;
    SparseMat out(D * D);
    for (int ra = 0; ra < A.dim(); ++ra)
        for (const auto& [ca, va] : A.row(ra)) {
            int al = ra / M, be = ra % M, ga = ca / M, de = ca % M;
            for (int rb = 0; rb < B.dim(); ++rb)
                for (const auto& [cb, vb] : B.row(rb)) {
                    int a = rb / N, b = rb % N, c = cb / N, d = cb % N;
                    out.set((al * N + a) * D + (be * N + b), (ga * N + c) * D + (de * N + d),
                            va * vb);
                }
        }
    return out;
}

/// Evaluate every entry at q = q0 (exact rationals re-embedded as constants).
inline SparseMat eval_matrix(const SparseMat& A, const Rational& q0) {
    SparseMat out(A.dim());
    for (int r = 0; r < A.dim(); ++r)
        for (const auto& [c, v] : A.row(r)) {
            Rational x = v.eval(q0);
            out.set(r, c, RatFunc(Laurent(Integer(boost::multiprecision::numerator(x))),
                                  Laurent(Integer(boost::multiprecision::denominator(x)))));
        }
    return out;
}

} // namespace braidchain
