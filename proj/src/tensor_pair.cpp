#include "plap/tensor_pair.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace plap {

SparseSymmetricTensorPair build_tensor_pair(const SignedGraph& g, int p) {
    if (p % 2 != 0) throw Error(Errc::odd_p, "tensor equivalence needs even p");
    if (p < 2 || p > 30)
        throw Error(Errc::bad_params, "even p must lie in [2, 30] for exact binomials");

    SparseSymmetricTensorPair t;
    t.p_ = p;
    t.n_ = g.vertex_count();
    t.b_diag_ = g.mu();
    t.diag_.assign(t.n_, 0.0);
    for (int v = 0; v < t.n_; ++v) {
        double d = g.kappa()[v];
        for (const HalfEdge& h : g.neighbors(v)) d += h.w;
        t.diag_[v] = d;
    }
    // neighbor lists sorted by vertex for the entry oracle's lookup
    t.adj_start_.assign(t.n_ + 1, 0);
    for (int v = 0; v < t.n_; ++v) t.adj_start_[v + 1] = t.adj_start_[v] + g.degree(v);
    t.adj_.resize(t.adj_start_[t.n_]);
    for (int v = 0; v < t.n_; ++v) {
        auto nb = g.neighbors(v);
        std::copy(nb.begin(), nb.end(), t.adj_.begin() + t.adj_start_[v]);
        std::sort(t.adj_.begin() + t.adj_start_[v], t.adj_.begin() + t.adj_start_[v + 1],
                  [](const HalfEdge& a, const HalfEdge& b) { return a.to < b.to; });
    }
    // C(p-1, l) by the Pascal recurrence, exact in double up to p = 30
    t.binom_.assign(p, 0.0);
    t.binom_[0] = 1.0;
    for (int row = 1; row <= p - 1; ++row)
        for (int l = row; l >= 1; --l) t.binom_[l] += t.binom_[l - 1];
    return t;
}

const HalfEdge* SparseSymmetricTensorPair::find_edge(int i, int j) const {
    const HalfEdge* lo = adj_.data() + adj_start_[i];
    const HalfEdge* hi = adj_.data() + adj_start_[i + 1];
    const HalfEdge* it =
        std::lower_bound(lo, hi, j, [](const HalfEdge& h, int v) { return h.to < v; });
    return (it != hi && it->to == j) ? it : nullptr;
}

double SparseSymmetricTensorPair::entry_T(std::span<const int> indices) const {
    if (static_cast<int>(indices.size()) != p_)
        throw Error(Errc::bad_params, "entry oracle needs exactly p indices");
    int a = indices[0], b = -1;
    int count_b = 0;
    for (int idx : indices) {
        if (idx < 0 || idx >= n_) throw Error(Errc::bad_label, "tensor index out of range");
        if (idx == a) continue;
        if (b < 0) b = idx;
        if (idx == b) {
            ++count_b;
        } else {
            return 0.0;  // three or more distinct indices
        }
    }
    if (count_b == 0) return diag_[a];
    const HalfEdge* e = find_edge(a, b);
    if (e == nullptr) return 0.0;
    // pattern {a^(p-count_b), b^(count_b)} carries (-sigma)^{count_b} w;
    // even p makes the value symmetric in the endpoints
    const double ms = -static_cast<double>(e->sigma);
    return (count_b % 2 == 0 ? 1.0 : ms) * e->w;
}

double SparseSymmetricTensorPair::entry_B(std::span<const int> indices) const {
    if (static_cast<int>(indices.size()) != p_)
        throw Error(Errc::bad_params, "entry oracle needs exactly p indices");
    const int a = indices[0];
    for (int idx : indices) {
        if (idx < 0 || idx >= n_) throw Error(Errc::bad_label, "tensor index out of range");
        if (idx != a) return 0.0;
    }
    return b_diag_[a];
}

VertexFunction SparseSymmetricTensorPair::tensor_apply(const VertexFunction& f) const {
    if (static_cast<int>(f.size()) != n_)
        throw Error(Errc::bad_params, "function length does not match tensor dimension");
    VertexFunction out(n_, 0.0);
    std::array<double, 31> fi_pow;  // fi_pow[e] = f_i^e
    for (int i = 0; i < n_; ++i) {
        fi_pow[0] = 1.0;
        for (int e = 1; e <= p_ - 1; ++e) fi_pow[e] = fi_pow[e - 1] * f[i];
        double acc = diag_[i] * fi_pow[p_ - 1];
        for (int k = adj_start_[i]; k < adj_start_[i + 1]; ++k) {
            const HalfEdge& h = adj_[k];
            const double ms = -static_cast<double>(h.sigma);
            double fj_pow = 1.0;    // f_j^l
            double sign_pow = 1.0;  // (-sigma)^l
            double term = 0.0;
            for (int l = 1; l <= p_ - 1; ++l) {
                fj_pow *= f[h.to];
                sign_pow *= ms;
                term += binom_[l] * sign_pow * fi_pow[p_ - 1 - l] * fj_pow;
            }
            acc += h.w * term;
        }
        out[i] = acc;
    }
    return out;
}

VertexFunction SparseSymmetricTensorPair::tensor_apply_naive(const VertexFunction& f) const {
    if (static_cast<int>(f.size()) != n_)
        throw Error(Errc::bad_params, "function length does not match tensor dimension");
    double tuples = 1.0;
    for (int e = 0; e < p_ - 1; ++e) tuples *= n_;
    if (tuples > 1e6) throw Error(Errc::too_large, "n^{p-1} exceeds the brute-force bound");

    const long long total = static_cast<long long>(tuples);
    std::vector<int> idx(p_, 0);
    VertexFunction out(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
        idx[0] = i;
        double acc = 0.0;
        for (long long code = 0; code < total; ++code) {
            long long rest = code;
            double prod = 1.0;
            for (int pos = 1; pos < p_; ++pos) {
                const int v = static_cast<int>(rest % n_);
                rest /= n_;
                idx[pos] = v;
                prod *= f[v];
            }
            const double entry = entry_T(idx);
            if (entry != 0.0) acc += entry * prod;
        }
        out[i] = acc;
    }
    return out;
}

VertexFunction SparseSymmetricTensorPair::b_apply(const VertexFunction& f) const {
    if (static_cast<int>(f.size()) != n_)
        throw Error(Errc::bad_params, "function length does not match tensor dimension");
    VertexFunction out(n_);
    for (int i = 0; i < n_; ++i) {
        double v = b_diag_[i];
        for (int e = 0; e < p_ - 1; ++e) v *= f[i];
        out[i] = v;
    }
    return out;
}

}  // namespace plap
