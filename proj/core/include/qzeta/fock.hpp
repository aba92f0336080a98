#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qzeta/partitions.hpp"
#include "qzeta/power_series.hpp"
#include "qzeta/rational.hpp"
#include "qzeta/surface.hpp"

namespace qzeta {

/// Even-cohomology model of a surface with b_1 = 0: basis index 0 is the
/// unit, 1..r are the degree-2 classes, r+1 is the point class. Degree-2
/// products are given by an integer intersection matrix; the pairing reads
/// off the point-class coefficient of a product. chi = 2 + r.
class FrobeniusRing {
public:
    using Element = std::vector<Rational>;  // coordinates over the full basis

    FrobeniusRing(std::vector<std::vector<long>> intersection, std::vector<long> canonical,
                  std::optional<std::vector<long>> line = std::nullopt);

    /// {"r": int, "intersection": [[int]], "K": [int], "L": [int], "chi": int?}
    static FrobeniusRing from_json_string(const std::string& text);

    int rank() const { return static_cast<int>(intersection_.size()); }
    int dim() const { return rank() + 2; }
    long chi() const { return 2 + rank(); }

    Element zero() const { return Element(dim()); }
    Element basis(int index) const;
    Element unit() const { return basis(0); }
    Element point() const { return basis(dim() - 1); }
    Element euler_class() const;  // chi * point
    Element canonical_class() const;
    std::optional<Element> line_class() const;

    int degree_of_basis(int index) const;  // 0, 2 or 4

    Element mul(const Element& a, const Element& b) const;
    Rational pair(const Element& a, const Element& b) const;  // <a, b> = point part of a*b

    /// Dual basis w.r.t. the pairing: <dual(i), basis(j)> = delta_ij.
    Element dual_basis(int index) const;

    /// Kuenneth expansion of the diagonal pushforward tau_k*(x): a list of
    /// (coefficient, basis-index tuple of length k).
    std::vector<std::pair<Rational, std::vector<int>>> comultiply(const Element& x, int k) const;

    /// Pairings of alpha against e_X, 1_X, K_X, K_X^2, for closed-form cross-checks.
    SurfacePairings pairings_of(const Element& alpha) const;

private:
    std::vector<std::vector<long>> intersection_;
    std::vector<std::vector<Rational>> intersection_inverse_;
    std::vector<long> canonical_;
    std::optional<std::vector<long>> line_;
};

/// Basis vector a_{-n_1}(b_{c_1}) ... a_{-n_k}(b_{c_k}) |0>, stored as the
/// sorted multiset of (mode, color) pairs; degree = sum of modes.
struct FockBasisElement {
    std::vector<std::pair<int, int>> factors;

    int degree() const {
        int d = 0;
        for (const auto& [n, c] : factors) d += n;
        return d;
    }
    void normalize() { std::sort(factors.begin(), factors.end()); }
    friend bool operator==(const FockBasisElement& a, const FockBasisElement& b) {
        return a.factors == b.factors;
    }
};

struct FockBasisHash {
    std::size_t operator()(const FockBasisElement& e) const {
        std::size_t h = 1469598103934665603ull;
        for (const auto& [n, c] : e.factors) {
            h = (h ^ static_cast<std::size_t>(n * 131 + c)) * 1099511628211ull;
        }
        return h;
    }
};

/// Enumerated Fock basis of all degrees <= n_max over a model ring, indexed
/// contiguously and grouped by degree.
class FockSpace {
public:
    FockSpace(const FrobeniusRing& ring, int n_max);

    const FrobeniusRing& ring() const { return *ring_; }
    int n_max() const { return n_max_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const FockBasisElement& element(int index) const { return elements_[index]; }
    int degree_of(int index) const { return degrees_[index]; }
    int index_of(const FockBasisElement& e) const;  // -1 when absent
    std::pair<int, int> degree_block(int degree) const;

private:
    const FrobeniusRing* ring_;
    int n_max_;
    std::vector<FockBasisElement> elements_;
    std::vector<int> degrees_;
    std::vector<std::pair<int, int>> blocks_;
    std::unordered_map<FockBasisElement, int, FockBasisHash> index_;
};

using SparseVector = std::map<int, Rational>;

/// Exact sparse operator on a FockSpace. Any image component that would
/// leave the degree window is dropped and the operator is flagged truncated;
/// flagged operators remain valid for diagonal-block traces.
class FockOperator {
public:
    explicit FockOperator(const FockSpace& space);

    static FockOperator identity(const FockSpace& space);
    static FockOperator scalar(const FockSpace& space, const Rational& c);

    const FockSpace& space() const { return *space_; }
    bool truncated() const { return truncated_; }
    void mark_truncated() { truncated_ = true; }

    const SparseVector& column(int j) const { return cols_[j]; }
    void add_entry(int row, int col, const Rational& c);

    SparseVector apply(const SparseVector& v) const;

    FockOperator& operator+=(const FockOperator& rhs);
    FockOperator& operator*=(const Rational& c);
    friend FockOperator operator+(FockOperator a, const FockOperator& b) {
        a += b;
        return a;
    }
    friend FockOperator operator*(const Rational& c, FockOperator a) {
        a *= c;
        return a;
    }
    /// Composition a(b(v)).
    friend FockOperator compose(const FockOperator& a, const FockOperator& b);

    Rational block_trace(int degree) const;
    bool is_zero() const;
    /// Max |entry difference| == 0 comparison, for matrix identities.
    friend bool same_matrix(const FockOperator& a, const FockOperator& b);

private:
    const FockSpace* space_;
    std::vector<SparseVector> cols_;
    bool truncated_ = false;
};

/// Heisenberg operator a_n(alpha): creation for n < 0, annihilation for
/// n > 0 (determined by killing the vacuum and the commutation relation
/// [a_m(alpha), a_n(beta)] = -m delta_{m,-n} <alpha,beta> Id); n = 0 yields
/// the zero operator.
FockOperator heisenberg(const FockSpace& space, int n, const FrobeniusRing::Element& alpha);

/// Image of a vector under a_n(alpha) without materializing the matrix.
/// Components leaving the degree window are dropped.
SparseVector heisenberg_apply(const FockSpace& space, int n, const FrobeniusRing::Element& alpha,
                              const SparseVector& v);

/// Cache of generator matrices keyed by (mode, basis color), shared across
/// the many monomials of a Chern operator.
class HeisenbergTable {
public:
    explicit HeisenbergTable(const FockSpace& space) : space_(&space) {}
    const FockOperator& get(int part, int color);

private:
    const FockSpace* space_;
    std::map<std::pair<int, int>, FockOperator> ops_;
};

/// Normal-ordered Heisenberg monomial a_lambda(alpha) with the diagonal
/// comultiplication distributing alpha over the factors. The empty
/// partition gives the scalar <alpha, 1_X> Id. A shared generator table
/// may be passed to avoid rebuilding the same matrices.
FockOperator a_lambda(const FockSpace& space, const GenPartition& lambda,
                      const FrobeniusRing::Element& alpha, HeisenbergTable* table = nullptr);

/// The degree-preserving Chern character operator for k = 2:
///   - sum_{l(lambda)=4, |lambda|=0} a_lambda(alpha)/lambda^!
///   + sum_n (n^2-1)/12 a_{-n} a_n(e alpha)
///   - sum_{l(lambda)=3, |lambda|=0} (|lambda_+|-1)/2 a_lambda(K alpha)/lambda^!
///   - sum_n (n-1)(2n-1)/12 a_{-n} a_n(K^2 alpha),
/// with parts beyond the degree window omitted (they act as zero).
FockOperator g2_operator(const FockSpace& space, const FrobeniusRing::Element& alpha);

/// The vertex operator W = Gamma_-(1_X - K_X) Gamma_+(-1_X) with the formal
/// variables specialized to 1; Gamma_+- are the truncated exponentials of
/// sum_n (1/n) a_{+-n}(.) on the degree window.
FockOperator w_operator(const FockSpace& space);

/// Caches the space and W so several traces against one model stay cheap.
class VertexTraceContext {
public:
    VertexTraceContext(const FrobeniusRing& ring, int n_max);

    const FockSpace& space() const { return space_; }
    const FockOperator& w() const { return w_; }

    /// Tr q^n W M as a series of order n_max (diagonal blocks only).
    PowerSeries trace_q_w(const FockOperator& m) const;
    PowerSeries trace_q_w() const;  // M = Id

private:
    FockSpace space_;
    FockOperator w_;
};

/// Built-in model rings.
FrobeniusRing projective_plane_model(long line_multiple = 1);  // P^2 with L = d*H
FrobeniusRing k3_like_small_model();                           // r = 2, K = 0, chi = 4
FrobeniusRing k3_model();                                      // r = 22, K = 0, chi = 24

/// A model ring with the requested Euler characteristic and canonical
/// self-intersection, when one exists with b_1 = 0 (so rank chi - 2 >= 0).
std::optional<FrobeniusRing> realize_model(long chi, long K2);

}  // namespace qzeta
