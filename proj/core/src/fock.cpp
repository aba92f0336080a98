#include "qzeta/fock.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <json.hpp>

namespace qzeta {

using nlohmann::json;

namespace {

std::vector<std::vector<Rational>> invert_matrix(const std::vector<std::vector<long>>& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("intersection matrix is singular");
        std::swap(a[piv], a[col]);
        Rational inv = 1 / a[col][col];
        for (auto& x : a[col]) x *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational f = a[row][col];
            for (std::size_t k = col; k < 2 * n; ++k) a[row][k] -= f * a[col][k];
        }
    }
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    return out;
}

}  // namespace

FrobeniusRing::FrobeniusRing(std::vector<std::vector<long>> intersection,
                             std::vector<long> canonical, std::optional<std::vector<long>> line)
    : intersection_(std::move(intersection)),
      canonical_(std::move(canonical)),
      line_(std::move(line)) {
    const std::size_t r = intersection_.size();
    for (const auto& row : intersection_)
        if (row.size() != r) throw std::invalid_argument("intersection matrix must be square");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (intersection_[i][j] != intersection_[j][i])
                throw std::invalid_argument("intersection matrix must be symmetric");
    if (canonical_.size() != r)
        throw std::invalid_argument("canonical class must have one coordinate per degree-2 basis");
    if (line_ && line_->size() != r)
        throw std::invalid_argument("line class must have one coordinate per degree-2 basis");
    intersection_inverse_ = invert_matrix(intersection_);
}

FrobeniusRing FrobeniusRing::from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("model JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("r") || !j.contains("intersection") || !j.contains("K"))
        throw std::invalid_argument("model JSON requires fields r, intersection, K");
    const int r = j["r"].get<int>();
    auto inter = j["intersection"].get<std::vector<std::vector<long>>>();
    if (static_cast<int>(inter.size()) != r)
        throw std::invalid_argument("intersection matrix size must equal r");
    auto K = j["K"].get<std::vector<long>>();
    std::optional<std::vector<long>> L;
    if (j.contains("L")) L = j["L"].get<std::vector<long>>();
    FrobeniusRing ring(std::move(inter), std::move(K), std::move(L));
    if (j.contains("chi") && j["chi"].get<long>() != ring.chi())
        throw std::invalid_argument("chi must equal 2 + r");
    return ring;
}

FrobeniusRing::Element FrobeniusRing::basis(int index) const {
    Element e(dim());
    e[static_cast<std::size_t>(index)] = 1;
    return e;
}

FrobeniusRing::Element FrobeniusRing::euler_class() const {
    Element e(dim());
    e[static_cast<std::size_t>(dim() - 1)] = chi();
    return e;
}

FrobeniusRing::Element FrobeniusRing::canonical_class() const {
    Element e(dim());
    for (int i = 0; i < rank(); ++i) e[static_cast<std::size_t>(1 + i)] = canonical_[i];
    return e;
}

std::optional<FrobeniusRing::Element> FrobeniusRing::line_class() const {
    if (!line_) return std::nullopt;
    Element e(dim());
    for (int i = 0; i < rank(); ++i) e[static_cast<std::size_t>(1 + i)] = (*line_)[i];
    return e;
}

int FrobeniusRing::degree_of_basis(int index) const {
    if (index == 0) return 0;
    if (index == dim() - 1) return 4;
    return 2;
}

FrobeniusRing::Element FrobeniusRing::mul(const Element& a, const Element& b) const {
    Element out(dim());
    const std::size_t pt = static_cast<std::size_t>(dim() - 1);
    // unit * x
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[0] * b[i] + b[0] * a[i];
    out[0] -= a[0] * b[0];  // the unit-unit product was counted twice
    // degree-2 pairings land on the point class
    for (int i = 0; i < rank(); ++i) {
        if (a[1 + i] == 0) continue;
        for (int j = 0; j < rank(); ++j) {
            if (b[1 + j] == 0 || intersection_[i][j] == 0) continue;
            out[pt] += a[1 + i] * b[1 + j] * Rational(intersection_[i][j]);
        }
    }
    return out;
}

Rational FrobeniusRing::pair(const Element& a, const Element& b) const {
    return mul(a, b)[static_cast<std::size_t>(dim() - 1)];
}

FrobeniusRing::Element FrobeniusRing::dual_basis(int index) const {
    const std::size_t pt = static_cast<std::size_t>(dim() - 1);
    Element e(dim());
    if (index == 0) {
        e[pt] = 1;  // <pt, 1> = 1
        return e;
    }
    if (index == dim() - 1) {
        e[0] = 1;
        return e;
    }
    for (int j = 0; j < rank(); ++j)
        e[static_cast<std::size_t>(1 + j)] = intersection_inverse_[index - 1][j];
    return e;
}

std::vector<std::pair<Rational, std::vector<int>>> FrobeniusRing::comultiply(const Element& x,
                                                                             int k) const {
    if (k < 1) throw std::invalid_argument("comultiply requires k >= 1");
    // tau_1 is the identity; expand x over the basis.
    std::vector<std::pair<Rational, std::vector<int>>> terms;
    for (int a = 0; a < dim(); ++a)
        if (x[static_cast<std::size_t>(a)] != 0)
            terms.push_back({x[static_cast<std::size_t>(a)], {a}});
    // Iterate tau_2 on the first leg: tau2(b) = sum_a (b * b_a) (x) dual(a).
    for (int step = 1; step < k; ++step) {
        std::vector<std::pair<Rational, std::vector<int>>> next;
        for (const auto& [coeff, legs] : terms) {
            const Element first = basis(legs[0]);
            for (int a = 0; a < dim(); ++a) {
                Element prod = mul(first, basis(a));
                Element dual = dual_basis(a);
                for (int u = 0; u < dim(); ++u) {
                    if (prod[static_cast<std::size_t>(u)] == 0) continue;
                    for (int v = 0; v < dim(); ++v) {
                        if (dual[static_cast<std::size_t>(v)] == 0) continue;
                        Rational c = coeff * prod[static_cast<std::size_t>(u)] *
                                     dual[static_cast<std::size_t>(v)];
                        std::vector<int> new_legs;
                        new_legs.reserve(legs.size() + 1);
                        new_legs.push_back(u);
                        new_legs.push_back(v);
                        new_legs.insert(new_legs.end(), legs.begin() + 1, legs.end());
                        next.push_back({std::move(c), std::move(new_legs)});
                    }
                }
            }
        }
        // merge duplicate leg tuples
        std::map<std::vector<int>, Rational> merged;
        for (auto& [c, legs] : next) merged[legs] += c;
        terms.clear();
        for (auto& [legs, c] : merged)
            if (c != 0) terms.push_back({c, legs});
    }
    return terms;
}

SurfacePairings FrobeniusRing::pairings_of(const Element& alpha) const {
    SurfacePairings p;
    p.pair_e = pair(euler_class(), alpha);
    p.pair_1 = pair(unit(), alpha);
    p.pair_K = pair(canonical_class(), alpha);
    p.pair_K2 = pair(mul(canonical_class(), canonical_class()), alpha);
    p.chi = chi();
    return p;
}

FockSpace::FockSpace(const FrobeniusRing& ring, int n_max) : ring_(&ring), n_max_(n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    // Enumerate multisets of (mode, color) by total degree, canonical order.
    std::vector<std::pair<int, int>> current;
    std::function<void(int, std::pair<int, int>)> descend = [&](int remaining,
                                                                std::pair<int, int> min_factor) {
        // record the current element (all degrees <= n_max are kept)
        FockBasisElement e{current};
        elements_.push_back(e);
        degrees_.push_back(n_max - remaining);
        for (int n = min_factor.first; n <= remaining; ++n) {
            const int c0 = (n == min_factor.first) ? min_factor.second : 0;
            for (int c = c0; c < ring.dim(); ++c) {
                current.push_back({n, c});
                descend(remaining - n, {n, c});
                current.pop_back();
            }
        }
    };
    descend(n_max, {1, 0});
    // sort by degree, then canonically, and build the index
    std::vector<int> perm(elements_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        if (degrees_[a] != degrees_[b]) return degrees_[a] < degrees_[b];
        return elements_[a].factors < elements_[b].factors;
    });
    std::vector<FockBasisElement> sorted_elems;
    std::vector<int> sorted_degs;
    sorted_elems.reserve(elements_.size());
    for (int i : perm) {
        sorted_elems.push_back(std::move(elements_[i]));
        sorted_degs.push_back(degrees_[i]);
    }
    elements_ = std::move(sorted_elems);
    degrees_ = std::move(sorted_degs);
    blocks_.assign(n_max + 1, {0, 0});
    for (int d = 0, i = 0; d <= n_max; ++d) {
        int begin = i;
        while (i < static_cast<int>(elements_.size()) && degrees_[i] == d) ++i;
        blocks_[d] = {begin, i};
    }
    index_.reserve(elements_.size());
    for (int i = 0; i < static_cast<int>(elements_.size()); ++i) index_[elements_[i]] = i;
}

int FockSpace::index_of(const FockBasisElement& e) const {
    auto it = index_.find(e);
    return it == index_.end() ? -1 : it->second;
}

std::pair<int, int> FockSpace::degree_block(int degree) const {
    if (degree < 0 || degree > n_max_) throw std::out_of_range("degree outside the window");
    return blocks_[degree];
}

FockOperator::FockOperator(const FockSpace& space)
    : space_(&space), cols_(static_cast<std::size_t>(space.size())) {}

FockOperator FockOperator::identity(const FockSpace& space) {
    return scalar(space, Rational(1));
}

FockOperator FockOperator::scalar(const FockSpace& space, const Rational& c) {
    FockOperator op(space);
    if (c != 0)
        for (int i = 0; i < space.size(); ++i) op.cols_[i][i] = c;
    return op;
}

void FockOperator::add_entry(int row, int col, const Rational& c) {
    if (c == 0) return;
    auto& column = cols_[static_cast<std::size_t>(col)];
    auto it = column.find(row);
    if (it == column.end()) {
        column.emplace(row, c);
    } else {
        it->second += c;
        if (it->second == 0) column.erase(it);
    }
}

SparseVector FockOperator::apply(const SparseVector& v) const {
    SparseVector out;
    for (const auto& [j, c] : v) {
        for (const auto& [i, a] : cols_[static_cast<std::size_t>(j)]) {
            auto it = out.find(i);
            if (it == out.end()) {
                Rational prod = a * c;
                if (prod != 0) out.emplace(i, std::move(prod));
            } else {
                it->second += a * c;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

FockOperator& FockOperator::operator+=(const FockOperator& rhs) {
    truncated_ = truncated_ || rhs.truncated_;
    for (int j = 0; j < space_->size(); ++j)
        for (const auto& [i, c] : rhs.cols_[static_cast<std::size_t>(j)]) add_entry(i, j, c);
    return *this;
}

FockOperator& FockOperator::operator*=(const Rational& c) {
    if (c == 0) {
        for (auto& col : cols_) col.clear();
        return *this;
    }
    for (auto& col : cols_)
        for (auto& [i, x] : col) x *= c;
    return *this;
}

FockOperator compose(const FockOperator& a, const FockOperator& b) {
    FockOperator out(a.space());
    out.truncated_ = a.truncated_ || b.truncated_;
    for (int j = 0; j < a.space().size(); ++j) {
        const auto& bcol = b.cols_[static_cast<std::size_t>(j)];
        if (bcol.empty()) continue;
        auto& outcol = out.cols_[static_cast<std::size_t>(j)];
        for (const auto& [k, c] : bcol) {
            for (const auto& [i, x] : a.cols_[static_cast<std::size_t>(k)]) {
                auto it = outcol.find(i);
                if (it == outcol.end()) {
                    Rational prod = x * c;
                    if (prod != 0) outcol.emplace(i, std::move(prod));
                } else {
                    it->second += x * c;
                    if (it->second == 0) outcol.erase(it);
                }
            }
        }
    }
    return out;
}

Rational FockOperator::block_trace(int degree) const {
    auto [begin, end] = space_->degree_block(degree);
    Rational tr = 0;
    for (int i = begin; i < end; ++i) {
        const auto& col = cols_[static_cast<std::size_t>(i)];
        auto it = col.find(i);
        if (it != col.end()) tr += it->second;
    }
    return tr;
}

bool FockOperator::is_zero() const {
    for (const auto& col : cols_)
        if (!col.empty()) return false;
    return true;
}

bool same_matrix(const FockOperator& a, const FockOperator& b) {
    if (a.space_->size() != b.space_->size()) return false;
    for (int j = 0; j < a.space_->size(); ++j)
        if (a.cols_[static_cast<std::size_t>(j)] != b.cols_[static_cast<std::size_t>(j)])
            return false;
    return true;
}

namespace {

// Shared column rule for a_n(alpha): appends a creation factor for n < 0,
// contracts against matching factors for n > 0. Returns whether the image
// was truncated at the window. Emits (row, coefficient) pairs.
template <typename Emit>
bool heisenberg_column(const FockSpace& space, int n, const FrobeniusRing::Element& alpha,
                       const FockBasisElement& e, Emit&& emit) {
    const FrobeniusRing& ring = space.ring();
    if (n < 0) {
        const int mode = -n;
        if (e.degree() + mode > space.n_max()) return true;
        for (int c = 0; c < ring.dim(); ++c) {
            const Rational& coeff = alpha[static_cast<std::size_t>(c)];
            if (coeff == 0) continue;
            FockBasisElement image = e;
            image.factors.push_back({mode, c});
            image.normalize();
            emit(space.index_of(image), coeff);
        }
        return false;
    }
    for (std::size_t f = 0; f < e.factors.size(); ++f) {
        if (f > 0 && e.factors[f] == e.factors[f - 1]) continue;  // same type handled once
        const auto [mode, color] = e.factors[f];
        if (mode != n) continue;
        int mult = 0;
        for (const auto& g : e.factors)
            if (g == e.factors[f]) ++mult;
        Rational w = Rational(-n) * ring.pair(alpha, ring.basis(color)) * Rational(mult);
        if (w == 0) continue;
        FockBasisElement image = e;
        image.factors.erase(image.factors.begin() + static_cast<long>(f));
        emit(space.index_of(image), w);
    }
    return false;
}

}  // namespace

FockOperator heisenberg(const FockSpace& space, int n, const FrobeniusRing::Element& alpha) {
    FockOperator op(space);
    if (n == 0) return op;  // a_0 = 0
    for (int j = 0; j < space.size(); ++j) {
        bool truncated = heisenberg_column(space, n, alpha, space.element(j),
                                           [&](int row, const Rational& c) { op.add_entry(row, j, c); });
        if (truncated) op.mark_truncated();
    }
    return op;
}

SparseVector heisenberg_apply(const FockSpace& space, int n, const FrobeniusRing::Element& alpha,
                              const SparseVector& v) {
    SparseVector out;
    if (n == 0) return out;
    for (const auto& [j, cj] : v) {
        heisenberg_column(space, n, alpha, space.element(j), [&](int row, const Rational& c) {
            auto it = out.find(row);
            if (it == out.end()) {
                Rational prod = c * cj;
                if (prod != 0) out.emplace(row, std::move(prod));
            } else {
                it->second += c * cj;
                if (it->second == 0) out.erase(it);
            }
        });
    }
    return out;
}

const FockOperator& HeisenbergTable::get(int part, int color) {
    auto key = std::make_pair(part, color);
    auto it = ops_.find(key);
    if (it != ops_.end()) return it->second;
    return ops_.emplace(key, heisenberg(*space_, part, space_->ring().basis(color)))
        .first->second;
}

FockOperator a_lambda(const FockSpace& space, const GenPartition& lambda,
                      const FrobeniusRing::Element& alpha, HeisenbergTable* table) {
    const FrobeniusRing& ring = space.ring();
    if (lambda.multiplicities().empty())
        return FockOperator::scalar(space, ring.pair(alpha, ring.unit()));
    HeisenbergTable local(space);
    HeisenbergTable& ops = table != nullptr ? *table : local;
    const std::vector<int> parts = lambda.to_parts();  // ascending: creations then annihilations
    const int k = static_cast<int>(parts.size());
    auto expansion = ring.comultiply(alpha, k);
    FockOperator out(space);
    for (const auto& [coeff, legs] : expansion) {
        // product a_{p_1}(leg_1) ... a_{p_k}(leg_k), rightmost applied first
        FockOperator acc = ops.get(parts[k - 1], legs[k - 1]);
        for (int i = k - 2; i >= 0; --i) acc = compose(ops.get(parts[i], legs[i]), acc);
        acc *= coeff;
        out += acc;
    }
    return out;
}

FockOperator g2_operator(const FockSpace& space, const FrobeniusRing::Element& alpha) {
    const FrobeniusRing& ring = space.ring();
    FockOperator out(space);
    HeisenbergTable table(space);
    const int bound = space.n_max();

    // group 1: - sum over length-4 balanced partitions of a_lambda(alpha)/lambda^!
    for (const GenPartition& lam : balanced_partitions(4, bound)) {
        Rational c = Rational(-1) / Rational(lam.factorial());
        out += c * a_lambda(space, lam, alpha, &table);
    }
    // group 2: + sum_n (n^2-1)/12 a_{-n} a_n(e alpha)
    const FrobeniusRing::Element e_alpha = ring.mul(ring.euler_class(), alpha);
    for (int n = 2; n <= bound; ++n) {
        Rational c = rat(static_cast<long>(n) * n - 1, 12);
        out += c * a_lambda(space, GenPartition{-n, n}, e_alpha, &table);
    }
    // group 3: - sum over length-3 balanced partitions of (|lambda_+|-1)/2 a_lambda(K alpha)/lambda^!
    const FrobeniusRing::Element k_alpha = ring.mul(ring.canonical_class(), alpha);
    bool k_alpha_zero = true;
    for (const auto& x : k_alpha) k_alpha_zero = k_alpha_zero && x == 0;
    if (!k_alpha_zero) {
        for (const GenPartition& lam : balanced_partitions(3, bound)) {
            Rational c = rat(-(lam.positive_size() - 1), 2) / Rational(lam.factorial());
            out += c * a_lambda(space, lam, k_alpha, &table);
        }
    }
    // group 4: - sum_n (n-1)(2n-1)/12 a_{-n} a_n(K^2 alpha)
    const FrobeniusRing::Element k2_alpha =
        ring.mul(ring.mul(ring.canonical_class(), ring.canonical_class()), alpha);
    bool k2_alpha_zero = true;
    for (const auto& x : k2_alpha) k2_alpha_zero = k2_alpha_zero && x == 0;
    if (!k2_alpha_zero) {
        for (int n = 2; n <= bound; ++n) {
            Rational c = rat(-(static_cast<long>(n) - 1) * (2 * static_cast<long>(n) - 1), 12);
            out += c * a_lambda(space, GenPartition{-n, n}, k2_alpha, &table);
        }
    }
    return out;
}

FockOperator w_operator(const FockSpace& space) {
    const FrobeniusRing& ring = space.ring();
    const int bound = space.n_max();

    FrobeniusRing::Element minus_unit = ring.unit();
    for (auto& x : minus_unit) x = -x;
    FrobeniusRing::Element unit_minus_k = ring.unit();
    const FrobeniusRing::Element k = ring.canonical_class();
    for (std::size_t i = 0; i < unit_minus_k.size(); ++i) unit_minus_k[i] -= k[i];

    FockOperator lower(space);  // sum_n (1/n) a_n(-1_X)
    FockOperator raise(space);  // sum_n (1/n) a_{-n}(1_X - K_X)
    for (int n = 1; n <= bound; ++n) {
        lower += rat(1, n) * heisenberg(space, n, minus_unit);
        raise += rat(1, n) * heisenberg(space, -n, unit_minus_k);
    }
    auto exponential = [&](const FockOperator& gen) {
        FockOperator acc = FockOperator::identity(space);
        FockOperator term = FockOperator::identity(space);
        for (int i = 1; i <= bound; ++i) {
            term = compose(gen, term);
            term *= rat(1, i);
            if (term.is_zero()) break;
            acc += term;
        }
        return acc;
    };
    return compose(exponential(raise), exponential(lower));
}

VertexTraceContext::VertexTraceContext(const FrobeniusRing& ring, int n_max)
    : space_(ring, n_max), w_(w_operator(space_)) {}

PowerSeries VertexTraceContext::trace_q_w(const FockOperator& m) const {
    FockOperator composed = compose(w_, m);
    PowerSeries out(static_cast<std::size_t>(space_.n_max()));
    for (int d = 0; d <= space_.n_max(); ++d)
        out.set_coeff(static_cast<std::size_t>(d), composed.block_trace(d));
    return out;
}

PowerSeries VertexTraceContext::trace_q_w() const {
    PowerSeries out(static_cast<std::size_t>(space_.n_max()));
    for (int d = 0; d <= space_.n_max(); ++d)
        out.set_coeff(static_cast<std::size_t>(d), w_.block_trace(d));
    return out;
}

FrobeniusRing projective_plane_model(long line_multiple) {
    return FrobeniusRing({{1}}, {-3}, std::vector<long>{line_multiple});
}

FrobeniusRing k3_like_small_model() {
    return FrobeniusRing({{0, 1}, {1, 0}}, {0, 0}, std::vector<long>{1, 1});
}

FrobeniusRing k3_model() {
    std::vector<std::vector<long>> m(22, std::vector<long>(22, 0));
    for (int b = 0; b < 11; ++b) {
        m[2 * b][2 * b + 1] = 1;
        m[2 * b + 1][2 * b] = 1;
    }
    std::vector<long> K(22, 0);
    std::vector<long> L(22, 0);
    L[0] = 1;
    L[1] = 1;  // L^2 = 2
    return FrobeniusRing(std::move(m), std::move(K), std::move(L));
}

std::optional<FrobeniusRing> realize_model(long chi, long K2) {
    const long r = chi - 2;
    if (r < 0) return std::nullopt;
    if (r == 0) {
        if (K2 != 0) return std::nullopt;
        return FrobeniusRing({}, {});
    }
    if (r == 1) {
        // [[m]] with K = a h: K^2 = a^2 m
        if (K2 == 0) return FrobeniusRing({{1}}, {0});
        return FrobeniusRing({{K2}}, {1});
    }
    // [[0,1],[1,c]] (+) identity padding, K = (a, 1, 0, ...): K^2 = 2a + c
    const long c = ((K2 % 2) + 2) % 2;
    const long a = (K2 - c) / 2;
    std::vector<std::vector<long>> m(r, std::vector<long>(r, 0));
    m[0][1] = 1;
    m[1][0] = 1;
    m[1][1] = c;
    for (long i = 2; i < r; ++i) m[i][i] = 1;
    std::vector<long> K(r, 0);
    K[0] = a;
    K[1] = 1;
    return FrobeniusRing(std::move(m), std::move(K));
}

}  // namespace qzeta
