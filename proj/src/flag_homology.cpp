#include "bettisig/flag_homology.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "bettisig/errors.hpp"

namespace bettisig {

namespace {

constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > saturated - b ? saturated : a + b;
}

}  // namespace

BinomialTable::BinomialTable(std::size_t max_n, std::size_t max_k)
    : max_k_(max_k), table_((max_n + 1) * (max_k + 1), 0) {
    for (std::size_t n = 0; n <= max_n; ++n) {
        table_[n * (max_k_ + 1)] = 1;
        for (std::size_t k = 1; k <= std::min(n, max_k_); ++k) {
            const std::uint64_t left = table_[(n - 1) * (max_k_ + 1) + k - 1];
            const std::uint64_t up = k <= n - 1 ? table_[(n - 1) * (max_k_ + 1) + k] : 0;
            table_[n * (max_k_ + 1) + k] = sat_add(left, up);
        }
    }
}

// ---------------------------------------------------------------------------
// Clique enumeration

FlagFiltration::FlagFiltration(const OrderComplex& oc, std::size_t max_clique_size)
    : oc_(oc),
      n_(oc.n_vertices()),
      max_clique_size_(max_clique_size),
      ranks_(n_ * n_, 0),
      neighbors_above_(n_),
      binomials_(n_, max_clique_size + 1) {
    for (std::size_t s = 0; s < oc.edge_count(); ++s) {
        const Edge& e = oc.edges()[s];
        const auto rank = static_cast<std::uint32_t>(s + 1);
        ranks_[e.i * n_ + e.j] = rank;
        ranks_[e.j * n_ + e.i] = rank;
        neighbors_above_[e.i].push_back(e.j);
    }
    for (auto& nb : neighbors_above_) std::sort(nb.begin(), nb.end());
    complete_ = oc.edge_count() == choose2(n_);
}

std::uint64_t FlagFiltration::total_count() const {
    std::uint64_t total = 0;
    for (auto c : counts_) total = sat_add(total, c);
    return total;
}

void FlagFiltration::vertices_of(std::uint64_t index, std::size_t dim,
                                 std::span<std::uint32_t> out) const {
    std::size_t hi = n_;  // exclusive bound for the next vertex
    for (std::size_t k = dim + 1, pos = 0; k >= 1; --k, ++pos) {
        // largest v < hi with C(v, k) <= index
        std::size_t lo = k - 1, top = hi - 1;
        while (lo < top) {
            const std::size_t mid = top - (top - lo) / 2;
            if (binomials_(mid, k) <= index)
                lo = mid;
            else
                top = mid - 1;
        }
        out[pos] = static_cast<std::uint32_t>(lo);
        index -= binomials_(lo, k);
        hi = lo;
    }
}

std::vector<std::uint32_t> FlagFiltration::vertices_of(std::uint64_t index, std::size_t dim) const {
    std::vector<std::uint32_t> v(dim + 1);
    vertices_of(index, dim, v);
    return v;
}

std::uint64_t FlagFiltration::index_of(std::span<const std::uint32_t> sorted_ascending) const {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < sorted_ascending.size(); ++i)
        index += binomials_(sorted_ascending[i], i + 1);
    return index;
}

std::optional<std::uint32_t> FlagFiltration::rank_of(
    std::span<const std::uint32_t> vertices) const {
    std::uint32_t rank = 0;
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            const std::uint32_t r = edge_rank(vertices[a], vertices[b]);
            if (r == 0) return std::nullopt;
            rank = std::max(rank, r);
        }
    }
    return rank;
}

namespace {

// Depth-first extension of cliques in increasing vertex order.
template <class Visit>
void extend_cliques(const FlagFiltration& f,
                    const std::vector<std::vector<std::uint32_t>>& neighbors_above,
                    std::vector<std::uint32_t>& clique, std::uint32_t rank,
                    const std::vector<std::uint32_t>& candidates, std::size_t max_size,
                    Visit& visit) {
    std::vector<std::uint32_t> next;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const std::uint32_t w = candidates[c];
        std::uint32_t r = rank;
        for (auto u : clique) r = std::max(r, f.edge_rank(u, w));
        clique.push_back(w);
        visit(std::span<const std::uint32_t>(clique), r);
        if (clique.size() < max_size) {
            next.clear();
            const auto& nb = neighbors_above[w];
            // candidates after c that are adjacent to w
            std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(c) + 1,
                                  candidates.end(), nb.begin(), nb.end(), std::back_inserter(next));
            if (!next.empty()) extend_cliques(f, neighbors_above, clique, r, next, max_size, visit);
        }
        clique.pop_back();
    }
}

}  // namespace

void FlagFiltration::for_each_simplex(
    std::size_t dim,
    const std::function<void(std::span<const std::uint32_t>, std::uint32_t)>& visit) const {
    const std::size_t size = dim + 1;
    auto filter = [&](std::span<const std::uint32_t> clique, std::uint32_t rank) {
        if (clique.size() == size) visit(clique, rank);
    };
    std::vector<std::uint32_t> clique;
    for (std::uint32_t v = 0; v < n_; ++v) {
        clique.assign(1, v);
        if (size == 1) {
            visit(clique, 0);
            continue;
        }
        extend_cliques(*this, neighbors_above_, clique, 0, neighbors_above_[v], size, filter);
    }
}

FlagFiltration enumerate_cliques(const OrderComplex& oc, std::size_t max_clique_size,
                                 std::uint64_t budget) {
    if (max_clique_size < 1) throw Error("max_clique_size must be at least 1");
    FlagFiltration f(oc, max_clique_size);
    const std::size_t n = f.n_;
    if (f.binomials_(n, std::min(max_clique_size, n)) == saturated) throw BudgetExceeded(budget);

    if (f.complete_) {
        std::uint64_t total = 0;
        for (std::size_t k = 1; k <= max_clique_size; ++k)
            total = sat_add(total, f.binomials_(n, k));
        if (total > budget) throw BudgetExceeded(budget);
    }

    const std::size_t stored_dims = max_clique_size - 1;
    f.stored_.assign(stored_dims, {});
    f.counts_.assign(max_clique_size, 0);
    if (f.complete_) {
        for (std::size_t d = 0; d < stored_dims; ++d)
            f.stored_[d].reserve(static_cast<std::size_t>(f.binomials_(n, d + 1)));
    }

    std::uint64_t total = 0;
    auto visit = [&](std::span<const std::uint32_t> clique, std::uint32_t rank) {
        const std::size_t dim = clique.size() - 1;
        ++f.counts_[dim];
        if (++total > budget) throw BudgetExceeded(budget);
        if (dim < stored_dims) f.stored_[dim].push_back({f.index_of(clique), rank});
    };
    std::vector<std::uint32_t> clique;
    for (std::uint32_t v = 0; v < n; ++v) {
        clique.assign(1, v);
        visit(clique, 0);
        if (max_clique_size > 1)
            extend_cliques(f, f.neighbors_above_, clique, 0, f.neighbors_above_[v], max_clique_size,
                           visit);
    }
    for (auto& level : f.stored_)
        std::sort(level.begin(), level.end(),
                  [](const FilteredSimplex& a, const FilteredSimplex& b) {
                      return a.rank != b.rank ? a.rank < b.rank : a.index < b.index;
                  });
    return f;
}

BoundaryMatrix assemble_boundary(const FlagFiltration& f, std::size_t dim) {
    if (dim == 0 || dim >= f.stored_dims())
        throw DimOutOfRange("boundary of dimension " + std::to_string(dim) + " not available");
    const auto& faces = f.simplices(dim - 1);
    std::unordered_map<std::uint64_t, std::uint32_t> row_of;
    row_of.reserve(faces.size());
    for (std::size_t r = 0; r < faces.size(); ++r)
        row_of.emplace(faces[r].index, static_cast<std::uint32_t>(r));

    BoundaryMatrix m;
    m.dim = dim;
    m.rows = faces.size();
    std::vector<std::uint32_t> verts(dim + 1), face(dim);
    for (const auto& s : f.simplices(dim)) {
        f.vertices_of(s.index, dim, verts);
        std::reverse(verts.begin(), verts.end());
        std::vector<std::uint32_t> column;
        for (std::size_t drop = 0; drop <= dim; ++drop) {
            std::size_t k = 0;
            for (std::size_t v = 0; v <= dim; ++v)
                if (v != drop) face[k++] = verts[v];
            column.push_back(row_of.at(f.index_of(face)));
        }
        std::sort(column.begin(), column.end());
        m.columns.push_back(std::move(column));
    }
    return m;
}

// ---------------------------------------------------------------------------
// Persistence

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), 0u);
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t> rank_;
};

// Filtration order within one dimension: by rank, then by index.
struct Entry {
    std::uint32_t rank;
    std::uint64_t index;
    friend bool operator==(const Entry&, const Entry&) = default;
    friend bool operator<(const Entry& a, const Entry& b) {
        return a.rank != b.rank ? a.rank < b.rank : a.index < b.index;
    }
    friend bool operator>(const Entry& a, const Entry& b) { return b < a; }
};

using MinHeap = std::priority_queue<Entry, std::vector<Entry>, std::greater<>>;

// Calls fn(Entry) for every coface of the simplex whose vertices (decreasing)
// are given.
template <class Fn>
void for_each_coface(const FlagFiltration& f, std::uint64_t index, std::uint32_t rank,
                     std::span<const std::uint32_t> vertices, Fn&& fn) {
    const auto& binom = f.binomials();
    std::uint64_t below = index;
    std::uint64_t above = 0;
    std::size_t k = vertices.size();
    for (std::ptrdiff_t v = static_cast<std::ptrdiff_t>(f.n_vertices()) - 1; v >= 0; --v) {
        const auto uv = static_cast<std::size_t>(v);
        if (k > 0 && binom(uv, k) <= below) {
            below -= binom(uv, k);
            above += binom(uv, k + 1);
            --k;
            continue;
        }
        std::uint32_t r = rank;
        bool present = true;
        for (auto u : vertices) {
            const std::uint32_t e = f.edge_rank(uv, u);
            if (e == 0) {
                present = false;
                break;
            }
            r = std::max(r, e);
        }
        if (present) fn(Entry{r, above + binom(uv, k + 1) + below});
    }
}

std::optional<Entry> pop_pivot(MinHeap& heap) {
    while (!heap.empty()) {
        Entry e = heap.top();
        heap.pop();
        if (!heap.empty() && heap.top() == e) {
            heap.pop();  // pair cancels over Z2
            continue;
        }
        heap.push(e);
        return e;
    }
    return std::nullopt;
}

// Reduces the coboundary matrix of dimension `dim` over the given columns
// (processed in the order given, which must be reverse filtration order).
// Appends intervals and returns the set of pivot cofaces for clearing.
std::unordered_set<std::uint64_t> reduce_coboundary(const FlagFiltration& f, std::size_t dim,
                                                    const std::vector<FilteredSimplex>& columns,
                                                    std::vector<PersistenceInterval>& intervals) {
    std::unordered_map<std::uint64_t, std::uint32_t> pivot_column;
    pivot_column.reserve(columns.size());
    std::vector<std::vector<FilteredSimplex>> extras(columns.size());
    std::vector<std::uint32_t> verts(dim + 1);

    auto record = [&](std::uint32_t birth, std::optional<std::uint32_t> death) {
        if (death && *death == birth) return;
        intervals.push_back({birth, death ? std::optional<std::uint64_t>(*death) : std::nullopt});
    };
    auto push_coboundary = [&](MinHeap& heap, const FilteredSimplex& s) {
        f.vertices_of(s.index, dim, verts);
        for_each_coface(f, s.index, s.rank, verts, [&](Entry e) { heap.push(e); });
    };

    for (std::uint32_t slot = 0; slot < columns.size(); ++slot) {
        const FilteredSimplex& col = columns[slot];
        f.vertices_of(col.index, dim, verts);
        std::optional<Entry> first;
        for_each_coface(f, col.index, col.rank, verts, [&](Entry e) {
            if (!first || e < *first) first = e;
        });
        if (!first) {
            record(col.rank, std::nullopt);
            continue;
        }
        if (!pivot_column.contains(first->index)) {
            pivot_column.emplace(first->index, slot);
            record(col.rank, first->rank);
            continue;
        }

        MinHeap heap;
        push_coboundary(heap, col);
        std::vector<FilteredSimplex> added;
        while (true) {
            const auto pivot = pop_pivot(heap);
            if (!pivot) {
                record(col.rank, std::nullopt);
                break;
            }
            const auto it = pivot_column.find(pivot->index);
            if (it == pivot_column.end()) {
                pivot_column.emplace(pivot->index, slot);
                // Keep the reduction column canonical: each simplex at most once.
                std::sort(added.begin(), added.end(),
                          [](const FilteredSimplex& a, const FilteredSimplex& b) {
                              return a.index < b.index;
                          });
                std::vector<FilteredSimplex> kept;
                for (std::size_t a = 0; a < added.size();) {
                    std::size_t b = a;
                    while (b < added.size() && added[b].index == added[a].index) ++b;
                    if ((b - a) % 2 == 1) kept.push_back(added[a]);
                    a = b;
                }
                extras[slot] = std::move(kept);
                record(col.rank, pivot->rank);
                break;
            }
            const std::uint32_t other = it->second;
            push_coboundary(heap, columns[other]);
            added.push_back(columns[other]);
            for (const auto& e : extras[other]) {
                push_coboundary(heap, e);
                added.push_back(e);
            }
        }
    }

    std::unordered_set<std::uint64_t> pivots;
    pivots.reserve(pivot_column.size());
    for (const auto& [index, slot] : pivot_column) pivots.insert(index);
    return pivots;
}

}  // namespace

Barcode persistence_barcode(const FlagFiltration& f) {
    const OrderComplex& oc = f.order_complex();
    const std::size_t n = f.n_vertices();
    const std::size_t max_dim = f.max_dim();
    Barcode bc;
    bc.dims.resize(max_dim + 1);

    // Dimension 0: every vertex is born at step 0; merging edges kill one class.
    UnionFind uf(n);
    std::unordered_set<std::uint64_t> cleared;
    for (std::size_t s = 0; s < oc.edge_count(); ++s) {
        const Edge& e = oc.edges()[s];
        if (uf.unite(e.i, e.j)) {
            bc.dims[0].push_back({0, s + 1});
            cleared.insert(static_cast<std::uint64_t>(e.i) + choose2(e.j));
        }
    }
    for (std::uint32_t v = 0; v < n; ++v)
        if (uf.find(v) == v) bc.dims[0].push_back({0, std::nullopt});

    for (std::size_t dim = 1; dim <= max_dim; ++dim) {
        std::vector<FilteredSimplex> columns;
        const auto& level = f.simplices(dim);
        columns.reserve(level.size() - std::min(level.size(), cleared.size()));
        for (auto it = level.rbegin(); it != level.rend(); ++it)
            if (!cleared.contains(it->index)) columns.push_back(*it);
        cleared = reduce_coboundary(f, dim, columns, bc.dims[dim]);
    }
    return bc;
}

// ---------------------------------------------------------------------------
// Curves

DensityGrid DensityGrid::per_step(std::uint64_t pair_count) {
    DensityGrid g;
    g.kind = "per_step";
    g.densities.reserve(pair_count + 1);
    for (std::uint64_t s = 0; s <= pair_count; ++s)
        g.densities.push_back(
            pair_count == 0 ? 0.0 : static_cast<double>(s) / static_cast<double>(pair_count));
    if (pair_count == 0) g.densities.push_back(1.0);
    return g;
}

DensityGrid DensityGrid::uniform(std::size_t intervals) {
    if (intervals == 0) throw ConfigError("uniform grid needs at least one interval");
    DensityGrid g;
    g.kind = "uniform:" + std::to_string(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i)
        g.densities.push_back(static_cast<double>(i) / static_cast<double>(intervals));
    return g;
}

DensityGrid DensityGrid::default_for(std::size_t n_vertices) {
    return n_vertices <= 120 ? per_step(choose2(n_vertices)) : uniform(512);
}

BettiCurve betti_curves(const Barcode& barcode, const OrderComplex& oc, const DensityGrid& grid) {
    BettiCurve curve;
    curve.max_dim = barcode.dims.empty() ? 0 : barcode.dims.size() - 1;
    curve.densities = grid.densities;
    const std::size_t k = oc.edge_count();
    for (double rho : grid.densities) {
        if (rho < 0.0 || rho > 1.0) throw ConfigError("grid density outside [0, 1]");
        curve.steps.push_back(oc.steps_at_density(rho));
    }
    curve.values.resize(barcode.dims.size());
    std::vector<std::int64_t> diff(k + 2);
    for (std::size_t dim = 0; dim < barcode.dims.size(); ++dim) {
        std::fill(diff.begin(), diff.end(), 0);
        for (const auto& in : barcode.dims[dim]) {
            ++diff[in.birth];
            if (in.death) --diff[*in.death];
        }
        std::vector<std::uint64_t> at_step(k + 1);
        std::int64_t running = 0;
        for (std::size_t s = 0; s <= k; ++s) {
            running += diff[s];
            at_step[s] = static_cast<std::uint64_t>(running);
        }
        auto& out = curve.values[dim];
        out.reserve(curve.steps.size());
        for (auto s : curve.steps) out.push_back(at_step[s]);
    }
    return curve;
}

BettiCurve betti_curves(const FlagFiltration& filtration, const DensityGrid& grid) {
    return betti_curves(persistence_barcode(filtration), filtration.order_complex(), grid);
}

BettiCurve betti_curves(const OrderComplex& oc, std::size_t max_dim, const DensityGrid& grid,
                        std::uint64_t budget) {
    return betti_curves(enumerate_cliques(oc, max_dim + 2, budget), grid);
}

std::vector<std::uint64_t> connected_components_curve(const OrderComplex& oc) {
    UnionFind uf(oc.n_vertices());
    std::vector<std::uint64_t> out;
    out.reserve(oc.edge_count() + 1);
    std::uint64_t components = oc.n_vertices();
    out.push_back(components);
    for (const Edge& e : oc.edges()) {
        if (uf.unite(e.i, e.j)) --components;
        out.push_back(components);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracle

namespace {

using Mask = std::uint32_t;

// All cliques as vertex bitmasks, grouped by size - 1, found by testing every
// vertex subset.
std::vector<std::vector<Mask>> all_cliques(const EdgeSet& g) {
    const std::size_t n = g.n_vertices;
    if (n > 16) throw TooLarge(n);
    std::vector<Mask> adj(n, 0);
    for (auto [a, b] : g.edges) {
        adj[a] |= Mask{1} << b;
        adj[b] |= Mask{1} << a;
    }
    std::vector<std::vector<Mask>> by_dim(n);
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
        bool clique = true;
        for (Mask rest = s; rest && clique; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if ((s & ~(Mask{1} << v) & ~adj[v]) != 0) clique = false;
        }
        if (clique) by_dim[static_cast<std::size_t>(std::popcount(s)) - 1].push_back(s);
    }
    return by_dim;
}

// Rank over Z2 of the boundary map from `cols` (p-simplices) to `rows`.
std::size_t boundary_rank(const std::vector<Mask>& rows, const std::vector<Mask>& cols) {
    if (rows.empty() || cols.empty()) return 0;
    std::unordered_map<Mask, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of.emplace(rows[r], r);
    const std::size_t words = (rows.size() + 63) / 64;

    std::vector<std::vector<std::uint64_t>> basis;  // reduced columns by pivot
    std::vector<std::ptrdiff_t> pivot_owner(rows.size(), -1);
    std::size_t rank = 0;
    for (Mask c : cols) {
        std::vector<std::uint64_t> col(words, 0);
        for (Mask rest = c; rest; rest &= rest - 1) {
            const Mask face = c & ~(Mask{1} << std::countr_zero(rest));
            const std::size_t r = row_of.at(face);
            col[r / 64] ^= std::uint64_t{1} << (r % 64);
        }
        while (true) {
            std::ptrdiff_t pivot = -1;
            for (std::size_t w = words; w-- > 0;) {
                if (col[w]) {
                    pivot = static_cast<std::ptrdiff_t>(
                        w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(col[w])));
                    break;
                }
            }
            if (pivot < 0) break;
            const std::ptrdiff_t owner = pivot_owner[static_cast<std::size_t>(pivot)];
            if (owner < 0) {
                pivot_owner[static_cast<std::size_t>(pivot)] =
                    static_cast<std::ptrdiff_t>(basis.size());
                basis.push_back(std::move(col));
                ++rank;
                break;
            }
            const auto& b = basis[static_cast<std::size_t>(owner)];
            for (std::size_t w = 0; w < words; ++w) col[w] ^= b[w];
        }
    }
    return rank;
}

}  // namespace

std::vector<std::uint64_t> betti_brute_force(const EdgeSet& graph, std::size_t max_dim) {
    const auto cliques = all_cliques(graph);
    const std::size_t top = cliques.size();  // dims 0..n-1
    // rank of d_p for p = 0..max_dim+1 (d_0 = 0)
    std::vector<std::size_t> ranks(max_dim + 2, 0);
    for (std::size_t p = 1; p <= max_dim + 1 && p < top; ++p)
        ranks[p] = boundary_rank(cliques[p - 1], cliques[p]);
    std::vector<std::uint64_t> betti(max_dim + 1, 0);
    for (std::size_t p = 0; p <= max_dim; ++p) {
        const std::size_t count = p < top ? cliques[p].size() : 0;
        betti[p] = count - ranks[p] - ranks[p + 1];
    }
    return betti;
}

std::vector<std::uint64_t> clique_counts_brute_force(const EdgeSet& graph) {
    const auto cliques = all_cliques(graph);
    std::vector<std::uint64_t> counts;
    for (const auto& level : cliques) counts.push_back(level.size());
    return counts;
}

// ---------------------------------------------------------------------------
// Curve CSV

void write_curve_csv(std::ostream& out, const BettiCurve& curve, const CurveMetadata& meta) {
    out << "# direction=" << meta.direction << "\n";
    out << "# seed=" << (meta.seed ? std::to_string(*meta.seed) : std::string("none")) << "\n";
    out << "# max_dim=" << curve.max_dim << "\n";
    out << "# grid=" << meta.grid << "\n";
    for (const auto& [key, value] : meta.extra) out << "# " << key << "=" << value << "\n";
    out << "density";
    for (std::size_t d = 0; d <= curve.max_dim; ++d) out << ",beta_" << d;
    out << "\n" << std::setprecision(17);
    for (std::size_t g = 0; g < curve.densities.size(); ++g) {
        out << curve.densities[g];
        for (std::size_t d = 0; d <= curve.max_dim; ++d) out << ',' << curve.values[d][g];
        out << '\n';
    }
}

BettiCurve read_curve_csv(std::istream& in) {
    BettiCurve curve;
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!header) {
            if (cells.size() < 2 || cells[0] != "density")
                throw ParseError("bad curve header", line_no);
            curve.max_dim = cells.size() - 2;
            curve.values.resize(cells.size() - 1);
            header = true;
            continue;
        }
        if (cells.size() != curve.values.size() + 1)
            throw ParseError("wrong column count", line_no);
        try {
            curve.densities.push_back(std::stod(cells[0]));
            for (std::size_t d = 0; d < curve.values.size(); ++d)
                curve.values[d].push_back(std::stoull(cells[d + 1]));
        } catch (const std::logic_error&) {
            throw ParseError("bad number", line_no);
        }
    }
    if (!header) throw ParseError("missing curve header", line_no);
    return curve;
}

}  // namespace bettisig
