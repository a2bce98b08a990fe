#include "helly/hypergraph.hpp"

#include "helly/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace helly {

namespace {

std::uint64_t mask_of(std::span<const int> edge) {
    std::uint64_t m = 0;
    for (int v : edge) m |= std::uint64_t{1} << v;
    return m;
}

}  // namespace

Hypergraph::Hypergraph(int q, std::vector<std::string> vertex_labels,
                       const std::vector<std::vector<std::string>>& edges) {
    q_ = q;
    labels_ = std::move(vertex_labels);
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
        if (!index_.emplace(labels_[i], i).second)
            throw SchemaError("duplicate vertex label: " + labels_[i]);
    }
    edges_.reserve(edges.size());
    for (const auto& e : edges) {
        std::vector<int> idx;
        idx.reserve(e.size());
        for (const auto& label : e) idx.push_back(index_of(label));
        edges_.push_back(std::move(idx));
    }
    finalize();
}

Hypergraph Hypergraph::from_indices(int q, std::vector<std::string> vertex_labels,
                                    std::vector<std::vector<int>> edges) {
    Hypergraph h;
    h.q_ = q;
    h.labels_ = std::move(vertex_labels);
    for (int i = 0; i < static_cast<int>(h.labels_.size()); ++i) {
        if (!h.index_.emplace(h.labels_[i], i).second)
            throw SchemaError("duplicate vertex label: " + h.labels_[i]);
    }
    h.edges_ = std::move(edges);
    h.finalize();
    return h;
}

Hypergraph Hypergraph::from_indices(int q, int num_vertices, std::vector<std::vector<int>> edges) {
    std::vector<std::string> labels(num_vertices);
    for (int i = 0; i < num_vertices; ++i) labels[i] = std::to_string(i);
    return from_indices(q, std::move(labels), std::move(edges));
}

void Hypergraph::finalize() {
    if (q_ < 2) throw SchemaError("hypergraph uniformity must be at least 2");
    int n = num_vertices();
    for (auto& e : edges_) {
        std::sort(e.begin(), e.end());
        if (static_cast<int>(e.size()) != q_ ||
            std::adjacent_find(e.begin(), e.end()) != e.end())
            throw SchemaError("edge is not a set of exactly q distinct vertices");
        if (e.front() < 0 || e.back() >= n) throw SchemaError("edge vertex index out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    use_masks_ = n <= 64;
    if (use_masks_) {
        edge_masks_.reserve(edges_.size() * 2);
        for (const auto& e : edges_) edge_masks_.insert(mask_of(e));
    }
}

int Hypergraph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw SchemaError("unknown vertex label: " + label);
    return it->second;
}

bool Hypergraph::has_edge(std::span<const int> edge) const {
    if (static_cast<int>(edge.size()) != q_) return false;
    if (use_masks_) return edge_masks_.count(mask_of(edge)) > 0;
    std::vector<int> key(edge.begin(), edge.end());
    return std::binary_search(edges_.begin(), edges_.end(), key);
}

bool Hypergraph::spans_edge(const std::vector<int>& sorted_vertices) const {
    if (static_cast<int>(sorted_vertices.size()) < q_) return false;
    // For small supports, probing q-subsets beats scanning the edge list.
    std::vector<int> pick(q_);
    int m = static_cast<int>(sorted_vertices.size());
    std::vector<int> comb(q_);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        for (int i = 0; i < q_; ++i) pick[i] = sorted_vertices[comb[i]];
        if (has_edge(pick)) return true;
        int i = q_ - 1;
        while (i >= 0 && comb[i] == m - q_ + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < q_; ++j) comb[j] = comb[j - 1] + 1;
    }
    return false;
}

Hypergraph Hypergraph::complement(long long subset_limit) const {
    int n = num_vertices();
    BigInt total = binomial(n, q_);
    if (total > subset_limit)
        throw LimitError("complement would enumerate too many q-subsets",
                         total.convert_to<long long>(), subset_limit);
    std::vector<std::vector<int>> non_edges;
    std::vector<int> comb(q_);
    std::iota(comb.begin(), comb.end(), 0);
    if (n >= q_) {
        while (true) {
            if (!has_edge(comb)) non_edges.push_back(comb);
            int i = q_ - 1;
            while (i >= 0 && comb[i] == n - q_ + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < q_; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return from_indices(q_, labels_, std::move(non_edges));
}

std::vector<std::string> Hypergraph::labels_of(const std::vector<int>& indices) const {
    std::vector<std::string> out;
    out.reserve(indices.size());
    for (int i : indices) out.push_back(labels_.at(i));
    return out;
}

Hypergraph induced_sub(const Hypergraph& h, const std::vector<int>& s) {
    int n = h.num_vertices();
    std::vector<char> keep(n, 0);
    for (int v : s) {
        if (v < 0 || v >= n) throw SchemaError("induced_sub: vertex index out of range");
        keep[v] = 1;
    }
    std::vector<int> remap(n, -1);
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) {
        if (keep[v]) {
            remap[v] = static_cast<int>(labels.size());
            labels.push_back(h.vertex_labels()[v]);
        }
    }
    std::vector<std::vector<int>> edges;
    for (const auto& e : h.edges()) {
        bool inside = std::all_of(e.begin(), e.end(), [&](int v) { return keep[v]; });
        if (!inside) continue;
        std::vector<int> mapped;
        mapped.reserve(e.size());
        for (int v : e) mapped.push_back(remap[v]);
        edges.push_back(std::move(mapped));
    }
    return Hypergraph::from_indices(h.q(), std::move(labels), std::move(edges));
}

Hypergraph induced_sub(const Hypergraph& h, const std::vector<std::string>& s) {
    std::vector<int> idx;
    idx.reserve(s.size());
    for (const auto& label : s) idx.push_back(h.index_of(label));
    return induced_sub(h, idx);
}

namespace {

// Shared state for the independence branch-and-bound.
struct IndependenceSearch {
    const Hypergraph* h;
    std::vector<int> order;                       // vertices, high degree first
    std::vector<std::vector<std::uint64_t>> incident;  // per vertex: masks of edges containing it
    std::uint64_t chosen = 0;
    int chosen_count = 0;
    int best = -1;
    std::uint64_t best_set = 0;

    bool can_add(int v) const {
        std::uint64_t with = chosen | (std::uint64_t{1} << v);
        for (std::uint64_t em : incident[v])
            if ((em & ~with) == 0) return false;
        return true;
    }

    void run(std::size_t pos) {
        int n = static_cast<int>(order.size());
        if (chosen_count > best) {
            best = chosen_count;
            best_set = chosen;
        }
        if (pos >= order.size()) return;
        if (chosen_count + (n - static_cast<int>(pos)) <= best) return;
        int v = order[pos];
        if (can_add(v)) {
            chosen |= std::uint64_t{1} << v;
            ++chosen_count;
            run(pos + 1);
            chosen &= ~(std::uint64_t{1} << v);
            --chosen_count;
        }
        run(pos + 1);
    }
};

std::vector<int> unpack_mask(std::uint64_t mask) {
    std::vector<int> out;
    for (int v = 0; v < 64; ++v)
        if (mask >> v & 1) out.push_back(v);
    return out;
}

}  // namespace

SetWitness independence_number(const Hypergraph& h, const Limits& limits) {
    int n = h.num_vertices();
    if (n > limits.independence_vertices)
        throw LimitError("independence search exceeds vertex cap", n,
                         limits.independence_vertices);
    IndependenceSearch search;
    search.h = &h;
    search.incident.resize(n);
    std::vector<int> degree(n, 0);
    for (const auto& e : h.edges()) {
        std::uint64_t m = 0;
        for (int v : e) m |= std::uint64_t{1} << v;
        for (int v : e) {
            search.incident[v].push_back(m);
            ++degree[v];
        }
    }
    search.order.resize(n);
    std::iota(search.order.begin(), search.order.end(), 0);
    std::stable_sort(search.order.begin(), search.order.end(),
                     [&](int a, int b) { return degree[a] > degree[b]; });
    search.run(0);
    return {search.best, unpack_mask(search.best_set)};
}

namespace {

struct CliqueSearch {
    const Hypergraph* h;
    int q;
    std::vector<int> current;
    int best = -1;
    std::vector<int> best_set;

    // current + {v} is a clique by invariant; w survives iff every q-subset of
    // current + {v, w} containing both v and w is an edge.
    bool pair_ok(int v, int w) const {
        int k = q - 2;
        std::vector<int> sub(static_cast<std::size_t>(q));
        int m = static_cast<int>(current.size());
        if (m < k) return true;
        std::vector<int> comb(k);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            std::size_t out = 0;
            for (int i = 0; i < k; ++i) sub[out++] = current[comb[i]];
            sub[out++] = v;
            sub[out++] = w;
            std::sort(sub.begin(), sub.end());
            if (!h->has_edge(sub)) return false;
            if (k == 0) break;
            int i = k - 1;
            while (i >= 0 && comb[i] == m - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
        return true;
    }

    void extend(const std::vector<int>& candidates) {
        if (static_cast<int>(current.size()) > best) {
            best = static_cast<int>(current.size());
            best_set = current;
        }
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (static_cast<int>(current.size() + candidates.size() - i) <= best) return;
            int v = candidates[i];
            std::vector<int> next;
            next.reserve(candidates.size() - i);
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (pair_ok(v, candidates[j])) next.push_back(candidates[j]);
            current.push_back(v);
            extend(next);
            current.pop_back();
        }
    }
};

}  // namespace

SetWitness clique_number(const Hypergraph& h, const Limits& limits) {
    int n = h.num_vertices();
    if (n > limits.independence_vertices)
        throw LimitError("clique search exceeds vertex cap", n, limits.independence_vertices);
    CliqueSearch search;
    search.h = &h;
    search.q = h.q();
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    search.extend(all);
    std::sort(search.best_set.begin(), search.best_set.end());
    return {search.best, search.best_set};
}

Rat edge_density(const Hypergraph& h) {
    if (h.num_vertices() < h.q())
        throw PreconditionError("edge_density requires at least q vertices");
    BigInt total = binomial(h.num_vertices(), h.q());
    return Rat(BigInt(h.num_edges()), total);
}

namespace {

struct PatternSearch {
    const Hypergraph* h;
    int q, s, t;
    std::vector<std::vector<int>> parts;
    std::vector<char> used;

    // All transversal q-tuples that end at `v` (placed in part `pi`) drawing the
    // other q-1 vertices from q-1 distinct completed parts.
    bool transversal_ok(int v, int pi) const {
        int complete = pi;  // parts 0..pi-1 are full
        int need = q - 1;
        if (complete < need) return true;
        std::vector<int> part_comb(need);
        std::iota(part_comb.begin(), part_comb.end(), 0);
        std::vector<int> tuple(static_cast<std::size_t>(q));
        while (true) {
            // product over chosen parts
            std::vector<int> pick(need, 0);
            while (true) {
                std::size_t out = 0;
                for (int i = 0; i < need; ++i) tuple[out++] = parts[part_comb[i]][pick[i]];
                tuple[out++] = v;
                std::sort(tuple.begin(), tuple.end());
                if (!h->has_edge(tuple)) return false;
                int i = need - 1;
                while (i >= 0 && pick[i] == t - 1) { pick[i] = 0; --i; }
                if (i < 0) break;
                ++pick[i];
            }
            int i = need - 1;
            while (i >= 0 && part_comb[i] == complete - need + i) --i;
            if (i < 0) break;
            ++part_comb[i];
            for (int j = i + 1; j < need; ++j) part_comb[j] = part_comb[j - 1] + 1;
        }
        return true;
    }

    bool intra_ok(int v, int pi) const {
        if (static_cast<int>(parts[pi].size()) + 1 < q) return true;
        std::vector<int> with = parts[pi];
        with.push_back(v);
        std::sort(with.begin(), with.end());
        return !h->spans_edge(with);
    }

    bool place(int pi) {
        if (pi == s) return true;
        auto& part = parts[pi];
        if (static_cast<int>(part.size()) == t) return place(pi + 1);
        // Vertices ascend within a part; part minima ascend across parts.
        int from;
        if (part.empty())
            from = pi == 0 ? 0 : parts[pi - 1].front() + 1;
        else
            from = part.back() + 1;
        int n = h->num_vertices();
        for (int v = from; v < n; ++v) {
            if (used[v]) continue;
            if (!intra_ok(v, pi)) continue;
            if (!transversal_ok(v, pi)) continue;
            used[v] = 1;
            part.push_back(v);
            if (place(pi)) return true;
            part.pop_back();
            used[v] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<MPatternWitness> find_m_pattern(const Hypergraph& h, int s, int t,
                                              const Limits& limits) {
    if (s < h.q() || t < h.q())
        throw PreconditionError("find_m_pattern requires s, t >= q");
    if (static_cast<long long>(s) * t > limits.pattern_cells)
        throw LimitError("M-pattern search exceeds cell cap", static_cast<long long>(s) * t,
                         limits.pattern_cells);
    if (static_cast<long long>(s) * t > h.num_vertices()) return std::nullopt;
    PatternSearch search;
    search.h = &h;
    search.q = h.q();
    search.s = s;
    search.t = t;
    search.parts.assign(s, {});
    search.used.assign(h.num_vertices(), 0);
    if (!search.place(0)) return std::nullopt;
    MPatternWitness w;
    w.s = s;
    w.t = t;
    w.parts = search.parts;
    return w;
}

namespace {

BigInt hetero_sequence_count(const std::vector<std::vector<int>>& families, int p,
                             HeteroMode mode) {
    int m = static_cast<int>(families.size());
    if (mode == HeteroMode::OnePerFamilyPrefix) {
        BigInt total = 1;
        for (int i = 0; i < p; ++i) total *= static_cast<long long>(families[i].size());
        return total;
    }
    // sum over p-subsets of the product of sizes: DP over families
    std::vector<BigInt> dp(p + 1, 0);
    dp[0] = 1;
    for (int i = 0; i < m; ++i) {
        for (int k = std::min(p, i + 1); k >= 1; --k)
            dp[k] += dp[k - 1] * static_cast<long long>(families[i].size());
    }
    return dp[p];
}

}  // namespace

HeteroResult heterochromatic_check(const Hypergraph& h,
                                   const std::vector<std::vector<int>>& families, int p,
                                   HeteroMode mode, const Limits& limits) {
    int m = static_cast<int>(families.size());
    if (p < 1) throw PreconditionError("heterochromatic_check requires p >= 1");
    if (p > m)
        throw PreconditionError("heterochromatic_check: p exceeds the number of families");
    std::vector<char> seen(h.num_vertices(), 0);
    for (const auto& fam : families) {
        if (fam.empty()) throw PreconditionError("heterochromatic_check: empty family");
        for (int v : fam) {
            if (v < 0 || v >= h.num_vertices())
                throw SchemaError("heterochromatic_check: vertex index out of range");
            if (seen[v]) throw PreconditionError("heterochromatic_check: families overlap");
            seen[v] = 1;
        }
    }
    BigInt count = hetero_sequence_count(families, p, mode);
    if (count > limits.hetero_sequences)
        throw LimitError("heterochromatic enumeration exceeds cap",
                         count.convert_to<long long>(), limits.hetero_sequences);

    std::vector<int> chosen_vertices(p);
    std::vector<int> chosen_families(p);
    HeteroResult result;

    // depth-first over family selections (prefix mode pins family i at slot i)
    auto leaf = [&]() -> bool {
        std::vector<int> sorted(chosen_vertices.begin(), chosen_vertices.end());
        std::sort(sorted.begin(), sorted.end());
        return h.spans_edge(sorted);
    };

    std::function<bool(int, int)> walk = [&](int slot, int from_family) -> bool {
        if (slot == p) return leaf();
        int last_allowed = mode == HeteroMode::OnePerFamilyPrefix ? slot : m - (p - slot);
        int first = mode == HeteroMode::OnePerFamilyPrefix ? slot : from_family;
        for (int f = first; f <= last_allowed; ++f) {
            chosen_families[slot] = f;
            for (int v : families[f]) {
                chosen_vertices[slot] = v;
                if (!walk(slot + 1, f + 1)) return false;
            }
        }
        return true;
    };

    if (!walk(0, 0)) {
        result.ok = false;
        result.violating_vertices = chosen_vertices;
        result.violating_families = chosen_families;
        return result;
    }
    return result;
}

}  // namespace helly
