#include "helly/homogenize.hpp"

#include "helly/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace helly {

void BlockSeq::validate(const Hypergraph& host) const {
    std::vector<char> seen(host.num_vertices(), 0);
    for (const auto& block : blocks) {
        if (block.empty()) throw PreconditionError("block sequence contains an empty block");
        for (int v : block) {
            if (v < 0 || v >= host.num_vertices())
                throw SchemaError("block vertex index out of range");
            if (seen[v]) throw PreconditionError("blocks are not pairwise disjoint");
            seen[v] = 1;
        }
    }
}

BigInt count_increasing_tuples(const std::vector<BigInt>& sizes, int p) {
    std::vector<BigInt> dp(p + 1, BigInt(0));
    dp[0] = 1;
    for (const auto& size : sizes)
        for (int k = p; k >= 1; --k) dp[k] += dp[k - 1] * size;
    return dp[p];
}

namespace {

BigInt count_tuples(const BlockSeq& bs, int p) {
    std::vector<BigInt> sizes;
    sizes.reserve(bs.blocks.size());
    for (const auto& b : bs.blocks) sizes.push_back(static_cast<long long>(b.size()));
    return count_increasing_tuples(sizes, p);
}

// Enumerates increasing p-tuples directly in the well-order: ascending last
// level, then level combinations lexicographically, then vertex positions.
// Visitor returns false to stop early.
template <typename Visitor>
void walk_tuples(const BlockSeq& bs, int p, Visitor&& visit) {
    int m = bs.num_blocks();
    if (p < 1 || m < p) return;
    std::vector<int> levels(p);
    std::vector<std::size_t> pos(p);

    for (int last = p - 1; last < m; ++last) {
        // level combinations of {0..last-1} choose p-1, lexicographic
        std::vector<int> comb(p - 1);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            for (int i = 0; i < p - 1; ++i) levels[i] = comb[i];
            levels[p - 1] = last;
            std::fill(pos.begin(), pos.end(), 0);
            bool more_positions = true;
            while (more_positions) {
                IncreasingTuple t;
                t.levels = levels;
                t.vertices.resize(p);
                for (int i = 0; i < p; ++i) t.vertices[i] = bs.blocks[levels[i]][pos[i]];
                if (!visit(t)) return;
                int i = p - 1;
                while (i >= 0 && pos[i] + 1 == bs.blocks[levels[i]].size()) pos[i--] = 0;
                if (i < 0) more_positions = false;
                else ++pos[i];
            }
            if (p == 1) break;
            int i = p - 2;
            while (i >= 0 && comb[i] == last - (p - 1) + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < p - 1; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
}

// All increasing q-extensions of tuple t: q - |t| further vertices from blocks
// strictly beyond t's last level, levels increasing. Visitor gets the full
// sorted vertex set; returns false to stop.
template <typename Visitor>
void walk_extensions(const BlockSeq& bs, const IncreasingTuple& t, int q, Visitor&& visit) {
    int extra = q - static_cast<int>(t.vertices.size());
    int m = bs.num_blocks();
    if (extra < 0) return;
    if (extra == 0) {
        std::vector<int> full = t.vertices;
        std::sort(full.begin(), full.end());
        visit(full);
        return;
    }
    int first = t.last_level() + 1;
    if (m - first < extra) return;
    std::vector<int> comb(extra);
    std::iota(comb.begin(), comb.end(), first);
    std::vector<std::size_t> pos(extra);
    while (true) {
        std::fill(pos.begin(), pos.end(), 0);
        bool more = true;
        while (more) {
            std::vector<int> full = t.vertices;
            for (int i = 0; i < extra; ++i) full.push_back(bs.blocks[comb[i]][pos[i]]);
            std::sort(full.begin(), full.end());
            if (!visit(full)) return;
            int i = extra - 1;
            while (i >= 0 && pos[i] + 1 == bs.blocks[comb[i]].size()) pos[i--] = 0;
            if (i < 0) more = false;
            else ++pos[i];
        }
        int i = extra - 1;
        while (i >= 0 && comb[i] == m - extra + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < extra; ++j) comb[j] = comb[j - 1] + 1;
    }
}

// Homogeneous w.r.t. t: all or none of the q-extensions are edges.
bool tuple_homogeneous(const Hypergraph& h, const BlockSeq& bs, const IncreasingTuple& t) {
    bool saw_edge = false, saw_non_edge = false;
    walk_extensions(bs, t, h.q(), [&](const std::vector<int>& full) {
        if (h.has_edge(full)) saw_edge = true;
        else saw_non_edge = true;
        return !(saw_edge && saw_non_edge);
    });
    return !(saw_edge && saw_non_edge);
}

}  // namespace

std::vector<IncreasingTuple> tuple_order(const BlockSeq& bs, int p, const Limits& limits) {
    if (p < 1) throw PreconditionError("tuple_order requires p >= 1");
    BigInt count = count_tuples(bs, p);
    if (count > limits.tuples)
        throw LimitError("increasing-tuple enumeration exceeds cap",
                         count.convert_to<long long>(), limits.tuples);
    std::vector<IncreasingTuple> out;
    out.reserve(count.convert_to<std::size_t>());
    walk_tuples(bs, p, [&](const IncreasingTuple& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

BlockSeq homogenize_step(const Hypergraph& h, const BlockSeq& bs, const IncreasingTuple& t,
                         HomStep* step_out) {
    bs.validate(h);
    int q = h.q();
    if (static_cast<int>(t.vertices.size()) != q - 1 ||
        t.levels.size() != t.vertices.size())
        throw PreconditionError("homogenize_step expects an increasing (q-1)-tuple");
    for (std::size_t i = 0; i < t.levels.size(); ++i) {
        if (i > 0 && t.levels[i] <= t.levels[i - 1])
            throw PreconditionError("tuple levels must strictly increase");
        int level = t.levels[i];
        if (level < 0 || level >= bs.num_blocks())
            throw PreconditionError("tuple level out of range");
        const auto& block = bs.blocks[level];
        if (std::find(block.begin(), block.end(), t.vertices[i]) == block.end())
            throw PreconditionError("tuple vertex not found in its block");
    }

    int ell = t.last_level();
    int m = bs.num_blocks();

    std::vector<std::vector<int>> extending(m), non_extending(m);
    std::vector<char> is_heavy(m, 0);
    int heavy_count = 0, light_count = 0;
    std::vector<int> probe = t.vertices;
    probe.push_back(0);
    for (int i = ell + 1; i < m; ++i) {
        for (int v : bs.blocks[i]) {
            probe.back() = v;
            std::vector<int> sorted = probe;
            std::sort(sorted.begin(), sorted.end());
            if (h.has_edge(sorted)) extending[i].push_back(v);
            else non_extending[i].push_back(v);
        }
        is_heavy[i] =
            2 * static_cast<long long>(extending[i].size()) >=
            static_cast<long long>(bs.blocks[i].size());
        if (is_heavy[i]) ++heavy_count;
        else ++light_count;
    }
    bool keep_heavy = heavy_count > light_count;  // ties keep the light class

    BlockSeq out;
    std::vector<int> kept;
    for (int i = 0; i <= ell && i < m; ++i) {
        out.blocks.push_back(bs.blocks[i]);
        kept.push_back(i);
    }
    for (int i = ell + 1; i < m; ++i) {
        if (static_cast<bool>(is_heavy[i]) != keep_heavy) continue;
        const auto& filtered = keep_heavy ? extending[i] : non_extending[i];
        if (filtered.empty()) continue;  // cannot happen for the kept class
        out.blocks.push_back(filtered);
        kept.push_back(i);
    }
    if (step_out) {
        step_out->uniformity = q;
        step_out->tuple = t;
        step_out->heavy = keep_heavy;
        step_out->kept_blocks = kept;
        step_out->sizes.clear();
        for (const auto& b : out.blocks) step_out->sizes.push_back(static_cast<int>(b.size()));
    }
    return out;
}

HomogeneityCheck is_homogeneous(const Hypergraph& h, const BlockSeq& bs, int p,
                                const Limits& limits) {
    bs.validate(h);
    if (p < 1 || p >= h.q())
        throw PreconditionError("is_homogeneous requires 1 <= p < q");
    BigInt count = count_tuples(bs, p);
    if (count > limits.tuples)
        throw LimitError("homogeneity check exceeds tuple cap", count.convert_to<long long>(),
                         limits.tuples);
    HomogeneityCheck out;
    walk_tuples(bs, p, [&](const IncreasingTuple& t) {
        if (!tuple_homogeneous(h, bs, t)) {
            out.ok = false;
            out.violating = t;
            return false;
        }
        return true;
    });
    return out;
}

namespace {

// Derived hypergraph for the backward induction: (p)-uniform, an edge per
// increasing p-tuple of the current sequence all of whose increasing
// q-extensions are edges of the host.
Hypergraph derived_hypergraph(const Hypergraph& h, const BlockSeq& bs, int p,
                              const Limits& limits) {
    BigInt count = count_tuples(bs, p);
    if (count > limits.tuples)
        throw LimitError("derived hypergraph exceeds tuple cap", count.convert_to<long long>(),
                         limits.tuples);
    std::vector<std::vector<int>> edges;
    walk_tuples(bs, p, [&](const IncreasingTuple& t) {
        bool all_edges = true;
        walk_extensions(bs, t, h.q(), [&](const std::vector<int>& full) {
            if (!h.has_edge(full)) {
                all_edges = false;
                return false;
            }
            return true;
        });
        if (all_edges) {
            std::vector<int> e = t.vertices;
            std::sort(e.begin(), e.end());
            edges.push_back(std::move(e));
        }
        return true;
    });
    return Hypergraph::from_indices(p, h.vertex_labels(), std::move(edges));
}

// Stage of the lemma: homogenize the order-least violating (u-1)-tuple until
// the sequence is (u-1)-homogeneous w.r.t. `host` (a u-uniform hypergraph).
BlockSeq homogenize_stage(const Hypergraph& host, BlockSeq seq, HomogenizationTrace& trace,
                          const Limits& limits) {
    while (true) {
        BigInt count = count_tuples(seq, host.q() - 1);
        if (count > limits.tuples)
            throw LimitError("homogenization exceeds tuple cap",
                             count.convert_to<long long>(), limits.tuples);
        IncreasingTuple target;
        bool found = false;
        walk_tuples(seq, host.q() - 1, [&](const IncreasingTuple& t) {
            if (!tuple_homogeneous(host, seq, t)) {
                target = t;
                found = true;
                return false;
            }
            return true;
        });
        if (!found) return seq;
        HomStep step;
        seq = homogenize_step(host, seq, target, &step);
        trace.steps.push_back(std::move(step));
    }
}

}  // namespace

HomogenizeResult homogenize_full(const Hypergraph& h, const BlockSeq& bs, int p,
                                 const Limits& limits, int min_blocks, int min_block_size) {
    bs.validate(h);
    int q = h.q();
    if (p < 1 || p >= q) throw PreconditionError("homogenize_full requires 1 <= p < q");

    HomogenizeResult result;
    result.final_blocks = homogenize_stage(h, bs, result.trace, limits);
    for (int level = q - 2; level >= p; --level) {
        Hypergraph derived = derived_hypergraph(h, result.final_blocks, level + 1, limits);
        result.final_blocks =
            homogenize_stage(derived, result.final_blocks, result.trace, limits);
    }

    HomogeneityCheck check = is_homogeneous(h, result.final_blocks, p, limits);
    if (!check.ok) throw std::logic_error("homogenize_full output failed the homogeneity oracle");

    if (result.final_blocks.num_blocks() < min_blocks) {
        std::ostringstream os;
        os << "homogenization shortfall: " << result.final_blocks.num_blocks()
           << " blocks survive, " << min_blocks << " required";
        throw ShortfallError(os.str(), std::move(result));
    }
    if (min_block_size > 0) {
        for (std::size_t i = 0; i < result.final_blocks.blocks.size(); ++i) {
            if (static_cast<int>(result.final_blocks.blocks[i].size()) < min_block_size) {
                std::ostringstream os;
                os << "homogenization shortfall: block " << i << " kept "
                   << result.final_blocks.blocks[i].size() << " vertices, " << min_block_size
                   << " required";
                throw ShortfallError(os.str(), std::move(result));
            }
        }
    }
    return result;
}

std::vector<BigInt> plan_block_sizes(const std::vector<long long>& targets, int q,
                                     long long max_exponent) {
    if (targets.empty()) throw PreconditionError("plan_block_sizes requires at least one target");
    if (q < 2) throw PreconditionError("plan_block_sizes requires q >= 2");
    for (long long t : targets)
        if (t < 1) throw PreconditionError("plan_block_sizes targets must be positive");

    std::vector<BigInt> plan;
    long long running_max = 0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        running_max = std::max(running_max, targets[i]);
        if (static_cast<int>(i) < q - 1) {
            plan.emplace_back(targets[i]);
            continue;
        }
        BigInt tuples = count_increasing_tuples(plan, q - 1);
        if (tuples > max_exponent)
            throw LimitError("block-size plan exponent exceeds representable cap",
                             tuples > (std::numeric_limits<long long>::max)()
                                 ? (std::numeric_limits<long long>::max)()
                                 : tuples.convert_to<long long>(),
                             max_exponent);
        BigInt value = BigInt(1) << tuples.convert_to<unsigned long long>();
        plan.push_back(value * running_max);
    }
    return plan;
}

RainbowResult extract_rainbow_independent(const Hypergraph& h, const BlockSeq& bs, int t,
                                          const Limits& limits) {
    bs.validate(h);
    int q = h.q();

    for (std::size_t i = 0; i < bs.blocks.size(); ++i) {
        if (static_cast<int>(bs.blocks[i].size()) < t)
            throw PreconditionError("rainbow extraction: block " + std::to_string(i) +
                                    " is smaller than t");
        std::vector<int> sorted = bs.blocks[i];
        std::sort(sorted.begin(), sorted.end());
        if (h.spans_edge(sorted))
            throw PreconditionError("rainbow extraction: block " + std::to_string(i) +
                                    " is not independent");
    }
    HomogeneityCheck hom = is_homogeneous(h, bs, 1, limits);
    if (!hom.ok) {
        std::ostringstream os;
        os << "rainbow extraction: sequence is not 1-homogeneous (vertex "
           << hom.violating->vertices.front() << " in block " << hom.violating->levels.front()
           << " has mixed extensions)";
        throw PreconditionError(os.str());
    }

    RainbowResult out;
    for (int i = 0; i < bs.num_blocks(); ++i) {
        int found = -1;
        for (int v : bs.blocks[i]) {
            IncreasingTuple t1;
            t1.vertices = {v};
            t1.levels = {i};
            bool clean = true;
            walk_extensions(bs, t1, q, [&](const std::vector<int>& full) {
                if (h.has_edge(full)) {
                    clean = false;
                    return false;
                }
                return true;
            });
            if (clean) {
                found = v;
                break;
            }
        }
        if (found >= 0) {
            out.chosen.push_back(found);
            out.chosen_blocks.push_back(i);
        } else {
            out.flagged_blocks.push_back(i);
        }
    }

    std::vector<int> sorted = out.chosen;
    std::sort(sorted.begin(), sorted.end());
    if (h.spans_edge(sorted))
        throw std::logic_error("rainbow extraction produced a dependent set");
    return out;
}

}  // namespace helly
