#pragma once

#include "helly/hypergraph.hpp"
#include "helly/limits.hpp"
#include "helly/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace helly {

// Ordered sequence of pairwise-disjoint nonempty vertex blocks inside a host
// hypergraph; the substrate of homogenization.
struct BlockSeq {
    std::vector<std::vector<int>> blocks;

    int num_blocks() const { return static_cast<int>(blocks.size()); }
    void validate(const Hypergraph& host) const;
};

// (v_1..v_p) with v_j in block levels[j], levels strictly increasing (0-based).
struct IncreasingTuple {
    std::vector<int> vertices;
    std::vector<int> levels;
    int last_level() const { return levels.empty() ? -1 : levels.back(); }
};

// Well-ordering of all increasing p-tuples: tuples ending at a lower level come
// first; ties lexicographically by levels, then by vertex position in blocks.
std::vector<IncreasingTuple> tuple_order(const BlockSeq& bs, int p, const Limits& limits = {});

// Number of increasing p-tuples of blocks with the given sizes.
BigInt count_increasing_tuples(const std::vector<BigInt>& sizes, int p);

struct HomStep {
    int uniformity = 0;  // q of the hypergraph the step ran against
    IncreasingTuple tuple;
    bool heavy = false;
    std::vector<int> kept_blocks;  // indices into the step's input sequence
    std::vector<int> sizes;        // block sizes after the step
};

struct HomogenizationTrace {
    std::vector<HomStep> steps;
};

// One filtering step for an increasing (q-1)-tuple T with last level l: blocks
// up to l unchanged; beyond l each block is heavy iff at least half its
// vertices extend T to an edge; the majority class is kept (ties to light) and
// filtered to the matching vertex subset.
BlockSeq homogenize_step(const Hypergraph& h, const BlockSeq& bs, const IncreasingTuple& t,
                         HomStep* step_out = nullptr);

struct HomogeneityCheck {
    bool ok = true;
    std::optional<IncreasingTuple> violating;  // the order-least violating tuple
};

// Brute-force oracle: every increasing p-tuple has all or none of its
// increasing q-extensions as edges.
HomogeneityCheck is_homogeneous(const Hypergraph& h, const BlockSeq& bs, int p,
                                const Limits& limits = {});

struct HomogenizeResult {
    BlockSeq final_blocks;
    HomogenizationTrace trace;
};

// Repeatedly homogenizes the order-least violating (q-1)-tuple, then descends
// through derived hypergraphs (tuples whose every increasing q-extension is an
// edge) until the sequence is p-homogeneous. 1 <= p < q. When min_blocks or
// min_block_size is set, a final sequence below the requirement raises
// ShortfallError carrying the achieved sizes.
HomogenizeResult homogenize_full(const Hypergraph& h, const BlockSeq& bs, int p,
                                 const Limits& limits = {}, int min_blocks = 0,
                                 int min_block_size = 0);

// Finite truncation of the finite-shortfall failure: what the run achieved.
class ShortfallError : public std::runtime_error {
public:
    ShortfallError(std::string what_arg, HomogenizeResult achieved)
        : std::runtime_error(std::move(what_arg)), achieved_(std::move(achieved)) {}
    const HomogenizeResult& achieved() const { return achieved_; }

private:
    HomogenizeResult achieved_;
};

// Exact evaluation of the block-size plan: the first q-1 entries copy the
// targets; afterwards n_i = 2^{N(n_1..n_{i-1})} * max(targets[0..i-1]) where N
// counts increasing (q-1)-tuples. Values explode; they are reported, never
// allocated, and a cap guards the representable exponent.
std::vector<BigInt> plan_block_sizes(const std::vector<long long>& targets, int q,
                                     long long max_exponent = 1 << 20);

struct RainbowResult {
    std::vector<int> chosen;          // one vertex per unflagged block
    std::vector<int> chosen_blocks;   // block index per chosen vertex
    std::vector<int> flagged_blocks;  // blocks with no suitable vertex
};

// For a 1-homogeneous sequence of independent blocks of size >= t: per block, a
// vertex no increasing q-tuple starts an edge from. The returned set is
// re-verified independent before returning.
RainbowResult extract_rainbow_independent(const Hypergraph& h, const BlockSeq& bs, int t,
                                          const Limits& limits = {});

}  // namespace helly
