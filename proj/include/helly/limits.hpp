#pragma once

namespace helly {

// Hard caps for the exhaustive searches. Every op that can blow up checks its
// cap up front and throws LimitError instead of truncating the answer.
struct Limits {
    int independence_vertices = 40;    // independence / clique branch-and-bound
    int pattern_cells = 20;            // s*t cap for M-pattern search
    long long enumeration = 1'000'000; // lattice points, q-subset scans, cells
    long long hetero_sequences = 5'000'000;
    long long tuples = 2'000'000;      // increasing-tuple enumerations
    int hitting_candidates = 10'000;
    int hitting_targets = 1'000;
    int lambda_edges = 64;

    static Limits defaults() { return {}; }

    // One knob for the CLI: --limit / HELLYLAB_LIMIT replaces the enumeration caps.
    static Limits with_enumeration(long long cap) {
        Limits l;
        l.enumeration = cap;
        l.hetero_sequences = cap;
        l.tuples = cap;
        return l;
    }
};

}  // namespace helly
