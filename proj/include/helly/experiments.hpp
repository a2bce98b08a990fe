#pragma once

#include "helly/boxlab.hpp"
#include "helly/io.hpp"
#include "helly/limits.hpp"

#include <cstdint>
#include <string>

namespace helly {

// Campaign drivers shared by the CLI and the acceptance suite. Trials run in
// parallel on independent derived streams; aggregation is by trial index, so
// reports are reproducible for a given (seed, trials).

struct CampaignReport {
    std::string name;
    int trials = 0;
    int violations = 0;
    Json details = Json::object();

    Json to_json(std::uint64_t seed) const;
};

// Random dense d-dimensional box instances; every instance with
// alpha > 1 - 1/d^2 must satisfy the clique bound. Instances are resampled
// until `trials` qualifying ones ran.
CampaignReport run_frac_helly_boxes(int trials, std::uint64_t seed, int d = 2, int n_min = 5,
                                    int n_max = 30, const Limits& limits = {});

CampaignReport run_claim17(int s, int t, int d, int trials, std::uint64_t seed,
                           const Limits& limits = {});

// Random interval/box families: consistent triple, containment certificate,
// private-point check, and the (nu, lambda, tau) profile of the dual.
CampaignReport run_claim18(int trials, std::uint64_t seed, int d = 1, int n = 8,
                           const Limits& limits = {});

// Independence growth over prefixes of a generated family.
CampaignReport run_growth(const std::string& generator, int n, std::uint64_t seed,
                          const Limits& limits = {});

}  // namespace helly
