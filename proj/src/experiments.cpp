#include "helly/experiments.hpp"

#include "helly/errors.hpp"
#include "helly/generators.hpp"
#include "helly/nerve.hpp"
#include "helly/transversal.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>
#include <vector>

namespace helly {

Json CampaignReport::to_json(std::uint64_t seed) const {
    Json out;
    out["experiment"] = name;
    out["trials"] = trials;
    out["violations"] = violations;
    out["seed"] = seed;
    out["rng"] = Rng::kAlgorithm;
    out["details"] = details;
    return out;
}

namespace {

// Runs fn(trial) for trial in [0, trials) across a small pool; results land in
// a vector indexed by trial, so aggregation order never depends on scheduling.
template <typename Fn>
auto parallel_trials(int trials, Fn&& fn) {
    using Result = decltype(fn(0));
    std::vector<Result> results(static_cast<std::size_t>(trials));
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (trials <= 1 || workers == 1) {
        for (int i = 0; i < trials; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<int> next{0};
    std::vector<std::future<void>> futures;
    for (unsigned w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&]() {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= trials) return;
                results[i] = fn(i);
            }
        }));
    }
    for (auto& f : futures) f.get();
    return results;
}

}  // namespace

CampaignReport run_frac_helly_boxes(int trials, std::uint64_t seed, int d, int n_min, int n_max,
                                    const Limits& limits) {
    struct Trial {
        bool violated = false;
        int resamples = 0;
        double alpha = 0.0;
        double clique_ratio = 0.0;
    };
    Rat threshold = Rat(1) - Rat(1, static_cast<long long>(d) * d);
    auto results = parallel_trials(trials, [&](int trial) {
        Trial out;
        // resample until the density hypothesis holds
        for (std::uint64_t attempt = 0;; ++attempt) {
            Rng rng = derive_rng(seed, static_cast<std::uint64_t>(trial) * 1024 + attempt);
            int n = static_cast<int>(n_min + rng.below(static_cast<std::uint64_t>(n_max - n_min + 1)));
            auto boxes = gen_random_boxes(n, d, rng, /*center_max=*/16, /*halfwidth_min=*/3,
                                          /*halfwidth_max=*/14);
            FracHellyReport report = frac_helly_box_check(boxes, limits);
            if (!report.applicable) {
                ++out.resamples;
                continue;
            }
            out.violated = !report.bound_holds;
            out.alpha = to_double(report.alpha);
            out.clique_ratio = static_cast<double>(report.clique) / report.n;
            return out;
        }
    });
    CampaignReport report;
    report.name = "frac-helly-boxes";
    report.trials = trials;
    double alpha_min = 1.0, ratio_min = 1.0;
    long long resamples = 0;
    for (const auto& t : results) {
        if (t.violated) ++report.violations;
        alpha_min = std::min(alpha_min, t.alpha);
        ratio_min = std::min(ratio_min, t.clique_ratio);
        resamples += t.resamples;
    }
    report.details["d"] = d;
    report.details["alpha_threshold"] = rat_to_json(threshold);
    report.details["alpha_min"] = alpha_min;
    report.details["clique_ratio_min"] = ratio_min;
    report.details["resamples"] = resamples;
    return report;
}

CampaignReport run_claim17(int s, int t, int d, int trials, std::uint64_t seed,
                           const Limits& limits) {
    struct Trial {
        bool alpha_ok = false;
        bool pair_ok = false;
        double alpha = 0.0;
    };
    auto results = parallel_trials(trials, [&](int trial) {
        Rng rng = derive_rng(seed, static_cast<std::uint64_t>(trial));
        Claim17Report rep = claim17_experiment(s, t, d, rng.next(), limits);
        Trial out;
        out.alpha_ok = rep.alpha_ok;
        // The same-family pair matters whenever the clique bound exceeds s.
        out.pair_ok = !rep.clique_bound_exceeds_s || rep.same_family_pair_found;
        out.alpha = to_double(rep.alpha);
        return out;
    });
    CampaignReport report;
    report.name = "claim17";
    report.trials = trials;
    double alpha_min = 1.0;
    for (const auto& t : results) {
        if (!t.alpha_ok || !t.pair_ok) ++report.violations;
        alpha_min = std::min(alpha_min, t.alpha);
    }
    report.details["s"] = s;
    report.details["t"] = t;
    report.details["d"] = d;
    report.details["alpha_min"] = alpha_min;
    Rat lower = Rat(static_cast<long long>(s) - 1) / (Rat(s) - Rat(1, static_cast<long long>(t)));
    report.details["alpha_lower"] = rat_to_json(lower);
    return report;
}

CampaignReport run_claim18(int trials, std::uint64_t seed, int d, int n, const Limits& limits) {
    struct Trial {
        bool triple_found = false;
        bool certified = false;
        bool private_pair_blocked = false;
        int lambda = 0, nu = 0, tau = 0;
        bool chain_ok = false;
    };
    auto results = parallel_trials(trials, [&](int trial) {
        Rng rng = derive_rng(seed, static_cast<std::uint64_t>(trial));
        auto boxes = gen_random_boxes(n, d, rng, /*center_max=*/12, /*halfwidth_min=*/1,
                                      /*halfwidth_max=*/8);
        Trial out;
        auto triple = consistent_triple(boxes, limits);
        if (triple) {
            out.triple_found = true;
            out.certified = triple->containment_verified;
            auto matrix = private_point_matrix(boxes, limits);
            out.private_pair_blocked = !matrix[triple->first][triple->last];
        }
        EdgeSystem dual = dual_box_flat_hypergraph(boxes, 0, limits);
        out.lambda = lambda_dsw(dual, limits).value;
        out.nu = matching_number(dual, limits).value;
        CoverInstance cover = cover_boxes_by_points(boxes, limits);
        out.tau = min_hitting_set(cover, limits).value;
        out.chain_ok = out.nu <= out.tau;
        return out;
    });
    CampaignReport report;
    report.name = "claim18";
    report.trials = trials;
    int lambda_max = 0, tau_max = 0;
    int triples = 0;
    for (const auto& t : results) {
        if (t.triple_found && (!t.certified || !t.private_pair_blocked)) ++report.violations;
        if (!t.chain_ok) ++report.violations;
        lambda_max = std::max(lambda_max, t.lambda);
        tau_max = std::max(tau_max, t.tau);
        if (t.triple_found) ++triples;
    }
    report.details["d"] = d;
    report.details["n"] = n;
    report.details["triples_found"] = triples;
    report.details["lambda_max"] = lambda_max;
    report.details["tau_max"] = tau_max;
    return report;
}

CampaignReport run_growth(const std::string& generator, int n, std::uint64_t seed,
                          const Limits& limits) {
    Rng rng(seed);
    std::vector<GeomObject> family;
    NerveSpec spec = NerveSpec::convex_point(1);
    if (generator == "disjoint-intervals") {
        for (const auto& b : gen_disjoint_intervals(n, rng)) family.emplace_back(b);
    } else if (generator == "nested") {
        for (const auto& b : gen_nested_boxes(n, 1, rng)) family.emplace_back(b);
    } else if (generator == "counterexample-1d") {
        auto cx = gen_counterexample_1d(n, 4);
        family = cx.objects;
    } else {
        throw SchemaError("growth experiment supports disjoint-intervals, nested, "
                          "counterexample-1d");
    }
    std::vector<int> prefixes;
    for (int p = 2; p <= static_cast<int>(family.size()); p *= 2)
        prefixes.push_back(p);
    if (prefixes.empty() || prefixes.back() != static_cast<int>(family.size()))
        prefixes.push_back(static_cast<int>(family.size()));
    auto rows = truncation_growth_report(family, spec, prefixes, limits);

    CampaignReport report;
    report.name = "growth";
    report.trials = static_cast<int>(rows.size());
    Json table = Json::array();
    int prev = 0;
    for (const auto& row : rows) {
        if (row.independence < prev) ++report.violations;  // must be nondecreasing
        prev = row.independence;
        table.push_back({{"prefix", row.prefix_size}, {"independence", row.independence}});
    }
    report.details["generator"] = generator;
    report.details["table"] = table;
    return report;
}

}  // namespace helly
