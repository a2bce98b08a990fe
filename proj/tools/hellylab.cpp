// hellylab: nerve construction, piercing optimization, homogenization, and
// experiment drivers over exact-rational geometric families.
//
// Exit codes: 0 ok, 1 theorem-check violation, 2 schema error, 3 search limit,
// 4 infeasible instance, 5 homogenization shortfall.

#include "helly/errors.hpp"
#include "helly/experiments.hpp"
#include "helly/generators.hpp"
#include "helly/homogenize.hpp"
#include "helly/io.hpp"
#include "helly/nerve.hpp"
#include "helly/transversal.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace helly;

Limits limits_from_env_and_flag(long long flag_limit) {
    if (flag_limit > 0) return Limits::with_enumeration(flag_limit);
    if (const char* env = std::getenv("HELLYLAB_LIMIT")) {
        try {
            long long v = std::stoll(env);
            if (v > 0) return Limits::with_enumeration(v);
        } catch (const std::exception&) {
            throw SchemaError("HELLYLAB_LIMIT must be a positive integer");
        }
    }
    return Limits::defaults();
}

void emit(const Json& j, bool markdown, const std::string& title) {
    if (!markdown) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "## " << title << "\n\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.value().is_structured()) continue;
        std::cout << "- " << it.key() << ": " << it.value().dump() << "\n";
    }
    std::cout << "\n```json\n" << j.dump(2) << "\n```\n";
}

NerveSpec resolve_spec(const InstanceFile& inst, const std::string& kind_flag, int d_flag,
                       int k_flag, int q_flag) {
    NerveSpec spec;
    if (!kind_flag.empty()) {
        Json j;
        j["kind"] = kind_flag;
        j["d"] = d_flag > 0 ? d_flag : 1;
        j["k"] = k_flag >= 0 ? k_flag : 0;
        if (q_flag > 0) j["q"] = q_flag;
        spec = nerve_spec_from_json(j);
    } else if (inst.spec) {
        spec = *inst.spec;
    } else {
        throw SchemaError("no nerve spec: pass --kind or embed \"spec\" in the instance");
    }
    return spec;
}

std::vector<Box> require_boxes(const InstanceFile& inst) {
    std::vector<Box> boxes;
    for (const auto& g : inst.objects) {
        const Box* b = std::get_if<Box>(&g);
        if (!b) throw SchemaError("this command requires box objects");
        boxes.push_back(*b);
    }
    if (boxes.empty()) throw SchemaError("instance has no boxes");
    return boxes;
}

std::vector<VPolytope> require_polygons(const InstanceFile& inst) {
    std::vector<VPolytope> polys;
    for (const auto& g : inst.objects) {
        if (const VPolytope* p = std::get_if<VPolytope>(&g)) polys.push_back(*p);
        else if (const Box* b = std::get_if<Box>(&g)) polys.push_back(box_to_polytope(*b));
        else throw SchemaError("line piercing requires polygons or boxes");
    }
    if (polys.empty()) throw SchemaError("instance has no polygons");
    return polys;
}

int cmd_nerve(const std::string& input, const std::string& kind, int d, int k, int q,
              const Limits& limits, bool markdown) {
    InstanceFile inst = instance_from_json(load_json_file(input));
    NerveSpec spec = resolve_spec(inst, kind, d, k, q);
    NerveResult nerve = build_nerve(inst.objects, spec, limits);
    Json out = hypergraph_to_json(nerve.hypergraph);
    if (!nerve.inconclusive.empty()) out["inconclusive"] = nerve.inconclusive;
    emit(out, markdown, "nerve");
    return 0;
}

int cmd_pq_check(const std::string& input, const std::string& kind, int d, int k, int q, int p,
                 const std::string& hetero, const Limits& limits, bool markdown) {
    InstanceFile inst = instance_from_json(load_json_file(input));
    Hypergraph h = [&]() {
        if (inst.hypergraph) return *inst.hypergraph;
        NerveSpec spec = resolve_spec(inst, kind, d, k, q);
        return build_nerve(inst.objects, spec, limits).hypergraph;
    }();

    Json out;
    if (!hetero.empty()) {
        if (inst.families.empty())
            throw SchemaError("heterochromatic check needs \"families\" in the instance");
        HeteroMode mode;
        if (hetero == "subsequence") mode = HeteroMode::Subsequence;
        else if (hetero == "one-per-family") mode = HeteroMode::OnePerFamilyPrefix;
        else throw SchemaError("--hetero must be subsequence or one-per-family");
        HeteroResult res = heterochromatic_check(h, inst.families, p, mode, limits);
        out["check"] = "heterochromatic";
        out["mode"] = hetero;
        out["p"] = p;
        out["holds"] = res.ok;
        if (!res.ok) {
            out["violating_vertices"] = h.labels_of(res.violating_vertices);
            out["violating_families"] = res.violating_families;
        }
        emit(out, markdown, "heterochromatic check");
        return 0;
    }

    PqResult res = pq_condition(h, p, limits);
    out["check"] = "pq";
    out["p"] = p;
    out["q"] = h.q();
    out["holds"] = res.holds;
    out["independence_number"] = res.independence.value;
    out["independent_witness"] = h.labels_of(res.independence.witness);
    if (!res.holds) out["violating_set"] = h.labels_of(res.violating);
    emit(out, markdown, "pq check");
    return 0;
}

int cmd_pierce(const std::string& input, const std::string& candidates, int k,
               const Limits& limits, bool markdown) {
    InstanceFile inst = instance_from_json(load_json_file(input));
    CoverInstance cover = [&]() {
        if (candidates == "points") return cover_boxes_by_points(require_boxes(inst), limits);
        if (candidates == "axisflats")
            return cover_boxes_by_axisflats(require_boxes(inst), k, limits);
        if (candidates == "lattice")
            return cover_objects_by_lattice_points(inst.objects, limits);
        if (candidates == "lines") return cover_polygons_by_lines(require_polygons(inst), limits);
        throw SchemaError("--candidates must be points|axisflats|lattice|lines");
    }();

    PiercingCertificate tau = min_hitting_set(cover, limits);
    if (!verify_certificate(cover, tau))
        throw std::logic_error("certificate failed re-verification");
    FractionalTransversal frac = fractional_transversal(cover, limits);
    EdgeSystem dual = dual_system(cover);
    SetWitness nu = matching_number(dual, limits);
    LambdaWitness lambda = lambda_dsw(dual, limits);

    Json out;
    out["tau"] = tau.value;
    out["tau_star"] = rat_to_json(frac.value);
    out["nu"] = nu.value;
    out["lambda"] = lambda.value;
    out["certificate"] = certificate_to_json(tau);
    Json chosen_labels = Json::array();
    for (int c : tau.chosen) chosen_labels.push_back(cover.candidates[c]);
    out["certificate"]["labels"] = chosen_labels;
    out["nu_witness"] = nu.witness;
    out["lambda_witness"] = lambda.edges;
    out["verified"] = true;
    out["chain_ok"] = Rat(nu.value) <= frac.value && frac.value <= Rat(tau.value);
    emit(out, markdown, "piercing report");
    return 0;
}

int cmd_homogenize(const std::string& input, int p, bool plan_only,
                   const std::string& targets_csv, int q_flag, int min_blocks, int min_size,
                   const Limits& limits, bool markdown) {
    if (plan_only) {
        if (targets_csv.empty()) throw SchemaError("--plan-only needs --targets n1,n2,...");
        std::vector<long long> targets;
        std::stringstream ss(targets_csv);
        std::string item;
        while (std::getline(ss, item, ',')) targets.push_back(std::stoll(item));
        int q = q_flag > 0 ? q_flag : 2;
        auto plan = plan_block_sizes(targets, q);
        Json arr = Json::array();
        for (const auto& v : plan) arr.push_back(v.str());
        Json out;
        out["q"] = q;
        out["targets"] = targets;
        out["plan"] = arr;
        emit(out, markdown, "block-size plan");
        return 0;
    }

    InstanceFile inst = instance_from_json(load_json_file(input));
    if (!inst.hypergraph) throw SchemaError("homogenize needs a hypergraph instance");
    if (inst.blocks.empty()) throw SchemaError("homogenize needs \"blocks\" in the instance");
    const Hypergraph& h = *inst.hypergraph;
    Json blocks_json = Json::array();
    for (const auto& b : inst.blocks) blocks_json.push_back(b);
    BlockSeq bs = blockseq_from_json(blocks_json, h);

    HomogenizeResult result = homogenize_full(h, bs, p, limits, min_blocks, min_size);
    HomogeneityCheck verify = is_homogeneous(h, result.final_blocks, p, limits);
    Json out;
    out["p"] = p;
    out["steps"] = trace_to_json(result.trace, h);
    out["final_blocks"] = blockseq_to_json(result.final_blocks, h);
    out["homogeneous"] = verify.ok;
    emit(out, markdown, "homogenization trace");
    return 0;
}

int cmd_generate(const std::string& kind, int n, int d, int s, int t, int inner,
                 std::uint64_t seed, const std::string& out_path, bool markdown) {
    Rng rng(seed);
    InstanceFile inst;
    inst.meta["generator"] = kind;
    inst.meta["seed"] = seed;
    inst.meta["rng"] = Rng::kAlgorithm;

    if (kind == "disjoint-intervals") {
        for (const auto& b : gen_disjoint_intervals(n, rng)) inst.objects.emplace_back(b);
        inst.spec = NerveSpec::convex_point(1);
    } else if (kind == "nested") {
        for (const auto& b : gen_nested_boxes(n, d, rng)) inst.objects.emplace_back(b);
        inst.spec = d == 1 ? NerveSpec::convex_point(1) : NerveSpec::box_axisflat(d, 0);
    } else if (kind == "counterexample-1d") {
        auto cx = gen_counterexample_1d(n, inner);
        inst.objects = cx.objects;
        inst.families = cx.families;
        inst.spec = NerveSpec::convex_point(1);
        inst.meta["inner"] = inner;
    } else if (kind == "claim17-boxes") {
        for (const auto& b : claim17_family(s, t, d, rng)) inst.objects.emplace_back(b);
        inst.meta["s"] = s;
        inst.meta["t"] = t;
        for (int f = 0; f < s; ++f) {
            std::vector<int> fam;
            for (int m = 0; m < t; ++m) fam.push_back(f * t + m);
            inst.families.push_back(fam);
        }
    } else if (kind == "matching-complement") {
        inst.hypergraph = gen_matching_complement(n / 2);
    } else if (kind == "random-boxes") {
        for (const auto& b : gen_random_boxes(n, d, rng)) inst.objects.emplace_back(b);
    } else if (kind == "random-polytopes") {
        for (const auto& p : gen_random_polytopes(n, d, d + 2, rng)) inst.objects.emplace_back(p);
    } else {
        throw SchemaError("unknown generator kind: " + kind);
    }

    Json out = instance_to_json(inst);
    if (out_path.empty()) emit(out, markdown, "instance");
    else save_json_file(out_path, out);
    return 0;
}

int cmd_experiment(const std::string& kind, int trials, std::uint64_t seed, int d, int s, int t,
                   int n, const std::string& generator, const Limits& limits, bool markdown) {
    CampaignReport report;
    if (kind == "frac-helly-boxes") {
        report = run_frac_helly_boxes(trials, seed, d, 5, n > 0 ? n : 30, limits);
    } else if (kind == "claim17") {
        report = run_claim17(s, t, d, trials, seed, limits);
    } else if (kind == "claim18") {
        report = run_claim18(trials, seed, d, n > 0 ? n : 8, limits);
    } else if (kind == "growth") {
        report = run_growth(generator, n > 0 ? n : 16, seed, limits);
    } else {
        throw SchemaError("unknown experiment kind: " + kind);
    }
    emit(report.to_json(seed), markdown, "experiment " + report.name);
    return report.violations > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hellylab: nerves, piercing numbers, and homogenization at desk scale"};
    app.require_subcommand(1);

    std::string input, kind, candidates = "points", hetero, targets_csv, out_path, generator;
    int d = 0, k = -1, q = 0, p = 2, s = 2, t = 2, n = 8, inner = 4;
    int min_blocks = 0, min_size = 0, trials = 100;
    long long limit_flag = 0;
    std::uint64_t seed = 1;
    bool markdown = false, plan_only = false;

    app.add_flag("--markdown", markdown, "human-readable summary instead of bare JSON");
    app.add_option("--limit", limit_flag, "override enumeration caps (also HELLYLAB_LIMIT)");

    auto* nerve = app.add_subcommand("nerve", "build the q-uniform nerve of a family");
    nerve->add_option("input", input)->required();
    nerve->add_option("--kind", kind, "convex|boxflat|ballflat|lattice|polygonline");
    nerve->add_option("--d", d);
    nerve->add_option("--k", k);
    nerve->add_option("--q", q);

    auto* pq = app.add_subcommand("pq-check", "(p,q)-condition or heterochromatic condition");
    pq->add_option("input", input)->required();
    pq->add_option("--p", p)->required();
    pq->add_option("--kind", kind);
    pq->add_option("--d", d);
    pq->add_option("--k", k);
    pq->add_option("--q", q);
    pq->add_option("--hetero", hetero, "subsequence|one-per-family");

    auto* pierce = app.add_subcommand("pierce", "exact tau, tau*, nu, lambda with certificates");
    pierce->add_option("input", input)->required();
    pierce->add_option("--candidates", candidates, "points|axisflats|lattice|lines");
    pierce->add_option("--k", k);

    auto* hom = app.add_subcommand("homogenize", "homogenization trace or block-size plan");
    hom->add_option("input", input);
    hom->add_option("--p", p);
    hom->add_flag("--plan-only", plan_only);
    hom->add_option("--targets", targets_csv, "comma-separated target sizes for --plan-only");
    hom->add_option("--q", q);
    hom->add_option("--min-blocks", min_blocks);
    hom->add_option("--min-size", min_size);

    auto* gen = app.add_subcommand("generate", "seeded instance generators");
    gen->add_option("--kind", kind)->required();
    gen->add_option("--n", n);
    gen->add_option("--d", d);
    gen->add_option("--s", s);
    gen->add_option("--t", t);
    gen->add_option("--inner", inner);
    gen->add_option("--seed", seed);
    gen->add_option("--out", out_path);

    auto* exp = app.add_subcommand("experiment", "seeded campaign drivers");
    exp->add_option("--kind", kind)->required();
    exp->add_option("--trials", trials);
    exp->add_option("--seed", seed);
    exp->add_option("--d", d);
    exp->add_option("--s", s);
    exp->add_option("--t", t);
    exp->add_option("--n", n);
    exp->add_option("--generator", generator);

    CLI11_PARSE(app, argc, argv);

    try {
        helly::Limits limits = limits_from_env_and_flag(limit_flag);
        if (nerve->parsed()) return cmd_nerve(input, kind, d, k, q, limits, markdown);
        if (pq->parsed())
            return cmd_pq_check(input, kind, d, k, q, p, hetero, limits, markdown);
        if (pierce->parsed())
            return cmd_pierce(input, candidates, k < 0 ? 0 : k, limits, markdown);
        if (hom->parsed())
            return cmd_homogenize(input, p, plan_only, targets_csv, q, min_blocks, min_size,
                                  limits, markdown);
        if (gen->parsed())
            return cmd_generate(kind, n, d == 0 ? 1 : d, s, t, inner, seed, out_path, markdown);
        if (exp->parsed())
            return cmd_experiment(kind, trials, seed, d == 0 ? 2 : d, s, t, n, generator, limits,
                                  markdown);
    } catch (const helly::ShortfallError& e) {
        std::cerr << "shortfall: " << e.what() << "\n";
        return 5;
    } catch (const helly::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 4;
    } catch (const helly::LimitError& e) {
        std::cerr << "limit: " << e.what() << "\n";
        return 3;
    } catch (const helly::SchemaError& e) {
        std::cerr << "schema: " << e.what() << "\n";
        return 2;
    } catch (const helly::PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
