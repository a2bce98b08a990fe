#include "helly/io.hpp"

#include "helly/errors.hpp"

#include <fstream>
#include <limits>
#include <set>

namespace helly {

Json rat_to_json(const Rat& value) {
    if (denominator(value) == 1) {
        BigInt num = numerator(value);
        if (num >= (std::numeric_limits<long long>::min)() &&
            num <= (std::numeric_limits<long long>::max)())
            return Json(num.convert_to<long long>());
    }
    return Json(rational_to_string(value));
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_float())
        throw SchemaError("non-integer JSON numbers are ambiguous; use a \"p/q\" string");
    throw SchemaError("expected a rational (integer or \"p/q\" string)");
}

Json point_to_json(const Point& p) {
    Json out = Json::array();
    for (const auto& v : p) out.push_back(rat_to_json(v));
    return out;
}

Point point_from_json(const Json& j) {
    if (!j.is_array()) throw SchemaError("point must be an array of rationals");
    Point p;
    for (const auto& v : j) p.push_back(rat_from_json(v));
    return p;
}

Json geom_to_json(const GeomObject& g) {
    Json out;
    if (const Box* b = std::get_if<Box>(&g)) {
        out["type"] = "box";
        out["lo"] = point_to_json(b->lo);
        out["hi"] = point_to_json(b->hi);
    } else if (const VPolytope* p = std::get_if<VPolytope>(&g)) {
        out["type"] = "polytope";
        Json pts = Json::array();
        for (const auto& pt : p->points) pts.push_back(point_to_json(pt));
        out["points"] = pts;
    } else {
        const Ball& ball = std::get<Ball>(g);
        out["type"] = "ball";
        out["center"] = point_to_json(ball.center);
        out["radius"] = rat_to_json(ball.radius);
    }
    return out;
}

GeomObject geom_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw SchemaError("geometry record needs a \"type\" string");
    std::string type = j["type"].get<std::string>();
    if (type == "box") {
        if (!j.contains("lo") || !j.contains("hi")) throw SchemaError("box needs lo and hi");
        Box b{point_from_json(j["lo"]), point_from_json(j["hi"])};
        validate(b);
        return b;
    }
    if (type == "polytope") {
        if (!j.contains("points")) throw SchemaError("polytope needs points");
        VPolytope p;
        for (const auto& pt : j["points"]) p.points.push_back(point_from_json(pt));
        validate(p);
        return p;
    }
    if (type == "ball") {
        if (!j.contains("center") || !j.contains("radius"))
            throw SchemaError("ball needs center and radius");
        Ball b{point_from_json(j["center"]), rat_from_json(j["radius"])};
        validate(b);
        return b;
    }
    throw SchemaError("unknown geometry type: " + type);
}

Json hypergraph_to_json(const Hypergraph& h) {
    Json out;
    out["q"] = h.q();
    out["vertices"] = h.vertex_labels();
    Json edges = Json::array();
    for (const auto& e : h.edges()) edges.push_back(h.labels_of(e));
    out["edges"] = edges;
    return out;
}

Hypergraph hypergraph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("q") || !j.contains("vertices") || !j.contains("edges"))
        throw SchemaError("hypergraph needs q, vertices, edges");
    if (!j["q"].is_number_integer()) throw SchemaError("hypergraph q must be an integer");
    std::vector<std::string> vertices;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw SchemaError("hypergraph vertices must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<std::vector<std::string>> edges;
    for (const auto& e : j["edges"]) {
        std::vector<std::string> edge;
        for (const auto& v : e) {
            if (!v.is_string()) throw SchemaError("hypergraph edge vertices must be strings");
            edge.push_back(v.get<std::string>());
        }
        edges.push_back(std::move(edge));
    }
    return Hypergraph(j["q"].get<int>(), std::move(vertices), edges);
}

Json nerve_spec_to_json(const NerveSpec& spec) {
    Json out;
    out["kind"] = to_string(spec.kind);
    out["d"] = spec.d;
    out["k"] = spec.k;
    out["q"] = spec.q;
    return out;
}

NerveSpec nerve_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) throw SchemaError("nerve spec needs a kind");
    NerveSpec spec;
    spec.kind = nerve_kind_from_string(j["kind"].get<std::string>());
    spec.d = j.value("d", 1);
    spec.k = j.value("k", 0);
    switch (spec.kind) {  // q defaults follow the kind
        case NerveKind::ConvexPoint:
        case NerveKind::Lattice: spec.q = spec.d + 1; break;
        case NerveKind::BoxAxisFlat: spec.q = 2; break;
        case NerveKind::BallKFlat: spec.q = spec.k + 2; break;
        case NerveKind::PolygonLine: spec.q = 2; break;
    }
    spec.q = j.value("q", spec.q);
    spec.validate();
    return spec;
}

Json cover_to_json(const CoverInstance& inst) {
    Json out;
    out["targets"] = inst.targets;
    out["candidates"] = inst.candidates;
    Json hits = Json::array();
    for (const auto& row : inst.hits) {
        Json r = Json::array();
        for (bool b : row) r.push_back(b);
        hits.push_back(r);
    }
    out["hits"] = hits;
    return out;
}

CoverInstance cover_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("targets") || !j.contains("candidates") ||
        !j.contains("hits"))
        throw SchemaError("cover instance needs targets, candidates, hits");
    std::vector<std::string> targets, candidates;
    for (const auto& t : j["targets"]) targets.push_back(t.get<std::string>());
    for (const auto& c : j["candidates"]) candidates.push_back(c.get<std::string>());
    std::vector<std::vector<bool>> hits;
    for (const auto& row : j["hits"]) {
        std::vector<bool> r;
        for (const auto& b : row) {
            if (!b.is_boolean()) throw SchemaError("hits entries must be booleans");
            r.push_back(b.get<bool>());
        }
        hits.push_back(std::move(r));
    }
    return CoverInstance::make(std::move(targets), std::move(candidates), std::move(hits));
}

Json certificate_to_json(const PiercingCertificate& cert) {
    Json out;
    out["value"] = cert.value;
    out["chosen"] = cert.chosen;
    return out;
}

PiercingCertificate certificate_from_json(const Json& j) {
    PiercingCertificate cert;
    cert.value = j.at("value").get<int>();
    for (const auto& c : j.at("chosen")) cert.chosen.push_back(c.get<int>());
    return cert;
}

Json blockseq_to_json(const BlockSeq& bs, const Hypergraph& host) {
    Json out = Json::array();
    for (const auto& block : bs.blocks) out.push_back(host.labels_of(block));
    return out;
}

BlockSeq blockseq_from_json(const Json& j, const Hypergraph& host) {
    if (!j.is_array()) throw SchemaError("blocks must be an array of label arrays");
    BlockSeq bs;
    for (const auto& block : j) {
        std::vector<int> indices;
        for (const auto& label : block) {
            if (!label.is_string()) throw SchemaError("block entries must be vertex labels");
            indices.push_back(host.index_of(label.get<std::string>()));
        }
        bs.blocks.push_back(std::move(indices));
    }
    bs.validate(host);
    return bs;
}

Json trace_to_json(const HomogenizationTrace& trace, const Hypergraph& host) {
    Json steps = Json::array();
    for (const auto& step : trace.steps) {
        Json s;
        s["uniformity"] = step.uniformity;
        s["tuple"] = host.labels_of(step.tuple.vertices);
        s["levels"] = step.tuple.levels;
        s["decision"] = step.heavy ? "HEAVY" : "LIGHT";
        s["kept_blocks"] = step.kept_blocks;
        s["sizes"] = step.sizes;
        steps.push_back(std::move(s));
    }
    return steps;
}

Json instance_to_json(const InstanceFile& inst) {
    Json out;
    out["version"] = inst.version;
    if (!inst.objects.empty()) {
        Json objs = Json::array();
        for (const auto& g : inst.objects) objs.push_back(geom_to_json(g));
        out["objects"] = objs;
    }
    if (inst.hypergraph) out["hypergraph"] = hypergraph_to_json(*inst.hypergraph);
    if (inst.spec) out["spec"] = nerve_spec_to_json(*inst.spec);
    if (!inst.families.empty()) out["families"] = inst.families;
    if (!inst.blocks.empty()) out["blocks"] = inst.blocks;
    if (!inst.meta.empty()) out["meta"] = inst.meta;
    return out;
}

InstanceFile instance_from_json(const Json& j) {
    if (!j.is_object()) throw SchemaError("instance file must be a JSON object");
    InstanceFile inst;
    inst.version = j.value("version", std::string("1"));
    if (j.contains("objects"))
        for (const auto& g : j["objects"]) inst.objects.push_back(geom_from_json(g));
    if (j.contains("hypergraph")) inst.hypergraph = hypergraph_from_json(j["hypergraph"]);
    if (j.contains("spec")) inst.spec = nerve_spec_from_json(j["spec"]);
    if (j.contains("families")) {
        int universe = inst.hypergraph ? inst.hypergraph->num_vertices()
                                       : static_cast<int>(inst.objects.size());
        std::set<int> seen;
        for (const auto& fam : j["families"]) {
            std::vector<int> f;
            for (const auto& v : fam) {
                if (!v.is_number_integer()) throw SchemaError("family entries must be indices");
                int idx = v.get<int>();
                if (idx < 0 || idx >= universe) throw SchemaError("family index out of range");
                if (!seen.insert(idx).second)
                    throw SchemaError("families must be pairwise disjoint");
                f.push_back(idx);
            }
            inst.families.push_back(std::move(f));
        }
    }
    if (j.contains("blocks"))
        for (const auto& block : j["blocks"]) {
            std::vector<std::string> labels;
            for (const auto& v : block) labels.push_back(v.get<std::string>());
            inst.blocks.push_back(std::move(labels));
        }
    if (j.contains("meta")) inst.meta = j["meta"];
    return inst;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open file: " + path);
    Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw SchemaError("malformed JSON in " + path);
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

bool schema_check(const Json& schema, const Json& value, std::string* error) {
    auto fail = [&](const std::string& msg) {
        if (error) *error = msg;
        return false;
    };
    if (schema.contains("type")) {
        const std::string type = schema["type"].get<std::string>();
        bool ok = (type == "object" && value.is_object()) ||
                  (type == "array" && value.is_array()) ||
                  (type == "string" && value.is_string()) ||
                  (type == "integer" && value.is_number_integer()) ||
                  (type == "number" && value.is_number()) ||
                  (type == "boolean" && value.is_boolean());
        if (!ok) return fail("expected type " + type);
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& v : schema["enum"]) ok = ok || v == value;
        if (!ok) return fail("value not in enum");
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& name : schema["required"])
                if (!value.contains(name.get<std::string>()))
                    return fail("missing required key " + name.get<std::string>());
        if (schema.contains("properties"))
            for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
                if (value.contains(it.key()))
                    if (!schema_check(it.value(), value[it.key()], error)) return false;
    }
    if (value.is_array() && schema.contains("items"))
        for (const auto& item : value)
            if (!schema_check(schema["items"], item, error)) return false;
    return true;
}

}  // namespace helly
