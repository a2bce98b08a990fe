#pragma once

#include "helly/boxlab.hpp"
#include "helly/geometry.hpp"
#include "helly/homogenize.hpp"
#include "helly/hypergraph.hpp"
#include "helly/nerve.hpp"
#include "helly/transversal.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace helly {

using Json = nlohmann::json;

// Rationals serialize as plain integers when integral, "p/q" strings otherwise.
Json rat_to_json(const Rat& value);
Rat rat_from_json(const Json& j);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

Json geom_to_json(const GeomObject& g);
GeomObject geom_from_json(const Json& j);

Json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

Json nerve_spec_to_json(const NerveSpec& spec);
NerveSpec nerve_spec_from_json(const Json& j);

Json cover_to_json(const CoverInstance& inst);
CoverInstance cover_from_json(const Json& j);

Json certificate_to_json(const PiercingCertificate& cert);
PiercingCertificate certificate_from_json(const Json& j);

Json blockseq_to_json(const BlockSeq& bs, const Hypergraph& host);
BlockSeq blockseq_from_json(const Json& j, const Hypergraph& host);

Json trace_to_json(const HomogenizationTrace& trace, const Hypergraph& host);

// One self-contained input document: geometry objects or a hypergraph, an
// optional nerve spec, optional families and blocks.
struct InstanceFile {
    std::string version = "1";
    std::vector<GeomObject> objects;
    std::optional<Hypergraph> hypergraph;
    std::optional<NerveSpec> spec;
    std::vector<std::vector<int>> families;
    std::vector<std::vector<std::string>> blocks;
    Json meta = Json::object();
};

Json instance_to_json(const InstanceFile& inst);
InstanceFile instance_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

// Minimal structural validator for the shipped schemas: type / required /
// properties / items / enum. Returns false and fills `error` on mismatch.
bool schema_check(const Json& schema, const Json& value, std::string* error = nullptr);

}  // namespace helly
