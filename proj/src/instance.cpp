#include "bootperc/instance.hpp"

#include <algorithm>

#include <json.hpp>

namespace bootperc {

auto to_string(InstanceError::Kind kind) -> std::string_view
{
    using K = InstanceError::Kind;
    switch (kind) {
    case K::malformed_json: return "malformed-json";
    case K::bad_schema: return "bad-schema";
    case K::invalid_parameter: return "invalid-parameter";
    case K::out_of_range: return "out-of-range";
    case K::duplicate_seed: return "duplicate-seed";
    }
    return "bad-schema";
}

auto Instance::from_set(const Grid & g, int r, const VertexSet & seeds) -> Instance
{
    Instance inst{g.rows(), g.cols(), r, {}};
    seeds.for_each([&](int i) { inst.seeds.push_back(g.vertex(i)); });
    return inst;
}

namespace {

using K = InstanceError::Kind;

auto require_int(const nlohmann::json & obj, const char * key) -> int
{
    if (!obj.contains(key))
        throw InstanceError(K::bad_schema, std::string("missing field \"") + key + "\"");
    const auto & v = obj.at(key);
    if (!v.is_number_integer())
        throw InstanceError(K::bad_schema, std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

} // namespace

auto parse_instance(std::string_view text) -> Instance
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    }
    catch (const nlohmann::json::parse_error & e) {
        throw InstanceError(K::malformed_json, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw InstanceError(K::bad_schema, "instance must be a JSON object");

    Instance inst;
    inst.rows = require_int(doc, "rows");
    inst.cols = require_int(doc, "cols");
    inst.r = require_int(doc, "r");
    if (inst.rows < 1 || inst.cols < 1)
        throw InstanceError(K::invalid_parameter, "rows and cols must be positive");
    if (inst.r < 1)
        throw InstanceError(K::invalid_parameter, "r must be positive");

    if (!doc.contains("seeds") || !doc["seeds"].is_array())
        throw InstanceError(K::bad_schema, "field \"seeds\" must be an array");
    for (const auto & s : doc["seeds"]) {
        if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer())
            throw InstanceError(K::bad_schema, "each seed must be a [row, col] integer pair");
        VertexId v{s[0].get<int>(), s[1].get<int>()};
        if (v.row < 0 || v.row >= inst.rows || v.col < 0 || v.col >= inst.cols)
            throw InstanceError(K::out_of_range, "seed [" + std::to_string(v.row) + "," + std::to_string(v.col) +
                                                     "] outside the " + std::to_string(inst.rows) + "x" +
                                                     std::to_string(inst.cols) + " grid");
        inst.seeds.push_back(v);
    }

    std::sort(inst.seeds.begin(), inst.seeds.end());
    if (auto dup = std::adjacent_find(inst.seeds.begin(), inst.seeds.end()); dup != inst.seeds.end())
        throw InstanceError(K::duplicate_seed, "seed [" + std::to_string(dup->row) + "," + std::to_string(dup->col) +
                                                   "] listed twice");
    return inst;
}

auto serialize_instance(const Instance & inst) -> std::string
{
    auto seeds = inst.seeds;
    std::sort(seeds.begin(), seeds.end());
    std::string out = "{\"rows\":" + std::to_string(inst.rows) + ",\"cols\":" + std::to_string(inst.cols) +
                      ",\"r\":" + std::to_string(inst.r) + ",\"seeds\":[";
    for (std::size_t k = 0; k < seeds.size(); ++k) {
        if (k)
            out += ',';
        out += '[' + std::to_string(seeds[k].row) + ',' + std::to_string(seeds[k].col) + ']';
    }
    out += "]}";
    return out;
}

} // namespace bootperc
