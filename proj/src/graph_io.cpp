#include "cspp/graph_io.hpp"

#include "cspp/errors.hpp"

#include <fstream>
#include <sstream>

namespace cspp {

namespace {

std::string where(std::size_t x, std::optional<std::size_t> j = std::nullopt)
{
    std::string s = "state " + std::to_string(x);
    if (j)
        s += ", transition " + std::to_string(*j);
    return s;
}

} // namespace

Json payload_to_json(const Modality& mod, const Payload& p)
{
    Json out = Json::object();
    const auto fields = mod.payload_fields();
    if (mod.per_slot_payload()) {
        Json arr = Json::array();
        for (const auto& v : p.values)
            arr.push_back(weight_to_json(v));
        out[std::string{fields[0]}] = std::move(arr);
        return out;
    }
    for (std::size_t i = 0; i < fields.size() && i < p.values.size(); ++i)
        out[std::string{fields[i]}] = weight_to_json(p.values[i]);
    return out;
}

Payload payload_from_json(const Modality& mod, const Json& j, std::size_t k, NumericMode mode)
{
    Payload p;
    const Json obj = j.is_null() ? Json::object() : j;
    if (!obj.is_object())
        throw SchemaError{"payload must be an object"};
    const auto fields = mod.payload_fields();
    for (const auto& [key, _] : obj.items()) {
        if (std::find(fields.begin(), fields.end(), key) == fields.end())
            throw SchemaError{"unexpected payload field '" + key + "' for " + std::string{mod.name()}};
    }
    if (mod.per_slot_payload()) {
        const std::string f{fields[0]};
        if (!obj.contains(f) || !obj[f].is_array())
            throw SchemaError{"payload needs a list field '" + f + "'"};
        for (const auto& v : obj[f])
            p.values.push_back(weight_from_json(v, mode));
        (void)k;
        return p;
    }
    for (auto f : fields) {
        const std::string key{f};
        if (!obj.contains(key))
            throw SchemaError{"payload missing field '" + key + "'"};
        p.values.push_back(weight_from_json(obj[key], mode));
    }
    return p;
}

Json graph_to_json(const WeightedGraph& g)
{
    Json out = Json::object();
    out["instance"] = Json{{"id", g.instance().id}, {"params", g.instance().params}};
    Json states = Json::array();
    for (std::size_t x = 0; x < g.size(); ++x) {
        const auto& s = g.states()[x];
        Json ts = Json::array();
        for (const auto& t : s.transitions)
            ts.push_back(Json{{"payload", payload_to_json(g.modality(), t.payload)}, {"slots", t.slots}});
        states.push_back(Json{{"id", x}, {"target", s.target}, {"transitions", std::move(ts)}});
    }
    out["states"] = std::move(states);
    if (!g.labels.empty()) {
        Json labels = Json::object();
        for (const auto& [x, name] : g.labels)
            labels[std::to_string(x)] = name;
        out["labels"] = std::move(labels);
    }
    return out;
}

WeightedGraph graph_from_json(const Json& j, bool strict)
{
    if (!j.is_object())
        throw SchemaError{"graph file must be a JSON object"};
    if (!j.contains("instance") || !j["instance"].is_object() || !j["instance"].contains("id"))
        throw SchemaError{"missing instance header"};
    const auto& hdr = j["instance"];
    if (!hdr["id"].is_string())
        throw SchemaError{"instance id must be a string"};
    const Json params = hdr.contains("params") ? hdr["params"] : Json::object();
    InstancePtr inst = make_instance(hdr["id"].get<std::string>(), params);
    const auto mode = inst->mode();

    if (!j.contains("states") || !j["states"].is_array())
        throw SchemaError{"missing states array"};
    const auto& js = j["states"];
    const std::size_t V = js.size();
    std::vector<State> states(V);
    for (std::size_t x = 0; x < V; ++x) {
        const auto& s = js[x];
        if (!s.is_object())
            throw SchemaError{where(x) + ": state must be an object"};
        if (s.contains("id")) {
            if (!s["id"].is_number_unsigned() || s["id"].get<std::size_t>() != x)
                throw SchemaError{where(x) + ": states must be listed with dense ids 0..V-1 in order"};
        }
        if (s.contains("target")) {
            if (!s["target"].is_boolean())
                throw SchemaError{where(x) + ": target must be a boolean"};
            states[x].target = s["target"].get<bool>();
        }
        if (!s.contains("transitions"))
            continue;
        if (!s["transitions"].is_array())
            throw SchemaError{where(x) + ": transitions must be an array"};
        const auto& ts = s["transitions"];
        for (std::size_t t = 0; t < ts.size(); ++t) {
            const auto& jt = ts[t];
            if (!jt.is_object() || !jt.contains("slots") || !jt["slots"].is_array())
                throw SchemaError{where(x, t) + ": transition needs a slots array"};
            Transition tr;
            for (const auto& y : jt["slots"]) {
                if (!y.is_number_integer() || y.get<std::int64_t>() < 0)
                    throw SchemaError{where(x, t) + ": slots must be state ids"};
                const auto id = y.get<std::int64_t>();
                if (static_cast<std::size_t>(id) >= V)
                    throw DanglingStateRef{where(x, t) + ": slot " + std::to_string(id) + " refers past V = " +
                                           std::to_string(V)};
                tr.slots.push_back(static_cast<StateId>(id));
            }
            try {
                tr.payload = payload_from_json(inst->modality, jt.contains("payload") ? jt["payload"] : Json{},
                                               tr.slots.size(), mode);
            } catch (const Error& e) {
                throw SchemaError{where(x, t) + ": " + e.what()};
            } catch (const std::exception& e) {
                throw SchemaError{where(x, t) + ": " + e.what()};
            }
            states[x].transitions.push_back(std::move(tr));
        }
    }

    WeightedGraph g{inst, std::move(states)};
    if (j.contains("labels")) {
        if (!j["labels"].is_object())
            throw SchemaError{"labels must be an object"};
        for (const auto& [key, val] : j["labels"].items()) {
            std::size_t pos = 0;
            unsigned long id = 0;
            try {
                id = std::stoul(key, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != key.size() || id >= V || !val.is_string())
                throw SchemaError{"bad label entry '" + key + "'"};
            g.labels[static_cast<StateId>(id)] = val.get<std::string>();
        }
    }
    if (strict) {
        const auto diags = g.validate();
        if (!diags.empty())
            throw SchemaError{to_string(diags.front())};
    }
    return g;
}

WeightedGraph load_graph(std::string_view text, bool strict)
{
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError{e.what()};
    }
    return graph_from_json(j, strict);
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in{path, std::ios::binary};
    if (!in)
        throw ParseError{"cannot open " + path.string()};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

WeightedGraph load_graph_file(const std::filesystem::path& path, bool strict)
{
    return load_graph(read_text_file(path), strict);
}

std::string save_graph(const WeightedGraph& g) { return graph_to_json(g).dump(2) + "\n"; }

Json valuation_to_json(std::span<const WeightValue> d)
{
    Json arr = Json::array();
    for (const auto& v : d)
        arr.push_back(weight_to_json(v));
    return arr;
}

std::vector<WeightValue> valuation_from_json(const Json& j, const WeightDomain& dom)
{
    if (!j.is_array())
        throw SchemaError{"valuation must be an array"};
    std::vector<WeightValue> d;
    for (const auto& v : j)
        d.push_back(dom.coerce(weight_from_json(v, dom.mode())));
    return d;
}

} // namespace cspp
