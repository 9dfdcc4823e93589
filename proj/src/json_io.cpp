#include "posetlab/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace posetlab {

using nlohmann::json;

static int get_int(const json& j, const char* field, int lo, int hi) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw std::runtime_error(std::string("family JSON: missing integer field '") + field + "'");
    long long v = j[field].get<long long>();
    if (v < lo || v > hi)
        throw std::runtime_error(std::string("family JSON: field '") + field + "' out of range [" +
                                 std::to_string(lo) + "," + std::to_string(hi) + "]");
    return static_cast<int>(v);
}

SetFamily family_from_json(const json& j) {
    if (!j.is_object()) throw std::runtime_error("family JSON: top level must be an object");
    int n = get_int(j, "n", 1, kMaxGround);
    if (!j.contains("sets") || !j["sets"].is_array())
        throw std::runtime_error("family JSON: missing array field 'sets'");
    std::vector<mask_t> masks;
    std::size_t si = 0;
    for (const auto& s : j["sets"]) {
        if (!s.is_array())
            throw std::runtime_error("family JSON: sets[" + std::to_string(si) + "] is not an array");
        mask_t m = 0;
        std::size_t ei = 0;
        for (const auto& e : s) {
            if (!e.is_number_integer())
                throw std::runtime_error("family JSON: sets[" + std::to_string(si) + "][" +
                                         std::to_string(ei) + "] is not an integer");
            long long v = e.get<long long>();
            if (v < 1 || v > n)
                throw std::runtime_error("family JSON: sets[" + std::to_string(si) + "][" +
                                         std::to_string(ei) + "] = " + std::to_string(v) +
                                         " out of range 1.." + std::to_string(n));
            mask_t bit = mask_t{1} << (v - 1);
            if (m & bit)
                throw std::runtime_error("family JSON: sets[" + std::to_string(si) +
                                         "] repeats element " + std::to_string(v));
            m |= bit;
            ++ei;
        }
        masks.push_back(m);
        ++si;
    }
    std::vector<mask_t> check = masks;
    std::sort(check.begin(), check.end());
    if (std::adjacent_find(check.begin(), check.end()) != check.end())
        throw std::runtime_error("family JSON: duplicate set");
    return make_family(n, std::move(masks));
}

SetFamily parse_family(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("family JSON: ") + e.what());
    }
    return family_from_json(j);
}

json family_to_json(const SetFamily& F) {
    json sets = json::array();
    for (mask_t m : F.sets) sets.push_back(elements_of(m));
    return json{{"n", F.n}, {"sets", sets}};
}

Poset poset_from_json(const json& j) {
    if (!j.is_object()) throw std::runtime_error("poset JSON: top level must be an object");
    if (!j.contains("size") || !j["size"].is_number_integer())
        throw std::runtime_error("poset JSON: missing integer field 'size'");
    int size = j["size"].get<int>();
    if (!j.contains("lt") || !j["lt"].is_array())
        throw std::runtime_error("poset JSON: missing array field 'lt'");
    std::vector<std::pair<int, int>> rel;
    for (const auto& p : j["lt"]) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
            throw std::runtime_error("poset JSON: 'lt' entries must be [a,b] integer pairs");
        rel.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    return custom_poset(size, rel);
}

json poset_to_json(const Poset& P) {
    json lt = json::array();
    for (int a = 0; a < P.size; ++a)
        for (int b = 0; b < P.size; ++b)
            if (P.less(a, b)) lt.push_back(json::array({a, b}));
    return json{{"size", P.size}, {"lt", lt}};
}

json checkpoint_to_json(const CheckpointRecord& r) {
    return json{{"rank_start", r.rank_start},
                {"rank_end", r.rank_end},
                {"best_objective", r.best_objective.to_decimal()},
                {"best_family", family_to_json(r.best_family)}};
}

CheckpointRecord checkpoint_from_json(const json& j) {
    CheckpointRecord r;
    r.rank_start = j.at("rank_start").get<std::uint64_t>();
    r.rank_end = j.at("rank_end").get<std::uint64_t>();
    r.best_objective = Natural::from_decimal(j.at("best_objective").get<std::string>());
    r.best_family = family_from_json(j.at("best_family"));
    return r;
}

std::vector<CheckpointRecord> load_checkpoints(const std::string& path) {
    std::vector<CheckpointRecord> out;
    std::ifstream in(path);
    if (!in) return out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(checkpoint_from_json(json::parse(line)));
    }
    return out;
}

void append_checkpoint(const std::string& path, const CheckpointRecord& r) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("checkpoint: cannot open '" + path + "' for append");
    out << checkpoint_to_json(r).dump() << "\n";
}

} // namespace posetlab
