#include "epg/grid_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace epg {

std::string rep_to_json(const EpgRepresentation& rep) {
    nlohmann::ordered_json j;
    j["grid"]["cols"] = rep.cols();
    j["grid"]["rows"] = rep.rows();
    j["paths"] = nlohmann::ordered_json::object();
    for (const auto& [id, path] : rep.paths) {
        nlohmann::ordered_json pts = nlohmann::ordered_json::array();
        for (const GridPoint& c : path.corners()) pts.push_back({c.x, c.y});
        j["paths"][std::to_string(id)] = std::move(pts);
    }
    return j.dump();
}

EpgRepresentation rep_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("paths") || !j["paths"].is_object())
        throw std::invalid_argument("bad json: missing paths object");
    EpgRepresentation rep;
    for (const auto& [key, val] : j["paths"].items()) {
        int id;
        try {
            size_t used = 0;
            id = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad json: path key '" + key + "' is not a vertex id");
        }
        if (!val.is_array()) throw std::invalid_argument("bad json: path " + key + " is not an array");
        std::vector<GridPoint> corners;
        for (const auto& pt : val) {
            if (!pt.is_array() || pt.size() != 2 || !pt[0].is_number_integer() ||
                !pt[1].is_number_integer())
                throw std::invalid_argument("bad json: path " + key + " has a malformed point");
            corners.push_back({pt[0].get<int>(), pt[1].get<int>()});
        }
        try {
            rep.paths.emplace(id, GridPath(std::move(corners)));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("bad json: path " + key + ": " + e.what());
        }
    }
    return rep;
}

}  // namespace epg
