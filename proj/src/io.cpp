#include "boltcheb/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "boltcheb/errors.hpp"

namespace boltcheb {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open for reading");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    if (!j.is_object()) throw InputError(path + ": top-level value must be an object");
    return j;
}

void write_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError(path + ": cannot open for writing");
    out << j.dump(2) << '\n';
    if (!out) throw InputError(path + ": write failed");
}

std::vector<long long> integer_array(const json& j, const std::string& path, const char* key) {
    if (!j.contains(key)) throw InputError(path + ": missing \"" + key + "\"");
    const json& arr = j.at(key);
    if (!arr.is_array()) throw InputError(path + ": \"" + key + "\" must be an array");
    std::vector<long long> out;
    out.reserve(arr.size());
    for (const json& v : arr) {
        if (!v.is_number_integer() && !v.is_number_unsigned()) {
            throw InputError(path + ": \"" + key + "\" must hold integers");
        }
        out.push_back(v.get<long long>());
    }
    return out;
}

std::vector<double> number_array(const json& arr, const std::string& path, const char* key) {
    if (!arr.is_array()) throw InputError(path + ": \"" + key + "\" must be an array");
    std::vector<double> out;
    out.reserve(arr.size());
    for (const json& v : arr) {
        if (!v.is_number()) throw InputError(path + ": \"" + key + "\" must hold numbers");
        const double x = v.get<double>();
        if (!std::isfinite(x)) throw InputError(path + ": \"" + key + "\" must be finite");
        out.push_back(x);
    }
    return out;
}

}  // namespace

SpaceFile load_space_file(const std::string& path) {
    const json j = parse_file(path);
    const auto s = integer_array(j, path, "s");
    const auto p = integer_array(j, path, "p");
    if (s.empty() || s.size() != p.size()) {
        throw InputError(path + ": \"s\" and \"p\" must be nonempty arrays of equal length");
    }
    SpaceFile out;
    out.space = build_explicit(s, p);

    if (j.contains("f")) {
        SampledFunction f{number_array(j.at("f"), path, "f")};
        if (f.n() != out.space.n()) {
            throw InputError(path + ": \"f\" length does not match the labelings");
        }
        out.f = std::move(f);
    }
    if (j.contains("coords")) {
        const json& arr = j.at("coords");
        if (!arr.is_array() || arr.size() != s.size()) {
            throw InputError(path + ": \"coords\" must be an array with one entry per point");
        }
        std::vector<std::vector<double>> coords;
        coords.reserve(arr.size());
        for (const json& row : arr) {
            coords.push_back(number_array(row, path, "coords"));
            if (coords.back().empty() || coords.back().size() != coords.front().size()) {
                throw InputError(path + ": \"coords\" entries must share a dimension >= 1");
            }
        }
        out.space.coords = std::move(coords);
    }
    return out;
}

void save_space_file(const std::string& path, const FiniteQuotientSpace& space,
                     const std::optional<SampledFunction>& f) {
    json j;
    j["s"] = space.s_class;
    j["p"] = space.p_class;
    if (f) j["f"] = f->values;
    if (space.coords) j["coords"] = *space.coords;
    write_file(path, j);
}

Bolt load_bolt_file(const std::string& path, const FiniteQuotientSpace& space) {
    const json j = parse_file(path);
    const auto raw = integer_array(j, path, "points");
    if (!j.contains("closed") || !j.at("closed").is_boolean()) {
        throw InputError(path + ": missing boolean \"closed\"");
    }
    std::vector<int> pts;
    pts.reserve(raw.size());
    for (long long v : raw) pts.push_back(static_cast<int>(v));
    return validate_bolt(space, pts, j.at("closed").get<bool>());
}

void save_bolt_file(const std::string& path, const Bolt& bolt) {
    json j;
    j["points"] = bolt.points;
    j["closed"] = bolt.closed;
    write_file(path, j);
}

SumElement load_sum_file(const std::string& path, const FiniteQuotientSpace& space) {
    const json j = parse_file(path);
    if (!j.contains("g") || !j.contains("h")) {
        throw InputError(path + ": needs \"g\" and \"h\" arrays");
    }
    SumElement u;
    u.g = number_array(j.at("g"), path, "g");
    u.h = number_array(j.at("h"), path, "h");
    if (static_cast<int>(u.g.size()) != space.n_s || static_cast<int>(u.h.size()) != space.n_p) {
        throw InputError(path + ": \"g\"/\"h\" lengths do not match the class counts");
    }
    return u;
}

void save_sum_file(const std::string& path, const SumElement& u) {
    json j;
    j["g"] = u.g;
    j["h"] = u.h;
    write_file(path, j);
}

}  // namespace boltcheb
