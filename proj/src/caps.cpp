#include "hcover/caps.hpp"

#include <cstdlib>
#include <sstream>

#include "hcover/errors.hpp"

namespace hcover {

void ResourceCaps::apply_overrides(const std::string& spec) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw ValidationError("bad caps entry '" + item + "' (expected key=value)");
        }
        std::string key = item.substr(0, eq);
        std::string val = item.substr(eq + 1);
        std::uint64_t v = 0;
        try {
            v = std::stoull(val);
        } catch (const std::exception&) {
            throw ValidationError("bad caps value in '" + item + "'");
        }
        if (key == "pattern_vertices") pattern_vertices = static_cast<int>(v);
        else if (key == "copies") copies = v;
        else if (key == "disc_maps") disc_maps = v;
        else if (key == "gamma_vertices") gamma_vertices = static_cast<int>(v);
        else if (key == "b_vertices") b_vertices = static_cast<int>(v);
        else if (key == "oracle_copies") oracle_copies = v;
        else if (key == "oracle_nodes") oracle_nodes = v;
        else if (key == "decompose_n") decompose_n = static_cast<int>(v);
        else if (key == "decompose_steps") decompose_steps = v;
        else if (key == "simplex_pivots") simplex_pivots = v;
        else throw ValidationError("unknown caps key '" + key + "'");
    }
}

ResourceCaps ResourceCaps::from_env() {
    ResourceCaps caps;
    if (const char* spec = std::getenv("ARC_COVER_CAPS")) {
        caps.apply_overrides(spec);
    }
    return caps;
}

} // namespace hcover
