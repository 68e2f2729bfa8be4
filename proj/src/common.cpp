#include "gcg/common.hpp"

namespace gcg {

json ValidationReport::to_json() const
{
    json j;
    j["ok"] = ok();
    j["issues"] = json::array();
    for (const auto& i : issues)
        j["issues"].push_back({{"code", i.code}, {"message", i.message}, {"witness", i.witness}});
    j["warnings"] = warnings;
    return j;
}

json Certificate::to_json() const
{
    json j;
    j["name"] = name;
    j["verdict"] = verdict;
    j["witness"] = witness;
    j["details"] = details;
    if (!notes.empty())
        j["notes"] = notes;
    return j;
}

std::uint64_t fnv1a(const std::string& bytes)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace gcg
