#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace gcg {

using json = nlohmann::json;

// Malformed input: bad shapes, unknown ids, violated preconditions.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured bound (group order cap, cell budget) would be exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised by the development engine when saturation contradicts itself.
// Never expected on validated input.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Issue {
    std::string code;
    std::string message;
    json witness;
};

struct ValidationReport {
    std::vector<Issue> issues;
    std::vector<std::string> warnings;

    bool ok() const { return issues.empty(); }
    void add(std::string code, std::string message, json witness = json::object())
    {
        issues.push_back({std::move(code), std::move(message), std::move(witness)});
    }
    void merge(const ValidationReport& other)
    {
        issues.insert(issues.end(), other.issues.begin(), other.issues.end());
        warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
    }
    const Issue* find(const std::string& code) const
    {
        for (const auto& i : issues)
            if (i.code == code)
                return &i;
        return nullptr;
    }
    bool has(const std::string& code) const { return find(code) != nullptr; }
    json to_json() const;
};

// A machine-checkable verdict. `witness` is null when the verdict needs none.
struct Certificate {
    std::string name;
    bool verdict = false;
    json witness;
    json details = json::object();
    std::vector<std::string> notes;

    json to_json() const;
};

// 64-bit FNV-1a, used for input digests in reports.
std::uint64_t fnv1a(const std::string& bytes);

}  // namespace gcg
