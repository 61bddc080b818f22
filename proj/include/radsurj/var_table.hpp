#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radsurj/error.hpp"

namespace radsurj {

enum class VarRole { parameter, radical, coordinate, inverse_marker, homogenizer, auxiliary };

inline const char* to_string(VarRole role)
{
    switch (role) {
    case VarRole::parameter: return "parameter";
    case VarRole::radical: return "radical";
    case VarRole::coordinate: return "coordinate";
    case VarRole::inverse_marker: return "inverse_marker";
    case VarRole::homogenizer: return "homogenizer";
    case VarRole::auxiliary: return "auxiliary";
    }
    return "?";
}

struct VarEntry {
    std::string name;
    VarRole role;

    friend bool operator==(const VarEntry&, const VarEntry&) = default;
};

/// Ordered variable names shared by all polynomials of one problem.
///
/// The parameter (if present) comes first and the radicals follow it in
/// tower order; coordinates and markers come after.
class VarTable {
public:
    explicit VarTable(std::vector<VarEntry> entries) : entries_(std::move(entries))
    {
        bool seen_other = false;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const auto& e = entries_[i];
            if (e.name.empty())
                throw InputError("empty variable name");
            for (std::size_t j = 0; j < i; ++j)
                if (entries_[j].name == e.name)
                    throw InputError("duplicate variable name '" + e.name + "'");
            switch (e.role) {
            case VarRole::parameter:
                if (i != 0)
                    throw InputError("the parameter must be the first variable");
                break;
            case VarRole::radical:
                if (seen_other)
                    throw InputError("radical '" + e.name + "' declared after non-tower variables");
                break;
            default:
                seen_other = true;
                break;
            }
        }
    }

    std::size_t size() const noexcept { return entries_.size(); }
    const VarEntry& operator[](std::size_t i) const { return entries_.at(i); }
    const std::vector<VarEntry>& entries() const noexcept { return entries_; }

    std::optional<std::size_t> find(std::string_view name) const
    {
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i].name == name)
                return i;
        return std::nullopt;
    }

    std::size_t index_of(std::string_view name) const
    {
        if (auto i = find(name))
            return *i;
        throw DomainError("unknown variable '" + std::string(name) + "'");
    }

    std::vector<std::size_t> with_role(VarRole role) const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i].role == role)
                out.push_back(i);
        return out;
    }

    friend bool operator==(const VarTable& a, const VarTable& b) { return a.entries_ == b.entries_; }

private:
    std::vector<VarEntry> entries_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline VarTablePtr make_table(std::vector<VarEntry> entries)
{
    return std::make_shared<const VarTable>(std::move(entries));
}

/// Table with parameter `t`, the given radicals and trailing auxiliaries.
inline VarTablePtr make_tower_table(const std::vector<std::string>& radicals,
                                    const std::vector<std::string>& auxiliaries = {})
{
    std::vector<VarEntry> entries{{"t", VarRole::parameter}};
    for (const auto& r : radicals)
        entries.push_back({r, VarRole::radical});
    for (const auto& a : auxiliaries)
        entries.push_back({a, VarRole::auxiliary});
    return make_table(std::move(entries));
}

} // namespace radsurj
