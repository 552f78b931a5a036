#pragma once

#include "fnl/jsonio.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fnl {

/// One item of the nested-list data layout: the spec parameters, the four
/// codimensions, and an optional list of (r1, r2) pairs. The pair list is
/// omitted entirely for items that carry none.
struct LegacyItem {
    PencilSpec spec;
    std::array<int, 4> a{0, 0, 0, 0};
    std::optional<std::vector<std::pair<int, int>>> pairs;

    bool operator==(const LegacyItem&) const = default;
};

std::string legacy_write(const std::vector<LegacyItem>& items);
std::vector<LegacyItem> legacy_parse(const std::string& text, int d);

Json legacy_to_json(int d, const std::vector<LegacyItem>& items);
std::pair<int, std::vector<LegacyItem>> legacy_from_json(const Json& j);

std::string csv_write(const std::vector<LegacyItem>& items);

} // namespace fnl
