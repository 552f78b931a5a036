#include "fnl/report.hpp"

#include <sstream>
#include <stdexcept>

namespace fnl {

std::string legacy_write(const std::vector<LegacyItem>& items) {
    std::ostringstream out;
    for (size_t i = 0; i < items.size(); ++i) {
        const LegacyItem& it = items[i];
        out << " [" << (i + 1) << "]:\n";
        out << "   [1]:\n      " << it.spec.d1 << "," << it.spec.d2 << "\n";
        out << "   [2]:\n      " << it.spec.s1 << "," << it.spec.s2 << "\n";
        out << "   [3]:\n      " << it.spec.m1 << "," << it.spec.m2 << "\n";
        out << "   [4]:\n      " << it.a[0] << "," << it.a[1] << "," << it.a[2] << "," << it.a[3]
            << "\n";
        if (it.pairs) {
            out << "   [5]:\n";
            for (size_t k = 0; k < it.pairs->size(); ++k)
                out << "      [" << (k + 1) << "]:\n         " << (*it.pairs)[k].first << ","
                    << (*it.pairs)[k].second << "\n";
        }
    }
    return out.str();
}

namespace {

std::vector<int> parse_ints(const std::string& line) {
    std::vector<int> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(std::stoi(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!cur.empty())
        out.push_back(std::stoi(cur));
    return out;
}

size_t indent_of(const std::string& line) {
    size_t i = 0;
    while (i < line.size() && line[i] == ' ')
        ++i;
    return i;
}

bool is_label(const std::string& line) {
    size_t i = indent_of(line);
    return i < line.size() && line[i] == '[';
}

} // namespace

std::vector<LegacyItem> legacy_parse(const std::string& text, int d) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line))
            if (line.find_first_not_of(' ') != std::string::npos)
                lines.push_back(line);
    }
    std::vector<LegacyItem> items;
    size_t pos = 0;
    while (pos < lines.size()) {
        if (!(is_label(lines[pos]) && indent_of(lines[pos]) == 1))
            throw std::invalid_argument("legacy_parse: expected top-level item label");
        ++pos;
        LegacyItem item;
        item.spec.d = d;
        while (pos < lines.size() && indent_of(lines[pos]) == 3 && is_label(lines[pos])) {
            std::string label = lines[pos];
            size_t lb = label.find('['), rb = label.find(']');
            int field = std::stoi(label.substr(lb + 1, rb - lb - 1));
            ++pos;
            if (field >= 1 && field <= 4) {
                if (pos >= lines.size())
                    throw std::invalid_argument("legacy_parse: missing value line");
                std::vector<int> v = parse_ints(lines[pos]);
                ++pos;
                switch (field) {
                case 1:
                    item.spec.d1 = v.at(0);
                    item.spec.d2 = v.at(1);
                    break;
                case 2:
                    item.spec.s1 = v.at(0);
                    item.spec.s2 = v.at(1);
                    break;
                case 3:
                    item.spec.m1 = v.at(0);
                    item.spec.m2 = v.at(1);
                    break;
                case 4:
                    item.a = {v.at(0), v.at(1), v.at(2), v.at(3)};
                    break;
                }
            } else if (field == 5) {
                item.pairs.emplace();
                while (pos + 1 < lines.size() && indent_of(lines[pos]) == 6 &&
                       is_label(lines[pos])) {
                    std::vector<int> v = parse_ints(lines[pos + 1]);
                    item.pairs->emplace_back(v.at(0), v.at(1));
                    pos += 2;
                }
            } else {
                throw std::invalid_argument("legacy_parse: unknown field label");
            }
        }
        items.push_back(std::move(item));
    }
    return items;
}

Json legacy_to_json(int d, const std::vector<LegacyItem>& items) {
    Json j;
    j["format"] = "fermatnl/legacy-v1";
    j["d"] = d;
    Json arr = Json::array();
    for (const LegacyItem& it : items) {
        Json o;
        o["spec"] = spec_to_json(it.spec);
        o["a"] = Json::array({it.a[0], it.a[1], it.a[2], it.a[3]});
        if (it.pairs) {
            Json ps = Json::array();
            for (auto [r1, r2] : *it.pairs)
                ps.push_back(Json::array({r1, r2}));
            o["pairs"] = std::move(ps);
        }
        arr.push_back(std::move(o));
    }
    j["items"] = std::move(arr);
    return j;
}

std::pair<int, std::vector<LegacyItem>> legacy_from_json(const Json& j) {
    int d = j.at("d").get<int>();
    std::vector<LegacyItem> items;
    for (const auto& o : j.at("items")) {
        LegacyItem it;
        it.spec = spec_from_json(d, o.at("spec"));
        const auto& a = o.at("a");
        it.a = {a.at(0).get<int>(), a.at(1).get<int>(), a.at(2).get<int>(), a.at(3).get<int>()};
        if (o.contains("pairs")) {
            it.pairs.emplace();
            for (const auto& p : o.at("pairs"))
                it.pairs->emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
        }
        items.push_back(std::move(it));
    }
    return {d, items};
}

std::string csv_write(const std::vector<LegacyItem>& items) {
    std::ostringstream out;
    out << "d1,d2,s1,s2,m1,m2,a1,a2,a3,a4,pairs\n";
    for (const LegacyItem& it : items) {
        out << it.spec.d1 << "," << it.spec.d2 << "," << it.spec.s1 << "," << it.spec.s2 << ","
            << it.spec.m1 << "," << it.spec.m2 << "," << it.a[0] << "," << it.a[1] << ","
            << it.a[2] << "," << it.a[3] << ",";
        if (it.pairs) {
            std::string s;
            for (auto [r1, r2] : *it.pairs)
                s += (s.empty() ? "" : ";") + std::to_string(r1) + ":" + std::to_string(r2);
            out << s;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace fnl
