#pragma once

#include "fnl/combinat.hpp"
#include "fnl/cyclo.hpp"

#include <json.hpp>

namespace fnl {

using Json = nlohmann::ordered_json;

inline std::string rat_str(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

inline Json cyclo_to_json(const CycloElem& e) {
    Json j;
    j["order"] = e.order();
    Json cs = Json::array();
    for (const Rat& c : e.coeffs())
        cs.push_back(rat_str(c));
    j["coeffs"] = std::move(cs);
    return j;
}

inline CycloElem cyclo_from_json(const Json& j) {
    int order = j.at("order").get<int>();
    if (order == 0)
        return CycloElem();
    const CycloField& f = CycloField::get(order);
    std::vector<Rat> cs;
    for (const auto& s : j.at("coeffs"))
        cs.push_back(rat_parse(s.get<std::string>()));
    return CycloElem(f, std::move(cs));
}

inline Json expvec_to_json(const ExpVec& v) {
    return Json::array({v[0], v[1], v[2], v[3]});
}

inline ExpVec expvec_from_json(const Json& j) {
    return ExpVec{{j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>(), j.at(3).get<int>()}};
}

inline Json spec_to_json(const PencilSpec& s) {
    return Json::array({s.d1, s.d2, s.s1, s.s2, s.m1, s.m2});
}

inline PencilSpec spec_from_json(int d, const Json& j) {
    return PencilSpec{d,
                      j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>(),
                      j.at(3).get<int>(), j.at(4).get<int>(), j.at(5).get<int>()};
}

} // namespace fnl
