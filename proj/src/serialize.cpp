#include "cohsys/serialize.hpp"

#include <limits>

namespace cohsys {

namespace {

Json check_value_to_json(const CheckValue& v)
{
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, BigInt>)
                return to_json(x);
            else if constexpr (std::is_same_v<T, Rat>)
                return x.to_string();
            else
                return x;
        },
        v);
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

Json to_json(const BigInt& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

Json to_json(const CSType& t)
{
    return Json::array({t.n, t.d, t.k});
}

Json to_json(const ExceptionalTag& tag)
{
    Json j;
    j["kind"] = std::string(to_string(tag.kind));
    j["type"] = to_json(tag.type);
    if (tag.kind == ExceptionalTag::Kind::HyperellipticPencilPower)
        j["a"] = tag.a;
    return j;
}

std::string exceptional_label(const ExceptionalTag& tag)
{
    std::string s(to_string(tag.kind));
    if (tag.kind == ExceptionalTag::Kind::HyperellipticPencilPower)
        s += ":a=" + std::to_string(tag.a);
    return s;
}

Json verdict_to_json(const Verdict& v)
{
    Json j;
    j["genus"] = v.curve.genus();
    j["hyperelliptic"] = v.curve.hyperelliptic();
    j["type"] = to_json(v.type);
    j["u_nonempty"] = v.u_nonempty;
    j["us_nonempty"] = v.us_nonempty;
    j["b_nonempty"] = v.b_nonempty;
    j["g_alpha_nonempty"] = v.g_alpha_nonempty;
    j["dim"] = v.dim ? to_json(*v.dim) : Json(nullptr);
    j["beta"] = to_json(v.beta);
    j["irreducible"] = v.irreducible ? Json(*v.irreducible) : Json(nullptr);
    j["smooth_GL"] = std::string(to_string(v.smooth_GL));
    j["generic_shape"] = std::string(to_string(v.generic_shape));
    j["exceptional"] = v.exceptional ? to_json(*v.exceptional) : Json(nullptr);
    return j;
}

Json verdict_to_scan_record(const Verdict& v)
{
    Json j;
    j["g"] = v.curve.genus();
    j["hyp"] = v.curve.hyperelliptic();
    j["n"] = v.type.n;
    j["d"] = v.type.d;
    j["k"] = v.type.k;
    j["beta"] = to_json(v.beta);
    j["u"] = v.u_nonempty;
    j["us"] = v.us_nonempty;
    j["b"] = v.b_nonempty;
    j["g_alpha"] = v.g_alpha_nonempty;
    j["dim"] = v.dim ? to_json(*v.dim) : Json(nullptr);
    j["irreducible"] = v.irreducible ? Json(*v.irreducible) : Json(nullptr);
    j["smooth_GL"] = std::string(to_string(v.smooth_GL));
    j["shape"] = std::string(to_string(v.generic_shape));
    j["exceptional"] = v.exceptional ? Json(exceptional_label(*v.exceptional)) : Json(nullptr);
    return j;
}

const std::vector<std::string>& scan_csv_columns()
{
    static const std::vector<std::string> cols{"g",  "hyp", "n",       "d",   "k",
                                               "beta", "u", "us",      "b",   "g_alpha",
                                               "dim", "irreducible", "smooth_GL", "shape",
                                               "exceptional"};
    return cols;
}

std::string verdict_to_csv_row(const Verdict& v)
{
    std::string row;
    auto field = [&row](const std::string& s) {
        if (!row.empty())
            row += ',';
        row += s;
    };
    field(std::to_string(v.curve.genus()));
    field(csv_bool(v.curve.hyperelliptic()));
    field(std::to_string(v.type.n));
    field(std::to_string(v.type.d));
    field(std::to_string(v.type.k));
    field(v.beta.str());
    field(csv_bool(v.u_nonempty));
    field(csv_bool(v.us_nonempty));
    field(csv_bool(v.b_nonempty));
    field(csv_bool(v.g_alpha_nonempty));
    field(v.dim ? v.dim->str() : "");
    field(v.irreducible ? csv_bool(*v.irreducible) : "");
    field(std::string(to_string(v.smooth_GL)));
    field(std::string(to_string(v.generic_shape)));
    field(v.exceptional ? exceptional_label(*v.exceptional) : "");
    return row;
}

Json wallset_to_json(const WallSet& ws)
{
    Json j;
    j["type"] = to_json(ws.type);
    Json walls = Json::array();
    for (const auto& w : ws.walls)
        walls.push_back(w.to_string());
    j["walls"] = std::move(walls);
    j["sup"] = ws.admissible_sup ? Json(ws.admissible_sup->to_string()) : Json(nullptr);
    Json wit = Json::object();
    for (const auto& [w, subs] : ws.witnesses) {
        Json list = Json::array();
        for (const auto& s : subs)
            list.push_back(to_json(s));
        wit[w.to_string()] = std::move(list);
    }
    j["witnesses"] = std::move(wit);
    return j;
}

Json certificate_to_json(const Certificate& c)
{
    Json j;
    j["name"] = std::string(to_string(c.name));
    Json params = Json::object();
    for (const auto& [k, v] : c.params)
        params[k] = v;
    j["params"] = std::move(params);
    j["target"] = c.target ? to_json(*c.target) : Json(nullptr);
    Json subs = Json::array();
    for (const auto& s : c.subtypes)
        subs.push_back(to_json(s));
    j["subtypes"] = std::move(subs);
    j["wall"] = c.wall ? Json(c.wall->to_string()) : Json(nullptr);
    Json checks = Json::array();
    for (const auto& ch : c.checks) {
        Json cj;
        cj["label"] = ch.label;
        cj["lhs"] = check_value_to_json(ch.lhs);
        cj["rel"] = std::string(to_string(ch.rel));
        cj["rhs"] = check_value_to_json(ch.rhs);
        cj["ok"] = ch.ok;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["passed"] = c.passed;
    return j;
}

}  // namespace cohsys
