#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "glin/action.hpp"
#include "glin/groupoid.hpp"
#include "glin/span.hpp"

namespace glin {

using Json = nlohmann::ordered_json;

struct DocumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpanEntry {
    std::string left, right;  // groupoid names
    PSpan span;
};

struct ActionEntry {
    std::string target;  // groupoid name
    GroupAction action;
};

/// A parsed document: named groupoids, spans and actions, all validated.
struct DocumentModel {
    std::map<std::string, ParityGroupoid> groupoids;
    std::map<std::string, SpanEntry> spans;
    std::map<std::string, ActionEntry> actions;
};

namespace detail {

inline Sign parse_sign(const Json& j, const std::string& where) {
    if (!j.is_number_integer() || (j.get<int>() != 1 && j.get<int>() != -1))
        throw DocumentError(where + ": sign must be +1 or -1");
    return Sign(j.get<int>());
}

inline FiniteGroup parse_group(const Json& j, const std::string& where, std::vector<Sign>* parity_hom) {
    FiniteGroup g;
    if (!j.contains("elements") || !j["elements"].is_array())
        throw DocumentError(where + ": group needs an 'elements' array");
    for (const auto& e : j["elements"]) g.elements.push_back(e.get<std::string>());
    int n = g.order();
    if (!j.contains("table") || static_cast<int>(j["table"].size()) != n)
        throw DocumentError(where + ": group 'table' must have one row per element");
    g.mult.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(j["table"][a].size()) != n)
            throw DocumentError(where + ": group table row has wrong length");
        for (int b = 0; b < n; ++b) {
            int v = g.find(j["table"][a][b].get<std::string>());
            if (v < 0) throw DocumentError(where + ": unknown element in group table");
            g.mult[a][b] = v;
        }
    }
    if (j.contains("identity")) {
        g.identity = g.find(j["identity"].get<std::string>());
        if (g.identity < 0) throw DocumentError(where + ": unknown identity element");
    } else {
        for (int e = 0; e < n && g.identity < 0; ++e) {
            bool neutral = true;
            for (int a = 0; a < n; ++a) neutral = neutral && g.mult[e][a] == a && g.mult[a][e] == a;
            if (neutral) g.identity = e;
        }
        if (g.identity < 0) throw DocumentError(where + ": group has no identity element");
    }
    g.inverse.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mult[a][b] == g.identity && g.mult[b][a] == g.identity) g.inverse[a] = b;
    ValidationReport rep = validate_group(g);
    if (!rep.ok()) throw DocumentError(where + ": " + rep.errors.front());
    if (parity_hom) {
        parity_hom->assign(n, Sign::plus());
        if (j.contains("parity"))
            for (const auto& [el, s] : j["parity"].items()) {
                int i = g.find(el);
                if (i < 0) throw DocumentError(where + ": parity for unknown element '" + el + "'");
                (*parity_hom)[i] = parse_sign(s, where);
            }
    }
    return g;
}

/// BG: one object, the group elements as automorphisms, h∘g = h·g.
inline ParityGroupoid delooping(const FiniteGroup& g, const std::vector<Sign>& parity_hom) {
    ParityGroupoid out;
    int o = out.g.add_object("*");
    for (int a = 0; a < g.order(); ++a) {
        out.g.add_morphism(g.elements[a], o, o);
        out.parity.push_back(parity_hom[a]);
    }
    for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) out.g.set_compose(a, b, g.mult[b][a]);
        out.g.set_inverse(a, g.inverse[a]);
    }
    out.g.set_identity(o, g.identity);
    out.g.finalize();
    return out;
}

inline ParityGroupoid parse_groupoid(const Json& j, const std::string& where) {
    if (j.contains("discrete")) {
        std::vector<std::string> ids;
        for (const auto& e : j["discrete"]) ids.push_back(e.get<std::string>());
        return discrete_groupoid(ids);
    }
    if (j.contains("group")) {
        std::vector<Sign> hom;
        FiniteGroup g = parse_group(j["group"], where, &hom);
        return delooping(g, hom);
    }
    ParityGroupoid out;
    if (!j.contains("objects") || !j.contains("morphisms"))
        throw DocumentError(where + ": groupoid needs 'objects' and 'morphisms' (or a shorthand)");
    for (const auto& o : j["objects"]) out.g.add_object(o.get<std::string>());
    for (const auto& m : j["morphisms"]) {
        // [id, src, tgt] or [id, src, tgt, parity]
        if (!m.is_array() || m.size() < 3 || m.size() > 4)
            throw DocumentError(where + ": morphism must be [id, src, tgt] or [id, src, tgt, parity]");
        int s = out.g.find_object(m[1].get<std::string>());
        int t = out.g.find_object(m[2].get<std::string>());
        // find_object needs finalize; resolve by linear scan instead
        if (s < 0 || t < 0) {
            for (int o = 0; o < out.g.num_objects(); ++o) {
                if (out.g.object_id(o) == m[1].get<std::string>()) s = o;
                if (out.g.object_id(o) == m[2].get<std::string>()) t = o;
            }
        }
        if (s < 0 || t < 0) throw DocumentError(where + ": morphism endpoint names an unknown object");
        out.g.add_morphism(m[0].get<std::string>(), s, t);
        out.parity.push_back(m.size() == 4 ? parse_sign(m[3], where) : Sign::plus());
    }
    auto find_mor = [&out, &where](const std::string& id) {
        for (int i = 0; i < out.g.num_morphisms(); ++i)
            if (out.g.morphism(i).id == id) return i;
        throw DocumentError(where + ": unknown morphism '" + id + "'");
    };
    if (j.contains("compose"))
        for (const auto& t : j["compose"]) {
            if (!t.is_array() || t.size() != 3)
                throw DocumentError(where + ": compose entries must be triples [f, g, h] meaning g∘f = h");
            out.g.set_compose(find_mor(t[0].get<std::string>()), find_mor(t[1].get<std::string>()),
                              find_mor(t[2].get<std::string>()));
        }
    out.g.finalize();
    return out;
}

inline void semantic_check(const ValidationReport& rep, const std::string& where) {
    if (!rep.ok()) throw DocumentError(where + ": " + rep.errors.front());
}

inline Functor parse_functor(const Json& j, const FiniteGroupoid& apex, const FiniteGroupoid& foot,
                             const std::string& where) {
    Functor f;
    f.on_obj.assign(apex.num_objects(), -1);
    f.on_mor.assign(apex.num_morphisms(), -1);
    if (!j.contains("objects") || !j.contains("morphisms"))
        throw DocumentError(where + ": functor needs 'objects' and 'morphisms' maps");
    for (const auto& [from, to] : j["objects"].items()) {
        int a = apex.find_object(from);
        int b = foot.find_object(to.get<std::string>());
        if (a < 0) throw DocumentError(where + ": unknown apex object '" + from + "'");
        if (b < 0) throw DocumentError(where + ": unknown foot object '" + to.get<std::string>() + "'");
        f.on_obj[a] = b;
    }
    for (const auto& [from, to] : j["morphisms"].items()) {
        int a = apex.find_morphism(from);
        int b = foot.find_morphism(to.get<std::string>());
        if (a < 0) throw DocumentError(where + ": unknown apex morphism '" + from + "'");
        if (b < 0) throw DocumentError(where + ": unknown foot morphism '" + to.get<std::string>() + "'");
        f.on_mor[a] = b;
    }
    // identities may be omitted; fill them in functorially
    for (int o = 0; o < apex.num_objects(); ++o)
        if (f.on_obj[o] >= 0 && f.on_mor[apex.identity(o)] < 0)
            f.on_mor[apex.identity(o)] = foot.identity(f.on_obj[o]);
    for (int v : f.on_obj)
        if (v < 0) throw DocumentError(where + ": functor object map is not total");
    for (int v : f.on_mor)
        if (v < 0) throw DocumentError(where + ": functor morphism map is not total");
    return f;
}

}  // namespace detail

inline DocumentModel parse_document_json(const Json& doc) {
    DocumentModel model;
    if (!doc.is_object()) throw DocumentError("document root must be an object");

    if (doc.contains("groupoids"))
        for (const auto& [name, j] : doc["groupoids"].items()) {
            ParityGroupoid pg = detail::parse_groupoid(j, "groupoid '" + name + "'");
            detail::semantic_check(validate_groupoid(pg), "groupoid '" + name + "'");
            model.groupoids.emplace(name, std::move(pg));
        }

    if (doc.contains("spans"))
        for (const auto& [name, j] : doc["spans"].items()) {
            std::string where = "span '" + name + "'";
            SpanEntry entry;
            if (!j.contains("left") || !j.contains("right"))
                throw DocumentError(where + ": needs 'left' and 'right' foot names");
            entry.left = j["left"].get<std::string>();
            entry.right = j["right"].get<std::string>();
            auto lf = model.groupoids.find(entry.left);
            auto rf = model.groupoids.find(entry.right);
            if (lf == model.groupoids.end()) throw DocumentError(where + ": unknown groupoid '" + entry.left + "'");
            if (rf == model.groupoids.end()) throw DocumentError(where + ": unknown groupoid '" + entry.right + "'");
            entry.span.left_foot = lf->second;
            entry.span.right_foot = rf->second;
            if (!j.contains("apex")) throw DocumentError(where + ": needs an 'apex'");
            if (j["apex"].is_string()) {
                auto ap = model.groupoids.find(j["apex"].get<std::string>());
                if (ap == model.groupoids.end())
                    throw DocumentError(where + ": unknown apex groupoid '" + j["apex"].get<std::string>() + "'");
                entry.span.apex = ap->second.g;
            } else {
                entry.span.apex = detail::parse_groupoid(j["apex"], where + " apex").g;
            }
            entry.span.left_fun = detail::parse_functor(j["left_map"], entry.span.apex, entry.span.left_foot.g, where);
            entry.span.right_fun = detail::parse_functor(j["right_map"], entry.span.apex, entry.span.right_foot.g, where);
            entry.span.rho.assign(entry.span.apex.num_objects(), Sign::plus());
            auto read_signs = [&](const Json& map, std::vector<Sign>& into, bool multiply) {
                for (const auto& [obj, s] : map.items()) {
                    int o = entry.span.apex.find_object(obj);
                    if (o < 0) throw DocumentError(where + ": sign for unknown apex object '" + obj + "'");
                    Sign v = detail::parse_sign(s, where);
                    into[o] = multiply ? into[o] * v : v;
                }
            };
            if (j.contains("rho")) {
                read_signs(j["rho"], entry.span.rho, false);
            } else {
                // fully-specified 2-cells normalize to ρ = (ε′)⁻¹ε (signs are
                // self-inverse, so this is the product)
                if (j.contains("epsilon")) read_signs(j["epsilon"], entry.span.rho, true);
                if (j.contains("epsilon_prime")) read_signs(j["epsilon_prime"], entry.span.rho, true);
            }
            detail::semantic_check(validate_span(entry.span), where);
            model.spans.emplace(name, std::move(entry));
        }

    if (doc.contains("actions"))
        for (const auto& [name, j] : doc["actions"].items()) {
            std::string where = "action '" + name + "'";
            ActionEntry entry;
            if (!j.contains("group") || !j.contains("target"))
                throw DocumentError(where + ": needs 'group' and 'target'");
            entry.action.group = detail::parse_group(j["group"], where, nullptr);
            entry.target = j["target"].get<std::string>();
            auto tg = model.groupoids.find(entry.target);
            if (tg == model.groupoids.end()) throw DocumentError(where + ": unknown groupoid '" + entry.target + "'");
            entry.action.target = tg->second;
            const FiniteGroupoid& x = entry.action.target.g;
            int n = entry.action.group.order();
            entry.action.on_objects.assign(n, std::vector<int>(x.num_objects()));
            entry.action.on_morphisms.assign(n, std::vector<int>(x.num_morphisms()));
            entry.action.theta.assign(n, std::vector<Sign>(x.num_objects(), Sign::plus()));
            for (int g = 0; g < n; ++g) {
                for (int o = 0; o < x.num_objects(); ++o) entry.action.on_objects[g][o] = o;
                for (int m = 0; m < x.num_morphisms(); ++m) entry.action.on_morphisms[g][m] = m;
            }
            auto elem = [&](const std::string& id) {
                int g = entry.action.group.find(id);
                if (g < 0) throw DocumentError(where + ": unknown group element '" + id + "'");
                return g;
            };
            if (j.contains("objects"))
                for (const auto& [gid, map] : j["objects"].items()) {
                    int g = elem(gid);
                    for (const auto& [from, to] : map.items()) {
                        int a = x.find_object(from), b = x.find_object(to.get<std::string>());
                        if (a < 0 || b < 0) throw DocumentError(where + ": unknown object in action map");
                        entry.action.on_objects[g][a] = b;
                    }
                }
            if (j.contains("morphisms"))
                for (const auto& [gid, map] : j["morphisms"].items()) {
                    int g = elem(gid);
                    for (const auto& [from, to] : map.items()) {
                        int a = x.find_morphism(from), b = x.find_morphism(to.get<std::string>());
                        if (a < 0 || b < 0) throw DocumentError(where + ": unknown morphism in action map");
                        entry.action.on_morphisms[g][a] = b;
                    }
                }
            if (j.contains("theta"))
                for (const auto& [gid, map] : j["theta"].items()) {
                    int g = elem(gid);
                    for (const auto& [obj, s] : map.items()) {
                        int o = x.find_object(obj);
                        if (o < 0) throw DocumentError(where + ": theta for unknown object '" + obj + "'");
                        entry.action.theta[g][o] = detail::parse_sign(s, where);
                    }
                }
            detail::semantic_check(validate_action(entry.action), where);
            model.actions.emplace(name, std::move(entry));
        }
    return model;
}

inline DocumentModel parse_document_string(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // recover line/column from the byte offset
        size_t line = 1, col = 1;
        for (size_t i = 0; i < text.size() && i + 1 < e.byte; ++i) {
            if (text[i] == '\n') { ++line; col = 1; }
            else ++col;
        }
        throw DocumentError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                            e.what());
    }
    return parse_document_json(doc);
}

inline DocumentModel parse_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document_string(ss.str());
}

inline Json serialize_groupoid(const ParityGroupoid& pg) {
    Json j;
    j["objects"] = Json::array();
    for (int o = 0; o < pg.g.num_objects(); ++o) j["objects"].push_back(pg.g.object_id(o));
    j["morphisms"] = Json::array();
    for (int m = 0; m < pg.g.num_morphisms(); ++m)
        j["morphisms"].push_back({pg.g.morphism(m).id, pg.g.object_id(pg.g.src(m)), pg.g.object_id(pg.g.tgt(m)),
                                  pg.par(m).value()});
    j["compose"] = Json::array();
    for (int f = 0; f < pg.g.num_morphisms(); ++f)
        for (int h : pg.g.out(pg.g.tgt(f)))
            j["compose"].push_back({pg.g.morphism(f).id, pg.g.morphism(h).id, pg.g.morphism(pg.g.compose(h, f)).id});
    return j;
}

inline Json serialize_span_entry(const SpanEntry& e) {
    Json j;
    j["left"] = e.left;
    j["right"] = e.right;
    ParityGroupoid apex_pg;
    apex_pg.g = e.span.apex;
    apex_pg.parity.assign(e.span.apex.num_morphisms(), Sign::plus());
    j["apex"] = serialize_groupoid(apex_pg);
    j["apex"].erase("morphisms");
    j["apex"]["morphisms"] = Json::array();
    for (int m = 0; m < e.span.apex.num_morphisms(); ++m)
        j["apex"]["morphisms"].push_back(
            {e.span.apex.morphism(m).id, e.span.apex.object_id(e.span.apex.src(m)), e.span.apex.object_id(e.span.apex.tgt(m))});
    auto ser_fun = [&e](const Functor& f, const FiniteGroupoid& foot) {
        Json out;
        out["objects"] = Json::object();
        out["morphisms"] = Json::object();
        for (int o = 0; o < e.span.apex.num_objects(); ++o)
            out["objects"][e.span.apex.object_id(o)] = foot.object_id(f.on_obj[o]);
        for (int m = 0; m < e.span.apex.num_morphisms(); ++m)
            out["morphisms"][e.span.apex.morphism(m).id] = foot.morphism(f.on_mor[m]).id;
        return out;
    };
    j["left_map"] = ser_fun(e.span.left_fun, e.span.left_foot.g);
    j["right_map"] = ser_fun(e.span.right_fun, e.span.right_foot.g);
    j["rho"] = Json::object();
    for (int o = 0; o < e.span.apex.num_objects(); ++o)
        j["rho"][e.span.apex.object_id(o)] = e.span.rho[o].value();
    return j;
}

inline Json serialize_document(const DocumentModel& model) {
    Json doc;
    doc["groupoids"] = Json::object();
    for (const auto& [name, pg] : model.groupoids) doc["groupoids"][name] = serialize_groupoid(pg);
    if (!model.spans.empty()) {
        doc["spans"] = Json::object();
        for (const auto& [name, e] : model.spans) doc["spans"][name] = serialize_span_entry(e);
    }
    if (!model.actions.empty()) {
        doc["actions"] = Json::object();
        for (const auto& [name, e] : model.actions) {
            Json j;
            const GroupAction& act = e.action;
            j["group"]["elements"] = act.group.elements;
            j["group"]["identity"] = act.group.elements[act.group.identity];
            j["group"]["table"] = Json::array();
            for (int a = 0; a < act.group.order(); ++a) {
                Json row = Json::array();
                for (int b = 0; b < act.group.order(); ++b) row.push_back(act.group.elements[act.group.mult[a][b]]);
                j["group"]["table"].push_back(row);
            }
            j["target"] = e.target;
            const FiniteGroupoid& x = act.target.g;
            for (int g = 0; g < act.group.order(); ++g) {
                const std::string& gid = act.group.elements[g];
                for (int o = 0; o < x.num_objects(); ++o) j["objects"][gid][x.object_id(o)] = x.object_id(act.on_objects[g][o]);
                for (int m = 0; m < x.num_morphisms(); ++m)
                    j["morphisms"][gid][x.morphism(m).id] = x.morphism(act.on_morphisms[g][m]).id;
                for (int o = 0; o < x.num_objects(); ++o) j["theta"][gid][x.object_id(o)] = act.theta[g][o].value();
            }
            doc["actions"][name] = j;
        }
    }
    return doc;
}

/// Wraps a bare span as a document (used by CLI commands that output spans).
inline Json serialize_span_as_document(const PSpan& sp) {
    DocumentModel model;
    model.groupoids.emplace("left", sp.left_foot);
    model.groupoids.emplace("right", sp.right_foot);
    SpanEntry e;
    e.left = "left";
    e.right = "right";
    e.span = sp;
    model.spans.emplace("result", std::move(e));
    return serialize_document(model);
}

}  // namespace glin
