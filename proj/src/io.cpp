#include "xmodkit/io.hpp"

#include "xmodkit/errors.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace xmk::io {

using nlohmann::json;

namespace {

const char* kKnownKinds[] = {"group", "hom",      "action", "xmod",
                             "whitehead", "groupoid", "cospan", "report"};

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (!j.is_object() || it == j.end())
        fail("ParseError", std::string("missing field '") + name + "'");
    return *it;
}

std::string str_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_string()) fail("ParseError", std::string("field '") + name + "' must be a string");
    return v.get<std::string>();
}

std::vector<int> int_array(const json& v, const char* name) {
    if (!v.is_array()) fail("ParseError", std::string("field '") + name + "' must be an array");
    std::vector<int> out;
    for (const auto& x : v) {
        if (!x.is_number_integer())
            fail("ParseError", std::string("field '") + name + "' must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

std::vector<std::vector<int>> int_matrix(const json& v, const char* name) {
    if (!v.is_array()) fail("ParseError", std::string("field '") + name + "' must be an array");
    std::vector<std::vector<int>> out;
    for (const auto& row : v) out.push_back(int_array(row, name));
    return out;
}

void check_version(const json& j) {
    std::string v = str_field(j, "version");
    if (v != "1") fail("VersionMismatch", "unsupported format version '" + v + "'");
}

json group_json(const FiniteGroup& g) {
    json j;
    j["kind"] = "group";
    j["version"] = "1";
    j["order"] = g.order();
    json table = json::array();
    for (int a = 0; a < g.order(); ++a) {
        json row = json::array();
        for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    return j;
}

GroupPtr group_from(const json& j) {
    if (str_field(j, "kind") != "group") fail("ParseError", "expected a group document");
    check_version(j);
    auto table = int_matrix(field(j, "table"), "table");
    if (field(j, "order").get<int>() != static_cast<int>(table.size()))
        fail("ParseError", "declared order does not match the table");
    return FiniteGroup::make(table);
}

std::string instance_tag(Instance i) {
    return i == Instance::Grp ? "grp" : i == Instance::Ab ? "ab" : "pset";
}

Instance instance_from_tag(const std::string& tag) {
    if (tag == "grp") return Instance::Grp;
    if (tag == "ab") return Instance::Ab;
    if (tag == "pset") return Instance::PSet;
    fail("ParseError", "unknown instance tag '" + tag + "'");
}

json pointed_object_json(const PointedObject& o) {
    if (o.instance == Instance::PSet) return json(o.size());
    return group_json(*o.grp);
}

PointedObject pointed_object_from(Instance ins, const json& j) {
    if (ins == Instance::PSet) {
        if (!j.is_number_integer()) fail("ParseError", "pointed-set objects are stored as sizes");
        return PointedObject::pset(j.get<int>());
    }
    auto g = group_from(j);
    return ins == Instance::Ab ? PointedObject::abelian(g) : PointedObject::group(g);
}

Document wrap(json j) {
    Document d;
    d.kind = j.at("kind").get<std::string>();
    d.version = j.at("version").get<std::string>();
    d.body = std::move(j);
    return d;
}

/// Replace every {"ref": "relative/path"} object by the body of the
/// referenced document, which must be a group.
void resolve_refs(json& j, const std::filesystem::path& base) {
    if (j.is_object()) {
        if (j.contains("ref")) {
            if (!j["ref"].is_string()) fail("ParseError", "'ref' must be a relative path string");
            Document sub = load((base / j["ref"].get<std::string>()).string());
            if (sub.kind != "group")
                fail("ParseError", "references may only point at group documents");
            j = sub.body;
            return;
        }
        for (auto& [key, value] : j.items()) {
            (void)key;
            resolve_refs(value, base);
        }
    } else if (j.is_array()) {
        for (auto& value : j) resolve_refs(value, base);
    }
}

} // namespace

bool operator==(const Document& a, const Document& b) {
    return a.kind == b.kind && a.version == b.version && a.body == b.body;
}

bool IoReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const IoCheck& c) { return c.pass; });
}

Document group_document(const GroupPtr& g) { return wrap(group_json(*g)); }

GroupPtr as_group(const Document& doc) { return group_from(doc.body); }

Document hom_document(const GroupHom& f) {
    json j;
    j["kind"] = "hom";
    j["version"] = "1";
    j["dom"] = group_json(*f.dom);
    j["cod"] = group_json(*f.cod);
    j["map"] = f.map;
    return wrap(std::move(j));
}

GroupHom as_hom(const Document& doc) {
    GroupHom f{group_from(field(doc.body, "dom")), group_from(field(doc.body, "cod")),
               int_array(field(doc.body, "map"), "map")};
    f.validate();
    return f;
}

Document action_document(const GroupAction& a) {
    json j;
    j["kind"] = "action";
    j["version"] = "1";
    j["B"] = group_json(*a.B);
    j["X"] = group_json(*a.X);
    j["act"] = a.act;
    return wrap(std::move(j));
}

GroupAction as_action(const Document& doc) {
    GroupAction a{group_from(field(doc.body, "B")), group_from(field(doc.body, "X")),
                  int_matrix(field(doc.body, "act"), "act")};
    a.validate();
    return a;
}

Document xmod_document(const CrossedModule& cm) {
    Document d = action_document(cm.act);
    d.kind = "xmod";
    d.body["kind"] = "xmod";
    d.body["h"] = cm.h.map;
    return d;
}

CrossedModule as_xmod(const Document& doc) {
    GroupAction a{group_from(field(doc.body, "B")), group_from(field(doc.body, "X")),
                  int_matrix(field(doc.body, "act"), "act")};
    a.validate();
    GroupHom h{a.X, a.B, int_array(field(doc.body, "h"), "h")};
    h.validate();
    auto rep = xmod_check(a, h);
    if (!rep.ok)
        fail("InvariantViolation", "crossed-module equation (" + rep.equation + ") fails");
    return CrossedModule{std::move(a), std::move(h)};
}

Document whitehead_document(const WhiteheadSequence& w) {
    json j;
    j["kind"] = "whitehead";
    j["version"] = "1";
    j["instance"] = instance_tag(base_instance(w.A.instance));
    j["X"] = pointed_object_json(functor_J(w.A));
    j["B"] = pointed_object_json(functor_I(w.A));
    if (w.A.instance == AInstance::GrpAct) j["act"] = w.A.act.act;
    j["h"] = w.u.f1.map;
    return wrap(std::move(j));
}

WhiteheadSequence as_whitehead(const Document& doc) {
    Instance ins = instance_from_tag(str_field(doc.body, "instance"));
    PointedObject X = pointed_object_from(ins, field(doc.body, "X"));
    PointedObject B = pointed_object_from(ins, field(doc.body, "B"));
    ActionObject a;
    if (ins == Instance::Grp) {
        GroupAction act{B.grp, X.grp, int_matrix(field(doc.body, "act"), "act")};
        act.validate();
        a = ActionObject::grp(std::move(act));
    } else {
        a = ActionObject::pair(ins == Instance::Ab ? AInstance::AbPairs : AInstance::PSetPairs, X,
                               B);
    }
    return make_whitehead(a, PointedMap{ins, functor_J(a), functor_I(a),
                                        int_array(field(doc.body, "h"), "h")});
}

Document groupoid_document(const GroupoidWitness& g) {
    json j;
    j["kind"] = "groupoid";
    j["version"] = "1";
    j["C0"] = group_json(*g.cat.C0);
    j["C1"] = group_json(*g.cat.C1);
    j["d"] = g.cat.d.map;
    j["c"] = g.cat.c.map;
    j["e"] = g.cat.e.map;
    j["m"] = g.cat.m.map; // over lexicographic composable pairs
    return wrap(std::move(j));
}

GroupoidWitness as_groupoid(const Document& doc) {
    GroupPtr c0 = group_from(field(doc.body, "C0"));
    GroupPtr c1 = group_from(field(doc.body, "C1"));
    auto cat = assemble_category(c0, c1, GroupHom{c1, c0, int_array(field(doc.body, "d"), "d")},
                                 GroupHom{c1, c0, int_array(field(doc.body, "c"), "c")},
                                 GroupHom{c0, c1, int_array(field(doc.body, "e"), "e")});
    auto m = int_array(field(doc.body, "m"), "m");
    if (m.size() != cat.C2.pairs.size())
        fail("ParseError", "composition table does not match the composable pairs");
    cat.m.map = std::move(m);
    auto rep = is_internal_category(cat);
    for (const auto& c : rep.checks)
        if (!c.pass) fail("InvariantViolation", "category axiom fails: " + c.name);
    auto gw = is_groupoid(cat);
    if (!gw) fail("InvariantViolation", "NotAGroupoid: some element has no inverse");
    return *gw;
}

Document cospan_document(const Cospan& c) {
    json j;
    j["kind"] = "cospan";
    j["version"] = "1";
    j["instance"] = instance_tag(c.k.instance);
    j["X"] = pointed_object_json(c.X);
    j["Y"] = pointed_object_json(c.Y);
    j["B"] = pointed_object_json(c.B);
    j["k"] = c.k.map;
    j["s"] = c.s.map;
    return wrap(std::move(j));
}

Cospan as_cospan(const Document& doc) {
    Instance ins = instance_from_tag(str_field(doc.body, "instance"));
    Cospan c;
    c.X = pointed_object_from(ins, field(doc.body, "X"));
    c.Y = pointed_object_from(ins, field(doc.body, "Y"));
    c.B = pointed_object_from(ins, field(doc.body, "B"));
    c.k = PointedMap{ins, c.X, c.Y, int_array(field(doc.body, "k"), "k")};
    c.s = PointedMap{ins, c.B, c.Y, int_array(field(doc.body, "s"), "s")};
    c.validate();
    return c;
}

Document report_document(const std::vector<IoCheck>& checks) {
    json j;
    j["kind"] = "report";
    j["version"] = "1";
    json rows = json::array();
    for (const auto& c : checks) {
        json row;
        row["name"] = c.name;
        row["status"] = c.pass ? "pass" : "fail";
        row["witness"] = c.detail;
        rows.push_back(std::move(row));
    }
    j["checks"] = std::move(rows);
    return wrap(std::move(j));
}

IoReport validate(const Document& doc) {
    IoReport rep{doc.kind, {}};
    auto run = [&](const char* name, auto&& body) {
        try {
            body();
            rep.checks.push_back(IoCheck{name, true, ""});
        } catch (const Error& e) {
            if (e.code() == "ParseError" || e.code() == "VersionMismatch") throw;
            rep.checks.push_back(IoCheck{name, false, e.what()});
        }
    };
    if (doc.kind == "group") {
        run("group axioms", [&] { as_group(doc); });
    } else if (doc.kind == "hom") {
        run("homomorphism", [&] { as_hom(doc); });
    } else if (doc.kind == "action") {
        run("action axioms", [&] { as_action(doc); });
    } else if (doc.kind == "xmod") {
        run("crossed-module axioms", [&] { as_xmod(doc); });
    } else if (doc.kind == "whitehead") {
        run("whitehead axioms", [&] { as_whitehead(doc); });
    } else if (doc.kind == "groupoid") {
        run("groupoid axioms", [&] { as_groupoid(doc); });
    } else if (doc.kind == "cospan") {
        run("cospan well-formed", [&] { as_cospan(doc); });
    } else if (doc.kind == "report") {
        run("report structure", [&] {
            const json& rows = field(doc.body, "checks");
            if (!rows.is_array()) fail("ParseError", "'checks' must be an array");
            for (const auto& row : rows) {
                std::string status = str_field(row, "status");
                str_field(row, "name");
                if (status != "pass" && status != "fail")
                    fail("ParseError", "status must be 'pass' or 'fail'");
            }
        });
    } else {
        fail("ParseError", "unknown document kind '" + doc.kind + "'");
    }
    return rep;
}

Document load(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("ParseError", "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    json j;
    try {
        j = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        fail("ParseError", e.what());
    }
    if (!j.is_object()) fail("ParseError", "document root must be an object");
    resolve_refs(j, std::filesystem::path(path).parent_path());
    std::string kind = str_field(j, "kind");
    if (std::none_of(std::begin(kKnownKinds), std::end(kKnownKinds),
                     [&](const char* k) { return kind == k; }))
        fail("ParseError", "unknown document kind '" + kind + "'");
    check_version(j);
    Document doc{kind, "1", std::move(j)};
    auto rep = validate(doc);
    for (const auto& c : rep.checks)
        if (!c.pass) fail("InvariantViolation", c.name + ": " + c.detail);
    return doc;
}

void save(const Document& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail("ParseError", "cannot open '" + path + "' for writing");
    out << doc.body.dump(2) << '\n';
}

} // namespace xmk::io
