#include "xmodkit/catalog.hpp"
#include "xmodkit/errors.hpp"
#include "xmodkit/gpd.hpp"
#include "xmodkit/io.hpp"
#include "xmodkit/simplicial.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using namespace xmk;
using nlohmann::json;

namespace {

struct Output {
    std::string format = "text";
    std::string out;
};

/// Render rows (plus optional extra payload fields) to stdout and --out;
/// exit status 0 iff every row passes.
int finish(const std::vector<io::IoCheck>& rows, const Output& o, json extra = json::object()) {
    std::string text;
    if (o.format == "json") {
        auto doc = io::report_document(rows);
        for (auto& [key, value] : extra.items()) doc.body[key] = value;
        text = doc.body.dump(2) + "\n";
    } else {
        for (const auto& r : rows) {
            text += (r.pass ? "PASS  " : "FAIL  ") + r.name;
            if (!r.detail.empty()) text += "  [" + r.detail + "]";
            text += "\n";
        }
    }
    std::cout << text;
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) fail("ParseError", "cannot open '" + o.out + "' for writing");
        f << text;
    }
    bool ok = std::all_of(rows.begin(), rows.end(), [](const io::IoCheck& r) { return r.pass; });
    return ok ? 0 : 1;
}

/// Hard caps, overridable with --unsafe (warning on stderr).
void enforce_cap(int value, int cap, const std::string& name, bool unsafe_ok) {
    if (value <= cap) return;
    if (!unsafe_ok)
        fail("BoundExceeded",
             name + " = " + std::to_string(value) + " exceeds the hard cap " +
                 std::to_string(cap) + " (pass --unsafe to override)");
    std::cerr << "warning: " << name << " = " << value << " exceeds the default cap " << cap
              << "; this may take a very long time\n";
}

int run_enumerate(const std::string& instance, int maxx, int maxb, bool unsafe_ok,
                  const Output& o) {
    enforce_cap(maxx, 16, "--max-x", unsafe_ok);
    enforce_cap(maxb, 16, "--max-b", unsafe_ok);
    std::vector<io::IoCheck> rows;
    json items = json::array();
    long long total = 0;
    if (instance == "grp") {
        for (const auto& [xn, xg] : groups_up_to_order(std::min(maxx, 8)))
            for (const auto& [bn, bg] : groups_up_to_order(std::min(maxb, 8))) {
                auto cms = enumerate_crossed_modules(xg, bg);
                total += static_cast<long long>(cms.size());
                rows.push_back({"X=" + xn + " B=" + bn, true, std::to_string(cms.size())});
                for (const auto& cm : cms) items.push_back(io::xmod_document(cm).body);
            }
    } else if (instance == "ab") {
        for (const auto& [xn, xg] : abelian_groups_up_to_order(std::min(maxx, 8)))
            for (const auto& [bn, bg] : abelian_groups_up_to_order(std::min(maxb, 8))) {
                auto a = ActionObject::pair(AInstance::AbPairs, PointedObject::abelian(xg),
                                            PointedObject::abelian(bg));
                long long n = 0;
                for (const auto& h : enumerate_pointed_maps(functor_J(a), functor_I(a))) {
                    auto w = make_whitehead(a, h);
                    items.push_back(io::whitehead_document(w).body);
                    ++n;
                }
                total += n;
                rows.push_back({"X=" + xn + " B=" + bn, true, std::to_string(n)});
            }
    } else if (instance == "pset") {
        for (int nx = 1; nx <= std::min(maxx, 8); ++nx)
            for (int nb = 1; nb <= std::min(maxb, 8); ++nb) {
                auto a = ActionObject::pair(AInstance::PSetPairs, PointedObject::pset(nx),
                                            PointedObject::pset(nb));
                long long n = 0;
                for (const auto& h : enumerate_pointed_maps(functor_J(a), functor_I(a))) {
                    auto w = make_whitehead(a, h);
                    items.push_back(io::whitehead_document(w).body);
                    ++n;
                }
                total += n;
                rows.push_back({"X=" + std::to_string(nx) + " B=" + std::to_string(nb), true,
                                std::to_string(n)});
            }
    } else {
        fail("ParseError", "unknown instance '" + instance + "'");
    }
    rows.push_back({"total", true, std::to_string(total)});
    json extra;
    extra["items"] = std::move(items);
    return finish(rows, o, std::move(extra));
}

int run_verify(const std::string& path, const Output& o) {
    auto doc = io::load(path); // throws with the named invariant on failure
    auto rep = io::validate(doc);
    std::vector<io::IoCheck> rows{{"loaded " + doc.kind + " document", true, ""}};
    rows.insert(rows.end(), rep.checks.begin(), rep.checks.end());
    return finish(rows, o);
}

int run_roundtrip(const std::string& path, const Output& o) {
    auto doc = io::load(path);
    if (doc.kind != "xmod") fail("ParseError", "roundtrip expects a crossed-module document");
    auto cm = io::as_xmod(doc);
    auto cert = roundtrip_check(cm); // throws NoIsomorphismFound on failure
    std::vector<io::IoCheck> rows;
    rows.push_back({"internal category axioms", is_internal_category(cert.groupoid.cat).ok(), ""});
    rows.push_back({"groupoid inverses", true, ""});
    rows.push_back({"recovered crossed module isomorphic to source", true, ""});
    json extra;
    extra["certificate"] = {{"recovered", io::xmod_document(cert.xmod).body},
                            {"groupoid", io::groupoid_document(cert.groupoid).body},
                            {"phiX", cert.phi1.map},
                            {"phiB", cert.phi2.map}};
    return finish(rows, o, std::move(extra));
}

int run_simplicial(const std::string& path, int depth, bool unsafe_ok, const Output& o) {
    enforce_cap(depth, 4, "--depth", unsafe_ok);
    auto doc = io::load(path);
    WhiteheadSequence w = doc.kind == "xmod" ? xmod_to_whitehead(io::as_xmod(doc))
                                             : io::as_whitehead(doc);
    auto t = build_tower(w, std::max(depth, 3));
    std::vector<io::IoCheck> rows;
    auto tr = build_truncation(t);
    std::string orders;
    for (const auto& obj : tr.objects)
        orders += (orders.empty() ? "" : ",") + std::to_string(obj.size());
    rows.push_back({"truncation object orders", true, orders});
    for (const auto& c : verify_identities(tr).checks) {
        io::IoCheck row{c.name, c.pass, ""};
        if (!c.pass) row.detail = "witness " + std::to_string(c.witness);
        if (c.table1_row > 0) row.name += " (translation row " + std::to_string(c.table1_row) + ")";
        rows.push_back(std::move(row));
    }
    return finish(rows, o);
}

int run_patch(const std::string& path, bool stable, int bound, bool unsafe_ok, const Output& o) {
    enforce_cap(bound, 8, "--bound", unsafe_ok);
    auto doc = io::load(path);
    if (doc.kind != "cospan") fail("ParseError", "patch expects a cospan document");
    auto c = io::as_cospan(doc);
    std::vector<io::IoCheck> rows;
    rows.push_back({"jointly epimorphic", jointly_epimorphic(c.k, c.s), ""});
    auto p = patch_retraction(c);
    rows.push_back({"patch (unique retraction exists)", p.has_value(), ""});
    if (p) {
        PatchWitness wit{c, *p};
        rows.push_back({"exact patch", is_exact_patch(wit), ""});
        if (stable)
            rows.push_back({"stable patch at bound " + std::to_string(bound),
                            is_stable_patch(wit, bound), ""});
    } else if (stable) {
        rows.push_back({"stable patch at bound " + std::to_string(bound), false,
                        "not a patch"});
    }
    return finish(rows, o);
}

int run_report(const std::string& path, const Output& o) {
    auto doc = io::load(path);
    if (doc.kind != "report") fail("ParseError", "report expects a report document");
    std::vector<io::IoCheck> rows;
    for (const auto& row : doc.body["checks"])
        rows.push_back({row["name"].get<std::string>(),
                        row["status"].get<std::string>() == "pass",
                        row.value("witness", std::string())});
    return finish(rows, o);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite crossed modules, Whitehead sequences, and internal groupoids"};
    app.require_subcommand(1);

    Output o;
    std::string instance = "grp", path;
    int maxx = 4, maxb = 4, depth = 3, bound = 8;
    bool stable = false, unsafe_ok = false;

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--out", o.out, "also write the report to this path");
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_flag("--unsafe", unsafe_ok, "override the hard caps (with a warning)");
    };

    auto* enumerate = app.add_subcommand("enumerate", "enumerate structures with counts");
    enumerate->add_option("--instance", instance, "base instance")
        ->check(CLI::IsMember({"grp", "ab", "pset"}));
    enumerate->add_option("--max-x", maxx, "bound on |X|");
    enumerate->add_option("--max-b", maxb, "bound on |B|");
    add_output(enumerate);

    auto* verify = app.add_subcommand("verify", "validate a document against its invariants");
    verify->add_option("path", path, "document to check")->required();
    add_output(verify);

    auto* roundtrip = app.add_subcommand("roundtrip", "crossed module <-> groupoid round trip");
    roundtrip->add_option("path", path, "crossed-module document")->required();
    add_output(roundtrip);

    auto* simplicial = app.add_subcommand("simplicial", "truncation and identity report");
    simplicial->add_option("path", path, "crossed-module or whitehead document")->required();
    simplicial->add_option("--depth", depth, "tower depth");
    add_output(simplicial);

    auto* patch = app.add_subcommand("patch", "patch predicates on a cospan");
    patch->add_option("path", path, "cospan document")->required();
    patch->add_flag("--stable", stable, "also run the bounded stability check");
    patch->add_option("--bound", bound, "stability test bound");
    add_output(patch);

    auto* report = app.add_subcommand("report", "render an existing report document");
    report->add_option("path", path, "report document")->required();
    add_output(report);

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate->parsed()) return run_enumerate(instance, maxx, maxb, unsafe_ok, o);
        if (verify->parsed()) return run_verify(path, o);
        if (roundtrip->parsed()) return run_roundtrip(path, o);
        if (simplicial->parsed()) return run_simplicial(path, depth, unsafe_ok, o);
        if (patch->parsed()) return run_patch(path, stable, bound, unsafe_ok, o);
        if (report->parsed()) return run_report(path, o);
    } catch (const Error& e) {
        json err;
        err["kind"] = "report";
        err["version"] = "1";
        err["checks"] = json::array({{{"name", e.code()}, {"status", "fail"},
                                      {"witness", std::string(e.what())}}});
        if (o.format == "json")
            std::cout << err.dump(2) << "\n";
        else
            std::cout << "FAIL  " << e.what() << "\n";
        return 2;
    }
    return 2;
}
