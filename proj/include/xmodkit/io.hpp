#pragma once

#include "xmodkit/actionsys.hpp"
#include "xmodkit/gpd.hpp"
#include "xmodkit/pointedcat.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace xmk::io {

/// JSON document formats for every domain type.  All payloads are explicit
/// integer index arrays; serialization is canonical (sorted keys, fixed
/// indentation), so structurally equal values are byte-identical on disk.
/// Groups may be inlined or referenced as {"ref": "relative/path.json"};
/// references are resolved against the referencing file's directory before
/// validation.

struct Document {
    std::string kind;    // group, hom, action, xmod, whitehead, groupoid, cospan, report
    std::string version; // format version, currently "1"
    nlohmann::json body; // the whole document, references resolved
};

bool operator==(const Document& a, const Document& b);

/// Parse, resolve references, and validate.  Raises ParseError (position
/// annotated) on malformed input, VersionMismatch on an unknown version,
/// and InvariantViolation naming the first failing invariant.
Document load(const std::string& path);

/// Canonical serialization to disk; save then load is the identity.
void save(const Document& doc, const std::string& path);

struct IoCheck {
    std::string name;
    bool pass = true;
    std::string detail;
};
struct IoReport {
    std::string kind;
    std::vector<IoCheck> checks;
    bool ok() const;
};

/// Re-run the owning module's invariant suite on the document body.
IoReport validate(const Document& doc);

/// A report document ({"kind":"report","checks":[...]}) from any check rows.
Document report_document(const std::vector<IoCheck>& checks);

Document group_document(const GroupPtr& g);
GroupPtr as_group(const Document& doc);

Document hom_document(const GroupHom& f);
GroupHom as_hom(const Document& doc);

Document action_document(const GroupAction& a);
GroupAction as_action(const Document& doc);

Document xmod_document(const CrossedModule& cm);
CrossedModule as_xmod(const Document& doc);

Document whitehead_document(const WhiteheadSequence& w);
WhiteheadSequence as_whitehead(const Document& doc);

/// Stores (C0, C1, d, c, e) and m over the lexicographic enumeration of
/// composable pairs; as_groupoid reassembles and finds the inverses.
Document groupoid_document(const GroupoidWitness& g);
GroupoidWitness as_groupoid(const Document& doc);

Document cospan_document(const Cospan& c);
Cospan as_cospan(const Document& doc);

} // namespace xmk::io
