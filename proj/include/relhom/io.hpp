#pragma once

#include <json.hpp>

#include "relhom/lemmas.hpp"

namespace relhom {

using Json = nlohmann::ordered_json;

// A parsed input file: one diagram over one backend, plus the optional shape
// payloads (sequence order, ambient table category, functor, class selector).
struct InputDocument {
    BackendKind backend = BackendKind::FinAb;
    std::string shape;  // "", "sequence", "short5", "snake", "grid", "category-table", "functor"
    Diagram diagram;
    std::vector<std::string> sequence;  // arrow names in composition order
    TableCatPtr table;                  // set when backend == Table
    std::optional<FunctorDesc> functor;
    std::string class_selector;  // empty when the file names no class
};

// Schema errors throw input_error with a $.field pointer.
InputDocument parse_document(const Json& j);
InputDocument load_document(const std::string& path);

// iso | split_epi | regular_epi | normal_epi | all | predicate:<name> |
// explicit:<file> | preimage:<functor>:<selector>, functor one of
// identity, forgetful
EClass parse_class_selector(const std::string& sel);

// named-group lookup: the builtin library first, then data/groups/<name>.json
FinGrpObjPtr find_group(const std::string& name);

// arrows in listed sequence order (all declared arrows when no list is given)
SequenceSpec sequence_from_document(const InputDocument& doc);
// objects A,B,C,A',B',C'; arrows f,g,f',g',u,v,w
SnakeInput snake_from_document(const InputDocument& doc, EClass cls);
// objects A..C''; arrows f,g,f',g',f'',g'',u,v,w,u',v',w'
GridInput grid_from_document(const InputDocument& doc, EClass cls);

Json object_to_json(const ObjectRef& a);
Json morphism_to_json(const Morphism& f);  // payload with inline dom/cod
Json table_to_json(const TableCategory& c);
// a complete re-loadable document for a non-empty diagram
Json diagram_to_json(const Diagram& d, const std::string& shape = "");
Json verdict_to_json(const Verdict& v);

// canonical two-space dump with a trailing newline; integers are exact
std::string dump_json(const Json& j);
Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace relhom
