#include "relhom/io.hpp"

#include <fstream>
#include <sstream>

namespace relhom {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw input_error(where + ": " + what);
}

const Json& field(const Json& j, const std::string& where, const std::string& key) {
    if (!j.is_object()) bad(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(where + "." + key, "missing field");
    return *it;
}

std::string str_field(const Json& j, const std::string& where, const std::string& key) {
    const Json& v = field(j, where, key);
    if (!v.is_string()) bad(where + "." + key, "expected a string");
    return v.get<std::string>();
}

long int_value(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) bad(where, "expected an integer");
    return j.get<long>();
}

// decimal-string or plain integer entries (SNF cofactors may exceed 64 bits)
Int big_value(const Json& j, const std::string& where) {
    try {
        if (j.is_string()) return Int(j.get<std::string>());
        if (j.is_number_integer()) return Int(j.get<long>());
    } catch (const std::exception&) {
    }
    bad(where, "expected an integer or a decimal string");
}

bool invariant_form(const std::vector<Int>& d) {
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 2) return false;
        if (i + 1 < d.size() && d[i + 1] % d[i] != 0) return false;
    }
    return true;
}

// per-name object plus the coordinate change for non-canonical factor lists
struct ParsedObject {
    ObjectRef obj;
    std::optional<FinAbPresentation> pres;
};

ParsedObject parse_object(const Json& j, const std::string& where, BackendKind backend,
                          const TableCatPtr& table) {
    switch (backend) {
        case BackendKind::FinAb: {
            const Json& fs = field(j, where, "factors");
            if (!fs.is_array()) bad(where + ".factors", "expected an array");
            std::vector<Int> d;
            for (size_t i = 0; i < fs.size(); ++i) {
                Int v = big_value(fs[i], where + ".factors[" + std::to_string(i) + "]");
                if (v < 1) bad(where + ".factors", "factors must be positive");
                d.push_back(v);
            }
            if (invariant_form(d)) return {FinAbObject{d}, std::nullopt};
            auto pres = finab_normalize((int)d.size(), mat_diag(d));
            return {pres.obj, pres};
        }
        case BackendKind::PSet: {
            long n = int_value(field(j, where, "size"), where + ".size");
            if (n < 1) bad(where + ".size", "size must be at least 1");
            return {PSetObject{(int)n}, std::nullopt};
        }
        case BackendKind::FinGrp: {
            if (j.is_object() && j.contains("name"))
                return {find_group(str_field(j, where, "name")), std::nullopt};
            const Json& t = field(j, where, "table");
            if (!t.is_array()) bad(where + ".table", "expected an array of rows");
            int n = (int)t.size();
            std::vector<int> flat;
            for (int i = 0; i < n; ++i) {
                if (!t[i].is_array() || (int)t[i].size() != n)
                    bad(where + ".table", "expected an n x n array");
                for (int k = 0; k < n; ++k)
                    flat.push_back((int)int_value(t[i][k], where + ".table"));
            }
            return {fingrp_make(n, std::move(flat)), std::nullopt};
        }
        case BackendKind::Table: {
            long o = int_value(field(j, where, "object"), where + ".object");
            if (!table) bad(where, "table backend requires a category block");
            if (o < 0 || o >= table->n_obj) bad(where + ".object", "object index out of range");
            return {TableObjectRef{table, (int)o}, std::nullopt};
        }
    }
    bad(where, "unknown backend");
}

Mat parse_matrix(const Json& j, const std::string& where, int rows, int cols) {
    if (!j.is_array() || (int)j.size() != rows) bad(where, "expected " + std::to_string(rows) + " rows");
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || (int)j[i].size() != cols)
            bad(where, "expected " + std::to_string(cols) + " columns");
        for (int k = 0; k < cols; ++k)
            m.at(i, k) = big_value(j[i][k], where + "[" + std::to_string(i) + "]");
    }
    return m;
}

std::vector<int> parse_int_list(const Json& j, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array");
    std::vector<int> out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back((int)int_value(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

Morphism parse_arrow(const Json& j, const std::string& where, BackendKind backend,
                     const ParsedObject& a, const ParsedObject& b, const TableCatPtr& table) {
    switch (backend) {
        case BackendKind::FinAb: {
            const auto& da = std::get<FinAbObject>(a.obj);
            const auto& db = std::get<FinAbObject>(b.obj);
            // user coordinates when the factor list was not in invariant form
            int cols = a.pres ? a.pres->from_canon.rows : da.rank();
            int rows = b.pres ? b.pres->from_canon.rows : db.rank();
            Mat m = parse_matrix(field(j, where, "matrix"), where + ".matrix", rows, cols);
            if (b.pres) m = mat_mul(b.pres->to_canon, m);
            if (a.pres) m = mat_mul(m, a.pres->from_canon);
            try {
                return finab_morphism(da, db, m);
            } catch (const input_error& e) {
                bad(where + ".matrix", e.what());
            }
        }
        case BackendKind::PSet: {
            auto map = parse_int_list(field(j, where, "map"), where + ".map");
            try {
                return pset_morphism(std::get<PSetObject>(a.obj), std::get<PSetObject>(b.obj),
                                     std::move(map));
            } catch (const input_error& e) {
                bad(where + ".map", e.what());
            }
        }
        case BackendKind::FinGrp: {
            auto map = parse_int_list(field(j, where, "map"), where + ".map");
            try {
                return fingrp_morphism(std::get<FinGrpObjPtr>(a.obj),
                                       std::get<FinGrpObjPtr>(b.obj), std::move(map));
            } catch (const input_error& e) {
                bad(where + ".map", e.what());
            }
        }
        case BackendKind::Table: {
            long k = int_value(field(j, where, "arrow"), where + ".arrow");
            if (k < 0 || k >= table->n_mor()) bad(where + ".arrow", "arrow index out of range");
            if (table->dom[k] != std::get<TableObjectRef>(a.obj).obj ||
                table->cod[k] != std::get<TableObjectRef>(b.obj).obj)
                bad(where + ".arrow", "arrow endpoints disagree with dom/cod");
            return TableMorphismRef{table, (int)k};
        }
    }
    bad(where, "unknown backend");
}

std::vector<std::string> parse_name_list(const Json& j, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array of names");
    std::vector<std::string> out;
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) bad(where + "[" + std::to_string(i) + "]", "expected a string");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

TableCatPtr parse_table(const Json& j, const std::string& where) {
    int n_obj = (int)int_value(field(j, where, "objects"), where + ".objects");
    auto dm = parse_int_list(field(j, where, "dom"), where + ".dom");
    auto cd = parse_int_list(field(j, where, "cod"), where + ".cod");
    auto id = parse_int_list(field(j, where, "identity"), where + ".identity");
    const Json& cj = field(j, where, "comp");
    if (!cj.is_array()) bad(where + ".comp", "expected an array");
    std::vector<std::vector<int>> comp;
    for (size_t i = 0; i < cj.size(); ++i)
        comp.push_back(parse_int_list(cj[i], where + ".comp[" + std::to_string(i) + "]"));
    try {
        return tablecat_make(n_obj, std::move(dm), std::move(cd), std::move(id), std::move(comp));
    } catch (const input_error& e) {
        bad(where, e.what());
    }
}

const DiagramObject& named_object(const InputDocument& doc, const std::string& name) {
    const auto* o = doc.diagram.find_object(name);
    if (!o) throw input_error("$.objects: shape requires an object named '" + name + "'");
    return *o;
}

Morphism named_arrow(const InputDocument& doc, const std::string& name) {
    const auto* a = doc.diagram.find_arrow(name);
    if (!a) throw input_error("$.arrows: shape requires an arrow named '" + name + "'");
    return a->mor;
}

Json matrix_to_json(const Mat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json arrow_payload(const Morphism& f) {
    Json j = Json::object();
    switch (backend_of(f)) {
        case BackendKind::FinAb:
            j["matrix"] = matrix_to_json(std::get<FinAbMorphism>(f).m);
            break;
        case BackendKind::PSet:
            j["map"] = std::get<PSetMorphism>(f).map;
            break;
        case BackendKind::FinGrp:
            j["map"] = std::get<FinGrpMorphism>(f).map;
            break;
        case BackendKind::Table:
            j["arrow"] = std::get<TableMorphismRef>(f).arrow;
            break;
    }
    return j;
}

std::optional<BackendKind> parse_backend(const std::string& s) {
    if (s == "finab") return BackendKind::FinAb;
    if (s == "pset") return BackendKind::PSet;
    if (s == "fingrp") return BackendKind::FinGrp;
    if (s == "table" || s == "tablecat") return BackendKind::Table;
    return std::nullopt;
}

const char* kShapes[] = {"sequence", "short5", "snake", "grid", "category-table", "functor"};

}  // namespace

InputDocument parse_document(const Json& j) {
    if (!j.is_object()) throw input_error("$: expected a JSON object");
    if (str_field(j, "$", "format-version") != "1")
        throw input_error("$.format-version: expected \"1\"");
    InputDocument doc;
    auto b = parse_backend(str_field(j, "$", "backend"));
    if (!b) throw input_error("$.backend: expected finab, pset, fingrp, or table");
    doc.backend = *b;
    if (j.contains("shape")) {
        doc.shape = str_field(j, "$", "shape");
        bool known = false;
        for (const char* s : kShapes) known = known || doc.shape == s;
        if (!known) throw input_error("$.shape: unknown shape '" + doc.shape + "'");
    }
    if (j.contains("class")) doc.class_selector = str_field(j, "$", "class");
    if (doc.backend == BackendKind::Table) doc.table = parse_table(field(j, "$", "category"), "$.category");
    if (j.contains("functor")) {
        std::string f = str_field(j, "$", "functor");
        if (f == "identity")
            doc.functor = FunctorDesc{FunctorDesc::Kind::Identity};
        else if (f == "forgetful")
            doc.functor = FunctorDesc{FunctorDesc::Kind::ForgetfulFinGrpToPSet};
        else
            throw input_error("$.functor: unknown functor '" + f + "'");
    }

    std::vector<ParsedObject> parsed;
    if (j.contains("objects")) {
        const Json& objs = j["objects"];
        if (!objs.is_object()) throw input_error("$.objects: expected an object");
        for (auto it = objs.begin(); it != objs.end(); ++it) {
            auto p = parse_object(it.value(), "$.objects." + it.key(), doc.backend, doc.table);
            doc.diagram.objects.push_back({it.key(), p.obj});
            parsed.push_back(std::move(p));
        }
    }
    auto lookup = [&](const std::string& name, const std::string& where) -> const ParsedObject& {
        for (size_t i = 0; i < parsed.size(); ++i)
            if (doc.diagram.objects[i].name == name) return parsed[i];
        bad(where, "unknown object '" + name + "'");
    };
    if (j.contains("arrows")) {
        const Json& arrs = j["arrows"];
        if (!arrs.is_object()) throw input_error("$.arrows: expected an object");
        for (auto it = arrs.begin(); it != arrs.end(); ++it) {
            std::string where = "$.arrows." + it.key();
            std::string src = str_field(it.value(), where, "dom");
            std::string dst = str_field(it.value(), where, "cod");
            const auto& a = lookup(src, where + ".dom");
            const auto& b = lookup(dst, where + ".cod");
            doc.diagram.arrows.push_back(
                {it.key(), src, dst, parse_arrow(it.value(), where, doc.backend, a, b, doc.table)});
        }
    }
    if (j.contains("equations")) {
        const Json& eqs = j["equations"];
        if (!eqs.is_array()) throw input_error("$.equations: expected an array");
        for (size_t i = 0; i < eqs.size(); ++i) {
            std::string where = "$.equations[" + std::to_string(i) + "]";
            DiagramEquation eq;
            eq.lhs = parse_name_list(field(eqs[i], where, "lhs"), where + ".lhs");
            eq.rhs = parse_name_list(field(eqs[i], where, "rhs"), where + ".rhs");
            for (const auto& side : {eq.lhs, eq.rhs})
                for (const auto& n : side)
                    if (!doc.diagram.find_arrow(n)) bad(where, "unknown arrow '" + n + "'");
            doc.diagram.equations.push_back(std::move(eq));
        }
    }
    if (j.contains("sequence")) {
        doc.sequence = parse_name_list(j["sequence"], "$.sequence");
        for (const auto& n : doc.sequence)
            if (!doc.diagram.find_arrow(n)) throw input_error("$.sequence: unknown arrow '" + n + "'");
    }
    return doc;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error(path + ": cannot open file");
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw input_error(path + ": malformed JSON");
    return j;
}

InputDocument load_document(const std::string& path) {
    try {
        return parse_document(load_json_file(path));
    } catch (const input_error& e) {
        std::string msg = e.what();
        if (msg.rfind(path, 0) == 0) throw;
        throw input_error(path + ": " + msg);
    }
}

FinGrpObjPtr find_group(const std::string& name) {
    static const std::vector<NamedGroup> lib = fingrp_builtin_library();
    for (const auto& g : lib)
        if (g.name == name) return g.group;
    std::string path = std::string(RELHOM_DATA_DIR) + "/groups/" + name + ".json";
    std::ifstream probe(path);
    if (!probe) throw input_error("unknown group '" + name + "'");
    probe.close();
    Json j = load_json_file(path);
    auto p = parse_object(field(j, "$", "group"), path + ": $.group", BackendKind::FinGrp, nullptr);
    return std::get<FinGrpObjPtr>(p.obj);
}

EClass parse_class_selector(const std::string& sel) {
    if (sel == "iso") return eclass_builtin(EClassKind::Iso);
    if (sel == "split_epi") return eclass_builtin(EClassKind::SplitEpi);
    if (sel == "regular_epi") return eclass_builtin(EClassKind::RegularEpi);
    if (sel == "normal_epi") return eclass_builtin(EClassKind::NormalEpi);
    if (sel == "all") return eclass_builtin(EClassKind::All);
    if (sel.rfind("predicate:", 0) == 0) return eclass_predicate(sel.substr(10));
    if (sel.rfind("explicit:", 0) == 0) {
        auto doc = load_document(sel.substr(9));
        std::vector<Morphism> arrows;
        for (const auto& a : doc.diagram.arrows) arrows.push_back(a.mor);
        return eclass_explicit(std::move(arrows));
    }
    if (sel.rfind("preimage:", 0) == 0) {
        std::string rest = sel.substr(9);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw input_error("class selector: preimage needs preimage:<functor>:<selector>");
        std::string fname = rest.substr(0, colon);
        FunctorDesc f;
        if (fname == "identity")
            f.kind = FunctorDesc::Kind::Identity;
        else if (fname == "forgetful")
            f.kind = FunctorDesc::Kind::ForgetfulFinGrpToPSet;
        else
            throw input_error("class selector: unknown functor '" + fname + "'");
        return preimage_class(f, eclass_builtin(EClassKind::All),
                              parse_class_selector(rest.substr(colon + 1)));
    }
    throw input_error("class selector: unknown class '" + sel + "'");
}

SequenceSpec sequence_from_document(const InputDocument& doc) {
    SequenceSpec seq;
    if (!doc.sequence.empty())
        for (const auto& n : doc.sequence) seq.arrows.push_back(named_arrow(doc, n));
    else
        for (const auto& a : doc.diagram.arrows) seq.arrows.push_back(a.mor);
    if (seq.arrows.empty()) throw input_error("$.sequence: no arrows");
    return seq;
}

SnakeInput snake_from_document(const InputDocument& doc, EClass cls) {
    if (!doc.shape.empty() && doc.shape != "snake")
        throw input_error("$.shape: expected a snake document");
    return SnakeInput{named_object(doc, "A").obj,   named_object(doc, "B").obj,
                      named_object(doc, "C").obj,   named_object(doc, "A'").obj,
                      named_object(doc, "B'").obj,  named_object(doc, "C'").obj,
                      named_arrow(doc, "f"),        named_arrow(doc, "g"),
                      named_arrow(doc, "f'"),       named_arrow(doc, "g'"),
                      named_arrow(doc, "u"),        named_arrow(doc, "v"),
                      named_arrow(doc, "w"),        std::move(cls)};
}

GridInput grid_from_document(const InputDocument& doc, EClass cls) {
    if (!doc.shape.empty() && doc.shape != "grid")
        throw input_error("$.shape: expected a grid document");
    return GridInput{named_object(doc, "A").obj,   named_object(doc, "B").obj,
                     named_object(doc, "C").obj,   named_object(doc, "A'").obj,
                     named_object(doc, "B'").obj,  named_object(doc, "C'").obj,
                     named_object(doc, "A''").obj, named_object(doc, "B''").obj,
                     named_object(doc, "C''").obj, named_arrow(doc, "f"),
                     named_arrow(doc, "g"),        named_arrow(doc, "f'"),
                     named_arrow(doc, "g'"),       named_arrow(doc, "f''"),
                     named_arrow(doc, "g''"),      named_arrow(doc, "u"),
                     named_arrow(doc, "v"),        named_arrow(doc, "w"),
                     named_arrow(doc, "u'"),       named_arrow(doc, "v'"),
                     named_arrow(doc, "w'"),       std::move(cls)};
}

Json object_to_json(const ObjectRef& a) {
    Json j = Json::object();
    switch (backend_of(a)) {
        case BackendKind::FinAb: {
            Json fs = Json::array();
            for (const auto& d : std::get<FinAbObject>(a).factors) fs.push_back(d.str());
            j["factors"] = std::move(fs);
            break;
        }
        case BackendKind::PSet:
            j["size"] = std::get<PSetObject>(a).size;
            break;
        case BackendKind::FinGrp: {
            const auto& g = std::get<FinGrpObjPtr>(a);
            static const std::vector<NamedGroup> lib = fingrp_builtin_library();
            for (const auto& n : lib)
                if (*n.group == *g) {
                    j["name"] = n.name;
                    return j;
                }
            Json rows = Json::array();
            for (int i = 0; i < g->n; ++i) {
                Json row = Json::array();
                for (int k = 0; k < g->n; ++k) row.push_back(g->mul(i, k));
                rows.push_back(std::move(row));
            }
            j["table"] = std::move(rows);
            break;
        }
        case BackendKind::Table:
            j["object"] = std::get<TableObjectRef>(a).obj;
            break;
    }
    return j;
}

Json morphism_to_json(const Morphism& f) {
    Json j = Json::object();
    j["dom"] = object_to_json(dom(f));
    j["cod"] = object_to_json(cod(f));
    Json payload = arrow_payload(f);
    for (auto it = payload.begin(); it != payload.end(); ++it) j[it.key()] = it.value();
    return j;
}

Json table_to_json(const TableCategory& c) {
    Json j = Json::object();
    j["objects"] = c.n_obj;
    j["dom"] = c.dom;
    j["cod"] = c.cod;
    j["identity"] = c.identity;
    j["comp"] = c.comp;
    return j;
}

Json diagram_to_json(const Diagram& d, const std::string& shape) {
    if (d.objects.empty()) throw input_error("diagram_to_json: empty diagram");
    BackendKind b = backend_of(d.objects.front().obj);
    Json j = Json::object();
    j["format-version"] = "1";
    j["backend"] = backend_name(b);
    if (!shape.empty()) j["shape"] = shape;
    if (b == BackendKind::Table)
        j["category"] = table_to_json(*std::get<TableObjectRef>(d.objects.front().obj).cat);
    Json objs = Json::object();
    for (const auto& o : d.objects) objs[o.name] = object_to_json(o.obj);
    j["objects"] = std::move(objs);
    Json arrs = Json::object();
    for (const auto& a : d.arrows) {
        Json e = Json::object();
        e["dom"] = a.src;
        e["cod"] = a.dst;
        Json payload = arrow_payload(a.mor);
        for (auto it = payload.begin(); it != payload.end(); ++it) e[it.key()] = it.value();
        arrs[a.name] = std::move(e);
    }
    j["arrows"] = std::move(arrs);
    if (!d.equations.empty()) {
        Json eqs = Json::array();
        for (const auto& eq : d.equations) {
            Json e = Json::object();
            e["lhs"] = eq.lhs;
            e["rhs"] = eq.rhs;
            eqs.push_back(std::move(e));
        }
        j["equations"] = std::move(eqs);
    }
    return j;
}

Json verdict_to_json(const Verdict& v) {
    Json j = Json::object();
    j["status"] = status_name(v.status);
    j["instances-checked"] = v.instances_checked;
    j["inapplicable"] = v.inapplicable;
    j["bound"] = v.bound;
    j["detail"] = v.detail;
    if (v.witness) j["witness"] = diagram_to_json(*v.witness);
    return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error(path + ": cannot open file for writing");
    out << dump_json(j);
    if (!out) throw input_error(path + ": write failed");
}

}  // namespace relhom
