#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relhom/axioms.hpp"
#include "relhom/io.hpp"

using namespace relhom;

static const std::string kData = RELHOM_DATA_DIR;

TEST_CASE("worked snake document loads and runs") {
    auto doc = load_document(kData + "/cases/snake_worked.json");
    CHECK(doc.backend == BackendKind::FinAb);
    CHECK(doc.shape == "snake");
    CHECK(doc.class_selector == "regular_epi");
    CHECK(doc.diagram.objects.size() == 6);
    CHECK(doc.diagram.arrows.size() == 7);

    auto in = snake_from_document(doc, parse_class_selector(doc.class_selector));
    auto r = snake(in, SnakeMode::Homological);
    const auto& d = std::get<FinAbMorphism>(r.d);
    CHECK(d.m.rows == 1);
    CHECK(d.m.cols == 1);
    CHECK(d.m.at(0, 0) == 1);
    for (const auto& [node, v] : r.exact_at) {
        INFO(node);
        CHECK(v.status == Status::Holds);
    }
}

TEST_CASE("exactness document loads and checks") {
    auto doc = load_document(kData + "/cases/exact_z2_z4_z2.json");
    auto seq = sequence_from_document(doc);
    CHECK(seq.arrows.size() == 4);
    auto v = is_e_exact(seq, parse_class_selector(doc.class_selector));
    CHECK(v.status == Status::Holds);
}

TEST_CASE("serialization round trip is byte stable") {
    auto j = load_json_file(kData + "/cases/snake_worked.json");
    auto doc = parse_document(j);
    auto j2 = diagram_to_json(doc.diagram, "snake");
    auto doc2 = parse_document(j2);
    REQUIRE(doc2.diagram.arrows.size() == doc.diagram.arrows.size());
    for (size_t i = 0; i < doc.diagram.arrows.size(); ++i)
        CHECK(morphism_eq(doc.diagram.arrows[i].mor, doc2.diagram.arrows[i].mor));
    CHECK(dump_json(j2) == dump_json(diagram_to_json(doc2.diagram, "snake")));
}

TEST_CASE("non-invariant factor lists are normalized") {
    Json j = Json::parse(R"({
      "format-version": "1", "backend": "finab",
      "objects": {"X": {"factors": ["2", "3"]}, "Y": {"factors": ["6"]}},
      "arrows": {"h": {"dom": "X", "cod": "Y", "matrix": [["3", "2"]]}}
    })");
    auto doc = parse_document(j);
    const auto& x = std::get<FinAbObject>(doc.diagram.objects[0].obj);
    REQUIRE(x.factors == std::vector<Int>{6});
    auto h = doc.diagram.arrows[0].mor;
    CHECK(is_iso(h));  // CRT: (a, b) -> 3a + 2b is an isomorphism Z/2 + Z/3 -> Z/6
}

TEST_CASE("pset and fingrp documents round trip") {
    Json j = Json::parse(R"({
      "format-version": "1", "backend": "pset",
      "objects": {"A": {"size": 3}, "B": {"size": 2}},
      "arrows": {"c": {"dom": "A", "cod": "B", "map": [0, 1, 1]}},
      "equations": [{"lhs": ["c"], "rhs": ["c"]}]
    })");
    auto doc = parse_document(j);
    CHECK(diagram_commutes(doc.diagram).status == Status::Holds);
    auto j2 = diagram_to_json(doc.diagram);
    CHECK(morphism_eq(parse_document(j2).diagram.arrows[0].mor, doc.diagram.arrows[0].mor));

    Json g = Json::parse(R"({
      "format-version": "1", "backend": "fingrp",
      "objects": {"G": {"name": "C4"}, "H": {"name": "C2"}},
      "arrows": {"p": {"dom": "G", "cod": "H", "map": [0, 1, 0, 1]}}
    })");
    auto gdoc = parse_document(g);
    CHECK(is_regular_epi(gdoc.diagram.arrows[0].mor));
    auto g2 = diagram_to_json(gdoc.diagram);
    CHECK(g2["objects"]["G"]["name"] == "C4");  // named groups serialize by name
    CHECK(morphism_eq(parse_document(g2).diagram.arrows[0].mor, gdoc.diagram.arrows[0].mor));
}

TEST_CASE("table documents carry their category") {
    auto cats = enumerate_categories(4);
    REQUIRE(!cats.empty());
    auto cat = cats.back();
    Diagram d;
    for (int o = 0; o < cat->n_obj; ++o)
        d.objects.push_back({"X" + std::to_string(o), TableObjectRef{cat, o}});
    for (int a = 0; a < cat->n_mor(); ++a)
        d.arrows.push_back({"m" + std::to_string(a), "X" + std::to_string(cat->dom[a]),
                            "X" + std::to_string(cat->cod[a]), TableMorphismRef{cat, a}});
    auto j = diagram_to_json(d);
    CHECK(j["backend"] == "tablecat");
    auto doc = parse_document(j);
    REQUIRE(doc.table);
    CHECK(doc.table->n_obj == cat->n_obj);
    CHECK(doc.table->dom == cat->dom);
    CHECK(doc.table->cod == cat->cod);
    CHECK(doc.table->comp == cat->comp);
    for (size_t i = 0; i < d.arrows.size(); ++i)
        CHECK(std::get<TableMorphismRef>(doc.diagram.arrows[i].mor).arrow ==
              std::get<TableMorphismRef>(d.arrows[i].mor).arrow);
    CHECK(dump_json(diagram_to_json(doc.diagram)) == dump_json(j));
}

TEST_CASE("schema errors carry a field pointer") {
    auto expect_error = [](const char* text, const char* needle) {
        try {
            parse_document(Json::parse(text));
            FAIL_CHECK("expected input_error for ", text);
        } catch (const input_error& e) {
            INFO(e.what());
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error(R"({"backend": "finab"})", "$.format-version");
    expect_error(R"({"format-version": "2", "backend": "finab"})", "$.format-version");
    expect_error(R"({"format-version": "1", "backend": "vect"})", "$.backend");
    expect_error(R"({"format-version": "1", "backend": "finab", "shape": "cube"})", "$.shape");
    expect_error(
        R"({"format-version": "1", "backend": "finab",
            "objects": {"A": {"factors": ["0"]}}})",
        "$.objects.A.factors");
    expect_error(
        R"({"format-version": "1", "backend": "finab", "objects": {"A": {"factors": ["2"]}},
            "arrows": {"f": {"dom": "A", "cod": "Z", "matrix": [["0"]]}}})",
        "$.arrows.f.cod");
    expect_error(
        R"({"format-version": "1", "backend": "finab", "objects": {"A": {"factors": ["2"]}},
            "arrows": {"f": {"dom": "A", "cod": "A", "matrix": [["1", "1"]]}}})",
        "$.arrows.f.matrix");
    expect_error(
        R"({"format-version": "1", "backend": "finab",
            "objects": {"A": {"factors": ["2"]}, "B": {"factors": ["4"]}},
            "arrows": {"f": {"dom": "A", "cod": "B", "matrix": [["1"]]}}})",
        "$.arrows.f.matrix");  // not well-defined: 2*1 != 0 mod 4
    expect_error(
        R"({"format-version": "1", "backend": "pset", "objects": {"A": {"size": 2}},
            "arrows": {"f": {"dom": "A", "cod": "A", "map": [1, 0]}}})",
        "$.arrows.f.map");
    expect_error(
        R"({"format-version": "1", "backend": "finab", "objects": {"A": {"factors": ["2"]}},
            "sequence": ["f"]})",
        "$.sequence");
    expect_error(
        R"({"format-version": "1", "backend": "finab", "objects": {"A": {"factors": ["2"]}},
            "arrows": {"f": {"dom": "A", "cod": "A", "matrix": [["1"]]}},
            "equations": [{"lhs": ["f"], "rhs": ["h"]}]})",
        "$.equations[0]");
    CHECK_THROWS_AS(load_document(kData + "/no_such_file.json"), input_error);
}

TEST_CASE("bundled group files mirror the builtin library") {
    auto lib = fingrp_builtin_library();
    CHECK(lib.size() == 19);
    for (const auto& g : lib) {
        auto j = load_json_file(kData + "/groups/" + g.name + ".json");
        CHECK(j["format-version"] == "1");
        CHECK(j["name"] == g.name);
        const auto& t = j["group"]["table"];
        REQUIRE((int)t.size() == g.group->n);
        for (int a = 0; a < g.group->n; ++a)
            for (int b = 0; b < g.group->n; ++b)
                CHECK(t[a][b].get<int>() == g.group->mul(a, b));
        CHECK(*find_group(g.name) == *g.group);
    }
    CHECK_THROWS_AS(find_group("M11"), input_error);
}

TEST_CASE("class selectors") {
    CHECK(parse_class_selector("iso").kind == EClassKind::Iso);
    CHECK(parse_class_selector("split_epi").kind == EClassKind::SplitEpi);
    CHECK(parse_class_selector("regular_epi").kind == EClassKind::RegularEpi);
    CHECK(parse_class_selector("normal_epi").kind == EClassKind::NormalEpi);
    CHECK(parse_class_selector("all").kind == EClassKind::All);
    auto p = parse_class_selector("predicate:kernel_coprime:3");
    CHECK(p.kind == EClassKind::Predicate);
    CHECK(p.predicate == "kernel_coprime:3");
    CHECK_THROWS_AS(parse_class_selector("epi"), input_error);

    // preimage along the forgetful functor: membership = underlying map splits
    auto pre = parse_class_selector("preimage:forgetful:split_epi");
    CHECK(pre.kind == EClassKind::Preimage);
    auto c4 = find_group("C4"), c2 = find_group("C2");
    Morphism proj{fingrp_morphism(c4, c2, {0, 1, 0, 1})};
    Morphism zero{fingrp_zero(c4, c2)};
    CHECK(member(pre, proj));
    CHECK(!member(pre, zero));

    // explicit class from a file
    Diagram d;
    d.objects.push_back({"A", ObjectRef{FinAbObject{{2}}}});
    d.arrows.push_back({"id", "A", "A", identity_morphism(ObjectRef{FinAbObject{{2}}})});
    write_json_file("test_io_explicit.json", diagram_to_json(d));
    auto ex = parse_class_selector("explicit:test_io_explicit.json");
    CHECK(ex.kind == EClassKind::Explicit);
    REQUIRE(ex.arrows.size() == 1);
    CHECK(member(ex, d.arrows[0].mor));
    CHECK_THROWS_AS(parse_class_selector("explicit:test_io_missing.json"), input_error);
    CHECK_THROWS_AS(parse_class_selector("preimage:forgetful"), input_error);
}

TEST_CASE("witness verdicts serialize and re-check") {
    auto view = make_view_finab(4);
    auto all = eclass_builtin(EClassKind::All);
    auto v = check_axiom(view, all, AxiomId::A2_1b);
    REQUIRE(v.status == Status::Fails);
    REQUIRE(v.witness);
    auto j = verdict_to_json(v);
    CHECK(j["status"] == "fails");
    CHECK(j["instances-checked"].is_number_integer());
    REQUIRE(j.contains("witness"));
    auto doc = parse_document(j["witness"]);
    auto again = recheck_axiom(view, all, AxiomId::A2_1b, doc.diagram);
    CHECK(again.status == Status::Fails);
    // the same configuration is fine for the regular epis
    auto re = recheck_axiom(view, eclass_builtin(EClassKind::RegularEpi), AxiomId::A2_1b,
                            doc.diagram);
    CHECK(re.status != Status::Fails);

    auto held = check_axiom(view, eclass_builtin(EClassKind::Iso), AxiomId::A2_1d);
    auto jh = verdict_to_json(held);
    CHECK(jh["status"] == "holds-up-to-bound");
    CHECK(!jh.contains("witness"));
    CHECK(dump_json(jh).back() == '\n');
}

TEST_CASE("grid documents round trip through their named arrows") {
    // assemble a grid document by hand and read it back
    auto z2 = ObjectRef{FinAbObject{{2}}};
    Diagram d;
    const char* objs[] = {"A", "B", "C", "A'", "B'", "C'", "A''", "B''", "C''"};
    for (const char* n : objs) d.objects.push_back({n, z2});
    const char* arrs[][3] = {{"f", "A", "B"},    {"g", "B", "C"},    {"f'", "A'", "B'"},
                             {"g'", "B'", "C'"}, {"f''", "A''", "B''"}, {"g''", "B''", "C''"},
                             {"u", "A", "A'"},   {"v", "B", "B'"},   {"w", "C", "C'"},
                             {"u'", "A'", "A''"}, {"v'", "B'", "B''"}, {"w'", "C'", "C''"}};
    for (auto& a : arrs) d.arrows.push_back({a[0], a[1], a[2], zero_morphism(z2, z2)});
    auto doc = parse_document(diagram_to_json(d, "grid"));
    CHECK(doc.shape == "grid");
    auto in = grid_from_document(doc, eclass_builtin(EClassKind::RegularEpi));
    CHECK(morphism_eq(in.vp, zero_morphism(z2, z2)));
    CHECK_THROWS_AS(snake_from_document(doc, eclass_builtin(EClassKind::RegularEpi)),
                    input_error);
}
