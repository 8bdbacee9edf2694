#pragma once

#include <array>

#include "relhom/eclass.hpp"

namespace relhom {

// Definition 2.1(a)-(g) and Condition 2.2(a)-(d).
enum class AxiomId {
    A2_1a,
    A2_1b,
    A2_1c,
    A2_1d,
    A2_1e,
    A2_1f,
    A2_1g,
    C2_2a,
    C2_2b,
    C2_2c,
    C2_2d
};
constexpr int kAxiomCount = 11;

std::vector<AxiomId> all_axioms();
std::string axiom_name(AxiomId id);                      // "a".."g", "2.2a".."2.2d"
std::optional<AxiomId> parse_axiom_id(const std::string& s);

// A bounded slice of a category: objects plus cached hom-sets.
struct CategoryView {
    std::vector<ObjectRef> objects;
    std::vector<std::vector<std::vector<Morphism>>> homs;  // homs[i][j]
    std::string bound_desc;
    long morphism_count = 0;
};

CategoryView make_view_finab(long max_order);
CategoryView make_view_pset(int max_size);
CategoryView make_view_fingrp(const std::vector<NamedGroup>& lib, int max_order);
CategoryView make_view_table(const TableCatPtr& cat);

// k is a kernel of f: k mono, f k = 0, and the canonical comparison
// dom(k) -> Ker(f) is an isomorphism
bool is_kernel_morphism(const Morphism& k, const Morphism& f);

// enumerates the axiom's quantified configurations over the view, first
// counterexample in canonical order; missing limits count as inapplicable
Verdict check_axiom(const CategoryView& v, const EClass& e, AxiomId id);

// re-evaluates the single configuration recorded in a witness diagram;
// Fails means the witness still violates the axiom
Verdict recheck_axiom(const CategoryView& v, const EClass& e, AxiomId id, const Diagram& w);

// least witness or none; thin wrapper over check_axiom
std::optional<Diagram> search_counterexample(const CategoryView& v, const EClass& e, AxiomId id);

// single short-five diagram (arrows k, f, w, kprime, fprime); hypothesis_error
// names the failed premise
Verdict check_short_five_instance(const Diagram& d, const EClass& e);

enum class TheoremId { T2_3i, T2_3ii, T2_4i, T2_4ii, T2_4iii, C2_5, RemarkGimpliesC };
std::vector<TheoremId> all_theorems();
std::string theorem_name(TheoremId t);

// an axiom verdict is decisive only when no configuration was skipped for
// missing limits; theorems are asserted on decisive entries only
struct AxiomOutcome {
    Status status = Status::Holds;
    long inapplicable = 0;
};
using AxiomStatuses = std::array<AxiomOutcome, kAxiomCount>;
AxiomStatuses check_all_axioms(const CategoryView& v, const EClass& e);

// asserts the theorem's implication on each precomputed corpus entry
Verdict verify_implication(const std::vector<std::pair<std::string, AxiomStatuses>>& corpus,
                           TheoremId t);

// all enumerated table categories with every explicit class containing the isos
struct CorpusEntry {
    std::string name;
    CategoryView view;
    EClass cls;
};
std::vector<CorpusEntry> tablecat_corpus(int max_morphisms);

}  // namespace relhom
