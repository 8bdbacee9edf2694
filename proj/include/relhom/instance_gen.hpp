#pragma once

#include <random>

#include "relhom/lemmas.hpp"

namespace relhom {

// uniform over finab_objects(max_order)
FinAbObject random_finab_object(std::mt19937& rng, long max_order);
// uniform over Hom(a, b), sampled entrywise from the congruence classes
FinAbMorphism random_finab_morphism(std::mt19937& rng, const FinAbObject& a, const FinAbObject& b);

// valid Lemma 4.2 instances: the second row is built as Ker(coker) of a random
// subobject of B, the third row as the quotient of B' by a random subgroup
// containing v(Ker g); all hypotheses hold by construction for E = RegularEpi
SnakeInput random_snake_finab(std::mt19937& rng, long max_order, EClass cls);
// same recipe over the bundled group library; hypotheses can fail when images
// are not normal, callers filter on hypothesis_error
SnakeInput random_snake_fingrp(std::mt19937& rng, const std::vector<NamedGroup>& lib, EClass cls);

// valid Lemma 4.3 grids: middle row a random extension, B a random subobject
// of B', A its pullback, bottom row the cokernels of the columns; with
// corestrict the first row ends in im(g'v) and is short exact, without it the
// first row ends in C' and its exactness is left to chance
GridInput random_grid_finab(std::mt19937& rng, long max_order, bool corestrict, EClass cls);

}  // namespace relhom
