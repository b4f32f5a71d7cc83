// Copyright 2026 The hocat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <random>

#include "doctest.h"
#include "random_category.hpp"

#include "hocat/congruence.hpp"
#include "hocat/errors.hpp"

using namespace hocat;
using hocat::testing::load_fixture;

namespace {

  struct Retr {
    FinCat     cat = load_fixture("f_retr").cat;
    MorphismId s   = cat.morphism_id("s");
    MorphismId r   = cat.morphism_id("r");
    MorphismId e   = cat.morphism_id("e");
    MorphismId ida = cat.morphism_id("id:a");
    MorphismId idb = cat.morphism_id("id:b");

    Precongruence seed() const {
      Precongruence R(cat.num_morphisms());
      R.add(e, idb);
      return R;
    }
  };

  bool contains_relation(Congruence const& L, Precongruence const& R) {
    for (auto [f, g] : R.pairs()) {
      if (!L.related(f, g)) {
        return false;
      }
    }
    return true;
  }

}  // namespace

TEST_CASE("composition closure") {
  Retr const t;
  Precongruence const closed = close_composition(t.cat, t.seed());
  CHECK(closed.pairs() == std::set<MorphismPair>{canonical(t.e, t.idb)});
  CHECK(close_composition(t.cat, closed) == closed);

  CHECK(close_composition(t.cat, Precongruence(t.cat.num_morphisms())).empty());

  auto const    iso = load_fixture("f_iso");
  Precongruence refl(iso.cat.num_morphisms());
  refl.add(0, 0);
  CHECK(close_composition(iso.cat, refl).empty());

  Precongruence skew(t.cat.num_morphisms());
  skew.add(t.s, t.e);
  CHECK_THROWS_AS(close_composition(t.cat, skew), PreconditionError);
}

TEST_CASE("least congruence") {
  Retr const       t;
  Congruence const L = least_congruence(t.cat, t.seed());
  CHECK(L.non_singleton_classes() == std::vector<std::vector<MorphismId>>{{t.idb, t.e}});
  CHECK(L.num_classes() == 4);

  CHECK(least_congruence(t.cat, Precongruence(t.cat.num_morphisms()))
        == Congruence::discrete(t.cat));

  auto const    span = load_fixture("f_span");
  Precongruence ff(span.cat.num_morphisms());
  ff.add(span.cat.morphism_id("f"), span.cat.morphism_id("f"));
  CHECK(least_congruence(span.cat, ff) == Congruence::discrete(span.cat));
}

TEST_CASE("quotient by the retraction congruence is the isomorphism") {
  Retr const t;
  auto const q = quotient(t.cat, least_congruence(t.cat, t.seed()));
  CHECK(q.quotient.num_morphisms() == 4);
  CHECK(find_isomorphism(q.quotient, load_fixture("f_iso").cat).has_value());
  CHECK_FALSE(check_functor(t.cat, q.quotient, q.projection).has_value());
  CHECK(q.projection.on_morphisms[t.e] == q.projection.on_morphisms[t.idb]);
  CHECK(q.quotient.name(q.projection.on_morphisms[t.e]) == "id:b");
}

TEST_CASE("discrete quotients reproduce the category") {
  for (auto const& stem : {"f_id", "f_retr", "f_span"}) {
    auto const f = load_fixture(stem);
    auto const q = quotient(f.cat, Congruence::discrete(f.cat));
    CHECK(q.quotient.num_morphisms() == f.cat.num_morphisms());
    CHECK(find_isomorphism(f.cat, q.quotient).has_value());
  }
}

TEST_CASE("kernel congruences") {
  Retr const       t;
  Congruence const L = least_congruence(t.cat, t.seed());
  CHECK(kernel_congruence(t.cat, quotient(t.cat, L).projection) == L);

  CatFunctor identity{{0, 1}, {}};
  for (MorphismId m = 0; m < t.cat.num_morphisms(); ++m) {
    identity.on_morphisms.push_back(m);
  }
  CHECK(kernel_congruence(t.cat, identity) == Congruence::discrete(t.cat));

  auto const id = load_fixture("f_id");
  CHECK(kernel_congruence(id.cat, CatFunctor{{0, 1}, {0, 1}}) == Congruence::discrete(id.cat));
}

TEST_CASE("sigma of a relation") {
  Retr const        t;
  MorphismSet const sigma = sigma_of(t.cat, t.seed());
  CHECK(sigma.size() == 5);

  auto const iso = load_fixture("f_iso");
  CHECK(sigma_of(iso.cat, Precongruence(iso.cat.num_morphisms())).size() == 4);
  CHECK(sigma_of(t.cat, Precongruence(t.cat.num_morphisms())).members()
        == std::vector<MorphismId>{t.ida, t.idb});

  auto const span = load_fixture("f_span");
  CHECK(sigma_of(span.cat, Precongruence(span.cat.num_morphisms())) == span.cat.identities());

  CHECK(homotopy_inverse(t.cat, least_congruence(t.cat, t.seed()), t.s) == t.r);
}

TEST_CASE("congruence recognition") {
  Retr const t;
  CHECK(is_congruence(t.cat, least_congruence(t.cat, t.seed()).as_relation()).holds);

  CongruenceCheck const raw = is_congruence(t.cat, t.seed());
  CHECK_FALSE(raw.holds);
  CHECK(raw.witness.has_value());

  Precongruence full = Congruence::discrete(t.cat).as_relation();
  full.add(t.e, t.idb);
  full.add(t.idb, t.e);
  CHECK(is_congruence(t.cat, full).holds);

  Precongruence lopsided = Congruence::discrete(t.cat).as_relation();
  lopsided.add(t.e, t.idb);
  CHECK_FALSE(is_congruence(t.cat, lopsided).holds);
}

TEST_CASE("partitions that are not closed are rejected") {
  auto const f = load_fixture("f_chain");
  std::vector<std::size_t> labels(f.cat.num_morphisms());
  for (MorphismId m = 0; m < labels.size(); ++m) {
    labels[m] = m;
  }
  labels[f.cat.morphism_id("qp")] = labels[f.cat.morphism_id("p")];
  CHECK_THROWS_AS(Congruence::from_partition(f.cat, labels), ValidationError);
}

TEST_CASE("least congruence laws on random instances") {
  std::mt19937 rng(5);
  for (int i = 0; i < 150; ++i) {
    FinCat const        cat = hocat::testing::random_category(rng, {});
    Precongruence const P   = hocat::testing::random_precongruence(rng, cat, 2);
    Precongruence       Q   = P;
    Q.add_all(hocat::testing::random_precongruence(rng, cat, 2));

    Congruence const L = least_congruence(cat, P);
    CHECK(contains_relation(L, P));
    CHECK(least_congruence(cat, L.as_relation()) == L);
    CHECK(L.refines(least_congruence(cat, Q)));
    CHECK(is_congruence(cat, L.as_relation()).holds);
    CHECK(kernel_congruence(cat, quotient(cat, L).projection) == L);
  }
}

TEST_CASE("least congruence is the minimum among all congruences") {
  std::mt19937 rng(9);
  hocat::testing::RandomSpec spec;
  spec.max_morphisms = 8;
  int checked = 0;
  while (checked < 40) {
    FinCat const cat = hocat::testing::random_category(rng, spec);
    auto const   all = hocat::testing::all_congruences(cat);
    Precongruence const P = hocat::testing::random_precongruence(rng, cat, 2);
    Congruence const    L = least_congruence(cat, P);
    bool found = false;
    for (Congruence const& C : all) {
      if (contains_relation(C, P)) {
        CHECK(L.refines(C));
        found = found || C == L;
      }
    }
    CHECK(found);
    ++checked;
  }
}
