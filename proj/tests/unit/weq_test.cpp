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
#include <set>

#include "doctest.h"
#include "random_category.hpp"

#include "hocat/errors.hpp"
#include "hocat/weq.hpp"

using namespace hocat;
using hocat::testing::load_fixture;

namespace {

  WeqFamily family_of(FinCat const& cat, std::vector<std::string> const& names) {
    return check_weq_axioms(cat, names);
  }

}  // namespace

TEST_CASE("axioms on the retraction") {
  FinCat const cat = load_fixture("f_retr").cat;

  WeqFamily const full = family_of(cat, {"s", "r", "e"});
  CHECK(full.report.homotopical());
  CHECK(full.report.inserted_identities.size() == 2);
  CHECK(full.members.size() == 5);

  WeqFamily const partial = family_of(cat, {"s", "r"});
  REQUIRE_FALSE(partial.report.two_of_three());
  auto const& w = *partial.report.two_of_three_failure;
  CHECK(w.first == cat.morphism_id("r"));
  CHECK(w.second == cat.morphism_id("s"));
  CHECK(w.composite == cat.morphism_id("e"));
  CHECK(w.missing == cat.morphism_id("e"));
  CHECK_THROWS_AS(require_weak_equivalences(partial), PreconditionError);

  CHECK_THROWS_AS(family_of(cat, {"nope"}), PreconditionError);
}

TEST_CASE("identities alone") {
  FinCat const cat = load_fixture("f_id").cat;
  CHECK(family_of(cat, {}).report.homotopical());
}

TEST_CASE("weak invertibility is reported separately") {
  FinCat const    iso    = load_fixture("f_iso").cat;
  WeqFamily const family = family_of(iso, {});
  CHECK(family.report.category_with_weak_equivalences());
  CHECK_FALSE(family.report.homotopical());
  REQUIRE(family.report.weak_invertibility_failure.has_value());
  CHECK_FALSE(family.members.contains(family.report.weak_invertibility_failure->f));

  FinCat const monoid = load_fixture("monoid_t").cat;
  CHECK_FALSE(family_of(monoid, {}).report.homotopical());
  CHECK(family_of(monoid, {"t"}).report.homotopical());
}

TEST_CASE("splits") {
  FinCat const retr = load_fixture("f_retr").cat;
  std::vector<SplitPair> const splits = find_splits(retr);
  std::set<std::pair<std::string, std::string>> names;
  for (auto const& p : splits) {
    names.insert({retr.name(p.section), retr.name(p.retraction)});
  }
  CHECK(names
        == std::set<std::pair<std::string, std::string>>{
            {"id:a", "id:a"}, {"id:b", "id:b"}, {"s", "r"}});

  FinCat const iso = load_fixture("f_iso").cat;
  CHECK(find_splits(iso).size() == 4);

  FinCat const span = load_fixture("f_span").cat;
  CHECK(find_splits(span).size() == 3);
}

TEST_CASE("split generation certificates") {
  FinCat const    retr   = load_fixture("f_retr").cat;
  WeqFamily const family = family_of(retr, {"s", "r", "e"});
  SplitGeneration const g = check_split_generated(retr, family);
  REQUIRE(g.holds());
  auto const& cert = *g.certificate;
  CHECK(cert.decompositions.at(retr.morphism_id("e"))
        == std::vector<MorphismId>{retr.morphism_id("r"), retr.morphism_id("s")});
  CHECK(cert.decompositions.at(retr.morphism_id("id:a"))
        == std::vector<MorphismId>{retr.morphism_id("id:a")});
  SplitWeq const* s = cert.find_split(retr.morphism_id("s"));
  REQUIRE(s != nullptr);
  CHECK(s->kind == SplitKind::section);
  CHECK(s->partner == retr.morphism_id("r"));

  FinCat const          span = load_fixture("f_span").cat;
  SplitGeneration const fail = check_split_generated(span, family_of(span, {"f"}));
  CHECK_FALSE(fail.holds());
  CHECK(fail.unreachable == span.morphism_id("f"));

  FinCat const          id = load_fixture("f_id").cat;
  SplitGeneration const trivial = check_split_generated(id, family_of(id, {}));
  REQUIRE(trivial.holds());
  CHECK(trivial.certificate->decompositions.size() == 2);

  CHECK_THROWS_AS(check_split_generated(retr, family_of(retr, {"s", "r"})), PreconditionError);
}

TEST_CASE("split scan agrees with a direct scan on random categories") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    FinCat const cat = hocat::testing::random_category(rng, {});
    std::set<std::pair<MorphismId, MorphismId>> direct;
    for (MorphismId s = 0; s < cat.num_morphisms(); ++s) {
      for (MorphismId r = 0; r < cat.num_morphisms(); ++r) {
        if (cat.composable(r, s) && cat.is_identity(cat.compose(r, s))) {
          direct.insert({s, r});
        }
      }
    }
    std::set<std::pair<MorphismId, MorphismId>> found;
    for (auto const& p : find_splits(cat)) {
      found.insert({p.section, p.retraction});
    }
    CHECK(found == direct);
  }
}

TEST_CASE("decompositions recompose on random split-generated instances") {
  std::mt19937 rng(4);
  for (int i = 0; i < 100; ++i) {
    auto const      inst   = hocat::testing::random_split_generated(rng, {});
    WeqFamily const family = check_weq_axioms(inst.cat, inst.weq);
    SplitGeneration const g = check_split_generated(inst.cat, family);
    REQUIRE(g.holds());
    for (auto const& [w, path] : g.certificate->decompositions) {
      REQUIRE_FALSE(path.empty());
      CHECK(compose_path(inst.cat, inst.cat.dom(w), path) == w);
      for (MorphismId m : path) {
        CHECK(g.certificate->find_split(m) != nullptr);
      }
    }
    CHECK(g.certificate->decompositions.size() == family.members.size());
  }
}
