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
#include <string>

#include "doctest.h"
#include "random_category.hpp"

#include "hocat/document.hpp"
#include "hocat/errors.hpp"
#include "hocat/fincat.hpp"

using namespace hocat;
using hocat::testing::fixture_text;
using hocat::testing::load_fixture;

namespace {

  std::string replace_once(std::string text, std::string const& from, std::string const& to) {
    auto const at = text.find(from);
    REQUIRE(at != std::string::npos);
    return text.replace(at, from.size(), to);
  }

}  // namespace

TEST_CASE("identities are synthesised first with reserved names") {
  RawCategory const raw = load_spec_text(fixture_text("f_id"));
  REQUIRE(raw.morphisms.size() == 2);
  CHECK(raw.morphisms[0].name == "id:a");
  CHECK(raw.morphisms[1].name == "id:b");

  FinCat const cat = validate_category(raw);
  CHECK(cat.num_morphisms() == 2);
  CHECK(cat.is_identity(cat.morphism_id("id:a")));
}

TEST_CASE("retraction fixture loads five morphisms") {
  RawCategory const raw = load_spec_text(fixture_text("f_retr"));
  CHECK(raw.morphisms.size() == 5);
  CHECK(raw.composition.size() == 5);
  CHECK(validate_category(raw).num_morphisms() == 5);
  CHECK(load_fixture("f_iso").cat.num_morphisms() == 4);
}

TEST_CASE("malformed documents are parse errors") {
  std::string const text = fixture_text("f_retr");
  CHECK_THROWS_AS(load_spec_text(replace_once(text, R"("cod": "b"})", R"("cod": "z"})")),
                  ParseError);
  CHECK_THROWS_AS(load_spec_text("{\"objects\": [\"a\", \"a\"]}"), ParseError);
  CHECK_THROWS_AS(load_spec_text("not json"), ParseError);
  CHECK_NOTHROW(load_spec_text(R"({"objects": ["a"], "morphisms": [
      {"name": "id:a", "dom": "a", "cod": "a"}]})"));
  CHECK_THROWS_AS(load_spec_text(R"({"objects": ["a", "b"], "morphisms": [
      {"name": "id:a", "dom": "a", "cod": "b"}]})"),
                  ParseError);
}

TEST_CASE("unlawful tables are rejected") {
  std::string const text = fixture_text("f_retr");
  SUBCASE("sr = id_b breaks the laws") {
    auto const raw = load_spec_text(replace_once(
        text, R"({"after": "s", "before": "r", "equals": "e"})",
        R"({"after": "s", "before": "r", "equals": "id:b"})"));
    CHECK_THROWS_AS(validate_category(raw), ValidationError);
  }
  SUBCASE("missing composite") {
    auto const raw = load_spec_text(
        replace_once(text, R"({"after": "e", "before": "e", "equals": "e"},)", ""));
    CHECK_THROWS_WITH_AS(validate_category(raw), doctest::Contains("e"), ValidationError);
  }
  SUBCASE("composite with wrong endpoints") {
    auto const raw = load_spec_text(replace_once(
        text, R"({"after": "e", "before": "e", "equals": "e"})",
        R"({"after": "e", "before": "e", "equals": "s"})"));
    CHECK_THROWS_AS(validate_category(raw), ValidationError);
  }
}

TEST_CASE("hom sets") {
  auto const span = load_fixture("f_span");
  CHECK(hom_set(span.cat, span.cat.object_id("a"), span.cat.object_id("b")).empty());

  auto const retr = load_fixture("f_retr");
  ObjectId const b = retr.cat.object_id("b");
  CHECK(hom_set(retr.cat, b, b)
        == std::vector<MorphismId>{retr.cat.morphism_id("id:b"), retr.cat.morphism_id("e")});

  auto const id = load_fixture("f_id");
  ObjectId const a = id.cat.object_id("a");
  CHECK(hom_set(id.cat, a, a) == std::vector<MorphismId>{id.cat.morphism_id("id:a")});
  CHECK_THROWS_AS(hom_set(id.cat, a, 7), PreconditionError);
}

TEST_CASE("compose_path folds left to right") {
  auto const  f   = load_fixture("f_retr");
  auto const& cat = f.cat;
  MorphismId const s = cat.morphism_id("s");
  MorphismId const r = cat.morphism_id("r");
  ObjectId const   a = cat.object_id("a");
  ObjectId const   b = cat.object_id("b");

  std::vector<MorphismId> const sr{s, r};
  std::vector<MorphismId> const rs{r, s};
  CHECK(compose_path(cat, a, sr) == cat.morphism_id("id:a"));
  CHECK(compose_path(cat, b, rs) == cat.morphism_id("e"));
  CHECK(compose_path(cat, a, {}) == cat.morphism_id("id:a"));
  std::vector<MorphismId> const ss{s, s};
  CHECK_THROWS_AS(compose_path(cat, a, ss), PreconditionError);
  CHECK_THROWS_AS(compose_path(cat, b, sr), PreconditionError);
}

TEST_CASE("opposite category") {
  auto const span = load_fixture("f_span");
  auto const [op, op_weq] = opposite(span.cat, span.weq);
  MorphismId const f = span.cat.morphism_id("f");
  CHECK(op.dom(f) == span.cat.object_id("a"));
  CHECK(op.cod(f) == span.cat.object_id("c"));
  CHECK(op_weq == span.weq);

  auto const retr = load_fixture("f_retr");
  CHECK(opposite(opposite(retr.cat)) == retr.cat);

  auto const iso = load_fixture("f_iso");
  CHECK(find_isomorphism(iso.cat, opposite(iso.cat)).has_value());
  CHECK_FALSE(find_isomorphism(span.cat, opposite(span.cat)).has_value());
}

TEST_CASE("functor checks") {
  auto const retr = load_fixture("f_retr");
  auto const iso  = load_fixture("f_iso");
  CHECK_FALSE(find_isomorphism(retr.cat, iso.cat).has_value());

  CatFunctor identity;
  for (ObjectId x = 0; x < retr.cat.num_objects(); ++x) {
    identity.on_objects.push_back(x);
  }
  for (MorphismId m = 0; m < retr.cat.num_morphisms(); ++m) {
    identity.on_morphisms.push_back(m);
  }
  CHECK_FALSE(check_functor(retr.cat, retr.cat, identity).has_value());

  CatFunctor broken = identity;
  broken.on_morphisms[retr.cat.morphism_id("e")] = retr.cat.morphism_id("id:b");
  broken.on_morphisms[retr.cat.morphism_id("s")] = retr.cat.morphism_id("s");
  broken.on_morphisms[retr.cat.morphism_id("r")] = retr.cat.morphism_id("r");
  CHECK(check_functor(retr.cat, retr.cat, broken).has_value());
}

TEST_CASE("subcategories") {
  auto const     retr = load_fixture("f_retr");
  ObjectId const a    = retr.cat.object_id("a");
  std::vector<ObjectId> const objs{a};
  Subcategory const sub = make_subcategory(retr.cat, objs);
  CHECK(sub.cat.num_morphisms() == 1);
  CHECK(sub.morphisms == std::vector<MorphismId>{retr.cat.identity(a)});

  std::vector<ObjectId> const both{0, 1};
  std::vector<MorphismId> const missing_comp{retr.cat.identity(0), retr.cat.identity(1),
                                             retr.cat.morphism_id("s"),
                                             retr.cat.morphism_id("r")};
  CHECK_THROWS_AS(make_subcategory(retr.cat, both, missing_comp), ValidationError);
}

TEST_CASE("document round trip") {
  for (std::string const& stem : hocat::testing::fixture_names()) {
    CAPTURE(stem);
    auto const  f   = load_fixture(stem);
    auto const  doc = to_document(f.cat, &f.weq);
    FinCat const back = validate_category(load_spec(doc));
    CHECK(back == f.cat);
  }
}

TEST_CASE("random categories are lawful and hom sets partition morphisms") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    FinCat const cat = hocat::testing::random_category(rng, {});
    std::size_t  seen = 0;
    for (ObjectId a = 0; a < cat.num_objects(); ++a) {
      for (ObjectId b = 0; b < cat.num_objects(); ++b) {
        for (MorphismId m : cat.hom(a, b)) {
          CHECK(cat.dom(m) == a);
          CHECK(cat.cod(m) == b);
          ++seen;
        }
      }
    }
    CHECK(seen == cat.num_morphisms());
    std::size_t const n = cat.num_morphisms();
    for (MorphismId f = 0; f < n; ++f) {
      for (ObjectId c = 0; c < cat.num_objects(); ++c) {
        for (MorphismId g : cat.hom(cat.cod(f), c)) {
          for (ObjectId d = 0; d < cat.num_objects(); ++d) {
            for (MorphismId h : cat.hom(c, d)) {
              REQUIRE(cat.compose(h, cat.compose(g, f)) == cat.compose(cat.compose(h, g), f));
            }
          }
        }
      }
      CHECK(cat.compose(f, cat.identity(cat.dom(f))) == f);
      CHECK(cat.compose(cat.identity(cat.cod(f)), f) == f);
    }
    CHECK(opposite(opposite(cat)) == cat);
  }
}
