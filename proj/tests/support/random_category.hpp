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

#ifndef HOCAT_TESTS_RANDOM_CATEGORY_HPP_
#define HOCAT_TESTS_RANDOM_CATEGORY_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hocat/congruence.hpp"
#include "hocat/fincat.hpp"
#include "hocat/weq.hpp"

namespace hocat::testing {

  struct RandomSpec {
    std::size_t max_objects   = 3;
    std::size_t max_set_size  = 3;
    std::size_t max_morphisms = 12;
    std::size_t generators    = 3;
  };

  // A random subcategory of finite sets: objects are small sets and the
  // morphisms are the composition closure of a few random functions. Returns
  // nullopt when the closure exceeds max_morphisms.
  std::optional<FinCat> random_concrete_category(std::mt19937& rng, RandomSpec const& spec);

  // Retries until a category within bounds is produced.
  FinCat random_category(std::mt19937& rng, RandomSpec const& spec);

  // Closure of seeds (plus identities) under composition and
  // two-out-of-three.
  MorphismSet two_of_three_closure(FinCat const& cat, MorphismSet seeds);

  // W generated by random morphisms.
  MorphismSet random_weq(std::mt19937& rng, FinCat const& cat);

  // W generated by random split morphisms; may still fail split
  // generation after closing.
  MorphismSet random_split_weq(std::mt19937& rng, FinCat const& cat);

  struct Instance {
    FinCat      cat;
    MorphismSet weq;
  };

  // Random category with a split-generated W, found by rejection.
  Instance random_split_generated(std::mt19937& rng, RandomSpec const& spec);

  // Every congruence of cat, by enumerating set partitions of each hom-set
  // and keeping the composition-closed combinations. Meant for at most
  // eight morphisms.
  std::vector<Congruence> all_congruences(FinCat const& cat);

  // Random precongruence of parallel pairs.
  Precongruence random_precongruence(std::mt19937& rng, FinCat const& cat, std::size_t pairs);

  // Loads a shipped fixture by file stem.
  struct Fixture {
    std::string                 name;
    FinCat                      cat;
    MorphismSet                 weq;
  };
  Fixture load_fixture(std::string const& stem);
  std::filesystem::path fixture_path(std::string const& stem);
  std::string           fixture_text(std::string const& stem);
  std::vector<std::string> fixture_names();

}  // namespace hocat::testing

#endif  // HOCAT_TESTS_RANDOM_CATEGORY_HPP_
