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

#ifndef HOCAT_CONGRUENCE_HPP_
#define HOCAT_CONGRUENCE_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hocat/fincat.hpp"

namespace hocat {

  using MorphismPair = std::pair<MorphismId, MorphismId>;

  // (min, max) order.
  constexpr MorphismPair canonical(MorphismId f, MorphismId g) noexcept {
    return f < g ? MorphismPair{f, g} : MorphismPair{g, f};
  }

  // A binary relation on the morphisms of a category, relating only
  // parallel morphisms. Pairs are stored exactly as added (ordered, possibly
  // reflexive); the closure operators below return relations holding only
  // canonical pairs of distinct morphisms.
  class Precongruence {
   public:
    Precongruence() = default;
    explicit Precongruence(std::size_t universe) : universe_(universe) {}

    void add(MorphismId f, MorphismId g);
    void add_all(Precongruence const& other);

    [[nodiscard]] bool contains(MorphismId f, MorphismId g) const {
      return pairs_.contains({f, g});
    }
    [[nodiscard]] std::set<MorphismPair> const& pairs() const noexcept {
      return pairs_;
    }
    // Canonical pairs of distinct morphisms related in either order.
    [[nodiscard]] std::set<MorphismPair> distinct_pairs() const;
    [[nodiscard]] std::size_t universe() const noexcept {
      return universe_;
    }
    [[nodiscard]] bool empty() const noexcept {
      return pairs_.empty();
    }

    bool operator==(Precongruence const&) const = default;

   private:
    std::size_t            universe_ = 0;
    std::set<MorphismPair> pairs_;
  };

  // Throws PreconditionError if some related pair is not parallel.
  void check_parallel(FinCat const& cat, Precongruence const& R);

  // A congruence, stored as a partition of the morphisms into classes.
  // Instances only come from constructors that certify the partition is
  // inside hom-sets and closed under composition.
  class Congruence {
   public:
    Congruence() = default;

    // Equality.
    static Congruence discrete(FinCat const& cat);

    // labels[m] is an arbitrary class label for m. Throws ValidationError if
    // a class is not inside one hom-set or the partition is not closed
    // under composition.
    static Congruence from_partition(FinCat const&                 cat,
                                     std::vector<std::size_t> const& labels);

    [[nodiscard]] bool related(MorphismId f, MorphismId g) const {
      return class_of_.at(f) == class_of_.at(g);
    }
    [[nodiscard]] std::size_t class_of(MorphismId m) const {
      return class_of_.at(m);
    }
    [[nodiscard]] std::size_t num_classes() const noexcept {
      return classes_.size();
    }
    [[nodiscard]] std::size_t universe() const noexcept {
      return class_of_.size();
    }
    // Classes ordered by least member; members ascending.
    [[nodiscard]] std::vector<std::vector<MorphismId>> const& classes()
        const noexcept {
      return classes_;
    }
    [[nodiscard]] std::vector<std::vector<MorphismId>> non_singleton_classes()
        const;

    // Every related ordered pair, reflexive ones included.
    [[nodiscard]] Precongruence as_relation() const;

    // True if every pair related here is related in other.
    [[nodiscard]] bool refines(Congruence const& other) const;

    bool operator==(Congruence const&) const = default;

   private:
    friend Congruence least_congruence(FinCat const&, Precongruence const&);
    friend Congruence kernel_congruence(FinCat const&, CatFunctor const&);
    explicit Congruence(std::vector<std::size_t> const& labels);

    std::vector<std::size_t>             class_of_;
    std::vector<std::vector<MorphismId>> classes_;
  };

  struct QuotientResult {
    FinCat     quotient;
    CatFunctor projection;  // identity on objects
  };

  // R^c: the pairs (v∘f'∘u, v∘g'∘u) for f' R g' and all composable u, v.
  Precongruence close_composition(FinCat const& cat, Precongruence const& R);

  // R': the least congruence containing R.
  Congruence least_congruence(FinCat const& cat, Precongruence const& R);

  // Classes become morphisms, named after the identity they contain or
  // otherwise after their least member. Throws PreconditionError if R is
  // not closed under composition on cat.
  QuotientResult quotient(FinCat const& cat, Congruence const& R);

  // f ~ g iff f, g are parallel and F(f) = F(g).
  Congruence kernel_congruence(FinCat const& source, CatFunctor const& F);

  // Least-index g with g∘f ~ id and f∘g ~ id, if any.
  std::optional<MorphismId> homotopy_inverse(FinCat const&     cat,
                                             Congruence const& L,
                                             MorphismId        f);

  // σR: morphisms invertible modulo the least congruence containing R.
  MorphismSet sigma_of(FinCat const& cat, Precongruence const& R);
  MorphismSet sigma_of(FinCat const& cat, Congruence const& L);

  struct CongruenceCheck {
    bool                        holds = true;
    std::string                 violation;
    std::optional<MorphismPair> witness;
  };

  // Checks the relation exactly as stored: reflexive, symmetric and
  // transitive on each hom-set, and closed under composition.
  CongruenceCheck is_congruence(FinCat const& cat, Precongruence const& R);

}  // namespace hocat

#endif  // HOCAT_CONGRUENCE_HPP_
