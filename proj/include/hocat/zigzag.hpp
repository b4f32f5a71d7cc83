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

#ifndef HOCAT_ZIGZAG_HPP_
#define HOCAT_ZIGZAG_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hocat/fincat.hpp"
#include "hocat/weq.hpp"

namespace hocat {

  struct WhiteheadCertificate;

  enum class Direction : std::uint8_t { forward, backward };

  struct Step {
    MorphismId morphism;
    Direction  direction;

    bool operator==(Step const&) const = default;
  };

  // A word of forward morphisms and backward weak equivalences. A backward
  // step traverses its morphism from codomain to domain.
  class Zigzag {
   public:
    Zigzag() = default;

    // Checks the endpoints chain and every backward morphism is in W;
    // throws PreconditionError otherwise.
    Zigzag(FinCat const&      cat,
           MorphismSet const& weq,
           ObjectId           source,
           ObjectId           target,
           std::vector<Step>  steps);

    static Zigzag empty_at(ObjectId x) {
      Zigzag z;
      z.source_ = z.target_ = x;
      return z;
    }
    // The length one zigzag of f.
    static Zigzag of(FinCat const& cat, MorphismId f);

    [[nodiscard]] ObjectId source() const noexcept {
      return source_;
    }
    [[nodiscard]] ObjectId target() const noexcept {
      return target_;
    }
    [[nodiscard]] std::vector<Step> const& steps() const noexcept {
      return steps_;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return steps_.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return steps_.empty();
    }

    // The object reached after the first i steps.
    [[nodiscard]] ObjectId object_at(FinCat const& cat, std::size_t i) const;

    bool operator==(Zigzag const&) const = default;

    // No checks; callers maintain the invariants themselves.
    static Zigzag unchecked(ObjectId source, ObjectId target, std::vector<Step> steps) {
      Zigzag z;
      z.source_ = source;
      z.target_ = target;
      z.steps_  = std::move(steps);
      return z;
    }

   private:
    ObjectId          source_ = 0;
    ObjectId          target_ = 0;
    std::vector<Step> steps_;
  };

  // Move i (omit an identity), move ii (compose two same-direction maps)
  // and move iii (cancel a weak equivalence appearing in both directions).
  enum class MoveKind : std::uint8_t { omit_identity, compose, cancel_pair };

  // A move together with all data needed to apply or undo it.
  //   omit_identity: steps[position] is (first, direction), an identity.
  //   compose:       steps[position], steps[position + 1] are (first,
  //                  direction), (second, direction) and they compose to
  //                  (result, direction).
  //   cancel_pair:   steps[position], steps[position + 1] are first in
  //                  direction, then first in the opposite direction.
  // apply == false means the inverse operation: insert or split.
  struct Move {
    MoveKind    kind;
    bool        apply;
    std::size_t position;
    Direction   direction;
    MorphismId  first  = kNoMorphism;
    MorphismId  second = kNoMorphism;
    MorphismId  result = kNoMorphism;

    bool operator==(Move const&) const = default;
  };

  [[nodiscard]] Move inverse(Move const& m);

  struct MoveTrace {
    std::vector<Move> moves;

    bool operator==(MoveTrace const&) const = default;
  };

  // Throws InapplicableMove if the move does not apply to z.
  Zigzag apply_move(FinCat const&      cat,
                    MorphismSet const& weq,
                    Zigzag const&      z,
                    Move const&        move);

  Zigzag replay(FinCat const&      cat,
                MorphismSet const& weq,
                Zigzag const&      start,
                MoveTrace const&   trace);

  // Every move applicable to z, inverse moves included.
  std::vector<Move> enumerate_moves(FinCat const&      cat,
                                    MorphismSet const& weq,
                                    Zigzag const&      z);

  struct EquivalenceResult {
    bool        equivalent = false;
    MoveTrace   trace;     // z1 -> z2 when equivalent
    std::size_t explored = 0;
  };

  // Bidirectional breadth-first search over the move graph using at most
  // budget moves in total. A negative answer only means "unknown". Throws
  // PreconditionError if the endpoints differ.
  EquivalenceResult bounded_equiv(FinCat const&      cat,
                                  MorphismSet const& weq,
                                  Zigzag const&      z1,
                                  Zigzag const&      z2,
                                  std::size_t        budget);

  // Decides bounded equivalence for every pair of the given parallel
  // morphisms at once. Each radius ceil(budget / 2) ball is explored a
  // single time, so hom-sets with many members cost one search per member.
  // related[i][j] agrees with bounded_equiv on the one-step zigzags.
  struct BoundedRelation {
    std::vector<MorphismId>        members;
    std::vector<std::vector<bool>> related;
    std::size_t                    explored = 0;
  };

  BoundedRelation bounded_relation(FinCat const&                  cat,
                                   MorphismSet const&             weq,
                                   std::vector<MorphismId> const& parallel,
                                   std::size_t                    budget);

  struct Reduction {
    Zigzag    zigzag;  // empty, or a single forward step
    MoveTrace trace;
  };

  // Replaces backward split weak equivalences by their forward partners,
  // expanding composites through the certificate first, then composes the
  // forward word. Throws PreconditionError for backward morphisms without a
  // decomposition.
  Reduction reduce_backward_splits(FinCat const&           cat,
                                   MorphismSet const&      weq,
                                   SplitCertificate const& splits,
                                   Zigzag const&           z);

  // Classes of the certified congruence inside C(X, Y).
  std::vector<std::vector<MorphismId>> ho_hom(FinCat const&               cat,
                                              WhiteheadCertificate const& cert,
                                              ObjectId                    x,
                                              ObjectId                    y);

  struct NonFullnessWitness {
    ObjectId from;
    ObjectId to;
    Zigzag   zigzag;
  };

  // A pair (X, Y) with C(X, Y) empty that is nevertheless joined by a
  // zigzag. Pairs are scanned in lexicographic order and the zigzag is a
  // shortest one.
  std::optional<NonFullnessWitness> nonfullness_witness(FinCat const&      cat,
                                                        MorphismSet const& weq);

  // Shortest zigzag from x to y, if any.
  std::optional<Zigzag> find_zigzag(FinCat const&      cat,
                                    MorphismSet const& weq,
                                    ObjectId           x,
                                    ObjectId           y);

  // Text form: whitespace separated ">name" (forward) and "<name"
  // (backward) tokens. Throws ParseError.
  Zigzag parse_zigzag(FinCat const&      cat,
                      MorphismSet const& weq,
                      ObjectId           source,
                      ObjectId           target,
                      std::string const& text);
  std::string format_zigzag(FinCat const& cat, Zigzag const& z);
  std::string format_move(FinCat const& cat, Move const& m);

}  // namespace hocat

#endif  // HOCAT_ZIGZAG_HPP_
