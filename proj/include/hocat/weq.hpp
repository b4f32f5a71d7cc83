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

#ifndef HOCAT_WEQ_HPP_
#define HOCAT_WEQ_HPP_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hocat/fincat.hpp"

namespace hocat {

  // f first, then g; composite = g∘f; missing is the one of the three
  // that is not a weak equivalence.
  struct TwoOfThreeWitness {
    MorphismId first;
    MorphismId second;
    MorphismId composite;
    MorphismId missing;
  };

  // f ∉ W although f∘g ∈ W and h∘f ∈ W.
  struct WeakInvertibilityWitness {
    MorphismId f;
    MorphismId g;
    MorphismId h;
  };

  struct WeqAxiomReport {
    // Identities missing from the input family; they are inserted before
    // the other axioms are checked.
    std::vector<MorphismId>                 inserted_identities;
    std::optional<TwoOfThreeWitness>        two_of_three_failure;
    std::optional<WeakInvertibilityWitness> weak_invertibility_failure;

    [[nodiscard]] bool identities() const noexcept {
      return true;
    }
    [[nodiscard]] bool two_of_three() const noexcept {
      return !two_of_three_failure;
    }
    [[nodiscard]] bool weak_invertibility() const noexcept {
      return !weak_invertibility_failure;
    }
    // Axioms i and ii.
    [[nodiscard]] bool category_with_weak_equivalences() const noexcept {
      return identities() && two_of_three();
    }
    // Axioms i, ii and iii.
    [[nodiscard]] bool homotopical() const noexcept {
      return category_with_weak_equivalences() && weak_invertibility();
    }
  };

  struct WeqFamily {
    MorphismSet    members;
    WeqAxiomReport report;
  };

  WeqFamily check_weq_axioms(FinCat const& cat, MorphismSet const& weq);

  // Throws PreconditionError for unknown morphism names.
  WeqFamily check_weq_axioms(FinCat const&                cat,
                             std::span<std::string const> names);

  // Throws PreconditionError unless axioms i and ii hold.
  void require_weak_equivalences(WeqFamily const& family);

  struct SplitPair {
    MorphismId section;
    MorphismId retraction;

    bool operator==(SplitPair const&) const = default;
  };

  // Every (s, r) with r∘s an identity, ordered by (s, r).
  std::vector<SplitPair> find_splits(FinCat const& cat);

  enum class SplitKind { section, retraction };

  struct SplitWeq {
    MorphismId morphism;
    MorphismId partner;  // retraction of a section, section of a retraction
    SplitKind  kind;
  };

  struct SplitCertificate {
    std::vector<SplitWeq> split_weqs;
    // w ↦ split weak equivalences whose composite (first element applied
    // first) is w. Shortest available; identities decompose as themselves.
    std::map<MorphismId, std::vector<MorphismId>> decompositions;

    [[nodiscard]] SplitWeq const* find_split(MorphismId m) const;
  };

  struct SplitGeneration {
    std::optional<SplitCertificate> certificate;
    std::optional<MorphismId>       unreachable;  // set on failure

    [[nodiscard]] bool holds() const noexcept {
      return certificate.has_value();
    }
  };

  SplitGeneration check_split_generated(FinCat const&    cat,
                                        WeqFamily const& family);

}  // namespace hocat

#endif  // HOCAT_WEQ_HPP_
