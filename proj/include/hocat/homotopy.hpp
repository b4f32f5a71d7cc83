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

#ifndef HOCAT_HOMOTOPY_HPP_
#define HOCAT_HOMOTOPY_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hocat/congruence.hpp"
#include "hocat/fincat.hpp"
#include "hocat/weq.hpp"
#include "hocat/zigzag.hpp"

namespace hocat {

  enum class Side { left, right };

  std::string_view to_string(Side side) noexcept;

  // A left fork at vertex A is ∂₀, ∂₁: A -> Ã and σ: Ã -> C in W with
  // σ∘∂₀ = σ∘∂₁ = α. A right fork at vertex B is d₀, d₁: B̃ -> B and
  // s: C -> B̃ in W with d₀∘s = d₁∘s = β. The fields hold the left names;
  // on the right side they hold the dual data (legs d₀, d₁, collapse s,
  // base β).
  struct Fork {
    Side       side;
    ObjectId   vertex;
    ObjectId   apex;
    MorphismId leg0;
    MorphismId leg1;
    MorphismId collapse;
    MorphismId base;

    bool operator==(Fork const&) const = default;
  };

  // Left: h: Ã -> B with h∘∂₀ = f and h∘∂₁ = g.
  // Right: k: A -> B̃ with d₀∘k = f and d₁∘k = g.
  struct HomotopyWitness {
    MorphismId f;
    MorphismId g;
    Fork       fork;
    MorphismId mediator;
  };

  // Pairs f ≠ g with σ∘f = σ∘g for some σ ∈ W (left), or f∘s = g∘s for
  // some s ∈ W (right).
  Precongruence r_left(FinCat const& cat, MorphismSet const& weq);
  Precongruence r_right(FinCat const& cat, MorphismSet const& weq);
  Precongruence r_seed(FinCat const& cat, MorphismSet const& weq, Side side);

  // R^c for the chosen side as the full ordered relation, reflexive pairs
  // included: (h∘∂₀, h∘∂₁) for ∂₀ R_ℓ ∂₁ on the left, dually on the right.
  Precongruence rc_relation(FinCat const& cat, MorphismSet const& weq, Side side);

  // The same relation as canonical pairs of distinct morphisms.
  Precongruence r_left_comp(FinCat const& cat, MorphismSet const& weq);
  Precongruence r_right_comp(FinCat const& cat, MorphismSet const& weq);

  // least_congruence(R_ℓ ∪ R_r).
  Congruence homotopy_congruence(FinCat const& cat, MorphismSet const& weq);

  struct WhiteheadCertificate {
    Congruence                       congruence;
    std::map<MorphismId, MorphismId> inverse_table;  // w ↦ least-index inverse
    Precongruence                    left_seed;
    Precongruence                    right_seed;
  };

  enum class WhiteheadStatus { certified, failed, inconclusive };

  std::string_view to_string(WhiteheadStatus status) noexcept;

  struct WhiteheadVerdict {
    WhiteheadStatus                     status;
    Congruence                          congruence;  // always a lower bound
    std::optional<WhiteheadCertificate> certificate;
    std::optional<NonFullnessWitness>   witness;
    // Weak equivalences with no inverse modulo the congruence.
    std::vector<MorphismId>             not_invertible;
  };

  // Requires axioms i and ii. Throws InternalError if the family is
  // split-generated and yet some weak equivalence is not invertible.
  WhiteheadVerdict certify_whitehead(FinCat const& cat, WeqFamily const& family);

  struct CoincidenceResult {
    bool                        holds = true;
    Congruence                  left;
    Congruence                  right;
    Congruence                  combined;
    std::optional<MorphismPair> differing;
  };

  // Compares the congruences generated by R_ℓ, R_r and their union.
  // Throws PreconditionError unless the family is split-generated.
  CoincidenceResult check_lr_coincide(FinCat const& cat, WeqFamily const& family);

  // Every fork of weak equivalences at vertex a (or, on the right, at the
  // codomain vertex a).
  std::vector<Fork> weq_forks(FinCat const&      cat,
                              MorphismSet const& weq,
                              ObjectId           vertex,
                              Side               side);

  // Least-index homotopy between f and g with respect to a fork of weak
  // equivalences, if one exists.
  std::optional<HomotopyWitness> find_homotopy(FinCat const&      cat,
                                               MorphismSet const& weq,
                                               Side               side,
                                               MorphismId         f,
                                               MorphismId         g);

  struct ForkCheck {
    bool                        holds = true;
    std::optional<MorphismPair> counterexample;
    std::optional<MorphismPair> second;  // common fork only
  };

  // Every pair related by R^c admits a homotopy over a fork of weak
  // equivalences.
  ForkCheck check_fork_condition(FinCat const& cat, MorphismSet const& weq, Side side);

  // Which pairs of R^c the common fork condition ranges over.
  //   distinct: unordered pairs of distinct morphisms; a fork carries such a
  //             pair if it carries a homotopy in either orientation.
  //   ordered:  all ordered pairs, reflexive ones included.
  enum class PairScope { distinct, ordered };

  // Every two pairs of R^c in one hom-set admit homotopies over a single
  // fork of weak equivalences. Transitivity of R^c is guaranteed once this
  // holds on both sides; one side alone does not suffice.
  ForkCheck check_common_fork(FinCat const&      cat,
                              MorphismSet const& weq,
                              Side               side,
                              PairScope          scope = PairScope::distinct);

  struct TransitivityCheck {
    bool                      holds = true;
    std::optional<MorphismId> f;
    std::optional<MorphismId> g;
    std::optional<MorphismId> h;  // f R g, g R h, but not f R h
  };

  TransitivityCheck check_rc_transitive(FinCat const& cat, MorphismSet const& weq, Side side);

  struct SaturationReport {
    // Morphisms outside W whose class is invertible in the quotient.
    std::vector<MorphismId> violations;
    // Set when the family is homotopical, split-generated and satisfies a
    // fork condition, so saturation is known in advance.
    bool predicted = false;

    [[nodiscard]] bool saturated() const noexcept {
      return violations.empty();
    }
  };

  // Throws PreconditionError when cert is null.
  SaturationReport check_saturation(FinCat const&               cat,
                                    WeqFamily const&            family,
                                    WhiteheadCertificate const* cert);

}  // namespace hocat

#endif  // HOCAT_HOMOTOPY_HPP_
