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

#ifndef HOCAT_DEFORMATION_HPP_
#define HOCAT_DEFORMATION_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hocat/congruence.hpp"
#include "hocat/document.hpp"
#include "hocat/fincat.hpp"
#include "hocat/homotopy.hpp"
#include "hocat/zigzag.hpp"

namespace hocat {

  inline constexpr ObjectId kNoObject = std::numeric_limits<ObjectId>::max();

  // A subcategory of the ambient category, in ambient indices.
  struct Stage {
    std::vector<ObjectId> objects;  // ascending
    MorphismSet           morphisms;

    [[nodiscard]] bool has_object(ObjectId x) const;
  };

  Stage whole_stage(FinCat const& cat);

  // Checks the stage is a subcategory and materialises it.
  Subcategory stage_category(FinCat const& cat, Stage const& stage);

  // One link C_{k-1} ↷ C_k. All maps are indexed by ambient ids; entries
  // outside the source stage hold kNoObject / kNoMorphism.
  struct Deformation {
    Side                    direction;
    Stage                   source;
    Stage                   target;
    std::vector<ObjectId>   on_objects;
    std::vector<MorphismId> on_morphisms;
    // Left: θ_X: rX -> X. Right: θ_X: X -> rX.
    std::vector<MorphismId> theta;
    bool                    functorial = false;
  };

  // Unchecked link data in ambient ids. Missing identity images default to
  // the identity of the image object.
  struct DeformationData {
    Side                                 direction = Side::left;
    std::vector<ObjectId>                on_objects;
    std::vector<MorphismId>              on_morphisms;
    std::vector<MorphismId>              theta;
    std::optional<bool>                  declared_functorial;
  };

  // Checks every condition on a pointwise deformation and computes the
  // functorial flag. Throws ValidationError naming the failing object or
  // morphism.
  Deformation validate_deformation(FinCat const&          cat,
                                   MorphismSet const&     weq,
                                   Stage const&           source,
                                   Stage const&           target,
                                   DeformationData const& data);

  // r = id, θ = id on the whole category.
  Deformation identity_deformation(FinCat const& cat);

  struct DeformationChain {
    std::vector<Deformation> links;
    Stage                    target;
    std::vector<ObjectId>    on_objects;    // composite r on objects
    std::vector<MorphismId>  on_morphisms;  // composite r on morphisms
    std::vector<Zigzag>      theta;         // θ_X as a zigzag rX -> X

    [[nodiscard]] bool functorial() const;
  };

  // Throws ValidationError when a link does not start where the previous
  // one ended.
  DeformationChain compose_chain(FinCat const&            cat,
                                 MorphismSet const&       weq,
                                 std::vector<Deformation> links);

  // Builds and validates the chain described by a document. The last link
  // targets the document's subcategory unless it names its own target;
  // other links default to the full subcategory on their image.
  DeformationChain load_chain(FinCat const&      cat,
                              MorphismSet const& weq,
                              RawCategory const& raw);

  // rP, applying r stepwise. The result lives in the target stage.
  Zigzag map_zigzag(FinCat const&      cat,
                    MorphismSet const& weq,
                    Deformation const& d,
                    Zigzag const&      p);
  Zigzag map_zigzag(FinCat const&           cat,
                    MorphismSet const&      weq,
                    DeformationChain const& chain,
                    Zigzag const&           p);

  // The reverse zigzag, read from target to source.
  Zigzag reversed(Zigzag const& z);

  // Ho(C, r): the objects of C, with C(X, Y) replaced by the classes of
  // C₀(rX, rY) under the certified congruence of C₀.
  struct HoCr {
    FinCat      category;
    CatFunctor  gamma_r;         // C -> category
    Subcategory c0;
    MorphismSet c0_weq;          // in c0 indices
    Congruence  c0_congruence;   // in c0 indices
    std::vector<MorphismId> representative;  // per morphism, in C₀ indices
  };

  // Throws PreconditionError when some link is not functorial.
  HoCr build_ho_cr(FinCat const&               cat,
                   MorphismSet const&          weq,
                   DeformationChain const&     chain,
                   WhiteheadCertificate const& cert0);

  struct InversionCheck {
    bool                      holds = true;
    std::optional<MorphismId> witness;  // w whose image is not invertible
  };

  InversionCheck check_inverts_w(HoCr const& hocr, MorphismSet const& weq);

  enum class LemmaOutcome { equivalent, unknown };

  // One conjugation instance: [f] against the θ-conjugate of
  // [rf] (forward), or [w] backward against its conjugate.
  struct LemmaInstance {
    MorphismId        morphism;
    Direction         direction;
    LemmaOutcome      outcome;
    EquivalenceResult search;
  };

  struct ConjugationReport {
    bool certified_route = false;
    bool holds           = false;
    // First failure on the certified route.
    std::string                failure;
    std::vector<LemmaInstance> instances;  // lemma route only
    // Functors between quotient(C, ~) and Ho(C, r), certified route only.
    std::optional<CatFunctor> phi;
    std::optional<CatFunctor> psi;
  };

  // With an ambient certificate, evaluates φ[f] = γ_r(f) and
  // ψ[q] = [θ_X⁻¹ q θ_Y] on quotient(C, ~) and checks they are mutually
  // inverse functors commuting with γ and γ_r. Without one, checks the
  // lemma instances with bounded zigzag equivalence.
  ConjugationReport check_conjugation(FinCat const&               cat,
                                      MorphismSet const&          weq,
                                      DeformationChain const&     chain,
                                      HoCr const&                 hocr,
                                      WhiteheadCertificate const* cert,
                                      std::size_t                 budget);

}  // namespace hocat

#endif  // HOCAT_DEFORMATION_HPP_
