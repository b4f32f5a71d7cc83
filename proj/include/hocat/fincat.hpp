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

#ifndef HOCAT_FINCAT_HPP_
#define HOCAT_FINCAT_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hocat {

  // Objects and morphisms are dense indices into the owning FinCat; textual
  // names only appear at the document boundary.
  using ObjectId   = std::uint32_t;
  using MorphismId = std::uint32_t;

  inline constexpr MorphismId kNoMorphism
      = std::numeric_limits<MorphismId>::max();

  // Prefix of the reserved identity names, "id:<object>".
  inline constexpr std::string_view kIdentityPrefix = "id:";

  std::string identity_name(std::string_view object);

  // A subset of the morphisms of a fixed category, stored as a bitmap.
  class MorphismSet {
   public:
    MorphismSet() = default;
    explicit MorphismSet(std::size_t universe) : bits_(universe, false) {}
    MorphismSet(std::size_t universe, std::span<MorphismId const> members);

    [[nodiscard]] std::size_t universe() const noexcept {
      return bits_.size();
    }
    [[nodiscard]] bool contains(MorphismId m) const {
      return m < bits_.size() && bits_[m];
    }
    void insert(MorphismId m) {
      bits_.at(m) = true;
    }
    void erase(MorphismId m) {
      bits_.at(m) = false;
    }
    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] std::vector<MorphismId> members() const;

    // True if every member of this set is a member of other.
    [[nodiscard]] bool is_subset_of(MorphismSet const& other) const;

    bool operator==(MorphismSet const&) const = default;

   private:
    std::vector<bool> bits_;
  };

  struct MorphismInfo {
    std::string name;
    ObjectId    dom;
    ObjectId    cod;

    bool operator==(MorphismInfo const&) const = default;
  };

  // A finite category with a total composition table.
  //
  // Composition is written compose(g, f) and means "f first, then g"; it is
  // defined exactly when cod(f) == dom(g). Instances are immutable once
  // built and every law is checked on construction.
  class FinCat {
   public:
    FinCat() = default;

    // table[g * n + f] holds g∘f, or kNoMorphism when the pair is not
    // composable. Throws ValidationError naming the first violated law.
    static FinCat from_table(std::vector<std::string>  objects,
                             std::vector<MorphismInfo> morphisms,
                             std::vector<MorphismId>   identities,
                             std::vector<MorphismId>   table);

    [[nodiscard]] std::size_t num_objects() const noexcept {
      return objects_.size();
    }
    [[nodiscard]] std::size_t num_morphisms() const noexcept {
      return morphisms_.size();
    }

    [[nodiscard]] std::string const& object_name(ObjectId x) const {
      return objects_.at(x);
    }
    [[nodiscard]] MorphismInfo const& morphism(MorphismId m) const {
      return morphisms_.at(m);
    }
    [[nodiscard]] std::string const& name(MorphismId m) const {
      return morphisms_.at(m).name;
    }
    [[nodiscard]] ObjectId dom(MorphismId m) const {
      return morphisms_.at(m).dom;
    }
    [[nodiscard]] ObjectId cod(MorphismId m) const {
      return morphisms_.at(m).cod;
    }
    [[nodiscard]] std::vector<std::string> const& objects() const noexcept {
      return objects_;
    }

    [[nodiscard]] MorphismId identity(ObjectId x) const {
      return identities_.at(x);
    }
    [[nodiscard]] bool is_identity(MorphismId m) const {
      return identities_.at(dom(m)) == m;
    }

    [[nodiscard]] bool composable(MorphismId g, MorphismId f) const {
      return cod(f) == dom(g);
    }

    // g∘f. Throws PreconditionError if cod(f) != dom(g).
    [[nodiscard]] MorphismId compose(MorphismId g, MorphismId f) const;

    // Unchecked lookup; only valid for composable pairs.
    [[nodiscard]] MorphismId compose_unchecked(MorphismId g,
                                               MorphismId f) const noexcept {
      return table_[static_cast<std::size_t>(g) * morphisms_.size() + f];
    }

    [[nodiscard]] std::vector<MorphismId> const& hom(ObjectId a,
                                                     ObjectId b) const {
      return homs_.at(static_cast<std::size_t>(a) * objects_.size() + b);
    }

    [[nodiscard]] std::optional<ObjectId>   find_object(std::string_view) const;
    [[nodiscard]] std::optional<MorphismId> find_morphism(
        std::string_view) const;

    // Throws PreconditionError for unknown names.
    [[nodiscard]] ObjectId   object_id(std::string_view name) const;
    [[nodiscard]] MorphismId morphism_id(std::string_view name) const;

    [[nodiscard]] MorphismSet identities() const;

    bool operator==(FinCat const&) const = default;

   private:
    std::vector<std::string>             objects_;
    std::vector<MorphismInfo>            morphisms_;
    std::vector<MorphismId>              identities_;
    std::vector<MorphismId>              table_;
    std::vector<std::vector<MorphismId>> homs_;
  };

  // All morphisms A -> B. Throws PreconditionError for unknown objects.
  std::vector<MorphismId> hom_set(FinCat const& cat, ObjectId a, ObjectId b);

  // Left fold of composition along path (first element applied first). The
  // empty path at start is id_start. Throws PreconditionError when
  // consecutive endpoints do not match or the path does not begin at start.
  MorphismId compose_path(FinCat const&              cat,
                          ObjectId                   start,
                          std::span<MorphismId const> path);

  // Dual category: same indices and names, dom/cod swapped, composition
  // transposed. W is carried over unchanged.
  std::pair<FinCat, MorphismSet> opposite(FinCat const&      cat,
                                          MorphismSet const& weq);
  FinCat                         opposite(FinCat const& cat);

  // A functor between finite categories, stored as its two index maps.
  struct CatFunctor {
    std::vector<ObjectId>   on_objects;
    std::vector<MorphismId> on_morphisms;

    bool operator==(CatFunctor const&) const = default;
  };

  // Exhaustive functor-law check; returns a description of the first
  // violation or nullopt.
  std::optional<std::string> check_functor(FinCat const&     source,
                                           FinCat const&     target,
                                           CatFunctor const& functor);

  // Searches for an isomorphism of categories source -> target by
  // backtracking over object and morphism bijections.
  std::optional<CatFunctor> find_isomorphism(FinCat const& source,
                                             FinCat const& target);

  // A subcategory materialised as its own FinCat together with its
  // embedding into the parent (index i of the subcategory maps to
  // objects[i] / morphisms[i] of the parent).
  struct Subcategory {
    FinCat                  cat;
    std::vector<ObjectId>   objects;
    std::vector<MorphismId> morphisms;
  };

  // With morphisms == nullopt the full subcategory on objects is taken.
  // Throws ValidationError if identities are missing or composition leaves
  // the declared morphisms.
  Subcategory make_subcategory(
      FinCat const&                                 parent,
      std::span<ObjectId const>                     objects,
      std::optional<std::vector<MorphismId>> const& morphisms = std::nullopt);

  // Restriction of a parent morphism set along a subcategory embedding.
  MorphismSet restrict_to(Subcategory const& sub, MorphismSet const& parent);

}  // namespace hocat

#endif  // HOCAT_FINCAT_HPP_
