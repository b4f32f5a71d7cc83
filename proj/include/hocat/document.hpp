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

#ifndef HOCAT_DOCUMENT_HPP_
#define HOCAT_DOCUMENT_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hocat/fincat.hpp"

namespace hocat {

  // Unvalidated contents of a category description file. Names are kept as
  // strings; identities are already synthesised and come first, in object
  // order, followed by the declared morphisms in file order.
  struct RawMorphism {
    std::string name;
    std::string dom;
    std::string cod;
  };

  struct RawComposite {
    std::string after;
    std::string before;
    std::string equals;
  };

  struct RawSubcategory {
    std::vector<std::string>                objects;
    std::optional<std::vector<std::string>> morphisms;
  };

  struct RawDeformationLink {
    std::string                        direction;  // "left" or "right"
    std::map<std::string, std::string> on_objects;
    std::map<std::string, std::string> on_morphisms;
    std::map<std::string, std::string> theta;
    std::optional<bool>                functorial;
    std::optional<RawSubcategory>      target;
  };

  struct RawCategory {
    std::vector<std::string>        objects;
    std::vector<RawMorphism>        morphisms;
    std::vector<RawComposite>       composition;
    std::vector<std::string>        weak_equivalences;
    std::optional<RawSubcategory>   subcategory;
    std::vector<RawDeformationLink> deformation;
  };

  // Throws ParseError on malformed documents, duplicate ids and references
  // to undeclared objects or morphisms.
  RawCategory load_spec(nlohmann::json const& document);
  RawCategory load_spec_text(std::string_view text);
  RawCategory load_spec_file(std::filesystem::path const& path);

  // Completes the table with the identity laws and checks every category
  // axiom. Throws ValidationError.
  FinCat validate_category(RawCategory const& raw);

  // Name resolution against a validated category; throws ParseError.
  MorphismSet resolve_morphisms(FinCat const&                 cat,
                                std::span<std::string const> names);
  std::vector<ObjectId> resolve_objects(FinCat const&                 cat,
                                        std::span<std::string const> names);

  // Serialises cat (and optionally W) back into the document format.
  nlohmann::json to_document(FinCat const&      cat,
                             MorphismSet const* weq = nullptr);

}  // namespace hocat

#endif  // HOCAT_DOCUMENT_HPP_
