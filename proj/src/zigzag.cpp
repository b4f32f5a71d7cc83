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

#include "hocat/zigzag.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include <fmt/format.h>

#include "hocat/errors.hpp"
#include "hocat/homotopy.hpp"

namespace hocat {

  namespace {

    constexpr Direction flip(Direction d) noexcept {
      return d == Direction::forward ? Direction::backward : Direction::forward;
    }

    char const* arrow(Direction d) noexcept {
      return d == Direction::forward ? ">" : "<";
    }

    // Object reached from x by one step.
    ObjectId advance(FinCat const& cat, ObjectId x, Step const& s) {
      (void) x;
      return s.direction == Direction::forward ? cat.cod(s.morphism)
                                               : cat.dom(s.morphism);
    }

    // Composite of two adjacent same-direction steps, in traversal order.
    MorphismId step_composite(FinCat const& cat,
                              Direction     dir,
                              MorphismId    first,
                              MorphismId    second) {
      return dir == Direction::forward ? cat.compose_unchecked(second, first)
                                       : cat.compose_unchecked(first, second);
    }

    bool steps_chain(FinCat const& cat,
                     Direction     dir,
                     MorphismId    first,
                     MorphismId    second) {
      return dir == Direction::forward ? cat.composable(second, first)
                                       : cat.composable(first, second);
    }

    // Search states are keyed by two bytes per step: morphism * 2 + backward.
    using Code = std::uint16_t;

    constexpr std::size_t kMaxSearchMorphisms = 1u << 15;

    Code code_of(MorphismId m, Direction d) {
      return static_cast<Code>(m * 2 + (d == Direction::backward ? 1 : 0));
    }

    void put(std::string& key, Code c) {
      key.push_back(static_cast<char>(c & 0xFF));
      key.push_back(static_cast<char>(c >> 8));
    }

    Code code_at(std::string const& key, std::size_t i) {
      return static_cast<Code>(static_cast<std::uint8_t>(key[2 * i])
                               | (static_cast<std::uint8_t>(key[2 * i + 1]) << 8));
    }

    std::string encode(std::vector<Step> const& steps) {
      std::string key;
      key.reserve(steps.size() * 2);
      for (Step const& s : steps) {
        put(key, code_of(s.morphism, s.direction));
      }
      return key;
    }

    // Precomputed data driving move enumeration.
    class MoveGraph {
     public:
      MoveGraph(FinCat const& cat, MorphismSet const& weq)
          : cat_(cat), weq_(weq), factors_(cat.num_morphisms()),
            weq_out_(cat.num_objects()), weq_in_(cat.num_objects()) {
        std::size_t const n = cat.num_morphisms();
        if (n >= kMaxSearchMorphisms) {
          throw PreconditionError("zigzag search: category has too many morphisms");
        }
        for (MorphismId f = 0; f < n; ++f) {
          for (MorphismId g = 0; g < n; ++g) {
            if (cat.composable(g, f)) {
              factors_[cat.compose_unchecked(g, f)].emplace_back(f, g);
            }
          }
        }
        for (MorphismId w : weq.members()) {
          weq_out_[cat.dom(w)].push_back(w);
          weq_in_[cat.cod(w)].push_back(w);
        }
      }

      // Decodes a zigzag into the scratch arrays used by for_each_edit.
      template <typename CodeAt>
      void load(ObjectId source, std::size_t len, CodeAt&& code) const {
        morph_.resize(len);
        dir_.resize(len);
        at_.resize(len + 1);
        at_[0] = source;
        for (std::size_t i = 0; i < len; ++i) {
          Code const c = code(i);
          morph_[i]    = c >> 1;
          dir_[i]      = (c & 1) ? Direction::backward : Direction::forward;
          at_[i + 1]   = advance(cat_, at_[i], Step{morph_[i], dir_[i]});
        }
      }

      // Calls visit(move, child_key) for every applicable move. With
      // distinct_only, moves whose result an identity move already yields
      // are skipped.
      template <typename Visit>
      void for_each_neighbor(ObjectId source, std::string const& key,
                             Visit&& visit, bool distinct_only = true) const {
        load(source, key.size() / 2, [&](std::size_t i) { return code_at(key, i); });
        std::string& child = child_;
        // Child key: key[0, 2*keep) ++ codes ++ key[2*resume, end).
        for_each_edit(
            [&](Move const& m, std::size_t keep, std::size_t resume,
                std::initializer_list<Code> codes) {
              child.assign(key.data(), 2 * keep);
              for (Code c : codes) {
                put(child, c);
              }
              child.append(key, 2 * resume, std::string::npos);
              visit(m, child);
            },
            distinct_only);
      }

      // Calls emit(move, keep, resume, codes) for every move applicable to
      // the loaded zigzag: the result keeps steps [0, keep), then codes,
      // then steps from resume on.
      template <typename Emit>
      void for_each_edit(Emit&& emit, bool distinct_only) const {
        std::size_t const len = morph_.size();

        for (std::size_t i = 0; i < len; ++i) {
          MorphismId const s = morph_[i];
          Direction const  d = dir_[i];
          if (cat_.is_identity(s)) {
            emit(Move{MoveKind::omit_identity, true, i, d, s}, i, i + 1, {});
          }
          if (i + 1 < len) {
            MorphismId const t = morph_[i + 1];
            if (d == dir_[i + 1]) {
              if (distinct_only && (cat_.is_identity(s) || cat_.is_identity(t))) {
                continue;
              }
              MorphismId const r = step_composite(cat_, d, s, t);
              emit(Move{MoveKind::compose, true, i, d, s, t, r}, i, i + 2,
                   {code_of(r, d)});
            } else if (s == t) {
              emit(Move{MoveKind::cancel_pair, true, i, d, s}, i, i + 2, {});
            }
          }
        }

        for (std::size_t i = 0; i <= len; ++i) {
          MorphismId const id = cat_.identity(at_[i]);
          emit(Move{MoveKind::omit_identity, false, i, Direction::forward, id}, i, i,
               {code_of(id, Direction::forward)});
          if (weq_.contains(id)) {
            emit(Move{MoveKind::omit_identity, false, i, Direction::backward, id}, i,
                 i, {code_of(id, Direction::backward)});
          }
        }

        for (std::size_t i = 0; i < len; ++i) {
          MorphismId const s = morph_[i];
          Direction const  d = dir_[i];
          for (auto [f, g] : factors_[s]) {
            if (distinct_only && (cat_.is_identity(f) || cat_.is_identity(g))) {
              continue;
            }
            // s = g∘f. Forward: traverse f then g. Backward: traverse g then
            // f, both weak equivalences.
            MorphismId first  = f;
            MorphismId second = g;
            if (d == Direction::backward) {
              if (!weq_.contains(f) || !weq_.contains(g)) {
                continue;
              }
              first  = g;
              second = f;
            }
            emit(Move{MoveKind::compose, false, i, d, first, second, s}, i, i + 1,
                 {code_of(first, d), code_of(second, d)});
          }
        }

        for (std::size_t i = 0; i <= len; ++i) {
          for (MorphismId w : weq_out_[at_[i]]) {
            emit(Move{MoveKind::cancel_pair, false, i, Direction::forward, w}, i, i,
                 {code_of(w, Direction::forward), code_of(w, Direction::backward)});
          }
          for (MorphismId w : weq_in_[at_[i]]) {
            emit(Move{MoveKind::cancel_pair, false, i, Direction::backward, w}, i, i,
                 {code_of(w, Direction::backward), code_of(w, Direction::forward)});
          }
        }
      }

     private:
      FinCat const&                                               cat_;
      MorphismSet const&                                          weq_;
      std::vector<std::vector<std::pair<MorphismId, MorphismId>>> factors_;
      std::vector<std::vector<MorphismId>>                        weq_out_;
      std::vector<std::vector<MorphismId>>                        weq_in_;
      mutable std::vector<MorphismId>                             morph_;
      mutable std::vector<Direction>                              dir_;
      mutable std::vector<ObjectId>                               at_;
      mutable std::string                                         child_;
    };

    // One half of the bidirectional search.
    struct SearchSide {
      struct Node {
        std::uint32_t parent;
        Move          move;
      };

      explicit SearchSide(std::vector<Step> const& root) {
        keys.push_back(encode(root));
        nodes.push_back({0, Move{}});
        index.emplace(keys.back(), 0);
        frontier.push_back(0);
      }

      // Moves from the root to node i.
      std::vector<Move> path_to(std::uint32_t i) const {
        std::vector<Move> out;
        while (i != 0) {
          out.push_back(nodes[i].move);
          i = nodes[i].parent;
        }
        std::reverse(out.begin(), out.end());
        return out;
      }

      std::unordered_map<std::string_view, std::uint32_t> index;
      std::deque<std::string>                              keys;
      std::vector<Node>                                    nodes;
      std::vector<std::uint32_t>                           frontier;
      std::size_t                                          depth = 0;
    };
    // Zigzags of bounded length packed into one word: the length plus one in
    // the low four bits, then one fixed-width code per step.
    class Packer {
     public:
      Packer(std::size_t num_morphisms, std::size_t max_len) {
        while ((std::size_t{1} << bits_) < 2 * num_morphisms) {
          ++bits_;
        }
        fits_ = max_len < 15 && 4 + bits_ * max_len <= 64;
      }

      bool fits() const { return fits_; }

      std::uint64_t pack(std::string const& key) const {
        std::size_t const len  = key.size() / 2;
        std::uint64_t     word = len + 1;
        for (std::size_t i = 0; i < len; ++i) {
          word |= std::uint64_t{code_at(key, i)} << (4 + bits_ * i);
        }
        return word;
      }

      static std::size_t length(std::uint64_t word) { return (word & 0xF) - 1; }

      Code code(std::uint64_t word, std::size_t i) const {
        return static_cast<Code>((word >> (4 + bits_ * i)) & mask());
      }

      // Steps [0, keep) of word, then codes, then steps from resume on.
      std::uint64_t splice(std::uint64_t word, std::size_t keep, std::size_t resume,
                           std::initializer_list<Code> codes) const {
        std::size_t const   len  = length(word);
        std::size_t const   out  = len - (resume - keep) + codes.size();
        std::uint64_t const body = word >> 4;
        std::uint64_t       next = keep == 0 ? 0 : body & low_bits(bits_ * keep);
        std::size_t         at   = bits_ * keep;
        for (Code c : codes) {
          next |= std::uint64_t{c} << at;
          at += bits_;
        }
        if (resume < len) {
          next |= (body >> (bits_ * resume)) << at;
        }
        return (next << 4) | (out + 1);
      }

     private:
      static std::uint64_t low_bits(std::size_t n) {
        return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
      }
      std::uint64_t mask() const { return low_bits(bits_); }

      std::size_t bits_ = 1;
      bool        fits_ = false;
    };

    // Open addressing map from packed zigzags to per-member depths. Packed
    // keys are never zero, so zero marks an empty slot.
    class DepthTable {
     public:
      static constexpr std::uint64_t kUnreached = ~std::uint64_t{0};

      DepthTable() { rehash(1 << 12); }

      // Returns the depth word for key, inserting kUnreached when absent.
      std::uint64_t& operator[](std::uint64_t key) {
        if (2 * (size_ + 1) > keys_.size()) {
          rehash(keys_.size() * 2);
        }
        std::size_t i = slot(key);
        if (keys_[i] == 0) {
          keys_[i]   = key;
          values_[i] = kUnreached;
          ++size_;
        }
        return values_[i];
      }

      std::size_t size() const { return size_; }

      template <typename F>
      void for_each(F&& f) const {
        for (std::size_t i = 0; i < keys_.size(); ++i) {
          if (keys_[i] != 0) {
            f(keys_[i], values_[i]);
          }
        }
      }

     private:
      std::size_t slot(std::uint64_t key) const {
        std::size_t const mask = keys_.size() - 1;
        std::size_t       i    = (key * 0x9E3779B97F4A7C15ull) >> 20 & mask;
        while (keys_[i] != 0 && keys_[i] != key) {
          i = (i + 1) & mask;
        }
        return i;
      }

      void rehash(std::size_t capacity) {
        std::vector<std::uint64_t> keys(capacity, 0);
        std::vector<std::uint64_t> values(capacity, 0);
        keys.swap(keys_);
        values.swap(values_);
        for (std::size_t i = 0; i < keys.size(); ++i) {
          if (keys[i] != 0) {
            std::size_t const j = slot(keys[i]);
            keys_[j]            = keys[i];
            values_[j]          = values[i];
          }
        }
      }

      std::vector<std::uint64_t> keys_;
      std::vector<std::uint64_t> values_;
      std::size_t                size_ = 0;
    };

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Zigzag
  ////////////////////////////////////////////////////////////////////////

  Zigzag::Zigzag(FinCat const&      cat,
                 MorphismSet const& weq,
                 ObjectId           source,
                 ObjectId           target,
                 std::vector<Step>  steps)
      : source_(source), target_(target), steps_(std::move(steps)) {
    if (source >= cat.num_objects() || target >= cat.num_objects()) {
      throw PreconditionError("zigzag: unknown endpoint");
    }
    ObjectId at = source;
    for (Step const& s : steps_) {
      if (s.morphism >= cat.num_morphisms()) {
        throw PreconditionError("zigzag: unknown morphism");
      }
      if (s.direction == Direction::forward) {
        if (cat.dom(s.morphism) != at) {
          throw PreconditionError(fmt::format(
              "zigzag: forward {} does not start at {}", cat.name(s.morphism),
              cat.object_name(at)));
        }
        at = cat.cod(s.morphism);
      } else {
        if (!weq.contains(s.morphism)) {
          throw PreconditionError(fmt::format(
              "zigzag: backward {} is not a weak equivalence", cat.name(s.morphism)));
        }
        if (cat.cod(s.morphism) != at) {
          throw PreconditionError(fmt::format(
              "zigzag: backward {} does not start at {}", cat.name(s.morphism),
              cat.object_name(at)));
        }
        at = cat.dom(s.morphism);
      }
    }
    if (at != target) {
      throw PreconditionError("zigzag: does not end at its target");
    }
  }

  Zigzag Zigzag::of(FinCat const& cat, MorphismId f) {
    return unchecked(cat.dom(f), cat.cod(f), {{f, Direction::forward}});
  }

  ObjectId Zigzag::object_at(FinCat const& cat, std::size_t i) const {
    ObjectId at = source_;
    for (std::size_t k = 0; k < i && k < steps_.size(); ++k) {
      at = advance(cat, at, steps_[k]);
    }
    return at;
  }

  ////////////////////////////////////////////////////////////////////////
  // Moves
  ////////////////////////////////////////////////////////////////////////

  Move inverse(Move const& m) {
    Move out  = m;
    out.apply = !m.apply;
    return out;
  }

  Zigzag apply_move(FinCat const&      cat,
                    MorphismSet const& weq,
                    Zigzag const&      z,
                    Move const&        mv) {
    auto const&       steps = z.steps();
    std::size_t const len   = steps.size();
    std::size_t const i     = mv.position;
    auto              fail  = [&](std::string_view why) -> Zigzag {
      throw InapplicableMove(fmt::format("{} at position {}: {}",
                                         format_move(cat, mv), i, why));
    };
    auto valid = [&](MorphismId m) { return m < cat.num_morphisms(); };

    std::vector<Step> out;
    switch (mv.kind) {
      case MoveKind::omit_identity: {
        if (!valid(mv.first) || !cat.is_identity(mv.first)) {
          return fail("not an identity");
        }
        if (mv.apply) {
          if (i >= len || steps[i] != Step{mv.first, mv.direction}) {
            return fail("no such identity step");
          }
          out = steps;
          out.erase(out.begin() + i);
        } else {
          if (i > len || cat.dom(mv.first) != z.object_at(cat, i)) {
            return fail("identity does not sit at this position");
          }
          if (mv.direction == Direction::backward && !weq.contains(mv.first)) {
            return fail("identity is not a weak equivalence");
          }
          out = steps;
          out.insert(out.begin() + i, Step{mv.first, mv.direction});
        }
        break;
      }
      case MoveKind::compose: {
        if (!valid(mv.first) || !valid(mv.second) || !valid(mv.result)
            || !steps_chain(cat, mv.direction, mv.first, mv.second)
            || step_composite(cat, mv.direction, mv.first, mv.second)
                   != mv.result) {
          return fail("factors do not compose to the result");
        }
        if (mv.direction == Direction::backward
            && (!weq.contains(mv.first) || !weq.contains(mv.second))) {
          return fail("backward factors must be weak equivalences");
        }
        if (mv.apply) {
          if (i + 1 >= len || steps[i] != Step{mv.first, mv.direction}
              || steps[i + 1] != Step{mv.second, mv.direction}) {
            return fail("no two such adjacent steps");
          }
          out = steps;
          out.erase(out.begin() + i, out.begin() + i + 2);
          out.insert(out.begin() + i, Step{mv.result, mv.direction});
        } else {
          if (i >= len || steps[i] != Step{mv.result, mv.direction}) {
            return fail("no such step to split");
          }
          out = steps;
          out[i] = Step{mv.first, mv.direction};
          out.insert(out.begin() + i + 1, Step{mv.second, mv.direction});
        }
        break;
      }
      case MoveKind::cancel_pair: {
        if (!valid(mv.first) || !weq.contains(mv.first)) {
          return fail("not a weak equivalence");
        }
        Step const a{mv.first, mv.direction};
        Step const b{mv.first, flip(mv.direction)};
        if (mv.apply) {
          if (i + 1 >= len || steps[i] != a || steps[i + 1] != b) {
            return fail("no adjacent opposite pair");
          }
          out = steps;
          out.erase(out.begin() + i, out.begin() + i + 2);
        } else {
          ObjectId const need = mv.direction == Direction::forward
                                    ? cat.dom(mv.first)
                                    : cat.cod(mv.first);
          if (i > len || z.object_at(cat, i) != need) {
            return fail("pair does not start at this position");
          }
          out = steps;
          out.insert(out.begin() + i, {a, b});
        }
        break;
      }
    }
    return Zigzag::unchecked(z.source(), z.target(), std::move(out));
  }

  Zigzag replay(FinCat const&      cat,
                MorphismSet const& weq,
                Zigzag const&      start,
                MoveTrace const&   trace) {
    Zigzag z = start;
    for (Move const& m : trace.moves) {
      z = apply_move(cat, weq, z, m);
    }
    return z;
  }

  std::vector<Move> enumerate_moves(FinCat const&      cat,
                                    MorphismSet const& weq,
                                    Zigzag const&      z) {
    std::vector<Move> out;
    MoveGraph(cat, weq).for_each_neighbor(
        z.source(), encode(z.steps()),
        [&](Move const& m, std::string const&) { out.push_back(m); }, false);
    return out;
  }

  EquivalenceResult bounded_equiv(FinCat const&      cat,
                                  MorphismSet const& weq,
                                  Zigzag const&      z1,
                                  Zigzag const&      z2,
                                  std::size_t        budget) {
    if (z1.source() != z2.source() || z1.target() != z2.target()) {
      throw PreconditionError("bounded_equiv: zigzags have different endpoints");
    }
    EquivalenceResult result;
    if (z1.steps() == z2.steps()) {
      result.equivalent = true;
      return result;
    }
    MoveGraph const graph(cat, weq);
    SearchSide      a(z1.steps());
    SearchSide      b(z2.steps());
    ObjectId const  source = z1.source();

    while (a.depth + b.depth < budget) {
      if (a.frontier.empty() || b.frontier.empty()) {
        break;
      }
      bool const  expand_a = a.frontier.size() <= b.frontier.size();
      SearchSide& here     = expand_a ? a : b;
      SearchSide& there    = expand_a ? b : a;

      std::vector<std::uint32_t> next;
      std::optional<std::pair<std::uint32_t, std::uint32_t>> meet;
      for (std::uint32_t node : here.frontier) {
        graph.for_each_neighbor(source, here.keys[node], [&](Move const& m,
                                                             std::string const& key) {
          if (meet || here.index.contains(key)) {
            return;
          }
          auto const id = static_cast<std::uint32_t>(here.nodes.size());
          here.nodes.push_back({node, m});
          here.keys.push_back(key);
          here.index.emplace(here.keys.back(), id);
          next.push_back(id);
          if (auto it = there.index.find(key); it != there.index.end()) {
            meet = {id, it->second};
          }
        });
        if (meet) {
          break;
        }
      }
      here.frontier = std::move(next);
      ++here.depth;

      if (meet) {
        auto [here_node, there_node] = *meet;
        std::uint32_t const a_node = expand_a ? here_node : there_node;
        std::uint32_t const b_node = expand_a ? there_node : here_node;
        result.equivalent          = true;
        result.trace.moves         = a.path_to(a_node);
        auto back                  = b.path_to(b_node);
        for (auto it = back.rbegin(); it != back.rend(); ++it) {
          result.trace.moves.push_back(inverse(*it));
        }
        break;
      }
    }
    result.explored = a.nodes.size() + b.nodes.size();
    return result;
  }

  BoundedRelation bounded_relation(FinCat const&                  cat,
                                   MorphismSet const&             weq,
                                   std::vector<MorphismId> const& parallel,
                                   std::size_t                    budget) {
    BoundedRelation out;
    out.members = parallel;
    std::size_t const k = parallel.size();
    out.related.assign(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) {
      out.related[i][i] = true;
      if (cat.dom(parallel[i]) != cat.dom(parallel[0])
          || cat.cod(parallel[i]) != cat.cod(parallel[0])) {
        throw PreconditionError("bounded_relation: morphisms are not parallel");
      }
    }
    if (k < 2) {
      return out;
    }
    std::size_t const radius   = (budget + 1) / 2;
    auto              pairwise = [&] {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          auto const r = bounded_equiv(cat, weq, Zigzag::of(cat, parallel[i]),
                                       Zigzag::of(cat, parallel[j]), budget);
          out.related[i][j] = out.related[j][i] = r.equivalent;
          out.explored += r.explored;
        }
      }
      return out;
    };
    if (k > 16 || radius > 14) {
      return pairwise();
    }

    // Depth from member i lives in nibble i; 0xF marks "not reached".
    using Depths = std::uint64_t;
    auto depth_of = [](Depths d, std::size_t i) { return (d >> (4 * i)) & 0xF; };
    MoveGraph const graph(cat, weq);
    Packer const    packer(cat.num_morphisms(), 1 + 2 * radius);
    if (!packer.fits()) {
      return pairwise();
    }
    DepthTable     seen;
    ObjectId const source = cat.dom(parallel[0]);

    for (std::size_t i = 0; i < k; ++i) {
      Depths const mark  = Depths{0xF} << (4 * i);
      auto         visit = [&](std::uint64_t word, std::size_t depth) {
        Depths& d = seen[word];
        if (depth_of(d, i) != 0xF) {
          return false;
        }
        d = (d & ~mark) | (Depths{depth} << (4 * i));
        return true;
      };
      std::uint64_t const root
          = packer.pack(encode({Step{parallel[i], Direction::forward}}));
      visit(root, 0);
      std::vector<std::uint64_t> frontier{root};
      for (std::size_t depth = 1; depth <= radius && !frontier.empty(); ++depth) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t word : frontier) {
          graph.load(source, Packer::length(word),
                     [&](std::size_t j) { return packer.code(word, j); });
          graph.for_each_edit(
              [&](Move const&, std::size_t keep, std::size_t resume,
                  std::initializer_list<Code> codes) {
                std::uint64_t const w = packer.splice(word, keep, resume, codes);
                if (visit(w, depth)) {
                  next.push_back(w);
                }
              },
              true);
        }
        frontier = std::move(next);
      }
    }

    out.explored = seen.size();
    seen.for_each([&](std::uint64_t, Depths d) {
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t const di = depth_of(d, i);
        if (di == 0xF) {
          continue;
        }
        for (std::size_t j = i + 1; j < k; ++j) {
          std::size_t const dj = depth_of(d, j);
          if (dj != 0xF && di + dj <= budget) {
            out.related[i][j] = out.related[j][i] = true;
          }
        }
      }
    });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reduction of backward splits
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class Rewriter {
     public:
      Rewriter(FinCat const& cat, MorphismSet const& weq, Zigzag z)
          : cat_(cat), weq_(weq), z_(std::move(z)) {}

      void operator()(Move const& m) {
        z_ = apply_move(cat_, weq_, z_, m);
        trace_.moves.push_back(m);
      }

      Zigzag const& zigzag() const noexcept {
        return z_;
      }
      Reduction finish() && {
        return {std::move(z_), std::move(trace_)};
      }

     private:
      FinCat const&      cat_;
      MorphismSet const& weq_;
      Zigzag             z_;
      MoveTrace          trace_;
    };

    std::optional<std::size_t> first_backward(Zigzag const& z) {
      for (std::size_t i = 0; i < z.size(); ++i) {
        if (z.steps()[i].direction == Direction::backward) {
          return i;
        }
      }
      return std::nullopt;
    }
  }  // namespace

  Reduction reduce_backward_splits(FinCat const&           cat,
                                   MorphismSet const&      weq,
                                   SplitCertificate const& splits,
                                   Zigzag const&           z) {
    Rewriter rw(cat, weq, z);
    constexpr auto fwd = Direction::forward;
    constexpr auto bwd = Direction::backward;

    while (auto pos = first_backward(rw.zigzag())) {
      std::size_t const i = *pos;
      MorphismId const  w = rw.zigzag().steps()[i].morphism;
      if (cat.is_identity(w)) {
        rw({MoveKind::omit_identity, true, i, bwd, w});
        continue;
      }
      if (SplitWeq const* s = splits.find_split(w)) {
        if (s->kind == SplitKind::section) {
          // Y <-s X  ~  Y <-s X -s-> Y -r-> X  ~  Y -r-> X
          MorphismId const idx = cat.identity(cat.dom(w));
          rw({MoveKind::omit_identity, false, i + 1, fwd, idx});
          rw({MoveKind::compose, false, i + 1, fwd, w, s->partner, idx});
          rw({MoveKind::cancel_pair, true, i, bwd, w});
        } else {
          // X <-r Y  ~  X -s-> Y -r-> X <-r Y  ~  X -s-> Y
          MorphismId const idx = cat.identity(cat.cod(w));
          rw({MoveKind::omit_identity, false, i, fwd, idx});
          rw({MoveKind::compose, false, i, fwd, s->partner, w, idx});
          rw({MoveKind::cancel_pair, true, i + 1, fwd, w});
        }
        continue;
      }
      auto it = splits.decompositions.find(w);
      if (it == splits.decompositions.end() || it->second.size() < 2) {
        throw PreconditionError(fmt::format(
            "backward {} has no decomposition into split weak equivalences",
            cat.name(w)));
      }
      // w = s_k ∘ ... ∘ s_1; peel s_k off the front of the backward step.
      auto const&      word = it->second;
      MorphismId const last = word.back();
      MorphismId const rest = compose_path(
          cat, cat.dom(w), std::span(word.begin(), word.end() - 1));
      rw({MoveKind::compose, false, i, bwd, last, rest, w});
      if (!splits.decompositions.contains(rest)) {
        throw PreconditionError(fmt::format(
            "{} has no decomposition into split weak equivalences", cat.name(rest)));
      }
    }

    while (rw.zigzag().size() >= 2) {
      auto const& st = rw.zigzag().steps();
      rw({MoveKind::compose, true, 0, fwd, st[0].morphism, st[1].morphism,
          cat.compose_unchecked(st[1].morphism, st[0].morphism)});
    }
    if (rw.zigzag().size() == 1 && cat.is_identity(rw.zigzag().steps()[0].morphism)) {
      rw({MoveKind::omit_identity, true, 0, fwd, rw.zigzag().steps()[0].morphism});
    }
    return std::move(rw).finish();
  }

  std::vector<std::vector<MorphismId>> ho_hom(FinCat const&               cat,
                                              WhiteheadCertificate const& cert,
                                              ObjectId                    x,
                                              ObjectId                    y) {
    std::vector<std::vector<MorphismId>> out;
    std::vector<bool>                    seen(cert.congruence.num_classes(), false);
    for (MorphismId f : hom_set(cat, x, y)) {
      std::size_t const c = cert.congruence.class_of(f);
      if (!seen[c]) {
        seen[c] = true;
        out.push_back(cert.congruence.classes()[c]);
      }
    }
    return out;
  }

  std::optional<Zigzag> find_zigzag(FinCat const&      cat,
                                    MorphismSet const& weq,
                                    ObjectId           x,
                                    ObjectId           y) {
    std::size_t const                nobj = cat.num_objects();
    std::vector<std::optional<Step>> via(nobj);
    std::vector<ObjectId>            prev(nobj);
    std::vector<bool>                seen(nobj, false);
    std::deque<ObjectId>             queue{x};
    seen[x] = true;
    while (!queue.empty() && !seen[y]) {
      ObjectId const at = queue.front();
      queue.pop_front();
      for (MorphismId m = 0; m < cat.num_morphisms(); ++m) {
        if (cat.is_identity(m)) {
          continue;
        }
        std::optional<std::pair<ObjectId, Step>> edge;
        for (Direction d : {Direction::forward, Direction::backward}) {
          ObjectId const from = d == Direction::forward ? cat.dom(m) : cat.cod(m);
          ObjectId const to   = d == Direction::forward ? cat.cod(m) : cat.dom(m);
          if (from != at || seen[to]) {
            continue;
          }
          if (d == Direction::backward && !weq.contains(m)) {
            continue;
          }
          seen[to] = true;
          prev[to] = at;
          via[to]  = Step{m, d};
          queue.push_back(to);
        }
      }
    }
    if (!seen[y]) {
      return std::nullopt;
    }
    std::vector<Step> steps;
    for (ObjectId at = y; at != x; at = prev[at]) {
      steps.push_back(*via[at]);
    }
    std::reverse(steps.begin(), steps.end());
    return Zigzag(cat, weq, x, y, std::move(steps));
  }

  std::optional<NonFullnessWitness> nonfullness_witness(FinCat const&      cat,
                                                        MorphismSet const& weq) {
    for (ObjectId x = 0; x < cat.num_objects(); ++x) {
      for (ObjectId y = 0; y < cat.num_objects(); ++y) {
        if (!cat.hom(x, y).empty()) {
          continue;
        }
        if (auto z = find_zigzag(cat, weq, x, y)) {
          return NonFullnessWitness{x, y, std::move(*z)};
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////

  Zigzag parse_zigzag(FinCat const&      cat,
                      MorphismSet const& weq,
                      ObjectId           source,
                      ObjectId           target,
                      std::string const& text) {
    std::istringstream in(text);
    std::string        tok;
    std::vector<Step>  steps;
    while (in >> tok) {
      if (tok == ".") {
        continue;
      }
      if (tok.size() < 2 || (tok[0] != '>' && tok[0] != '<')) {
        throw ParseError(fmt::format(
            "zigzag token \"{}\" must be >name or <name", tok));
      }
      auto m = cat.find_morphism(tok.substr(1));
      if (!m) {
        throw ParseError(fmt::format("zigzag: unknown morphism \"{}\"", tok.substr(1)));
      }
      steps.push_back({*m, tok[0] == '>' ? Direction::forward : Direction::backward});
    }
    try {
      return Zigzag(cat, weq, source, target, std::move(steps));
    } catch (PreconditionError const& e) {
      throw ParseError(e.what());
    }
  }

  std::string format_zigzag(FinCat const& cat, Zigzag const& z) {
    if (z.empty()) {
      return ".";
    }
    std::string out;
    for (Step const& s : z.steps()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += arrow(s.direction);
      out += cat.name(s.morphism);
    }
    return out;
  }

  std::string format_move(FinCat const& cat, Move const& m) {
    auto nm = [&](MorphismId x) {
      return x < cat.num_morphisms() ? cat.name(x) : std::string("?");
    };
    std::string const d = arrow(m.direction);
    switch (m.kind) {
      case MoveKind::omit_identity:
        return fmt::format("{} {}{} at {}",
                           m.apply ? "omit" : "insert",
                           d,
                           nm(m.first),
                           m.position);
      case MoveKind::compose:
        return m.apply ? fmt::format("compose {}{} {}{} into {}{} at {}",
                                     d, nm(m.first), d, nm(m.second), d,
                                     nm(m.result), m.position)
                       : fmt::format("split {}{} into {}{} {}{} at {}",
                                     d, nm(m.result), d, nm(m.first), d,
                                     nm(m.second), m.position);
      case MoveKind::cancel_pair: {
        std::string const e = arrow(flip(m.direction));
        return fmt::format("{} {}{} {}{} at {}",
                           m.apply ? "cancel" : "insert",
                           d, nm(m.first), e, nm(m.first), m.position);
      }
    }
    return {};
  }

}  // namespace hocat
