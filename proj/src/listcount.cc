// Copyright 2026 The Hyperchrom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hyperchrom/listcount.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "brute_force.h"
#include "hyperchrom/subset_walk.h"
#include "hyperchrom/union_find.h"

namespace hyperchrom {
namespace {

// Multiplies into `small` while it fits, spilling into `big` on overflow.
class ProductAccumulator {
 public:
  void Multiply(uint64_t factor) {
    if (spilled_) {
      big_ *= factor;
      return;
    }
    uint64_t next;
    if (__builtin_mul_overflow(small_, factor, &next)) {
      spilled_ = true;
      big_ = BigInt(small_) * factor;
    } else {
      small_ = next;
    }
  }
  void MultiplyPower(uint64_t base, int exponent) {
    for (int i = 0; i < exponent; ++i) Multiply(base);
  }
  bool zero() const { return !spilled_ && small_ == 0; }
  BigInt value() const { return spilled_ ? big_ : BigInt(small_); }

 private:
  uint64_t small_ = 1;
  bool spilled_ = false;
  BigInt big_;
};

BigInt SignedProductOverRoots(const RollbackUnionFind& state, int size) {
  ProductAccumulator product;
  for (int v = 0; v < state.num_vertices() && !product.zero(); ++v) {
    if (state.IsRoot(v)) product.Multiply(std::popcount(state.payload(v)));
  }
  BigInt value = product.value();
  return (size & 1) ? BigInt(-value) : value;
}

}  // namespace

ListAssignment::ListAssignment(int universe, int k,
                               std::vector<ColorMask> lists)
    : universe_(universe), k_(k), lists_(std::move(lists)) {
  if (k_ < 1 || universe_ < k_ || universe_ > kMaxUniverse) {
    throw Error(ErrorKind::kDomain,
                "need 1 <= k <= U <= 64, got k=" + std::to_string(k_) +
                    " U=" + std::to_string(universe_));
  }
  const ColorMask allowed =
      universe_ == 64 ? ~ColorMask{0} : (ColorMask{1} << universe_) - 1;
  for (std::size_t v = 0; v < lists_.size(); ++v) {
    if ((lists_[v] & ~allowed) != 0) {
      throw Error(ErrorKind::kDomain, "list of vertex " + std::to_string(v) +
                                          " uses a colour outside the universe");
    }
    if (std::popcount(lists_[v]) != k_) {
      throw Error(ErrorKind::kDomain, "list of vertex " + std::to_string(v) +
                                          " does not have exactly k colours");
    }
  }
}

ListAssignment ListAssignment::Constant(int n, int k, int universe) {
  const ColorMask first_k = k == 64 ? ~ColorMask{0} : (ColorMask{1} << k) - 1;
  return ListAssignment(universe, k, std::vector<ColorMask>(n, first_k));
}

ListAssignment ListAssignment::FromColors(
    int universe, int k, const std::vector<std::vector<int>>& lists) {
  std::vector<ColorMask> masks;
  for (std::size_t v = 0; v < lists.size(); ++v) {
    ColorMask mask = 0;
    for (int c : lists[v]) {
      if (c < 0 || c >= universe || c >= kMaxUniverse) {
        throw Error(ErrorKind::kDomain, "colour " + std::to_string(c) +
                                            " outside the universe");
      }
      mask |= ColorMask{1} << c;
    }
    masks.push_back(mask);
  }
  return ListAssignment(universe, k, std::move(masks));
}

std::vector<int> ListAssignment::Colors(int v) const {
  std::vector<int> out;
  for (ColorMask b = lists_[v]; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

bool ListAssignment::IsConstant() const {
  return std::all_of(lists_.begin(), lists_.end(),
                     [this](ColorMask l) { return l == lists_.front(); });
}

ListAssignment ParseListAssignment(std::string_view text) {
  std::vector<std::vector<int>> rows;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;
    std::istringstream fields(line);
    std::vector<int> row;
    std::string token;
    while (fields >> token) {
      int value = 0;
      auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw Error(ErrorKind::kMalformedInput,
                    "line " + std::to_string(line_no) + ": expected integer");
      }
      row.push_back(value);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.front().size() != 3) {
    throw Error(ErrorKind::kMalformedInput, "header must be \"n k U\"");
  }
  const int n = rows[0][0], k = rows[0][1], universe = rows[0][2];
  if (n < 0 || static_cast<int>(rows.size()) - 1 != n) {
    throw Error(ErrorKind::kMalformedInput,
                "header declares " + std::to_string(n) + " lists, found " +
                    std::to_string(rows.size() - 1));
  }
  std::vector<std::vector<int>> lists(rows.begin() + 1, rows.end());
  for (std::size_t v = 0; v < lists.size(); ++v) {
    if (static_cast<int>(lists[v].size()) != k) {
      throw Error(ErrorKind::kMalformedInput,
                  "list of vertex " + std::to_string(v) + " must have " +
                      std::to_string(k) + " colours");
    }
    for (std::size_t i = 1; i < lists[v].size(); ++i) {
      if (lists[v][i - 1] >= lists[v][i]) {
        throw Error(ErrorKind::kMalformedInput,
                    "list of vertex " + std::to_string(v) +
                        " is not strictly ascending");
      }
    }
  }
  return ListAssignment::FromColors(universe, k, lists);
}

std::string SerializeListAssignment(const ListAssignment& lists) {
  std::ostringstream out;
  out << lists.num_vertices() << ' ' << lists.k() << ' ' << lists.universe()
      << '\n';
  for (int v = 0; v < lists.num_vertices(); ++v) {
    std::vector<int> colours = lists.Colors(v);
    for (std::size_t i = 0; i < colours.size(); ++i) {
      if (i) out << ' ';
      out << colours[i];
    }
    out << '\n';
  }
  return out.str();
}

ColorMask CommonColors(const ListAssignment& lists,
                       std::span<const Vertex> vertices) {
  if (vertices.empty()) {
    throw Error(ErrorKind::kPrecondition, "vertex set must be nonempty");
  }
  ColorMask common = ~ColorMask{0};
  for (Vertex v : vertices) common &= lists.list(v);
  return common;
}

int Alpha(const Hypergraph& h, const ListAssignment& lists, int e) {
  return lists.k() - std::popcount(CommonColors(lists, h.edge(e)));
}

int64_t AlphaTotal(const Hypergraph& h, const ListAssignment& lists) {
  int64_t total = 0;
  for (int e = 0; e < h.num_edges(); ++e) total += Alpha(h, lists, e);
  return total;
}

int Beta(const ListAssignment& lists, std::span<const Vertex> vertices) {
  return std::popcount(CommonColors(lists, vertices));
}

BigInt FOfS(const Hypergraph& h, const ListAssignment& lists, EdgeSubset s) {
  ComponentLabeling labels = ComponentCount(h, s);
  std::vector<ColorMask> common(labels.count, ~ColorMask{0});
  for (int v = 0; v < h.num_vertices(); ++v) {
    common[labels.label[v]] &= lists.list(v);
  }
  BigInt product = 1;
  for (ColorMask c : common) product *= std::popcount(c);
  return (s.size() & 1) ? BigInt(-product) : product;
}

BigInt ListCountBrute(const Hypergraph& h, const ListAssignment& lists,
                      uint64_t max_colorings) {
  const int n = h.num_vertices();
  internal::RequireBruteFeasible(std::vector<int64_t>(n, lists.k()),
                                 max_colorings);
  std::vector<std::vector<int64_t>> choices(n);
  for (int v = 0; v < n; ++v) {
    for (int c : lists.Colors(v)) choices[v].push_back(c);
  }
  return internal::CountProperChoices(h, choices);
}

BigInt ListCountIE(const Hypergraph& h, const ListAssignment& lists) {
  RequireEnumerable(h);
  RollbackUnionFind uf(h.num_vertices(), lists.lists());
  BigInt total = 0;
  WalkAllSubsets(h, uf, [&](EdgeSubset s, const RollbackUnionFind& state) {
    total += SignedProductOverRoots(state, s.size());
  });
  return total;
}

BigInt ListCountBroken(const Hypergraph& h, const BrokenCycleFamily& family,
                       const ListAssignment& lists) {
  RequireEnumerable(h);
  RollbackUnionFind uf(h.num_vertices(), lists.lists());
  BigInt total = 0;
  WalkBrokenCycleFree(h, family, uf,
                      [&](EdgeSubset s, const RollbackUnionFind& state) {
                        total += SignedProductOverRoots(state, s.size());
                      });
  return total;
}

BigInt ListCountBroken(const Hypergraph& h, const ListAssignment& lists) {
  return ListCountBroken(h, BrokenCycles(h), lists);
}

ListCounter::ListCounter(const Hypergraph& h)
    : ListCounter(h, BrokenCycles(h)) {}

ListCounter::ListCounter(const Hypergraph& h, const BrokenCycleFamily& family)
    : h_(h) {
  RequireEnumerable(h);
  const int n = h.num_vertices();
  if (n > 64) {
    throw Error(ErrorKind::kTooLarge, "list counter needs n <= 64");
  }
  RollbackUnionFind uf(n);
  WalkBrokenCycleFree(
      h, family, uf, [&](EdgeSubset s, const RollbackUnionFind& state) {
        std::vector<uint64_t> by_root(n, 0);
        for (int v = 0; v < n; ++v) by_root[state.Find(v)] |= uint64_t{1} << v;
        Member member{s.size(), 0, {}};
        for (int v = 0; v < n; ++v) {
          if (!state.IsRoot(v)) continue;
          if (std::popcount(by_root[v]) == 1) {
            ++member.isolated;
          } else {
            member.components.push_back(by_root[v]);
          }
        }
        sets_.push_back(std::move(member));
      });
}

std::vector<BigInt> ListCounter::SizeSums(const ListAssignment& lists) const {
  if (lists.num_vertices() != h_.num_vertices()) {
    throw Error(ErrorKind::kPrecondition,
                "list assignment and hypergraph disagree on vertex count");
  }
  std::vector<BigInt> sums(h_.num_edges() + 1, 0);
  for (const Member& member : sets_) {
    ProductAccumulator product;
    for (uint64_t component : member.components) {
      ColorMask common = ~ColorMask{0};
      for (uint64_t b = component; b != 0; b &= b - 1) {
        common &= lists.list(std::countr_zero(b));
      }
      product.Multiply(std::popcount(common));
      if (product.zero()) break;
    }
    if (product.zero()) continue;
    product.MultiplyPower(lists.k(), member.isolated);
    sums[member.size] += product.value();
  }
  return sums;
}

BigInt ListCounter::Count(const ListAssignment& lists) const {
  std::vector<BigInt> sums = SizeSums(lists);
  BigInt total = 0;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (i & 1) {
      total -= sums[i];
    } else {
      total += sums[i];
    }
  }
  return total;
}

}  // namespace hyperchrom
