#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scd/scalar.hpp"

namespace scd {

/// Finite partially ordered type space. Input is a list of labeled elements
/// plus covering pairs; the constructor computes the reflexive-transitive
/// closure and validates:
///   - antisymmetry (no distinct x <= y <= x),
///   - every pair of elements has an upper and a lower bound in the poset.
/// Elements are addressed by index in input order; that order also fixes all
/// deterministic witness selection downstream.
class Poset {
 public:
  Poset(std::vector<std::string> names, const std::vector<std::pair<int, int>>& covers);
  static Poset chain(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;

  bool leq(int a, int b) const { return leq_[a * size() + b] != 0; }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  /// Strictly increasing integer labeling (height of the longest chain below).
  int rank(int i) const { return rank_[i]; }

  /// Minimum/maximum element when one exists.
  std::optional<int> min_element() const;
  std::optional<int> max_element() const;

  /// Smallest-index upper/lower bound of {a, b}; always exists by validation.
  int some_upper_bound(int a, int b) const;
  int some_lower_bound(int a, int b) const;
  int upper_bound_of(const std::vector<int>& elems) const;
  int lower_bound_of(const std::vector<int>& elems) const;

  /// All strictly comparable pairs (a, b) with a < b, in lexicographic index order.
  const std::vector<std::pair<int, int>>& comparable_pairs() const { return pairs_; }

  /// All chains a < m < b, lexicographic in (a, m, b) indices.
  const std::vector<std::array<int, 3>>& chain_triples() const { return triples_; }

  /// Interval test: l, h in set and l < m < h imply m in set.
  bool is_interval(const std::vector<bool>& member) const;

  bool same_structure(const Poset& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<uint8_t> leq_;
  std::vector<int> rank_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::array<int, 3>> triples_;

  friend struct PosetJson;
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
};

}  // namespace scd
