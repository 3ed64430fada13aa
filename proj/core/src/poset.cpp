#include "scd/poset.hpp"

#include <algorithm>

namespace scd {

Poset::Poset(std::vector<std::string> names, const std::vector<std::pair<int, int>>& covers)
    : names_(std::move(names)), covers_(covers) {
  const int n = size();
  if (n == 0) throw PreconditionError("empty-poset", "a poset needs at least one element");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (names_[i] == names_[j]) {
        throw PreconditionError("duplicate-element", "duplicate element '" + names_[i] + "'");
      }
    }
  }
  leq_.assign(n * n, 0);
  for (int i = 0; i < n; ++i) leq_[i * n + i] = 1;
  for (auto [lo, hi] : covers_) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n) {
      throw PreconditionError("bad-cover", "cover index out of range");
    }
    leq_[lo * n + hi] = 1;
  }
  // Warshall closure.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!leq_[i * n + k]) continue;
      for (int j = 0; j < n; ++j) {
        if (leq_[k * n + j]) leq_[i * n + j] = 1;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && leq(i, j) && leq(j, i)) {
        throw PreconditionError("not-antisymmetric",
                                "elements '" + names_[i] + "' and '" + names_[j] + "' form a cycle");
      }
    }
  }
  // Pairwise bounds requirement.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool has_ub = false, has_lb = false;
      for (int k = 0; k < n && !(has_ub && has_lb); ++k) {
        if (leq(i, k) && leq(j, k)) has_ub = true;
        if (leq(k, i) && leq(k, j)) has_lb = true;
      }
      if (!has_ub || !has_lb) {
        throw PreconditionError("missing-bounds", "pair ('" + names_[i] + "', '" + names_[j] +
                                                      "') lacks an upper or lower bound");
      }
    }
  }
  // Height labeling: rank(i) = longest strict chain below i.
  rank_.assign(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (lt(j, i) && rank_[i] < rank_[j] + 1) {
          rank_[i] = rank_[j] + 1;
          changed = true;
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (lt(a, b) || lt(b, a)) {
        pairs_.emplace_back(lt(a, b) ? std::pair{a, b} : std::pair{b, a});
      }
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
  for (int a = 0; a < n; ++a) {
    for (int m = 0; m < n; ++m) {
      if (!lt(a, m)) continue;
      for (int b = 0; b < n; ++b) {
        if (lt(m, b)) triples_.push_back({a, m, b});
      }
    }
  }
  std::sort(triples_.begin(), triples_.end());
}

Poset Poset::chain(std::vector<std::string> names) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < static_cast<int>(names.size()); ++i) covers.emplace_back(i, i + 1);
  return Poset(std::move(names), covers);
}

int Poset::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw PreconditionError("unknown-element", "no poset element named '" + name + "'");
}

std::optional<int> Poset::min_element() const {
  for (int i = 0; i < size(); ++i) {
    bool ok = true;
    for (int j = 0; j < size() && ok; ++j) ok = leq(i, j);
    if (ok) return i;
  }
  return std::nullopt;
}

std::optional<int> Poset::max_element() const {
  for (int i = 0; i < size(); ++i) {
    bool ok = true;
    for (int j = 0; j < size() && ok; ++j) ok = leq(j, i);
    if (ok) return i;
  }
  return std::nullopt;
}

int Poset::some_upper_bound(int a, int b) const {
  for (int k = 0; k < size(); ++k) {
    if (leq(a, k) && leq(b, k)) return k;
  }
  throw PreconditionError("missing-bounds", "unreachable: validated at construction");
}

int Poset::some_lower_bound(int a, int b) const {
  for (int k = 0; k < size(); ++k) {
    if (leq(k, a) && leq(k, b)) return k;
  }
  throw PreconditionError("missing-bounds", "unreachable: validated at construction");
}

int Poset::upper_bound_of(const std::vector<int>& elems) const {
  for (int k = 0; k < size(); ++k) {
    bool ok = true;
    for (int e : elems) {
      if (!leq(e, k)) {
        ok = false;
        break;
      }
    }
    if (ok) return k;
  }
  // Iterating pairwise bounds shows a common bound always exists, so the
  // scan above cannot fail on a validated poset.
  throw PreconditionError("missing-bounds", "unreachable: validated at construction");
}

int Poset::lower_bound_of(const std::vector<int>& elems) const {
  for (int k = 0; k < size(); ++k) {
    bool ok = true;
    for (int e : elems) {
      if (!leq(k, e)) {
        ok = false;
        break;
      }
    }
    if (ok) return k;
  }
  throw PreconditionError("missing-bounds", "unreachable: validated at construction");
}

bool Poset::is_interval(const std::vector<bool>& member) const {
  for (const auto& t : triples_) {
    if (member[t[0]] && member[t[2]] && !member[t[1]]) return false;
  }
  return true;
}

bool Poset::same_structure(const Poset& other) const {
  return names_ == other.names_ && leq_ == other.leq_;
}

}  // namespace scd
