#pragma once

#include <memory>
#include <vector>

#include "scd/poset.hpp"
#include "scd/scalar.hpp"

namespace scd {

/// Total function from a finite poset of types to scalars.
class GridFn {
 public:
  GridFn(std::shared_ptr<const Poset> poset, std::vector<Scalar> values,
         Numeric num = Numeric::exact_mode());

  const Poset& poset() const { return *poset_; }
  std::shared_ptr<const Poset> poset_ptr() const { return poset_; }
  const Numeric& numeric() const { return num_; }
  int size() const { return poset_->size(); }

  const Scalar& operator[](int i) const { return values_[i]; }
  const std::vector<Scalar>& values() const { return values_; }

  int sign_at(int i) const { return sign(values_[i], num_); }
  bool is_zero_fn() const;

  GridFn scaled(const Scalar& c) const;

  /// Pointwise a*f + b*g (f, g on the same poset).
  static GridFn linear_combo(const Scalar& a, const GridFn& f, const Scalar& b, const GridFn& g);

  static GridFn zero(std::shared_ptr<const Poset> poset, Numeric num = Numeric::exact_mode());
  static GridFn constant(std::shared_ptr<const Poset> poset, const Scalar& c,
                         Numeric num = Numeric::exact_mode());

 private:
  std::shared_ptr<const Poset> poset_;
  std::vector<Scalar> values_;
  Numeric num_;
};

/// Fails unless f and g share one poset structure.
void require_same_poset(const GridFn& f, const GridFn& g);

}  // namespace scd
