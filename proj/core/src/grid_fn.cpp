#include "scd/grid_fn.hpp"

namespace scd {

GridFn::GridFn(std::shared_ptr<const Poset> poset, std::vector<Scalar> values, Numeric num)
    : poset_(std::move(poset)), values_(std::move(values)), num_(num) {
  if (!poset_) throw PreconditionError("null-poset", "grid function needs a poset");
  if (static_cast<int>(values_.size()) != poset_->size()) {
    throw PreconditionError("not-total", "grid function must assign a value to every type");
  }
  if (num_.exact) {
    for (const auto& v : values_) {
      if (!v.exact()) {
        throw PreconditionError("not-exact", "exact-mode grid function holds a float value");
      }
    }
  }
}

bool GridFn::is_zero_fn() const {
  for (int i = 0; i < size(); ++i) {
    if (sign_at(i) != 0) return false;
  }
  return true;
}

GridFn GridFn::scaled(const Scalar& c) const {
  std::vector<Scalar> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(c * v);
  Numeric n = num_;
  if (!c.exact()) n.exact = false;
  return GridFn(poset_, std::move(out), n);
}

GridFn GridFn::linear_combo(const Scalar& a, const GridFn& f, const Scalar& b, const GridFn& g) {
  require_same_poset(f, g);
  std::vector<Scalar> out;
  out.reserve(f.size());
  for (int i = 0; i < f.size(); ++i) out.push_back(a * f[i] + b * g[i]);
  Numeric n = f.num_;
  if (!g.num_.exact) n = g.num_;
  if (!a.exact() || !b.exact()) n.exact = false;
  return GridFn(f.poset_, std::move(out), n);
}

GridFn GridFn::zero(std::shared_ptr<const Poset> poset, Numeric num) {
  std::vector<Scalar> vals(poset->size(), Scalar(0));
  return GridFn(std::move(poset), std::move(vals), num);
}

GridFn GridFn::constant(std::shared_ptr<const Poset> poset, const Scalar& c, Numeric num) {
  std::vector<Scalar> vals(poset->size(), c);
  return GridFn(std::move(poset), std::move(vals), num);
}

void require_same_poset(const GridFn& f, const GridFn& g) {
  if (&f.poset() == &g.poset()) return;
  if (!f.poset().same_structure(g.poset())) {
    throw PreconditionError("poset-mismatch", "grid functions live on different posets");
  }
}

}  // namespace scd
