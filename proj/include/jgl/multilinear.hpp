#pragma once

// Sparse structure-constant tensors for bilinear and trilinear maps.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <vector>

#include "matrix.hpp"

namespace jgl {

struct TensorTerm {
  std::array<std::uint32_t, 3> index{};  // unused trailing slots are 0
  std::uint32_t target = 0;
  Scalar coeff;
};

/// Index tuple into the slots of a map (arity entries used).
using BasisTuple = std::array<std::size_t, 3>;

class MultilinearMap {
 public:
  MultilinearMap() = default;

  /// Empty (zero) map with the given shape.
  MultilinearMap(const Ring& ring, std::vector<std::size_t> slot_dims, std::size_t target_dim)
      : ring_(ring), slot_dims_(std::move(slot_dims)), target_dim_(target_dim) {
    if (slot_dims_.size() != 2 && slot_dims_.size() != 3) throw Error("arity must be 2 or 3");
    rebuild_offsets();
  }

  /// Takes ownership of terms; duplicate keys are summed and zeros dropped.
  MultilinearMap(const Ring& ring, std::vector<std::size_t> slot_dims, std::size_t target_dim,
                 std::vector<TensorTerm> terms)
      : MultilinearMap(ring, std::move(slot_dims), target_dim) {
    for (const auto& t : terms) check_term(t);
    std::sort(terms.begin(), terms.end(), key_less);
    for (auto& t : terms) {
      if (!terms_.empty() && same_key(terms_.back(), t)) {
        terms_.back().coeff += t.coeff;
      } else {
        terms_.push_back(t);
      }
    }
    std::erase_if(terms_, [](const TensorTerm& t) { return t.coeff.is_zero(); });
    rebuild_offsets();
  }

  const Ring& ring() const { return ring_; }
  std::size_t arity() const { return slot_dims_.size(); }
  const std::vector<std::size_t>& slot_dims() const { return slot_dims_; }
  std::size_t slot_dim(std::size_t s) const { return slot_dims_.at(s); }
  std::size_t target_dim() const { return target_dim_; }
  const std::vector<TensorTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Vector evaluate(const Vector& x, const Vector& y) const {
    if (arity() != 2) throw Error("evaluate: arity mismatch");
    check_arg(0, x);
    check_arg(1, y);
    Vector out(target_dim_, ring_.zero());
    for (std::size_t i = 0; i < slot_dims_[0]; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t t = offsets_[i]; t < offsets_[i + 1]; ++t) {
        const auto& term = terms_[t];
        const Scalar& b = y[term.index[1]];
        if (b.is_zero()) continue;
        out[term.target] += term.coeff * x[i] * b;
      }
    }
    return out;
  }

  Vector evaluate(const Vector& x, const Vector& y, const Vector& z) const {
    if (arity() != 3) throw Error("evaluate: arity mismatch");
    check_arg(0, x);
    check_arg(1, y);
    check_arg(2, z);
    Vector out(target_dim_, ring_.zero());
    for (std::size_t i = 0; i < slot_dims_[0]; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t t = offsets_[i]; t < offsets_[i + 1]; ++t) {
        const auto& term = terms_[t];
        const Scalar& b = y[term.index[1]];
        if (b.is_zero()) continue;
        const Scalar& c = z[term.index[2]];
        if (c.is_zero()) continue;
        out[term.target] += term.coeff * x[i] * b * c;
      }
    }
    return out;
  }

  Vector evaluate(const std::vector<Vector>& args) const {
    if (args.size() != arity()) throw Error("evaluate: wrong number of arguments");
    return arity() == 2 ? evaluate(args[0], args[1]) : evaluate(args[0], args[1], args[2]);
  }

  /// Value on basis vectors (e_i, e_j[, e_k]).
  Vector evaluate_basis(const BasisTuple& idx) const {
    Vector out(target_dim_, ring_.zero());
    for (std::size_t t = offsets_.at(idx[0]); t < offsets_.at(idx[0] + 1); ++t) {
      const auto& term = terms_[t];
      if (term.index[1] == idx[1] && (arity() == 2 || term.index[2] == idx[2])) out[term.target] += term.coeff;
    }
    return out;
  }

  Scalar coefficient(const BasisTuple& idx, std::size_t target) const { return evaluate_basis(idx).at(target); }

  /// Matrix (target_dim x slot_dim(slot)) of the linear map obtained by fixing
  /// every other slot; fixed[slot] is ignored.
  Matrix linear_in_slot(std::size_t slot, const std::vector<Vector>& fixed) const {
    if (fixed.size() != arity()) throw Error("linear_in_slot: wrong number of arguments");
    Matrix m(ring_, target_dim_, slot_dims_.at(slot));
    for (const auto& term : terms_) {
      Scalar c = term.coeff;
      for (std::size_t s = 0; s < arity() && !c.is_zero(); ++s) {
        if (s != slot) c *= fixed[s][term.index[s]];
      }
      if (!c.is_zero()) m(term.target, term.index[slot]) += c;
    }
    return m;
  }

  MultilinearMap scaled(const Scalar& c) const {
    std::vector<TensorTerm> t = terms_;
    for (auto& term : t) term.coeff *= c;
    return MultilinearMap(ring_, slot_dims_, target_dim_, std::move(t));
  }

  friend MultilinearMap operator+(const MultilinearMap& a, const MultilinearMap& b) {
    a.check_shape(b);
    std::vector<TensorTerm> t = a.terms_;
    t.insert(t.end(), b.terms_.begin(), b.terms_.end());
    return MultilinearMap(a.ring_, a.slot_dims_, a.target_dim_, std::move(t));
  }
  friend MultilinearMap operator-(const MultilinearMap& a, const MultilinearMap& b) {
    return a + b.scaled(-a.ring_.one());
  }

  friend bool operator==(const MultilinearMap& a, const MultilinearMap& b) {
    if (!(a.ring_ == b.ring_) || a.slot_dims_ != b.slot_dims_ || a.target_dim_ != b.target_dim_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!same_key(a.terms_[i], b.terms_[i]) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    }
    return true;
  }

  /// Pulls back along linear maps on each slot and pushes forward on the target:
  /// result(x,y,z) = out * T(in0 x, in1 y, in2 z).
  MultilinearMap transform(const std::vector<Matrix>& in, const Matrix& out) const {
    if (in.size() != arity()) throw Error("transform: wrong number of slot maps");
    std::vector<std::size_t> dims;
    for (std::size_t s = 0; s < arity(); ++s) {
      if (in[s].rows() != slot_dims_[s]) throw Error("transform: slot map shape mismatch");
      dims.push_back(in[s].cols());
    }
    if (out.cols() != target_dim_) throw Error("transform: target map shape mismatch");
    std::vector<Matrix> in_copy = in;
    return from_closed_form(ring_, dims, out.rows(), [&](const BasisTuple& idx) {
      std::vector<Vector> args;
      for (std::size_t s = 0; s < arity(); ++s) args.push_back(in_copy[s].col(idx[s]));
      return out.apply(evaluate(args));
    });
  }

  /// Tensor agreeing with f on every basis tuple.
  static MultilinearMap from_closed_form(const Ring& ring, const std::vector<std::size_t>& slot_dims,
                                         std::size_t target_dim,
                                         const std::function<Vector(const BasisTuple&)>& f) {
    std::vector<TensorTerm> terms;
    const std::size_t d2 = slot_dims.size() == 3 ? slot_dims[2] : 1;
    for (std::size_t i = 0; i < slot_dims.at(0); ++i) {
      for (std::size_t j = 0; j < slot_dims.at(1); ++j) {
        for (std::size_t k = 0; k < d2; ++k) {
          Vector v = f({i, j, k});
          if (v.size() != target_dim) throw Error("closed-form evaluator returned wrong length");
          for (std::size_t t = 0; t < target_dim; ++t) {
            if (!v[t].is_zero()) {
              terms.push_back({{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                                static_cast<std::uint32_t>(k)},
                               static_cast<std::uint32_t>(t), v[t]});
            }
          }
        }
      }
    }
    return MultilinearMap(ring, slot_dims, target_dim, std::move(terms));
  }

 private:
  static bool key_less(const TensorTerm& a, const TensorTerm& b) {
    if (a.index != b.index) return a.index < b.index;
    return a.target < b.target;
  }
  static bool same_key(const TensorTerm& a, const TensorTerm& b) {
    return a.index == b.index && a.target == b.target;
  }

  void check_term(const TensorTerm& t) const {
    for (std::size_t s = 0; s < 3; ++s) {
      std::size_t bound = s < arity() ? slot_dims_[s] : 1;
      if (t.index[s] >= bound) throw Error("tensor index out of range");
    }
    if (t.target >= target_dim_) throw Error("tensor target index out of range");
    if (t.coeff.modulus() != ring_.characteristic()) throw Error("tensor coefficient from another ring");
  }
  void check_arg(std::size_t s, const Vector& v) const {
    if (v.size() != slot_dims_[s]) throw Error("evaluate: argument " + std::to_string(s) + " has wrong length");
  }
  void check_shape(const MultilinearMap& o) const {
    if (slot_dims_ != o.slot_dims_ || target_dim_ != o.target_dim_) throw Error("tensor shape mismatch");
  }
  void rebuild_offsets() {
    offsets_.assign(slot_dims_.empty() ? 1 : slot_dims_[0] + 1, 0);
    for (const auto& t : terms_) ++offsets_[t.index[0] + 1];
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  }

  Ring ring_;
  std::vector<std::size_t> slot_dims_;
  std::size_t target_dim_ = 0;
  std::vector<TensorTerm> terms_;
  std::vector<std::size_t> offsets_;
};

inline MultilinearMap tensor_from_closed_form(const Ring& ring, const std::vector<std::size_t>& slot_dims,
                                              std::size_t target_dim,
                                              const std::function<Vector(const BasisTuple&)>& f) {
  return MultilinearMap::from_closed_form(ring, slot_dims, target_dim, f);
}

}  // namespace jgl
