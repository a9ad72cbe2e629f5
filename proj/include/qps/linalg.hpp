#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qps/algebra.hpp"
#include "qps/field.hpp"

namespace qps {

/// Sparse exact vector keyed by a pair of packed monomials (second slot 0
/// when indexing a plain Element).
using SparseKey = std::pair<uint64_t, uint64_t>;
using SparseVec = std::map<SparseKey, Scalar>;

inline void sparse_add(SparseVec& v, const SparseVec& w, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [k, s] : w) {
    auto it = v.find(k);
    if (it == v.end()) {
      Scalar t = s * c;
      if (!t.is_zero()) v.emplace(k, std::move(t));
    } else {
      it->second += s * c;
      if (it->second.is_zero()) v.erase(it);
    }
  }
}

inline SparseVec to_sparse(const Element& e) {
  SparseVec v;
  for (const auto& [m, c] : e.terms()) v.emplace(SparseKey{m, 0}, c);
  return v;
}

inline SparseVec to_sparse(const TensorElement& t) {
  SparseVec v;
  for (const auto& [k, c] : t.terms()) v.emplace(k, c);
  return v;
}

/// Incremental exact row reduction with dependency tracking. Vectors are fed
/// one at a time; each one either increases the rank or yields the exact
/// linear combination of earlier inputs it equals (a kernel relation).
class RowReducer {
 public:
  using Combo = std::map<int, Scalar>;  // input index -> coefficient

  /// Feed input vector number n (= count of prior calls). Returns the
  /// dependency combo c with input_n = sum c_i * input_i when the vector is
  /// in the current span, otherwise nullopt (rank grew by one).
  std::optional<Combo> add(SparseVec v) {
    int n = num_inputs_++;
    Combo combo{{n, Scalar(1)}};
    reduce(v, combo);
    if (v.empty()) {
      combo.erase(n);
      for (auto& [i, c] : combo) c = -c;
      return combo;
    }
    SparseKey pivot = v.begin()->first;
    pivot_of_key_.emplace(pivot, int(rows_.size()));
    rows_.push_back(Row{std::move(v), std::move(combo), pivot});
    return std::nullopt;
  }

  /// Coordinates of target over the *input* vectors, or nullopt if outside
  /// the span.
  std::optional<Combo> express(SparseVec target) const {
    Combo combo;
    reduce(target, combo);
    if (!target.empty()) return std::nullopt;
    for (auto& [i, c] : combo) c = -c;
    return combo;
  }

  bool contains(const SparseVec& v) const {
    SparseVec t = v;
    Combo combo;
    reduce(t, combo);
    return t.empty();
  }

  int rank() const { return int(rows_.size()); }
  int num_inputs() const { return num_inputs_; }

 private:
  struct Row {
    SparseVec vec;    // echelon row
    Combo combo;      // vec = sum combo_i * input_i
    SparseKey pivot;  // smallest key of vec
  };

  void reduce(SparseVec& v, Combo& combo) const {
    while (!v.empty()) {
      auto it = pivot_of_key_.find(v.begin()->first);
      if (it == pivot_of_key_.end()) {
        // leading key is not a pivot: try to eliminate deeper keys instead
        bool hit = false;
        for (const auto& [k, c] : v) {
          auto jt = pivot_of_key_.find(k);
          if (jt != pivot_of_key_.end()) {
            eliminate(v, combo, jt->second, c);
            hit = true;
            break;
          }
        }
        if (!hit) return;
      } else {
        eliminate(v, combo, it->second, v.begin()->second);
      }
    }
  }

  void eliminate(SparseVec& v, Combo& combo, int row, const Scalar& coeff) const {
    const Row& r = rows_[row];
    Scalar f = -(coeff / r.vec.at(r.pivot));
    sparse_add(v, r.vec, f);
    for (const auto& [i, c] : r.combo) {
      auto it = combo.find(i);
      if (it == combo.end()) {
        Scalar t = c * f;
        if (!t.is_zero()) combo.emplace(i, std::move(t));
      } else {
        it->second += c * f;
        if (it->second.is_zero()) combo.erase(it);
      }
    }
  }

  int num_inputs_ = 0;
  std::vector<Row> rows_;
  std::map<SparseKey, int> pivot_of_key_;
};

/// Kernel basis of the linear map input_i -> images[i]: each returned combo c
/// satisfies sum c_i * input_i in the kernel, and the combos are independent.
inline std::vector<RowReducer::Combo> kernel_combos(const std::vector<SparseVec>& images) {
  RowReducer red;
  std::vector<RowReducer::Combo> out;
  int idx = 0;
  for (const auto& v : images) {
    auto dep = red.add(v);
    if (dep) {
      // image_n = sum dep_i image_i  =>  input_n - sum dep_i input_i in kernel
      RowReducer::Combo c = *dep;
      for (auto& [i, s] : c) s = -s;
      c[idx] = Scalar(1);
      out.push_back(std::move(c));
    }
    ++idx;
  }
  return out;
}

}  // namespace qps
