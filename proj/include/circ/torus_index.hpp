#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "circ/errors.hpp"
#include "circ/types.hpp"

namespace circ {

/// The index ring Z_{n1} x ... x Z_{nd}. d = 1 covers the plain circle Z_n.
/// Every axis size is at least 1 and the total cardinality must fit size_t.
class TorusDims {
 public:
  explicit TorusDims(std::vector<std::size_t> sizes);
  TorusDims(std::initializer_list<std::size_t> sizes);

  std::size_t rank() const { return sizes_.size(); }  // d
  std::size_t extent(std::size_t axis) const;         // n_q, axis in [0, d)
  std::size_t cardinality() const { return cardinality_; }
  const std::vector<std::size_t>& sizes() const { return sizes_; }

  bool operator==(const TorusDims&) const = default;

 private:
  std::vector<std::size_t> sizes_;
  std::size_t cardinality_ = 1;
};

/// A point of the torus. Components are stored already reduced mod n_q;
/// construct from raw signed integers with reduce().
class MultiIndex {
 public:
  MultiIndex(TorusDims dims, std::vector<std::size_t> reduced);

  static MultiIndex origin(const TorusDims& dims);

  const TorusDims& dims() const { return dims_; }
  std::size_t rank() const { return dims_.rank(); }
  std::size_t component(std::size_t axis) const;
  const std::vector<std::size_t>& components() const { return components_; }

  bool operator==(const MultiIndex&) const = default;

 private:
  TorusDims dims_;
  std::vector<std::size_t> components_;
};

/// rho^m = exp(i 2 pi m / n) on the unit circle, with the exponent kept
/// reduced mod n.
struct RootOfUnity {
  std::size_t n = 1;
  std::size_t exponent = 0;
  Complex value{1.0, 0.0};
};

/// Componentwise reduction mod n_q of raw signed integers.
MultiIndex reduce(std::span<const long long> raw, const TorusDims& dims);
MultiIndex reduce(std::initializer_list<long long> raw, const TorusDims& dims);

MultiIndex add(const MultiIndex& a, const MultiIndex& b);
MultiIndex sub(const MultiIndex& a, const MultiIndex& b);

RootOfUnity root_of_unity(std::size_t n, long long m);

/// Row-major flat offset with the LAST axis fastest; delinearize inverts it.
std::size_t linearize(const MultiIndex& idx);
MultiIndex delinearize(std::size_t offset, const TorusDims& dims);

}  // namespace circ
