#include "circ/torus_index.hpp"

#include <limits>
#include <string>
#include <utility>

namespace circ {

namespace {

constexpr std::size_t kMaxAxisExtent =
    static_cast<std::size_t>(std::numeric_limits<long long>::max());

std::size_t reduce_component(long long raw, std::size_t extent) {
  const long long n = static_cast<long long>(extent);
  long long r = raw % n;
  if (r < 0) r += n;
  return static_cast<std::size_t>(r);
}

}  // namespace

TorusDims::TorusDims(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw DomainError("TorusDims: rank d must be at least 1");
  for (std::size_t n : sizes_) {
    if (n == 0) throw DomainError("TorusDims: every axis size must be >= 1");
    if (n > kMaxAxisExtent) throw DomainError("TorusDims: axis size too large");
    if (cardinality_ > std::numeric_limits<std::size_t>::max() / n)
      throw DomainError("TorusDims: cardinality overflows the index range");
    cardinality_ *= n;
  }
}

TorusDims::TorusDims(std::initializer_list<std::size_t> sizes)
    : TorusDims(std::vector<std::size_t>(sizes)) {}

std::size_t TorusDims::extent(std::size_t axis) const {
  if (axis >= sizes_.size())
    throw DomainError("TorusDims: axis " + std::to_string(axis) + " out of range");
  return sizes_[axis];
}

MultiIndex::MultiIndex(TorusDims dims, std::vector<std::size_t> reduced)
    : dims_(std::move(dims)), components_(std::move(reduced)) {
  if (components_.size() != dims_.rank())
    throw DimensionError("MultiIndex: component count does not match rank");
  for (std::size_t q = 0; q < components_.size(); ++q) {
    if (components_[q] >= dims_.extent(q))
      throw DomainError("MultiIndex: component not reduced mod n_q");
  }
}

MultiIndex MultiIndex::origin(const TorusDims& dims) {
  return MultiIndex(dims, std::vector<std::size_t>(dims.rank(), 0));
}

std::size_t MultiIndex::component(std::size_t axis) const {
  if (axis >= components_.size())
    throw DomainError("MultiIndex: axis out of range");
  return components_[axis];
}

MultiIndex reduce(std::span<const long long> raw, const TorusDims& dims) {
  if (raw.size() != dims.rank())
    throw DimensionError("reduce: raw index length does not match rank");
  std::vector<std::size_t> reduced(dims.rank());
  for (std::size_t q = 0; q < dims.rank(); ++q)
    reduced[q] = reduce_component(raw[q], dims.extent(q));
  return MultiIndex(dims, std::move(reduced));
}

MultiIndex reduce(std::initializer_list<long long> raw, const TorusDims& dims) {
  return reduce(std::span<const long long>(raw.begin(), raw.size()), dims);
}

MultiIndex add(const MultiIndex& a, const MultiIndex& b) {
  if (a.dims() != b.dims()) throw DimensionError("add: torus dims mismatch");
  std::vector<std::size_t> out(a.rank());
  for (std::size_t q = 0; q < a.rank(); ++q) {
    const std::size_t n = a.dims().extent(q);
    out[q] = (a.component(q) + b.component(q)) % n;
  }
  return MultiIndex(a.dims(), std::move(out));
}

MultiIndex sub(const MultiIndex& a, const MultiIndex& b) {
  if (a.dims() != b.dims()) throw DimensionError("sub: torus dims mismatch");
  std::vector<std::size_t> out(a.rank());
  for (std::size_t q = 0; q < a.rank(); ++q) {
    const std::size_t n = a.dims().extent(q);
    out[q] = (a.component(q) + n - b.component(q)) % n;
  }
  return MultiIndex(a.dims(), std::move(out));
}

RootOfUnity root_of_unity(std::size_t n, long long m) {
  if (n == 0) throw DomainError("root_of_unity: n must be >= 1");
  if (n > kMaxAxisExtent) throw DomainError("root_of_unity: n too large");
  const std::size_t exponent = reduce_component(m, n);
  const double angle = kTwoPi * static_cast<double>(exponent) / static_cast<double>(n);
  return RootOfUnity{n, exponent, std::polar(1.0, angle)};
}

std::size_t linearize(const MultiIndex& idx) {
  std::size_t offset = 0;
  for (std::size_t q = 0; q < idx.rank(); ++q)
    offset = offset * idx.dims().extent(q) + idx.component(q);
  return offset;
}

MultiIndex delinearize(std::size_t offset, const TorusDims& dims) {
  if (offset >= dims.cardinality())
    throw DomainError("delinearize: offset out of range");
  std::vector<std::size_t> components(dims.rank());
  for (std::size_t q = dims.rank(); q-- > 0;) {
    const std::size_t n = dims.extent(q);
    components[q] = offset % n;
    offset /= n;
  }
  return MultiIndex(dims, std::move(components));
}

}  // namespace circ
