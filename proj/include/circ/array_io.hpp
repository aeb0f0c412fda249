#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "circ/dft_core.hpp"
#include "circ/nd_circulant.hpp"

namespace circ {

/// File representation of a torus array: dims plus flat [re, im] pairs in
/// linearize order. Spectra additionally carry their ordering tag.
struct ArrayDocument {
  std::vector<std::size_t> dims;
  std::vector<Complex> data;
  std::string name;  // empty = absent
  std::optional<SpectrumOrdering> ordering;
};

ArrayDocument document_from(const NdArray& a, std::string name = "");
ArrayDocument document_from(const CVector& x, std::string name = "");
ArrayDocument document_from(const Spectrum& s, std::string name = "");
ArrayDocument document_from(const DenseMatrix& m, std::string name = "");

NdArray to_ndarray(const ArrayDocument& doc);
CVector to_cvector(const ArrayDocument& doc);       // requires 1-D
DenseMatrix to_dense_matrix(const ArrayDocument& doc);  // requires 2-D

std::string to_json(const ArrayDocument& doc);
ArrayDocument parse_json_document(const std::string& text);

/// .csv reads one real value per line (1-D, zero imaginary parts);
/// anything else is parsed as JSON.
ArrayDocument read_document(const std::filesystem::path& path);
void write_document(const ArrayDocument& doc, const std::filesystem::path& path);

}  // namespace circ
