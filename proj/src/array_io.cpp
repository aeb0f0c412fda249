#include "circ/array_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace circ {

namespace {

using nlohmann::json;

std::vector<std::size_t> dims_of(const TorusDims& dims) { return dims.sizes(); }

void validate(const ArrayDocument& doc) {
  if (doc.dims.empty()) throw DomainError("ArrayDocument: dims must be nonempty");
  std::size_t card = 1;
  for (std::size_t n : doc.dims) {
    if (n == 0) throw DomainError("ArrayDocument: dims entries must be >= 1");
    card *= n;
  }
  if (doc.data.size() != card)
    throw DimensionError("ArrayDocument: data length does not match dims");
  for (const Complex& z : doc.data)
    if (!is_finite(z)) throw DomainError("ArrayDocument: entries must be finite");
}

}  // namespace

ArrayDocument document_from(const NdArray& a, std::string name) {
  return ArrayDocument{dims_of(a.dims()), a.values(), std::move(name), std::nullopt};
}

ArrayDocument document_from(const CVector& x, std::string name) {
  return ArrayDocument{{x.size()}, x.entries(), std::move(name), std::nullopt};
}

ArrayDocument document_from(const Spectrum& s, std::string name) {
  return ArrayDocument{{s.size()}, s.entries(), std::move(name), s.ordering()};
}

ArrayDocument document_from(const DenseMatrix& m, std::string name) {
  return ArrayDocument{{m.rows(), m.cols()}, m.data(), std::move(name), std::nullopt};
}

NdArray to_ndarray(const ArrayDocument& doc) {
  validate(doc);
  return NdArray(TorusDims(doc.dims), doc.data);
}

CVector to_cvector(const ArrayDocument& doc) {
  validate(doc);
  if (doc.dims.size() != 1)
    throw DimensionError("ArrayDocument: expected a 1-D array, got rank " +
                         std::to_string(doc.dims.size()));
  return CVector(doc.data);
}

DenseMatrix to_dense_matrix(const ArrayDocument& doc) {
  validate(doc);
  if (doc.dims.size() != 2)
    throw DimensionError("ArrayDocument: expected a 2-D array (matrix)");
  DenseMatrix m(doc.dims[0], doc.dims[1]);
  for (std::size_t i = 0; i < doc.dims[0]; ++i)
    for (std::size_t j = 0; j < doc.dims[1]; ++j)
      m(i, j) = doc.data[i * doc.dims[1] + j];
  return m;
}

// Laid out by hand so each [re, im] pair sits on one line; the numbers
// themselves go through the JSON library's shortest round-trip formatting.
std::string to_json(const ArrayDocument& doc) {
  validate(doc);
  std::ostringstream out;
  out << "{\n  \"dims\": [";
  for (std::size_t q = 0; q < doc.dims.size(); ++q)
    out << (q ? ", " : "") << doc.dims[q];
  out << "],\n  \"data\": [\n";
  for (std::size_t k = 0; k < doc.data.size(); ++k) {
    out << "    [" << json(doc.data[k].real()).dump() << ", "
        << json(doc.data[k].imag()).dump() << "]"
        << (k + 1 < doc.data.size() ? "," : "") << "\n";
  }
  out << "  ]";
  if (!doc.name.empty()) out << ",\n  \"name\": " << json(doc.name).dump();
  if (doc.ordering)
    out << ",\n  \"ordering\": \""
        << (*doc.ordering == SpectrumOrdering::standard ? "standard" : "alternate")
        << "\"";
  out << "\n}\n";
  return out.str();
}

ArrayDocument parse_json_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("ArrayDocument: invalid JSON: ") + e.what());
  }
  ArrayDocument doc;
  try {
    if (!j.is_object() || !j.contains("dims") || !j.contains("data"))
      throw DomainError("ArrayDocument: need an object with dims and data");
    doc.dims = j.at("dims").get<std::vector<std::size_t>>();
    for (const json& pair : j.at("data")) {
      if (!pair.is_array() || pair.size() != 2)
        throw DomainError("ArrayDocument: data entries must be [re, im] pairs");
      doc.data.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
    if (j.contains("name")) doc.name = j.at("name").get<std::string>();
    if (j.contains("ordering")) {
      const std::string tag = j.at("ordering").get<std::string>();
      if (tag == "standard")
        doc.ordering = SpectrumOrdering::standard;
      else if (tag == "alternate")
        doc.ordering = SpectrumOrdering::alternate;
      else
        throw DomainError("ArrayDocument: unknown ordering tag '" + tag + "'");
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("ArrayDocument: malformed document: ") + e.what());
  }
  validate(doc);
  return doc;
}

ArrayDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open input file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();

  if (path.extension() == ".csv") {
    ArrayDocument doc;
    std::istringstream lines(buffer.str());
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
      ++lineno;
      if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos)
        continue;
      try {
        std::size_t used = 0;
        const double value = std::stod(line, &used);
        if (line.find_first_not_of(" \t\r", used) != std::string::npos)
          throw DomainError("trailing characters");
        doc.data.emplace_back(value, 0.0);
      } catch (const std::exception&) {
        throw DomainError("CSV: cannot parse line " + std::to_string(lineno) +
                          " of " + path.string());
      }
    }
    doc.dims = {doc.data.size()};
    validate(doc);
    return doc;
  }
  return parse_json_document(buffer.str());
}

void write_document(const ArrayDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open output file: " + path.string());
  out << to_json(doc);
  if (!out) throw DomainError("failed writing output file: " + path.string());
}

}  // namespace circ
