#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphsmooth/catalog.hpp"
#include "sphsmooth/smoothness.hpp"
#include "sphsmooth/spherical_data.hpp"

namespace sphsmooth {

inline constexpr const char* kSchema = "sphsmooth/1";

/// Malformed text or a structural problem; `where` is a JSON pointer or a byte offset.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(const std::string& where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

enum class DocumentKind { Datum, System };

struct CatalogSource {
  int id = 0;
  Params params;
  bool operator==(const CatalogSource&) const = default;
};

struct Document {
  DocumentKind kind = DocumentKind::Datum;
  HomogeneousSphericalDatum datum;  // kind Datum
  std::optional<ColoredCone> cone;  // kind Datum
  SphericalSystem system;           // kind System
  std::set<std::size_t> marked;     // kind System, indices into sigma
  std::optional<CatalogSource> source;
  bool operator==(const Document&) const = default;
};

/// Components may be written with non-normal names (B1, C1, D2, D3); they are
/// normalized and vectors indexed by simple roots are permuted accordingly.
Document parse_document(const std::string& text);
std::string emit_document(const Document& d);

Document datum_document(HomogeneousSphericalDatum d, std::optional<ColoredCone> cone = std::nullopt);
Document system_document(SphericalSystem s, std::set<std::size_t> marked = {},
                         std::optional<CatalogSource> source = std::nullopt);

/// Machine-readable smoothness report; `verdict` mirrors the exit code semantics.
std::string report_to_json(const HomogeneousSphericalDatum& d, const SmoothnessReport& r);
std::string factoriality_to_json(const FactorialityReport& r);
std::string validation_to_json(const ValidationReport& r);

}  // namespace sphsmooth
