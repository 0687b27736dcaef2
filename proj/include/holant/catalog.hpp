#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "holant/grid.hpp"

namespace holant {

// One gadget identity. Statements are kept as text and run once per parameter assignment.
struct CatalogEntry {
  struct Statement {
    int line = 0;
    std::string keyword;
    std::string rest;
  };
  std::string name;
  std::string anchor;
  std::vector<Statement> statements;
};

struct CatalogResult {
  std::string name;
  std::string anchor;
  bool passed = false;
  int instances = 0;    // parameter assignments evaluated
  int comparisons = 0;  // expect lines checked over all instances
  std::string message;  // first failure, empty on success
};

std::vector<CatalogEntry> parse_catalog(std::string_view text);
std::vector<CatalogResult> verify_catalog(const std::vector<CatalogEntry>& entries, int limit = kDefaultEdgeLimit);

// Location of the catalog shipped with the sources.
std::string default_catalog_path();

// Expression values: scalars, lists (signatures, vectors) and matrices.
struct Value {
  enum class Kind { scalar, list, matrix };
  Kind kind = Kind::scalar;
  Matrix m;  // 1x1 scalar, n x 1 list

  static Value scalar(const Scalar& z);
  static Value list(const Vector& v);
  static Value matrix(const Matrix& m);
  const Scalar& as_scalar() const;
  Vector as_list() const;
};
std::string to_string(const Value& v);

}  // namespace holant
