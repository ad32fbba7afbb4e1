#pragma once

// Embedded reference data: the low-dimensional algebras with their expected
// invariants, the printed decompositions of the singular dimension-5 cases, and
// the checks that compare computed results against them.

#include "nilkur/algebra.hpp"
#include "nilkur/groebner.hpp"
#include "nilkur/kuranishi.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nilkur {

/// An ideal printed as an intersection of components. Lines with a suspected
/// misprint carry alternate readings ("a | b" in the text form).
struct PrintedIdeal {
  // components[c][line][alternative]; alternative 0 is the printed reading
  std::vector<std::vector<std::vector<Polynomial>>> components;

  bool has_alternates() const;
  /// Every combination of readings; each reading is a list of components.
  std::vector<std::vector<IdealGens>> readings() const;
  /// The lines that take an alternate in readings()[k], e.g. "component 1 line 3".
  std::vector<std::string> alternates_used(std::size_t k) const;
};

/// Components separated by lines "cap"; one polynomial per line; '#' comments.
PrintedIdeal parse_printed_ideal(std::string_view text);

/// Raw text of an embedded data file, e.g. "0_0_0_12_13"; empty if unknown.
std::string_view embedded_ideal_text(std::string_view stem);

struct CatalogEntry {
  std::string name;
  std::string definition;  // Salamon string, or the dw-notation text of a general structure
  bool general = false;
  std::optional<unsigned> max_degree;  // recursion cap for general structures

  // expected invariants
  std::optional<std::size_t> nu;
  std::optional<std::size_t> h1_theta;
  std::optional<bool> smooth;
  std::optional<std::size_t> d;
  std::string ideal_stem;               // embedded printed decomposition, if any
  std::vector<std::string> generators;  // explicit generators of the obstruction ideal, if printed
  std::string note;

  LieAlgebra lie_algebra() const;
  ComplexStructureAlgebra complex_structure() const;
};

const std::vector<CatalogEntry>& catalog();
/// Looks up by name or by Salamon string (whitespace ignored); nullptr if absent.
const CatalogEntry* find_entry(std::string_view selector);

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string entry;
  std::string check;
  CheckStatus status = CheckStatus::fail;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  double timeout_seconds = 300;
  unsigned jobs = 1;
  unsigned random_points = 10;
  unsigned seed = 20240601;
};

std::vector<CheckResult> verify_entry(const CatalogEntry& e, const VerifyOptions& options);
/// Runs entries concurrently (up to options.jobs at a time); results keep catalog order.
std::vector<CheckResult> verify(const std::vector<const CatalogEntry*>& entries, const VerifyOptions& options);

}  // namespace nilkur
