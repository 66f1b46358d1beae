#pragma once

// Complete sets of mutually unbiased bases in C^q built from a planar function
// or from the cubic Alltop construction, stored as tables of phase exponents
// and verified in exact integer arithmetic.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "planarlab/cyclo.hpp"

namespace planarlab {

/// The vector (w^exponents[x] / sqrt(q))_x, indexed by element encoding.
struct PhaseVector {
  std::vector<std::uint16_t> exponents;

  friend bool operator==(const PhaseVector&, const PhaseVector&) = default;
};

enum class Construction { Planar, Alltop };

std::string_view to_string(Construction c) noexcept;
Construction construction_from_string(std::string_view s);

/// Either the standard basis (no vectors stored) or V_a = { v_ab : b }.
struct MubBasis {
  bool standard = false;
  Elem a = 0;
  std::vector<PhaseVector> vectors;

  friend bool operator==(const MubBasis&, const MubBasis&) = default;
};

/// Standard basis first, then V_a for a ascending; vectors by b ascending.
struct MubSet {
  Field field;
  Construction construction;
  std::string poly;
  std::vector<MubBasis> bases;
};

/// exponents[x] = tr(a*Pi(x) + b*x). Throws NotPlanar unless Pi is planar.
MubSet build_planar_mubs(const Field& field, const Poly& pi);

/// exponents[x] = tr((x+a)^3 + b*(x+a)). Throws CharacteristicTooSmall for p < 5.
MubSet build_alltop_mubs(const Field& field);

struct MubViolation {
  std::size_t basis1 = 0;
  std::size_t vector1 = 0;
  std::size_t basis2 = 0;
  std::size_t vector2 = 0;
  BigInt expected;
  MagSqResult found;
};

struct MubReport {
  bool pass = false;
  std::size_t bases = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t violation_count = 0;
  /// The first kMaxListed violations in (basis1, basis2, vector1, vector2) order.
  std::vector<MubViolation> violations;
  std::vector<std::string> structural_errors;
  /// Phase vectors have entries of modulus 1/sqrt(q), so every one of them is
  /// unbiased with respect to the standard basis.
  bool standard_basis_unbiased = false;

  static constexpr std::size_t kMaxListed = 64;
};

/// Within each phase basis: q^2 on the diagonal and 0 off it. Across phase
/// bases: q for every pair. All comparisons are on exact integers.
MubReport verify_mub_set(const MubSet& m, unsigned workers = 1);

enum class ExportFormat { Json, Csv, FloatJson };

ExportFormat export_format_from_string(std::string_view s);

void export_mubs(const MubSet& m, ExportFormat format, std::ostream& out);
std::string export_mubs(const MubSet& m, ExportFormat format);

/// Reads the exact JSON export. The stored modulus must match the canonical one.
MubSet import_mubs_json(std::string_view text);

/// Reads the CSV export; the standard basis is implicit and restored first.
MubSet import_mubs_csv(std::string_view text, const Field& field, Construction construction, std::string poly);

}  // namespace planarlab
