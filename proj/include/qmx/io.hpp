#pragma once

// Binary snapshot format "QMX1" and the diagnostics CSV contract. Snapshots
// are header (magic, version, dims, field count, one tag byte per field)
// followed by little-endian f64 arrays in x-fastest order, vector fields as
// three consecutive component arrays. Round-trips are bit-exact. CSV values
// carry 17 significant digits so they re-parse to the exact doubles.

#include <cstdint>
#include <string>
#include <vector>

#include "qmx/dynamics.hpp"
#include "qmx/fields.hpp"

namespace qmx {

inline constexpr char kSnapshotMagic[4] = {'Q', 'M', 'X', '1'};
inline constexpr std::uint32_t kSnapshotVersion = 1;

// One tag byte per field: scalars 'T' (temporal), 'r' (charge density),
// 'U' (scalar potential); vectors 'E', 'B', 'J', 'A'.
enum class FieldTag : char {
  T = 'T',
  E = 'E',
  B = 'B',
  Rho = 'r',
  J = 'J',
  U = 'U',
  A = 'A',
};

bool tag_is_vector(FieldTag tag);

struct SnapshotField {
  FieldTag tag;
  // cells doubles for a scalar tag; 3 * cells (x block, y block, z block)
  // for a vector tag.
  std::vector<double> data;
};

struct Snapshot {
  std::uint32_t nx = 1, ny = 1, nz = 1;
  std::vector<SnapshotField> fields;

  std::size_t cells() const {
    return static_cast<std::size_t>(nx) * ny * nz;
  }
};

SnapshotField snapshot_field(FieldTag tag, const ScalarField& f);
SnapshotField snapshot_field(FieldTag tag, const VectorField& f);

void write_snapshot(const std::string& path, const Snapshot& snap);
Snapshot read_snapshot(const std::string& path);

// Fixed-format number: up to 17 significant digits, '.' decimal separator,
// locale independent.
std::string format_g17(double v);

// Header plus one line per advanced step (rows[0], the initial state, stays
// in memory only).
void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRow>& rows);

// Generic small-table writer for the thermo scenario outputs.
void write_table_csv(const std::string& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& columns);

}  // namespace qmx
