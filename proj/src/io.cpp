#include "qmx/io.hpp"

#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace qmx {

static_assert(std::endian::native == std::endian::little,
              "snapshot format assumes a little-endian host");

bool tag_is_vector(FieldTag tag) {
  switch (tag) {
    case FieldTag::E:
    case FieldTag::B:
    case FieldTag::J:
    case FieldTag::A:
      return true;
    case FieldTag::T:
    case FieldTag::Rho:
    case FieldTag::U:
      return false;
  }
  throw std::invalid_argument("snapshot: unknown field tag");
}

namespace {

FieldTag tag_from_byte(char b) {
  switch (b) {
    case 'T': return FieldTag::T;
    case 'E': return FieldTag::E;
    case 'B': return FieldTag::B;
    case 'r': return FieldTag::Rho;
    case 'J': return FieldTag::J;
    case 'U': return FieldTag::U;
    case 'A': return FieldTag::A;
    default:
      throw std::runtime_error(std::string("snapshot: unknown field tag byte '") + b +
                               "'");
  }
}

void put_u32(std::string& buf, std::uint32_t v) {
  char raw[4];
  std::memcpy(raw, &v, 4);
  buf.append(raw, 4);
}

}  // namespace

SnapshotField snapshot_field(FieldTag tag, const ScalarField& f) {
  if (tag_is_vector(tag))
    throw std::invalid_argument("snapshot: vector tag given a scalar field");
  return {tag, f.v};
}

SnapshotField snapshot_field(FieldTag tag, const VectorField& f) {
  if (!tag_is_vector(tag))
    throw std::invalid_argument("snapshot: scalar tag given a vector field");
  SnapshotField out{tag, {}};
  out.data.reserve(3 * f.size());
  out.data.insert(out.data.end(), f.x.begin(), f.x.end());
  out.data.insert(out.data.end(), f.y.begin(), f.y.end());
  out.data.insert(out.data.end(), f.z.begin(), f.z.end());
  return out;
}

void write_snapshot(const std::string& path, const Snapshot& snap) {
  for (const auto& f : snap.fields) {
    const std::size_t expect = (tag_is_vector(f.tag) ? 3 : 1) * snap.cells();
    if (f.data.size() != expect)
      throw std::invalid_argument("snapshot: field payload does not match dims");
  }

  std::string buf;
  buf.append(kSnapshotMagic, 4);
  put_u32(buf, kSnapshotVersion);
  put_u32(buf, snap.nx);
  put_u32(buf, snap.ny);
  put_u32(buf, snap.nz);
  put_u32(buf, static_cast<std::uint32_t>(snap.fields.size()));
  for (const auto& f : snap.fields) buf.push_back(static_cast<char>(f.tag));
  for (const auto& f : snap.fields)
    buf.append(reinterpret_cast<const char*>(f.data.data()),
               f.data.size() * sizeof(double));

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("snapshot: cannot open " + path + " for writing");
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw std::runtime_error("snapshot: short write to " + path);
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("snapshot: cannot open " + path);
  std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  std::size_t pos = 0;
  auto need = [&](std::size_t n, const char* what) {
    if (buf.size() - pos < n)
      throw std::runtime_error("snapshot: truncated " + std::string(what) + " in " +
                               path + ": expected " + std::to_string(pos + n) +
                               " bytes, file has " + std::to_string(buf.size()));
  };
  auto get_u32 = [&](const char* what) {
    need(4, what);
    std::uint32_t v;
    std::memcpy(&v, buf.data() + pos, 4);
    pos += 4;
    return v;
  };

  need(4, "magic");
  if (std::memcmp(buf.data(), kSnapshotMagic, 4) != 0)
    throw std::runtime_error("snapshot: bad magic in " + path);
  pos += 4;

  const std::uint32_t version = get_u32("version");
  if (version != kSnapshotVersion)
    throw std::runtime_error("snapshot: unsupported version " + std::to_string(version));

  Snapshot snap;
  snap.nx = get_u32("nx");
  snap.ny = get_u32("ny");
  snap.nz = get_u32("nz");
  const std::uint32_t count = get_u32("field count");

  need(count, "field tags");
  std::vector<FieldTag> tags;
  tags.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) tags.push_back(tag_from_byte(buf[pos + i]));
  pos += count;

  std::size_t payload = 0;
  for (FieldTag t : tags) payload += (tag_is_vector(t) ? 3 : 1) * snap.cells();
  if (buf.size() - pos != payload * sizeof(double))
    throw std::runtime_error(
        "snapshot: payload size mismatch in " + path + ": expected " +
        std::to_string(pos + payload * sizeof(double)) + " bytes, file has " +
        std::to_string(buf.size()));

  for (FieldTag t : tags) {
    SnapshotField f{t, {}};
    const std::size_t n = (tag_is_vector(t) ? 3 : 1) * snap.cells();
    f.data.resize(n);
    std::memcpy(f.data.data(), buf.data() + pos, n * sizeof(double));
    pos += n * sizeof(double);
    snap.fields.push_back(std::move(f));
  }
  return snap;
}

std::string format_g17(double v) {
  char tmp[40];
  auto res = std::to_chars(tmp, tmp + sizeof tmp, v, std::chars_format::general, 17);
  return std::string(tmp, res.ptr);
}

void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRow>& rows) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("csv: cannot open " + path + " for writing");
  out << "step,t,energy_u,pseudo_energy_q,divB_l2,gauss_residual_l2,maxT\n";
  for (const auto& r : rows) {
    if (r.step == 0) continue;
    out << r.step << ',' << format_g17(r.t) << ',' << format_g17(r.energy_u) << ','
        << format_g17(r.pseudo_energy_q) << ',' << format_g17(r.divB_l2) << ','
        << format_g17(r.gauss_residual_l2) << ',' << format_g17(r.maxT) << '\n';
  }
  if (!out) throw std::runtime_error("csv: short write to " + path);
}

void write_table_csv(const std::string& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& columns) {
  if (header.size() != columns.size())
    throw std::invalid_argument("csv: header and column counts differ");
  for (const auto& c : columns)
    if (c.size() != columns.front().size())
      throw std::invalid_argument("csv: ragged columns");

  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("csv: cannot open " + path + " for writing");
  for (std::size_t i = 0; i < header.size(); ++i)
    out << header[i] << (i + 1 < header.size() ? ',' : '\n');
  const std::size_t nrows = columns.empty() ? 0 : columns.front().size();
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t i = 0; i < columns.size(); ++i)
      out << format_g17(columns[i][r]) << (i + 1 < columns.size() ? ',' : '\n');
  if (!out) throw std::runtime_error("csv: short write to " + path);
}

}  // namespace qmx
