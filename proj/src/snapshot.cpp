#include "sdyred/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <json.hpp>

#include "sdyred/errors.hpp"

namespace sdyred {

namespace {

constexpr const char* kFormat = "sdyred-snapshot";

void to_little_endian(unsigned char* bytes, std::size_t count) {
  if constexpr (std::endian::native == std::endian::big) {
    for (std::size_t i = 0; i < count; i += 8)
      for (int k = 0; k < 4; ++k) std::swap(bytes[i + k], bytes[i + 7 - k]);
  } else {
    (void)bytes;
    (void)count;
  }
}

}  // namespace

std::vector<std::string> default_axis_labels(int ndim) {
  static const char* labels[3] = {"x", "y", "z"};
  return std::vector<std::string>(labels, labels + ndim);
}

void write_snapshot(const std::string& path, const Snapshot& snap) {
  const Grid& g = snap.field.grid();
  nlohmann::json h;
  h["format"] = kFormat;
  h["field"] = snap.name;
  h["time"] = snap.time;
  h["sizes"] = g.sizes();
  h["lengths"] = g.lengths();
  h["axes"] = snap.axes.empty() ? default_axis_labels(g.ndim()) : snap.axes;
  h["dtype"] = "complex128";
  h["endianness"] = "little";

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open snapshot for writing: " + path);
  out << h.dump() << '\n';
  std::vector<unsigned char> bytes(g.points() * 16);
  std::memcpy(bytes.data(), snap.field.data(), bytes.size());
  to_little_endian(bytes.data(), bytes.size());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing snapshot: " + path);
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open snapshot: " + path);
  std::string line;
  if (!std::getline(in, line)) throw IoError("missing snapshot header: " + path);
  nlohmann::json h;
  try {
    h = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("corrupt snapshot header in " + path + ": " + e.what());
  }
  Snapshot s;
  std::vector<int> sizes;
  std::vector<double> lengths;
  try {
    if (h.at("format").get<std::string>() != kFormat) throw IoError("unrecognized snapshot format: " + path);
    if (h.at("dtype").get<std::string>() != "complex128") throw IoError("unsupported snapshot dtype: " + path);
    s.name = h.at("field").get<std::string>();
    s.time = h.at("time").get<double>();
    sizes = h.at("sizes").get<std::vector<int>>();
    lengths = h.at("lengths").get<std::vector<double>>();
    s.axes = h.at("axes").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw IoError("incomplete snapshot header in " + path + ": " + e.what());
  }
  Grid g;
  try {
    g = Grid(sizes, lengths);
  } catch (const std::exception& e) {
    throw IoError("invalid grid in snapshot " + path + ": " + e.what());
  }
  std::vector<unsigned char> bytes(g.points() * 16);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (static_cast<std::size_t>(in.gcount()) != bytes.size()) throw IoError("truncated snapshot data: " + path);
  if (in.peek() != std::char_traits<char>::eof()) throw IoError("trailing bytes after snapshot data: " + path);
  to_little_endian(bytes.data(), bytes.size());
  std::vector<cplx> values(g.points());
  std::memcpy(values.data(), bytes.data(), bytes.size());
  s.field = ScalarField(g, std::move(values));
  return s;
}

}  // namespace sdyred
