#include "helixwake/slice_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace helixwake {

SliceField relative_slice(const SliceField& field, const SliceField& reference, double reference_speed) {
  if (field.ny != reference.ny || field.nz != reference.nz || field.u.size() != reference.u.size()) {
    throw std::invalid_argument("relative_slice: grid mismatch");
  }
  if (!(reference_speed > 0.0)) throw std::invalid_argument("relative_slice: reference speed must be positive");
  SliceField out = field;
  for (std::size_t i = 0; i < out.u.size(); ++i) out.u[i] = (field.u[i] - reference.u[i]) / reference_speed;
  return out;
}

void write_slice_grid(std::ostream& os, const SliceField& f, const std::string& header_comment) {
  if (!header_comment.empty()) os << header_comment;
  os << "# x_over_d ny nz dy dz\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g %d %d %.9g %.9g\n", f.x_over_d, f.ny, f.nz, f.dy, f.dz);
  os << buf;
  for (int k = 0; k < f.nz; ++k) {
    for (int j = 0; j < f.ny; ++j) {
      std::snprintf(buf, sizeof buf, j ? " %.9f" : "%.9f", f.at(j, k) + 0.0);
      os << buf;
    }
    os << '\n';
  }
}

SliceField read_slice_grid(std::istream& is) {
  std::string line;
  SliceField f;
  bool header = false;
  std::size_t filled = 0;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (!header) {
      if (!(ls >> f.x_over_d >> f.ny >> f.nz >> f.dy >> f.dz) || f.ny < 1 || f.nz < 1) {
        throw std::runtime_error("slice grid: bad header line");
      }
      f.u.resize(static_cast<std::size_t>(f.ny) * f.nz);
      header = true;
      continue;
    }
    double v;
    int count = 0;
    while (ls >> v) {
      if (filled >= f.u.size()) throw std::runtime_error("slice grid: too many values");
      f.u[filled++] = v;
      ++count;
    }
    if (count != f.ny || !ls.eof()) throw std::runtime_error("slice grid: row has wrong length");
  }
  if (!header || filled != f.u.size()) throw std::runtime_error("slice grid: truncated");
  f.y0 = -0.5 * (f.ny - 1) * f.dy;
  f.z0 = -0.5 * (f.nz - 1) * f.dz;
  return f;
}

void write_slice_csv(std::ostream& os, const SliceField& f, const std::string& header_comment) {
  if (!header_comment.empty()) os << header_comment;
  char buf[96];
  std::snprintf(buf, sizeof buf, "# x_over_d=%.6g\n", f.x_over_d);
  os << buf << "y,z,u\n";
  for (int k = 0; k < f.nz; ++k) {
    for (int j = 0; j < f.ny; ++j) {
      std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.9f\n", f.y(j) + 0.0, f.z(k) + 0.0, f.at(j, k) + 0.0);
      os << buf;
    }
  }
}

void write_heatmap_ppm(std::ostream& os, const SliceField& f, double centre, double half_range,
                       const std::string& comment) {
  if (!(half_range > 0.0)) half_range = 1.0;
  os << "P6\n";
  std::istringstream lines(comment);
  for (std::string l; std::getline(lines, l);) os << (l.rfind('#', 0) == 0 ? l : "# " + l) << '\n';
  os << f.ny << ' ' << f.nz << "\n255\n";
  // top row of the image is the highest z
  for (int k = f.nz - 1; k >= 0; --k) {
    for (int j = 0; j < f.ny; ++j) {
      const double s = std::clamp((f.at(j, k) - centre) / half_range, -1.0, 1.0);
      const auto fade = static_cast<unsigned char>(std::lround(255.0 * (1.0 - std::abs(s))));
      const unsigned char rgb[3] = {s < 0 ? fade : static_cast<unsigned char>(255), fade,
                                    s > 0 ? fade : static_cast<unsigned char>(255)};
      os.write(reinterpret_cast<const char*>(rgb), 3);
    }
  }
}

}  // namespace helixwake
