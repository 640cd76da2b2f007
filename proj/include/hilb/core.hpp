#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilb {

enum class Errc {
  invalid_input,
  empty_input,
  infinite_colength,
  size_cap_exceeded,
  not_nested,
  wrong_dimension,
  head_in_ideal,
  not_rectangular,
  hypothesis_violated,
  invalid_arrow,
  arithmetic_overflow,
  semantics_violation,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

/// Lattice vector in 2 or 3 coordinates. One value type serves exponent
/// vectors (coordinates >= 0), lattice points (negatives allowed) and torus
/// weights; the unused third coordinate of a 2d vector stays 0.
struct Vec {
  std::array<int, 3> c{0, 0, 0};
  int dim = 2;

  int operator[](int k) const { return c[static_cast<size_t>(k)]; }
  int& operator[](int k) { return c[static_cast<size_t>(k)]; }
  int x() const { return c[0]; }
  int y() const { return c[1]; }
  int z() const { return c[2]; }

  bool operator==(const Vec& o) const { return dim == o.dim && c == o.c; }
  bool operator!=(const Vec& o) const { return !(*this == o); }
  /// lexicographic; the canonical order for box and weight lists
  bool operator<(const Vec& o) const {
    if (dim != o.dim) return dim < o.dim;
    return c < o.c;
  }

  friend Vec operator+(Vec a, const Vec& b) {
    for (int k = 0; k < a.dim; ++k) a.c[static_cast<size_t>(k)] += b[k];
    return a;
  }
  friend Vec operator-(Vec a, const Vec& b) {
    for (int k = 0; k < a.dim; ++k) a.c[static_cast<size_t>(k)] -= b[k];
    return a;
  }

  bool nonnegative() const {
    for (int k = 0; k < dim; ++k)
      if (c[static_cast<size_t>(k)] < 0) return false;
    return true;
  }
  long long degree() const {
    long long s = 0;
    for (int k = 0; k < dim; ++k) s += c[static_cast<size_t>(k)];
    return s;
  }
};

inline Vec v2(int x, int y) { return Vec{{x, y, 0}, 2}; }
inline Vec v3(int x, int y, int z) { return Vec{{x, y, z}, 3}; }

/// coordinatewise max (the lcm of two monomials)
inline Vec join(const Vec& a, const Vec& b) {
  Vec r = a;
  for (int k = 0; k < a.dim; ++k) r[k] = std::max(a[k], b[k]);
  return r;
}

/// a | b as monomials, i.e. a <= b coordinatewise
inline bool divides(const Vec& a, const Vec& b) {
  for (int k = 0; k < a.dim; ++k)
    if (a[k] > b[k]) return false;
  return true;
}

inline std::string to_string(const Vec& v) {
  std::string s = "(";
  for (int k = 0; k < v.dim; ++k) {
    if (k) s += ",";
    s += std::to_string(v[k]);
  }
  s += ")";
  return s;
}

/// "x^2 y z^3"-style label, "1" for the constant monomial
inline std::string monomial_string(const Vec& v) {
  static const char* names[3] = {"x", "y", "z"};
  std::string s;
  for (int k = 0; k < v.dim; ++k) {
    if (v[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[k];
    if (v[k] != 1) s += "^" + std::to_string(v[k]);
  }
  return s.empty() ? "1" : s;
}

inline constexpr long long kDefaultColengthCap = 1'000'000;
inline constexpr int kProfileInf = 1 << 29;  // stands in for an infinite profile value

/// Finite downward-closed set of lattice boxes, stored as row profiles:
/// 2d as row lengths (rows[y] boxes in row y), 3d as one 2d profile per
/// z-layer. Profiles give O(1) membership and the row/column/layer scans the
/// engines need; boxes() materializes the explicit set on demand.
struct Staircase {
  int dim = 2;
  std::vector<int> rows;                  // 2d only
  std::vector<std::vector<int>> layers;   // 3d only, layers[z][y]
  long long size = 0;

  int height() const {  // 2d: number of rows
    return static_cast<int>(rows.size());
  }
  int width() const {  // 2d: length of the bottom row
    return rows.empty() ? 0 : rows[0];
  }
  int depth() const {  // 3d: number of z-layers
    return static_cast<int>(layers.size());
  }

  /// 2d row length; kProfileInf below the axis, 0 above the diagram
  int row_len(int r) const {
    if (r < 0) return kProfileInf;
    if (r >= static_cast<int>(rows.size())) return 0;
    return rows[static_cast<size_t>(r)];
  }
  /// 2d column height; kProfileInf left of the axis, 0 right of the diagram
  int col_height(int c) const {
    if (c < 0) return kProfileInf;
    int h = 0;
    while (h < static_cast<int>(rows.size()) && rows[static_cast<size_t>(h)] > c) ++h;
    return h;
  }
  int layer_row_len(int z, int r) const {
    if (z < 0 || r < 0) return kProfileInf;
    if (z >= static_cast<int>(layers.size())) return 0;
    const auto& L = layers[static_cast<size_t>(z)];
    if (r >= static_cast<int>(L.size())) return 0;
    return L[static_cast<size_t>(r)];
  }

  bool contains(const Vec& b) const {
    if (!b.nonnegative()) return false;
    if (dim == 2) return b.x() < row_len(b.y());
    return b.x() < layer_row_len(b.z(), b.y());
  }

  /// all boxes in lexicographic order
  std::vector<Vec> boxes() const {
    std::vector<Vec> out;
    out.reserve(static_cast<size_t>(size));
    if (dim == 2) {
      for (int y = 0; y < static_cast<int>(rows.size()); ++y)
        for (int x = 0; x < rows[static_cast<size_t>(y)]; ++x) out.push_back(v2(x, y));
    } else {
      for (int z = 0; z < static_cast<int>(layers.size()); ++z)
        for (int y = 0; y < static_cast<int>(layers[static_cast<size_t>(z)].size()); ++y)
          for (int x = 0; x < layers[static_cast<size_t>(z)][static_cast<size_t>(y)]; ++x)
            out.push_back(v3(x, y, z));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const Staircase& o) const {
    return dim == o.dim && rows == o.rows && layers == o.layers;
  }
};

inline bool is_downward_closed(const Staircase& s) {
  if (s.dim == 2) {
    for (size_t y = 1; y < s.rows.size(); ++y)
      if (s.rows[y] > s.rows[y - 1]) return false;
    for (int r : s.rows)
      if (r <= 0) return false;
    return true;
  }
  for (size_t z = 0; z < s.layers.size(); ++z) {
    const auto& L = s.layers[z];
    if (L.empty()) return false;
    for (size_t y = 0; y < L.size(); ++y) {
      if (L[y] <= 0) return false;
      if (y > 0 && L[y] > L[y - 1]) return false;
      if (z > 0) {
        const auto& P = s.layers[z - 1];
        if (y >= P.size() || L[y] > P[y]) return false;
      }
    }
  }
  return true;
}

inline Staircase staircase_from_partition(const std::vector<int>& parts) {
  Staircase s;
  s.dim = 2;
  s.rows = parts;
  s.size = 0;
  for (int r : parts) s.size += r;
  if (!parts.empty() && !is_downward_closed(s))
    fail(Errc::invalid_input, "partition rows must be positive and non-increasing");
  return s;
}

inline Staircase staircase_from_plane_partition(const std::vector<std::vector<int>>& layers) {
  Staircase s;
  s.dim = 3;
  s.layers = layers;
  s.size = 0;
  for (const auto& L : layers)
    for (int r : L) s.size += r;
  if (!layers.empty() && !is_downward_closed(s))
    fail(Errc::invalid_input, "plane partition layers must nest and be non-increasing");
  return s;
}

/// row lengths of a 2d staircase (its partition)
inline std::vector<int> partition_of(const Staircase& s) { return s.rows; }

inline std::vector<std::vector<int>> plane_partition_of(const Staircase& s) { return s.layers; }

enum class Region { InZ, InIdeal, InStaircase };

struct SyzygyPair {
  int i = 0;
  int j = 0;
  Vec lcm;
};

/// Monomial ideal of finite colength in 2 or 3 variables: the minimal
/// generators in canonical order (degree, then decreasing exponent of the
/// last variable, then of the next) plus the cached staircase of standard
/// monomials.
struct MonomialIdeal {
  int dim = 2;
  std::vector<Vec> generators;
  Staircase staircase;

  long long colength() const { return staircase.size; }

  /// p assumed coordinatewise >= 0
  bool in_ideal(const Vec& p) const {
    for (const Vec& g : generators)
      if (divides(g, p)) return true;
    return false;
  }
};

inline bool canonical_generator_less(const Vec& a, const Vec& b) {
  long long da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (int k = a.dim - 1; k >= 0; --k)
    if (a[k] != b[k]) return a[k] > b[k];
  return false;
}

namespace detail {

inline Staircase staircase_of_generators(const std::vector<Vec>& gens, int dim, long long cap) {
  Staircase s;
  s.dim = dim;
  s.size = 0;
  if (dim == 2) {
    int height = kProfileInf;
    for (const Vec& g : gens)
      if (g.x() == 0) height = std::min(height, g.y());
    if (height > cap) fail(Errc::size_cap_exceeded, "staircase exceeds the colength cap");
    s.rows.reserve(static_cast<size_t>(height));
    for (int y = 0; y < height; ++y) {
      int len = kProfileInf;
      for (const Vec& g : gens)
        if (g.y() <= y) len = std::min(len, g.x());
      if (len == 0) break;
      s.rows.push_back(len);
      s.size += len;
      if (s.size > cap) fail(Errc::size_cap_exceeded, "staircase exceeds the colength cap");
    }
  } else {
    int depth = kProfileInf;
    for (const Vec& g : gens)
      if (g.x() == 0 && g.y() == 0) depth = std::min(depth, g.z());
    if (depth > cap) fail(Errc::size_cap_exceeded, "staircase exceeds the colength cap");
    for (int z = 0; z < depth; ++z) {
      std::vector<int> rows;
      for (int y = 0;; ++y) {
        int len = kProfileInf;
        for (const Vec& g : gens)
          if (g.z() <= z && g.y() <= y) len = std::min(len, g.x());
        if (len == 0) break;
        rows.push_back(len);
        s.size += len;
        if (s.size > cap) fail(Errc::size_cap_exceeded, "staircase exceeds the colength cap");
      }
      if (rows.empty()) break;
      s.layers.push_back(std::move(rows));
    }
  }
  return s;
}

}  // namespace detail

/// Normalizes a generating set: drops non-minimal generators, checks finite
/// colength (a pure power of every variable), sorts canonically and caches
/// the staircase.
inline MonomialIdeal from_generators(std::vector<Vec> gens, int dim,
                                     long long cap = kDefaultColengthCap) {
  if (gens.empty()) fail(Errc::empty_input, "no generators given");
  if (dim != 2 && dim != 3) fail(Errc::wrong_dimension, "dim must be 2 or 3");
  for (const Vec& g : gens) {
    if (g.dim != dim) fail(Errc::invalid_input, "generator " + to_string(g) + " has wrong dimension");
    if (!g.nonnegative()) fail(Errc::invalid_input, "generator " + to_string(g) + " has a negative exponent");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Vec> min;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && divides(gens[j], gens[i])) redundant = true;
    if (!redundant) min.push_back(gens[i]);
  }
  static const char* axis_names[3] = {"x", "y", "z"};
  for (int k = 0; k < dim; ++k) {
    bool pure = false;
    for (const Vec& g : min) {
      bool only_k = true;
      for (int l = 0; l < dim; ++l)
        if (l != k && g[l] != 0) only_k = false;
      if (only_k) pure = true;
    }
    if (!pure)
      fail(Errc::infinite_colength,
           std::string("no pure power of ") + axis_names[k] + " in the ideal");
  }
  MonomialIdeal I;
  I.dim = dim;
  I.generators = std::move(min);
  std::sort(I.generators.begin(), I.generators.end(), canonical_generator_less);
  I.staircase = detail::staircase_of_generators(I.generators, dim, cap);
  return I;
}

inline const Staircase& staircase_of(const MonomialIdeal& I) { return I.staircase; }

inline long long colength(const MonomialIdeal& I) { return I.staircase.size; }

inline Region contains(const MonomialIdeal& I, const Vec& p) {
  if (!p.nonnegative()) return Region::InZ;
  return I.in_ideal(p) ? Region::InIdeal : Region::InStaircase;
}

/// I is contained in J as ideals, i.e. staircase(J) is a subset of
/// staircase(I)
inline bool is_subideal(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.dim != J.dim) return false;
  for (const Vec& g : I.generators)
    if (!J.in_ideal(g)) return false;
  return true;
}

inline std::vector<SyzygyPair> syzygy_pairs(const MonomialIdeal& I) {
  std::vector<SyzygyPair> out;
  int g = static_cast<int>(I.generators.size());
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j)
      out.push_back(SyzygyPair{
          i, j,
          join(I.generators[static_cast<size_t>(i)], I.generators[static_cast<size_t>(j)])});
  return out;
}

/// minimal generators of the ideal whose standard monomials are exactly s
inline std::vector<Vec> minimal_generators(const Staircase& s) {
  std::vector<Vec> gens;
  if (s.dim == 2) {
    int h = s.height();
    for (int y = 0; y <= h; ++y) {
      int len = s.row_len(y);
      int below = s.row_len(y - 1);
      if (len < below) gens.push_back(v2(len, y));
    }
  } else {
    int W = s.depth() ? s.layers[0][0] : 0;
    int H = s.depth() ? static_cast<int>(s.layers[0].size()) : 0;
    int D = s.depth();
    for (int z = 0; z <= D; ++z)
      for (int y = 0; y <= H; ++y)
        for (int x = 0; x <= W; ++x) {
          Vec p = v3(x, y, z);
          if (s.contains(p)) continue;
          bool minimal = true;
          for (int k = 0; k < 3 && minimal; ++k) {
            if (p[k] == 0) continue;
            Vec q = p;
            q[k] -= 1;
            if (!s.contains(q)) minimal = false;
          }
          if (minimal) gens.push_back(p);
        }
  }
  return gens;
}

inline MonomialIdeal ideal_from_staircase(const Staircase& s,
                                          long long cap = kDefaultColengthCap) {
  return from_generators(minimal_generators(s), s.dim, cap);
}

inline MonomialIdeal ideal_from_partition(const std::vector<int>& parts,
                                          long long cap = kDefaultColengthCap) {
  return ideal_from_staircase(staircase_from_partition(parts), cap);
}

inline MonomialIdeal ideal_from_plane_partition(const std::vector<std::vector<int>>& layers,
                                                long long cap = kDefaultColengthCap) {
  return ideal_from_staircase(staircase_from_plane_partition(layers), cap);
}

}  // namespace hilb
