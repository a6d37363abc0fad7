#include "multiplihedra/hull.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "multiplihedra/counting.hpp"
#include "multiplihedra/enumeration.hpp"
#include "multiplihedra/linalg.hpp"
#include "multiplihedra/metric.hpp"
#include "multiplihedra/refinement.hpp"

namespace multiplihedra {

namespace {

// ---- integer kernel -------------------------------------------------------
//
// The oracle clears denominators once and then works on integer points, so
// hyperplane construction is exact integer linear algebra. The kernel is
// templated: int64 when a Hadamard-style bound certifies no overflow,
// arbitrary precision otherwise.

template <class I>
I det_bareiss(std::vector<std::vector<I>> m) {
  const std::size_t k = m.size();
  if (k == 0) return I(1);
  I prev = 1;
  int sign = 1;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (m[i][i] == 0) {
      std::size_t pivot = i + 1;
      while (pivot < k && m[pivot][i] == 0) ++pivot;
      if (pivot == k) return I(0);
      std::swap(m[i], m[pivot]);
      sign = -sign;
    }
    for (std::size_t r = i + 1; r < k; ++r)
      for (std::size_t c = i + 1; c < k; ++c)
        m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev;
    prev = m[i][i];
  }
  I d = m[k - 1][k - 1];
  return sign < 0 ? I(-d) : d;
}

template <class I>
I gcd_of(const std::vector<I>& v) {
  I g = 0;
  for (const I& x : v) {
    I a = x < 0 ? I(-x) : x;
    while (a != 0) {
      I t = g % a;
      g = a;
      a = t;
    }
  }
  return g;
}

// Integer normal of the hyperplane through the selected points: component j
// is (-1)^j times the minor of the [p | 1] matrix with column j removed.
// Returns false when the points are affinely dependent.
template <class I>
bool nullvector(const std::vector<std::vector<I>>& pts, const std::vector<int>& subset,
                std::vector<I>& out) {
  const std::size_t d = subset.size();
  const std::size_t cols = d + 1;
  out.assign(cols, I(0));
  std::vector<std::vector<I>> minor(d, std::vector<I>(d));
  bool all_zero = true;
  for (std::size_t skip = 0; skip < cols; ++skip) {
    for (std::size_t r = 0; r < d; ++r) {
      const auto& p = pts[static_cast<std::size_t>(subset[r])];
      std::size_t w = 0;
      for (std::size_t c = 0; c < cols; ++c) {
        if (c == skip) continue;
        minor[r][w++] = (c < d) ? p[c] : I(1);
      }
    }
    I m = det_bareiss(minor);
    if (skip % 2 == 1) m = -m;
    if (m != 0) all_zero = false;
    out[skip] = m;
  }
  return !all_zero;
}

template <class I>
struct ScanOutput {
  // key: normalized (a_0..a_{d-1}, b) with points on the <= side.
  std::map<std::vector<I>, std::vector<int>> facets;
};

using Bitset = std::vector<unsigned long long>;

bool subset_of(const std::vector<int>& subset, const Bitset& set) {
  for (int i : subset)
    if (!((set[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1ull)) return false;
  return true;
}

template <class I>
void scan_subsets(const std::vector<std::vector<I>>& pts, int d,
                  const std::vector<Bitset>& prune, ScanOutput<I>& out) {
  const int npts = static_cast<int>(pts.size());
  std::vector<int> subset(static_cast<std::size_t>(d));
  std::iota(subset.begin(), subset.end(), 0);
  std::vector<I> plane;
  std::vector<int> incident;
  if (npts < d) return;
  while (true) {
    bool pruned = false;
    for (const Bitset& set : prune) {
      if (subset_of(subset, set)) {
        pruned = true;
        break;
      }
    }
    if (!pruned && nullvector(pts, subset, plane)) {
      // One-sidedness with early exit; sign convention: keep points on <=.
      bool pos = false, neg = false;
      incident.clear();
      for (int i = 0; i < npts; ++i) {
        // side value a.p + v_d; the plane is a.x = -v_d
        I acc = plane[static_cast<std::size_t>(d)];
        for (int j = 0; j < d; ++j)
          acc += plane[static_cast<std::size_t>(j)] *
                 pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (acc > 0) pos = true;
        else if (acc < 0) neg = true;
        else incident.push_back(i);
        if (pos && neg) break;
      }
      if (!(pos && neg)) {
        std::vector<I> key = plane;
        if (pos) {
          for (I& x : key) x = -x;
        }
        // key encodes a.x <= b with b = -key[d].
        I g = gcd_of(key);
        if (g > 1)
          for (I& x : key) x = x / g;
        out.facets.emplace(std::move(key), incident);
      }
    }
    // next d-combination of {0..npts-1}
    int pos_idx = d - 1;
    while (pos_idx >= 0 &&
           subset[static_cast<std::size_t>(pos_idx)] == npts - d + pos_idx)
      --pos_idx;
    if (pos_idx < 0) break;
    ++subset[static_cast<std::size_t>(pos_idx)];
    for (int j = pos_idx + 1; j < d; ++j)
      subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  }
}

Int hadamard_bound(int d, const Int& max_entry) {
  // |det| of a d x d matrix with entries bounded by max(max_entry, 1).
  Int m = max_entry < 1 ? Int(1) : max_entry;
  Int b = 1;
  for (int i = 0; i < d; ++i) b *= m;
  Int root = 1;  // ceil(d^(d/2)) <= d^ceil(d/2)
  for (int i = 0; i < (d + 1) / 2; ++i) root *= d > 0 ? d : 1;
  return b * root;
}

struct ScaledPoints {
  Int scale;  // lcm of coordinate denominators
  std::vector<std::vector<Int>> pts;
  Int max_abs;
};

ScaledPoints scale_to_integers(const std::vector<Point>& points) {
  ScaledPoints out;
  out.scale = 1;
  for (const Point& p : points)
    for (const Rat& x : p) {
      const Int den = denominator(x);
      out.scale = out.scale / gcd(out.scale, den) * den;
    }
  out.max_abs = 0;
  for (const Point& p : points) {
    std::vector<Int> row;
    for (const Rat& x : p) {
      Int v = numerator(x) * (out.scale / denominator(x));
      if (abs(v) > out.max_abs) out.max_abs = abs(v);
      row.push_back(std::move(v));
    }
    out.pts.push_back(std::move(row));
  }
  return out;
}

HullFacet to_hull_facet(const std::vector<Int>& key, const Int& scale,
                        std::vector<int> incident) {
  const std::size_t d = key.size() - 1;
  HullFacet f;
  f.coeffs.resize(d);
  // key encodes a.(scale*x) <= -key[d], i.e. a.x <= -key[d]/scale.
  for (std::size_t j = 0; j < d; ++j) f.coeffs[j] = Rat(key[j]);
  f.rhs = Rat(-key[d], scale);
  Rat norm;
  for (const Rat& c : f.coeffs)
    if (!c.is_zero()) {
      norm = abs(c);
      break;
    }
  for (Rat& c : f.coeffs) c /= norm;
  f.rhs /= norm;
  f.incident = std::move(incident);
  return f;
}

}  // namespace

HullResult brute_force_hull(const std::vector<Point>& points,
                            const std::vector<Hyperplane>* seeds) {
  HullResult result;
  if (points.empty()) throw std::invalid_argument("brute_force_hull: no points");
  const int ambient = static_cast<int>(points[0].size());
  for (const Point& p : points)
    if (static_cast<int>(p.size()) != ambient)
      throw std::invalid_argument("brute_force_hull: ragged point set");
  result.ambient_dim = ambient;
  result.affine_dim = affine_dimension(points);

  if (result.affine_dim < ambient) {
    // Re-coordinatize inside the affine span: the pivot coordinates of the
    // direction space give an affine-isomorphic projection.
    RatMatrix dirs;
    for (std::size_t i = 1; i < points.size(); ++i) {
      std::vector<Rat> row(points[i].size());
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = points[i][j] - points[0][j];
      dirs.push_back(std::move(row));
    }
    std::vector<int> pivots;
    {
      RatMatrix m = dirs;
      const std::size_t rows = m.size();
      std::size_t rank = 0;
      for (std::size_t col = 0; col < static_cast<std::size_t>(ambient) && rank < rows;
           ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        const Rat inv = Rat(1) / m[rank][col];
        for (std::size_t j = col; j < static_cast<std::size_t>(ambient); ++j)
          m[rank][j] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
          if (r == rank || m[r][col].is_zero()) continue;
          const Rat factor = m[r][col];
          for (std::size_t j = col; j < static_cast<std::size_t>(ambient); ++j)
            m[r][j] -= factor * m[rank][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++rank;
      }
    }
    std::vector<Point> projected;
    for (const Point& p : points) {
      Point q;
      for (int col : pivots) q.push_back(p[static_cast<std::size_t>(col)]);
      projected.push_back(std::move(q));
    }
    HullResult inner = brute_force_hull(projected, nullptr);
    result.projected = true;
    result.span_coordinates = pivots;
    result.facets = std::move(inner.facets);
    return result;
  }

  const int d = ambient;
  if (d == 0) return result;  // a single point, no facets

  ScaledPoints scaled = scale_to_integers(points);

  // Seed pruning: verified supporting planes close their point subsets to
  // further scanning (any subset inside one regenerates that plane).
  std::vector<Bitset> prune;
  std::vector<std::pair<std::vector<Int>, std::vector<int>>> seeded;
  if (seeds) {
    for (const Hyperplane& h : *seeds) {
      bool pos = false, neg = false;
      std::vector<int> incident;
      for (std::size_t i = 0; i < points.size(); ++i) {
        const Rat v = h.eval(points[i]) - h.rhs;
        if (v > 0) pos = true;
        else if (v < 0) neg = true;
        else incident.push_back(static_cast<int>(i));
        if (pos && neg) break;
      }
      if (pos && neg) continue;  // not supporting; contributes nothing
      if (static_cast<int>(incident.size()) < d) continue;  // not a facet candidate
      {
        // Only genuine facets may seed: the incident set must span the plane.
        std::vector<Point> on_plane;
        for (int i : incident) on_plane.push_back(points[static_cast<std::size_t>(i)]);
        if (affine_dimension(on_plane) != d - 1) continue;
      }
      // Integer key in scaled coordinates, oriented to <=.
      Int den_lcm = denominator(h.rhs);
      for (const Rat& c : h.coeffs) {
        const Int dn = denominator(c);
        den_lcm = den_lcm / gcd(den_lcm, dn) * dn;
      }
      std::vector<Int> key;
      for (const Rat& c : h.coeffs)
        key.push_back(numerator(c) * (den_lcm / denominator(c)));
      // a.x <= b  becomes  a.(scale x) <= b*scale
      Int rhs_scaled = numerator(h.rhs) * (den_lcm / denominator(h.rhs)) * scaled.scale;
      key.push_back(-rhs_scaled);
      if (pos) {
        for (Int& x : key) x = -x;
      }
      Int g = gcd_of(key);
      if (g > 1)
        for (Int& x : key) x /= g;
      Bitset bits((points.size() + 63) / 64, 0ull);
      for (int i : incident) bits[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63);
      prune.push_back(std::move(bits));
      seeded.emplace_back(std::move(key), std::move(incident));
    }
  }

  // Pick the arithmetic: products of two d-minors must fit comfortably.
  const Int minor_bound = hadamard_bound(d, scaled.max_abs);
  const Int work_bound = minor_bound * minor_bound * 4;
  const bool fits_64 = work_bound < (Int(1) << 62) &&
                       minor_bound * (d + 1) * (scaled.max_abs + 1) < (Int(1) << 62);

  std::map<std::vector<Int>, std::vector<int>> found;
  if (fits_64) {
    std::vector<std::vector<long long>> pts64;
    for (const auto& p : scaled.pts) {
      std::vector<long long> row;
      for (const Int& v : p) row.push_back(v.convert_to<long long>());
      pts64.push_back(std::move(row));
    }
    ScanOutput<long long> out;
    scan_subsets(pts64, d, prune, out);
    for (auto& [key64, inc] : out.facets) {
      std::vector<Int> key(key64.begin(), key64.end());
      found.emplace(std::move(key), std::move(inc));
    }
  } else {
    ScanOutput<Int> out;
    scan_subsets(scaled.pts, d, prune, out);
    found = std::move(out.facets);
  }
  for (auto& [key, inc] : seeded) found.emplace(std::move(key), std::move(inc));

  for (auto& [key, inc] : found)
    result.facets.push_back(to_hull_facet(key, scaled.scale, std::move(inc)));
  std::sort(result.facets.begin(), result.facets.end(),
            [](const HullFacet& a, const HullFacet& b) {
              if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
              return a.rhs < b.rhs;
            });
  return result;
}

namespace {

Point centroid(const std::vector<Point>& pts) {
  Point c(pts[0].size(), Rat(0));
  for (const Point& p : pts)
    for (std::size_t j = 0; j < c.size(); ++j) c[j] += p[j];
  for (Rat& x : c) x /= static_cast<long long>(pts.size());
  return c;
}

std::pair<std::vector<Rat>, Rat> canonical_key(const Hyperplane& h, const Point& ref) {
  std::vector<Rat> coeffs = h.coeffs;
  Rat rhs = h.rhs;
  canonicalize_hyperplane(coeffs, rhs, ref);
  return {std::move(coeffs), std::move(rhs)};
}

Int incidence_product(const FacetTree& f) {
  if (const auto* low = std::get_if<LowerFacet>(&f)) {
    const int r = low->leaves + 1 - low->span;
    return vertex_count_recursive(r) * catalan(low->span - 1);
  }
  const auto& up = std::get<UpperFacet>(f);
  Int prod = catalan(static_cast<int>(up.blocks.size()) - 1);
  for (int r : up.blocks) prod *= vertex_count_recursive(r);
  return prod;
}

}  // namespace

HullReport verify_realization(int n, const Rat& q, const Weights& w, bool brute_force) {
  if (n < 2) throw std::invalid_argument("verify_realization: need n >= 2");
  HullReport report;
  report.n = n;
  report.q = q;
  report.weights = w;
  report.brute_force_used = brute_force;

  const auto trees = enumerate_binary(n);
  std::vector<Point> points;
  points.reserve(trees.size());
  for (const PaintedTree& t : trees) points.push_back(coordinates_weighted(t, q, w));
  report.vertex_count = static_cast<long long>(points.size());
  const int d = n - 1;

  report.affine_dim = affine_dimension(points);
  if (report.affine_dim != d) {
    std::ostringstream msg;
    msg << "affine span has dimension " << report.affine_dim << ", expected " << d;
    report.problems.push_back(msg.str());
  }

  const auto predicted = facet_trees(n);
  report.facet_count = static_cast<long long>(predicted.size());

  for (const FacetTree& f : predicted) {
    HullReport::FacetCheck check;
    check.facet = f;
    check.plane = facet_hyperplane(f, q, w);
    bool supporting = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!check.plane.admits(points[i])) supporting = false;
      if (check.plane.contains(points[i])) check.incident.push_back(static_cast<int>(i));
    }
    check.supporting = supporting;
    if (!supporting)
      report.problems.push_back("hyperplane of " + facet_label(f) +
                                " does not bound the point set");

    std::vector<int> refining;
    for (std::size_t i = 0; i < trees.size(); ++i)
      if (refines_facet(trees[i], f)) refining.push_back(static_cast<int>(i));
    check.incidence_matches_refinement = (refining == check.incident);
    if (!check.incidence_matches_refinement)
      report.problems.push_back("incidence of " + facet_label(f) +
                                " differs from its binary refinements");

    check.incidence_count_matches_product =
        Int(check.incident.size()) == incidence_product(f);
    if (!check.incidence_count_matches_product)
      report.problems.push_back("incidence count of " + facet_label(f) +
                                " differs from the product formula");
    report.facets.push_back(std::move(check));
  }

  // Vertex certificates: enough incident supporting planes with spanning
  // normals pin the point as a 0-face.
  report.extremal.assign(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    RatMatrix normals;
    for (const auto& check : report.facets) {
      if (!check.supporting) continue;
      if (std::binary_search(check.incident.begin(), check.incident.end(),
                             static_cast<int>(i)))
        normals.push_back(check.plane.coeffs);
    }
    const bool ok = static_cast<int>(normals.size()) >= d &&
                    matrix_rank(std::move(normals)) == d;
    report.extremal[static_cast<std::size_t>(i)] = ok;
    if (!ok)
      report.problems.push_back("point " + std::to_string(i) + " (" + trees[i].str() +
                                ") lacks a vertex certificate");
  }

  if (brute_force) {
    // Pure oracle through n = 5; past that the predicted planes seed the
    // scan (each seed is re-verified by the oracle's own side test first).
    std::vector<Hyperplane> seeds;
    for (const auto& check : report.facets) seeds.push_back(check.plane);
    const bool use_seeds = n >= 6;
    HullResult oracle = brute_force_hull(points, use_seeds ? &seeds : nullptr);

    const Point ref = centroid(points);
    std::map<std::pair<std::vector<Rat>, Rat>, const HullFacet*> oracle_set;
    for (const HullFacet& f : oracle.facets)
      oracle_set.emplace(std::make_pair(f.coeffs, f.rhs), &f);
    std::map<std::pair<std::vector<Rat>, Rat>, std::string> predicted_set;
    for (const auto& check : report.facets)
      predicted_set.emplace(canonical_key(check.plane, ref), facet_label(check.facet));

    for (const auto& [key, label] : predicted_set)
      if (!oracle_set.count(key)) {
        report.missing.push_back(label);
        report.problems.push_back("oracle did not find facet " + label);
      }
    for (const auto& [key, facet] : oracle_set)
      if (!predicted_set.count(key)) {
        std::ostringstream msg;
        msg << "x: (";
        for (std::size_t j = 0; j < key.first.size(); ++j) {
          if (j) msg << ", ";
          msg << format_rational(key.first[j]);
        }
        msg << ") = " << format_rational(key.second);
        report.extra.push_back(msg.str());
        report.problems.push_back("oracle found unpredicted facet " + msg.str());
      }
  }

  report.pass = report.problems.empty();
  return report;
}

std::vector<long long> f_vector(int n) {
  if (n < 1) throw std::invalid_argument("f_vector: need n >= 1");
  std::vector<long long> f(static_cast<std::size_t>(n), 0);
  for (const PaintedTree& face : enumerate_faces(n)) {
    const int dim = (n - 1) - free_variable_count(face);
    f.at(static_cast<std::size_t>(dim)) += 1;
  }
  return f;
}

}  // namespace multiplihedra
