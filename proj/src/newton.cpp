#include "locmult/newton.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "locmult/errors.hpp"
#include "locmult/matrix.hpp"
#include "locmult/monomial_set.hpp"

namespace locmult {

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> generators) : ring_(std::move(ring)) {
  for (const auto& g : generators) {
    if (g.size() != ring_->size()) throw RingMismatch("monomial has the wrong number of exponents");
  }
  generators_ = minimize_monomials(std::move(generators));
}

MonomialIdeal MonomialIdeal::from_ideal(const Ideal& ideal) {
  if (!ideal.is_monomial()) throw HypothesisError("ideal is not generated by monomials");
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.terms().front().monomial);
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

bool MonomialIdeal::is_m_primary() const {
  if (std::any_of(generators_.begin(), generators_.end(), [](const Monomial& g) { return g.is_one(); })) {
    return false;
  }
  return pure_power_box(generators_, nvars()).has_value();
}

bool MonomialIdeal::contains(const Monomial& m) const { return in_monomial_ideal(m, generators_); }

Ideal MonomialIdeal::to_ideal() const {
  std::vector<Polynomial> gens;
  for (const auto& g : generators_) gens.push_back(Polynomial::monomial(ring_, g));
  return Ideal(ring_, std::move(gens));
}

std::string MonomialIdeal::to_string() const { return to_ideal().to_string(); }

namespace {

std::vector<Rational> as_point(const Monomial& m) {
  std::vector<Rational> p;
  for (std::size_t i = 0; i < m.size(); ++i) p.emplace_back(m[i]);
  return p;
}

Rational dot(std::span<const Rational> w, std::span<const Rational> a) {
  Rational s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * a[i];
  return s;
}

// Kernel vector of an (n-1) x n matrix of rank n-1.
std::optional<std::vector<Rational>> kernel_line(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t n = m.cols();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < n; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r + 1 != n) return std::nullopt;
  std::size_t free = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) ++free;
  std::vector<Rational> w(n, Rational(0));
  w[free] = 1;
  for (std::size_t i = 0; i < r; ++i) w[pivot_col[i]] = -m(i, free);
  return w;
}

// Scales w >= 0 to a primitive integer vector.
void make_primitive(std::vector<Rational>& w) {
  mpz_class den = 1;
  for (const auto& x : w) den = lcm(den, mpz_class(x.get_den()));
  mpz_class g = 0;
  for (auto& x : w) {
    x *= den;
    g = gcd(g, mpz_class(x.get_num()));
  }
  for (auto& x : w) {
    x /= g;
    x.canonicalize();
  }
}

void for_each_subset(std::size_t total, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > total) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == total - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void require_small(std::size_t n) {
  if (n > kNewtonMaxVariables) {
    throw ResourceCapError("Newton polyhedron limited to " + std::to_string(kNewtonMaxVariables) +
                           " variables");
  }
}

}  // namespace

bool NewtonPolyhedron::contains(std::span<const Rational> point) const {
  if (vertices.empty()) return false;
  for (const auto& x : point) {
    if (x < 0) return false;
  }
  return std::all_of(facets.begin(), facets.end(),
                     [&](const Facet& f) { return dot(f.normal, point) >= f.rhs; });
}

bool NewtonPolyhedron::contains(const Monomial& m) const { return contains(as_point(m)); }

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.nvars();
  require_small(n);
  NewtonPolyhedron out;
  out.nvars = n;
  const auto gens = ideal.generators();
  if (gens.empty()) return out;
  std::vector<std::vector<Rational>> points;
  for (const auto& g : gens) points.push_back(as_point(g));
  // Items 0..p-1 are points, p..p+n-1 are the axis rays.
  const std::size_t p = points.size();
  std::set<std::pair<std::vector<Rational>, Rational>> seen;
  for_each_subset(p + n, n, [&](const std::vector<std::size_t>& pick) {
    if (pick.front() >= p) return;
    const auto& base = points[pick.front()];
    Matrix m(n - 1, n);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (pick[r] < p) {
          m(r - 1, c) = points[pick[r]][c] - base[c];
        } else {
          m(r - 1, c) = (c == pick[r] - p) ? 1 : 0;
        }
      }
    }
    auto w = n == 1 ? std::optional<std::vector<Rational>>(std::vector<Rational>{1}) : kernel_line(m);
    if (!w) return;
    const bool nonneg = std::all_of(w->begin(), w->end(), [](const Rational& x) { return x >= 0; });
    const bool nonpos = std::all_of(w->begin(), w->end(), [](const Rational& x) { return x <= 0; });
    if (!nonneg && !nonpos) return;
    if (nonpos) {
      for (auto& x : *w) x = -x;
    }
    make_primitive(*w);
    const Rational c = dot(*w, base);
    if (c == 0) return;  // implied by the orthant
    for (const auto& q : points) {
      if (dot(*w, q) < c) return;
    }
    if (seen.emplace(*w, c).second) out.facets.push_back(Facet{*w, c});
  });
  std::sort(out.facets.begin(), out.facets.end(), [](const Facet& a, const Facet& b) {
    return std::tie(a.normal, a.rhs) < std::tie(b.normal, b.rhs);
  });
  for (std::size_t k = 0; k < p; ++k) {
    std::vector<std::vector<Rational>> tight;
    for (const auto& f : out.facets) {
      if (dot(f.normal, points[k]) == f.rhs) tight.push_back(f.normal);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (points[k][i] == 0) {
        std::vector<Rational> e(n, Rational(0));
        e[i] = 1;
        tight.push_back(e);
      }
    }
    if (tight.size() < n) continue;
    Matrix t(tight.size(), n);
    for (std::size_t r = 0; r < tight.size(); ++r) {
      for (std::size_t c = 0; c < n; ++c) t(r, c) = tight[r][c];
    }
    if (rank(t) == n) out.vertices.push_back(gens[k]);
  }
  return out;
}

MonomialIdeal monomial_closure(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.nvars();
  const auto gens = ideal.generators();
  if (gens.empty()) return ideal;
  const NewtonPolyhedron poly = newton_polyhedron(ideal);
  // Lattice points beyond the generator bounding box are dominated by
  // their clamp, which stays inside the polyhedron.
  std::vector<unsigned> box(n, 0);
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < n; ++i) box[i] = std::max(box[i], g[i]);
  }
  std::vector<Monomial> inside;
  std::vector<unsigned> a(n, 0);
  while (true) {
    Monomial m(std::span<const unsigned>(a.data(), n));
    if (poly.contains(m)) inside.push_back(m);
    std::size_t i = 0;
    while (i < n && a[i] == box[i]) a[i++] = 0;
    if (i == n) break;
    ++a[i];
  }
  return MonomialIdeal(ideal.ring(), std::move(inside));
}

namespace {

using Face = std::vector<std::size_t>;  // indices into the vertex list

std::size_t affine_dimension(const Face& face, const std::vector<std::vector<Rational>>& v) {
  if (face.size() <= 1) return 0;
  const std::size_t n = v.front().size();
  Matrix m(face.size() - 1, n);
  for (std::size_t r = 1; r < face.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r - 1, c) = v[face[r]][c] - v[face[0]][c];
  }
  return rank(m);
}

// Pulling triangulation: cone from the first vertex over every facet of
// the face that avoids it. Faces are cut out by the supporting hyperplanes.
void triangulate(const Face& face, std::size_t dim, const std::vector<std::vector<Rational>>& v,
                 const std::vector<Facet>& hyperplanes, std::vector<Face>& simplices) {
  if (dim == 0) {
    simplices.push_back(face);
    return;
  }
  const std::size_t apex = face.front();
  std::set<Face> subfaces;
  for (const auto& h : hyperplanes) {
    Face sub;
    for (std::size_t k : face) {
      if (dot(h.normal, v[k]) == h.rhs) sub.push_back(k);
    }
    if (sub.empty() || sub.size() == face.size()) continue;
    if (std::find(sub.begin(), sub.end(), apex) != sub.end()) continue;
    if (affine_dimension(sub, v) != dim - 1) continue;
    subfaces.insert(sub);
  }
  for (const auto& sub : subfaces) {
    std::vector<Face> part;
    triangulate(sub, dim - 1, v, hyperplanes, part);
    for (auto& s : part) {
      s.push_back(apex);
      simplices.push_back(std::move(s));
    }
  }
}

}  // namespace

std::size_t monomial_multiplicity(const MonomialIdeal& ideal) {
  if (!ideal.is_m_primary()) throw HypothesisError("monomial_multiplicity: ideal is not m-primary");
  const std::size_t n = ideal.nvars();
  const NewtonPolyhedron poly = newton_polyhedron(ideal);
  std::vector<std::vector<Rational>> v;
  for (const auto& m : poly.vertices) v.push_back(as_point(m));
  std::vector<Facet> hyperplanes = poly.facets;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> e(n, Rational(0));
    e[i] = 1;
    hyperplanes.push_back(Facet{e, 0});
  }
  // The bounded complement is the union of the cones from the origin over
  // the facets, all of which are compact for an m-primary ideal.
  Rational total = 0;
  for (const auto& f : poly.facets) {
    Face face;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (dot(f.normal, v[k]) == f.rhs) face.push_back(k);
    }
    std::vector<Face> simplices;
    triangulate(face, n - 1, v, hyperplanes, simplices);
    for (const auto& s : simplices) {
      Matrix m(n, n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(r, c) = v[s[r]][c];
      }
      total += abs(determinant(m));
    }
  }
  return static_cast<std::size_t>(total.get_num().get_ui());
}

Rational monomial_loja(const MonomialIdeal& ideal) {
  if (!ideal.is_m_primary()) throw HypothesisError("monomial_loja: ideal is not m-primary");
  const NewtonPolyhedron poly = newton_polyhedron(ideal);
  Rational best = 0;
  for (std::size_t i = 0; i < ideal.nvars(); ++i) {
    for (const auto& f : poly.facets) {
      if (f.normal[i] != 0) best = std::max<Rational>(best, f.rhs / f.normal[i]);
    }
  }
  return best;
}

bool monomial_power_test(const MonomialIdeal& ideal, unsigned p, unsigned q) {
  if (!ideal.is_m_primary()) throw HypothesisError("monomial_power_test: ideal is not m-primary");
  if (q == 0) throw HypothesisError("monomial_power_test needs q >= 1");
  const NewtonPolyhedron poly = newton_polyhedron(ideal);
  const std::size_t n = ideal.nvars();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> point(n, Rational(0));
    point[i] = Rational(p) / q;
    point[i].canonicalize();
    if (!poly.contains(point)) return false;
  }
  return true;
}

}  // namespace locmult
