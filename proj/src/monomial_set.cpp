#include "locmult/monomial_set.hpp"

#include <algorithm>

#include "locmult/term_order.hpp"

namespace locmult {

std::vector<Monomial> minimize_monomials(std::vector<Monomial> gens) {
  // Sorting by degree first means a divisor is always seen before its multiples.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return MonomialLess{}(a, b);
  });
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    if (!in_monomial_ideal(g, kept)) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(), MonomialLess{});
  return kept;
}

bool in_monomial_ideal(const Monomial& m, std::span<const Monomial> gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::optional<std::vector<unsigned>> pure_power_box(std::span<const Monomial> gens, std::size_t nvars) {
  std::vector<unsigned> box(nvars, 0);
  std::vector<bool> found(nvars, false);
  for (const auto& g : gens) {
    if (g.is_one()) return std::vector<unsigned>(nvars, 0);
    const int v = g.pure_power_variable();
    if (v < 0) continue;
    const auto i = static_cast<std::size_t>(v);
    if (!found[i] || g[i] < box[i]) box[i] = g[i];
    found[i] = true;
  }
  for (bool f : found) {
    if (!f) return std::nullopt;
  }
  return box;
}

namespace {

void enumerate(std::span<const Monomial> gens, const std::vector<unsigned>& box, Monomial& current,
               std::size_t var, std::size_t& count,
               const std::function<void(const Monomial&)>& visit) {
  const std::size_t n = current.size();
  for (unsigned e = 0; e < box[var]; ++e) {
    current.set(var, e);
    // Raising an exponent keeps a monomial inside the ideal, so stop at the
    // first member along this axis.
    if (in_monomial_ideal(current, gens)) break;
    if (var + 1 == n) {
      ++count;
      if (visit) visit(current);
    } else {
      enumerate(gens, box, current, var + 1, count, visit);
    }
  }
  current.set(var, 0);
}

}  // namespace

std::optional<std::size_t> for_each_standard_monomial(
    std::span<const Monomial> gens, std::size_t nvars,
    const std::function<void(const Monomial&)>& visit) {
  const auto box = pure_power_box(gens, nvars);
  if (!box) return std::nullopt;
  Monomial current(nvars);
  std::size_t count = 0;
  if (in_monomial_ideal(current, gens)) return 0;
  enumerate(gens, *box, current, 0, count, visit);
  return count;
}

std::optional<std::size_t> count_standard_monomials(std::span<const Monomial> gens, std::size_t nvars) {
  return for_each_standard_monomial(gens, nvars, {});
}

std::optional<unsigned> power_containment_degree(std::span<const Monomial> gens, std::size_t nvars) {
  unsigned top = 0;
  bool any = false;
  const auto count = for_each_standard_monomial(gens, nvars, [&](const Monomial& m) {
    any = true;
    top = std::max(top, m.degree());
  });
  if (!count) return std::nullopt;
  return any ? top + 1 : 0;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  Monomial current(nvars);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned left) {
    if (var + 1 == nvars) {
      current.set(var, left);
      out.push_back(current);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      current.set(var, e);
      rec(var + 1, left - e);
    }
    current.set(var, 0);
  };
  rec(0, d);
  const TermOrder order = TermOrder::global();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return out;
}

}  // namespace locmult
