#include "borbit/orbit.hpp"

#include <algorithm>

namespace borbit {

Functional<Rat> support_functional(const Involution& sigma) {
  std::map<RootC, Rat> coeffs;
  for (const auto& a : support(sigma)) coeffs[a] = Rat(1);
  return Functional<Rat>::from_coeffs(sigma.n(), coeffs);
}

GroupElem<Laurent> assemble_curve(const DegenerationCurve& c) {
  auto g = GroupElem<Laurent>::identity(c.n);
  for (const auto& f : c.factors) {
    auto e = f.kind == CurveFactor::Kind::unipotent
                 ? chevalley_x<Laurent>(f.root, f.arg, c.n)
                 : chevalley_h<Laurent>(f.root, f.arg, c.n);
    g = gcompose(g, e);
  }
  return g;
}

DegenerationCurve make_degeneration_curve(int i, int k, int j, int n) {
  if (!(1 <= i && i < k && k < j && j <= n))
    throw std::invalid_argument("need 1 <= i < k < j <= n");
  DegenerationCurve c;
  c.n = n;
  c.sigma = involution_from_roots({RootC::sum(i, j), RootC::lng(k)}, n);
  c.tau = involution_from_roots({RootC::lng(i), RootC::sum(k, j)}, n);
  c.factors = {
      {CurveFactor::Kind::torus, RootC::diff(i, k), Laurent::monomial(Rat(1), -1)},
      {CurveFactor::Kind::unipotent, RootC::diff(i, k), Laurent::variable()},
      {CurveFactor::Kind::unipotent, RootC::diff(k, j), Laurent::monomial(Rat(1) / Rat(2), -2)},
      {CurveFactor::Kind::unipotent, RootC::diff(i, j), Laurent::monomial(Rat(-1), -1)},
  };
  return c;
}

DegenerationReport verify_degeneration(const DegenerationCurve& c) {
  DegenerationReport rep;
  rep.curve = c;
  auto g = assemble_curve(c);
  auto moved = dual_action(g, lift_to_laurent(support_functional(c.tau)));
  for (const auto& a : positive_roots(c.n)) rep.coefficients.emplace_back(a, moved.coefficient(a));
  try {
    auto lim = Functional<Rat>::from_matrix(limit_at_zero(moved.matrix()));
    rep.limit_exists = true;
    rep.limit_matches = lim == support_functional(c.sigma);
  } catch (const NegativeExponentError&) {
    rep.limit_exists = false;
  }
  return rep;
}

int orbit_dimension(const Involution& sigma) {
  int n = sigma.n();
  auto f = support_functional(sigma).matrix();
  auto roots = positive_roots(n);
  std::vector<IndexedMatrix<Rat>> basis;
  for (const auto& a : roots) basis.push_back(root_basis<Rat>(a, n));
  for (int i = 1; i <= n; ++i) {
    IndexedMatrix<Rat> d(n);
    d.at(i, i) = Rat(1);
    d.at(-i, -i) = Rat(-1);
    basis.push_back(d);
  }
  // row of the differential per basis element: [x, f_sigma]_lower in
  // coefficient coordinates
  std::vector<std::vector<Rat>> rows;
  rows.reserve(basis.size());
  for (const auto& x : basis) {
    auto br = Functional<Rat>::from_matrix((x * f - f * x).lower_projection());
    std::vector<Rat> row;
    row.reserve(roots.size());
    for (const auto& a : roots) row.push_back(br.coefficient(a));
    rows.push_back(std::move(row));
  }
  return rank_of_rows(rows);
}

Rat random_coeff(std::mt19937_64& rng) {
  static const Rat pool[] = {Rat(0),  Rat(1),           Rat(-1),          Rat(2),
                             Rat(-2), Rat(1) / Rat(2), Rat(-3) / Rat(2)};
  return pool[rng() % (sizeof(pool) / sizeof(pool[0]))];
}

GroupElem<Rat> random_unipotent(int n, std::mt19937_64& rng) {
  auto g = GroupElem<Rat>::identity(n);
  for (const auto& a : positive_roots(n)) {
    Rat c = random_coeff(rng);
    if (c == 0) continue;
    g = gcompose(g, chevalley_x<Rat>(a, c, n));
  }
  return g;
}

GroupElem<Rat> random_borel(int n, std::mt19937_64& rng) {
  static const Rat pool[] = {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(1) / Rat(2), Rat(3)};
  auto g = random_unipotent(n, rng);
  for (int i = 1; i <= n; ++i) {
    const Rat& c = pool[rng() % (sizeof(pool) / sizeof(pool[0]))];
    g = gcompose(g, chevalley_h<Rat>(RootC::lng(i), c, n));
  }
  return g;
}

Functional<Rat> random_functional(int n, std::mt19937_64& rng) {
  std::map<RootC, Rat> coeffs;
  for (const auto& a : positive_roots(n)) {
    Rat c = random_coeff(rng);
    if (!(c == 0)) coeffs[a] = c;
  }
  return Functional<Rat>::from_coeffs(n, coeffs);
}

Functional<Rat> rescale_functional(const std::vector<RootC>& d,
                                   const std::map<RootC, Rat>& xi, int n) {
  if (!is_orthogonal_set(d)) throw std::invalid_argument("support must be orthogonal");
  std::vector<int> used;
  for (const auto& a : d) {
    used.push_back(a.i);
    if (a.kind != RootKind::lng) used.push_back(a.j);
  }
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end())
    throw std::invalid_argument("support roots must involve disjoint indices");

  std::map<RootC, Rat> ones;
  for (const auto& a : d) ones[a] = Rat(1);
  auto f = lift_to_laurent(Functional<Rat>::from_coeffs(n, ones));

  for (const auto& a : d) {
    auto it = xi.find(a);
    if (it == xi.end() || it->second == 0)
      throw std::invalid_argument("rescaling needs a nonzero value for " + a.str());
    const Rat& v = it->second;
    if (a.kind == RootKind::lng) {
      // the torus scales this coefficient by the square of the parameter, so
      // run the step with formal t^-1 and substitute t^2 -> v; the support is
      // index-disjoint, hence every other entry stays constant in t
      auto h = chevalley_h<Laurent>(RootC::lng(a.i), Laurent::monomial(Rat(1), -1), n);
      f = dual_action(h, f);
      IndexedMatrix<Laurent> sub(n);
      for (int r = 0; r < sub.dim(); ++r)
        for (int c = 0; c < sub.dim(); ++c) {
          const Laurent& entry = f.matrix().at_display(r, c);
          if (!entry.is_zero()) sub.at_display(r, c) = Laurent(entry.eval_square_at(v));
        }
      f = Functional<Laurent>::from_matrix(sub);
    } else {
      // short roots scale by the inverse of the parameter at index a.i
      auto h = chevalley_h<Laurent>(RootC::lng(a.i), Laurent(ring_inverse(v)), n);
      f = dual_action(h, f);
    }
  }
  return Functional<Rat>::from_matrix(limit_at_zero(f.matrix()));
}

}  // namespace borbit
