#pragma once

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "borbit/indexed_matrix.hpp"
#include "borbit/laurent.hpp"
#include "borbit/rank.hpp"
#include "borbit/roots.hpp"
#include "borbit/weyl.hpp"

namespace borbit {

// Root space basis element e_alpha of the nilradical, in the 2n x 2n matrix
// model:
//   e_{e_i-e_j} = E_{i,j} - E_{-j,-i}
//   e_{e_i+e_j} = E_{i,-j} + E_{j,-i}
//   e_{2e_i}    = E_{i,-i}
template <class R>
IndexedMatrix<R> root_basis(const RootC& a, int n) {
  if (a.j > n) throw std::invalid_argument("root index exceeds rank");
  IndexedMatrix<R> m(n);
  switch (a.kind) {
    case RootKind::diff:
      m.at(a.i, a.j) = R(1);
      m.at(-a.j, -a.i) = R(-1);
      break;
    case RootKind::sum:
      m.at(a.i, -a.j) = R(1);
      m.at(a.j, -a.i) = R(1);
      break;
    default:
      m.at(a.i, -a.i) = R(1);
  }
  return m;
}

template <class R>
IndexedMatrix<R> root_basis_dual(const RootC& a, int n) {
  return root_basis<R>(a, n).transpose();
}

// Functional on the nilradical, realized as a strictly lower-triangular
// matrix sum(c_alpha * e_alpha^T).  Construction validates the shape, so a
// value of this type is always a legal point of the linearized orbit space.
template <class R>
class Functional {
 public:
  Functional() = default;

  static Functional from_matrix(IndexedMatrix<R> m) {
    if (!is_strictly_lower(m)) throw std::invalid_argument("functional must be strictly lower");
    int n = m.n();
    for (const auto& a : positive_roots(n)) {
      switch (a.kind) {
        case RootKind::diff:
          if (!(m.at(-a.i, -a.j) == -m.at(a.j, a.i)))
            throw std::invalid_argument("broken mirror symmetry at " + a.str());
          break;
        case RootKind::sum:
          if (!(m.at(-a.i, a.j) == m.at(-a.j, a.i)))
            throw std::invalid_argument("broken mirror symmetry at " + a.str());
          break;
        default:
          break;
      }
    }
    Functional f;
    f.m_ = std::move(m);
    return f;
  }

  static Functional from_coeffs(int n, const std::map<RootC, R>& coeffs) {
    IndexedMatrix<R> m(n);
    for (const auto& [a, c] : coeffs) {
      if (a.j > n) throw std::invalid_argument("root index exceeds rank");
      m += c * root_basis_dual<R>(a, n);
    }
    return from_matrix(std::move(m));
  }

  int n() const { return m_.n(); }
  const IndexedMatrix<R>& matrix() const { return m_; }

  R coefficient(const RootC& a) const {
    switch (a.kind) {
      case RootKind::diff: return m_.at(a.j, a.i);
      case RootKind::sum: return m_.at(-a.j, a.i);
      default: return m_.at(-a.i, a.i);
    }
  }

  // All nonzero coefficients, in canonical root order.
  std::vector<std::pair<RootC, R>> coefficients() const {
    std::vector<std::pair<RootC, R>> out;
    for (const auto& a : positive_roots(n())) {
      R c = coefficient(a);
      if (!(c == R(0))) out.emplace_back(a, c);
    }
    return out;
  }

  bool operator==(const Functional& o) const { return m_ == o.m_; }
  bool operator!=(const Functional& o) const { return !(*this == o); }

 private:
  IndexedMatrix<R> m_;
};

// f_sigma: every support root with coefficient 1.
Functional<Rat> support_functional(const Involution& sigma);

inline Functional<Laurent> lift_to_laurent(const Functional<Rat>& f) {
  return Functional<Laurent>::from_matrix(lift_to_laurent(f.matrix()));
}

// Upper-triangular symplectic group element carrying its inverse; the only
// way to obtain one is through the generator factories and composition, so
// the pair is correct by construction (and re-checked on every compose).
template <class R>
struct GroupElem {
  IndexedMatrix<R> g, g_inv;

  static GroupElem identity(int n) {
    return GroupElem{IndexedMatrix<R>::identity(n), IndexedMatrix<R>::identity(n)};
  }
};

template <class R>
void validate_group_elem(const GroupElem<R>& e) {
  if (!is_upper_triangular(e.g) || !is_upper_triangular(e.g_inv))
    throw std::logic_error("group element is not upper triangular");
  if (!(e.g * e.g_inv == IndexedMatrix<R>::identity(e.g.n())))
    throw std::logic_error("tracked inverse is wrong");
}

// x_alpha(c) = 1 + c e_alpha; requires (and asserts) e_alpha^2 = 0.
template <class R>
GroupElem<R> chevalley_x(const RootC& a, const R& c, int n) {
  auto e = root_basis<R>(a, n);
  if (!(e * e).is_zero()) throw std::logic_error("root basis element is not square-zero");
  auto id = IndexedMatrix<R>::identity(n);
  GroupElem<R> out{id + c * e, id + (R(0) - c) * e};
  validate_group_elem(out);
  if (!is_symplectic_group(out.g)) throw std::logic_error("generator left the group");
  return out;
}

// h_alpha(c) = w_alpha(c) w_alpha(1)^-1 with
// w_alpha(c) = x_alpha(c) x_{-alpha}(-c^-1) x_alpha(c); diagonal by
// construction (asserted).  The inverse is h_alpha(c^-1).
template <class R>
GroupElem<R> chevalley_h(const RootC& a, const R& c, int n) {
  const R cinv = ring_inverse(c);  // throws unless c is invertible in R
  auto e = root_basis<R>(a, n);
  auto et = e.transpose();
  auto id = IndexedMatrix<R>::identity(n);
  auto w = [&](const R& s) {
    auto x = id + s * e;
    auto xm = id + (R(0) - ring_inverse(s)) * et;
    return x * xm * x;
  };
  auto w1_inv = (id + (R(0) - R(1)) * e) * (id + R(1) * et) * (id + (R(0) - R(1)) * e);
  GroupElem<R> out{w(c) * w1_inv, w(cinv) * w1_inv};
  if (!is_diagonal(out.g)) throw std::logic_error("torus element is not diagonal");
  validate_group_elem(out);
  if (!is_symplectic_group(out.g)) throw std::logic_error("generator left the group");
  return out;
}

template <class R>
GroupElem<R> gcompose(const GroupElem<R>& a, const GroupElem<R>& b) {
  GroupElem<R> out{a.g * b.g, b.g_inv * a.g_inv};
  validate_group_elem(out);
  return out;
}

// g.lambda = (g lambda g^-1)_lower; the result is validated as a functional,
// which is exactly the well-definedness of the action on this model.
template <class R>
Functional<R> dual_action(const GroupElem<R>& g, const Functional<R>& f) {
  return Functional<R>::from_matrix((g.g * f.matrix() * g.g_inv).lower_projection());
}

// --- degeneration curves -------------------------------------------------

struct CurveFactor {
  enum class Kind { unipotent, torus };
  Kind kind;
  RootC root;
  Laurent arg;
};

struct DegenerationCurve {
  int n = 0;
  Involution sigma, tau;  // expected limit and moving orbit
  std::vector<CurveFactor> factors;
};

GroupElem<Laurent> assemble_curve(const DegenerationCurve& c);

// The support exchange {2e_i, e_k+e_j} -> {e_i+e_j, 2e_k} for i < k < j,
// realized by an explicit one-parameter Borel family.
DegenerationCurve make_degeneration_curve(int i, int k, int j, int n);

struct DegenerationReport {
  DegenerationCurve curve;
  // coefficient of every positive root of g(s).f_tau, canonical order
  std::vector<std::pair<RootC, Laurent>> coefficients;
  bool limit_exists = false;
  bool limit_matches = false;  // limit equals f_sigma
  bool ok() const { return limit_exists && limit_matches; }
};

DegenerationReport verify_degeneration(const DegenerationCurve& c);

// --- ranks and dimension --------------------------------------------------

inline int sw_region_rank(const Functional<Rat>& f, int i, int j) {
  return sw_region_rank(f.matrix(), i, j);
}

// Dimension of the Borel orbit of f_sigma: rank of x -> [x, f_sigma]_lower
// over the standard basis of Lie(B) (positive root spaces + torus).
int orbit_dimension(const Involution& sigma);

// --- seeded random elements (for the randomized suites) -------------------

Rat random_coeff(std::mt19937_64& rng);                 // may be zero
GroupElem<Rat> random_unipotent(int n, std::mt19937_64& rng);
GroupElem<Rat> random_borel(int n, std::mt19937_64& rng);
Functional<Rat> random_functional(int n, std::mt19937_64& rng);

// --- coefficient rescaling -------------------------------------------------

// Carries f_D to f_{D,xi} by a product of torus generators h_{2e_i}(s'):
// s' = xi(alpha)^-1 for the short roots; for a long root the square root
// forced by the torus action is handled exactly by running that step with a
// formal parameter t and substituting t^2 -> xi(alpha) afterwards (every
// surviving exponent is even).  D must be a support: index-disjoint roots.
Functional<Rat> rescale_functional(const std::vector<RootC>& d,
                                   const std::map<RootC, Rat>& xi, int n);

}  // namespace borbit
