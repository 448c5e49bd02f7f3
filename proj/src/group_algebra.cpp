#include "foulkes/group_algebra.hpp"

#include <stdexcept>

#include "foulkes/char_values.hpp"
#include "foulkes/foulkes_table.hpp"
#include "foulkes/matrix.hpp"

namespace foulkes {

GroupAlgebraElement GroupAlgebraElement::unit(const GroupTable& G) {
  GroupAlgebraElement e(G);
  e[G.index_of(WreathElement::identity(G.n()))] = 1;
  return e;
}

static void check_same_group(const GroupAlgebraElement& a,
                             const GroupAlgebraElement& b) {
  if (&a.group() != &b.group())
    throw std::invalid_argument("group algebra elements from different groups");
}

GroupAlgebraElement GroupAlgebraElement::operator+(
    const GroupAlgebraElement& o) const {
  check_same_group(*this, o);
  GroupAlgebraElement out(*G_);
  for (long i = 0; i < size(); ++i) out[i] = coeffs_[i] + o.coeffs_[i];
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-(
    const GroupAlgebraElement& o) const {
  check_same_group(*this, o);
  GroupAlgebraElement out(*G_);
  for (long i = 0; i < size(); ++i) out[i] = coeffs_[i] - o.coeffs_[i];
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator*(
    const GroupAlgebraElement& o) const {
  check_same_group(*this, o);
  // (ab)(g) = sum_h a(h) b(h^{-1} g), accumulated as out[h g'] += a(h) b(g').
  GroupAlgebraElement out(*G_);
  for (long h = 0; h < size(); ++h) {
    if (coeffs_[h] == 0) continue;
    for (long gp = 0; gp < size(); ++gp) {
      if (o.coeffs_[gp] == 0) continue;
      out[G_->product_index(h, gp)] += coeffs_[h] * o.coeffs_[gp];
    }
  }
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const Rational& c) const {
  GroupAlgebraElement out(*G_);
  for (long i = 0; i < size(); ++i) out[i] = coeffs_[i] * c;
  return out;
}

Rational GroupAlgebraElement::coefficient_sum() const {
  Rational s(0);
  for (const Rational& c : coeffs_) s += c;
  return s;
}

bool GroupAlgebraElement::is_zero() const {
  for (const Rational& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::vector<GroupAlgebraElement> descent_sums(const GroupTable& G) {
  int dim = (G.r() == 1) ? G.n() : G.n() + 1;
  std::vector<GroupAlgebraElement> D(dim, GroupAlgebraElement(G));
  for (long e = 0; e < G.order(); ++e) D[G.des_of(e)][e] = 1;
  return D;
}

std::vector<GroupAlgebraElement> eulerian_idempotents(const GroupTable& G) {
  int r = G.r(), n = G.n();
  int dim = (r == 1) ? n : n + 1;
  std::vector<GroupAlgebraElement> D = descent_sums(G);
  std::vector<GroupAlgebraElement> E(dim, GroupAlgebraElement(G));
  // sum_i C((X-1)/r + n - i, n) D_i collected by powers of X; for r = 1 the
  // coefficient of X^{k+1} feeds E_k, for r >= 2 the coefficient of X^k.
  for (int i = 0; i < dim; ++i) {
    Polynomial p = binom_shift_poly(n - i, n, r);
    for (int k = 0; k < dim; ++k) {
      int power = (r == 1) ? k + 1 : k;
      Rational c = p.coefficient(power);
      if (c == 0) continue;
      E[k] = E[k] + D[i] * c;
    }
  }
  return E;
}

bool TransitionReport::all_pass() const {
  for (const CheckItem& it : items)
    if (!it.pass) return false;
  return true;
}

TransitionReport verify_transition(const GroupTable& G) {
  int r = G.r(), n = G.n();
  int dim = (r == 1) ? n : n + 1;
  TransitionReport rep;
  std::vector<GroupAlgebraElement> D = descent_sums(G);
  std::vector<GroupAlgebraElement> E = eulerian_idempotents(G);
  FoulkesTable phi = phi_table(r, n);

  {
    CheckItem it{"D_i = sum_j phi_i(C_{n-j}) E_*", true, ""};
    for (int i = 0; i < dim && it.pass; ++i) {
      GroupAlgebraElement rhs(G);
      for (int j = 0; j < dim; ++j) {
        int target = (r == 1) ? (n - 1 - j) : (n - j);
        rhs = rhs + E[target] * Rational(phi.entries[i][j]);
      }
      if (!(rhs == D[i])) {
        it.pass = false;
        it.detail = "mismatch at i = " + std::to_string(i);
      }
    }
    rep.items.push_back(std::move(it));
  }
  {
    CheckItem it{"E_i E_j = delta_ij E_i", true, ""};
    for (int i = 0; i < dim && it.pass; ++i)
      for (int j = 0; j < dim && it.pass; ++j) {
        GroupAlgebraElement prod = E[i] * E[j];
        const GroupAlgebraElement& expect =
            (i == j) ? E[i] : GroupAlgebraElement(G);
        if (!(prod == expect)) {
          it.pass = false;
          it.detail = "failure at (" + std::to_string(i) + "," +
                      std::to_string(j) + ")";
        }
      }
    rep.items.push_back(std::move(it));
  }
  {
    CheckItem it{"sum_i E_i = 1", true, ""};
    GroupAlgebraElement total(G);
    for (const GroupAlgebraElement& e : E) total = total + e;
    if (!(total == GroupAlgebraElement::unit(G))) {
      it.pass = false;
      it.detail = "sum of idempotents is not the unit";
    }
    rep.items.push_back(std::move(it));
  }
  {
    CheckItem it{"projector ranks are positive integers", true, ""};
    long id_index = G.index_of(WreathElement::identity(n));
    for (int i = 0; i < dim && it.pass; ++i) {
      Rational trace = E[i][id_index] * Rational(group_order(r, n));
      if (!is_integral(trace) || sgn(trace) <= 0) {
        it.pass = false;
        it.detail = "rank of E_" + std::to_string(i) + " is " +
                    to_fraction_string(trace);
      }
    }
    rep.items.push_back(std::move(it));
  }
  {
    CheckItem it{"eps_coeff_matrix * Phi^t = I", true, ""};
    Matrix<Rational> lambda = eps_coeff_matrix(r, n);
    Matrix<Rational> phit(dim, std::vector<Rational>(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) phit[i][j] = Rational(phi.entries[j][i]);
    if (!(matrix_mul(lambda, phit) == matrix_identity<Rational>(dim))) {
      it.pass = false;
      it.detail = "Lambda Phi^t differs from the identity";
    }
    rep.items.push_back(std::move(it));
  }
  {
    CheckItem it{"Phi^t * Phi^{-t} = I", true, ""};
    Matrix<Rational> lambda = eps_coeff_matrix(r, n);
    Matrix<Rational> phit(dim, std::vector<Rational>(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) phit[i][j] = Rational(phi.entries[j][i]);
    if (!(matrix_mul(phit, lambda) == matrix_identity<Rational>(dim))) {
      it.pass = false;
      it.detail = "Phi^t Lambda differs from the identity";
    }
    rep.items.push_back(std::move(it));
  }
  return rep;
}

}  // namespace foulkes
