#pragma once

// The positive part U of the quantized enveloping algebra of so5 in its
// four-generator PBW presentation E1 < E2 < E3 < E4, its localizations at E4
// and at (E4, E3), the central elements and the deleting-derivation elements.

#include <array>
#include <vector>

#include "qweyl/algebra.hpp"
#include "qweyl/pbw.hpp"
#include "qweyl/report.hpp"

namespace qweyl::so5 {

inline constexpr int kE1 = 0;
inline constexpr int kE2 = 1;
inline constexpr int kE3 = 2;
inline constexpr int kE4 = 3;

struct Constants {
  RatQ p1;  // q^2/(1-q^2)
  RatQ p2;  // q^3/(q^2-1)^2
  RatQ p3;  // -(q^3+q)/(q^2-1)
  RatQ p4;  // -q^5/(1+q^2)^2
  RatQ k1;  // 1/p3
  RatQ k2;  // 1/p4
  /// Coefficient of E3E1 -> E1E3 + c*E2^2, c = (q-q^3)/(1+q^2).
  RatQ c31;

  /// e3 e1^i = e1^i e3 + d(i) e1^(i-1) e2^2
  static RatQ d(int i);
  /// e4 e1^i = q^(2i) e1^i e4 - f(i) e1^(i-1) e2
  static RatQ f(int i);
};

const Constants& constants();

/// U with its six straightening rules (shared, immutable).
PresentationPtr make_so5();
/// U[E4^-1].
PresentationPtr localized_e4();
/// U[E4^-1, E3^-1], localized at E4 first.
PresentationPtr localized_e4_e3();

Algebra algebra_u();
Algebra algebra_u4();
Algebra algebra_u43();

/// c * E_{g1}^{n1} * E_{g2}^{n2} ... normalized in p.
Elem term(const Presentation& p, const RatQ& c, std::initializer_list<std::pair<int, int>> factors);

/// Each constant against its alternative closed form, k1*k2 = (q^4-1)/q^6 and
/// d(i)*k2 = 1 - q^(-4i) for i <= max_i. Residuals are scalars.
std::vector<Check> constant_checks(int max_i = 20);

/// Serre relations and the definitions of E2, E3 as commutators of E1, E4.
std::vector<Check> serre_check();

/// chi(1) = E1E3 + p4 E2^2, chi(2) = E2E4 + p3 E3. Elements carry over
/// unchanged to the localizations (same generator list).
Elem chi(int index);

/// [chi_k, E_i] = 0 for k = 1, 2 and every generator, in U and in U[E4^-1].
std::vector<Check> centrality_checks();

/// True iff z commutes with every generator of p.
bool centrality_check(const Presentation& p, const Elem& z);

struct DdaElements {
  PresentationPtr host4;   // U[E4^-1]: E14, E24
  PresentationPtr host43;  // U[E4^-1, E3^-1]: E13 and the T's
  Elem e14;
  Elem e24;
  Elem e13;
  std::array<Elem, 4> t;  // T1..T4 = E13, E24, E3, E4
};

DdaElements dda_elements();
/// chi1 = E14 E3 + p4 E24^2 and chi2 = E24 E4 in U[E4^-1]; chi1 = T1 T3 in
/// U[E4^-1, E3^-1]; and the reading E_{3,4} = E4 is shown not to give chi1.
std::vector<Check> dda_checks();

/// lambda[i][j] with T_j T_i = lambda[i][j] T_i T_j (0-based indices).
/// Throws NotQCommuting if some pair is not a scalar multiple.
std::array<std::array<RatQ, 4>, 4> t_commutation();

/// lambda[i][i] = 1 and lambda[i][j] * lambda[j][i] = 1.
std::vector<Check> t_commutation_checks();

/// e3 e1^i and e4 e1^i straightening identities checked in U.
std::vector<Check> lemma_d_f(int i);

}  // namespace qweyl::so5
