#ifndef TRAPDIST_CLOSED_FORM_HPP
#define TRAPDIST_CLOSED_FORM_HPP

// Branch-by-branch closed forms of the distance densities and of the
// distribution functions (the latter without their additive constants).
//
// Every branch is written for the closed interval between consecutive
// breakpoints. The radicands 4d^2 - 3 and d^2 - 3 are evaluated in factored
// form so they vanish exactly at d = sqrt(3)/2 and d = sqrt(3), and the
// inverse sines use asin(sqrt(3)/x) = atan2(sqrt(3), sqrt(x^2 - 3)), which
// stays well conditioned where the sine argument approaches 1.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "trapdist/geom.hpp"

namespace trapdist::closed_form {

template <typename Scalar>
struct Constants {
  static constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  static constexpr Scalar sqrt3 = std::numbers::sqrt3_v<Scalar>;
  // pi / sqrt(3) appears in nearly every coefficient.
  static constexpr Scalar pi_r3 = pi / sqrt3;
};

// sqrt(4d^2 - 3), zero below d = sqrt(3)/2
template <typename Scalar>
Scalar root_half(Scalar d) {
  using std::sqrt;
  const Scalar r3 = Constants<Scalar>::sqrt3;
  const Scalar twice = 2 * d;
  return sqrt(std::max(Scalar(0), (twice - r3) * (twice + r3)));
}

// sqrt(d^2 - 3), zero below d = sqrt(3)
template <typename Scalar>
Scalar root_full(Scalar d) {
  using std::sqrt;
  const Scalar r3 = Constants<Scalar>::sqrt3;
  return sqrt(std::max(Scalar(0), (d - r3) * (d + r3)));
}

// asin(min(1, sqrt(3) / (2d)))
template <typename Scalar>
Scalar asin_half(Scalar d) {
  using std::atan2;
  return atan2(Constants<Scalar>::sqrt3, root_half(d));
}

// asin(min(1, sqrt(3) / d))
template <typename Scalar>
Scalar asin_full(Scalar d) {
  using std::atan2;
  return atan2(Constants<Scalar>::sqrt3, root_full(d));
}

template <typename Scalar>
std::vector<Scalar> breakpoints(CaseId id) {
  using std::sqrt;
  const Scalar r3 = Constants<Scalar>::sqrt3;
  switch (id) {
    case CaseId::AB:
    case CaseId::CD:
      return {Scalar(0), r3 / 2, Scalar(1), r3, Scalar(2)};
    case CaseId::EF:
      return {Scalar(0), r3 / 2, Scalar(1), r3, Scalar(2), sqrt(Scalar(7)), 2 * r3};
    case CaseId::GH:
      return {Scalar(0), r3 / 2, Scalar(1), r3, sqrt(Scalar(7))};
  }
  throw std::invalid_argument("unknown case");
}

inline std::size_t branch_count(CaseId id) { return id == CaseId::EF ? 6 : 4; }

namespace detail {

[[noreturn]] inline void bad_branch() { throw std::out_of_range("branch index out of range"); }

// The densities are all of the form 2d * g(d); these return g.

template <typename Scalar>
Scalar density_factor_ab(std::size_t branch, Scalar d) {
  const Scalar r3 = Constants<Scalar>::sqrt3;
  const Scalar pr = Constants<Scalar>::pi_r3;
  const Scalar d2 = d * d;
  switch (branch) {
    case 0:
      return Scalar(8) / 9 * (pr / 9 + Scalar(2) / 3) * d2 - Scalar(80) / 27 * d + 4 * pr / 3;
    case 1:
      return Scalar(8) / 3 * (2 / (9 * r3) * d2 + 1 / r3) * asin_half(d) +
             Scalar(16) / 9 * (Scalar(1) / 3 - pr / 9) * d2 + Scalar(28) / 27 * root_half(d) -
             Scalar(80) / 27 * d;
    case 2:
      return Scalar(16) / 9 * (-d2 / (3 * r3) + 1 / r3) * asin_half(d) + 16 * pr / 81 * d2 -
             Scalar(4) / 27 * d2 + Scalar(4) / 9 * root_half(d) - Scalar(32) / 27 * d +
             8 * pr / 27 - Scalar(4) / 9;
    case 3:
      return 16 / (9 * r3) * (d2 / 3 + 2) * asin_full(d) +
             Scalar(4) / 9 * (Scalar(1) / 3 - 4 * pr / 9) * d2 + Scalar(16) / 9 * root_full(d) -
             Scalar(32) / 27 * d - 32 * pr / 27;
  }
  bad_branch();
}

template <typename Scalar>
Scalar density_factor_cd(std::size_t branch, Scalar d) {
  const Scalar r3 = Constants<Scalar>::sqrt3;
  const Scalar pr = Constants<Scalar>::pi_r3;
  const Scalar d2 = d * d;
  switch (branch) {
    case 0:
      return -Scalar(4) / 27 * (1 + 5 * pr / 3) * d2 + Scalar(32) / 27 * d;
    case 1:
      return -1 / (3 * r3) * (Scalar(16) / 9 * d2 + 8) * asin_half(d) +
             Scalar(4) / 27 * (pr / 3 - 1) * d2 - Scalar(28) / 27 * root_half(d) +
             Scalar(32) / 27 * d + 4 * pr / 3;
    case 2:
      return -4 / (9 * r3) * (Scalar(8) / 3 * d2 + 10) * asin_half(d) +
             Scalar(4) / 27 * (5 * pr / 3 + 1) * d2 - Scalar(16) / 9 * root_half(d) +
             Scalar(32) / 27 * d + 52 * pr / 27 + Scalar(4) / 9;
    case 3:
      return 8 / (9 * r3) * (d2 / 3 + 8) * asin_full(d) - Scalar(8) / 27 * (pr / 3 + 2) * d2 +
             Scalar(8) / 3 * root_full(d) + Scalar(32) / 27 * d - 64 * pr / 27 - Scalar(8) / 3;
  }
  bad_branch();
}

template <typename Scalar>
Scalar density_factor_ef(std::size_t branch, Scalar d) {
  const Scalar r3 = Constants<Scalar>::sqrt3;
  const Scalar pr = Constants<Scalar>::pi_r3;
  const Scalar d2 = d * d;
  switch (branch) {
    case 0:
      return -Scalar(4) / 27 * (2 * pr / 3 + 1) * d2 + Scalar(16) / 27 * d;
    case 1:
      return -8 / (9 * r3) * (Scalar(2) / 3 * d2 + 1) * asin_half(d) +
             Scalar(4) / 27 * (4 * pr / 3 - 1) * d2 + Scalar(16) / 27 * d + 4 * pr / 9 -
             Scalar(4) / 9 * root_half(d);
    case 2:
      return 8 / (9 * r3) * (d2 / 3 + 1) * asin_half(d) - Scalar(4) / 27 * (2 * pr / 3 + 1) * d2 +
             Scalar(10) / 27 * root_half(d) - 4 * pr / 27 - Scalar(2) / 9;
    case 3:
      return 8 / (9 * r3) * (d2 / 3 - 2) * asin_half(d) -
             8 / (9 * r3) * (d2 / 3 + 2) * asin_full(d) + Scalar(4) / 27 * (pr / 3 + 2) * d2 -
             Scalar(8) / 9 * root_full(d) - Scalar(14) / 27 * root_half(d) + 32 * pr / 27 +
             Scalar(10) / 9;
    case 4:
      return 8 / (9 * r3) * (d2 / 3 - 2) * asin_half(d) + 16 / (9 * r3) * asin_full(d) -
             Scalar(4) / 27 * (pr / 3 - 1) * d2 - Scalar(14) / 27 * root_half(d) +
             Scalar(16) / 27 * root_full(d) + Scalar(2) / 9;
    case 5:
      return 8 / (9 * r3) * (4 - d2 / 3) * asin_full(d) + Scalar(4) / 27 * (pr / 3 - 1) * d2 +
             Scalar(8) / 9 * root_full(d) - 16 * pr / 27 - Scalar(8) / 9;
  }
  bad_branch();
}

template <typename Scalar>
Scalar density_factor_gh(std::size_t branch, Scalar d) {
  const Scalar r3 = Constants<Scalar>::sqrt3;
  const Scalar pr = Constants<Scalar>::pi_r3;
  const Scalar d2 = d * d;
  switch (branch) {
    case 0:
      return Scalar(4) / 27 * (pr / 3 - 1) * d2 + Scalar(16) / 27 * d;
    case 1:
      return 8 / (9 * r3) * (Scalar(2) / 3 * d2 - 1) * asin_half(d) -
             Scalar(4) / 27 * (5 * pr / 3 + 1) * d2 - Scalar(4) / 27 * root_half(d) +
             Scalar(16) / 27 * d + 4 * pr / 9;
    case 2:
      return 8 / (3 * r3) * (d2 / 9 - 1) * asin_half(d) - Scalar(4) / 9 * (pr / 3 - 1) * d2 -
             Scalar(22) / 27 * root_half(d) + 28 * pr / 27 + Scalar(2) / 3;
    case 3:
      return -8 / (9 * r3) * (d2 / 3 - 2) * (asin_half(d) + asin_full(d)) +
             Scalar(8) / 27 * (pr / 3 - 1) * d2 + Scalar(14) / 27 * root_half(d) +
             Scalar(8) / 27 * root_full(d) - 16 * pr / 27 - Scalar(10) / 9;
  }
  bad_branch();
}

// Distribution-function branches, each up to an additive constant.

template <typename Scalar>
Scalar cumulative_ab(std::size_t branch, Scalar d) {
  const Scalar r3 = Constants<Scalar>::sqrt3;
  const Scalar pr = Constants<Scalar>::pi_r3;
  const Scalar d2 = d * d;
  const Scalar d3 = d2 * d;
  const Scalar d4 = d2 * d2;
  switch (branch) {
    case 0:
      return Scalar(4) / 9 * (Scalar(2) / 3 + pr / 9) * d4 - Scalar(160) / 81 * d3 + 4 * pr / 3 * d2;
    case 1:
      return 8 / (27 * r3) * (d2 + 9) * d2 * asin_half(d) +
             Scalar(8) / 9 * (Scalar(1) / 3 - pr / 9) * d4 - Scalar(160) / 81 * d3 +
             (58 * d2 + 15) / 81 * root_half(d);
    case 2:
      return -8 / (27 * r3) * (d2 - 6) * d2 * asin_half(d) + (8 * pr / 81 - Scalar(2) / 27) * d4 -
             Scalar(64) / 81 * d3 + (8 * pr / 27 - Scalar(4) / 9) * d2 +
             (22 * d2 + 15) / 81 * root_half(d);
    case 3:
      return 8 / (27 * r3) * (d2 + 12) * d2 * asin_full(d) +
             Scalar(2) / 9 * (Scalar(1) / 3 - 4 * pr / 9) * d4 - Scalar(64) / 81 * d3 -
             32 * pr / 27 * d2 + (104 * d2 + 48) / 81 * root_full(d);
  }
  bad_branch();
}

template <typename Scalar>
Scalar cumulative_cd(std::size_t branch, Scalar d) {
  const Scalar r3 = Constants<Scalar>::sqrt3;
  const Scalar pr = Constants<Scalar>::pi_r3;
  const Scalar d2 = d * d;
  const Scalar d3 = d2 * d;
  const Scalar d4 = d2 * d2;
  switch (branch) {
    case 0:
      return -Scalar(2) / 27 * (5 * pr / 3 + 1) * d4 + Scalar(64) / 81 * d3;
    case 1:
      return -8 / (27 * r3) * (d2 + 9) * d2 * asin_half(d) + Scalar(2) / 27 * (pr / 3 - 1) * d4 +
             Scalar(64) / 81 * d3 + 4 * pr / 3 * d2 - (58 * d2 + 15) / 81 * root_half(d);
    case 2:
      return -8 / (27 * r3) * (2 * d2 + 15) * d2 * asin_half(d) +
             Scalar(2) / 27 * (5 * pr / 3 + 1) * d4 + Scalar(64) / 81 * d3 +
             (52 * pr / 27 + Scalar(4) / 9) * d2 - (100 * d2 + 24) / 81 * root_half(d);
    case 3:
      return 4 / (27 * r3) * (d2 + 48) * d2 * asin_full(d) - Scalar(4) / 27 * (pr / 3 + 2) * d4 +
             Scalar(64) / 81 * d3 - (64 * pr / 27 + Scalar(8) / 3) * d2 +
             (148 * d2 + 168) / 81 * root_full(d);
  }
  bad_branch();
}

template <typename Scalar>
Scalar cumulative_ef(std::size_t branch, Scalar d) {
  const Scalar r3 = Constants<Scalar>::sqrt3;
  const Scalar pr = Constants<Scalar>::pi_r3;
  const Scalar d2 = d * d;
  const Scalar d3 = d2 * d;
  const Scalar d4 = d2 * d2;
  switch (branch) {
    case 0:
      return -Scalar(2) / 27 * (2 * pr / 3 + 1) * d4 + Scalar(32) / 81 * d3;
    case 1:
      return -8 / (27 * r3) * (d2 + 3) * d2 * asin_half(d) +
             Scalar(2) / 27 * (4 * pr / 3 - 1) * d4 + Scalar(32) / 81 * d3 + 4 * pr / 9 * d2 -
             (26 * d2 + 3) / 81 * root_half(d);
    case 2:
      return 4 / (27 * r3) * (d2 + 6) * d2 * asin_half(d) -
             Scalar(2) / 27 * (2 * pr / 3 + 1) * d4 - (4 * pr / 27 + Scalar(2) / 9) * d2 +
             (42 * d2 + 9) / 162 * root_half(d);
    case 3:
      return 4 / (27 * r3) * d2 * ((d2 - 12) * asin_half(d) - (d2 + 12) * asin_full(d)) +
             Scalar(2) / 27 * (pr / 3 + 2) * d4 + Scalar(2) / 9 * (16 * pr / 3 + 5) * d2 -
             (54 * d2 + 27) / 162 * root_half(d) - (52 * d2 + 24) / 81 * root_full(d);
    case 4:
      return 4 / (27 * r3) * (d2 - 12) * d2 * asin_half(d) + 16 / (9 * r3) * d2 * asin_full(d) -
             Scalar(2) / 27 * (pr / 3 - 1) * d4 + Scalar(2) / 9 * d2 -
             (54 * d2 + 27) / 162 * root_half(d) + (32 * d2 + 48) / 81 * root_full(d);
    case 5:
      return -4 / (27 * r3) * (d2 - 24) * d2 * asin_full(d) + Scalar(2) / 27 * (pr / 3 - 1) * d4 -
             Scalar(8) / 9 * (2 * pr / 3 + 1) * d2 + (44 * d2 + 120) / 81 * root_full(d);
  }
  bad_branch();
}

template <typename Scalar>
Scalar cumulative_gh(std::size_t branch, Scalar d) {
  const Scalar r3 = Constants<Scalar>::sqrt3;
  const Scalar pr = Constants<Scalar>::pi_r3;
  const Scalar d2 = d * d;
  const Scalar d3 = d2 * d;
  const Scalar d4 = d2 * d2;
  switch (branch) {
    case 0:
      return Scalar(2) / 27 * (pr / 3 - 1) * d4 + Scalar(32) / 81 * d3;
    case 1:
      return 8 / (27 * r3) * (d2 - 3) * d2 * asin_half(d) -
             Scalar(2) / 27 * (5 * pr / 3 + 1) * d4 + Scalar(32) / 81 * d3 + 4 * pr / 9 * d2 -
             (2 * d2 + 3) / 27 * root_half(d);
    case 2:
      return 4 / (27 * r3) * (d2 - 18) * d2 * asin_half(d) - Scalar(2) / 9 * (pr / 3 - 1) * d4 +
             Scalar(2) / 3 * (14 * pr / 9 + 1) * d2 - (86 * d2 + 39) / 162 * root_half(d);
    case 3:
      return -4 / (27 * r3) * (d2 - 12) * d2 * (asin_half(d) + asin_full(d)) +
             Scalar(4) / 27 * (pr / 3 - 1) * d4 - Scalar(2) / 9 * (8 * pr / 3 + 5) * d2 +
             (54 * d2 + 27) / 162 * root_half(d) + (12 * d2 + 72) / 81 * root_full(d);
  }
  bad_branch();
}

}  // namespace detail

// Density on branch `branch`, including the 2d prefactor.
template <typename Scalar>
Scalar density_branch(CaseId id, std::size_t branch, Scalar d) {
  switch (id) {
    case CaseId::AB: return 2 * d * detail::density_factor_ab(branch, d);
    case CaseId::CD: return 2 * d * detail::density_factor_cd(branch, d);
    case CaseId::EF: return 2 * d * detail::density_factor_ef(branch, d);
    case CaseId::GH: return 2 * d * detail::density_factor_gh(branch, d);
  }
  throw std::invalid_argument("unknown case");
}

// Distribution function on branch `branch`, without its additive constant.
template <typename Scalar>
Scalar cumulative_branch(CaseId id, std::size_t branch, Scalar d) {
  switch (id) {
    case CaseId::AB: return detail::cumulative_ab(branch, d);
    case CaseId::CD: return detail::cumulative_cd(branch, d);
    case CaseId::EF: return detail::cumulative_ef(branch, d);
    case CaseId::GH: return detail::cumulative_gh(branch, d);
  }
  throw std::invalid_argument("unknown case");
}

}  // namespace trapdist::closed_form

#endif  // TRAPDIST_CLOSED_FORM_HPP
