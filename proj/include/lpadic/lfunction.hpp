#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpadic/dirichlet.hpp"
#include "lpadic/measure.hpp"

namespace lpadic {

/// a -> <a>^k = (omega^{-1}(a) a)^k on p-adic units.
struct Weight {
  unsigned long k = 0;
};

/// Inputs of the p-adic L-function: the measure E_c, an even character chi
/// of level d p^m with d dividing its conductor, and the integration window.
class LpParams {
 public:
  LpParams(BernoulliParams measure, unsigned long m, const DirichletCharacter& chi, long relprec,
           unsigned long j_min, unsigned long j_max, long target_valuation);

  const BernoulliParams& measure() const { return measure_; }
  const Integer& p() const { return measure_.p(); }
  const Integer& d() const { return measure_.d(); }
  const Integer& c() const { return measure_.c(); }
  unsigned long m() const { return m_; }
  /// chi at the working precision.
  const DirichletCharacter& chi() const { return chi_; }
  long relprec() const { return relprec_; }
  unsigned long j_min() const { return j_min_; }
  unsigned long j_max() const { return j_max_; }
  long target_valuation() const { return target_; }
  /// relprec + j_max: E_c weights at level j carry p^{-j}, so sums are
  /// formed with j_max guard digits.
  long working_precision() const { return relprec_ + static_cast<long>(j_max_); }

 private:
  BernoulliParams measure_;
  unsigned long m_;
  DirichletCharacter chi_;
  long relprec_;
  unsigned long j_min_;
  unsigned long j_max_;
  long target_;
};

/// <a>^k for a unit a modulo a multiple of p, with a's least representative
/// as its Z_p lift.
PadicNum weight_eval(const Weight& w, const Integer& p, const UnitResidue& a, long relprec);

/// (chi omega^{-1})(a) <a>^k for a unit a mod d p^j, j >= m.
PadicNum integrand_eval(const LpParams& params, const Weight& w, const UnitResidue& a);

/// S_j = sum over units a mod d p^j of integrand(a) E_c(j, a).
PadicNum riemann_sum(const LpParams& params, const Weight& w, unsigned long j);

struct EvalReport {
  PadicNum value;
  unsigned long level_used = 0;
  bool converged = false;
  /// Valuation of S_{level_used} - S_{level_used - 1} (a lower bound when
  /// the increment vanished to precision).
  long tail_valuation = 0;
  /// (j, valuation lower bound of S_j - S_{j-1}) for every increment seen.
  std::vector<std::pair<unsigned long, long>> increments;
};

/// Integrates chi omega^{-1} <a>^k against E_c over the units by Riemann
/// sums for j = max(j_min, m), ..., j_max. Stops at the first j >= m + 1
/// where the last two increments both have valuation >= T.
EvalReport p_adic_L(const LpParams& params, const Weight& w);

/// (1/n) (1 - chi(c) <c>^n) (1 - (chi omega^{-n})(p) p^{n-1}) B_{n, chi omega^{-n}}.
PadicNum rhs_special_value(const LpParams& params, unsigned long n);

enum class Sign { Plus, Minus };

std::string to_string(Sign sign);
Sign parse_sign(const std::string& text);

struct InterpolationReport {
  unsigned long n = 0;
  PadicNum lhs;
  PadicNum rhs;
  bool converged = false;
  unsigned long level_used = 0;
  /// Lower bounds for nu(L - R) and nu(L + R).
  long valuation_minus = 0;
  long valuation_plus = 0;
  /// The sign s with nu(L - s R) >= T when exactly one clears; otherwise
  /// the sign with the larger valuation.
  Sign sign = Sign::Plus;
  /// nu(L - s R) for the reported sign.
  long valuation_of_difference = 0;
  bool pass = false;
};

/// Compares p_adic_L at weight n - 1 with rhs_special_value(n). Passes when
/// the integral converged and exactly one of L - R, L + R has valuation
/// >= T; with a pinned sign, that sign must be the one.
InterpolationReport verify_interpolation(const LpParams& params, unsigned long n,
                                         std::optional<Sign> pinned = std::nullopt);

/// Lower bound for the valuation: the valuation itself, the absolute
/// precision of a zero, or nullopt for an exact zero.
std::optional<long> valuation_lower_bound(const PadicNum& x);

}  // namespace lpadic
