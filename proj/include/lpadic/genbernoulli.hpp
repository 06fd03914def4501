#pragma once

#include "lpadic/cyclotomic.hpp"
#include "lpadic/dirichlet.hpp"
#include "lpadic/padic.hpp"

namespace lpadic {

/// B_{m,chi} = f^{m-1} sum_{a=1}^{f} chi0(a) B_m(a/f), with f the conductor
/// and chi0 the associated primitive character, as an exact element of
/// Q(zeta_{p-1}).
CyclotomicNumber general_bernoulli_exact(const DirichletCharacter& chi, unsigned long m);

/// The same sum taken over a multiple F of the conductor, still with the
/// primitive chi0 (so a sharing a factor with F but not with f counts).
CyclotomicNumber general_bernoulli_via_multiple_exact(const DirichletCharacter& chi, unsigned long m,
                                                      const Integer& multiple);

/// B_{m,chi} embedded in Q_p at the character's precision.
PadicNum general_bernoulli(const DirichletCharacter& chi, unsigned long m);
PadicNum general_bernoulli_via_multiple(const DirichletCharacter& chi, unsigned long m, const Integer& multiple);

/// chi * omega^{-k}, with omega^{-k} realized as omega^{(p-1-k) mod (p-1)}.
DirichletCharacter twist_by_omega_inverse(const DirichletCharacter& chi, long k);

/// Standing hypotheses of the two limit statements: p odd, chi even of
/// level d p^m with gcd(d, p) = 1 and m >= 1. Returns m.
unsigned long check_even_character_setup(const DirichletCharacter& chi, const Integer& d);

/// (1/(d p^j)) sum_{a in (Z/d p^j)^x} (chi omega^{-k})(a) a^k, for j >= m.
PadicNum even_character_truncation(const DirichletCharacter& chi, const Integer& d, unsigned long k, unsigned long j);

/// Limit of even_character_truncation:
/// (1 - (chi omega^{-k})(p) p^{k-1}) B_{k, chi omega^{-k}}.
PadicNum even_character_limit(const DirichletCharacter& chi, const Integer& d, unsigned long k);

/// sum_{i in (Z/d p^j)^x} (chi omega^{-k})(i) i^{k-1}; tends to 0 in j.
PadicNum unit_character_sum(const DirichletCharacter& chi, const Integer& d, unsigned long k, unsigned long j);

}  // namespace lpadic
