#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lpadic/cyclotomic.hpp"
#include "lpadic/modarith.hpp"
#include "lpadic/padic.hpp"

namespace lpadic {

/// Teichmuller lift of a unit mod p: the (p-1)-st root of unity in Z_p
/// congruent to a, computed as the limit of a^(p^k) (a^(p^k) is stable
/// modulo p^(k+1)). Returned at relative precision relprec.
PadicNum teichmuller(const Integer& p, const UnitResidue& a, long relprec);

/// omega on (Z/pZ)^x at one precision, plus the discrete logarithm with
/// respect to the least primitive root g. The root of unity zeta = omega(g)
/// generates mu_{p-1}, and character exponents are powers of zeta.
class TeichmullerTable {
 public:
  TeichmullerTable(const Integer& p, long relprec);

  /// Shared, memoized instance per (p, relprec).
  static std::shared_ptr<const TeichmullerTable> get(const Integer& p, long relprec);

  const Integer& prime() const { return p_; }
  long relprec() const { return relprec_; }
  /// p - 1, the order of mu_{p-1}.
  unsigned long order() const { return order_; }
  const Integer& generator() const { return generator_; }

  /// omega(a) for a coprime to p (any representative).
  const PadicNum& omega(const Integer& a) const;
  /// Discrete log of a mod p with respect to the generator.
  long index(const Integer& a) const;
  /// zeta^e, e taken mod p - 1.
  const PadicNum& root(long exponent) const;
  const PadicNum& zeta() const { return roots_[1 % order_]; }

 private:
  unsigned long residue_of(const Integer& a) const;

  Integer p_;
  long relprec_;
  unsigned long order_;
  Integer generator_;
  std::vector<PadicNum> omega_;
  std::vector<long> index_;
  std::vector<PadicNum> roots_;
};

enum class Parity { Even, Odd };

std::string to_string(Parity parity);

/// A Dirichlet character on (Z/nZ)^x with values in mu_{p-1} inside Z_p.
///
/// Values are stored as exponents of zeta (see TeichmullerTable), one per
/// residue; non-units carry -1. Every constructor checks that the table is
/// complete and multiplicative, so an invalid character never exists.
class DirichletCharacter {
 public:
  /// exponents[a] for a in [0, level); entries at non-units are ignored.
  static DirichletCharacter from_exponents(std::shared_ptr<const TeichmullerTable> roots, const Integer& level,
                                           std::vector<long> exponents);

  /// Values given in Z_p; each must satisfy v^{p-1} = 1 at the table
  /// precision (UnsupportedOrder otherwise).
  static DirichletCharacter from_values(std::shared_ptr<const TeichmullerTable> roots, const Integer& level,
                                        const std::map<Integer, PadicNum>& values);

  /// Table-file semantics: the value at a is teichmuller(t_a mod p).
  static DirichletCharacter from_teichmuller_entries(std::shared_ptr<const TeichmullerTable> roots,
                                                     const Integer& level,
                                                     const std::map<Integer, Integer>& entries);

  static DirichletCharacter trivial(std::shared_ptr<const TeichmullerTable> roots, const Integer& level);

  const Integer& prime() const { return roots_->prime(); }
  const Integer& level() const { return level_; }
  long relprec() const { return roots_->relprec(); }
  unsigned long order() const { return roots_->order(); }
  const TeichmullerTable& roots() const { return *roots_; }
  const std::shared_ptr<const TeichmullerTable>& roots_ptr() const { return roots_; }
  const std::vector<long>& exponents() const { return exponents_; }

  /// Exponent of the value at a mod level; nullopt off the units.
  std::optional<long> exponent_at(const Integer& a) const;
  /// Associated character: the value at a mod level, zero off the units.
  PadicNum value_at(const Integer& a) const;
  CyclotomicNumber exact_value_at(const Integer& a) const;

  DirichletCharacter pow(long k) const;

  /// Table equality (prime, level and values; precision is not compared).
  bool operator==(const DirichletCharacter& other) const {
    return prime() == other.prime() && level_ == other.level_ && exponents_ == other.exponents_;
  }

 private:
  DirichletCharacter(std::shared_ptr<const TeichmullerTable> roots, Integer level, std::vector<long> exponents);

  std::shared_ptr<const TeichmullerTable> roots_;
  Integer level_;
  std::vector<long> exponents_;
};

/// The Teichmuller character omega of level p.
DirichletCharacter make_teich_char(const Integer& p, long relprec);
/// omega^k of level p; k may be negative.
DirichletCharacter omega_power(const Integer& p, long k, long relprec);

/// chi(x) for a residue whose modulus is a multiple of the level.
PadicNum asso_eval(const DirichletCharacter& chi, const Residue& x);

DirichletCharacter change_level(const DirichletCharacter& chi, const Integer& new_level);
bool factors_through(const DirichletCharacter& chi, const Integer& d);
/// Least divisor of the level through which chi factors.
Integer conductor(const DirichletCharacter& chi);
bool is_primitive(const DirichletCharacter& chi);
DirichletCharacter asso_primitive(const DirichletCharacter& chi);
/// Primitive character associated with the product at level lcm(n1, n2).
DirichletCharacter mul(const DirichletCharacter& a, const DirichletCharacter& b);
Parity parity(const DirichletCharacter& chi);

/// chi of level m*n, gcd(m, n) = 1, as (chi1 of level m, chi2 of level n)
/// with chi1(a) = chi(crt(a, 1)) and chi2(b) = chi(crt(1, b)).
std::pair<DirichletCharacter, DirichletCharacter> decompose_coprime(const DirichletCharacter& chi,
                                                                    const Integer& m, const Integer& n);

/// Every character of the given level with values in mu_{p-1}.
std::vector<DirichletCharacter> all_characters(std::shared_ptr<const TeichmullerTable> roots, const Integer& level);

/// Loads {"p": int, "modulus": int, "entries": {"<a>": t_a, ...}}.
DirichletCharacter load_character_table(const std::string& path, long relprec);
DirichletCharacter character_from_table_json(const std::string& json_text, long relprec);

struct TrivialSpec {};
struct TeichPowSpec {
  long k = 0;
};
struct TableSpec {
  std::string path;
};
using CharacterSpec = std::variant<TrivialSpec, TeichPowSpec, TableSpec>;

/// Grammar: "triv" | "omega^<k>" | "table:<path>".
CharacterSpec parse_character_spec(const std::string& text);
std::string to_string(const CharacterSpec& spec);
/// Trivial is level 1, omega^k level p, tables their file modulus.
DirichletCharacter build_character(const CharacterSpec& spec, const Integer& p, long relprec);

}  // namespace lpadic
