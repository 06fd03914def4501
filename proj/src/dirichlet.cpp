#include "lpadic/dirichlet.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "lpadic/errors.hpp"

namespace lpadic {

namespace {

constexpr unsigned long kMaxTabulatedLevel = 50'000'000;

long normalize_exponent(long e, unsigned long order) {
  const long o = static_cast<long>(order);
  return ((e % o) + o) % o;
}

unsigned long tabulated_level(const Integer& level) {
  if (level < 1) throw InvalidArgument("character level must be positive");
  if (level > kMaxTabulatedLevel) throw InvalidArgument("character level " + level.get_str() + " too large to tabulate");
  return level.get_ui();
}

// Discrete-log coordinates of every unit mod n with respect to
// unit_group_structure(n); coordinates[a] is empty for non-units.
struct UnitCoordinates {
  std::vector<CyclicFactor> factors;
  std::vector<std::vector<unsigned long>> coordinates;
};

UnitCoordinates unit_coordinates(const Integer& level) {
  const unsigned long n = tabulated_level(level);
  UnitCoordinates out{unit_group_structure(level), std::vector<std::vector<unsigned long>>(n)};
  const std::size_t r = out.factors.size();
  std::vector<std::pair<unsigned long, std::vector<unsigned long>>> elements;
  elements.emplace_back(1 % n, std::vector<unsigned long>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    const unsigned long g = out.factors[i].generator.get_ui();
    const unsigned long order = out.factors[i].order.get_ui();
    const std::size_t count = elements.size();
    for (std::size_t k = 0; k < count; ++k) {
      Integer x = elements[k].first;
      std::vector<unsigned long> coords = elements[k].second;
      for (unsigned long e = 1; e < order; ++e) {
        x = mod(x * g, level);
        coords[i] = e;
        elements.emplace_back(x.get_ui(), coords);
      }
    }
  }
  for (auto& [value, coords] : elements) out.coordinates[value] = std::move(coords);
  return out;
}

}  // namespace

PadicNum teichmuller(const Integer& p, const UnitResidue& a, long relprec) {
  if (p < 3 || !is_prime(p)) throw InvalidArgument("teichmuller: p must be an odd prime");
  if (relprec < 1) throw InvalidArgument("teichmuller: precision must be positive");
  if (a.modulus() % p != 0) throw InvalidArgument("teichmuller: residue modulus is not a multiple of p");
  const Integer r = mod(a.value(), p);
  if (r == 0) throw NotAUnit("teichmuller: argument is divisible by p");
  Integer x = r;
  Integer modulus = p;
  for (long k = 1; k < relprec; ++k) {
    modulus *= p;
    mpz_powm(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t(), modulus.get_mpz_t());
  }
  return PadicNum::from_parts(p, 0, x, relprec);
}

TeichmullerTable::TeichmullerTable(const Integer& p, long relprec) : p_(p), relprec_(relprec) {
  if (p < 3 || !is_prime(p)) throw InvalidArgument("p must be an odd prime");
  if (!p.fits_ulong_p() || p > 10'000'000) throw InvalidArgument("p too large for a root-of-unity table");
  if (relprec < 1) throw InvalidArgument("precision must be positive");
  const unsigned long pu = p.get_ui();
  order_ = pu - 1;
  generator_ = primitive_root(p);
  omega_.assign(pu, PadicNum::exact_zero(p));
  index_.assign(pu, -1);
  for (unsigned long a = 1; a < pu; ++a) omega_[a] = teichmuller(p, UnitResidue(Residue(p, a)), relprec);
  Integer x = 1;
  for (unsigned long e = 0; e < order_; ++e) {
    index_[x.get_ui()] = static_cast<long>(e);
    roots_.push_back(omega_[x.get_ui()]);
    x = mod(x * generator_, p);
  }
}

std::shared_ptr<const TeichmullerTable> TeichmullerTable::get(const Integer& p, long relprec) {
  static std::mutex mutex;
  static std::map<std::pair<Integer, long>, std::shared_ptr<const TeichmullerTable>> memo;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(p, relprec);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  auto table = std::make_shared<const TeichmullerTable>(p, relprec);
  memo.emplace(key, table);
  return table;
}

unsigned long TeichmullerTable::residue_of(const Integer& a) const {
  const unsigned long r = mod(a, p_).get_ui();
  if (r == 0) throw NotAUnit(a.get_str() + " is divisible by p = " + p_.get_str());
  return r;
}

const PadicNum& TeichmullerTable::omega(const Integer& a) const { return omega_[residue_of(a)]; }

long TeichmullerTable::index(const Integer& a) const { return index_[residue_of(a)]; }

const PadicNum& TeichmullerTable::root(long exponent) const {
  return roots_[static_cast<std::size_t>(normalize_exponent(exponent, order_))];
}

std::string to_string(Parity parity) { return parity == Parity::Even ? "even" : "odd"; }

DirichletCharacter::DirichletCharacter(std::shared_ptr<const TeichmullerTable> roots, Integer level,
                                       std::vector<long> exponents)
    : roots_(std::move(roots)), level_(std::move(level)), exponents_(std::move(exponents)) {}

DirichletCharacter DirichletCharacter::from_exponents(std::shared_ptr<const TeichmullerTable> roots,
                                                      const Integer& level, std::vector<long> exponents) {
  if (!roots) throw InvalidArgument("missing root-of-unity table");
  const unsigned long n = tabulated_level(level);
  if (exponents.size() != n) {
    throw InvalidCharacter("character table has " + std::to_string(exponents.size()) + " entries, expected " +
                           std::to_string(n));
  }
  const unsigned long order = roots->order();
  std::vector<unsigned long> units;
  for (unsigned long a = 0; a < n; ++a) {
    if (gcd(Integer(a), level) == 1) {
      exponents[a] = normalize_exponent(exponents[a], order);
      units.push_back(a);
    } else {
      exponents[a] = -1;
    }
  }
  if (exponents[1 % n] != 0) throw InvalidCharacter("character does not send 1 to 1");
  // A map is a homomorphism iff it respects multiplication by a generating set.
  for (const CyclicFactor& factor : unit_group_structure(level)) {
    const unsigned long g = factor.generator.get_ui();
    for (unsigned long a : units) {
      const unsigned long ag = mod(Integer(a) * g, level).get_ui();
      if (exponents[ag] != normalize_exponent(exponents[a] + exponents[g], order)) {
        throw InvalidCharacter("table is not multiplicative: chi(" + std::to_string(a) + " * " + std::to_string(g) +
                               ") != chi(" + std::to_string(a) + ") * chi(" + std::to_string(g) + ") mod " +
                               level.get_str());
      }
    }
  }
  return DirichletCharacter(std::move(roots), level, std::move(exponents));
}

DirichletCharacter DirichletCharacter::from_values(std::shared_ptr<const TeichmullerTable> roots,
                                                   const Integer& level,
                                                   const std::map<Integer, PadicNum>& values) {
  const unsigned long n = tabulated_level(level);
  std::vector<long> exps(n, -1);
  const long prec = roots->relprec();
  const PadicNum one = PadicNum::one(roots->prime(), prec);
  for (const auto& [a, v] : values) {
    const Integer r = mod(a, level);
    if (gcd(r, level) != 1) throw InvalidCharacter("value given at non-unit " + a.get_str());
    if (!v.is_finite() || v.valuation() != 0) {
      throw UnsupportedOrder("value at " + a.get_str() + " is not a p-adic unit");
    }
    if (!eq_mod(v.pow(static_cast<long>(roots->order())), one, std::min(prec, *v.absolute_precision()))) {
      throw UnsupportedOrder("value at " + a.get_str() + " is not a (p-1)-st root of unity");
    }
    exps[r.get_ui()] = roots->index(v.appr(1));
  }
  for (unsigned long a = 0; a < n; ++a) {
    if (gcd(Integer(a), level) == 1 && exps[a] < 0) {
      throw InvalidCharacter("character table is missing the unit " + std::to_string(a));
    }
  }
  return from_exponents(std::move(roots), level, std::move(exps));
}

DirichletCharacter DirichletCharacter::from_teichmuller_entries(std::shared_ptr<const TeichmullerTable> roots,
                                                                const Integer& level,
                                                                const std::map<Integer, Integer>& entries) {
  const unsigned long n = tabulated_level(level);
  std::vector<long> exps(n, -1);
  for (const auto& [a, t] : entries) {
    if (a < 0 || a >= level) throw InvalidCharacter("entry key " + a.get_str() + " outside [0, modulus)");
    if (gcd(a, level) != 1) throw InvalidCharacter("entry given at non-unit " + a.get_str());
    if (t % roots->prime() == 0) throw InvalidCharacter("entry for " + a.get_str() + " is divisible by p");
    exps[a.get_ui()] = roots->index(t);
  }
  for (unsigned long a = 0; a < n; ++a) {
    if (gcd(Integer(a), level) == 1 && exps[a] < 0) {
      throw InvalidCharacter("character table is missing the unit " + std::to_string(a));
    }
  }
  return from_exponents(std::move(roots), level, std::move(exps));
}

DirichletCharacter DirichletCharacter::trivial(std::shared_ptr<const TeichmullerTable> roots, const Integer& level) {
  return from_exponents(std::move(roots), level, std::vector<long>(tabulated_level(level), 0));
}

std::optional<long> DirichletCharacter::exponent_at(const Integer& a) const {
  const long e = exponents_[mod(a, level_).get_ui()];
  if (e < 0) return std::nullopt;
  return e;
}

PadicNum DirichletCharacter::value_at(const Integer& a) const {
  const auto e = exponent_at(a);
  if (!e) return PadicNum::exact_zero(prime());
  return roots_->root(*e);
}

CyclotomicNumber DirichletCharacter::exact_value_at(const Integer& a) const {
  const auto e = exponent_at(a);
  if (!e) return CyclotomicNumber(order());
  return CyclotomicNumber::root_power(order(), *e);
}

DirichletCharacter DirichletCharacter::pow(long k) const {
  std::vector<long> exps = exponents_;
  for (auto& e : exps) {
    if (e >= 0) e = normalize_exponent(e * k, order());
  }
  return from_exponents(roots_, level_, std::move(exps));
}

DirichletCharacter make_teich_char(const Integer& p, long relprec) { return omega_power(p, 1, relprec); }

DirichletCharacter omega_power(const Integer& p, long k, long relprec) {
  auto roots = TeichmullerTable::get(p, relprec);
  const unsigned long n = p.get_ui();
  std::vector<long> exps(n, -1);
  for (unsigned long a = 1; a < n; ++a) exps[a] = normalize_exponent(k * roots->index(a), roots->order());
  return DirichletCharacter::from_exponents(roots, p, std::move(exps));
}

PadicNum asso_eval(const DirichletCharacter& chi, const Residue& x) {
  if (x.modulus() % chi.level() != 0) {
    throw NotDivisible("residue modulus " + x.modulus().get_str() + " is not a multiple of the level " +
                       chi.level().get_str());
  }
  return chi.value_at(x.value());
}

DirichletCharacter change_level(const DirichletCharacter& chi, const Integer& new_level) {
  if (new_level < 1 || new_level % chi.level() != 0) {
    throw NotDivisible("change_level: " + chi.level().get_str() + " does not divide " + new_level.get_str());
  }
  const unsigned long m = tabulated_level(new_level);
  std::vector<long> exps(m, -1);
  for (unsigned long a = 0; a < m; ++a) {
    if (gcd(Integer(a), new_level) == 1) exps[a] = *chi.exponent_at(a);
  }
  return DirichletCharacter::from_exponents(chi.roots_ptr(), new_level, std::move(exps));
}

bool factors_through(const DirichletCharacter& chi, const Integer& d) {
  if (d < 1 || chi.level() % d != 0) {
    throw NotDivisible("factors_through: " + d.get_str() + " does not divide " + chi.level().get_str());
  }
  // chi factors through d iff it is trivial on the kernel of (Z/n)^x -> (Z/d)^x.
  const auto& exps = chi.exponents();
  const Integer one = mod(Integer(1), d);
  for (std::size_t a = 0; a < exps.size(); ++a) {
    if (exps[a] > 0 && mod(Integer(a), d) == one) return false;
  }
  return true;
}

Integer conductor(const DirichletCharacter& chi) {
  for (const Integer& d : divisors(chi.level())) {
    if (factors_through(chi, d)) return d;
  }
  return chi.level();
}

bool is_primitive(const DirichletCharacter& chi) { return conductor(chi) == chi.level(); }

DirichletCharacter asso_primitive(const DirichletCharacter& chi) {
  const Integer f = conductor(chi);
  const unsigned long fu = f.get_ui();
  std::vector<long> exps(fu, -1);
  for (unsigned long b = 0; b < fu; ++b) {
    if (gcd(Integer(b), f) != 1) continue;
    // lift b to a unit mod the level; the value does not depend on the lift
    Integer a = b;
    while (gcd(a, chi.level()) != 1) a += f;
    exps[b] = *chi.exponent_at(a);
  }
  return DirichletCharacter::from_exponents(chi.roots_ptr(), f, std::move(exps));
}

DirichletCharacter mul(const DirichletCharacter& a, const DirichletCharacter& b) {
  if (a.prime() != b.prime()) throw InvalidArgument("mul: characters over different primes");
  const Integer level = lcm(a.level(), b.level());
  auto roots = a.relprec() <= b.relprec() ? a.roots_ptr() : b.roots_ptr();
  const unsigned long n = tabulated_level(level);
  std::vector<long> exps(n, -1);
  for (unsigned long x = 0; x < n; ++x) {
    if (gcd(Integer(x), level) == 1) exps[x] = *a.exponent_at(x) + *b.exponent_at(x);
  }
  return asso_primitive(DirichletCharacter::from_exponents(std::move(roots), level, std::move(exps)));
}

Parity parity(const DirichletCharacter& chi) {
  const long e = *chi.exponent_at(chi.level() - 1);
  if (e == 0) return Parity::Even;
  if (2 * e == static_cast<long>(chi.order())) return Parity::Odd;
  throw InvalidCharacter("chi(-1) is not +-1");
}

std::pair<DirichletCharacter, DirichletCharacter> decompose_coprime(const DirichletCharacter& chi,
                                                                    const Integer& m, const Integer& n) {
  if (m < 1 || n < 1 || m * n != chi.level()) {
    throw InvalidArgument("decompose_coprime: " + m.get_str() + " * " + n.get_str() + " is not the level " +
                          chi.level().get_str());
  }
  if (gcd(m, n) != 1) throw NotCoprime("decompose_coprime: gcd(" + m.get_str() + ", " + n.get_str() + ") != 1");
  auto factor = [&](const Integer& modulus, bool first) {
    const unsigned long size = tabulated_level(modulus);
    std::vector<long> exps(size, -1);
    for (unsigned long x = 0; x < size; ++x) {
      if (gcd(Integer(x), modulus) != 1) continue;
      const Residue lifted = first ? crt_combine(m, n, Residue(m, x), Residue(n, 1))
                                   : crt_combine(m, n, Residue(m, 1), Residue(n, x));
      exps[x] = *chi.exponent_at(lifted.value());
    }
    return DirichletCharacter::from_exponents(chi.roots_ptr(), modulus, std::move(exps));
  };
  return {factor(m, true), factor(n, false)};
}

std::vector<DirichletCharacter> all_characters(std::shared_ptr<const TeichmullerTable> roots, const Integer& level) {
  const UnitCoordinates uc = unit_coordinates(level);
  const unsigned long order = roots->order();
  // allowed exponent steps per generator: t with order(g) * t = 0 mod (p-1)
  std::vector<unsigned long> step, choices;
  for (const auto& f : uc.factors) {
    const unsigned long g = gcd(f.order, Integer(order)).get_ui();
    step.push_back(order / g);
    choices.push_back(g);
  }
  std::vector<DirichletCharacter> out;
  std::vector<unsigned long> pick(uc.factors.size(), 0);
  while (true) {
    std::vector<long> exps(uc.coordinates.size(), -1);
    for (std::size_t a = 0; a < exps.size(); ++a) {
      const auto& coords = uc.coordinates[a];
      if (coords.empty() && gcd(Integer(a), level) != 1) continue;
      long e = 0;
      for (std::size_t i = 0; i < coords.size(); ++i) e += static_cast<long>(coords[i] * pick[i] * step[i]);
      exps[a] = e;
    }
    out.push_back(DirichletCharacter::from_exponents(roots, level, std::move(exps)));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i]) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

DirichletCharacter character_from_table_json(const std::string& json_text, long relprec) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidCharacter(std::string("character table is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("p") || !doc.contains("modulus") || !doc.contains("entries") ||
      !doc["entries"].is_object()) {
    throw InvalidCharacter("character table needs fields \"p\", \"modulus\" and \"entries\"");
  }
  auto as_integer = [](const nlohmann::json& v, const std::string& what) {
    if (v.is_number_integer()) return Integer(v.dump());
    if (v.is_string()) {
      Integer out;
      if (out.set_str(v.get<std::string>(), 10) == 0) return out;
    }
    throw InvalidCharacter(what + " is not an integer");
  };
  const Integer p = as_integer(doc["p"], "\"p\"");
  const Integer modulus = as_integer(doc["modulus"], "\"modulus\"");
  std::map<Integer, Integer> entries;
  for (const auto& [key, value] : doc["entries"].items()) {
    Integer a;
    if (a.set_str(key, 10) != 0) throw InvalidCharacter("entry key '" + key + "' is not an integer");
    entries[a] = as_integer(value, "entry for " + key);
  }
  return DirichletCharacter::from_teichmuller_entries(TeichmullerTable::get(p, relprec), modulus, entries);
}

DirichletCharacter load_character_table(const std::string& path, long relprec) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open character table '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return character_from_table_json(buffer.str(), relprec);
}

CharacterSpec parse_character_spec(const std::string& text) {
  if (text == "triv") return TrivialSpec{};
  const std::string omega = "omega^";
  if (text.rfind(omega, 0) == 0) {
    const std::string k = text.substr(omega.size());
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (k.empty() || used != k.size()) throw InvalidArgument("unparsable character spec '" + text + "'");
    return TeichPowSpec{value};
  }
  const std::string table = "table:";
  if (text.rfind(table, 0) == 0 && text.size() > table.size()) return TableSpec{text.substr(table.size())};
  throw InvalidArgument("unparsable character spec '" + text + "' (expected triv, omega^<k> or table:<path>)");
}

std::string to_string(const CharacterSpec& spec) {
  if (std::holds_alternative<TrivialSpec>(spec)) return "triv";
  if (const auto* t = std::get_if<TeichPowSpec>(&spec)) return "omega^" + std::to_string(t->k);
  return "table:" + std::get<TableSpec>(spec).path;
}

DirichletCharacter build_character(const CharacterSpec& spec, const Integer& p, long relprec) {
  if (std::holds_alternative<TrivialSpec>(spec)) return DirichletCharacter::trivial(TeichmullerTable::get(p, relprec), 1);
  if (const auto* t = std::get_if<TeichPowSpec>(&spec)) return omega_power(p, t->k, relprec);
  DirichletCharacter chi = load_character_table(std::get<TableSpec>(spec).path, relprec);
  if (chi.prime() != p) {
    throw InvalidArgument("character table is over p = " + chi.prime().get_str() + ", expected " + p.get_str());
  }
  return chi;
}

}  // namespace lpadic
