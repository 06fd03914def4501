#include <doctest.h>

#include <numeric>

#include "lpadic/errors.hpp"
#include "lpadic/modarith.hpp"

using namespace lpadic;

namespace {

// Least b in [0, n) with c b = 1 mod n, by search.
long brute_inverse(long c, long n) {
  for (long b = 0; b < n; ++b) {
    if (((c * b) % n + n) % n == 1 % n) return b;
  }
  return -1;
}

long gcd_filter_phi(long n) {
  long count = 0;
  for (long a = 0; a < n; ++a) count += std::gcd(a, n) == 1 ? 1 : 0;
  return count;
}

}  // namespace

TEST_CASE("reduce normalizes representatives") {
  CHECK(reduce(5, 7).value() == 2);
  CHECK(reduce(9, -1).value() == 8);
  CHECK(reduce(15, 15).value() == 0);
  CHECK_THROWS_AS(reduce(0, 3), InvalidArgument);
  for (long n = 1; n <= 200; ++n) {
    for (long x = -3 * n; x <= 3 * n; x += 7) CHECK(reduce(n, x + n) == reduce(n, x));
  }
}

TEST_CASE("residue arithmetic stays in the ring") {
  const Residue a(12, 7), b(12, 9);
  CHECK((a + b).value() == 4);
  CHECK((a * b).value() == 3);
  CHECK((a - b).value() == 10);
  CHECK((-a).value() == 5);
  CHECK_FALSE(Residue(12, 6).is_unit());
  CHECK(Residue(1, 0).is_unit());
}

TEST_CASE("inverse_mod") {
  CHECK(inverse_mod(2, 9).value() == 5);
  CHECK(inverse_mod(1, 7).value() == 1);
  CHECK(inverse_mod(2, 27).value() == 14);
  CHECK(inverse_mod(5, 1).value() == 0);
  CHECK_THROWS_AS(inverse_mod(6, 9), NotAUnit);
  for (long n = 1; n <= 100; ++n) {
    for (long c = -5; c < n; ++c) {
      if (std::gcd(c, n) != 1) {
        CHECK_THROWS_AS(inverse_mod(c, n), NotAUnit);
        continue;
      }
      const UnitResidue b = inverse_mod(c, n);
      CHECK(b.value() == brute_inverse(c, n));
      CHECK(mod(b.value() * c, n) == mod(1, n));
    }
  }
}

TEST_CASE("unit residues") {
  CHECK_THROWS_AS(UnitResidue(Residue(10, 4)), NotAUnit);
  const UnitResidue u(Residue(10, 3));
  CHECK((u * u.inverse()).value() == 1);
}

TEST_CASE("crt_split and crt_combine") {
  auto [a, b] = crt_split(3, 5, Residue(15, 7));
  CHECK(a == Residue(3, 1));
  CHECK(b == Residue(5, 2));
  auto [c, e] = crt_split(1, 5, Residue(5, 3));
  CHECK(c == Residue(1, 0));
  CHECK(e == Residue(5, 3));
  auto [f, g] = crt_split(2, 9, Residue(18, 11));
  CHECK(f == Residue(2, 1));
  CHECK(g == Residue(9, 2));
  CHECK(crt_combine(3, 5, Residue(3, 1), Residue(5, 2)) == Residue(15, 7));
  CHECK(crt_combine(3, 5, Residue(3, 0), Residue(5, 0)) == Residue(15, 0));
  CHECK(crt_combine(2, 9, Residue(2, 1), Residue(9, 2)) == Residue(18, 11));
  CHECK_THROWS_AS(crt_split(4, 6, Residue(24, 5)), NotCoprime);
  CHECK_THROWS_AS(crt_combine(4, 6, Residue(4, 1), Residue(6, 1)), NotCoprime);

  for (long d = 1; d <= 500; ++d) {
    for (long q = 1; d * q <= 500; ++q) {
      if (std::gcd(d, q) != 1) continue;
      for (long x = 0; x < d * q; ++x) {
        auto [u, v] = crt_split(d, q, Residue(d * q, x));
        REQUIRE(u.value() == x % d);
        REQUIRE(v.value() == x % q);
        REQUIRE(crt_combine(d, q, u, v).value() == x);
      }
    }
  }
}

TEST_CASE("units_of matches the gcd filter") {
  auto values = [](long n) {
    std::vector<long> out;
    for (const auto& u : units_of(n)) out.push_back(u.value().get_si());
    return out;
  };
  CHECK(values(5) == std::vector<long>{1, 2, 3, 4});
  CHECK(values(1) == std::vector<long>{0});
  CHECK(values(12) == std::vector<long>{1, 5, 7, 11});
  for (long n = 1; n <= 500; ++n) {
    CHECK(static_cast<long>(units_of(n).size()) == gcd_filter_phi(n));
    CHECK(euler_phi(n) == gcd_filter_phi(n));
  }
}

TEST_CASE("partition_range") {
  auto as_longs = [](const std::vector<Integer>& v) {
    std::vector<long> out;
    for (const auto& x : v) out.push_back(x.get_si());
    return out;
  };
  auto r = partition_range(1, 3, 1);
  CHECK(as_longs(r.units) == std::vector<long>{1, 2});
  CHECK(as_longs(r.nonunits) == std::vector<long>{0});
  r = partition_range(2, 3, 1);
  CHECK(as_longs(r.units) == std::vector<long>{1, 5});
  CHECK(as_longs(r.nonunits) == std::vector<long>{0, 2, 3, 4});
  r = partition_range(1, 5, 2);
  CHECK(r.units.size() == 20);
  CHECK(r.nonunits.size() == 5);

  for (long p : {2, 3, 5, 7, 11}) {
    for (long d = 1; d <= 40; ++d) {
      if (std::gcd(d, p) != 1) continue;
      long size = d;
      for (unsigned long x = 0; size <= 2000; ++x, size *= p) {
        const auto part = partition_range(d, p, x);
        std::vector<int> seen(size, 0);
        for (const auto& a : part.units) {
          REQUIRE(std::gcd(a.get_si(), d * p) == 1);
          ++seen[a.get_si()];
        }
        for (const auto& a : part.nonunits) {
          REQUIRE(std::gcd(a.get_si(), d * p) != 1);
          ++seen[a.get_si()];
        }
        for (int s : seen) REQUIRE(s == 1);
      }
    }
  }
}

TEST_CASE("unit group generators") {
  for (long n = 1; n <= 200; ++n) {
    const auto factors = unit_group_structure(n);
    Integer product = 1;
    for (const auto& f : factors) {
      product *= f.order;
      CHECK(multiplicative_order(f.generator, n) == f.order);
    }
    CHECK(product == euler_phi(n));
  }
  CHECK(primitive_root(7) == 3);
  CHECK(primitive_root(5, 2) == 2);
}
