#include "corpus.hpp"
#include "doctest.h"
#include "latspec/instances.hpp"
#include "oracles.hpp"

using namespace latspec;

TEST_CASE("semiring validation") {
  CHECK(verify_semiring(residue_semiring(12)).ok);
  CHECK(verify_semiring(corpus::boolean_power(3)).ok);
  CHECK(residue_semiring(6).is_commutative());

  FiniteSemiring s = residue_semiring(4);
  s.add[1][2] = 0;
  CHECK_FALSE(verify_semiring(s).ok);

  FiniteSemiring no_one = residue_semiring(4);
  no_one.one = 2;
  CHECK(verify_semiring(no_one).check == "one");

  FiniteSemiring broken = residue_semiring(3);
  broken.mul.pop_back();
  CHECK(verify_semiring(broken).check == "shape");
}

TEST_CASE("ideal lattices of semirings agree with the subset oracle") {
  std::vector<FiniteSemiring> rings;
  for (std::size_t n = 1; n <= 12; ++n) rings.push_back(residue_semiring(n));
  rings.push_back(corpus::boolean_semiring());
  rings.push_back(corpus::boolean_power(3));
  for (const auto& s : rings) {
    const auto lat = semiring_ideal_lattice(s);
    auto brute = oracle::semiring_ideals(s);
    CHECK(lat.ideals.size() == brute.size());
    for (const auto& i : brute) CHECK(lat.element_of(i));
    for (Element a = 0; a < lat.lattice.size(); ++a)
      for (Element b = 0; b < lat.lattice.size(); ++b) {
        bool sub = true;
        for (std::size_t x = 0; x < s.size(); ++x) sub = sub && (!lat.ideals[a][x] || lat.ideals[b][x]);
        CHECK(lat.lattice.leq(a, b) == sub);
      }
  }
}

TEST_CASE("Z/12 ideals and divisors") {
  const auto ideals = semiring_ideal_lattice(residue_semiring(12));
  CHECK(oracle::find_isomorphism(oracle::table_of(ideals.lattice), oracle::table_of(divisor_lattice(12))));
  CHECK(ideals.lattice.name(ideals.principal(0)) == "(0)");
  CHECK(ideals.principal(1) == ideals.lattice.top());
  CHECK(ideals.principal(5) == ideals.lattice.top());
  CHECK(ideals.principal(8) == ideals.principal(4));
  const auto gen = generate_ideal(residue_semiring(12), {4, 6});
  CHECK(gen == ideals.ideals[ideals.principal(2)]);
}

TEST_CASE("Boolean semiring ideals") {
  const auto b = semiring_ideal_lattice(corpus::boolean_semiring());
  CHECK(b.lattice.size() == 2);
  const auto b3 = semiring_ideal_lattice(corpus::boolean_power(3));
  CHECK(oracle::find_isomorphism(oracle::table_of(b3.lattice), oracle::table_of(corpus::powerset(3))));
}

TEST_CASE("Z/4 ideals form a 3-chain") {
  const auto z4 = semiring_ideal_lattice(residue_semiring(4));
  CHECK(z4.lattice.size() == 3);
  CHECK(oracle::find_isomorphism(oracle::table_of(z4.lattice), oracle::table_of(divisor_lattice(4))));
  CHECK(spec_set(z4.lattice).size() == 1);
}

TEST_CASE("divisor lattices") {
  CHECK(divisor_lattice(1).size() == 1);
  const IdealLattice d12 = divisor_lattice(12);
  CHECK(d12.name(d12.top()) == "1");
  CHECK(d12.name(d12.bottom()) == "12");
  CHECK(d12.mul(d12.at("2"), d12.at("2")) == d12.at("4"));
  CHECK(d12.mul(d12.at("4"), d12.at("6")) == d12.at("12"));
  CHECK(divisor_lattice(60).size() == 12);
  CHECK_THROWS_AS(divisor_lattice(0), Error);
}

TEST_CASE("closure systems") {
  const IdealLattice p3 = corpus::powerset(3);
  SUBCASE("semiprimes of Z/12") {
    const IdealLattice z = divisor_lattice(12);
    const ClosureSystem cs = semiprime_closure_system(z);
    CHECK(verify_closure_system(cs).ok());
    for (Element a = 0; a < z.size(); ++a) CHECK(closure_projection(cs, a) == radical(z, a));
    const ClosureSublattice sub = closure_sublattice(cs);
    CHECK(sub.lattice.size() == 4);
    CHECK(oracle::find_isomorphism(oracle::table_of(sub.lattice), oracle::table_of(corpus::powerset(2))));
  }
  SUBCASE("every element of a powerset is semiprime") {
    const ClosureSystem cs = semiprime_closure_system(p3);
    CHECK(cs.members.size() == p3.size());
    CHECK(closure_sublattice(cs).lattice == p3);
  }
  SUBCASE("not closed under products") {
    const ClosureSystem cs{p3, {p3.at("0"), p3.at("x"), p3.at("xyz")}};
    const auto r = verify_closure_system(cs);
    CHECK(r.meets.ok);
    CHECK(r.directed.ok);
    CHECK_FALSE(r.projection.ok);
    CHECK(r.projection.check == "projection");
  }
  SUBCASE("missing top") {
    const ClosureSystem cs{p3, {p3.at("0"), p3.at("x")}};
    CHECK(verify_closure_system(cs).meets.check == "meets");
  }
  SUBCASE("missing meet") {
    const ClosureSystem cs{p3, {p3.at("xy"), p3.at("yz"), p3.at("xyz")}};
    CHECK_FALSE(verify_closure_system(cs).meets.ok);
    CHECK_THROWS_AS(closure_sublattice(cs), ValidationError);
  }
}

TEST_CASE("thick lattices of a tensor semiring") {
  const FiniteSemiring b3 = corpus::boolean_power(3);
  const ThickLattice t = tensor_semiring_thick_lattice_if(b3, [](const IdealLattice& l, Element a) { return is_semiprime(l, a); });
  CHECK(t.lattice().size() == 8);
  CHECK_FALSE(generator_additivity_witness(t));

  const PrimeSpectrum spec(t.lattice());
  ObjectSupport s = tau_from_sigma(t, canonical_support_datum(t.lattice()));
  CHECK(verify_object_support(t, s).ok);
  const SupportDatum back = sigma_from_tau(t, s);
  CHECK(verify_datum(back).ok);
  CHECK(back.sigma == canonical_support_datum(t.lattice()).sigma);

  ObjectSupport bad = s;
  bad.tau[b3.zero] = PointSet{0};
  CHECK(verify_object_support(t, bad).check == "zero");
  bad = s;
  bad.tau[b3.one] = PointSet{0};
  CHECK_FALSE(verify_object_support(t, bad).ok);
  bad = s;
  bad.tau.pop_back();
  CHECK(verify_object_support(t, bad).check == "shape");
}

TEST_CASE("generators of Z/12 are not additive") {
  const FiniteSemiring z = residue_semiring(12);
  const ThickLattice t = tensor_semiring_thick_lattice_if(z, [](const IdealLattice& l, Element a) { return is_semiprime(l, a); });
  CHECK(t.lattice().size() == 4);
  const auto w = generator_additivity_witness(t);
  REQUIRE(w);
  const auto [x, y] = *w;
  // <x + y> must differ from <x> v <y>
  const IdealLattice& l = t.lattice();
  CHECK(t.generator[z.add[x][y]] != l.join(t.generator[x], t.generator[y]));
}
