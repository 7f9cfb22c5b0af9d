#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rsys/rsys.hpp"
#include "test_util.hpp"

using namespace rsys;
using namespace rsys::testutil;

TEST_CASE("mask algebra is exact across the full width") {
  StateMask m;
  m.set(3).set(70).set(127);
  CHECK(m.count() == 3);
  CHECK(m.test(70));
  CHECK_FALSE(m.test(71));
  CHECK(m.width() == 128);

  StateMask lo = StateMask::universe(70);
  CHECK((m & lo) == StateMask{}.set(3));
  CHECK((m - lo) == StateMask{}.set(70).set(127));
  CHECK((m | lo).count() == 72);
  CHECK(StateMask{}.set(3).subset_of(m));
  CHECK_FALSE(m.subset_of(lo));
  CHECK(m.intersects(lo));
  CHECK_FALSE(StateMask{}.intersects(m));

  CHECK(m.next_bit(0) == 3);
  CHECK(m.next_bit(4) == 70);
  CHECK(m.next_bit(71) == 127);
  CHECK(m.next_bit(128) == kMaxSymbols);

  CHECK_THROWS_AS(m.value(), Error);
  CHECK(bits(13).value() == 13);
}

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Alphabet({}), Error);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
  CHECK_THROWS_AS(Alphabet({""}), Error);
  CHECK_THROWS_AS(Alphabet({"a,b"}), Error);
  CHECK_THROWS_AS(Alphabet({"a-b"}), Error);
  CHECK_THROWS_AS(Alphabet({"a|b"}), Error);
  CHECK_THROWS_AS(Alphabet({"a b"}), Error);
  CHECK_THROWS_AS(Alphabet({"N("}), Error);

  std::vector<std::string> many;
  for (int i = 0; i < 129; ++i) many.push_back("s" + std::to_string(i));
  CHECK_THROWS_AS(Alphabet(many), Error);
  many.pop_back();
  CHECK(Alphabet(many).size() == 128);

  Alphabet s({"a", "N(a,b)", "STAR", "RX7"});
  CHECK(s.index_of("N(a,b)") == 1);
  CHECK(s.contains_reserved());
  CHECK_FALSE(letters(3).contains_reserved());
}

TEST_CASE("reserved spellings are matched by prefix") {
  CHECK(is_reserved_symbol("N()"));
  CHECK(is_reserved_symbol("N(a"));
  CHECK(is_reserved_symbol("STAR"));
  CHECK(is_reserved_symbol("STARx"));
  CHECK(is_reserved_symbol("DIAMOND"));
  CHECK(is_reserved_symbol("RX0"));
  CHECK(is_reserved_symbol("RX12y"));
  CHECK_FALSE(is_reserved_symbol("RXa"));
  CHECK_FALSE(is_reserved_symbol("RX"));
  CHECK_FALSE(is_reserved_symbol("STA"));
  CHECK_FALSE(is_reserved_symbol("n(a)"));
}

TEST_CASE("enabled follows the core definition") {
  Reaction r{bits(0b001), bits(0b010), bits(0b100)};
  CHECK(enabled(r, bits(0b001)));
  CHECK_FALSE(enabled(r, bits(0b011)));
  Reaction always{StateMask{}, StateMask{}, bits(0b100)};
  CHECK(enabled(always, StateMask{}));
}

TEST_CASE("result is the union over enabled reactions") {
  Alphabet s = letters(3);
  ReactionSystem a = ReactionSystem::ordinary(
      s, {{bits(0b001), bits(0b010), bits(0b100)}, {StateMask{}, bits(0b100), bits(0b010)}});
  CHECK(result(a, bits(0b001)) == bits(0b110));
  CHECK(result(a, bits(0b011)) == bits(0b010));

  ReactionSystem empty = ReactionSystem::ordinary(s, {});
  CHECK(result(empty, bits(0b101)) == StateMask{});

  CHECK_THROWS_AS(result(a, bits(0b1000)), Error);
}

TEST_CASE("reaction well-formedness is enforced") {
  Alphabet s = letters(2);
  CHECK_THROWS_AS(ReactionSystem::ordinary(s, {{bits(1), bits(1), bits(1)}}), Error);
  CHECK_THROWS_AS(ReactionSystem::ordinary(s, {{bits(1), bits(2), StateMask{}}}), Error);
  CHECK_THROWS_AS(ReactionSystem::ordinary(s, {{bits(4), StateMask{}, bits(1)}}), Error);
  CHECK_THROWS_AS(ReactionSystem::ordinary(s, {{bits(1), StateMask{}, bits(4)}}), Error);
}

TEST_CASE("iterate") {
  Alphabet s = letters(1);
  ReactionSystem a = ReactionSystem::ordinary(letters(2), {{StateMask{}, bits(2), bits(2)}});
  CHECK(iterate(a, bits(1), 0) == bits(1));
  CHECK(iterate(a, StateMask{}, 1) == bits(2));
  CHECK(iterate(a, StateMask{}, 2) == StateMask{});

  ReactionSystem hybrid(letters(1), Alphabet({"x"}), {{bits(1), StateMask{}, bits(1)}});
  CHECK(iterate(hybrid, bits(1), 1) == bits(1));
  CHECK_THROWS_AS(iterate(hybrid, bits(1), 2), Error);
}

TEST_CASE("trace") {
  ReactionSystem a = ReactionSystem::ordinary(Alphabet({"t"}), {{StateMask{}, bits(1), bits(1)}});
  CHECK(trace(a, bits(1), 0) == std::vector<StateMask>{bits(1)});
  CHECK(trace(a, StateMask{}, 3) ==
        std::vector<StateMask>{StateMask{}, bits(1), StateMask{}, bits(1)});

  ReactionSystem empty = ReactionSystem::ordinary(letters(1), {});
  CHECK(trace(empty, bits(1), 2) == std::vector<StateMask>{bits(1), StateMask{}, StateMask{}});

  ReactionSystem hybrid(letters(1), Alphabet({"x"}), {{bits(1), StateMask{}, bits(1)}});
  CHECK(trace(hybrid, bits(1), 1).size() == 2);
  CHECK_THROWS_AS(trace(hybrid, bits(1), 2), Error);
}

TEST_CASE("tabulate") {
  ReactionSystem empty = ReactionSystem::ordinary(letters(1), {});
  CHECK(tabulate(empty).entries() == std::vector<StateMask>{StateMask{}, StateMask{}});

  ReactionSystem keep = ReactionSystem::ordinary(letters(1), {{bits(1), StateMask{}, bits(1)}});
  CHECK(tabulate(keep).entries() == std::vector<StateMask>{StateMask{}, bits(1)});

  std::vector<std::string> wide;
  for (int i = 0; i < 21; ++i) wide.push_back("s" + std::to_string(i));
  CHECK_THROWS_AS(tabulate(ReactionSystem::ordinary(Alphabet(wide), {})), Error);
}

TEST_CASE("canonical system") {
  FunctionTable f = chain_counterexample();
  ReactionSystem a = canonical_system(f);
  REQUIRE(a.size() == 3);
  CHECK(a.reactions()[0] == Reaction{bits(0), bits(3), bits(3)});
  CHECK(a.reactions()[1] == Reaction{bits(1), bits(2), bits(2)});
  CHECK(a.reactions()[2] == Reaction{bits(3), bits(0), bits(3)});

  FunctionTable constant_empty =
      FunctionTable::ordinary(letters(2), {bits(0), bits(0), bits(0), bits(0)});
  CHECK(canonical_system(constant_empty).size() == 0);

  FunctionTable identity1 = FunctionTable::ordinary(letters(1), {bits(0), bits(1)});
  ReactionSystem id_sys = canonical_system(identity1);
  REQUIRE(id_sys.size() == 1);
  CHECK(id_sys.reactions()[0] == Reaction{bits(1), StateMask{}, bits(1)});
}

TEST_CASE("canonical round trip at width two and random width four") {
  Alphabet s2 = letters(2);
  for (std::uint64_t code = 0; code < 256; ++code) {
    std::vector<StateMask> entries;
    for (int e = 0; e < 4; ++e) entries.push_back(bits((code >> (2 * e)) & 3));
    FunctionTable f = FunctionTable::ordinary(s2, entries);
    CHECK(tabulate(canonical_system(f)) == f);
  }

  std::mt19937_64 rng(41);
  Alphabet s4 = letters(4);
  for (int i = 0; i < 1000; ++i) {
    FunctionTable f = random_table(rng, s4);
    if (tabulate(canonical_system(f)) != f) {
      FAIL("canonical round trip broke on a random 4-symbol table");
    }
  }
}

TEST_CASE("normalize merges equal cores by product union") {
  Alphabet s = letters(3);
  ReactionSystem a = ReactionSystem::ordinary(
      s, {{bits(1), StateMask{}, bits(2)}, {bits(1), StateMask{}, bits(4)}});
  ReactionSystem n = normalize(a);
  REQUIRE(n.size() == 1);
  CHECK(n.reactions()[0] == Reaction{bits(1), StateMask{}, bits(6)});

  ReactionSystem distinct = ReactionSystem::ordinary(
      s, {{bits(1), StateMask{}, bits(2)}, {bits(2), StateMask{}, bits(4)}});
  CHECK(normalize(distinct) == distinct);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    ReactionSystem sys = random_system(rng, letters(4), 10);
    CHECK(tabulate(normalize(sys)) == tabulate(sys));
  }
}

TEST_CASE("combine unifies alphabets by name") {
  ReactionSystem c(Alphabet({"a"}), Alphabet({"x"}), {});
  ReactionSystem d(Alphabet({"t"}), Alphabet({"y"}), {});
  ReactionSystem u = combine(c, d);
  CHECK(u.input_alphabet() == Alphabet({"a", "t"}));
  CHECK(u.output_alphabet() == Alphabet({"x", "y"}));
  CHECK(u.size() == 0);

  ReactionSystem c2(Alphabet({"a"}), Alphabet({"x"}), {{bits(1), StateMask{}, bits(1)}});
  ReactionSystem d2(Alphabet({"t"}), Alphabet({"y"}), {{bits(1), StateMask{}, bits(1)}});
  ReactionSystem u2 = combine(c2, d2);
  CHECK(result(u2, bits(0b11)) == bits(0b11));  // {a,t} -> {x,y}
}

TEST_CASE("combine satisfies the union formula exhaustively") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 60; ++round) {
    // overlapping backgrounds: c reads a prefix, d reads a shifted window
    std::uniform_int_distribution<std::size_t> size_dist(1, 6);
    std::size_t cn = size_dist(rng), dn = size_dist(rng), shift = size_dist(rng) % 4;
    std::vector<std::string> c_in, d_in;
    for (std::size_t i = 0; i < cn; ++i) c_in.push_back("s" + std::to_string(i));
    for (std::size_t i = 0; i < dn; ++i) d_in.push_back("s" + std::to_string(i + shift));
    Alphabet ca(c_in), da(d_in);
    Alphabet co = letters(size_dist(rng)), doo = letters(size_dist(rng));
    std::vector<Reaction> cr, dr;
    std::uniform_int_distribution<std::size_t> count_dist(0, 5);
    for (std::size_t i = count_dist(rng); i > 0; --i) {
      StateMask r = random_subset(rng, ca.size());
      cr.push_back({r, random_subset(rng, ca.size()) - r, random_nonempty_subset(rng, co.size())});
    }
    for (std::size_t i = count_dist(rng); i > 0; --i) {
      StateMask r = random_subset(rng, da.size());
      dr.push_back({r, random_subset(rng, da.size()) - r, random_nonempty_subset(rng, doo.size())});
    }
    ReactionSystem c(ca, co, cr), d(da, doo, dr);
    ReactionSystem u = combine(c, d);
    REQUIRE(u.input_alphabet().size() <= 12);

    for (std::uint64_t m = 0; m < (std::uint64_t{1} << u.input_alphabet().size()); ++m) {
      StateMask x = bits(m);
      StateMask expect =
          translate(result(c, project(x, u.input_alphabet(), c.input_alphabet())),
                    c.output_alphabet(), u.output_alphabet()) |
          translate(result(d, project(x, u.input_alphabet(), d.input_alphabet())),
                    d.output_alphabet(), u.output_alphabet());
      if (result(u, x) != expect) FAIL("combine disagrees with the union formula");
    }
  }
}

TEST_CASE("restrict_to applies the sub-alphabet formula") {
  Alphabet an({"a", "n"});
  ReactionSystem a1 = ReactionSystem::ordinary(an, {{bits(1), bits(2), bits(3)}});
  ReactionSystem r1 = restrict_to(a1, letters(1));
  REQUIRE(r1.size() == 1);
  CHECK(r1.reactions()[0] == Reaction{bits(1), StateMask{}, bits(1)});

  // reactant outside the sub-alphabet: dropped
  ReactionSystem a2 = ReactionSystem::ordinary(an, {{bits(2), StateMask{}, bits(3)}});
  CHECK(restrict_to(a2, letters(1)).size() == 0);

  // product empties out: dropped
  ReactionSystem a3 = ReactionSystem::ordinary(an, {{bits(1), StateMask{}, bits(2)}});
  CHECK(restrict_to(a3, letters(1)).size() == 0);

  CHECK_THROWS_AS(restrict_to(a1, Alphabet({"z"})), Error);
}

TEST_CASE("restrict_to preserves the restricted transition function") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 40; ++round) {
    std::uniform_int_distribution<std::size_t> size_dist(2, 10);
    std::size_t big = size_dist(rng);
    std::uniform_int_distribution<std::size_t> sub_dist(1, big);
    std::size_t small = sub_dist(rng);
    Alphabet prime = letters(big), sub = letters(small);
    ReactionSystem a = random_system(rng, prime, 10);
    ReactionSystem r = restrict_to(a, sub);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << small); ++m) {
      StateMask x = bits(m);
      StateMask expect = project(result(a, translate(x, sub, prime)), prime, sub);
      if (result(r, x) != expect) FAIL("restriction changed the transition function");
    }
  }
}

TEST_CASE("compose") {
  Alphabet s = letters(2);
  std::mt19937_64 rng(17);
  FunctionTable f = random_table(rng, s);
  FunctionTable identity =
      FunctionTable::ordinary(s, {bits(0), bits(1), bits(2), bits(3)});
  CHECK(compose(identity, f) == f);

  FunctionTable constant_empty =
      FunctionTable::ordinary(s, {bits(0), bits(0), bits(0), bits(0)});
  FunctionTable g = random_table(rng, s);
  FunctionTable piped = compose(g, constant_empty);
  for (std::uint64_t m = 0; m < 4; ++m) CHECK(piped.at(m) == g.at(0));

  FunctionTable other = random_table(rng, letters(3));
  CHECK_THROWS_AS(compose(other, f), Error);
}

TEST_CASE("rehome maps symbols by name") {
  ReactionSystem a = ReactionSystem::ordinary(letters(2), {{bits(1), bits(2), bits(3)}});
  Alphabet wide({"c", "b", "a"});
  ReactionSystem r = rehome(a, wide, wide);
  CHECK(r.reactions()[0] == Reaction{bits(0b100), bits(0b010), bits(0b110)});
  CHECK_THROWS_AS(rehome(a, Alphabet({"a"}), Alphabet({"a"})), Error);
}

TEST_CASE("results always stay inside the output universe") {
  std::mt19937_64 rng(19);
  for (int round = 0; round < 30; ++round) {
    std::uniform_int_distribution<std::size_t> size_dist(1, 10);
    Alphabet s = letters(size_dist(rng));
    ReactionSystem a = random_system(rng, s, 12);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << s.size()); ++m)
      REQUIRE(result(a, bits(m)).subset_of(s.universe()));
  }
}
