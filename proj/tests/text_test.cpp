#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rsys/rsys.hpp"
#include "test_util.hpp"

using namespace rsys;
using namespace rsys::testutil;

TEST_CASE("parse_system grammar") {
  ReactionSystem a = parse_system("background: a b\na | b -> a\n");
  CHECK(a.is_ordinary());
  CHECK(a.input_alphabet() == letters(2));
  REQUIRE(a.size() == 1);
  CHECK(a.reactions()[0] == Reaction{bits(1), bits(2), bits(1)});

  ReactionSystem free_core = parse_system("background: a\n- | - -> a\n");
  CHECK(free_core.reactions()[0] == Reaction{StateMask{}, StateMask{}, bits(1)});

  CHECK_THROWS_AS(parse_system("background: a\na | a -> a\n"), Error);
  CHECK_THROWS_AS(parse_system("background: a\na | - -> -\n"), Error);
  CHECK_THROWS_AS(parse_system("background: a\nb | - -> a\n"), Error);
  CHECK_THROWS_AS(parse_system("background: a\na -> a\n"), Error);
  CHECK_THROWS_AS(parse_system("background: a a\n"), Error);
  CHECK_THROWS_AS(parse_system(""), Error);
  CHECK_THROWS_AS(parse_system("# only a comment\n"), Error);
}

TEST_CASE("comments and blank lines are ignored") {
  ReactionSystem a = parse_system(
      "# header comment\n"
      "background: a b   # trailing comment\n"
      "\n"
      "a | - -> b  # reaction comment\n");
  REQUIRE(a.size() == 1);
  CHECK(a.reactions()[0] == Reaction{bits(1), StateMask{}, bits(2)});
}

TEST_CASE("hybrid declarations") {
  ReactionSystem h = parse_system("input: a\noutput: x y\na | - -> x y\n");
  CHECK_FALSE(h.is_ordinary());
  CHECK(h.output_alphabet() == Alphabet({"x", "y"}));
  CHECK(h.reactions()[0].products == bits(3));

  CHECK_THROWS_AS(parse_system("input: a\na | - -> a\n"), Error);
}

TEST_CASE("generated spellings parse back in") {
  ReactionSystem a = parse_system("background: a N() N(a) STAR DIAMOND RX0\nN(a) | STAR -> DIAMOND\n");
  CHECK(a.input_alphabet().size() == 6);
  CHECK(a.reactions()[0].reactants == StateMask::single(2));
}

TEST_CASE("width cap at parse level") {
  std::string doc = "background:";
  for (int i = 0; i < 129; ++i) doc += " s" + std::to_string(i);
  doc += "\n";
  CHECK_THROWS_AS(parse_system(doc), Error);
}

TEST_CASE("system round trip") {
  std::mt19937_64 rng(83);
  for (int round = 0; round < 50; ++round) {
    std::uniform_int_distribution<std::size_t> size_dist(1, 6);
    ReactionSystem a = random_system(rng, letters(size_dist(rng)), 8);
    CHECK(parse_system(render_system(a)) == a);
  }

  // constructed systems carry generated names and must round trip too
  FunctionTable f = negation_table();
  for (const ReactionSystem& sys :
       {simulator2(f), strong_simulator2(f), strong_simulator_k(f, 2, 3),
        decompose(canonical_system(chain_counterexample())).encoder}) {
    CHECK(parse_system(render_system(sys)) == sys);
  }
}

TEST_CASE("random hybrid systems round trip") {
  std::mt19937_64 rng(91);
  for (int round = 0; round < 30; ++round) {
    std::uniform_int_distribution<std::size_t> size_dist(1, 5);
    Alphabet in = letters(size_dist(rng));
    std::vector<std::string> out_names;
    for (std::size_t i = 0; i < size_dist(rng); ++i) out_names.push_back("o" + std::to_string(i));
    Alphabet out(out_names);
    std::vector<Reaction> rs;
    std::uniform_int_distribution<std::size_t> count_dist(0, 5);
    for (std::size_t i = count_dist(rng); i > 0; --i) {
      StateMask r = random_subset(rng, in.size());
      rs.push_back({r, random_subset(rng, in.size()) - r,
                    random_nonempty_subset(rng, out.size())});
    }
    ReactionSystem h(in, out, rs);
    CHECK(parse_system(render_system(h)) == h);
    CHECK(parse_table(render_table(tabulate(h))) == tabulate(h));
  }
}

TEST_CASE("more malformed reaction lines") {
  CHECK_THROWS_AS(parse_system("background: a\n| - -> a\n"), Error);
  CHECK_THROWS_AS(parse_system("background: a\na | - ->\n"), Error);
  CHECK_THROWS_AS(parse_system("background: a\na | - -> a | a\n"), Error);
  CHECK_THROWS_AS(parse_system("background: a\na | - -> a -> a\n"), Error);
  CHECK_THROWS_AS(parse_system("background: a\na - | - -> a\n"), Error);
  CHECK_THROWS_AS(parse_system("background: a\n-> a\n"), Error);
  CHECK_THROWS_AS(parse_system("background:\na | - -> a\n"), Error);
  CHECK_THROWS_AS(parse_table("domain: a\n- -> a\na\n"), Error);
  CHECK_THROWS_AS(parse_table("codomain: a\n"), Error);
}

TEST_CASE("parse_table grammar and totality") {
  FunctionTable f = parse_table("domain: a b\n- -> a b\na -> b\nb -> -\na b -> a b\n");
  CHECK(f == chain_counterexample());

  CHECK_THROWS_AS(parse_table("domain: a b\n- -> a\na -> b\nb -> -\n"), Error);
  CHECK_THROWS_AS(parse_table("domain: a\n- -> a\n- -> -\na -> a\n"), Error);
  CHECK_THROWS_AS(parse_table("domain: a\n- -> b\na -> a\n"), Error);

  FunctionTable empty_ok = parse_table("domain: a\n- -> -\na -> -\n");
  CHECK(empty_ok.at(0) == StateMask{});
}

TEST_CASE("table line order is free, render is sorted by subset value") {
  FunctionTable f = parse_table("domain: a b\na b -> a\nb -> b\n- -> -\na -> a b\n");
  std::string rendered = render_table(f);
  CHECK(rendered ==
        "domain: a b\n"
        "- -> -\n"
        "a -> a b\n"
        "b -> b\n"
        "a b -> a\n");
}

TEST_CASE("hybrid tables use a codomain line") {
  ReactionSystem c = decompose(canonical_system(chain_counterexample())).encoder;
  FunctionTable tc = tabulate(c);
  std::string rendered = render_table(tc);
  CHECK(rendered.find("codomain: RX0 RX1 RX2\n") != std::string::npos);
  CHECK(parse_table(rendered) == tc);
}

TEST_CASE("table round trip on random tables") {
  std::mt19937_64 rng(89);
  for (int round = 0; round < 50; ++round) {
    std::uniform_int_distribution<std::size_t> size_dist(1, 5);
    FunctionTable f = random_table(rng, letters(size_dist(rng)));
    CHECK(parse_table(render_table(f)) == f);
  }
}

TEST_CASE("state parsing and rendering") {
  Alphabet s = letters(3);
  CHECK(parse_state("a c", s) == bits(0b101));
  CHECK(parse_state("-", s) == StateMask{});
  CHECK(parse_state("  b  ", s) == bits(0b010));
  CHECK_THROWS_AS(parse_state("d", s), Error);
  CHECK_THROWS_AS(parse_state("a -", s), Error);
  CHECK_THROWS_AS(parse_state("", s), Error);

  CHECK(render_state(bits(0b101), s) == "a c");
  CHECK(render_state(StateMask{}, s) == "-");
}

TEST_CASE("domain and subset list parsing") {
  Alphabet s = parse_domain("a b c");
  CHECK(s == letters(3));
  CHECK_THROWS_AS(parse_domain("   "), Error);

  auto order = parse_subset_list("a;b;-;a b", letters(2));
  REQUIRE(order.size() == 4);
  CHECK(order[0] == bits(1));
  CHECK(order[2] == StateMask{});
  CHECK(order[3] == bits(3));
}

TEST_CASE("golden rendering of a constructed simulator") {
  ReactionSystem a = simulator2(negation_table());
  CHECK(render_system(a) ==
        "background: a N() N(a)\n"
        "- | a -> N(a)\n"
        "a | - -> N()\n"
        "- | N() -> a\n");

  CHECK(render_table(negation_table()) ==
        "domain: a\n"
        "- -> a\n"
        "a -> -\n");
}

TEST_CASE("rendered sets follow alphabet index order regardless of input order") {
  ReactionSystem a = parse_system("background: a b c\nc a | - -> b a\n");
  CHECK(render_system(a) ==
        "background: a b c\n"
        "a c | - -> a b\n");
}
