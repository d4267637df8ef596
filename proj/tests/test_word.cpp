#include <doctest.h>

#include <set>

#include "altperm/errors.hpp"
#include "altperm/tableau.hpp"
#include "altperm/word.hpp"
#include "support.hpp"

using namespace altperm;

namespace {
Word W(const char* s) { return parse_word(s); }
}  // namespace

TEST_SUITE("word-core") {
  TEST_CASE("parse and print") {
    CHECK(to_string(W("121211231323233")) == "121211231323233");
    CHECK(W("").empty());
    CHECK_THROWS_AS(W("1240"), ParseError);
    CHECK_THROWS_AS(Word({0}), DomainError);
  }

  TEST_CASE("type_of") {
    CHECK(type_of(W("112311223")) == WordType{4, 3, 2});
    CHECK(type_of(W("")) == WordType{0, 0, 0});
    CHECK(type_of(W("112123231323233")) == WordType{4, 5, 6});
  }

  TEST_CASE("alpha and beta") {
    CHECK(alpha(W("121211231323233")) == 7);
    CHECK(alpha(W("123")) == 2);
    CHECK(alpha(W("1212")) == 4);
    CHECK(beta(W("121211231323233")) == 6);
    CHECK(beta(W("123")) == 2);
    CHECK(beta(W("233")) == 3);
  }

  TEST_CASE("stat_B") {
    CHECK(stat_B(W("121211231323233")) == StatSet{0, 1, 3});
    CHECK(stat_B(W("123")) == StatSet{0});
    CHECK(stat_B(W("121211323233")) == StatSet{0, 1, 3});
    CHECK(stat_B(W("")) == StatSet{0});
    CHECK(stat_B(W("1212")) == StatSet{0, 1});  // alpha = 4 admits k <= 2
  }

  TEST_CASE("is_yamanouchi") {
    CHECK(is_yamanouchi(W("112311223")));
    CHECK(is_yamanouchi(W("123")));
    CHECK_FALSE(is_yamanouchi(W("213")));
    CHECK(is_yamanouchi(W("")));
  }

  TEST_CASE("skew and shifted Yamanouchi words") {
    CHECK(is_skew_yamanouchi(W("112123231323233")));
    CHECK(is_skew_yamanouchi(W("233")));
    CHECK_FALSE(is_skew_yamanouchi(W("323")));
    CHECK_FALSE(is_skew_yamanouchi(W("123")));  // wrong type is false, not an error

    CHECK(is_shifted_yamanouchi(W("112")));
    CHECK_FALSE(is_shifted_yamanouchi(W("121")));
    CHECK(is_shifted_yamanouchi(reversed_complement(W("112123231323233"))));
    CHECK_FALSE(is_shifted_yamanouchi(W("")));
  }

  TEST_CASE("reversed_complement") {
    CHECK(reversed_complement(W("123")) == W("123"));
    CHECK(reversed_complement(W("121123233")) == W("112123323"));
    CHECK(reversed_complement(W("233")) == W("112"));
  }

  TEST_CASE("reversed complement is an involution that swaps runs") {
    for (int len = 0; len <= 9; ++len) {
      for (const Word& w : testing::all_words(len)) {
        const Word r = reversed_complement(w);
        REQUIRE(reversed_complement(r) == w);
        REQUIRE(alpha(r) == beta(w));
        REQUIRE(beta(r) == alpha(w));
      }
    }
  }

  TEST_CASE("reversed complement on the three word families") {
    for (int n = 1; n <= 4; ++n) {
      std::set<Word> balanced, skew, shifted;
      for (const Word& w : testing::all_words(3 * n)) {
        if (is_yamanouchi(w) && type_of(w) == WordType{n, n, n}) balanced.insert(w);
        if (is_skew_yamanouchi(w)) skew.insert(w);
        if (is_shifted_yamanouchi(w)) shifted.insert(w);
      }
      std::set<Word> balanced_image, skew_image;
      for (const Word& w : balanced) balanced_image.insert(reversed_complement(w));
      for (const Word& w : skew) skew_image.insert(reversed_complement(w));
      CHECK(balanced_image == balanced);
      CHECK(skew_image == shifted);
      CHECK(skew.size() == shifted.size());
    }
  }

  TEST_CASE("ballot condition is equivalent to chi_inverse giving a standard tableau") {
    for (int len = 0; len <= 9; ++len) {
      for (const Word& w : testing::all_words(len)) {
        const WordType t = type_of(w);
        const bool partition_type = (t.c1 >= t.c2 && t.c2 >= t.c3);
        if (!partition_type) {
          CHECK_FALSE(is_yamanouchi(w));
          continue;
        }
        REQUIRE(is_yamanouchi(w) == is_standard(chi_inverse(w, ShapeKind::Ordinary)));
      }
    }
  }
}
