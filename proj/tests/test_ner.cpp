#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "netrans/errors.hpp"
#include "netrans/ner.hpp"

using namespace netrans;

TEST_CASE("parse_inline: tagged tokens become entities") {
  TaggedSentence s = parse_inline("Ram/Person is going to Bhopal/Location");
  REQUIRE(s.entities.size() == 2);
  CHECK(s.entities[0].text == "Ram");
  CHECK(s.entities[0].category == EntityCategory::Person);
  CHECK(s.entities[0].begin == 0);
  CHECK(s.entities[1].text == "Bhopal");
  CHECK(s.entities[1].category == EntityCategory::Location);
  CHECK(s.tokens.size() == 5);
}

TEST_CASE("parse_inline: adjacent same-category tokens merge") {
  TaggedSentence s = parse_inline(
      "Malviya/Organization National/Organization Institute/Organization");
  REQUIRE(s.entities.size() == 1);
  CHECK(s.entities[0].text == "Malviya National Institute");
}

TEST_CASE("parse_inline: lowercase connective absorbed between tags") {
  TaggedSentence s = parse_inline(
      "Malviya/Organization National/Organization Institute/Organization of "
      "Technology/Organization");
  REQUIRE(s.entities.size() == 1);
  CHECK(s.entities[0].text == "Malviya National Institute of Technology");
}

TEST_CASE("parse_inline: errors") {
  CHECK_THROWS_WITH_AS(parse_inline("Ram/Deity"),
                       doctest::Contains("unknown category"), ParseError);
  CHECK_THROWS_WITH_AS(parse_inline("Ram/ is here"),
                       doctest::Contains("malformed tag"), ParseError);
  CHECK_THROWS_AS(parse_inline("/Person"), ParseError);
}

TEST_CASE("parse_inline: trailing punctuation split off the tag") {
  TaggedSentence s = parse_inline("going to Bhopal/Location.");
  REQUIRE(s.entities.size() == 1);
  CHECK(s.entities[0].text == "Bhopal");
  CHECK(s.tokens.back() == ".");
}

TEST_CASE("render_inline round-trips parse_inline") {
  const char* lines[] = {
      "Ram/Person is going to Bhopal/Location",
      "Malviya/Organization National/Organization Institute/Organization",
      "plain words only",
      "meet at 10:30/Time in Agra/Location",
  };
  for (const char* line : lines) {
    TaggedSentence s = parse_inline(line);
    TaggedSentence again = parse_inline(render_inline(s));
    CHECK(again.tokens == s.tokens);
    REQUIRE(again.entities.size() == s.entities.size());
    for (std::size_t i = 0; i < s.entities.size(); ++i) {
      CHECK(again.entities[i].text == s.entities[i].text);
      CHECK(again.entities[i].category == s.entities[i].category);
      CHECK(again.entities[i].begin == s.entities[i].begin);
      CHECK(again.entities[i].end == s.entities[i].end);
    }
  }
}

TEST_CASE("parse_conll: single entity and BIO merge") {
  std::istringstream in(
      "Ram\tPERSON\n"
      "is\tO\n"
      "\n"
      "New\tB-LOC\n"
      "York\tI-LOC\n"
      "today\tO\n");
  auto sentences = parse_conll(in);
  REQUIRE(sentences.size() == 2);
  REQUIRE(sentences[0].entities.size() == 1);
  CHECK(sentences[0].entities[0].text == "Ram");
  CHECK(sentences[0].entities[0].category == EntityCategory::Person);
  REQUIRE(sentences[1].entities.size() == 1);
  CHECK(sentences[1].entities[0].text == "New York");
  CHECK(sentences[1].entities[0].category == EntityCategory::Location);
}

TEST_CASE("parse_conll: B- forces an entity boundary") {
  std::istringstream in(
      "Ram\tB-PER\n"
      "Shyam\tB-PER\n");
  auto sentences = parse_conll(in);
  REQUIRE(sentences.size() == 1);
  CHECK(sentences[0].entities.size() == 2);
}

TEST_CASE("parse_conll: malformed lines") {
  std::istringstream bad_cols("Ram\tPERSON\textra\n");
  CHECK_THROWS_AS(parse_conll(bad_cols), ParseError);
  std::istringstream no_tab("Ram PERSON\n");
  CHECK_THROWS_AS(parse_conll(no_tab), ParseError);
  std::istringstream bad_label("Ram\tDEITY\n");
  CHECK_THROWS_AS(parse_conll(bad_label), ParseError);
}

TEST_CASE("property: inline and conll agree on generated sentences") {
  std::mt19937 rng(2025);
  const std::vector<std::string> words = {"ram",  "goes", "to",   "city",
                                          "Apna", "Ghar", "Nadi", "Mela"};
  const std::vector<EntityCategory> cats = {
      EntityCategory::Person, EntityCategory::Location,
      EntityCategory::Organization, EntityCategory::Date,
      EntityCategory::Time, EntityCategory::Misc};
  for (int iter = 0; iter < 300; ++iter) {
    TaggedSentence s;
    int n = 1 + static_cast<int>(rng() % 8);
    std::size_t i = 0;
    while (static_cast<int>(s.tokens.size()) < n) {
      bool entity = rng() % 3 == 0;
      if (entity) {
        EntityCategory cat = cats[rng() % cats.size()];
        std::size_t len = 1 + rng() % 2;
        std::string text;
        std::size_t begin = s.tokens.size();
        for (std::size_t k = 0; k < len; ++k) {
          std::string tok = words[rng() % words.size()];
          if (!text.empty()) text.push_back(' ');
          text += tok;
          s.tokens.push_back(tok);
        }
        s.entities.push_back(
            TaggedEntity{text, cat, 0, begin, s.tokens.size()});
        // keep generated entities non-adjacent so merging cannot differ
        s.tokens.push_back("x");
      } else {
        s.tokens.push_back(words[rng() % words.size()]);
      }
      ++i;
    }
    std::istringstream conll(render_conll(s));
    auto from_conll = parse_conll(conll);
    REQUIRE(from_conll.size() == 1);
    TaggedSentence from_inline = parse_inline(render_inline(s));
    CHECK(from_inline.tokens == from_conll[0].tokens);
    REQUIRE(from_inline.entities.size() == from_conll[0].entities.size());
    for (std::size_t k = 0; k < from_inline.entities.size(); ++k) {
      CHECK(from_inline.entities[k].text == from_conll[0].entities[k].text);
      CHECK(from_inline.entities[k].category ==
            from_conll[0].entities[k].category);
      CHECK(from_inline.entities[k].begin == from_conll[0].entities[k].begin);
    }
    // spans never overlap and stay sorted
    for (std::size_t k = 1; k < from_inline.entities.size(); ++k) {
      CHECK(from_inline.entities[k].begin >= from_inline.entities[k - 1].end);
    }
  }
}

TEST_CASE("fallback_tag: heuristics") {
  TaggedSentence caps = fallback_tag("he met Ram today");
  REQUIRE(caps.entities.size() == 1);
  CHECK(caps.entities[0].text == "Ram");
  CHECK(caps.entities[0].category == EntityCategory::Misc);

  TaggedSentence date = fallback_tag("built in 1592 AD");
  REQUIRE(date.entities.size() == 1);
  CHECK(date.entities[0].text == "1592 AD");
  CHECK(date.entities[0].category == EntityCategory::Date);

  TaggedSentence time = fallback_tag("it is 10:30 now");
  REQUIRE(time.entities.size() == 1);
  CHECK(time.entities[0].text == "10:30");
  CHECK(time.entities[0].category == EntityCategory::Time);

  // sentence-initial capitalization alone is not evidence
  CHECK(fallback_tag("Ram went home").entities.empty());
}

TEST_CASE("category names: closed six-class enum") {
  CHECK(parse_category("person") == EntityCategory::Person);
  CHECK(parse_category("ORG") == EntityCategory::Organization);
  CHECK(parse_category("Deity") == std::nullopt);
  CHECK(to_string(EntityCategory::Misc) == "Misc");
}
