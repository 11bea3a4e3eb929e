#include <fstream>

#include "doctest.h"
#include "moorekit/document.hpp"
#include "moorekit/torsion.hpp"

using namespace moorekit;

namespace {

std::string stock_path() { return std::string(MOOREKIT_DATA_DIR) + "/stock.json"; }

std::string thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("theory specs parse both spellings and reject junk") {
  CHECK(parse_theory_spec("mu-ngeq:2").name() == TheoryId::mu_ngeq(2).name());
  CHECK(parse_theory_spec("mu_geq:1").name() == TheoryId::mu_geq(1).name());
  CHECK(thrown_code([] { parse_theory_spec("mu-wat:1"); }) == "DocumentInvalid");
  CHECK(thrown_code([] { parse_theory_spec("mu-ngeq:x"); }) == "DocumentInvalid");
  CHECK(thrown_code([] { parse_theory_spec("mu-ngeq:-1"); }) == "DocumentInvalid");
}

TEST_CASE("the stock document loads with every section populated") {
  Document doc = Document::load_file(stock_path());

  CHECK(doc.group("V4").order() == 4);
  CHECK(doc.group("K4tab").order() == 4);
  CHECK(doc.group("A3").order() == 3);
  CHECK(doc.hom("a3_into_s3").is_injective());
  CHECK(doc.hom("c4_onto_c2").is_surjective());
  CHECK(doc.simplicial("KC3_2").degree() == 3);
  CHECK(doc.simplicial("DisTab").level(1).order() == 2);
  CHECK(doc.simplicial("NerveA3S3").level(1).order() == 18);
  CHECK(doc.chain("disc2_chain").at(0).order() == 2);
  CHECK(doc.chain("two_step").diff(1).map() == std::vector<Elt>{0, 1, 0, 1});
  CHECK(doc.crossed("A3S3").kind == "crossed_module");
  CHECK(doc.crossed("RedS3").reduced.has_value());
  CHECK(doc.theory("geq1").name() == TheoryId::mu_geq(1).name());
  CHECK(doc.corpus("basic").size() == 3);

  // kc32_chain is the Moore complex of K(C3,2): C3 concentrated in degree 2
  const ChainComplex& k = doc.chain("kc32_chain");
  CHECK(k.support_lo() == 2);
  CHECK(k.support_hi() == 2);
  CHECK(k.at(2).order() == 3);

  CHECK(doc.has("groups", "S3"));
  CHECK(!doc.has("groups", "missing"));
  std::vector<std::string> hom_names = doc.names("homs");
  CHECK(hom_names == std::vector<std::string>{"a3_into_s3", "c4_onto_c2"});
}

TEST_CASE("hom endpoints must be the document's own group instances") {
  // a3_into_s3 runs A3 -> S3; wiring it into a C4-based chain is an instance
  // clash even though orders would never match anyway
  json doc = {
      {"groups", {{"C2", "C2"}, {"C4", "C4"}, {"A3", "C3"}, {"S3", "S3"}}},
      {"homs", {{"a3_into_s3", {{"from", "A3"}, {"to", "S3"}, {"map", {0, 3, 4}}}}}},
      {"chains",
       {{"bad", {{"lo", 0}, {"groups", {"C2", "C4"}}, {"diffs", {"a3_into_s3"}}}}}}};
  CHECK(thrown_code([&] { Document::load(doc); }) == "InstanceMismatch");
}

TEST_CASE("unknown references and malformed entries carry their codes") {
  CHECK(thrown_code([] {
          Document::load({{"homs",
                           {{"h", {{"from", "nope"}, {"to", "nope"}, {"map", {0}}}}}}});
        }) == "UnknownName");
  CHECK(thrown_code([] { Document::load({{"groups", {{"g", 7}}}}); }) ==
        "DocumentInvalid");
  CHECK(thrown_code([] { Document::load({{"wat", json::object()}}); }) ==
        "DocumentInvalid");
  CHECK(thrown_code([] { Document::load_file("/nonexistent/x.json"); }) ==
        "FileNotFound");

  // a syntactically broken file
  std::string bad = "/tmp/moorekit_parse_error_fixture.json";
  std::ofstream(bad) << "{ not json";
  CHECK(thrown_code([&] { Document::load_file(bad); }) == "ParseError");

  // conjugation through a non-injective delta cannot be derived
  json doc = {{"groups", {{"C2", "C2"}, {"C3", "C3"}}},
              {"crossed",
               {{"x",
                 {{"kind", "crossed_module"},
                  {"a", "C2"},
                  {"b", "C3"},
                  {"delta", "zero"},
                  {"action", "conjugation"}}}}}};
  CHECK(thrown_code([&] { Document::load(doc); }) == "DocumentInvalid");
}

TEST_CASE("reference cycles across sections are reported, not looped") {
  json doc = {
      {"crossed",
       {{"X", {{"kind", "crossed_complex"}, {"chain", "C"}, {"actions", json::array()}}}}},
      {"chains", {{"C", {{"kind", "moore"}, {"simplicial", "S"}}}}},
      {"simplicial", {{"S", {{"kind", "nerve"}, {"crossed", "X"}, {"degree", 2}}}}}};
  CHECK(thrown_code([&] { Document::load(doc); }) == "CircularReference");
}

TEST_CASE("validate_object re-certifies entries and knows its sections") {
  Document doc = Document::load_file(stock_path());

  json g = doc.validate_object("groups", "S3");
  CHECK(g["ok"].get<bool>());
  CHECK(g["order"].get<int>() == 6);
  CHECK_FALSE(g["abelian"].get<bool>());

  json h = doc.validate_object("a3_into_s3");
  CHECK(h["kind"].get<std::string>() == "hom");
  CHECK(h["injective"].get<bool>());
  CHECK(h["kernel_order"].get<int>() == 1);

  json x = doc.validate_object("A3S3");
  CHECK(x["ok"].get<bool>());
  CHECK(x["classes"] == json({"Norm"}));
  CHECK(x["axioms"]["ok"].get<bool>());

  json s = doc.validate_object("KC3_2");
  CHECK(s["ok"].get<bool>());
  CHECK(s["t_complex"].get<bool>());
  CHECK(s["level_orders"] == json({1, 1, 3, 27}));

  CHECK(thrown_code([&] { doc.validate_object("nope"); }) == "UnknownName");
  CHECK(thrown_code([&] { doc.validate_object("groups", "nope"); }) == "UnknownName");
  CHECK(thrown_code([&] { doc.validate_object("wat", "S3"); }) == "UnknownName");
}
