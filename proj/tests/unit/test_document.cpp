#include <doctest.h>

#include "../lift.hpp"
#include "../support.hpp"
#include "sphsmooth/document.hpp"

using namespace sphsmooth;
using testing_support::iv;

namespace {

std::string minimal_datum(const std::string& components, const std::string& basis, const std::string& sigma) {
  return R"({"schema":"sphsmooth/1","kind":"datum","root_system":{"components":)" + components +
         R"(,"torus_rank":0},"m_basis":)" + basis + R"(,"sigma":)" + sigma + R"(,"s_p":[],"d_a":[]})";
}

}  // namespace

TEST_CASE("every fixture survives emit and parse unchanged") {
  const auto files = testing_support::all_fixtures();
  CHECK(files.size() >= 50);
  for (const auto& f : files) {
    CAPTURE(f.filename().string());
    const auto doc = parse_document(testing_support::read_file(f));
    const auto text = emit_document(doc);
    CHECK(parse_document(text) == doc);
    CHECK(emit_document(parse_document(text)) == text);
  }
}

TEST_CASE("random lifted data and catalog systems round-trip") {
  std::mt19937 rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = testing_support::random_catalog_product(rng);
    const auto sys = system_document(inst.system, inst.marked);
    CHECK(parse_document(emit_document(sys)) == sys);
    const auto l = testing_support::lift(inst);
    const auto dat = datum_document(l.datum, l.cone);
    CHECK(parse_document(emit_document(dat)) == dat);
  }
  const auto src = system_document(instantiate(42, {2, 3}).system, {}, CatalogSource{42, {2, 3}});
  const auto back = parse_document(emit_document(src));
  REQUIRE(back.source);
  CHECK(back.source->id == 42);
  CHECK(back.source->params == Params{2, 3});
}

TEST_CASE("integers beyond 64 bits are written as strings") {
  auto doc = datum_document(testing_support::lift({instantiate(21, {}).system, {0}}).datum);
  const Int big = Int(1) << 80;
  doc.datum.d_a[0].rho[0] = big;
  const auto text = emit_document(doc);
  CHECK(text.find("\"" + big.str() + "\"") != std::string::npos);
  CHECK(parse_document(text).datum.d_a[0].rho[0] == big);
}

TEST_CASE("parse errors carry a location") {
  try {
    parse_document("{\"schema\": ");
    FAIL("no throw");
  } catch (const DocumentError& e) {
    CHECK(e.where().rfind("byte", 0) == 0);
  }
  CHECK_THROWS_AS(parse_document(R"({"schema":"other/2","kind":"datum"})"), DocumentError);
  CHECK_THROWS_AS(parse_document(R"({"schema":"sphsmooth/1","kind":"fan"})"), DocumentError);
  try {
    parse_document(minimal_datum(R"(["A1"])", R"([{"fw":["x"],"torus":[]}])", "[]"));
    FAIL("no throw");
  } catch (const DocumentError& e) {
    CHECK(e.where().find("m_basis") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_document(minimal_datum(R"(["Q2"])", "[]", "[]")), std::exception);
}

TEST_CASE("non-normal component names are normalized with their coordinates") {
  // D3 written with its branch vertex first; A3 puts it in the middle
  const auto doc = parse_document(minimal_datum(R"(["D3"])", R"([{"fw":[1,2,3],"torus":[]}])", "[]"));
  CHECK(doc.datum.root_system.name() == "A3");
  CHECK(doc.datum.m_basis[0].fw == iv({2, 1, 3}));
  const auto b1 = parse_document(minimal_datum(R"(["B1"])", R"([{"fw":[2],"torus":[]}])", "[]"));
  CHECK(b1.datum.root_system.name() == "A1");
}

TEST_CASE("report JSON mentions the verdict and the matched entry") {
  const auto doc = testing_support::load_fixture("example_a3c2.json");
  const auto r = is_smooth(doc.datum, *doc.cone);
  const auto j = report_to_json(doc.datum, r);
  CHECK(j.find("\"verdict\"") != std::string::npos);
  CHECK(j.find("13") != std::string::npos);
  CHECK(validation_to_json(validate(doc.datum)).find("[]") != std::string::npos);
}
