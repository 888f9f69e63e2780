#include <doctest.h>

#include "latt/core.hpp"
#include "latt/digest.hpp"
#include "latt/hassett.hpp"
#include "latt/json_io.hpp"

using namespace latt;
using nlohmann::json;

TEST_CASE("gram json round trip") {
  GramMatrix g = m0_gram();
  auto j = gram_to_json(g);
  GramMatrix back = gram_from_json(j);
  CHECK(back.rank == g.rank);
  CHECK(back.entries == g.entries);
}

TEST_CASE("gram json strictness") {
  CHECK_THROWS_AS(gram_from_json(json::parse(R"({"gram": [[1]]})")), Error);
  CHECK_THROWS_AS(gram_from_json(json::parse(R"({"rank": 1})")), Error);
  CHECK_THROWS_AS(
      gram_from_json(json::parse(R"({"rank": 2, "gram": [[1,0]]})")), Error);
  CHECK_THROWS_AS(
      gram_from_json(json::parse(R"({"rank": 1, "gram": [[1.5]]})")), Error);
  try {
    gram_from_json(json::parse(R"({"rank": 2, "gram": [[1,2],[3,4]]})"));
    FAIL("expected NotSymmetric");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSymmetric);
  }
  CHECK_THROWS_AS(read_gram_file("/nonexistent/path.json"), Error);
}

TEST_CASE("canonical dump is byte-stable") {
  auto j1 = gram_to_json(dm0_gram());
  auto j2 = gram_to_json(dm0_gram());
  CHECK(canonical_dump(j1) == canonical_dump(j2));
  CHECK(canonical_dump(j1) ==
        R"({"rank":4,"gram":[[8,6,0,6],[6,18,6,0],[0,6,12,0],[6,0,0,12]]})");
}

TEST_CASE("sha256 known vector") {
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("certificate json shape") {
  Lattice m0 = validate(m0_gram().entries);
  auto cert =
      verify_z_membership(m0, {1, 0, 0, 0, 0}, 30, ZMode::Enumeration);
  auto j = certificate_to_json(cert);
  CHECK(j["bound"] == 30);
  CHECK(j["mode"] == "enumeration");
  CHECK(j["digest"].get<std::string>().size() == 64);
  REQUIRE(j["witnesses"].is_array());
  i64 prev = 0;
  for (const auto& w : j["witnesses"]) {
    i64 d = w["d"].get<i64>();
    CHECK(d > prev);
    prev = d;
    CHECK(w["vector"].is_array());
  }
  CHECK(j["witnesses"].size() == cert.witnesses.size());
}

TEST_CASE("image report json") {
  Lattice dm = validate(dm0_gram().entries);
  auto rep = image_up_to(dm, 30, true, true);
  auto j = image_report_to_json(rep);
  CHECK(j["bound"] == 30);
  CHECK(j["values"].is_array());
  CHECK(j["count"] == j["values"].size());
  CHECK(j.contains("witnesses"));
}
