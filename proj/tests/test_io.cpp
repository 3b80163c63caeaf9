#include <doctest.h>

#include "sclat/io.hpp"
#include "support.hpp"

using namespace sclat;
using io::Json;

namespace {

std::vector<ScaledBase> small_bases(int max_points, int d) {
  std::vector<ScaledBase> out;
  for (int n = 0; n <= max_points; ++n)
    for (const auto& [o, lab] : oracle::labeled_posets(n, d)) out.push_back(oracle::to_base(o, lab, d));
  return out;
}

// Equal up to the point order of the file.
bool same_named_base(const ScaledBase& a, const ScaledBase& b) {
  if (a.d() != b.d() || a.size() != b.size()) return false;
  if (a.poset().presentation().canonical() != b.poset().presentation().canonical()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a.label(i) != b.label(*b.poset().index_of(a.poset().name(i)))) return false;
  return true;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

}  // namespace

TEST_CASE("lattice files") {
  const auto j = io::parse_text(R"({"d": 1, "poset": {"elements": ["x1", "x0"], "covers": [["x0", "x1"]]},
                                    "dimlabel": {"x0": 0, "x1": 1}})");
  const auto file = io::lattice_from_json(j);
  CHECK(is_isomorphic(file.base, fixtures::ch2()));
  CHECK_FALSE(file.asc);
  CHECK(io::lattice_to_json(file.base)["format"] == "sclat/1");
  CHECK(io::lattice_to_json(file.base)["poset"]["elements"] == Json({"x0", "x1"}));

  for (const auto& base : small_bases(3, 2)) {
    const Json written = io::lattice_to_json(base);
    const auto back = io::lattice_from_json(io::parse_text(io::dump(written)));
    CHECK(same_named_base(back.base, base));
    CHECK(io::dump(io::lattice_to_json(back.base)) == io::dump(written));
  }

  const AscBase weighted(fixtures::ac2(), {2, 0});
  const auto asc_back = io::lattice_from_json(io::lattice_to_json(weighted));
  REQUIRE(asc_back.asc);
  CHECK(*asc_back.asc == weighted);
  CHECK(io::lattice_to_json(weighted)["asc"] == Json{{"a0", 2}});
}

TEST_CASE("malformed lattice files") {
  auto load = [](const std::string& text) { return [text] { io::lattice_from_json(io::parse_text(text)); }; };
  CHECK(kind_of(load("{")) == ErrorKind::ingestion);
  CHECK(kind_of(load(R"({"poset": {"elements": [], "covers": []}, "dimlabel": {}})")) == ErrorKind::ingestion);
  CHECK(kind_of(load(R"({"format": "other/2", "d": 0, "poset": {"elements": [], "covers": []}, "dimlabel": {}})")) ==
        ErrorKind::ingestion);
  CHECK(kind_of(load(R"({"d": 0, "poset": {"elements": ["a"], "covers": []}, "dimlabel": {}})")) ==
        ErrorKind::ill_formed_input);
  CHECK(kind_of(load(R"({"d": 1, "poset": {"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]},
                         "dimlabel": {"a": 0, "b": 1}})")) == ErrorKind::ill_formed_input);
  CHECK(kind_of(load(R"({"d": 1, "poset": {"elements": ["a", "b"], "covers": [["a", "b"]]},
                         "dimlabel": {"a": 1, "b": 1}})")) == ErrorKind::ill_formed_input);
  CHECK(kind_of(load(R"({"d": 0, "poset": {"elements": ["a"], "covers": []}, "dimlabel": {"a": "0"}})")) ==
        ErrorKind::ingestion);
  CHECK(kind_of(load(R"({"d": 0, "poset": {"elements": ["a"], "covers": []}, "dimlabel": {"a": 0},
                         "asc": {"zz": 1}})")) == ErrorKind::ill_formed_input);
}

TEST_CASE("signature files") {
  for (const auto& base : small_bases(3, 2)) {
    for (const auto& s : enumerate_signatures(base)) {
      const Json j = io::signature_to_json(base, s);
      CHECK(io::signature_from_json(base, io::parse_text(io::dump(j))) == s);
    }
  }
  const auto ch2 = fixtures::ch2();
  const auto s = io::signature_from_json(ch2, io::parse_text(R"({"g": "x1", "H": [["x0"], []], "q": 1})"));
  CHECK(s.g == 1);
  CHECK(s.h1 == fixtures::pts(ch2, {"x0"}));
  CHECK(s.q == 1);
  CHECK(kind_of([&] { io::signature_from_json(ch2, io::parse_text(R"({"g": "w", "H": [[], []], "q": 0})")); }) ==
        ErrorKind::ill_formed_input);

  const AscBase weighted(fixtures::pt(0), {3});
  for (const auto& a : enumerate_asc_signatures(weighted, {1, 2, 3})) {
    const Json j = io::signature_to_json(weighted, a);
    CHECK(j.contains("K"));
    CHECK(io::asc_signature_from_json(weighted, j) == a);
  }
}

TEST_CASE("linear set files") {
  const auto s = io::sls_from_json(io::parse_text(R"({"ambient": 2, "varieties": [{"axes": [2], "basepoint": {"1": "0"}},
                                                                                   {"axes": [], "basepoint": {"1": "2/4", "2": 3}}]})"));
  CHECK(s.flats().size() == 2);
  CHECK(describe(s) == "{(1/2,3), (0,*)}");
  CHECK(io::sls_from_json(io::sls_to_json(s)) == s);

  for (const auto& base : small_bases(3, 2)) {
    const auto r = represent(base);
    for (const auto& img : r.element_images) CHECK(io::sls_from_json(io::parse_text(io::dump(io::sls_to_json(img)))) == img);
  }

  auto load = [](const std::string& text) { return [text] { io::sls_from_json(io::parse_text(text)); }; };
  CHECK(kind_of(load(R"({"ambient": 0, "varieties": []})")) == ErrorKind::ingestion);
  CHECK(kind_of(load(R"({"ambient": 1, "varieties": [{"axes": [2], "basepoint": {}}]})")) == ErrorKind::ingestion);
  CHECK(kind_of(load(R"({"ambient": 1, "varieties": [{"axes": [], "basepoint": {"1": "1/0"}}]})")) == ErrorKind::ingestion);
  CHECK(kind_of(load(R"({"ambient": 1, "varieties": [{"axes": [], "basepoint": {"1": "one"}}]})")) == ErrorKind::ingestion);
  CHECK(kind_of(load(R"({"ambient": 1, "varieties": [{"axes": [1], "basepoint": {"1": "1"}}]})")) == ErrorKind::ingestion);
}
