#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zipk/error.hpp"
#include "zipk/pipeline.hpp"
#include "zipk/rootdata.hpp"

using namespace zipk;

namespace {

ValidationError::Kind kind_of(const RootDatum& rd) {
  try {
    validate(rd);
  } catch (const ValidationError& e) {
    return e.kind();
  }
  FAIL("expected a validation error");
  return ValidationError::Kind::NotReduced;
}

}  // namespace

TEST_CASE("presets are valid root data") {
  for (const auto& name : preset_names()) {
    INFO(name);
    CHECK_NOTHROW(validate(preset(name)));
  }
  CHECK_THROWS_AS(preset("E8x"), ParseError);
}

TEST_CASE("Weyl group orders") {
  const std::map<std::string, std::size_t> order = {{"SL2", 2}, {"SL3", 6}, {"SL4", 24}, {"GL2", 2},
                                                    {"GL3", 6}, {"Sp4", 8}, {"PGL2", 2}, {"Gm", 1},
                                                    {"Gm^2", 1}, {"A1xA1", 4}};
  for (const auto& [name, n] : order) {
    INFO(name);
    const auto rd = preset(name);
    const auto w = weyl_enumerate(rd);
    CHECK(w.size() == n);
    // the longest element inverts every positive root
    const auto pos = positive_roots(rd, rd.simple_roots);
    CHECK(inversion_count(rd, pos, w.elements[w.longest]) == pos.size());
    CHECK(w.reduced_words[w.longest].size() == pos.size());
  }
}

TEST_CASE("fundamental groups") {
  CHECK(fundamental_group(preset("PGL2")).to_string() == "Z/2");
  CHECK(fundamental_group(preset("SL3")).to_string() == "0");
  CHECK(fundamental_group(preset("GL2")).to_string() == "Z");
  CHECK(fundamental_group(preset("Gm^2")).to_string() == "Z^2");
  CHECK_FALSE(is_derived_simply_connected(preset("PGL2")));
  for (const char* g : {"SL2", "SL3", "SL4", "Sp4", "GL2", "GL3", "A1xA1", "Gm"}) {
    INFO(g);
    CHECK(is_derived_simply_connected(preset(g)));
  }
  try {
    require_simply_connected(preset("PGL2"));
    FAIL("PGL2 accepted");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationError::Kind::NotSimplyConnected);
    CHECK(std::string(e.what()).find("Z/2") != std::string::npos);
  }
}

TEST_CASE("axiom violations are named") {
  RootDatum rd = preset("SL2");
  rd.coroots = {{2}, {-2}};  // <alpha, alpha^vee> = 4
  CHECK(kind_of(rd) == ValidationError::Kind::PairingViolation);

  rd = preset("SL3");
  rd.simple_roots = {0, 0};
  CHECK(kind_of(rd) == ValidationError::Kind::InvalidSimpleSystem);

  rd = preset("SL3");
  rd.roots.pop_back();
  rd.coroots.pop_back();
  CHECK(kind_of(rd) == ValidationError::Kind::ReflectionNotPermuting);

  rd = preset("SL3");
  rd.twist = LatticeMap(2, {2, 0, 0, 1});
  CHECK(kind_of(rd) == ValidationError::Kind::TwistNotPreservingBase);
  rd.twist = LatticeMap(2, {0, 1, 1, 0});  // diagram automorphism
  CHECK_NOTHROW(validate(rd));

  CocharacterDatum d{preset("SL3"), {1, 2, 3}, 2};
  try {
    validate_datum(d);
    FAIL("wrong length accepted");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationError::Kind::DimensionMismatch);
  }
  d.mu = {1, 2};
  d.p = 9;
  try {
    validate_datum(d);
    FAIL("9 accepted as prime");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationError::Kind::NotPrime);
  }
}

TEST_CASE("Levi subgroups of SL3") {
  const auto rd = preset("SL3");
  CHECK(levi_from_cocharacter(rd, {0, 0}).weyl.size() == 6);
  CHECK(levi_from_cocharacter(rd, {1, 1}).weyl.size() == 1);
  const auto l = levi_from_cocharacter(rd, {1, 2});
  CHECK(l.weyl.size() == 2);
  CHECK(l.roots.size() == 2);
  for (auto r : l.roots) CHECK(pairing(rd.roots[r], l.mu) == 0);
  for (auto r : l.parabolic_minus) CHECK(pairing(rd.roots[r], l.mu) <= 0);
  for (auto r : l.parabolic_plus) CHECK(pairing(rd.roots[r], l.mu) >= 0);
  CHECK(l.parabolic_minus.size() + l.parabolic_plus.size() == rd.roots.size() + l.roots.size());
}

TEST_CASE("dominant Hilbert bases") {
  // SL3: the fundamental weights
  auto hb = dominant_hilbert_basis(preset("SL3"));
  std::sort(hb.begin(), hb.end());
  CHECK(hb == std::vector<Weight>{{0, 1}, {1, 0}});
  // GL2: e1 plus the determinant and its inverse
  hb = dominant_hilbert_basis(preset("GL2"));
  CHECK(hb.size() == 3);
  for (const auto& w : hb) CHECK(is_dominant(preset("GL2"), preset("GL2").simple_roots, w));
  // Sp4 in fundamental coordinates
  CHECK(dominant_hilbert_basis(preset("Sp4")).size() == 2);
  CHECK(dominant_representative(preset("SL3"), preset("SL3").simple_roots, {-1, 0}) == Weight{0, 1});
}
