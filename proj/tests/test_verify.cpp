#include <algorithm>
#include <set>
#include <string>

#include <doctest.h>

#include "rulekin/verify.hpp"
#include "sample_specs.hpp"

using namespace rulekin;

namespace {

const RelationEntry* find(const RelationReport& r, const std::string& id) {
  for (const auto& e : r.entries)
    if (e.id == id) return &e;
  return nullptr;
}

std::size_t count_status(const RelationReport& r, EntryStatus s) {
  return static_cast<std::size_t>(
      std::count_if(r.entries.begin(), r.entries.end(),
                    [&](const RelationEntry& e) { return e.status == s; }));
}

const VariantResult* variant(const RelationEntry& e, const std::string& name) {
  for (const auto& v : e.variants)
    if (v.name == name) return &v;
  return nullptr;
}

}  // namespace

TEST_CASE("catalog emits every identifier exactly once") {
  const RelationReport r = verify_relations(specs::circle(), {DualScalar{0.5, 0.2}}, 256);
  CHECK(r.entries.size() == 117);
  std::set<std::string> ids;
  for (const auto& e : r.entries) {
    CHECK(!e.id.empty());
    CHECK(ids.insert(e.id).second);  // no duplicates
    if (e.status == EntryStatus::Skipped) {
      CHECK(e.note.rfind("skipped: ", 0) == 0);
    }
  }
  for (const char* id :
       {"frame-orthonormality", "2.1-U1xU2", "2.4-psi-norm", "2.8-pitch-u1", "2.14-drall-u2",
        "2.25-denominator", "2.32-denominator", "2.33-2.37-vframe", "2.41-kappa-norm",
        "2.44-q-det", "2.50-steiner-conversion", "2.54-vs-2.52", "2.63-vs-2.14", "thm-2.1",
        "cor-2.2", "2.81-denominator", "2.87-literal-vs-corrected", "2.91-denominator",
        "axis-omega0-degenerate", "axis-theta0-degenerate", "phi0-invariants-reduction"}) {
    CHECK(ids.count(id) == 1);
  }
  CHECK(r.all_passed() == (r.failures() == 0));
  CHECK(r.samples == 256);
  CHECK(r.tol_abs == 1e-8);
  CHECK(r.tol_rel == 1e-6);
}

TEST_CASE("frame checks pass on the circle") {
  const SampledFrame f = frenet(sample_curve(specs::circle(), 512), specs::circle().period);
  const auto entries = verify_frenet(f);
  CHECK(entries.size() == 13);
  for (const auto& e : entries) {
    CAPTURE(e.id);
    CHECK(e.status == EntryStatus::Pass);
  }
}

TEST_CASE("circle at a dual offset angle: all live entries pass") {
  const RelationReport r = verify_relations(specs::circle(), {DualScalar{0.5, 0.2}}, 1024);
  CHECK(r.failures() == 0);
  CHECK(r.all_passed());
  CHECK(count_status(r, EntryStatus::Skipped) == 19);

  // the timelike rotation vector skips the whole spacelike block
  for (const char* id : {"2.19-c-unit", "2.20-c-split", "2.21-pitch-c", "2.24-vs-2.23"}) {
    const RelationEntry* e = find(r, id);
    REQUIRE(e != nullptr);
    CHECK(e->status == EntryStatus::Skipped);
    CHECK(e->note.find("timelike on this curve") != std::string::npos);
  }
  for (const char* id : {"2.72-cbar-unit", "2.75-pitch-cbar", "2.80-vs-2.78"}) {
    const RelationEntry* e = find(r, id);
    REQUIRE(e != nullptr);
    CHECK(e->status == EntryStatus::Skipped);
  }
  for (const char* id :
       {"phi0-v1-reduction", "phi0-v2-reduction", "phi0-v3-reduction", "phi0-invariants-reduction"}) {
    const RelationEntry* e = find(r, id);
    REQUIRE(e != nullptr);
    CHECK(e->status == EntryStatus::Skipped);
    CHECK(e->note.find("requires phi = 0") != std::string::npos);
  }

  // two-path comparisons carry representative values
  const RelationEntry* lam = find(r, "2.9-lambda-u1");
  REQUIRE(lam != nullptr);
  REQUIRE(lam->lhs.has_value());
  REQUIRE(lam->rhs.has_value());
  CHECK(lam->lhs->real == doctest::Approx(-2.5 * std::numbers::pi).epsilon(1e-8));
}

TEST_CASE("stationary-axis audits fall back to a prescribed angle") {
  const RelationReport r = verify_relations(specs::circle(), {DualScalar{0.5, 0.2}}, 1024);
  // the genuine rotation axis of the circle is stationary, so both timelike
  // audits must have swapped in the prescribed angle and still discriminate
  for (const char* id : {"2.32-denominator", "2.91-denominator"}) {
    const RelationEntry* e = find(r, id);
    REQUIRE(e != nullptr);
    CHECK(e->status == EntryStatus::Pass);
    CHECK(e->note.find("prescribed dual angle") != std::string::npos);
    REQUIRE(e->variants.size() == 2);
  }
  const RelationEntry* a32 = find(r, "2.32-denominator");
  CHECK(variant(*a32, "printed") != nullptr);
  CHECK(!variant(*a32, "printed")->matches);
  CHECK(variant(*a32, "corrected") != nullptr);
  CHECK(variant(*a32, "corrected")->matches);
  CHECK(variant(*a32, "printed")->abs_residual > 1e-2);

  const RelationEntry* a91 = find(r, "2.91-denominator");
  CHECK(variant(*a91, "printed")->matches);
  CHECK(!variant(*a91, "denominator-sign-flipped")->matches);

  // spacelike audits never see a genuine angle on these curves
  for (const char* id : {"2.25-denominator", "2.81-denominator"}) {
    const RelationEntry* e = find(r, id);
    REQUIRE(e != nullptr);
    CHECK(e->status == EntryStatus::Pass);
    CHECK(variant(*e, "printed")->matches);
    CHECK(!variant(*e, "denominator-sign-flipped")->matches);
  }

  // on this circle the composition coefficient sinh(theta+phi) lambda_U1 +
  // cosh(theta+phi) lambda_U3 vanishes, so even the literal form matches here;
  // the perturbed-loop case below is the discriminating one
  const RelationEntry* a87 = find(r, "2.87-literal-vs-corrected");
  REQUIRE(a87 != nullptr);
  CHECK(a87->status == EntryStatus::Pass);
  CHECK(variant(*a87, "corrected")->matches);
  CHECK(variant(*a87, "literal")->matches);
}

TEST_CASE("zero offset activates the reduction entries") {
  const RelationReport r = verify_relations(specs::circle(), {DualScalar{0.0, 0.0}}, 512);
  CHECK(r.failures() == 0);
  CHECK(count_status(r, EntryStatus::Skipped) == 15);
  for (const char* id :
       {"phi0-v1-reduction", "phi0-v2-reduction", "phi0-v3-reduction", "phi0-invariants-reduction"}) {
    const RelationEntry* e = find(r, id);
    REQUIRE(e != nullptr);
    CHECK(e->status == EntryStatus::Pass);
    CHECK(e->abs_residual <= 1e-12);
  }
  const RelationEntry* a87 = find(r, "2.87-literal-vs-corrected");
  REQUIRE(a87 != nullptr);
  CHECK(a87->note.find("variants coincide when phi* = 0") != std::string::npos);
  CHECK(variant(*a87, "literal")->matches);
  CHECK(variant(*a87, "corrected")->matches);
}

TEST_CASE("varying angles skip the constant-angle entries but nothing fails") {
  const RelationReport r = verify_relations(specs::wobble(), {DualScalar{0.3, 0.1}}, 1024);
  CHECK(r.failures() == 0);
  CHECK(count_status(r, EntryStatus::Skipped) == 28);

  const RelationEntry* c = find(r, "2.28-pitch-c");
  REQUIRE(c != nullptr);
  CHECK(c->status == EntryStatus::Skipped);
  CHECK(c->note.find("constant omega") != std::string::npos);

  const RelationEntry* cb = find(r, "2.85-pitch-cbar");
  REQUIRE(cb != nullptr);
  CHECK(cb->status == EntryStatus::Skipped);
  CHECK(cb->note.find("constant theta") != std::string::npos);

  // both timelike audits use the genuine (varying) angles here
  const RelationEntry* a32 = find(r, "2.32-denominator");
  REQUIRE(a32 != nullptr);
  CHECK(a32->status == EntryStatus::Pass);
  CHECK(a32->note.find("genuine Pfaffian angle") != std::string::npos);
  CHECK(!variant(*a32, "printed")->matches);
  CHECK(variant(*a32, "corrected")->matches);
  CHECK(variant(*a32, "printed")->abs_residual > 1e-1);

  const RelationEntry* a91 = find(r, "2.91-denominator");
  REQUIRE(a91 != nullptr);
  CHECK(a91->status == EntryStatus::Pass);
  CHECK(a91->note.find("genuine parallel-axis angle") != std::string::npos);
  CHECK(variant(*a91, "printed")->matches);

  const RelationEntry* a87 = find(r, "2.87-literal-vs-corrected");
  REQUIRE(a87 != nullptr);
  CHECK(variant(*a87, "corrected")->matches);
  CHECK(!variant(*a87, "literal")->matches);
}

TEST_CASE("rotation vector without a causal class skips every axis entry") {
  // 4096 nodes: the second-derivative stencil entry needs the finer grid on
  // this rougher director to clear the absolute tolerance
  const RelationReport r = verify_relations(specs::mixed(), {DualScalar{0.0, 0.0}}, 4096);
  CHECK(r.failures() == 0);
  for (const char* id : {"2.19-c-unit", "2.26-c-unit", "2.21-pitch-c", "2.28-pitch-c"}) {
    const RelationEntry* e = find(r, id);
    REQUIRE(e != nullptr);
    CHECK(e->status == EntryStatus::Skipped);
    CHECK(e->note.find("causal class") != std::string::npos);
  }
  for (const char* id : {"2.72-cbar-unit", "2.82-cbar-unit", "2.75-pitch-cbar", "2.85-pitch-cbar"}) {
    const RelationEntry* e = find(r, id);
    REQUIRE(e != nullptr);
    CHECK(e->status == EntryStatus::Skipped);
  }
  // audits still run, on prescribed angles
  for (const char* id : {"2.25-denominator", "2.32-denominator", "2.81-denominator", "2.91-denominator"}) {
    const RelationEntry* e = find(r, id);
    REQUIRE(e != nullptr);
    CHECK(e->status == EntryStatus::Pass);
    CHECK(e->note.find("prescribed dual angle") != std::string::npos);
  }
}

TEST_CASE("the fail path triggers under absurd tolerances") {
  const RelationReport r =
      verify_relations(specs::circle(), {DualScalar{0.5, 0.2}}, 256, 1e-300, 1e-300);
  CHECK(r.failures() > 0);
  CHECK(!r.all_passed());
  const RelationEntry* e = find(r, "2.2-U1");
  REQUIRE(e != nullptr);
  CHECK(e->status == EntryStatus::Fail);
}
