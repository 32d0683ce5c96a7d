#include "doctest.h"

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "cellred/error.hpp"
#include "support.hpp"

using namespace cellred;
using testing_support::context;
namespace fs = std::filesystem;

TEST_CASE("no types, no reports") { CHECK(run_all({}).empty()); }

TEST_CASE("B2 audit passes") {
  const auto rep = audit_type(context("B2"));
  CHECK(rep.type.name() == "B2");
  CHECK(rep.checks.size() == 13);
  CHECK_FALSE(rep.any_failed());
  for (const auto& c : rep.checks) {
    CHECK_MESSAGE((c.status == Status::Pass || c.id == "type_a_correspondence"), c.id << ": " << c.details);
    CHECK_FALSE(c.paper_ref.empty());
  }
  REQUIRE(rep.find("type_a_correspondence"));
  CHECK(rep.find("type_a_correspondence")->status == Status::Skipped);
  CHECK(rep.find("no_such_check") == nullptr);
}

TEST_CASE("A4 skips checks without M_w data") {
  const auto rep = audit_type(context("A4"));
  CHECK_FALSE(rep.any_failed());
  int skipped = 0;
  for (const auto& c : rep.checks)
    if (c.status == Status::Skipped) ++skipped;
  CHECK(skipped == 6);
  CHECK(rep.find("type_a_correspondence")->status == Status::Pass);
  CHECK(rep.find("cells")->status == Status::Pass);
}

TEST_CASE("report JSON round trip and markdown") {
  const auto rep = audit_type(context("A2"));
  const auto j = rep.to_json();
  const auto back = AuditReport::from_json(j);
  CHECK(back.to_json() == j);
  CHECK(back.checks.size() == rep.checks.size());
  CHECK(parse_status(status_name(Status::Skipped)) == Status::Skipped);
  CHECK_THROWS(parse_status("maybe"));
  const auto md = rep.to_markdown();
  CHECK(md.rfind("## A2", 0) == 0);
  CHECK(md.find("bookkeeping") != std::string::npos);
}

TEST_CASE("audit output is deterministic") {
  const auto a = run_all({CartanType::parse("A3"), CartanType::parse("G2")});
  const auto b = run_all({CartanType::parse("A3"), CartanType::parse("G2")}, {default_data_dir(), Exec::Serial});
  REQUIRE(a.size() == 2);
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].to_json().dump() == b[k].to_json().dump());
}

TEST_CASE("corrupted data yields failing entries") {
  const fs::path dir = fs::temp_directory_path() / ("cellred_audit_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const auto& e : fs::directory_iterator(default_data_dir())) fs::copy(e.path(), dir / e.path().filename());
  nlohmann::ordered_json j;
  {
    std::ifstream in(dir / "B2.json");
    in >> j;
  }
  j["delta"]["121"] = "t(t-1)(t-2)/3";
  std::ofstream(dir / "B2.json") << j.dump(2);
  const auto reps = run_all({CartanType::parse("B2")}, {dir, Exec::Parallel});
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].any_failed());
  CHECK(reps[0].checks.size() == 13);
  fs::remove_all(dir);
}
