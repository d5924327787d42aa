// Copyright 2026 The seqmps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "seqmps/json_io.hpp"
#include "seqmps/pure_state.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace seqmps;

namespace {

struct CliRun {
  int exit_code = -1;
  std::string stdout_text;
  json report;  // parsed stdout when it is a JSON document
};

fs::path make_work_dir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("seqmps_cli_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

CliRun run_cli(const fs::path& dir, const std::string& args) {
  fs::path out = dir / "stdout.txt";
  std::string cmd = std::string(SEQMPS_CLI_PATH) + " " + args + " > " +
                    out.string() + " 2> " + (dir / "stderr.txt").string();
  int rc = std::system(cmd.c_str());
  CliRun r;
  r.exit_code = WEXITSTATUS(rc);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  r.stdout_text = ss.str();
  try {
    // the report is the JSON document at the end of stdout
    size_t brace = r.stdout_text.find('{');
    if (brace != std::string::npos)
      r.report = json::parse(r.stdout_text.substr(brace));
  } catch (...) {
  }
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json strip_volatile(json j) {
  // wall-clock timings and absolute output paths vary between runs
  j.erase("timings_ms");
  j.erase("state_file");
  j.erase("plan_file");
  j.erase("sweep_file");
  return j;
}

}  // namespace

TEST_CASE("recipe, compile and verify round trip") {
  fs::path dir = make_work_dir("roundtrip");
  CliRun rec = run_cli(dir, "recipe w --n 4 --out " + dir.string());
  REQUIRE(rec.exit_code == 0);
  CHECK(rec.report.at("fidelities").at("plan_vs_target").get<double>() >=
        1.0 - 1e-10);
  for (size_t k = 1; k + 1 < rec.report.at("bond_profile").size(); ++k)
    CHECK(rec.report["bond_profile"][k].get<int>() <= 2);
  fs::path state = dir / "w_n4.state.json";
  fs::path plan = dir / "w_n4.plan.json";
  REQUIRE(fs::exists(state));
  REQUIRE(fs::exists(plan));

  CliRun comp = run_cli(
      dir, "compile " + state.string() + " --out " + dir.string());
  REQUIRE(comp.exit_code == 0);
  CHECK(comp.report.at("fidelities").at("roundtrip").get<double>() >=
        1.0 - 1e-10);
  CHECK(comp.report.at("decoupled").get<bool>());
  CHECK(comp.report.at("D").get<int>() == 2);

  CliRun ver = run_cli(dir, "verify " + plan.string() + " " + state.string());
  REQUIRE(ver.exit_code == 0);
  CHECK(ver.report.at("fidelities").at("plan_vs_state").get<double>() >=
        1.0 - 1e-10);
  CHECK(ver.report.at("isometry_ok").get<bool>());

  // verifying against an orthogonal target reports a zero fidelity
  PureState ones = PureState::basis_state(4, 15);
  write_json_file(dir / "ones.json", state_to_json(ones));
  CliRun vo = run_cli(dir, "verify " + plan.string() + " " +
                               (dir / "ones.json").string());
  REQUIRE(vo.exit_code == 0);
  CHECK(vo.report.at("fidelities").at("plan_vs_state").get<double>() < 1e-10);
}

TEST_CASE("compiling a product state gives a one-level plan") {
  fs::path dir = make_work_dir("product");
  write_json_file(dir / "product.json",
                  state_to_json(PureState::basis_state(4, 0)));
  CliRun r = run_cli(dir, "compile " + (dir / "product.json").string() +
                              " --out " + dir.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.report.at("D").get<int>() == 1);
  for (const auto& d : r.report.at("bond_profile")) CHECK(d.get<int>() == 1);
}

TEST_CASE("all recipe names emit states") {
  fs::path dir = make_work_dir("recipes");
  for (const std::string name :
       {"ghz", "cluster", "atomic-w", "atomic-ghz", "atomic-cluster"}) {
    CliRun r = run_cli(dir, "recipe " + name + " --n 4 --out " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(dir / (name + "_n4.state.json")));
  }
  CHECK(fs::exists(dir / "atomic-w_n4.post_plus.json"));
  CHECK(fs::exists(dir / "atomic-ghz_n4.gates.json"));

  CliRun ghz5 = run_cli(dir, "recipe ghz --n 5 --out " + dir.string());
  REQUIRE(ghz5.exit_code == 0);
  auto profile = ghz5.report.at("bond_profile");
  for (size_t k = 1; k + 1 < profile.size(); ++k)
    CHECK(profile[k].get<int>() == 2);
}

TEST_CASE("input errors exit with code 2") {
  fs::path dir = make_work_dir("errors");
  {
    std::ofstream bad(dir / "corrupt.json");
    bad << "{ not json";
  }
  CHECK(run_cli(dir, "compile " + (dir / "corrupt.json").string()).exit_code == 2);

  {
    std::ofstream un(dir / "unnormalized.json");
    un << R"({"n": 1, "dims": [2], "amps": [[0.5, 0.0], [0.0, 0.0]]})";
  }
  CHECK(run_cli(dir, "compile " + (dir / "unnormalized.json").string())
            .exit_code == 2);

  CHECK(run_cli(dir, "recipe nosuch --n 4").exit_code == 2);
  CHECK(run_cli(dir, "recipe w --n 1").exit_code == 2);
  CHECK(run_cli(dir, "physics-sweep --delta-over-g 0 --out " + dir.string())
            .exit_code == 2);
}

TEST_CASE("tampered plans are flagged with exit code 3") {
  fs::path dir = make_work_dir("tamper");
  REQUIRE(run_cli(dir, "recipe w --n 3 --out " + dir.string()).exit_code == 0);
  fs::path plan = dir / "w_n3.plan.json";
  json j = load_json_file(plan);
  // scale one column of the first step
  for (auto& row : j["steps"][0]) row[0][0] = row[0][0].get<double>() * 1.5;
  write_json_file(plan, j);
  CliRun r = run_cli(dir, "verify " + plan.string() + " " +
                              (dir / "w_n3.state.json").string());
  CHECK(r.exit_code == 3);
  CHECK_FALSE(r.report.at("isometry_ok").get<bool>());
}

TEST_CASE("identical inputs produce identical artifacts") {
  fs::path a = make_work_dir("det_a");
  fs::path b = make_work_dir("det_b");
  CliRun ra = run_cli(a, "recipe cluster --n 5 --out " + a.string());
  CliRun rb = run_cli(b, "recipe cluster --n 5 --out " + b.string());
  REQUIRE(ra.exit_code == 0);
  REQUIRE(rb.exit_code == 0);
  CHECK(slurp(a / "cluster_n5.state.json") == slurp(b / "cluster_n5.state.json"));
  CHECK(slurp(a / "cluster_n5.plan.json") == slurp(b / "cluster_n5.plan.json"));
  // reports agree on everything except wall-clock timings
  CHECK(strip_volatile(ra.report) == strip_volatile(rb.report));

  CliRun ca = run_cli(a, "compile " + (a / "cluster_n5.state.json").string() +
                             " --out " + a.string());
  CliRun cb = run_cli(b, "compile " + (b / "cluster_n5.state.json").string() +
                             " --out " + b.string());
  REQUIRE(ca.exit_code == 0);
  REQUIRE(cb.exit_code == 0);
  CHECK(slurp(a / "cluster_n5.state.plan.json") ==
        slurp(b / "cluster_n5.state.plan.json"));
}

TEST_CASE("physics sweep output") {
  fs::path dir = make_work_dir("sweep");
  CliRun r = run_cli(dir, "physics-sweep --out " + dir.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.report.at("monotone").at("full").get<bool>());
  CHECK(r.report.at("monotone").at("adiabatic").get<bool>());
  std::string csv = slurp(dir / "sweep.csv");
  CHECK(csv.rfind("Delta_over_g,Omega_over_g,n_max,level,infidelity,leakage",
                  0) == 0);
  int lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 9);  // header + 4 detunings x 2 levels

  CliRun single = run_cli(
      dir, "physics-sweep --delta-over-g 100 --level full --out " + dir.string());
  REQUIRE(single.exit_code == 0);
  std::string csv1 = slurp(dir / "sweep.csv");
  int lines1 = 0;
  for (char c : csv1)
    if (c == '\n') ++lines1;
  CHECK(lines1 == 2);  // header + one row
}
