/*
 * Copyright (c) 2026 The orbicount Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "doctest.h"
#include "json.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using Json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string make_temp_dir() {
  char tmpl[] = "/tmp/orbicount-cli-XXXXXX";
  char *d = mkdtemp(tmpl);
  REQUIRE(d != nullptr);
  return d;
}

const std::string &cache_dir() {
  static const std::string dir = make_temp_dir();
  return dir;
}

Run run(const std::string &args, bool with_stderr = false) {
  std::string cmd = "ORBICOUNT_CACHE='" + cache_dir() + "' '" + ORBICOUNT_CLI_PATH + "' " + args +
                    (with_stderr ? " 2>&1" : " 2>/dev/null");
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
    r.out.append(buf, n);
  }
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json run_json(const std::string &args, int expect = 0) {
  Run r = run("--format json " + args);
  CAPTURE(args);
  CAPTURE(r.out);
  REQUIRE(r.code == expect);
  return Json::parse(r.out);
}

std::string write_file(const std::string &name, const std::string &text) {
  std::string path = cache_dir() + "/" + name;
  std::ofstream(path) << text;
  return path;
}

} // namespace

TEST_CASE("census examples") {
  Json s = run_json("census --family surface --size 2 --max-index 3");
  REQUIRE(s["rows"].size() == 3);
  CHECK(s["rows"][0]["j"] == "1");
  // Index-2 subgroups of a genus-2 surface group are kernels of the 15 nonzero maps to Z/2.
  CHECK(s["rows"][1]["j"] == "15");

  Json a = run_json("census --family free_abelian --size 2 --max-index 4");
  std::vector<std::string> j;
  for (const auto &row : a["rows"]) {
    j.push_back(row["j"]);
  }
  CHECK(j == std::vector<std::string>{"1", "3", "4", "7"});

  Json v = run_json("census --presentation nonorientable:3 --max-index 3 --verify");
  CHECK(v["verify"]["passed"] == true);
  CHECK(v["rows"][0].contains("j_plus"));
}

TEST_CASE("malformed input exits with code 2") {
  std::string bad = write_file("bad.txt", "<a,b|[a,b>");
  Run r = run("census --file '" + bad + "' --max-index 2", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("position") != std::string::npos);

  CHECK(run("census --presentation '<a|' --max-index 2").code == 2);
  CHECK(run("verify --id no-such-identity").code == 2);
  CHECK(run("homcount --presentation free:1 --group Qn:3").code == 2);
  CHECK(run("census --family surface").code == 2);
  CHECK(run("--budget nonsense=4 census --family free --size 1").code == 2);
}

TEST_CASE("homcount examples") {
  CHECK(run_json("homcount --presentation nonorientable:2 --group Sn:3")["hom_count"] == "18");
  CHECK(run_json("homcount --presentation free_abelian:2 --group Zn:2 --wreath-n 2")["hom_count"] == "40");
  CHECK(run_json("homcount --presentation free_abelian:2 --group Zn:2 --wreath-n 0")["hom_count"] == "1");

  std::string group = write_file("z3.json", R"({"degree": 3, "generators": [[1, 2, 0]]})");
  CHECK(run_json("homcount --presentation free:2 --group '" + group + "'")["hom_count"] == "9");
}

TEST_CASE("bundles examples") {
  Json all = run_json("bundles --presentation '<a|>' --group trivial --n 3 --all");
  CHECK(all["hom_classes"] == 3);
  CHECK(all["bijection"] == true);

  Json z2 = run_json("bundles --presentation free_abelian:2 --group Zn:2 --n 2 --all");
  CHECK(z2["passed"] == true);
  for (const auto &h : z2["homs"]) {
    CHECK(h["match"] == true);
    CHECK(h["centralizer_structural"] == h["centralizer_brute"]);
  }
}

TEST_CASE("verify examples") {
  CHECK(run("verify --id B --group trivial --N 5").code == 0);
  CHECK(run("verify --id C-prod --gamma free:2 --group Sn:3 --N 3").code == 0);
  CHECK(run("verify --id 8-1 --gamma nonorientable:3 --m 4").code == 0);
  Run list = run("verify --list");
  CHECK(list.code == 0);
  CHECK(list.out.find("8-1") != std::string::npos);
}

TEST_CASE("exit codes for mismatch and budget") {
  CHECK(run("characters --table Q8 --check epsilon2").code == 1);
  CHECK(run("characters --table S3 --check epsilon2").code == 0);
  CHECK(run("--budget wreath_cap=10 homcount --presentation free:1 --group Zn:2 --wreath-n 3").code == 3);
}

TEST_CASE("formats") {
  Run csv = run("--format csv census --family free_abelian --size 2 --max-index 4");
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("r,j,u\n", 0) == 0);
  CHECK(csv.out.find("4,7,7\n") != std::string::npos);

  Run text = run("census --family free_abelian --size 2 --max-index 2");
  REQUIRE(text.code == 0);
  CHECK(text.out.find("j_r") != std::string::npos);

  std::string target = cache_dir() + "/out.json";
  REQUIRE(run("--format json --output '" + target + "' homcount --presentation free:1 --group Sn:3").code == 0);
  std::ifstream in(target);
  CHECK(Json::parse(in)["hom_count"] == "6");
}

TEST_CASE("output is deterministic and independent of the cache") {
  std::string fresh = make_temp_dir();
  std::string args = "--format json --cache-dir '" + fresh + "' census --family surface --size 2 --max-index 3";
  Run miss = run(args);
  Run hit = run(args);
  Run other = run("--format json census --family surface --size 2 --max-index 3");
  REQUIRE(miss.code == 0);
  CHECK(miss.out == hit.out);
  CHECK(miss.out == other.out);

  Run b1 = run("--format json bundles --presentation free:2 --group Sn:3 --n 2 --all");
  Run b2 = run("--format json bundles --presentation free:2 --group Sn:3 --n 2 --all");
  CHECK(b1.code == 0);
  CHECK(b1.out == b2.out);
}
