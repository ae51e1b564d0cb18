#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "serialize.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + std::string(GAMMACOH_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

gammacoh::io::Json json_of(const std::string& args) {
  const Run r = run(args + " --format json");
  REQUIRE(r.code == 0);
  return gammacoh::io::Json::parse(r.out);
}

}  // namespace

TEST_CASE("dims subcommand") {
  const auto j = json_of("dims --group sl2z --weight-max 5 --oracle");
  REQUIRE(j["rows"].size() == 6);
  CHECK(j["rows"][5]["dim_h1"] == 3);
  CHECK(j["rows"][5]["oracle_dim"] == 3);
  CHECK(j["agree"] == true);
  CHECK(j["discrepancy"][1]["verbatim"] == "0");
  CHECK(j["discrepancy"][1]["corrected"] == "1");

  const auto t = json_of("dims --group theta --weight-max 1 --method both");
  CHECK(t["rows"][1]["dim_h1"] == 2);
  CHECK(t["rows"][1]["dim_h1_shapiro"] == 2);

  const auto z = json_of("dims --group sl2z --weight-max 0");
  REQUIRE(z["rows"].size() == 1);
  CHECK(z["rows"][0]["dim_h1"] == 0);
  CHECK(run("dims --group sl2z --weight-max 3").out.find("discrepancy") != std::string::npos);
}

TEST_CASE("e2k subcommand") {
  const auto x = json_of("e2k --k 1 --eval \"1,1;0,1\" --project x");
  CHECK(x["projected_display"] == "-ex^2");
  CHECK(x["nonzero"] == true);
  const auto d = json_of("e2k --k 1 --eval \"2,-1;1,0\" --project diag");
  CHECK(d["projected_display"] == "e^2");
  const auto w = json_of("e2k --k 1 --eval \"B^-1*A\" --project x");
  CHECK(w["projected_display"] == "-ex^2");
  const auto i = json_of("e2k --k 1 --eval \"1,0;0,1\"");
  CHECK(i["value_display"] == "0");
  CHECK(i["nonzero"] == false);
  CHECK(run("e2k --k 1 --eval \"2,0;0,1\"").code == 2);
  CHECK(run("e2k --k 0").code == 2);
}

TEST_CASE("detect, cusps, series, pair, span") {
  const auto det = json_of("detect --group sl2z --weight 1 --radius 6");
  CHECK(det["complete"] == true);
  CHECK(det["agreement"] == true);
  CHECK(det["detections"][0]["detecting_gamma"] == "1,1;0,1");
  CHECK(det["spanning"]["rank"] == 1);

  const auto cusps = json_of("cusps --group theta");
  REQUIRE(cusps["cusps"].size() == 2);
  CHECK(cusps["cusps"][0]["generator"] == "1,2;0,1");
  CHECK(cusps["cusps"][1]["generator"] == "2,-1;1,0");
  CHECK(json_of("cusps --group theta --weight 3")["parabolic"]["dim_parabolic"] == 2);

  const auto series = json_of("series --n 1 --variant corrected_sl2z --terms 25");
  bool has5 = false, has9 = false;
  for (const auto& c : series["coefficients"]) {
    if (c[0] == 5) has5 = c[1] == "1";
    if (c[0] == 9) has9 = c[1] == "1";
  }
  CHECK(has5);
  CHECK(has9);
  CHECK(series.contains("discrepancy"));

  const auto pair = json_of("pair --weight 1 --gamma \"1,1;0,1\"");
  CHECK(pair["pairings"].size() == 1);
  CHECK(pair["pairings"][0] != "0");
  CHECK(run("pair --group theta --weight 1 --gamma \"1,1;0,1\"").code == 2);

  const auto span = json_of("span --group theta --weight 2 --radius 6");
  CHECK(span["full"] == true);
}

TEST_CASE("exit codes for usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("dims --weight-max").code == 2);
  CHECK(run("dims --bogus").code == 2);
  CHECK(run("dims --group nonsense").code == 2);
  CHECK(run("dims --method nonsense").code == 2);
  CHECK(run("series --n 4").code == 2);
  CHECK(run("series --n 5 --variant corrected_sl2z").code == 2);
  CHECK(run("detect --weight 0").code == 2);
  CHECK(run("span --weight 0").code == 2);
  CHECK(run("dims --format xml").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("dims --weight-max 30", "GAMMACOH_MAX_DEGREE=20").code == 2);
  CHECK(run("dims --weight-max 3", "GAMMACOH_MAX_DEGREE=20").code == 0);
}

TEST_CASE("identical invocations give identical JSON") {
  for (const char* args : {"dims --group theta --weight-max 4 --method both --oracle --format json",
                           "detect --group theta --weight 2 --format json",
                           "series --n 5 --terms 60 --format json", "span --group sl2z --weight 4 --format json"}) {
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    // Parsing and re-serializing reproduces the bytes.
    CHECK(gammacoh::io::Json::parse(a.out).dump(2) + "\n" == a.out);
  }
}
