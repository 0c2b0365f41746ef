#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gor/ideal_file.hpp"

using nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(GOR_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

json run_json(const std::string& args) {
  auto r = run(args);
  EXPECT_EQ(r.status, 0) << args;
  return json::parse(r.out);
}

std::filesystem::path scratch() {
  static auto dir = [] {
    auto d = std::filesystem::temp_directory_path() / ("gor_cli_" + std::to_string(getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::pair<int, int>, int> betti_of(const json& table) {
  std::map<std::pair<int, int>, int> m;
  for (const auto& e : table) m[{e["i"].get<int>(), e["j"].get<int>()}] = e["value"].get<int>();
  return m;
}

}  // namespace

TEST(Cli, BuildFamilies) {
  auto r = run("build --family roos4");
  ASSERT_EQ(r.status, 0);
  auto f = gor::parse_ideal_file(r.out);
  EXPECT_EQ(f.generators.size(), 6u);
  EXPECT_EQ(f.vars.size(), 4u);

  f = gor::parse_ideal_file(run("build --family cm --m 3").out);
  EXPECT_EQ(f.generators.size(), 7u);
  EXPECT_EQ(f.vars.size(), 6u);

  f = gor::parse_ideal_file(run("build --family roos-alpha --alpha 2").out);
  EXPECT_EQ(f.generators.size(), 13u);

  f = gor::parse_ideal_file(run("build --family ci --degrees 3,2,2").out);
  EXPECT_EQ(f.generators, (std::vector<std::string>{"x1^3", "x2^2", "x3^2"}));
}

TEST(Cli, BuildRoundTripsBitExact) {
  auto path = scratch() / "roos4.txt";
  ASSERT_EQ(run("build --family roos4 --out " + path.string()).status, 0);
  std::string text = slurp(path);
  EXPECT_EQ(gor::parse_ideal_file(text).text(), text);
  // analyzing the file and the family reference embeds the same content hash
  auto a = run_json("analyze " + path.string());
  auto b = run_json("analyze roos4");
  EXPECT_EQ(a["input"]["hash"], b["input"]["hash"]);
  EXPECT_EQ(a["input"]["hash"], gor::hex64(gor::fnv1a64(text)));
  EXPECT_EQ(b["input"]["family"], "roos4");
}

TEST(Cli, AnalyzeRoos4Betti) {
  auto j = run_json("analyze roos4 --betti");
  auto B = betti_of(j["betti_table"]["value"]);
  std::map<std::pair<int, int>, int> expect{{{0, 0}, 1}, {{1, 2}, 6}, {{2, 3}, 4}, {{2, 4}, 9}, {{3, 5}, 12}, {{4, 6}, 4}};
  EXPECT_EQ(B, expect);
  EXPECT_EQ(j["betti_table"]["provenance"], "computed");
  EXPECT_EQ(j["regularity"]["value"], 2);
  EXPECT_EQ(j["type"]["value"], 4);
  EXPECT_EQ(j["superlevel"]["value"], true);
}

TEST(Cli, AbsentSectionsAreOmitted) {
  auto j = run_json("analyze roos4");
  EXPECT_FALSE(j.contains("betti_table"));
  EXPECT_FALSE(j.contains("idealization"));
  EXPECT_FALSE(j.contains("timing_seconds"));
  EXPECT_TRUE(j.contains("hilbert_function"));
  EXPECT_TRUE(run_json("analyze roos4 --timing").contains("timing_seconds"));
}

TEST(Cli, EveryNumberCarriesProvenance) {
  auto j = run_json("analyze cm-m2 --betti --subadditivity");
  for (const char* k : {"codim", "hilbert_function", "h_vector", "regularity", "t_values", "type", "subadditivity_violations"}) {
    ASSERT_TRUE(j.contains(k)) << k;
    EXPECT_TRUE(j[k].contains("provenance")) << k;
  }
  EXPECT_EQ(j["hilbert_function_closed_form"]["provenance"], "formula");
  EXPECT_EQ(j["hilbert_function_closed_form"]["value"], j["hilbert_function"]["value"]);
}

TEST(Cli, AnalyzeCmM3Subadditivity) {
  auto j = run_json("analyze cm-m3 --subadditivity");
  EXPECT_EQ(j["t_values"]["value"][2], 5);
  auto v = j["subadditivity_violations"]["value"];
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0], json({1, 1}));
}

TEST(Cli, AnalyzeAlphaIdealizeKoszul) {
  auto j = run_json("analyze roos-alpha-2 --idealize --koszul-steps 4");
  EXPECT_EQ(j["idealization"]["koszul"]["linear_steps"]["value"], 2);
  EXPECT_EQ(j["idealization"]["all_checks_passed"], true);
  EXPECT_EQ(j["idealization"]["h_vector"]["value"], json({1, 14, 14, 1}));
}

TEST(Cli, KoszulSubcommand) {
  auto j = run_json("koszul cm-m2 --steps 3");
  EXPECT_EQ(j["linear_steps"]["value"], 2);
  EXPECT_EQ(j["over"], "R");
}

TEST(Cli, IdealizeWritesFile) {
  auto path = scratch() / "roos4_idealized.txt";
  auto rep = scratch() / "roos4_idealized.json";
  ASSERT_EQ(run("idealize roos4 --out " + path.string() + " --json " + rep.string()).status, 0);
  auto f = gor::read_ideal_file(path.string());
  EXPECT_EQ(f.vars.size(), 8u);
  EXPECT_EQ(f.generators.size(), 28u);
  auto j = json::parse(slurp(rep));
  for (const auto& c : j["checks"]) EXPECT_TRUE(c["passed"].get<bool>()) << c["name"];
  // the written file analyzes as the Gorenstein idealization
  auto a = run_json("analyze " + path.string());
  EXPECT_EQ(a["h_vector"]["value"], json({1, 8, 8, 1}));
  EXPECT_EQ(a["gorenstein"]["value"], true);
}

TEST(Cli, FamilyFormulas) {
  auto j = run_json("family --m 7");
  EXPECT_EQ(j["h_vector_idealization"]["value"], json({1, 1444, 2092, 1988, 1820, 1988, 2092, 1444, 1}));
  EXPECT_EQ(j["h_vector_idealization"]["provenance"], "formula");
  EXPECT_EQ(j["wlp_impossible"]["value"], true);
  EXPECT_EQ(j["witness"]["passes"], true);
}

TEST(Cli, ReportsAreByteIdentical) {
  for (const char* args : {"analyze cm-m3 --betti --idealize", "analyze roos4 --lefschetz --seed 7", "family --m 12"}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out) << args;
  }
  auto x = run("analyze cm-m2 --lefschetz --seed 1"), y = run("analyze cm-m2 --lefschetz --seed 2");
  EXPECT_NE(x.out, y.out);
}

TEST(Cli, FieldsGiveIdenticalBettiTables) {
  for (const char* ref : {"roos4", "cm-m2", "cm-m3", "roos-alpha-2", "roos-alpha-3", "stanley"}) {
    auto q = run_json(std::string("analyze ") + ref + " --betti --field q");
    auto p = run_json(std::string("analyze ") + ref + " --betti --field fp:32003");
    EXPECT_EQ(q["betti_table"], p["betti_table"]) << ref;
    EXPECT_EQ(q["input"]["field"], "q");
    EXPECT_NE(q["input"]["hash"], p["input"]["hash"]);
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("analyze no-such-family").status, 2);
  EXPECT_EQ(run("analyze roos4 --field fp:4").status, 2);
  EXPECT_EQ(run("build").status, 2);
  EXPECT_EQ(run("build --family cm --m 1").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);

  auto bad = scratch() / "not_artinian.txt";
  std::ofstream(bad) << "vars: x, y\nfield: q\nx^2\n";
  EXPECT_EQ(run("analyze " + bad.string()).status, 2);

  auto inhom = scratch() / "inhomogeneous.txt";
  std::ofstream(inhom) << "vars: x\nfield: q\nx^2+x\n";
  EXPECT_EQ(run("analyze " + inhom.string()).status, 2);

  // more variables than the monomial representation holds
  auto wide = scratch() / "wide.txt";
  {
    std::ofstream out(wide);
    out << "vars: ";
    for (int i = 1; i <= 33; ++i) out << (i > 1 ? ", " : "") << "x" << i;
    out << "\nfield: fp:32003\n";
    for (int i = 1; i <= 33; ++i) out << "x" << i << "^2\n";
  }
  EXPECT_EQ(run("analyze " + wide.string()).status, 3);
}

TEST(Cli, ReproduceExitStatus) {
  auto ok = run("reproduce --only 1 --only 3");
  EXPECT_EQ(ok.status, 0);
  EXPECT_NE(ok.out.find("criterion  1: PASS"), std::string::npos);
  EXPECT_NE(ok.out.find("criterion  3: PASS"), std::string::npos);
  // the printed m = 7 h-vector disagrees with the closed form, so this one fails
  auto six = run("reproduce --only 6");
  EXPECT_EQ(six.status, 4);
  EXPECT_NE(six.out.find("failed m7_h_vector"), std::string::npos);
}
