// gor: build, analyze and reproduce. Exit codes: 0 ok, 2 user error,
// 3 infeasible size, 4 verification failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "gor/corpus.hpp"
#include "gor/ideal_file.hpp"
#include "gor/report.hpp"

namespace {

using gor::json;

struct Common {
  std::string field;
  int jobs = 1;
  std::string json_path;
};

void emit_json(const json& j, const std::string& path) {
  std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gor::UserError("cannot write '" + path + "'");
  out << text;
}

void emit_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gor::UserError("cannot write '" + path + "'");
  out << text;
}

struct Input {
  gor::IdealFile file;
  std::optional<gor::FamilySpec> family;
};

// An existing path is read as an ideal file; anything else is a family reference.
Input load(const std::string& in, const std::string& field) {
  Input r;
  if (std::filesystem::exists(in)) {
    r.file = gor::read_ideal_file(in);
    if (!field.empty()) r.file.field = gor::FieldSpec::parse(field);
  } else {
    auto spec = gor::parse_family_ref(in, field.empty() ? gor::FieldSpec{} : gor::FieldSpec::parse(field));
    r.file = gor::family_file(spec);
    r.family = spec;
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Artinian algebras, idealizations and their homology"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* c) {
    c->add_option("--field", common.field, "q or fp:<p> (default fp:32003, or the file's field)");
    c->add_option("--jobs", common.jobs, "worker threads")->check(CLI::Range(1, 256));
    c->add_option("--json", common.json_path, "write the JSON report here instead of stdout");
  };

  // build
  auto* build = app.add_subcommand("build", "write the ideal file of a family member");
  std::string fam_name, out_path, degrees;
  int m = 0, alpha = 0;
  build->add_option("--family", fam_name, "roos4, cm, roos-alpha, stanley, ci")->required();
  build->add_option("--m", m, "cm parameter");
  build->add_option("--alpha", alpha, "roos-alpha parameter");
  build->add_option("--degrees", degrees, "ci degrees, e.g. 2,2,3");
  build->add_option("--out", out_path, "output file (default stdout)");
  build->add_option("--field", common.field, "q or fp:<p>");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "report on an ideal file or family reference");
  std::string input;
  gor::AnalyzeOptions aopt;
  int koszul_steps = -1, degree_cap = -1;
  analyze->add_option("input", input, "ideal file or family reference (roos4, cm-m3, roos-alpha-2, stanley, ci-2-2-2)")
      ->required();
  analyze->add_flag("--betti", aopt.betti, "Betti table over the polynomial ring");
  analyze->add_flag("--subadditivity", aopt.subadditivity, "t-values and subadditivity violations");
  analyze->add_flag("--idealize", aopt.idealize, "idealization and its checks");
  analyze->add_option("--koszul-steps", koszul_steps, "resolve k this many steps (over the idealization with --idealize)")
      ->check(CLI::Range(1, 64));
  analyze->add_option("--steps", koszul_steps, "alias of --koszul-steps")->check(CLI::Range(1, 64));
  analyze->add_option("--degree-cap", degree_cap, "internal degree cap for the resolution (default steps + 2)")
      ->check(CLI::Range(0, 1024));
  analyze->add_flag("--lefschetz", aopt.lefschetz, "weak Lefschetz trials with random linear forms");
  analyze->add_option("--seed", aopt.seed, "random seed for Lefschetz trials");
  analyze->add_flag("--timing", aopt.timing, "include wall-clock timings (breaks byte-identical output)");
  add_common(analyze);

  // idealize
  auto* ideal = app.add_subcommand("idealize", "write the ideal of the idealization");
  std::string id_input, id_out;
  ideal->add_option("input", id_input, "ideal file or family reference")->required();
  ideal->add_option("--out", id_out, "output ideal file (default stdout)");
  add_common(ideal);

  // koszul
  auto* koszul = app.add_subcommand("koszul", "resolve the residue field over R");
  std::string k_input;
  int k_steps = 3, k_cap = -1;
  bool k_idealize = false;
  koszul->add_option("input", k_input, "ideal file or family reference")->required();
  koszul->add_option("--steps", k_steps, "resolution steps")->check(CLI::Range(1, 64));
  koszul->add_option("--degree-cap", k_cap, "internal degree cap (default steps + 2)")->check(CLI::Range(0, 1024));
  koszul->add_flag("--idealize", k_idealize, "resolve over the idealization instead");
  add_common(koszul);

  // family
  auto* family = app.add_subcommand("family", "closed-form data for the cm family (no Groebner bases)");
  long fm = 0;
  family->add_option("--m", fm, "cm parameter")->required()->check(CLI::Range(2L, 100000L));
  family->add_option("--json", common.json_path, "write the JSON report here instead of stdout");

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "run the frozen regression corpus");
  std::vector<int> only;
  reproduce->add_option("--only", only, "criterion numbers to run (default all)")->check(CLI::Range(1, 10));
  reproduce->add_option("--jobs", common.jobs, "worker threads")->check(CLI::Range(1, 256));
  reproduce->add_option("--json", common.json_path, "also write the results as JSON");

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      app.exit(e);
      return 2;
    }

    if (*build) {
      std::string ref = fam_name;
      if (fam_name == "cm") ref = "cm-m" + std::to_string(m);
      else if (fam_name == "roos-alpha") ref = "roos-alpha-" + std::to_string(alpha);
      else if (fam_name == "ci") {
        std::string d = degrees;
        std::replace(d.begin(), d.end(), ',', '-');
        ref = "ci-" + d;
      }
      auto spec = gor::parse_family_ref(ref, common.field.empty() ? gor::FieldSpec{} : gor::FieldSpec::parse(common.field));
      auto f = gor::family_file(spec);
      if (out_path.empty()) std::cout << f.text();
      else gor::write_ideal_file(out_path, f);
      return 0;
    }

    if (*analyze) {
      auto in = load(input, common.field);
      if (koszul_steps > 0) aopt.koszul_steps = koszul_steps;
      if (degree_cap >= 0) aopt.degree_cap = degree_cap;
      aopt.jobs = common.jobs;
      auto report = gor::with_field(in.file.field, [&](const auto& K) { return gor::analyze(in.file, K, aopt, in.family); });
      emit_json(report, common.json_path);
      return 0;
    }

    if (*ideal) {
      auto in = load(id_input, common.field);
      gor::with_field(in.file.field, [&](const auto& K) {
        auto I = in.file.ideal(K);
        auto res = gor::idealize(I);
        gor::IdealFile f;
        f.vars = res.ideal.ring->names();
        f.field = in.file.field;
        for (const auto& g : res.ideal.generators) f.generators.push_back(g.to_string());
        emit_text(f.text(), id_out);
        if (!common.json_path.empty()) {
          gor::VerifyOptions vo;
          vo.jobs = common.jobs;
          auto rep = gor::verify_idealization(res, I, vo);
          json checks = json::array();
          for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
          json tags = json::array();
          for (auto t : res.tags) tags.push_back(gor::tag_name(t));
          emit_json({{"engine", gor::kEngineVersion},
                     {"input", gor::input_json(in.file, in.family)},
                     {"output", {{"vars", f.vars}, {"generators", f.generators}, {"hash", gor::hex64(f.hash())}, {"tags", tags}}},
                     {"type_R", gor::tagged(res.type)},
                     {"checks", checks}},
                    common.json_path);
          if (!rep.passed()) throw gor::VerificationFailure("idealization checks failed");
        }
      });
      return 0;
    }

    if (*koszul) {
      auto in = load(k_input, common.field);
      auto report = gor::with_field(in.file.field, [&](const auto& K) {
        auto I = in.file.ideal(K);
        auto A = gor::quotient_algebra(k_idealize ? gor::idealize(I).ideal : I);
        json r = gor::detail::koszul_section(A, k_steps, k_cap >= 0 ? std::optional<int>(k_cap) : std::nullopt, common.jobs,
                                             k_idealize ? "idealization" : "R");
        r["engine"] = gor::kEngineVersion;
        r["input"] = gor::input_json(in.file, in.family);
        return r;
      });
      emit_json(report, common.json_path);
      return 0;
    }

    if (*family) {
      emit_json(gor::family_formulas(fm), common.json_path);
      return 0;
    }

    if (*reproduce) {
      auto results = gor::run_corpus(std::set<int>(only.begin(), only.end()), common.jobs);
      bool all = true;
      for (const auto& r : results) {
        all = all && r.passed();
        std::printf("criterion %2d: %s  %s  (%.2f s)\n", r.id, r.passed() ? "PASS" : "FAIL", r.title.c_str(), r.seconds);
        for (const auto& c : r.checks)
          if (!c.passed)
            std::printf("    failed %s: expected %s, got %s\n", c.name.c_str(), c.expected.dump().c_str(), c.actual.dump().c_str());
      }
      if (!common.json_path.empty()) emit_json(gor::corpus_json(results), common.json_path);
      return all ? 0 : 4;
    }
  } catch (const gor::UserError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const gor::InfeasibleSize& e) {
    std::fprintf(stderr, "infeasible: %s\n", e.what());
    return 3;
  } catch (const gor::VerificationFailure& e) {
    std::fprintf(stderr, "verification failure: %s\n", e.what());
    return 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 4;
  }
  return 0;
}
