#pragma once

// JSON analysis reports. Keys come out sorted (nlohmann::json is std::map
// backed), and every number is wrapped as {value, provenance} where provenance
// is computed, formula or paper-regression.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gor/artinian.hpp"
#include "gor/constructions.hpp"
#include "gor/homology.hpp"
#include "gor/ideal_file.hpp"
#include "gor/idealization.hpp"

namespace gor {

inline constexpr const char* kEngineVersion = "gor 0.1.0";

using json = nlohmann::json;

enum class Provenance { computed, formula, paper_regression };

inline const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::computed: return "computed";
    case Provenance::formula: return "formula";
    case Provenance::paper_regression: return "paper-regression";
  }
  return "";
}

inline json tagged(json value, Provenance p = Provenance::computed) {
  return json{{"value", std::move(value)}, {"provenance", provenance_name(p)}};
}

inline json bigint_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();  // beyond 64 bits: decimal string
}

inline json bigints_json(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(bigint_json(x));
  return a;
}

inline json betti_json(const BettiTable& B) {
  json rows = json::array();
  for (const auto& [ij, v] : B.beta) rows.push_back({{"i", ij.first}, {"j", ij.second}, {"value", v}});
  return rows;
}

inline json t_values_json(const std::vector<std::optional<int>>& t) {
  json a = json::array();
  for (const auto& x : t) a.push_back(x ? json(*x) : json(nullptr));
  return a;
}

inline json pairs_json(const std::vector<std::pair<int, int>>& v) {
  json a = json::array();
  for (const auto& [x, y] : v) a.push_back({x, y});
  return a;
}

inline json profile_json(const TorProfile& P) {
  json steps = json::array();
  for (int s = 0; s <= P.steps; ++s) {
    json degs = json::array();
    for (const auto& [d, c] : P.degrees[s]) degs.push_back({{"degree", d}, {"count", c}});
    steps.push_back({{"step", s}, {"generators", degs}, {"complete", static_cast<bool>(P.complete[s])}});
  }
  return steps;
}

inline json input_json(const IdealFile& f, const std::optional<FamilySpec>& fam) {
  json j{{"vars", f.vars}, {"field", f.field.str()}, {"generators", f.generators}, {"hash", hex64(f.hash())}};
  if (fam) j["family"] = fam->name();
  return j;
}

struct AnalyzeOptions {
  bool betti = false;
  bool subadditivity = false;
  bool idealize = false;
  std::optional<int> koszul_steps;
  std::optional<int> degree_cap;
  bool lefschetz = false;
  int lefschetz_trials = 3;
  std::uint64_t seed = 0;
  bool timing = false;
  int jobs = 1;
};

namespace detail {
class Stopwatch {
 public:
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

/// Resolution of k with enough cap to see the first nonlinear generator in
/// degree steps + 1 at the last step.
template <class F>
json koszul_section(const ArtinianAlgebra<F>& A, int steps, std::optional<int> cap, int jobs, const char* over) {
  ResolveOptions o;
  o.steps = steps;
  o.degree_cap = cap ? *cap : steps + 2;
  o.jobs = jobs;
  auto P = resolve_k_over_R(A, o);
  int ls = linear_steps(P);
  return json{{"over", over},
              {"steps", steps},
              {"degree_cap", P.degree_cap},
              {"linear_steps", tagged(ls)},
              // linear through every probed step: only a lower bound on the linear range
              {"koszul_within_probe", ls == steps},
              {"profile", profile_json(P)}};
}
}  // namespace detail

template <class F>
json analyze(const IdealFile& file, const F& K, const AnalyzeOptions& opt, const std::optional<FamilySpec>& fam = {}) {
  detail::Stopwatch clock;
  json timing;
  json r;
  r["engine"] = kEngineVersion;
  r["input"] = input_json(file, fam);

  auto I = file.ideal(K);
  auto R = quotient_algebra(I);
  auto h = R.hilbert();
  r["hilbert_function"] = tagged(h);
  r["h_vector"] = tagged(h);
  r["codim"] = tagged(R.dim_at(1));
  r["socle_degree"] = tagged(R.top());
  if (fam && fam->family == Family::cm) {
    std::vector<BigInt> f;
    for (int i = 0; i <= fam->m; ++i) f.push_back(cm_hilbert(fam->m, i));
    r["hilbert_function_closed_form"] = tagged(bigints_json(f), Provenance::formula);
  }
  auto tl = type_and_level(R);
  r["type"] = tagged(tl.type);
  r["level"] = tagged(tl.level);
  r["gorenstein"] = tagged(tl.type == 1);
  r["superlevel"] = tagged(is_superlevel(R));
  timing["basics"] = clock.lap();

  if (opt.betti || opt.subadditivity) {
    KoszulOptions ko;
    ko.jobs = opt.jobs;
    auto B = betti_over_S(R, ko);
    auto t = t_values(B);
    if (opt.betti) {
      r["betti_table"] = tagged(betti_json(B));
      r["regularity"] = tagged(regularity(B));
    }
    r["t_values"] = tagged(t_values_json(t));
    if (opt.subadditivity) r["subadditivity_violations"] = tagged(pairs_json(subadditivity_report(t)));
    timing["betti"] = clock.lap();
  }

  if (opt.idealize) {
    auto res = idealize(I);
    VerifyOptions vo;
    vo.jobs = opt.jobs;
    auto rep = verify_idealization(res, I, vo);
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    std::vector<std::string> gens;
    for (const auto& g : res.ideal.generators) gens.push_back(g.to_string());
    json id{{"vars", res.ideal.ring->names()},
            {"generators", gens},
            {"codim", tagged(rep.codim_Rt)},
            {"regularity", tagged(rep.reg_Rt)},
            {"h_vector", tagged(rep.hf_Rt)},
            {"quadratic", tagged(rep.quadratic)},
            {"superlevel_R", tagged(rep.superlevel)},
            {"checks", checks},
            {"all_checks_passed", rep.passed()}};
    if (rep.betti_Rt) id["betti_table"] = tagged(betti_json(*rep.betti_Rt));
    timing["idealize"] = clock.lap();
    if (opt.koszul_steps) {
      auto Rt = quotient_algebra(res.ideal);
      id["koszul"] = detail::koszul_section(Rt, *opt.koszul_steps, opt.degree_cap, opt.jobs, "idealization");
      timing["koszul"] = clock.lap();
    }
    r["idealization"] = id;
  } else if (opt.koszul_steps) {
    r["koszul"] = detail::koszul_section(R, *opt.koszul_steps, opt.degree_cap, opt.jobs, "R");
    timing["koszul"] = clock.lap();
  }

  if (opt.lefschetz) {
    auto L = lefschetz_check(R, LefschetzMode::weak, opt.lefschetz_trials, opt.seed);
    json trials = json::array();
    for (const auto& t : L.trials) {
      json maps = json::array();
      for (const auto& m : t.maps) maps.push_back({{"from", m.from}, {"rank", m.rank}, {"expected", m.expected}});
      trials.push_back({{"coefficients", t.coefficients}, {"maps", maps}, {"passes", t.passes}});
    }
    r["lefschetz"] = {{"mode", "weak"},
                      {"seed", opt.seed},
                      {"trials", trials},
                      {"holds_for_some", tagged(L.holds_for_some)},
                      {"wlp_impossible", tagged(L.wlp_impossible)}};
    if (L.unimodality_violation) r["lefschetz"]["unimodality_violation"] = tagged(*L.unimodality_violation);
    timing["lefschetz"] = clock.lap();
  }

  if (opt.timing) r["timing_seconds"] = timing;
  return r;
}

/// Closed-form data for a cm family member; no Groebner bases involved.
inline json family_formulas(long m) {
  json r;
  r["engine"] = kEngineVersion;
  r["family"] = "cm-m" + std::to_string(m);
  std::vector<BigInt> hR;
  for (long i = 0; i <= m; ++i) hR.push_back(cm_hilbert(m, i));
  auto hA = idealized_h_vector(m);
  r["h_vector_R"] = tagged(bigints_json(hR), Provenance::formula);
  r["h_vector_idealization"] = tagged(bigints_json(hA), Provenance::formula);
  auto u = unimodality(hA);
  r["unimodal"] = tagged(u.unimodal, Provenance::formula);
  if (u.violation) r["unimodality_violation"] = tagged(*u.violation, Provenance::formula);
  r["wlp_impossible"] = tagged(!u.unimodal, Provenance::formula);
  if (m >= 7) {
    auto w = inequality_witness(m);
    r["witness"] = {{"ratio", tagged(w.ratio.get_str(), Provenance::formula)},
                    {"ratio_exceeds_one", tagged(w.ratio_exceeds_one, Provenance::formula)},
                    {"valley_2_3", tagged(w.valley_2_3, Provenance::formula)},
                    {"non_unimodal", tagged(w.non_unimodal, Provenance::formula)},
                    {"passes", w.passes}};
  }
  return r;
}

}  // namespace gor
