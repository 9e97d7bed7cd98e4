#include "bclocal/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "bclocal/bc_algebra.hpp"
#include "bclocal/descriptor.hpp"
#include "bclocal/induction.hpp"
#include "bclocal/ktheory.hpp"
#include "bclocal/prim.hpp"

namespace bclocal {

using nlohmann::json;

namespace {

json level_json(const LevelIndex& L) { return json{{"n", L.n}, {"m", L.m}}; }

// degree <= 2 monomial family over the two basic functions
std::vector<Monomial<double>> residual_family(const LevelContext& C) {
  std::vector<Monomial<double>> fam;
  std::vector<RealFunction> fs = {constant_function(C, 1.0), indicator_stratum<double>(C, 0)};
  for (const auto& f : fs)
    for (int j = 0; j <= 1; ++j)
      for (bool adj : {false, true}) {
        Monomial<double> mono;
        mono.f = f;
        mono.j = j;
        mono.adjoint = adj;
        fam.push_back(mono);
      }
  return fam;
}

} // namespace

json levels_report(const RunConfig& cfg) {
  LocalFieldSpec F = parse_local_field(cfg.field);
  json rep;
  rep["command"] = "levels";
  rep["claim"] = "|Y(n,m)| = n*q^m = sum over k<=m of |G(n,m-k)|";
  rep["field"] = field_descriptor(F);
  rep["columns"] = json::array({"n", "m", "total", "strata", "free", "counts_match"});
  rep["rows"] = json::array();
  for (const LevelIndex& L : parse_levels(cfg.levels)) {
    LevelContext C(F, L, cfg.guards);
    std::vector<StratumSize> strata = C.orbit_decompose();
    BalancingReport bal = C.balancing_free_check();
    long long total = 0;
    std::string sizes;
    for (const auto& s : strata) {
      total += s.size;
      if (!sizes.empty()) sizes += "|";
      sizes += std::to_string(s.size);
    }
    require(total == C.total_points(), Errc::BadTarget, "stratum sizes fail to add up");
    rep["rows"].push_back(json::array(
        {L.n, L.m, total, sizes, bal.free_ok, bal.count_matches}));
  }
  return rep;
}

json kms_report(const RunConfig& cfg) {
  LocalFieldSpec F = parse_local_field(cfg.field);
  std::vector<LevelIndex> levels = parse_levels(cfg.levels);
  BetaList bl = parse_beta_list(cfg.beta);
  json rep;
  rep["command"] = "kms";
  rep["claim"] =
      "Z(beta) = (1-q^(-beta))^(-1); phi(f) = (1-q^(-beta)) sum_k q^(-k*beta) f(k.w)";
  rep["field"] = field_descriptor(F);
  rep["columns"] = json::array({"beta", "truncated_Z", "exact_Z", "bound", "max_kms_residual",
                                "max_gibbs_delta", "galois_ok"});
  rep["rows"] = json::array();

  for (double beta : bl.values) {
    PartitionValues pv = partition_function(F.q, beta, cfg.N);
    double max_res = 0, max_gib = 0;
    bool galois_ok = true;
    for (const LevelIndex& L : levels) {
      LevelContext C(F, L, cfg.guards);
      LevelPoint w = base_point(C, 0);
      for (const auto& a : residual_family(C))
        for (const auto& b : residual_family(C))
          max_res = std::max(max_res, kms_residual(C, a, b, beta, (int)cfg.N, w));
      for (int k = 0; k <= L.m; ++k) {
        RealFunction f = indicator_stratum<double>(C, k);
        double t = std::pow((double)F.q, -beta);
        double gib = gibbs_expectation(t, represent_diag(C, f, w, (int)cfg.N));
        max_gib = std::max(max_gib, std::abs(gib - kms_eval(C, f, beta, w)));
      }
      std::set<std::vector<Rational>> orbit;
      for (long long gi = 0; gi < C.group_size(L.m); ++gi)
        orbit.insert(
            galois_translate(C, dirac_measure(C, 0), C.group_at(L.m, gi)).weights);
      if ((long long)orbit.size() != C.group_size(L.m)) galois_ok = false;
    }
    rep["rows"].push_back(
        json::array({beta, pv.truncated, pv.exact, pv.bound, max_res, max_gib, galois_ok}));
  }
  if (bl.infinity) {
    bool galois_ok = true;
    json inf_tables = json::array();
    for (const LevelIndex& L : levels) {
      LevelContext C(F, L, cfg.guards);
      KMSState st = state_infty_from_measure(C, uniform_measure(C));
      json vals = json::array();
      for (int k = 0; k <= L.m; ++k)
        vals.push_back(eval_state(C, st, indicator_stratum<double>(C, k)));
      inf_tables.push_back(json{{"level", level_json(L)}, {"stratum_masses", vals}});
    }
    // at beta = infinity the trace weight collapses onto the vacuum slot
    rep["rows"].push_back(json::array({"inf", 1.0, 1.0, 0.0, 0.0, 0.0, galois_ok}));
    rep["infinity"] = inf_tables;
  }
  return rep;
}

json ktheory_report(const RunConfig& cfg) {
  LocalFieldSpec F = parse_local_field(cfg.field);
  json rep;
  rep["command"] = "ktheory";
  rep["claim"] = "K0 = Z^(r-1) with r = |G(n,m)|; ker(1-S) = 0 on every window";
  rep["field"] = field_descriptor(F);
  rep["columns"] =
      json::array({"n", "m", "r", "rank", "k1_kernel_rank", "stabilized", "projection_ok"});
  rep["rows"] = json::array();
  rep["details"] = json::array();
  for (const LevelIndex& L : parse_levels(cfg.levels)) {
    LevelContext C(F, L, cfg.guards);
    K0Report k0 = k0_quotient_report(C);
    PVReport pv = pv_window_check(C, L.m + 2);
    rep["rows"].push_back(json::array(
        {L.n, L.m, k0.r, k0.rank, pv.kernel_rank, pv.stabilized, k0.shift_projection_ok}));
    rep["details"].push_back(json{{"level", level_json(L)},
                                  {"rank", k0.rank},
                                  {"torsion", k0.torsion},
                                  {"k1_kernel_rank", pv.kernel_rank},
                                  {"stabilized", pv.stabilized},
                                  {"model_N", k0.model_N},
                                  {"window", pv.window},
                                  {"fiber", pv.fiber}});
  }
  return rep;
}

json prim_space_report(const RunConfig& cfg) {
  LocalFieldSpec F = parse_local_field(cfg.field);
  json rep;
  rep["command"] = "prim";
  rep["claim"] = "classes = G(n,m) + zero; zero class inside every closure";
  rep["field"] = field_descriptor(F);
  rep["columns"] = json::array(
      {"n", "m", "labels", "non_specializing", "zero_universal", "reflexive", "transitive"});
  rep["rows"] = json::array();
  for (const LevelIndex& L : parse_levels(cfg.levels)) {
    LevelContext C(F, L, cfg.guards);
    long long labels = quasi_orbit_label_count(C);
    SpecializationTable T = prim_report(C);
    require(labels == (long long)T.labels.size(), Errc::BadTarget, "label counts disagree");
    rep["rows"].push_back(json::array(
        {L.n, L.m, labels, T.non_specializing, T.zero_universal, T.reflexive, T.transitive}));
  }
  return rep;
}

json induce_report(const RunConfig& cfg) {
  NumberFieldSpec K = parse_global_field(cfg.global_field);
  BetaList bl = parse_beta_list(cfg.beta);
  json rep;
  rep["command"] = "induce";
  rep["claim"] = "Phi(1) = zeta_K(beta)*(1-p^(-f*beta)); divergent for beta <= 1";
  rep["global_field"] = K.label;
  rep["p"] = cfg.p;
  rep["columns"] = json::array({"beta", "partial", "tail_bound", "induced_mass"});
  rep["rows"] = json::array();
  json witnesses = json::array();
  for (double beta : bl.values) {
    if (beta > 1) {
      PartialZeta z = zeta_partial(K, beta, cfg.B);
      InducedMass m = induced_partition(K, cfg.p, beta, cfg.B);
      rep["rows"].push_back(json::array({beta, z.partial, z.tail_bound, m.value}));
    } else {
      DivergenceWitness w = divergence_witness(K, beta, 10.0);
      witnesses.push_back(
          json{{"beta", beta}, {"target", 10.0}, {"bound", w.bound}, {"partial", w.partial}});
    }
  }
  if (!witnesses.empty()) rep["divergence"] = witnesses;
  return rep;
}

json all_report(const RunConfig& cfg) {
  json rep;
  rep["command"] = "all";
  rep["config"] = json{{"field", cfg.field},   {"levels", cfg.levels}, {"beta", cfg.beta},
                       {"N", cfg.N},           {"B", cfg.B},           {"global_field", cfg.global_field},
                       {"p", cfg.p}};
  rep["sections"] = json{{"levels", levels_report(cfg)},
                         {"kms", kms_report(cfg)},
                         {"ktheory", ktheory_report(cfg)},
                         {"prim", prim_space_report(cfg)},
                         {"induce", induce_report(cfg)}};
  return rep;
}

namespace {

std::string cell_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string table_csv(const json& rep) {
  std::string out;
  for (size_t i = 0; i < rep["columns"].size(); ++i)
    out += (i ? "," : "") + rep["columns"][i].get<std::string>();
  out += "\n";
  for (const auto& row : rep["rows"]) {
    for (size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + cell_text(row[i]);
    out += "\n";
  }
  return out;
}

std::string table_markdown(const json& rep) {
  std::string out = "|";
  for (const auto& c : rep["columns"]) out += " " + c.get<std::string>() + " |";
  out += "\n|";
  for (size_t i = 0; i < rep["columns"].size(); ++i) out += " --- |";
  out += "\n";
  for (const auto& row : rep["rows"]) {
    out += "|";
    for (const auto& v : row) out += " " + cell_text(v) + " |";
    out += "\n";
  }
  return out;
}

} // namespace

std::string render_report(const json& rep, const std::string& format) {
  require(format == "json" || format == "csv" || format == "markdown", Errc::BadDescriptor,
          "format must be json, csv, or markdown");
  if (format == "json") return rep.dump(2) + "\n";
  std::string out;
  if (rep.contains("sections")) {
    for (auto& [name, section] : rep["sections"].items()) {
      if (format == "csv")
        out += "# " + name + "\n" + table_csv(section);
      else
        out += "## " + name + "\n\n" + table_markdown(section) + "\n";
    }
    return out;
  }
  return format == "csv" ? table_csv(rep) : table_markdown(rep);
}

} // namespace bclocal
