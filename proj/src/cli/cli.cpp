#include <klbt/cli/cli.hpp>

#include <klbt/btalg/kl_lift.hpp>
#include <klbt/btalg/model.hpp>
#include <klbt/btalg/rank.hpp>
#include <klbt/coxeter/dimension.hpp>
#include <klbt/finite_model/finite_model.hpp>
#include <klbt/hecke/hecke.hpp>
#include <klbt/monodromic/monodromic.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace klbt::cli {

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::Dim: return "dim";
    case Command::Verify: return "verify";
    case Command::KlLift: return "kl-lift";
    case Command::FiniteModel: return "finite-model";
    case Command::DimRank: return "dim-rank";
  }
  return "?";
}

std::uint64_t field_size(const RunConfig& c) {
  std::uint64_t Q = 1;
  for (int i = 0; i < c.k; ++i) {
    Q *= c.q;
    if (Q > 1u << 20) break;
  }
  return Q;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

void validate_field(const RunConfig& c) {
  require(c.q >= 2 && c.k >= 1, "--q must be >= 2 and --k >= 1");
  const std::uint64_t Q = field_size(c);
  require(Q <= fm::FiniteField::kMaxSize, "q^k must be at most 16");
  try {
    (void)fm::FiniteField::get(static_cast<std::uint32_t>(Q));
  } catch (const std::invalid_argument&) {
    throw UsageError("q^k must be a prime power");
  }
  std::uint32_t t = c.q, p = fm::FiniteField::get(static_cast<std::uint32_t>(Q))->characteristic();
  while (t % p == 0) t /= p;
  require(t == 1, "--q must be a prime power");
}

Json config_json(const RunConfig& c) {
  Json j;
  j["command"] = command_name(c.command);
  j["n"] = c.n;
  switch (c.command) {
    case Command::Dim: j["mode"] = c.mode; break;
    case Command::DimRank:
      j["mode"] = c.mode;
      j["seed"] = c.seed;
      j["points"] = c.points;
      break;
    case Command::Verify:
      j["suite"] = c.suite;
      j["q"] = c.q;
      j["k"] = c.k;
      j["seed"] = c.seed;
      break;
    case Command::FiniteModel:
      j["q"] = c.q;
      j["k"] = c.k;
      break;
    case Command::KlLift: break;
  }
  return j;
}

Json check_json(const std::string& suite, const std::string& name, bool pass, std::size_t instances) {
  Json j;
  j["suite"] = suite;
  j["name"] = name;
  j["pass"] = pass;
  j["instances"] = instances;
  return j;
}

std::string csv_field(const Json& v) {
  std::string s;
  if (v.is_string())
    s = v.get<std::string>();
  else if (v.is_null())
    s = "";
  else
    s = v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::string csv_table(const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (const auto& [key, val] : r.items())
      if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
  std::ostringstream os;
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) os << ",";
      if (r.contains(cols[i])) os << csv_field(r[cols[i]]);
    }
    os << "\n";
  }
  return os.str();
}

// ------------------------------------------------------------------ suites

void add_checks(Json& checks, bool& pass, const std::string& suite, const std::vector<RelationCheck>& cs) {
  for (const auto& c : cs) {
    checks.push_back(check_json(suite, c.name, c.pass, c.instances));
    pass = pass && c.pass;
  }
}

Json suite_btalg(const RunConfig& c, bool& pass) {
  require(c.n >= 1 && c.n <= 3, "verify --suite btalg requires 1 <= n <= 3");
  Json out;
  Json checks = Json::array();
  const BTModel M(c.n);
  add_checks(checks, pass, "btalg", verify_presentation(M, c.seed));
  const auto jr = jr_decomposition(M, c.seed, 20);
  const bool direct = jr.sum_of_dims == jr.rank_of_sum && jr.rank_of_sum == jr.c_dimension;
  checks.push_back(check_json("btalg", "jr_direct_sum", direct, 1));
  checks.push_back(check_json("btalg", "jr_words_inside", jr.words_inside, jr.words_tested));
  pass = pass && direct && jr.words_inside;
  out["checks"] = checks;
  Json d;
  d["basis_size"] = M.dim();
  d["jr_sum_of_dims"] = jr.sum_of_dims;
  d["jr_rank_of_sum"] = jr.rank_of_sum;
  d["c_dimension"] = jr.c_dimension;
  out["details"] = d;
  return out;
}

Json suite_hecke(const RunConfig& c, bool& pass) {
  require(c.n >= 1 && c.n <= 4, "verify --suite hecke requires 1 <= n <= 4");
  Json out;
  Json checks = Json::array();
  for (const auto& h : verify_hecke(c.n)) {
    checks.push_back(check_json("hecke", h.name, h.pass, h.instances));
    pass = pass && h.pass;
  }
  out["checks"] = checks;
  return out;
}

Json suite_kl(const RunConfig& c, bool& pass) {
  require(c.n >= 1 && c.n <= 3, "verify --suite kl requires 1 <= n <= 3");
  const BTModel M(c.n);
  KLLifter lifter(M);
  const auto results = verify_kl_lift(lifter);
  std::size_t bar = 0, pi = 0, words = 0, indep = 0;
  Json dependent = Json::array();
  for (const auto& r : results) {
    bar += r.bar_invariant;
    words += r.words_match;
    indep += r.descent_independent;
    const bool pi_ok = pi_hecke(lifter.lift(r.w).words, c.n) == canonical_basis(lifter.kl(), r.w);
    pi += pi_ok;
    if (!r.descent_independent) dependent.push_back(r.w.str());
  }
  const std::size_t total = results.size();
  Json checks = Json::array();
  checks.push_back(check_json("kl", "kl_bar_invariant", bar == total, total));
  checks.push_back(check_json("kl", "kl_pi_image", pi == total, total));
  checks.push_back(check_json("kl", "kl_words_match", words == total, total));
  checks.push_back(check_json("kl", "kl_descent_independent", indep == total, total));
  pass = pass && bar == total && pi == total && words == total && indep == total;
  Json out;
  out["checks"] = checks;
  Json d;
  d["elements"] = total;
  d["descent_dependent"] = dependent;
  out["details"] = d;
  return out;
}

Json crosscheck_json(const fm::CrosscheckReport& cr) {
  Json j;
  j["v"] = to_string(cr.v);
  j["pass"] = cr.pass;
  Json entries = Json::array();
  for (const auto& e : cr.entries) {
    Json x;
    x["theta"] = e.theta.str();
    x["s"] = e.s;
    x["in_w_circle"] = e.in_w_circle;
    x["proportional"] = e.proportional;
    x["scale"] = e.scale.str();
    x["scale_inverse"] = e.scale_inverse.str();
    x["gauss"] = e.gauss.str();
    x["gauss_norm"] = e.gauss_norm;
    x["pass"] = e.pass;
    entries.push_back(x);
  }
  j["entries"] = entries;
  return j;
}

Json suite_monodromic(const RunConfig& c, bool& pass) {
  require(c.n >= 1 && c.n <= 2, "verify --suite monodromic requires 1 <= n <= 2");
  validate_field(c);
  const auto Q = static_cast<std::uint32_t>(field_size(c));
  require(Q >= 2, "q^k must be at least 2");
  const std::uint32_t modulus = Q - 1;
  Json out;
  Json checks = Json::array();
  for (const auto& m : verify_ho_relations(c.n, modulus)) {
    checks.push_back(check_json("monodromic", m.name, m.pass, m.instances));
    pass = pass && m.pass;
  }
  const auto pc = pi_consistency(c.n, c.trials, c.seed, modulus);
  checks.push_back(check_json("monodromic", "pi_consistency", pc.pass, pc.pairs));
  pass = pass && pc.pass;
  Json d;
  d["modulus"] = modulus;
  d["pi_pairs"] = pc.pairs;
  d["pi_bt_equal"] = pc.bt_equal;
  d["pi_equal"] = pc.pi_equal;
  d["pi_characters"] = pc.characters;
  if (Q == 4) {
    const fm::FiniteModel FM(c.n, c.q, c.k, c.ceiling);
    const auto cr = fm::monodromic_crosscheck(FM);
    checks.push_back(check_json("monodromic", "pi_L_matches_finite_model", cr.pass, cr.entries.size()));
    pass = pass && cr.pass;
    d["crosscheck"] = crosscheck_json(cr);
  }
  out["checks"] = checks;
  out["details"] = d;
  return out;
}

Json finite_json(const fm::FiniteModel& M, bool& pass) {
  const auto rep = fm::verify_finite_model(M);
  Json out;
  Json checks = Json::array();
  for (const auto& ch : rep.checks) checks.push_back(check_json("finite", ch.name, ch.pass, ch.instances));
  std::size_t case_ok = 0;
  Json cases = Json::array();
  for (const auto& cv : rep.case_values) {
    case_ok += cv.pass;
    Json x;
    x["theta"] = cv.theta.str();
    x["s"] = cv.s;
    x["in_w_circle"] = cv.in_w_circle;
    x["cell_factor"] = cv.cell_factor.str();
    x["pass"] = cv.pass;
    cases.push_back(x);
  }
  checks.push_back(check_json("finite", "case_values", case_ok == rep.case_values.size(), rep.case_values.size()));
  checks.push_back(check_json("finite", "delta_in_epsilon_span", rep.delta.solved, rep.delta.coefficients.size()));
  pass = pass && rep.pass();
  Json d;
  d["points"] = rep.points;
  d["group_order"] = rep.group_order;
  d["case_values"] = cases;
  Json delta;
  delta["solved"] = rep.delta.solved;
  delta["uniform"] = rep.delta.uniform;
  Json coeffs = Json::array();
  for (const auto& [th, c] : rep.delta.coefficients) {
    Json x;
    x["theta"] = th.str();
    x["coefficient"] = c.str();
    coeffs.push_back(x);
  }
  delta["coefficients"] = coeffs;
  d["delta"] = delta;
  Json norm = Json::array();
  for (const auto& e : rep.normalization) {
    Json x;
    x["relation"] = e.relation;
    x["e_image"] = e.e_image;
    x["v2"] = e.v2;
    x["holds"] = e.holds;
    norm.push_back(x);
  }
  d["normalization"] = norm;
  if (M.Q() == 4 && M.n() <= 2) {
    const auto cr = fm::monodromic_crosscheck(M);
    checks.push_back(check_json("finite", "monodromic_crosscheck", cr.pass, cr.entries.size()));
    pass = pass && cr.pass;
    d["crosscheck"] = crosscheck_json(cr);
  }
  if (M.n() >= 2) {
    const auto w = fm::kl_descent_witness(M);
    Json x;
    x["zero"] = w.zero;
    x["nonzero_entries"] = w.nonzero_entries;
    d["kl_descent_witness"] = x;
  }
  out["checks"] = checks;
  out["details"] = d;
  return out;
}

Json suite_finite(const RunConfig& c, bool& pass) {
  require(c.n >= 1 && c.n <= 3, "finite model requires 1 <= n <= 3");
  validate_field(c);
  try {
    const fm::FiniteModel M(c.n, c.q, c.k, c.ceiling);
    return finite_json(M, pass);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

// ------------------------------------------------------------------ validation

void validate(const RunConfig& c) {
  require(c.threads >= 1, "--threads must be >= 1");
  require(c.format == "json" || c.format == "csv", "--format must be json or csv");
  switch (c.command) {
    case Command::Dim:
      require(c.n >= 0 && c.n <= kMaxAggregationModeN, "dim requires 0 <= n <= 50");
      require(c.mode == "auto" || c.mode == "subset" || c.mode == "aggregate",
              "dim --mode must be auto, subset or aggregate");
      require(c.mode != "subset" || c.n <= kMaxSubsetModeN, "subset mode requires n <= 20");
      break;
    case Command::DimRank:
      require(c.mode == "exact" || c.mode == "specialized", "dim-rank --mode must be exact or specialized");
      require(c.n >= 0 && c.n <= (c.mode == "exact" ? 3 : 4),
              "dim-rank requires n <= 3 (exact) or n <= 4 (specialized)");
      require(c.mode == "exact" || c.points >= 3, "specialized mode needs at least 3 points");
      break;
    case Command::Verify:
      require(c.suite == "btalg" || c.suite == "hecke" || c.suite == "kl" || c.suite == "monodromic" ||
                  c.suite == "finite",
              "--suite must be btalg, hecke, kl, monodromic or finite");
      require(c.trials >= 1, "--trials must be >= 1");
      break;
    case Command::KlLift: require(c.n >= 1 && c.n <= 3, "kl-lift requires 1 <= n <= 3"); break;
    case Command::FiniteModel:
      require(c.n >= 1 && c.n <= 3, "finite-model requires 1 <= n <= 3");
      validate_field(c);
      break;
  }
}

// ------------------------------------------------------------------ commands

Report cmd_dim(const RunConfig& c) {
  validate(c);
  const DimMode mode = c.mode == "subset" || (c.mode == "auto" && c.n <= kMaxSubsetModeN)
                           ? DimMode::SubsetEnumeration
                           : DimMode::PartitionAggregation;
  const auto table = dimension_table(c.n, mode);
  Report r;
  r.json = config_json(c);
  r.json["mode_used"] = to_string(mode);
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json x;
    x["I"] = row.subset.str();
    x["N_I"] = to_string(row.N);
    x["R_I"] = to_string(row.R);
    x["D_I"] = to_string(row.D);
    x["lambda"] = partition_str(row.lambda);
    x["multiplicity"] = to_string(row.multiplicity);
    x["contribution"] = to_string(BigInt(row.R * row.D));
    rows.push_back(x);
  }
  r.json["rows"] = rows;
  r.json["total"] = to_string(table.total);
  return r;
}

Report cmd_dim_rank(const RunConfig& c) {
  validate(c);
  const RankMode mode = c.mode == "exact" ? RankMode::Exact : RankMode::Specialized;
  const auto rep = c_dimension(c.n, mode, c.seed, c.points, c.threads);
  const BigInt formula = dim_C(c.n, DimMode::PartitionAggregation);
  Report r;
  r.json = config_json(c);
  r.json["dimension"] = rep.dimension;
  r.json["formula"] = to_string(formula);
  const bool match = BigInt(static_cast<unsigned long>(rep.dimension)) == formula;
  r.json["matches_formula"] = match;
  Json pts = Json::array();
  for (const auto& p : rep.points) {
    Json x;
    x["v0"] = to_string(p.v0);
    x["rank"] = p.rank;
    pts.push_back(x);
  }
  r.json["points"] = pts;
  r.json["points_agree"] = rep.points_agree;
  r.pass = match && rep.points_agree;
  return r;
}

Report cmd_verify(const RunConfig& c) {
  validate(c);
  Report r;
  r.json = config_json(c);
  bool pass = true;
  Json body;
  if (c.suite == "btalg") body = suite_btalg(c, pass);
  if (c.suite == "hecke") body = suite_hecke(c, pass);
  if (c.suite == "kl") body = suite_kl(c, pass);
  if (c.suite == "monodromic") body = suite_monodromic(c, pass);
  if (c.suite == "finite") body = suite_finite(c, pass);
  for (const auto& [key, val] : body.items()) r.json[key] = val;
  r.json["pass"] = pass;
  r.pass = pass;
  return r;
}

Report cmd_kl_lift(const RunConfig& c) {
  validate(c);
  const BTModel M(c.n);
  KLLifter lifter(M);
  const auto results = verify_kl_lift(lifter);
  Report r;
  r.json = config_json(c);
  Json records = Json::array();
  bool pass = true;
  for (const auto& chk : results) {
    const KLLift& lift = lifter.lift(chk.w);
    const bool pi_ok = pi_hecke(lift.words, c.n) == canonical_basis(lifter.kl(), chk.w);
    Json x;
    x["w"] = chk.w.str();
    x["length"] = chk.w.length();
    x["descent"] = lift.descent;
    x["bar_invariant"] = chk.bar_invariant;
    x["pi_image"] = pi_ok;
    x["words_match"] = chk.words_match;
    x["descent_independent"] = chk.descent_independent;
    Json terms = Json::array();
    for (const auto& [b, coeff] : lift.element.terms()) {
      Json t;
      t["partition"] = M.part(M.part_of(b)).str();
      t["permutation"] = M.perm(M.perm_of(b)).str();
      t["coefficient"] = coeff.str();
      terms.push_back(t);
    }
    x["terms"] = terms;
    Json words = Json::array();
    for (const auto& [w, coeff] : lift.words) {
      Json t;
      t["word"] = w;
      t["coefficient"] = coeff.str();
      words.push_back(t);
    }
    x["words"] = words;
    records.push_back(x);
    pass = pass && chk.bar_invariant && pi_ok && chk.words_match;
  }
  r.json["records"] = records;
  r.json["pass"] = pass;
  r.pass = pass;
  return r;
}

Report cmd_finite_model(const RunConfig& c) {
  validate(c);
  Report r;
  r.json = config_json(c);
  bool pass = true;
  const Json body = suite_finite(c, pass);
  for (const auto& [key, val] : body.items()) r.json[key] = val;
  r.json["pass"] = pass;
  r.pass = pass;
  return r;
}

Report dispatch(const RunConfig& c) {
  switch (c.command) {
    case Command::Dim: return cmd_dim(c);
    case Command::Verify: return cmd_verify(c);
    case Command::KlLift: return cmd_kl_lift(c);
    case Command::FiniteModel: return cmd_finite_model(c);
    case Command::DimRank: return cmd_dim_rank(c);
  }
  throw UsageError("unknown command");
}

// ------------------------------------------------------------------ output

std::string to_json_text(const Json& report) { return report.dump(2) + "\n"; }

std::string to_csv(const Json& report) {
  const std::string cmd = report.value("command", "");
  if (cmd == "dim") {
    Json rows = report["rows"];
    Json total;
    total["I"] = "total";
    total["contribution"] = report["total"];
    rows.push_back(total);
    return csv_table(rows);
  }
  if (cmd == "dim-rank") {
    Json rows = report["points"];
    if (rows.empty()) rows.push_back(Json::object());  // exact mode: no specializations
    for (auto& row : rows) {
      row["dimension"] = report["dimension"];
      row["formula"] = report["formula"];
    }
    return csv_table(rows);
  }
  if (cmd == "kl-lift") {
    Json rows = Json::array();
    for (const auto& rec : report["records"])
      for (const auto& t : rec["terms"]) {
        Json x;
        for (const char* key : {"w", "descent", "bar_invariant", "pi_image", "words_match", "descent_independent"})
          x[key] = rec[key];
        x["partition"] = t["partition"];
        x["permutation"] = t["permutation"];
        x["coefficient"] = t["coefficient"];
        rows.push_back(x);
      }
    return csv_table(rows);
  }
  // verify, finite-model: one row per check.
  return csv_table(report["checks"]);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"klbt: algebras of braids and ties, Kazhdan-Laumon lifts and finite models"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "rank n (group SL_{n+1}, Weyl group S_{n+1})");
    sub->add_option("--seed", cfg.seed, "seed for randomized trials");
    sub->add_option("--format", cfg.format, "output format: json or csv");
    sub->add_option("--out", cfg.out, "output file (default: standard output)");
    sub->add_option("--threads", cfg.threads, "worker thread cap");
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--q", cfg.q, "prime power q");
    sub->add_option("--k", cfg.k, "extension degree k (field F_{q^k})");
    sub->add_option("--ceiling", cfg.ceiling, "maximum |X| for the finite model");
  };
  auto* dim = app.add_subcommand("dim", "dimension table of C(v)");
  add_common(dim);
  dim->add_option("--mode", cfg.mode, "auto, subset or aggregate");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  add_field(verify);
  verify->add_option("--suite", cfg.suite, "btalg, hecke, kl, monodromic or finite")->required();
  verify->add_option("--trials", cfg.trials, "word pairs for pi_consistency");
  auto* kl = app.add_subcommand("kl-lift", "lifts of the Kazhdan-Lusztig basis into C(v)");
  add_common(kl);
  auto* finite = app.add_subcommand("finite-model", "finite basic affine space suite");
  add_common(finite);
  add_field(finite);
  auto* rank = app.add_subcommand("dim-rank", "dimension of C(v) by rank computation");
  add_common(rank);
  rank->add_option("--mode", cfg.mode, "exact or specialized");
  rank->add_option("--points", cfg.points, "number of specialization points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }
  if (dim->parsed()) cfg.command = Command::Dim;
  if (verify->parsed()) cfg.command = Command::Verify;
  if (kl->parsed()) cfg.command = Command::KlLift;
  if (finite->parsed()) cfg.command = Command::FiniteModel;
  if (rank->parsed()) {
    cfg.command = Command::DimRank;
    if (cfg.mode == "auto") cfg.mode = cfg.n <= 3 ? "exact" : "specialized";
  }

  Report report;
  try {
    validate(cfg);
    report = dispatch(cfg);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }
  const std::string text = cfg.format == "csv" ? to_csv(report.json) : to_json_text(report.json);
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      err << "usage error: cannot open " << cfg.out << "\n";
      return kUsageError;
    }
    f << text;
  }
  if (!report.pass) err << command_name(cfg.command) << ": verification failure\n";
  return report.pass ? kSuccess : kVerificationFailure;
}

}  // namespace klbt::cli
