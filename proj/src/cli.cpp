#include "helly/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "helly/errors.hpp"
#include "helly/report.hpp"

namespace helly::cli {

namespace {

const std::vector<std::string> kComplexTags{"prop-a", "thm-b", "helly", "sigma", "breen"};
const std::vector<std::string> kPlaneTags{"lemma-311", "lemma-312", "lemma-313", "thm-321"};

struct Options {
  std::string in;
  std::string out;
  std::string field = "gf2";
  std::vector<std::string> members;
  int d = 2;
  int lambda = 0;
  std::string theorem;
  std::string statement;  // positional of verify / transversal
  std::vector<int> m;
  int grid = 12;
  std::string growth = "40";
  std::int64_t trials = 100;
  std::int64_t accept = 0;
  std::uint64_t seed = 0;
  int resolution = 0;
  int cross_check = 0;
};

bool is_complex_tag(const std::string& t) {
  return std::find(kComplexTags.begin(), kComplexTags.end(), t) != kComplexTags.end();
}

void emit(const Options& o, const Json& j, std::ostream& out) {
  const std::string text = dump(j);
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw MalformedInput("cannot open output file '" + o.out + "'");
  f << text;
}

std::vector<int> select_members(const std::vector<std::string>& labels,
                                const std::vector<std::string>& wanted) {
  std::vector<int> idx;
  if (wanted.empty()) {
    for (std::size_t i = 0; i < labels.size(); ++i) idx.push_back(static_cast<int>(i));
    return idx;
  }
  for (const auto& w : wanted) {
    const auto it = std::find(labels.begin(), labels.end(), w);
    if (it == labels.end()) throw ValidationError("no member labeled '" + w + "'");
    idx.push_back(static_cast<int>(it - labels.begin()));
  }
  return idx;
}

SubcomplexFamily select(const SubcomplexFamily& f, const std::vector<std::string>& wanted) {
  if (wanted.empty()) return f;
  std::vector<Subcomplex> members;
  std::vector<std::string> labels;
  for (int i : select_members(f.labels(), wanted)) {
    members.push_back(f.member(static_cast<std::size_t>(i)));
    labels.push_back(f.label(static_cast<std::size_t>(i)));
  }
  return SubcomplexFamily(f.ambient_ptr(), std::move(members), std::move(labels));
}

PolygonFamily select(const PolygonFamily& f, const std::vector<std::string>& wanted) {
  if (wanted.empty()) return f;
  return f.subfamily(select_members(f.labels(), wanted));
}

std::pair<int, int> parse_growth(const std::string& s) {
  try {
    const auto colon = s.find(':');
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const int g = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {g, g};
    }
    const std::string a = s.substr(0, colon), b = s.substr(colon + 1);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw MalformedInput("--growth expects N or MIN:MAX, got '" + s + "'");
  }
}

Json members_json(const std::vector<std::string>& m) {
  return m.empty() ? Json("all") : Json(m);
}

int cmd_homology(const Options& o, std::ostream& out, std::ostream& err) {
  const Field field = parse_field(o.field);
  const SubcomplexFamily fam = select(load_family(o.in), o.members);
  Json j = report_header("homology", "homology",
                         {{"in", o.in}, {"field", to_string(field)}, {"members", members_json(o.members)}});
  Json results = Json::array();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const BettiVector b = reduced_betti(fam.member(i), field);
    results.push_back({{"member", fam.label(i)}, {"homology", to_json(b)}});
    err << fam.label(i) << ": " << (b.nonempty ? "nonempty" : "empty") << ", reduced betti [";
    for (std::size_t k = 0; k < b.betti.size(); ++k) err << (k ? " " : "") << b.betti[k];
    err << "] over " << to_string(field) << "\n";
  }
  j["results"] = std::move(results);
  emit(o, j, out);
  return kOk;
}

int verdict_code(bool hypotheses_hold, bool violated) {
  if (violated) return kInternalError;
  return hypotheses_hold ? kOk : kHypothesesNotSatisfied;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (is_complex_tag(o.statement)) {
    const Theorem t = parse_theorem(o.statement);
    const Field field = parse_field(o.field);
    const SubcomplexFamily fam = select(load_family(o.in), o.members);
    const Verdict v = verify(t, fam, VerifyParams{o.d, o.lambda, field});
    Json j = report_header("verify", o.statement,
                           {{"in", o.in},
                            {"field", to_string(field)},
                            {"d", o.d},
                            {"lambda", o.lambda},
                            {"members", members_json(o.members)}});
    j["verdict"] = to_json(fam, v);
    emit(o, j, out);
    err << o.statement << ": hypotheses " << (v.hypotheses_hold ? "hold" : "fail") << " ("
        << v.hypotheses.failures() << " failed entries), conclusion '" << v.conclusion << "' "
        << (v.conclusion_holds.value_or(false) ? "holds" : "fails") << "\n";
    if (v.violated()) err << "VIOLATION: hypotheses hold but the conclusion fails\n";
    return verdict_code(v.hypotheses_hold, v.violated());
  }
  const PlaneStatement s = parse_plane_statement(o.statement);
  const PolygonFamily fam = select(load_polygon_family(o.in), o.members);
  const TransversalVerdict v = verify(s, fam);
  Json j = report_header("verify", o.statement, {{"in", o.in}, {"members", members_json(o.members)}});
  j["verdict"] = to_json(fam, v);
  emit(o, j, out);
  err << o.statement << ": hypotheses " << (v.hypotheses_hold ? "hold" : "fail")
      << ", conclusion '" << v.conclusion << "' " << (v.conclusion_holds ? "holds" : "fails")
      << " (components " << v.summary.component_count
      << (v.summary.full_circle ? ", full circle" : "") << ")\n";
  if (v.violated()) err << "VIOLATION: hypotheses hold but the conclusion fails\n";
  return verdict_code(v.hypotheses_hold, v.violated());
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  if (is_complex_tag(o.theorem)) {
    SweepConfig c;
    c.theorem = parse_theorem(o.theorem);
    c.trials = o.trials;
    c.target_accepted = o.accept;
    c.grid = o.grid;
    if (!o.m.empty()) c.m_values = o.m;
    std::tie(c.growth_min, c.growth_max) = parse_growth(o.growth);
    c.seed = o.seed;
    c.field = parse_field(o.field);
    c.d = o.d;
    c.lambda = o.lambda;
    c.cross_check_stride = o.cross_check;
    const SweepReport r = sweep(c);
    Json j = report_header("sweep", o.theorem,
                           {{"theorem", o.theorem},
                            {"trials", c.trials},
                            {"accept", c.target_accepted},
                            {"grid", c.grid},
                            {"m", c.m_values},
                            {"growth_min", c.growth_min},
                            {"growth_max", c.growth_max},
                            {"seed", c.seed},
                            {"field", to_string(c.field)},
                            {"d", c.d},
                            {"lambda", c.lambda},
                            {"cross_check", c.cross_check_stride}});
    j["report"] = to_json(r);
    emit(o, j, out);
    err << o.theorem << " sweep: " << r.total << " trials, " << r.hypotheses_satisfied
        << " satisfy the hypotheses, " << r.conclusion_violated << " violations, "
        << r.hypotheses_failed_conclusion_failed << " with both failing\n";
    return r.conclusion_violated == 0 && r.cross_check_mismatches == 0 ? kOk : kInternalError;
  }
  PlaneSweepConfig c = default_plane_sweep(parse_plane_sweep_kind(o.theorem));
  c.trials = o.trials;
  c.target_accepted = o.accept;
  c.seed = o.seed;
  if (!o.m.empty()) {
    if (c.m_values.empty()) throw ContractViolation("--m does not apply to " + o.theorem);
    c.m_values = o.m;
  }
  if (o.resolution > 0) c.resolution = o.resolution;
  const PlaneSweepReport r = plane_sweep(c);
  Json params{{"theorem", o.theorem},
              {"trials", c.trials},
              {"accept", c.target_accepted},
              {"seed", c.seed},
              {"m", c.m_values},
              {"box", {c.box.x0, c.box.y0, c.box.x1, c.box.y1}},
              {"radius", {c.size.min_radius, c.size.max_radius}},
              {"points", {c.min_points, c.max_points}}};
  if (c.strip_max > 0) params["strip_height"] = {c.strip_min, c.strip_max};
  if (c.kind == PlaneSweepKind::OracleAgreement) params["resolution"] = c.resolution;
  Json j = report_header("sweep", o.theorem, params);
  j["report"] = to_json(r);
  emit(o, j, out);
  err << o.theorem << " sweep: " << r.total << " trials, " << r.hypotheses_satisfied
      << " satisfy the hypotheses, " << r.conclusion_violated << " violations\n";
  if (c.kind == PlaneSweepKind::OracleAgreement) {
    // Guarded disagreements are reported, not treated as theorem violations.
    return kOk;
  }
  return r.conclusion_violated == 0 ? kOk : kInternalError;
}

int cmd_transversal(const Options& o, std::ostream& out, std::ostream& err) {
  const PolygonFamily fam = select(load_polygon_family(o.in), o.members);
  Json params{{"in", o.in}, {"members", members_json(o.members)}};
  if (o.resolution > 0) params["resolution"] = o.resolution;
  Json j = report_header("transversal", o.statement, params);
  j["members"] = fam.labels();
  j["disjointness"] = to_string(disjointness_class(fam));
  const TransversalProfile p = transversal_profile(fam);
  if (o.statement == "profile") {
    j["profile"] = to_json(p);
    err << "profile: " << p.upper.pieces().size() << " upper and " << p.lower.pieces().size()
        << " lower pieces\n";
  } else {
    const ComponentSummary s = components(p);
    j["components"] = to_json(s);
    err << "components: " << s.component_count << (s.full_circle ? " (full circle)" : "")
        << ", " << s.degeneracies.size() << " degeneracies\n";
    if (o.resolution > 0) {
      const ComponentSummary q = sample_oracle(fam, o.resolution);
      j["oracle"] = to_json(q);
      err << "oracle at " << o.resolution << " samples: " << q.component_count
          << (q.full_circle ? " (full circle)" : "") << "\n";
    }
  }
  emit(o, j, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Helly-type theorem checker for subcomplex families and line transversals",
               "helly-topo"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  const auto common = [&](CLI::App* s) {
    s->add_option("--out", o.out, "Write the JSON report here instead of stdout");
    s->add_option("--member", o.members, "Restrict to these member labels (repeatable)");
  };

  CLI::App* homology = app.add_subcommand("homology", "Reduced Betti numbers of family members");
  homology->add_option("--in", o.in, "Family file")->required();
  homology->add_option("--field", o.field, "gf2 or q");
  common(homology);

  std::vector<std::string> verify_tags = kComplexTags;
  verify_tags.insert(verify_tags.end(), kPlaneTags.begin(), kPlaneTags.end());
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check one statement on one family");
  verify_cmd->add_option("statement", o.statement, "Statement tag")
      ->required()
      ->check(CLI::IsMember(verify_tags));
  verify_cmd->add_option("--in", o.in, "Family file")->required();
  verify_cmd->add_option("--field", o.field, "gf2 or q");
  verify_cmd->add_option("--d", o.d, "Dimension parameter d");
  verify_cmd->add_option("--lambda", o.lambda, "Degree shift lambda");
  common(verify_cmd);

  std::vector<std::string> sweep_tags = verify_tags;
  sweep_tags.push_back("oracle");
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Randomized sweep over generated families");
  sweep_cmd->add_option("--theorem", o.theorem, "Statement tag or 'oracle'")
      ->required()
      ->check(CLI::IsMember(sweep_tags));
  sweep_cmd->add_option("--trials", o.trials, "Maximum number of generated instances");
  sweep_cmd->add_option("--accept", o.accept,
                        "Stop after this many hypothesis-satisfying instances (0 = off)");
  sweep_cmd->add_option("--seed", o.seed, "Master seed");
  sweep_cmd->add_option("--grid", o.grid, "Grid side length");
  sweep_cmd->add_option("--m", o.m, "Family sizes, cycled over trials")->delimiter(',');
  sweep_cmd->add_option("--growth", o.growth, "Blob growth steps: N or MIN:MAX");
  sweep_cmd->add_option("--field", o.field, "gf2 or q");
  sweep_cmd->add_option("--d", o.d, "Dimension parameter d");
  sweep_cmd->add_option("--lambda", o.lambda, "Degree shift lambda");
  sweep_cmd->add_option("--resolution", o.resolution, "Oracle sample count (oracle sweeps)");
  sweep_cmd->add_option("--cross-check", o.cross_check,
                        "Re-verify every k-th satisfying trial over the other field");
  sweep_cmd->add_option("--out", o.out, "Write the JSON report here instead of stdout");

  CLI::App* transversal = app.add_subcommand("transversal", "Line transversals of polygons");
  transversal->add_option("view", o.statement, "profile or components")
      ->required()
      ->check(CLI::IsMember({"profile", "components"}));
  transversal->add_option("--in", o.in, "Polygon family file")->required();
  transversal->add_option("--resolution", o.resolution,
                          "Also run the sampling oracle at this resolution");
  common(transversal);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    err << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    err << kToolVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (homology->parsed()) return cmd_homology(o, out, err);
    if (verify_cmd->parsed()) return cmd_verify(o, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(o, out, err);
    return cmd_transversal(o, out, err);
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << "\n";
    return kInputError;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kInputError;
  } catch (const ContractViolation& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kInputError;
  } catch (const DegenerateInput& e) {
    err << "degenerate input: " << e.what() << "\n";
    return kDegenerateInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace helly::cli
