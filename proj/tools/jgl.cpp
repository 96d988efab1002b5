#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "jgl/jgl.hpp"

using namespace jgl;

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Globals {
  std::string ring = "f5";
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "json";
  std::size_t jobs = 1;
  std::vector<std::string> command;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Json parse_inline(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(what + " is not valid JSON: " + e.what());
  }
}

void write_text(const Globals& g, const std::string& bytes) {
  if (g.out.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw UsageError("cannot write '" + g.out + "'");
  f << bytes;
}

std::string text_report(const Json& doc) {
  std::ostringstream s;
  s << "jgl " << doc["version"].get<std::string>() << "  ring " << doc["ring"].get<std::string>() << "\n";
  std::size_t failed = 0;
  for (const auto& c : doc["checks"]) {
    bool pass = c["status"] == "pass";
    failed += pass ? 0 : 1;
    s << (pass ? "PASS " : "FAIL ") << c["name"].get<std::string>();
    if (!pass && c.contains("witness")) s << "  witness " << c["witness"].dump();
    s << "\n";
  }
  if (doc.contains("result")) s << "result " << doc["result"].dump() << "\n";
  s << doc["checks"].size() << " checks, " << failed << " failed\n";
  return s.str();
}

int emit(const Globals& g, const std::string& ring, const Report& r, Json result = nullptr) {
  Json doc;
  doc["tool"] = "jgl";
  doc["version"] = kVersion;
  doc["command"] = g.command;
  doc["ring"] = ring;
  doc["status"] = r.passed() ? "pass" : "fail";
  doc["checks"] = r.to_json()["checks"];
  if (!result.is_null()) doc["result"] = std::move(result);
  write_text(g, g.format == "text" ? text_report(doc) : doc.dump(2) + "\n");
  return r.passed() ? 0 : 1;
}

std::uint64_t need_seed(const Globals& g, const std::string& what) {
  if (!g.seed) throw UsageError(what + " needs --seed");
  return *g.seed;
}

Ring ring_of(const Globals& g) {
  try {
    return Ring::parse(g.ring);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

// ---------------------------------------------------------------- Lie algebra selection

struct AlgebraArgs {
  std::string algebra = "sl2";
  std::vector<long long> blocks;
  std::vector<long long> weights;
  std::string input;

  void add_to(CLI::App* c) {
    c->add_option("--algebra", algebra, "sl2 | gl | file")->check(CLI::IsMember({"sl2", "gl", "file"}));
    c->add_option("--blocks", blocks, "gl block sizes a,b (3-grading)")->delimiter(',');
    c->add_option("--weights", weights, "gl diagonal weights")->delimiter(',');
    c->add_option("--input", input, "Lie algebra JSON when --algebra file");
  }

  std::pair<GradedLieAlgebra, std::string> build(const Ring& ring) const {
    if (algebra == "sl2") return {catalog::sl2(ring), "sl(2)"};
    if (algebra == "file") {
      if (input.empty()) throw UsageError("--algebra file needs --input");
      return {lie_from_json(read_json(input)), input};
    }
    if (!blocks.empty()) {
      if (blocks.size() != 2 || blocks[0] < 1 || blocks[1] < 1) throw UsageError("--blocks takes two positive sizes");
      auto a = static_cast<std::size_t>(blocks[0]), b = static_cast<std::size_t>(blocks[1]);
      return {catalog::gl_3graded(a, b, ring), "gl(" + std::to_string(a + b) + ")"};
    }
    if (!weights.empty()) return {catalog::gl_graded(weights.size(), weights, 1, ring), "gl(" + std::to_string(weights.size()) + ")"};
    throw UsageError("--algebra gl needs --blocks or --weights");
  }
};

// ---------------------------------------------------------------- verbs

int run_verify(const Globals& g, const std::string& input, const std::string& method, std::size_t samples,
               bool fundamental) {
  Json j = read_json(input);
  CheckOptions opt;
  try {
    opt.method = parse_method(method);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  opt.samples = samples;
  opt.linear_slots_on_basis = opt.method == Method::exhaustive;
  if (opt.method == Method::sampled) opt.seed = need_seed(g, "--method sampled");
  std::string kind = j.is_object() && j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "pair";
  if (kind == "pair") {
    JordanPair p = pair_from_json(j);
    Report r = verify(p, opt);
    if (fundamental) r.merge(check_fundamental(p, opt.method == Method::basis ? default_fundamental_options(p) : opt));
    return emit(g, p.ring().name(), r);
  }
  if (kind == "jts") {
    JordanTripleSystem t = jts_from_json(j);
    return emit(g, t.ring().name(), verify(t, opt));
  }
  if (kind == "lts") {
    LieTripleSystem q = lts_from_json(j);
    return emit(g, q.ring().name(), verify(q, opt));
  }
  if (kind == "lie") {
    GradedLieAlgebra a = lie_from_json(j);
    return emit(g, a.ring().name(), verify_lie(a, opt));
  }
  throw UsageError("verify: unsupported kind '" + kind + "'");
}

int run_catalog(const Globals& g, const std::string& family, const std::vector<long long>& params) {
  Ring ring = ring_of(g);
  JordanPair p = catalog::by_name(family, params, ring);
  write_text(g, to_json(p).dump(2) + "\n");
  return 0;
}

int run_tkk(const Globals& g, const std::string& input, const std::string& family, const std::vector<long long>& params) {
  JordanPair p;
  if (!input.empty()) {
    p = pair_from_json(read_json(input));
  } else if (!family.empty()) {
    p = catalog::by_name(family, params, ring_of(g));
  } else {
    throw UsageError("tkk needs --input or --family");
  }
  GradedLieAlgebra a = tkk(p);
  Report r = verify_lie(a);
  r.add("pair_roundtrip", pair_from_3graded(a) == p, nullptr, Json{{"dim", a.dim()}});
  return emit(g, p.ring().name(), r, to_json(a));
}

GrassTables grass_tables(const Ring& ring, std::size_t w, std::size_t a) {
  if (a == 0 || a >= w) throw UsageError("need 0 < a < w");
  return tabulate(GrassGeometry(ring, w, a));
}

int run_geom_ss(const Globals& g, std::size_t w, std::size_t a) {
  Ring ring = ring_of(g);
  GrassTables t = grass_tables(ring, w, a);
  return emit(g, ring.name(), verify_symmetric_space(orthopolarity(Matrix::identity(ring, w)), t));
}

int run_geom_chart_law(const Globals& g, std::size_t w, std::size_t a, bool direct) {
  Ring ring = ring_of(g);
  GrassTables t = grass_tables(ring, w, a);
  Report r;
  r.add(chart_law_exhaustive(t, direct));
  return emit(g, ring.name(), r);
}

int run_geom_affine(const Globals& g, std::size_t w, std::size_t a, bool sampled, std::size_t duals, std::size_t triples) {
  Ring ring = ring_of(g);
  GrassTables t = grass_tables(ring, w, a);
  AffineSample s;
  s.exhaustive = !sampled;
  if (sampled) s.seed = need_seed(g, "--sampled");
  s.duals = duals;
  s.triples = triples;
  Report r;
  r.add(verify_affine_independence(t, s));
  return emit(g, ring.name(), r);
}

int run_geom_pr(const Globals& g, const std::string& xs, const std::string& alphas, const std::string& ys,
                const std::string& rs) {
  Ring ring = ring_of(g);
  Point x = point_from_json(parse_inline(xs, "--x"), ring);
  DualPoint alpha = dual_from_json(parse_inline(alphas, "--alpha"), ring);
  Point y = point_from_json(parse_inline(ys, "--y"), ring);
  Scalar r;
  try {
    r = ring.parse_scalar(rs);
  } catch (const Error& e) {
    throw UsageError(std::string("--r: ") + e.what());
  }
  if (x.rep.rows() != y.rep.rows() || x.rep.cols() != y.rep.cols() || alpha.rep.cols() != x.rep.rows() ||
      alpha.rep.rows() != x.rep.cols()) {
    throw UsageError("geom pr: x, alpha and y belong to different Grassmannians");
  }
  Report rep;
  bool defined = transversal(x, alpha) && transversal(y, alpha);
  rep.add("defined", defined, defined ? Json(nullptr) : Json{{"reason", "x and y must both be transversal to alpha"}});
  Json result;
  if (defined) result = to_json(p_r(x, alpha, y, r));
  return emit(g, ring.name(), rep, result);
}

int run_flags_roundtrip(const Globals& g, std::size_t n, std::size_t max_k, std::size_t count) {
  Ring ring = ring_of(g);
  Report r;
  r.add(grading_roundtrip_check(ring, n, max_k, need_seed(g, "flags roundtrip (random gradings)"), count));
  return emit(g, ring.name(), r);
}

int run_flags_theorem(const Globals& g, const AlgebraArgs& aa) {
  Ring ring = ring_of(g);
  auto [a, name] = aa.build(ring);
  auto res = lie_flag_theorem_check(a, opposite_filtration_from_grading(a), filtration_from_grading(a));
  return emit(g, ring.name(), res.report, Json{{"algebra", name}});
}

int run_flags_bijection(const Globals& g, const AlgebraArgs& aa, std::size_t max_word) {
  Ring ring = ring_of(g);
  auto [a, name] = aa.build(ring);
  auto res = bijection_check(a, filtration_from_grading(a), max_word);
  return emit(g, ring.name(), res.report,
              Json{{"algebra", name}, {"f1_size", res.f1_size}, {"transversal_size", res.transversal_size}});
}

int run_flags_affine(const Globals& g, std::size_t n, const std::vector<std::size_t>& type, std::size_t duals,
                     std::size_t origins, std::size_t window) {
  Ring ring = ring_of(g);
  FlagGeometry fg(ring, n, type);
  Report r;
  r.add(flag_affine_independence(fg, duals, origins, window));
  return emit(g, ring.name(), r, Json{{"geometry", fg.name()}, {"points", fg.points().size()}});
}

int run_orbit(const Globals& g, const AlgebraArgs& aa, std::size_t max_word) {
  Ring ring = ring_of(g);
  auto [a, name] = aa.build(ring);
  auto orbit = elementary_group_orbit(a, filtration_from_grading(a), max_word);
  Report r;
  r.add("orbit_closed", orbit.closed, nullptr, Json{{"levels", orbit.levels}});
  Json members = Json::array();
  for (const auto& f : orbit.members) members.push_back(filtration_to_json(f, ring, a.dim(), name));
  return emit(g, ring.name(), r, Json{{"algebra", name}, {"orbit_size", orbit.members.size()}, {"members", members}});
}

struct ClosureArgs {
  std::string geometry = "gras";
  std::size_t w = 0, a = 0, m = 0;
  std::string input;
};

Json point_list(const Json& doc) {
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
    throw UsageError("schema error at /: expected an object with a 'points' array");
  return doc["points"];
}

int run_closure(const Globals& g, const ClosureArgs& c) {
  Ring ring = ring_of(g);
  Json pts = point_list(read_json(c.input));
  Report r;
  if (c.geometry == "gras") {
    GrassTables t = grass_tables(ring, c.w, c.a);
    PointSet s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Point x = point_from_json(pts[i], ring);
      auto it = t.point_index.find(x);
      if (it == t.point_index.end()) throw UsageError("schema error at /points/" + std::to_string(i) + ": not a point of " + t.geometry.name());
      s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    PointSet cl = intrinsic_closure(t.finite, s);
    r.add(intrinsic_check(t.finite, cl));
    Json members = Json::array();
    for (auto x : cl) members.push_back(to_json(t.points[x]));
    auto [f1, f2] = point_flag(t, cl);
    bool sq = squeezed(t, f1, f2) == cl;
    r.add("closure_is_squeezed", sq);
    return emit(g, ring.name(), r,
                Json{{"geometry", t.geometry.name()}, {"input_size", s.size()}, {"closure_size", cl.size()},
                     {"flag", Json{{"f1", to_json(f1)}, {"f2", to_json(f2)}}}, {"closure", members}});
  }
  if (c.m < 1 || c.m > 3) throw UsageError("--m must be 1, 2 or 3");
  LineProduct lp = line_product(ring, c.m);
  const auto np = static_cast<std::uint32_t>(lp.line.points.size());
  PointSet s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string where = "schema error at /points/" + std::to_string(i);
    if (!pts[i].is_array() || pts[i].size() != c.m) throw UsageError(where + ": expected " + std::to_string(c.m) + " line points");
    std::uint32_t code = 0, place = 1;
    for (std::size_t k = 0; k < c.m; ++k) {
      Point x = point_from_json(pts[i][k], ring);
      auto it = lp.line.point_index.find(x);
      if (it == lp.line.point_index.end()) throw UsageError(where + "/" + std::to_string(k) + ": not a point of the projective line");
      code += it->second * place;
      place *= np;
    }
    s.push_back(code);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  PointSet cl = intrinsic_closure(lp.product, s);
  r.add(intrinsic_check(lp.product, cl));
  Json members = Json::array();
  for (auto x : cl) {
    Json f = Json::array();
    for (std::size_t k = 0; k < c.m; ++k) f.push_back(to_json(lp.line.points[lp.component(x, k)]));
    members.push_back(f);
  }
  return emit(g, ring.name(), r,
              Json{{"geometry", "lines(m=" + std::to_string(c.m) + ")"}, {"input_size", s.size()},
                   {"closure_size", cl.size()}, {"closure", members}});
}

int run_states_classify(const Globals& g, std::size_t w, std::size_t a) {
  Ring ring = ring_of(g);
  GrassTables t = grass_tables(ring, w, a);
  return emit(g, ring.name(), classify_intrinsic(t));
}

int run_states_flags(const Globals& g, std::size_t w, std::size_t a, bool representatives) {
  Ring ring = ring_of(g);
  if (a == 0 || a >= w) throw UsageError("need 0 < a < w");
  StatesTables st = make_states_tables(GrassGeometry(ring, w, a));
  Report r;
  r.add(states_flag_agreement(st, representatives));
  return emit(g, ring.name(), r);
}

int run_states_pure(const Globals& g, std::size_t m) {
  Ring ring = ring_of(g);
  return emit(g, ring.name(), pure_states(ring, m));
}

int run_suite(const Globals& g, const std::string& name, bool list) {
  if (list) {
    std::ostringstream s;
    for (const auto& su : suites::registry()) s << su.name << "\t" << su.criterion << "\n";
    write_text(g, s.str());
    return 0;
  }
  const suites::Suite* found = nullptr;
  for (const auto& su : suites::registry()) {
    if (su.name == name) found = &su;
  }
  if (!found) throw UsageError("unknown suite '" + name + "' (see suite --list)");
  return emit(g, "per-check", found->run(), Json{{"suite", found->name}, {"criterion", found->criterion}});
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  for (int i = 1; i < argc; ++i) g.command.emplace_back(argv[i]);

  CLI::App app{"Exact computations with Jordan pairs, graded Lie algebras and their geometries"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--ring", g.ring, "q | f<p>");
  app.add_option("--seed", g.seed, "seed for sampled methods");
  app.add_option("--out", g.out, "write the report here instead of stdout");
  app.add_option("--report-format", g.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", g.jobs, "worker count")->check(CLI::PositiveNumber);
  app.set_version_flag("--version", kVersion);

  std::function<int()> action;

  std::string input, method = "basis";
  std::size_t samples = 200;
  bool fundamental = false;
  auto* verify_cmd = app.add_subcommand("verify", "check the axioms of a pair, JTS, LTS or Lie algebra file");
  verify_cmd->add_option("--input", input, "structure JSON")->required();
  verify_cmd->add_option("--method", method, "basis | exhaustive | sampled");
  verify_cmd->add_option("--samples", samples, "samples for --method sampled");
  verify_cmd->add_flag("--fundamental", fundamental, "also check the fundamental formula");
  verify_cmd->callback([&] { action = [&] { return run_verify(g, input, method, samples, fundamental); }; });

  std::string family;
  std::vector<long long> params;
  auto* catalog_cmd = app.add_subcommand("catalog", "write a catalog pair as JSON");
  catalog_cmd->add_option("family", family, "rectangular | associative | hermitian | skew_hermitian | spin | scalar | loop")->required();
  catalog_cmd->add_option("--params", params, "family parameters")->delimiter(',');
  catalog_cmd->callback([&] { action = [&] { return run_catalog(g, family, params); }; });

  auto* tkk_cmd = app.add_subcommand("tkk", "TKK algebra of a pair");
  tkk_cmd->add_option("--input", input, "pair JSON");
  tkk_cmd->add_option("--family", family, "catalog family instead of --input");
  tkk_cmd->add_option("--params", params, "family parameters")->delimiter(',');
  tkk_cmd->callback([&] { action = [&] { return run_tkk(g, input, family, params); }; });

  std::size_t w = 0, a = 0, duals = 8, triples = 16;
  bool direct = false, sampled = false;
  std::string xs, alphas, ys, rs;
  auto* geom_cmd = app.add_subcommand("geom", "Grassmannian geometries");
  geom_cmd->require_subcommand(1);
  auto* ss_cmd = geom_cmd->add_subcommand("verify-ss", "M1-M3 for the dot-form orthopolarity");
  auto* law_cmd = geom_cmd->add_subcommand("chart-law", "chart(p_r(x, alpha, y)) = r chart(y), exhaustively");
  auto* aff_cmd = geom_cmd->add_subcommand("verify-affine", "origin independence of y - z + w");
  for (auto* c : {ss_cmd, law_cmd, aff_cmd}) {
    c->add_option("--w", w, "ambient dimension")->required();
    c->add_option("--a", a, "subspace dimension")->required();
  }
  law_cmd->add_flag("--direct", direct, "use the matrix formula instead of the packed tables");
  aff_cmd->add_flag("--sampled", sampled, "sample dual points and triples");
  aff_cmd->add_option("--duals", duals, "dual points when sampled");
  aff_cmd->add_option("--triples", triples, "triples per dual point when sampled");
  ss_cmd->callback([&] { action = [&] { return run_geom_ss(g, w, a); }; });
  law_cmd->callback([&] { action = [&] { return run_geom_chart_law(g, w, a, direct); }; });
  aff_cmd->callback([&] { action = [&] { return run_geom_affine(g, w, a, sampled, duals, triples); }; });
  auto* pr_cmd = geom_cmd->add_subcommand("pr", "p_r(x, alpha, y)");
  pr_cmd->add_option("--x", xs, "point JSON")->required();
  pr_cmd->add_option("--alpha", alphas, "dual point JSON")->required();
  pr_cmd->add_option("--y", ys, "point JSON")->required();
  pr_cmd->add_option("--r", rs, "scalar")->required();
  pr_cmd->callback([&] { action = [&] { return run_geom_pr(g, xs, alphas, ys, rs); }; });

  std::size_t n = 4, max_k = 4, count = 100, max_word = 16, flag_duals = 4, origins = 6, window = 10;
  std::vector<std::size_t> type;
  AlgebraArgs aa;
  auto* flags_cmd = app.add_subcommand("flags", "module flags and Lie filtrations");
  flags_cmd->require_subcommand(1);
  auto* rt_cmd = flags_cmd->add_subcommand("roundtrip", "gradings -> flags -> gradings on random gradings");
  rt_cmd->add_option("--n", n, "module dimension");
  rt_cmd->add_option("--max-k", max_k, "largest flag length");
  rt_cmd->add_option("--count", count, "number of gradings");
  rt_cmd->callback([&] { action = [&] { return run_flags_roundtrip(g, n, max_k, count); }; });
  auto* th_cmd = flags_cmd->add_subcommand("theorem", "transversal filtrations against gradings and Euler operators");
  aa.add_to(th_cmd);
  th_cmd->callback([&] { action = [&] { return run_flags_theorem(g, aa); }; });
  auto* bij_cmd = flags_cmd->add_subcommand("bijection", "x -> exp(x).e from f_1 onto the transversal set");
  aa.add_to(bij_cmd);
  bij_cmd->add_option("--max-word", max_word, "orbit word length bound");
  bij_cmd->callback([&] { action = [&] { return run_flags_bijection(g, aa, max_word); }; });
  auto* fa_cmd = flags_cmd->add_subcommand("affine", "origin independence search in a flag geometry");
  fa_cmd->add_option("--n", n, "module dimension");
  fa_cmd->add_option("--type", type, "dimensions of the proper members")->delimiter(',')->required();
  fa_cmd->add_option("--duals", flag_duals, "dual flags searched");
  fa_cmd->add_option("--origins", origins, "origins per dual flag");
  fa_cmd->add_option("--window", window, "chart members combined");
  fa_cmd->callback([&] { action = [&] { return run_flags_affine(g, n, type, flag_duals, origins, window); }; });

  std::size_t orbit_word = 64;
  AlgebraArgs oa;
  auto* orbit_cmd = app.add_subcommand("orbit", "elementary group orbit of the base filtration");
  oa.add_to(orbit_cmd);
  orbit_cmd->add_option("--max-word", orbit_word, "word length bound");
  orbit_cmd->callback([&] { action = [&] { return run_orbit(g, oa, orbit_word); }; });

  ClosureArgs ca;
  auto add_closure_options = [&](CLI::App* c) {
    c->add_option("--geometry", ca.geometry, "gras | lines")->check(CLI::IsMember({"gras", "lines"}));
    c->add_option("--w", ca.w, "ambient dimension (gras)");
    c->add_option("--a", ca.a, "subspace dimension (gras)");
    c->add_option("--m", ca.m, "number of line factors (lines)");
    c->add_option("--input", ca.input, "JSON object with a 'points' array")->required();
    c->callback([&] { action = [&] { return run_closure(g, ca); }; });
  };
  add_closure_options(app.add_subcommand("closure", "intrinsic closure of a point set"));

  bool representatives = false;
  std::size_t m = 2;
  std::string geometry = "gras";
  auto* states_cmd = app.add_subcommand("states", "intrinsic subspaces and states");
  states_cmd->require_subcommand(1);
  auto* cls_cmd = states_cmd->add_subcommand("classify", "inner ideals against squeezed sets");
  cls_cmd->add_option("--geometry", geometry, "gras")->check(CLI::IsMember({"gras"}));
  cls_cmd->add_option("--w", w, "ambient dimension")->required();
  cls_cmd->add_option("--a", a, "subspace dimension")->required();
  cls_cmd->callback([&] { action = [&] { return run_states_classify(g, w, a); }; });
  add_closure_options(states_cmd->add_subcommand("closure", "intrinsic closure of a point set"));
  auto* sf_cmd = states_cmd->add_subcommand("flags", "states transversality against flag transversality");
  sf_cmd->add_option("--w", w, "ambient dimension")->required();
  sf_cmd->add_option("--a", a, "subspace dimension")->required();
  sf_cmd->add_flag("--representatives", representatives, "one left state per orbit type");
  sf_cmd->callback([&] { action = [&] { return run_states_flags(g, w, a, representatives); }; });
  auto* pure_cmd = states_cmd->add_subcommand("pure", "minimal intrinsic lines in a product of projective lines");
  pure_cmd->add_option("--m", m, "number of factors");
  pure_cmd->callback([&] { action = [&] { return run_states_pure(g, m); }; });

  std::string suite_name;
  bool list = false;
  auto* suite_cmd = app.add_subcommand("suite", "run a named experiment suite");
  suite_cmd->add_option("--name", suite_name, "suite name");
  suite_cmd->add_flag("--list", list, "list the suites");
  suite_cmd->callback([&] { action = [&] { return run_suite(g, suite_name, list); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  jobs_setting() = g.jobs;
  try {
    if (!action) throw UsageError("no command");
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
