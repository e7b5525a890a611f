// spectra: command-line front end. Every command prints one JSON envelope
//   {"command": ..., "input_digest": ..., "result": ..., "status": ...}
// and exits 0 (no violation), 1 (violation or obstruction found) or 2 (bad input).

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "spectra/determinantal.hpp"
#include "spectra/json_io.hpp"
#include "spectra/jump_system.hpp"
#include "spectra/matroid.hpp"
#include "spectra/polymatroid.hpp"
#include "spectra/random.hpp"
#include "spectra/real_check.hpp"
#include "spectra/reduce.hpp"

using namespace spectra;

namespace {

struct Outcome {
  json result;
  bool violation = false;
};

// Everything a command consumed, hashed into input_digest.
std::string g_digest_input;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return out.str();
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  g_digest_input += '\0' + buf.str();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

// "vamos", "uniform:r,n" or a path to matroid JSON.
Matroid load_matroid(const std::string& spec) {
  if (spec == "vamos") return vamos();
  if (spec.rfind("uniform:", 0) == 0) {
    const auto args = parse_rational_list(spec.substr(8));
    if (args.size() != 2 || args[0].den() != 1 || args[1].den() != 1 || args[0].sign() <= 0 || args[1].sign() <= 0)
      throw Error(Errc::ParseError, "expected uniform:r,n with positive integers r and n");
    return uniform(static_cast<std::size_t>(args[0].num().get_ui()), static_cast<std::size_t>(args[1].num().get_ui()));
  }
  return matroid_from_json(read_json(spec));
}

SubsetMask parse_set(const std::string& text) {
  if (text.empty()) return {};
  std::vector<int> elements;
  for (const auto& r : parse_rational_list(text)) {
    if (r.den() != 1) throw Error(Errc::ParseError, "set elements must be integers");
    elements.push_back(static_cast<int>(r.num().get_si()));
  }
  return SubsetMask::of(elements);
}

Poly shift_by_ones(const Poly& h) {
  const std::size_t n = h.num_vars();
  std::vector<Poly> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Poly::variable(n, i) + Poly::constant(n, Rational(1)));
  return compose(h, images);
}

std::vector<std::vector<Rational>> unit_vectors(std::size_t n) {
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = Rational(1);
  return out;
}

json verdicts_json(const std::vector<DirectionVerdict>& verdicts) {
  json out = json::array();
  for (const auto& v : verdicts)
    out.push_back({{"direction", to_json(v.direction)}, {"restriction", to_json(v.restriction)},
                   {"real_rooted", v.real_rooted}});
  return out;
}

json lattice_point_json(const LatticePoint& p) { return json(p); }

RankTable load_table(const std::string& table_path, const std::string& matroid_spec) {
  if (!table_path.empty() == !matroid_spec.empty())
    throw Error(Errc::ParseError, "give exactly one of --table or --matroid");
  return table_path.empty() ? rank_table(load_matroid(matroid_spec)) : rank_table_from_json(read_json(table_path));
}

IngletonQuadruple parse_quadruple(const std::string& text) {
  if (text == "paper") return IngletonQuadruple::vamos();
  std::vector<SubsetMask> sets;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) sets.push_back(parse_set(part));
  if (sets.size() != 4) throw Error(Errc::ParseError, "quadruple must be 'paper' or four ';'-separated sets");
  return {sets[0], sets[1], sets[2], sets[3]};
}

// --- commands ---------------------------------------------------------------

Outcome cmd_counterexample(const std::string& matroid_spec, std::uint64_t seed, std::size_t samples,
                           std::size_t dirs) {
  const Matroid m = load_matroid(matroid_spec);
  const std::size_t n = m.ground_size();
  const Poly h = bases_polynomial(m);
  json stages = json::array();

  const auto stability = stability_sample(h, samples, seed);
  stages.push_back({{"stage", "stability"},
                    {"seed", seed},
                    {"samples", samples},
                    {"zero_found", stability.zero_found()},
                    {"min_abs_value", stability.min_abs_value}});

  Rng rng(seed);
  std::vector<std::vector<Rational>> directions;
  for (std::size_t k = 0; k < dirs; ++k) directions.push_back(random_direction(rng, n));
  const auto verdicts = rz_check(shift_by_ones(h), directions);
  std::size_t refuted = 0;
  for (const auto& v : verdicts) refuted += !v.real_rooted;
  stages.push_back({{"stage", "real_zero"},
                    {"seed", seed},
                    {"directions", dirs},
                    {"refuted", refuted},
                    {"all_real_rooted", refuted == 0}});

  const std::vector<Rational> ones(n, Rational(1));
  const RankTable table = hyperbolic_rank_table(h, unit_vectors(n), ones);
  const auto axioms = check_polymatroid(table);
  json axiom_json = json::array();
  for (const auto& v : axioms) axiom_json.push_back(to_json(v));
  stages.push_back({{"stage", "polymatroid"},
                    {"violations", axiom_json},
                    {"matches_matroid_rank", table == rank_table(m)}});

  const auto supp = support(h);
  const auto jumps = check_axiom_J(supp);
  const auto sums = maximal_constant_sum_check(supp);
  json jump_stage = {{"stage", "jump_system"}, {"axiom_J_violations", jumps.size()}};
  if (const auto* c = std::get_if<ConstantSum>(&sums)) jump_stage["maximal_sum"] = c->sum;
  else jump_stage["maximal_sum"] = nullptr;
  stages.push_back(jump_stage);

  std::vector<IngletonReport> reports;
  const bool is_vamos = m == vamos();
  if (is_vamos) reports.push_back(ingleton_check(table, IngletonQuadruple::vamos()));
  else reports = ingleton_scan(table, ScanMode::DisjointPairs);
  std::optional<IngletonReport> worst;
  for (const auto& r : reports)
    if (r.deficit() > 0 && (!worst || r.deficit() > worst->deficit())) worst = r;
  json ingleton_stage = {{"stage", "ingleton"}, {"mode", is_vamos ? "vamos_quadruple" : "disjoint_pairs"}};
  if (is_vamos) ingleton_stage["report"] = to_json(reports.front());
  ingleton_stage["violations"] = worst ? (is_vamos ? 1 : reports.size()) : 0;
  ingleton_stage["deficit"] = worst ? worst->deficit() : 0;
  if (worst) ingleton_stage["quadruple"] = to_json(*worst)["quadruple"];
  stages.push_back(ingleton_stage);

  json result = {{"seed", seed},
                 {"matroid", {{"n", n}, {"rank", m.rank()}, {"bases", m.bases().size()}}},
                 {"stages", stages}};
  const bool prerequisites = !stability.zero_found() && refuted == 0 && axioms.empty() && jumps.empty();
  if (worst) {
    const std::int64_t delta = worst->deficit();
    const IngletonReport tripled = ingleton_check(scale(table, 3), worst->quadruple);
    stages.push_back({{"stage", "scaling"},
                      {"deficit", delta},
                      {"deficit_of_power_N", "N * " + std::to_string(delta)},
                      {"deficit_at_N_3", tripled.deficit()},
                      {"statement", "a representation of p^N yields a subspace arrangement with rank function N r, "
                                    "whose Ingleton deficit N * " + std::to_string(delta) + " is positive"}});
    result["stages"] = stages;
    result["obstruction"] = true;
    result["conclusion"] = prerequisites
                               ? "no determinantal representation of p^N for any N >= 1, p = h(x + 1)"
                               : "Ingleton fails, but an earlier stage did not certify the hypotheses";
  } else {
    result["obstruction"] = false;
    result["conclusion"] = "no obstruction found by Ingleton";
  }
  return {result, worst.has_value()};
}

Outcome cmd_rank(const std::string& spec, const std::string& set) {
  const Matroid m = load_matroid(spec);
  const SubsetMask s = parse_set(set);
  const std::size_t r = rank(m, s);
  const std::size_t d = rank_via_degree(m, s);
  return {{{"set", to_json(s)}, {"rank", r}, {"rank_via_degree", d}}, r != d};
}

Outcome cmd_polymatroid_check(const std::string& table_path, const std::string& spec) {
  const auto violations = check_polymatroid(load_table(table_path, spec));
  json list = json::array();
  for (const auto& v : violations) list.push_back(to_json(v));
  return {{{"polymatroid", violations.empty()}, {"violations", list}}, !violations.empty()};
}

Outcome cmd_ingleton(const std::string& table_path, const std::string& spec, const std::string& quadruple,
                     const std::string& scan, std::size_t full_limit) {
  const RankTable table = load_table(table_path, spec);
  if (!scan.empty()) {
    ScanMode mode;
    if (scan == "paper") mode = ScanMode::VamosQuadruple;
    else if (scan == "disjoint-pairs") mode = ScanMode::DisjointPairs;
    else if (scan == "full") mode = ScanMode::Full;
    else throw Error(Errc::ParseError, "--scan must be paper, disjoint-pairs or full");
    const auto reports = ingleton_scan(table, mode, full_limit);
    json list = json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    return {{{"scan", scan}, {"violations", list}}, !reports.empty()};
  }
  const auto report = ingleton_check(table, parse_quadruple(quadruple.empty() ? "paper" : quadruple));
  return {to_json(report), report.deficit() > 0};
}

Outcome cmd_jumpsystem(const std::string& points_path, const std::string& poly_path, const std::string& spec,
                       bool shift, bool interval) {
  if ((!points_path.empty()) + (!poly_path.empty()) + (!spec.empty()) != 1)
    throw Error(Errc::ParseError, "give exactly one of --points, --poly or --matroid");
  LatticePointSet points;
  if (!points_path.empty()) {
    if (shift) throw Error(Errc::ParseError, "--shift needs --poly or --matroid");
    points = lattice_from_json(read_json(points_path));
  } else {
    const AnyPoly any = spec.empty() ? poly_from_json(read_json(poly_path)) : AnyPoly(bases_polynomial(load_matroid(spec)));
    points = std::visit(
        [&](const auto& p) -> LatticePointSet {
          using P = std::decay_t<decltype(p)>;
          if (!shift) return support(p);
          if constexpr (std::is_same_v<P, Poly>) return support(shift_by_ones(p));
          else {
            std::vector<GaussPoly> images;
            for (std::size_t i = 0; i < p.num_vars(); ++i)
              images.push_back(GaussPoly::variable(p.num_vars(), i) + GaussPoly::constant(p.num_vars(), GaussRational(1)));
            return support(compose(p, images));
          }
        },
        any);
  }
  json result = {{"points", points.size()}};
  bool violation = false;

  json jumps = json::array();
  for (const auto& v : check_axiom_J(points))
    jumps.push_back({{"alpha", v.alpha}, {"beta", v.beta}, {"step", {{"index", v.step.index + 1}, {"sign", v.step.sign}}}});
  violation |= !jumps.empty();
  result["axiom_J_violations"] = jumps;

  const auto sums = maximal_constant_sum_check(points);
  if (const auto* c = std::get_if<ConstantSum>(&sums)) {
    result["maximal_sum"] = c->sum;
  } else {
    const auto& w = std::get<SumWitness>(sums);
    result["maximal_sum"] = nullptr;
    result["maximal_sum_witness"] = {lattice_point_json(w.first), lattice_point_json(w.second)};
    violation = true;
  }

  if (interval) {
    json gaps = json::array();
    for (const auto& v : interval_property_check(points))
      gaps.push_back({{"alpha", v.alpha}, {"beta", v.beta}, {"gamma", v.gamma}});
    violation |= !gaps.empty();
    result["interval_violations"] = gaps;
  }
  return {result, violation};
}

Outcome cmd_expand_det(const std::string& rep_path, std::size_t max_size) {
  const Representation rep = representation_from_json(read_json(rep_path));
  bool hermitian = !rep.a0 || is_hermitian(*rep.a0);
  for (const auto& a : rep.pencil) hermitian = hermitian && is_hermitian(a);
  if (hermitian) return {{{"hermitian", true}, {"polynomial", to_json(expand_det_affine(rep, max_size))}}, false};
  return {{{"hermitian", false}, {"polynomial", to_json(expand_det_affine_complex(rep, max_size))}}, false};
}

Outcome cmd_cauchy_binet(const std::string& matrix_path) {
  return {{{"polynomial", to_json(cauchy_binet_expand(exact_matrix_from_json(read_json(matrix_path))))}}, false};
}

Outcome cmd_verify_rep(const std::string& poly_path, const std::string& rep_path, std::size_t max_size) {
  const AnyPoly p = poly_from_json(read_json(poly_path));
  const Representation rep = representation_from_json(read_json(rep_path));
  const GaussPoly wide = std::holds_alternative<Poly>(p) ? widen(std::get<Poly>(p)) : std::get<GaussPoly>(p);
  const auto diff = verify_representation(wide, rep, max_size);
  json result = {{"equal", !diff.has_value()}};
  if (diff)
    result["difference"] = {{"monomial", diff->monomial.exponents()},
                            {"polynomial_coeff", to_json(diff->polynomial_coeff)},
                            {"determinant_coeff", to_json(diff->determinant_coeff)}};
  return {result, diff.has_value()};
}

Outcome cmd_reduce_rep(const std::string& rep_path, std::size_t degree, const Tolerances& tol) {
  const FloatRepresentation rep = float_representation_from_json(read_json(rep_path));
  const ReductionReport report = reduce_representation(rep, degree, tol);
  json result = to_json(report);
  result["tolerances"] = {{"psd", tol.psd}, {"rank", tol.rank}, {"rec", tol.rec}, {"monic", tol.monic}, {"sym", tol.sym}};
  return {result, !report.ok()};
}

Outcome cmd_rz_check(const std::string& poly_path, std::size_t dirs, std::uint64_t seed) {
  const Poly p = real_poly_from_json(read_json(poly_path));
  Rng rng(seed);
  std::vector<std::vector<Rational>> directions;
  for (std::size_t k = 0; k < dirs; ++k) directions.push_back(random_direction(rng, p.num_vars()));
  const auto verdicts = rz_check(p, directions);
  bool all = true;
  for (const auto& v : verdicts) all = all && v.real_rooted;
  return {{{"seed", seed}, {"all_real_rooted", all}, {"verdicts", verdicts_json(verdicts)}}, !all};
}

Outcome cmd_hyperbolic_rank(const std::string& poly_path, const std::string& e, const std::string& e2,
                            const std::string& x) {
  const Poly h = real_poly_from_json(read_json(poly_path));
  const auto ev = parse_rational_list(e);
  const auto xv = parse_rational_list(x);
  if (e2.empty()) return {{{"rank", hyperbolic_rank(h, ev, xv)}}, false};
  const auto e2v = parse_rational_list(e2);
  const std::vector<std::vector<Rational>> xs{xv};
  const auto cmp = rank_e_independence(h, ev, e2v, xs).front();
  return {{{"rank_at_e", cmp.rank_at_e1}, {"rank_at_e2", cmp.rank_at_e2}, {"agree", cmp.agree()}}, !cmp.agree()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for real-zero polynomials, matroids and determinantal representations"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent JSON output");

  std::string matroid_spec, set, table, quadruple, scan, points, poly, rep, matrix, e, e2, x;
  std::uint64_t seed = default_seed();
  std::size_t samples = 1000, dirs = 100, degree = 0, max_size = kMaxDetSize, full_limit = kFullScanLimit;
  bool shift = false, interval = false;
  Tolerances tol;
  std::function<Outcome()> run;

  auto matroid_opt = [&](CLI::App* sub) {
    sub->add_option("--matroid", matroid_spec, "vamos, uniform:r,n or a matroid JSON file")->required();
  };
  auto seed_opt = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Random seed (default: SPECTRA_SEED or 42)");
  };

  auto* counter = app.add_subcommand("counterexample", "Run the stability/RZ/Ingleton pipeline on a matroid");
  std::string counter_matroid = "vamos";
  counter->add_option("--matroid", counter_matroid, "vamos, uniform:r,n or a matroid JSON file");
  seed_opt(counter);
  counter->add_option("--samples", samples, "Stability samples");
  counter->add_option("--dirs", dirs, "Random directions for the real-zero check");
  counter->callback([&] { run = [&] { return cmd_counterexample(counter_matroid, seed, samples, dirs); }; });

  auto* vamos_cmd = app.add_subcommand("vamos", "Print the Vamos matroid");
  vamos_cmd->callback([&] { run = [] { return Outcome{to_json(vamos()), false}; }; });

  auto* rank_cmd = app.add_subcommand("rank", "Matroid rank of a set, by bases and by degree");
  matroid_opt(rank_cmd);
  rank_cmd->add_option("--set", set, "Comma-separated 1-based elements")->required();
  rank_cmd->callback([&] { run = [&] { return cmd_rank(matroid_spec, set); }; });

  auto* bases_cmd = app.add_subcommand("bases-poly", "Bases generating polynomial");
  matroid_opt(bases_cmd);
  bases_cmd->callback([&] { run = [&] { return Outcome{to_json(bases_polynomial(load_matroid(matroid_spec))), false}; }; });

  auto* poly_cmd = app.add_subcommand("polymatroid-check", "Check the polymatroid axioms");
  poly_cmd->add_option("--table", table, "Rank table JSON");
  poly_cmd->add_option("--matroid", matroid_spec, "Use the rank table of a matroid");
  poly_cmd->callback([&] { run = [&] { return cmd_polymatroid_check(table, matroid_spec); }; });

  auto* ing = app.add_subcommand("ingleton", "Ingleton inequality at a quadruple or over a scan");
  ing->add_option("--table", table, "Rank table JSON");
  ing->add_option("--matroid", matroid_spec, "Use the rank table of a matroid");
  ing->add_option("--quadruple", quadruple, "'paper' or four sets like '5,6;7,8;1,4;2,3'");
  ing->add_option("--scan", scan, "paper, disjoint-pairs or full");
  ing->add_option("--full-scan-limit", full_limit, "Largest ground set for --scan full");
  ing->callback([&] {
    run = [&] { return cmd_ingleton(table, matroid_spec, quadruple, scan, full_limit); };
  });

  auto* jump = app.add_subcommand("jumpsystem", "Jump-system checks on a lattice point set or a support");
  jump->add_option("--points", points, "Lattice point set JSON");
  jump->add_option("--poly", poly, "Use the support of a polynomial");
  jump->add_option("--matroid", matroid_spec, "Use the support of a bases polynomial");
  jump->add_flag("--shift", shift, "Use p(x + 1) instead of p");
  jump->add_flag("--interval", interval, "Also check the interval property");
  jump->callback([&] { run = [&] { return cmd_jumpsystem(points, poly, matroid_spec, shift, interval); }; });

  auto* expand = app.add_subcommand("expand-det", "Expand det(A0 + sum x_i A_i)");
  expand->add_option("--rep", rep, "Representation JSON")->required();
  expand->add_option("--max-size", max_size, "Largest matrix size");
  expand->callback([&] { run = [&] { return cmd_expand_det(rep, max_size); }; });

  auto* cb = app.add_subcommand("cauchy-binet", "Expand det(B diag(z) B*) by Cauchy-Binet");
  cb->add_option("--matrix", matrix, "Matrix JSON")->required();
  cb->callback([&] { run = [&] { return cmd_cauchy_binet(matrix); }; });

  auto* verify = app.add_subcommand("verify-rep", "Check p = det(A0 + sum x_i A_i) exactly");
  verify->add_option("--poly", poly, "Polynomial JSON")->required();
  verify->add_option("--rep", rep, "Representation JSON")->required();
  verify->add_option("--max-size", max_size, "Largest matrix size");
  verify->callback([&] { run = [&] { return cmd_verify_rep(poly, rep, max_size); }; });

  auto* reduce = app.add_subcommand("reduce-rep", "Reduce a monic N x N pencil to d x d");
  reduce->add_option("--rep", rep, "Representation JSON")->required();
  reduce->add_option("--degree", degree, "Degree d of the polynomial")->required();
  reduce->add_option("--tol-psd", tol.psd, "PSD tolerance");
  reduce->add_option("--tol-rank", tol.rank, "Rank tolerance");
  reduce->add_option("--tol-monic", tol.monic, "Monic normalization tolerance");
  reduce->callback([&] { run = [&] { return cmd_reduce_rep(rep, degree, tol); }; });

  auto* rz = app.add_subcommand("rz-check", "Exact real-rootedness of p(t x) along random directions");
  rz->add_option("--poly", poly, "Polynomial JSON")->required();
  rz->add_option("--dirs", dirs, "Number of directions");
  seed_opt(rz);
  rz->callback([&] { run = [&] { return cmd_rz_check(poly, dirs, seed); }; });

  auto* hr = app.add_subcommand("hyperbolic-rank", "Degree of t -> h(e + t x)");
  hr->add_option("--poly", poly, "Polynomial JSON")->required();
  hr->add_option("--e", e, "Point e, e.g. 1,1,1")->required();
  hr->add_option("--e2", e2, "Second point; compares the two ranks");
  hr->add_option("--x", x, "Direction x")->required();
  hr->callback([&] { run = [&] { return cmd_hyperbolic_rank(poly, e, e2, x); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_name() == "--seed" || opt->get_name() == "--help") continue;
    g_digest_input += opt->get_name() + '=';
    for (const auto& r : opt->results()) g_digest_input += r + ',';
    g_digest_input += '\0';
  }
  if (sub->get_option_no_throw("--seed")) g_digest_input += "seed=" + std::to_string(seed);

  json envelope = {{"command", command}};
  int code = 0;
  try {
    Outcome out = run();
    envelope["result"] = std::move(out.result);
    envelope["status"] = out.violation ? "violation" : "ok";
    code = out.violation ? 1 : 0;
  } catch (const Error& err) {
    envelope["result"] = {{"error", errc_name(err.code())}, {"message", err.what()}};
    envelope["status"] = "error";
    code = 2;
  } catch (const std::exception& err) {
    envelope["result"] = {{"error", "Internal"}, {"message", err.what()}};
    envelope["status"] = "error";
    code = 2;
  }
  envelope["input_digest"] = sha256_hex(g_digest_input);
  std::cout << (pretty ? envelope.dump(2) : envelope.dump()) << '\n';
  return code;
}
