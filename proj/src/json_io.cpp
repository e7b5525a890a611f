#include "spectra/json_io.hpp"

#include <cmath>
#include <sstream>

namespace spectra {
namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned()) fail(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

template <class S>
Polynomial<S> poly_from_terms(const json& j, S (*coeff)(const json&)) {
  const std::size_t n = size_field(j, "vars");
  const json& terms = field(j, "terms");
  if (!terms.is_array()) fail("'terms' must be an array");
  std::vector<std::pair<Monomial, S>> list;
  for (const auto& t : terms) {
    const json& e = field(t, "e");
    if (!e.is_array()) fail("'e' must be an array");
    std::vector<std::uint32_t> exps;
    for (const auto& x : e) {
      if (!x.is_number_unsigned()) fail("exponents must be nonnegative integers");
      exps.push_back(x.get<std::uint32_t>());
    }
    list.emplace_back(Monomial(std::move(exps)), coeff(field(t, "c")));
  }
  return Polynomial<S>::from_terms(n, list);
}

template <class S>
json poly_to_json(const Polynomial<S>& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"c", to_json(c)}, {"e", m.exponents()}});
  return {{"vars", p.num_vars()}, {"terms", terms}};
}

Complex complex_from_json(const json& j) {
  auto part = [](const json& v) -> double {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return Rational::parse(v.get<std::string>()).to_double();
    fail("matrix entry must be a number, a rational string or {re, im}");
  };
  if (j.is_object()) return {part(field(j, "re")), j.contains("im") ? part(j.at("im")) : 0.0};
  return {part(j), 0.0};
}

template <class S, class F>
Matrix<S> matrix_from_json(const json& j, F entry) {
  const std::size_t rows = size_field(j, "rows");
  const std::size_t cols = size_field(j, "cols");
  const json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows) fail("'entries' must have one array per row");
  Matrix<S> m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!entries[r].is_array() || entries[r].size() != cols) fail("row " + std::to_string(r + 1) + " has wrong length");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = entry(entries[r][c]);
  }
  return m;
}

json double_json(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const GaussRational& z) {
  if (z.is_real()) return z.re().str();
  return {{"re", z.re().str()}, {"im", z.im().str()}};
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail("expected a rational string \"a/b\" or an integer, got " + j.dump());
}

GaussRational gauss_from_json(const json& j) {
  if (j.is_object()) {
    Rational re = rational_from_json(field(j, "re"));
    Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
    return {re, im};
  }
  return rational_from_json(j);
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    if (first == std::string::npos) fail("empty entry in list '" + text + "'");
    out.push_back(Rational::parse(item.substr(first, last - first + 1)));
  }
  return out;
}

json to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

json to_json(const Poly& p) { return poly_to_json(p); }
json to_json(const GaussPoly& p) { return poly_to_json(p); }
json to_json(const AnyPoly& p) {
  return std::visit([](const auto& q) { return to_json(q); }, p);
}

AnyPoly poly_from_json(const json& j) {
  GaussPoly wide = poly_from_terms<GaussRational>(j, &gauss_from_json);
  if (auto real = real_part(wide)) return *real;
  return wide;
}

Poly real_poly_from_json(const json& j) {
  auto p = poly_from_json(j);
  if (auto* real = std::get_if<Poly>(&p)) return *real;
  fail("polynomial has non-real coefficients");
}

json to_json(const UnivariatePoly& q) {
  json coeffs = json::array();
  for (const auto& c : q.coeffs()) coeffs.push_back(c.str());
  return coeffs;
}

json to_json(const Matroid& m) {
  json bases = json::array();
  for (SubsetMask b : m.bases()) bases.push_back(b.elements());
  return {{"n", m.ground_size()}, {"bases", bases}};
}

Matroid matroid_from_json(const json& j) {
  const std::size_t n = size_field(j, "n");
  const json& bases = field(j, "bases");
  if (!bases.is_array()) fail("'bases' must be an array");
  std::vector<SubsetMask> masks;
  for (const auto& b : bases) {
    if (!b.is_array()) fail("each basis must be an array of 1-based elements");
    masks.push_back(SubsetMask::of(b.get<std::vector<int>>()));
  }
  return matroid_from_bases(n, std::move(masks));
}

json to_json(const RankTable& r) { return {{"n", r.ground_size()}, {"values", r.values()}}; }

RankTable rank_table_from_json(const json& j) {
  const std::size_t n = size_field(j, "n");
  const json& values = field(j, "values");
  if (!values.is_array()) fail("'values' must be an array");
  std::vector<std::int64_t> v;
  for (const auto& x : values) {
    if (!x.is_number_integer()) fail("rank values must be integers");
    v.push_back(x.get<std::int64_t>());
  }
  return RankTable(n, std::move(v));
}

json to_json(const SubsetMask& s) { return s.elements(); }

json to_json(const IngletonReport& r) {
  const auto& q = r.quadruple;
  return {{"quadruple", {to_json(q.s1), to_json(q.s2), to_json(q.s3), to_json(q.s4)}},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"deficit", r.deficit()}};
}

json to_json(const PolymatroidViolation& v) {
  return {{"axiom", axiom_name(v.axiom)}, {"S", to_json(v.s)}, {"T", to_json(v.t)}, {"lhs", v.lhs}, {"rhs", v.rhs}};
}

json to_json(const LatticePointSet& s) {
  json points = json::array();
  for (const auto& p : s) points.push_back(p);
  return {{"dim", s.dim()}, {"points", points}};
}

LatticePointSet lattice_from_json(const json& j) {
  LatticePointSet out(size_field(j, "dim"));
  const json& points = field(j, "points");
  if (!points.is_array()) fail("'points' must be an array");
  for (const auto& p : points) {
    if (!p.is_array()) fail("each point must be an array of integers");
    out.insert(p.get<LatticePoint>());
  }
  return out;
}

json to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"hermitian", is_hermitian(m)}, {"entries", rows}};
}

ExactMatrix exact_matrix_from_json(const json& j) {
  ExactMatrix m = matrix_from_json<GaussRational>(j, [](const json& e) { return gauss_from_json(e); });
  if (j.value("hermitian", false) && !is_hermitian(m)) fail("matrix flagged hermitian is not hermitian");
  return m;
}

json to_json(const Representation& rep) {
  json pencil = json::array();
  for (const auto& a : rep.pencil) pencil.push_back(to_json(a));
  json out = {{"size", rep.size}, {"pencil", pencil}};
  if (rep.a0) out["A0"] = to_json(*rep.a0);
  return out;
}

Representation representation_from_json(const json& j) {
  Representation rep;
  rep.size = size_field(j, "size");
  if (j.contains("A0") && !j.at("A0").is_null()) rep.a0 = exact_matrix_from_json(j.at("A0"));
  const json& pencil = field(j, "pencil");
  if (!pencil.is_array()) fail("'pencil' must be an array of matrices");
  for (const auto& a : pencil) rep.pencil.push_back(exact_matrix_from_json(a));
  rep.validate();
  return rep;
}

json to_json(const FloatMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Complex z = m(r, c);
      row.push_back(z.imag() == 0.0 ? double_json(z.real()) : json{{"re", z.real()}, {"im", z.imag()}});
    }
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"hermitian", m.isApprox(m.adjoint())}, {"entries", rows}};
}

FloatMatrix float_matrix_from_json(const json& j) {
  return matrix_from_json<Complex>(j, [](const json& e) { return complex_from_json(e); });
}

FloatRepresentation float_representation_from_json(const json& j) {
  FloatRepresentation rep;
  rep.size = size_field(j, "size");
  if (j.contains("A0") && !j.at("A0").is_null()) {
    const FloatMatrix a0 = float_matrix_from_json(j.at("A0"));
    const auto m = static_cast<Eigen::Index>(rep.size);
    if (a0.rows() != m || a0.cols() != m || (a0 - FloatMatrix::Identity(m, m)).cwiseAbs().maxCoeff() != 0.0)
      fail("size reduction needs a monic pencil (A0 = I)");
  }
  const json& pencil = field(j, "pencil");
  if (!pencil.is_array()) fail("'pencil' must be an array of matrices");
  for (const auto& a : pencil) {
    rep.pencil.push_back(float_matrix_from_json(a));
    if (rep.pencil.back().rows() != static_cast<Eigen::Index>(rep.size) ||
        rep.pencil.back().cols() != static_cast<Eigen::Index>(rep.size))
      fail("pencil matrices must be size x size");
  }
  return rep;
}

json to_json(const ReductionReport& r) {
  json out;
  out["size"] = r.size;
  out["degree"] = r.degree;
  out["num_vars"] = r.num_vars;
  out["ok"] = r.ok();
  if (r.failed_stage) {
    out["failed_stage"] = stage_name(*r.failed_stage);
    out["error"] = errc_name(*r.failure_code);
    out["message"] = r.failure;
    out["witness"] = {{"index", r.failure_index}, {"value", double_json(r.failure_value)}};
  }
  json pre;
  pre["min_eigenvalues"] = json::array();
  for (double v : r.preconditions.min_eigenvalues) pre["min_eigenvalues"].push_back(double_json(v));
  pre["residual_min_eigenvalue"] = double_json(r.preconditions.residual_min_eigenvalue);
  pre["residual_rank"] = r.preconditions.residual_rank;
  out["preconditions"] = pre;
  out["factor_counts"] = r.factor_counts;
  out["residual_factor_count"] = r.residual_factor_count;
  out["reconstruction_residual"] = double_json(r.reconstruction_residual);
  if (r.transversality) {
    out["transversality"] = {{"rank_u", r.transversality->rank_u},
                             {"rank_v", r.transversality->rank_v},
                             {"rank_combined", r.transversality->rank_combined},
                             {"residual", double_json(r.transversality->residual)}};
  }
  if (!r.reduced.empty()) {
    out["scale"] = double_json(r.scale);
    out["gram_min_eigenvalue"] = double_json(r.gram_min_eigenvalue);
    out["reduced"] = json::array();
    for (const auto& t : r.reduced) out["reduced"].push_back(to_json(t));
  }
  if (!r.monic.empty()) {
    out["monic"] = json::array();
    for (const auto& b : r.monic) out["monic"].push_back(to_json(b));
    out["monic_residual"] = double_json(r.monic_residual);
    out["identity_residual"] = double_json(r.identity_residual);
  }
  return out;
}

}  // namespace spectra
