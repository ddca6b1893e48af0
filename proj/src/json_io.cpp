#include "trivspec/json_io.hpp"

namespace trivspec {

namespace {

[[noreturn]] void bad(const std::string& ptr, const std::string& what) {
  fail(Errc::InvalidInput, (ptr.empty() ? "/" : ptr) + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& ptr) {
  if (!j.is_object()) bad(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(ptr, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t size_from_json(const Json& j, const std::string& ptr) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    bad(ptr, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

const char* family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::Custom: return "custom";
    case FamilyKind::Trivial: return "trivial";
    case FamilyKind::Quadratic: return "quadratic";
    case FamilyKind::Quaternion: return "quaternion";
    case FamilyKind::HyperRadicial: return "hyper-radicial";
    case FamilyKind::Extension: return "extension";
  }
  return "custom";
}

Json opt_vec(const std::optional<Vec>& v) { return v ? to_json(*v) : Json(nullptr); }

Json verdict_fields(Verdict v, const std::string& reason) {
  Json j;
  j["verdict"] = verdict_name(v);
  j["reason"] = reason;
  return j;
}

template <class T>
std::string with_errc(const T& f) {
  try {
    f();
  } catch (const Error& e) {
    return std::string(errc_name(e.code())) + ": " + e.what();
  }
  return "";
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(Errc::InvalidInput, std::string("/: malformed JSON: ") + e.what());
  }
}

Json to_json(const Scalar& s) { return s.str(); }

Json to_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

Json to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

Json to_json(const DMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Vec e = m.entry(i, c);
      row.push_back(e.size() == 1 ? to_json(e[0]) : to_json(e));
    }
    j.push_back(std::move(row));
  }
  return j;
}

Json to_json(const Profile& p) {
  Json j;
  j["type"] = type_tag(p.type);
  j["sigma"] = to_json(p.sigma);
  j["e"] = to_json(p.e);
  j["q"] = to_json(p.q.coeffs);
  return j;
}

Json to_json(const Algebra& alg) {
  Json j;
  j["field"] = alg.base().spec();
  j["degree"] = alg.degree();
  j["family"] = family_name(alg.family().kind);
  if (!alg.family().params.empty()) j["params"] = to_json(alg.family().params);
  Json st = Json::array();
  for (std::size_t a = 0; a < alg.degree(); ++a) {
    Json ra = Json::array();
    for (std::size_t b = 0; b < alg.degree(); ++b) {
      Vec c;
      for (std::size_t k = 0; k < alg.degree(); ++k) c.push_back(alg.c(a, b, k));
      ra.push_back(to_json(c));
    }
    st.push_back(std::move(ra));
  }
  j["structure"] = std::move(st);
  j["unit"] = to_json(alg.unit());
  if (alg.attached_profile()) j["profile"] = to_json(*alg.attached_profile());
  return j;
}

Json to_json(const OperatorSpace& s) {
  Json j;
  j["schema"] = kSchema;
  j["algebra"] = to_json(*s.algebra());
  j["rows"] = s.rows();
  j["cols"] = s.cols();
  j["dim"] = s.dim();
  Json b = Json::array();
  for (const auto& m : s.basis()) b.push_back(to_json(m));
  j["basis"] = std::move(b);
  return j;
}

Json to_json(const DSubspace& w) {
  Json j;
  j["ambient"] = w.ambient();
  j["dim"] = w.dim();
  Json b = Json::array();
  for (const auto& v : w.basis()) b.push_back(to_json(v));
  j["basis"] = std::move(b);
  j["pivot_rows"] = w.pivot_rows();
  return j;
}

Json to_json(const NonisotropyResult& r) {
  Json j = verdict_fields(r.verdict, r.reason);
  j["witness"] = opt_vec(r.witness);
  return j;
}

Json to_json(const SpectrumVerdict& v) {
  Json j = verdict_fields(v.verdict, v.reason);
  j["checked"] = v.checked;
  j["element"] = v.element ? to_json(*v.element) : Json(nullptr);
  j["fixed_vector"] = opt_vec(v.fixed_vector);
  return j;
}

Json to_json(const IntransitivityVerdict& v) {
  Json j = verdict_fields(v.verdict, v.reason);
  j["witness_subspace"] = v.witness_subspace ? to_json(*v.witness_subspace) : Json(nullptr);
  j["witness_vector"] = opt_vec(v.witness_vector);
  return j;
}

namespace {
Json clause(const ClauseResult& c) {
  Json j;
  j["applicable"] = c.applicable;
  j["holds"] = c.holds;
  j["detail"] = c.detail;
  return j;
}
}  // namespace

Json to_json(const AtkinsonReport& r) {
  Json j;
  j["n"] = r.n;
  j["d"] = r.d;
  j["dim"] = r.dim;
  j["trk"] = r.trk;
  j["alpha"] = r.alpha;
  j["deep"] = to_json(r.deep);
  j["a"] = clause(r.a);
  j["b"] = clause(r.b);
  j["c"] = clause(r.c);
  j["alt_dim"] = r.alt_dim;
  j["type"] = r.type ? Json(type_tag(r.type->profile.type)) : Json(nullptr);
  return j;
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["verdict"] = verdict_name(r.verdict);
  j["partition"] = r.partition;
  Json fl = Json::array();
  for (const auto& w : r.flag) fl.push_back(to_json(w));
  j["flag"] = std::move(fl);
  j["basis"] = to_json(r.basis);
  j["spectrum"] = to_json(r.spectrum);
  Json bl = Json::array();
  for (const auto& b : r.blocks) {
    Json x;
    x["size"] = b.size;
    x["dim"] = b.dim;
    x["tag"] = b.tag;
    x["profile"] = b.profile ? to_json(*b.profile) : Json(nullptr);
    x["bilinear"] = b.bilinear ? to_json(*b.bilinear) : Json(nullptr);
    x["sesquilinear_gram"] = b.form ? to_json(b.form->gram) : Json(nullptr);
    x["e_nonisotropy"] = to_json(b.nonisotropy);
    x["matches_alternating_maps"] = b.matches_alternating_maps;
    bl.push_back(std::move(x));
  }
  j["blocks"] = std::move(bl);
  return j;
}

Json to_json(const LemmaVerdict& v) {
  Json j = verdict_fields(v.verdict, v.reason);
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  return j;
}

Json to_json(const AffineSpace& a) {
  Json j;
  j["schema"] = kSchema;
  j["base"] = to_json(a.base);
  j["direction"] = to_json(a.direction);
  j["codim"] = a.base.flat().size() - a.direction.dim();
  return j;
}

Json to_json(const MinrankVerdict& v) {
  Json j = verdict_fields(v.verdict, v.reason);
  j["checked"] = v.checked;
  j["min_rank_seen"] = v.min_rank_seen == SIZE_MAX ? Json(nullptr) : Json(v.min_rank_seen);
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  return j;
}

Json to_json(const IdempotentVerdict& v) {
  Json j = verdict_fields(v.verdict, v.reason);
  j["witness_direction"] = opt_vec(v.witness_direction);
  j["example"] = v.example ? to_json(*v.example) : Json(nullptr);
  return j;
}

Json to_json(const ElementwiseVerdict& v) {
  Json j = verdict_fields(v.verdict, v.reason);
  j["checked"] = v.checked;
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  return j;
}

Json to_json(const MotzkinTausskyReport& r) {
  Json j;
  j["verdict"] = verdict_name(r.verdict);
  j["pairs"] = r.pairs;
  j["hypothesis_pairs"] = r.hypothesis_pairs;
  if (r.counterexample) {
    j["counterexample"] = Json::array({to_json(r.counterexample->first), to_json(r.counterexample->second)});
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

Json to_json(const OracleResult& r) {
  Json j;
  j["schema"] = kSchema;
  j["verdict"] = verdict_name(r.verdict);
  j["max"] = r.max_dim;
  j["element_checks"] = r.element_checks;
  j["predicted_checks"] = r.predicted_checks;
  j["spaces_visited"] = r.spaces_visited;
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

Json to_json(const PolyRank& r) {
  Json j;
  j["rank"] = r.rank;
  j["verdict"] = verdict_name(r.verdict);
  j["failure_bound"] = r.failure_bound;
  j["maxrk_interpretation"] = r.maxrk_interpretation;
  j["method"] = r.method;
  return j;
}

Json to_json(const FlandersAtkinsonReport& r) {
  Json j;
  j["d_zero"] = r.d_zero;
  j["max_k"] = r.max_k;
  j["rank"] = to_json(r.rank);
  j["note"] = r.note;
  return j;
}

Json to_json(const AlternatorCatcherReport& r) {
  Json j;
  j["dim_alt"] = r.dim_alt;
  j["dim_catch"] = r.dim_catch;
  j["forward_ok"] = r.forward_ok;
  j["backward_ok"] = r.backward_ok;
  j["ok"] = r.ok();
  return j;
}

Json to_json(const QuadraticTypeDetection& t) {
  Json j;
  j["type"] = type_tag(t.profile.type);
  j["profile"] = to_json(t.profile);
  j["alternator"] = to_json(t.alternator);
  j["sesquilinear_gram"] = to_json(t.form.gram);
  j["norm_nonisotropy"] = to_json(t.norm_nonisotropy);
  return j;
}

Json to_json(const DivisionReport& r) {
  Json j = verdict_fields(r.verdict, r.reason);
  if (r.zero_divisor) {
    j["zero_divisor"] = Json::array({to_json(r.zero_divisor->first), to_json(r.zero_divisor->second)});
  } else {
    j["zero_divisor"] = nullptr;
  }
  return j;
}

Field field_from_json(const Json& j, const std::string& ptr) {
  std::string spec;
  if (j.is_string()) {
    spec = j.get<std::string>();
  } else if (j.is_object()) {
    const Json& kind = member(j, "kind", ptr);
    if (!kind.is_string()) bad(ptr + "/kind", "expected a string");
    std::string k = kind.get<std::string>();
    if (k == "rational") return Field::rationals();
    std::uint64_t p = size_from_json(member(j, "p", ptr), ptr + "/p");
    if (k == "prime") return Field::prime(p);
    if (k == "rational_function") return Field::rational_functions(p);
    bad(ptr + "/kind", "unknown field kind '" + k + "'");
  } else {
    bad(ptr, "expected a field spec");
  }
  std::string err = with_errc([&] { Field::parse(spec); });
  if (!err.empty()) bad(ptr, err);
  return Field::parse(spec);
}

Scalar scalar_from_json(const Field& f, const Json& j, const std::string& ptr) {
  std::string text;
  if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_integer()) {
    text = std::to_string(j.get<std::int64_t>());
  } else {
    bad(ptr, "expected a scalar string");
  }
  try {
    return f.parse_scalar(text);
  } catch (const Error& e) {
    bad(ptr, e.what());
  }
}

Vec vec_from_json(const Field& f, const Json& j, const std::string& ptr) {
  if (!j.is_array()) bad(ptr, "expected an array of scalars");
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(scalar_from_json(f, j[i], ptr + "/" + std::to_string(i)));
  return v;
}

Matrix matrix_from_json(const Field& f, const Json& j, const std::string& ptr) {
  if (!j.is_array()) bad(ptr, "expected an array of rows");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(vec_from_json(f, j[i], ptr + "/" + std::to_string(i)));
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != cols) bad(ptr + "/" + std::to_string(i), "ragged matrix");
  return Matrix::from_rows(f, rows, cols);
}

DMatrix dmatrix_from_json(const AlgebraPtr& alg, const Json& j, const std::string& ptr) {
  if (!j.is_array()) bad(ptr, "expected an array of rows");
  const std::size_t d = alg->degree();
  std::vector<std::vector<Vec>> entries;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string rp = ptr + "/" + std::to_string(i);
    if (!j[i].is_array()) bad(rp, "expected a row");
    std::vector<Vec> row;
    for (std::size_t c = 0; c < j[i].size(); ++c) {
      const std::string ep = rp + "/" + std::to_string(c);
      const Json& e = j[i][c];
      Vec v;
      if (e.is_array()) {
        v = vec_from_json(alg->base(), e, ep);
      } else if (d == 1) {
        v = {scalar_from_json(alg->base(), e, ep)};
      } else {
        bad(ep, "expected " + std::to_string(d) + " coordinates");
      }
      if (v.size() != d) bad(ep, "expected " + std::to_string(d) + " coordinates");
      row.push_back(std::move(v));
    }
    if (!entries.empty() && row.size() != entries[0].size()) bad(rp, "ragged matrix");
    entries.push_back(std::move(row));
  }
  return DMatrix::from_entries(alg, entries);
}

Profile profile_from_json(const Algebra& alg, const Json& j, const std::string& ptr) {
  const Field& F = alg.base();
  Profile p;
  const Json& t = member(j, "type", ptr);
  if (!t.is_string()) bad(ptr + "/type", "expected a type tag");
  try {
    p.type = parse_type_tag(t.get<std::string>());
  } catch (const Error& e) {
    bad(ptr + "/type", e.what());
  }
  p.sigma = matrix_from_json(F, member(j, "sigma", ptr), ptr + "/sigma");
  p.e = vec_from_json(F, member(j, "e", ptr), ptr + "/e");
  if (p.sigma.rows() != alg.degree() || p.sigma.cols() != alg.degree()) bad(ptr + "/sigma", "must be d x d");
  try {
    p.q = norm_form(alg, p.sigma);
    validate_profile(alg, p);
  } catch (const Error& e) {
    bad(ptr, std::string(errc_name(e.code())) + ": " + e.what());
  }
  return p;
}

AlgebraPtr algebra_from_json(const Json& j, const std::string& ptr) {
  if (!j.is_object()) bad(ptr, "expected an algebra object");
  Field F = field_from_json(member(j, "field", ptr), ptr + "/field");
  std::string family = "custom";
  if (j.contains("family")) {
    if (!j["family"].is_string()) bad(ptr + "/family", "expected a family name");
    family = j["family"].get<std::string>();
  } else if (!j.contains("degree") && !j.contains("structure")) {
    family = "trivial";
  }
  Vec params;
  if (j.contains("params")) params = vec_from_json(F, j["params"], ptr + "/params");
  auto need = [&](std::size_t k) {
    if (params.size() != k) bad(ptr + "/params", "expected " + std::to_string(k) + " parameters");
  };
  AlgebraPtr alg;
  try {
    if (family == "trivial") {
      alg = Algebra::trivial(F);
    } else if (family == "quadratic") {
      need(2);
      alg = Algebra::quadratic(F, params[0], params[1]);
    } else if (family == "quaternion") {
      need(2);
      alg = Algebra::quaternion(F, params[0], params[1]);
    } else if (family == "hyper-radicial") {
      need(1);
      alg = Algebra::hyper_radicial(F, params[0]);
    } else if (family == "extension") {
      if (j.contains("params")) {
        alg = Algebra::extension(F, params);
      } else {
        alg = Algebra::default_extension(F, size_from_json(member(j, "degree", ptr), ptr + "/degree"));
      }
    } else if (family == "custom") {
      std::size_t d = size_from_json(member(j, "degree", ptr), ptr + "/degree");
      const Json& st = member(j, "structure", ptr);
      Vec c;
      if (!st.is_array() || st.size() != d) bad(ptr + "/structure", "expected d x d x d constants");
      for (std::size_t a = 0; a < d; ++a) {
        if (!st[a].is_array() || st[a].size() != d) bad(ptr + "/structure/" + std::to_string(a), "expected d rows");
        for (std::size_t b = 0; b < d; ++b) {
          const std::string bp = ptr + "/structure/" + std::to_string(a) + "/" + std::to_string(b);
          Vec v = vec_from_json(F, st[a][b], bp);
          if (v.size() != d) bad(bp, "expected d coordinates");
          c.insert(c.end(), v.begin(), v.end());
        }
      }
      Vec unit = vec_from_json(F, member(j, "unit", ptr), ptr + "/unit");
      alg = Algebra::create(F, d, c, unit);
    } else {
      bad(ptr + "/family", "unknown family '" + family + "'");
    }
  } catch (const Error& e) {
    if (e.code() == Errc::InvalidInput && std::string(e.what()).rfind(ptr.empty() ? "/" : ptr, 0) == 0) throw;
    bad(ptr, std::string(errc_name(e.code())) + ": " + e.what());
  }
  if (family != "custom" && j.contains("structure")) {
    AlgebraPtr raw;
    Json copy = j;
    copy["family"] = "custom";
    copy.erase("params");
    copy.erase("profile");
    raw = algebra_from_json(copy, ptr);
    if (raw->structure() != alg->structure() || raw->unit() != alg->unit())
      bad(ptr + "/structure", "structure constants disagree with the family");
  }
  if (j.contains("profile")) {
    Profile p = profile_from_json(*alg, j["profile"], ptr + "/profile");
    alg = Algebra::create(F, alg->degree(), alg->structure(), alg->unit(), alg->family(), p);
  }
  return alg;
}

OperatorSpace space_from_json(const Json& j, const std::string& ptr) {
  if (!j.is_object()) bad(ptr, "expected an operator space object");
  if (j.contains("schema") && j["schema"] != kSchema) bad(ptr + "/schema", "unsupported schema");
  AlgebraPtr alg = algebra_from_json(member(j, "algebra", ptr), ptr + "/algebra");
  std::size_t rows = size_from_json(member(j, "rows", ptr), ptr + "/rows");
  std::size_t cols = size_from_json(member(j, "cols", ptr), ptr + "/cols");
  const Json& b = member(j, "basis", ptr);
  if (!b.is_array()) bad(ptr + "/basis", "expected an array of matrices");
  std::vector<DMatrix> gens;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const std::string bp = ptr + "/basis/" + std::to_string(i);
    DMatrix m = dmatrix_from_json(alg, b[i], bp);
    if (m.rows() != rows || m.cols() != cols) bad(bp, "shape differs from rows x cols");
    gens.push_back(std::move(m));
  }
  return OperatorSpace::span(alg, rows, cols, gens);
}

AffineSpace affine_from_json(const Json& j, const std::string& ptr) {
  AffineSpace a;
  a.direction = space_from_json(member(j, "direction", ptr), ptr + "/direction");
  a.base = dmatrix_from_json(a.direction.algebra(), member(j, "base", ptr), ptr + "/base");
  if (a.base.rows() != a.direction.rows() || a.base.cols() != a.direction.cols())
    bad(ptr + "/base", "shape differs from the direction space");
  return a;
}

}  // namespace trivspec
