#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "trivspec/json_io.hpp"

using namespace trivspec;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
  bool deterministic = false;
  std::string format = "json";
};

struct AlgebraOpts {
  std::string file;
  std::string field = "fp:5";
  std::size_t degree = 1;
  std::string family;
  std::string params;
};

struct Result {
  Json body;
  int code = 0;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::InvalidInput, "/: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  Json j = parse_json_text(ss.str());
  // Output of another trivspec command: read its result.
  if (j.is_object() && j.contains("command") && j.contains("result")) return j["result"];
  return j;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

AlgebraPtr make_algebra(const AlgebraOpts& o) {
  if (!o.file.empty()) return algebra_from_json(read_json_file(o.file));
  Json j;
  j["field"] = o.field;
  if (o.family.empty()) {
    j["family"] = o.degree == 1 ? "trivial" : "extension";
    j["degree"] = o.degree;
  } else {
    j["family"] = o.family;
    j["degree"] = o.degree;
    if (!o.params.empty()) j["params"] = split(o.params, ',');
  }
  return algebra_from_json(j);
}

Profile profile_of(const AlgebraPtr& alg) {
  return alg->attached_profile() ? *alg->attached_profile() : standard_profile(*alg);
}

int code_for(Errc c) {
  switch (c) {
    case Errc::Internal:
    case Errc::CounterexampleFound:
    case Errc::BoundViolated:
    case Errc::IdentityViolated: return 4;
    case Errc::BudgetExceeded:
    case Errc::Unsupported:
    case Errc::UnknownNonisotropy: return 2;
    default: return 3;
  }
}

void add_algebra_options(CLI::App* sc, AlgebraOpts& o) {
  sc->add_option("--algebra", o.file, "algebra descriptor JSON file");
  sc->add_option("--field", o.field, "fp:<p>, q or fps:<p>");
  sc->add_option("--degree", o.degree, "degree of D over F");
  sc->add_option("--family", o.family, "trivial, quadratic, quaternion, hyper-radicial, extension");
  sc->add_option("--params", o.params, "comma separated family parameters");
}

void print_text(const Json& j, std::ostream& out, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_object()) {
      print_text(it.value(), out, prefix + it.key() + ".");
    } else {
      out << prefix << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
          << "\n";
    }
  }
}

// Some e-nonisotropic P in GL_n(D), found by random search.
DMatrix random_nonisotropic(const AlgebraPtr& alg, std::size_t n, const Profile& prof, std::uint64_t budget,
                            Rng& rng) {
  for (int t = 0; t < 64; ++t) {
    DMatrix p = DMatrix::from_flat(alg, n, n, rng.vec(alg->base(), n * n * alg->degree()));
    if (rank_D(p) < n) continue;
    if (is_e_nonisotropic(p, prof, budget).verdict == Verdict::Certified) return p;
  }
  fail(Errc::NotNonisotropic, "no e-nonisotropic matrix found in 64 random draws");
}

Result bundle(const Globals& g) {
  Rng rng(g.seed);
  Json out;
  Field F3 = Field::prime(3), F5 = Field::prime(5), F7 = Field::prime(7);
  AlgebraPtr f25 = Algebra::default_extension(F5, 2);
  out["alpha"] = Json::array();
  for (std::uint64_t n = 1; n <= 3; ++n)
    for (std::uint64_t d : {1, 2, 4}) out["alpha"].push_back(Json::array({n, d, alpha(n, d)}));
  OperatorSpace tri = construct_triangular_model(f25, 2);
  out["triangular_F25"] = {{"dim", tri.dim()}, {"spectrum", to_json(has_trivial_spectrum(tri, g.budget, rng))}};
  OperatorSpace sh = construct_SH(f25, 2, standard_profile(*f25));
  out["SH2_F25"] = {{"dim", sh.dim()}, {"spectrum", to_json(has_trivial_spectrum(sh, g.budget, rng))}};
  out["oracle_M2_F3"] = to_json(exhaustive_max_trivspec(Algebra::trivial(F3), 2, g.budget));
  AffineSpace a = build_affine_minrank(Algebra::trivial(F7), 3, 3, 2);
  out["affine_minrank_F7"] = {{"codim", 18 / 2 - a.direction.dim()},
                              {"minrank", to_json(verify_minrank(a, 2, g.budget, rng))}};
  out["fuzz_F5"] = Json::array();
  for (const auto& s : random_space_fuzzer(Algebra::trivial(F5), 2, 2, 3, g.seed)) out["fuzz_F5"].push_back(to_json(s));
  return {out, 0};
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  CLI::App app{"Trivial-spectrum matrix spaces over division algebras"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--budget", g.budget, "cap on elements visited by exhaustive checks");
  app.add_flag("--deterministic", g.deterministic, "full scans with lexicographically least witnesses");
  app.add_option("--format", g.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  AlgebraOpts ao;
  std::string in_file, aux_file;
  std::size_t n = 2, p = 2, r = 1;
  std::string partition;
  bool random_p = false;
  std::function<Result()> action;
  std::string command;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, std::function<Result()> fn) {
    CLI::App* sc = parent->add_subcommand(name, desc);
    sc->callback([&, fn, sc, parent] {
      command = parent->get_name() + " " + sc->get_name();
      action = fn;
    });
    return sc;
  };
  auto with_in = [&](CLI::App* sc) { sc->add_option("--in", in_file, "input JSON file")->required(); };
  auto space_in = [&] { return space_from_json(read_json_file(in_file)); };

  // algebra
  CLI::App* alg_cmd = app.add_subcommand("algebra", "division algebra checks");
  alg_cmd->require_subcommand(1);
  add_algebra_options(leaf(alg_cmd, "verify", "check the division algebra axioms",
                           [&] {
                             Rng rng(g.seed);
                             AlgebraPtr alg = make_algebra(ao);
                             DivisionReport rep = verify_division_algebra(*alg, g.budget, rng);
                             Json j = to_json(rep);
                             j["algebra"] = to_json(*alg);
                             return Result{j, exit_code(rep.verdict)};
                           }),
                      ao);
  add_algebra_options(leaf(alg_cmd, "profile", "standard (sigma, e, q) of a built-in family",
                           [&] {
                             AlgebraPtr alg = make_algebra(ao);
                             Profile pr = profile_of(alg);
                             CompositionClassification cc = classify_composition_form(*alg, pr.q, g.budget);
                             Json j = to_json(pr);
                             j["composition"] = {{"type", type_tag(cc.profile.type)},
                                                 {"nonisotropy", to_json(cc.nonisotropy)}};
                             return Result{j, 0};
                           }),
                      ao);

  // construct
  CLI::App* con = app.add_subcommand("construct", "build spaces");
  con->require_subcommand(1);
  {
    auto* sc = leaf(con, "triangular", "upper triangular model", [&] {
      OperatorSpace s = construct_triangular_model(make_algebra(ao), n);
      return Result{to_json(s), 0};
    });
    add_algebra_options(sc, ao);
    sc->add_option("--n", n);
    sc = leaf(con, "sh", "skew-Hermitian space with diagonal in Ker e", [&] {
      AlgebraPtr alg = make_algebra(ao);
      return Result{to_json(construct_SH(alg, n, profile_of(alg))), 0};
    });
    add_algebra_options(sc, ao);
    sc->add_option("--n", n);
    sc = leaf(con, "twisted-sh", "P^{-1} SH_n(D)", [&] {
      Rng rng(g.seed);
      AlgebraPtr alg = make_algebra(ao);
      Profile pr = profile_of(alg);
      DMatrix pm = random_p || aux_file.empty() ? random_nonisotropic(alg, n, pr, g.budget, rng)
                                                : dmatrix_from_json(alg, read_json_file(aux_file), "");
      Json j = to_json(twisted_SH(pm, pr));
      j["P"] = to_json(pm);
      return Result{j, 0};
    });
    add_algebra_options(sc, ao);
    sc->add_option("--n", n);
    sc->add_option("--P", aux_file, "JSON matrix P");
    sc->add_flag("--random", random_p, "draw an e-nonisotropic P");
    sc = leaf(con, "hermitian", "Hermitian matrices", [&] {
      AlgebraPtr alg = make_algebra(ao);
      return Result{to_json(hermitian_space(alg, n, profile_of(alg))), 0};
    });
    add_algebra_options(sc, ao);
    sc->add_option("--n", n);
    sc = leaf(con, "affine-minrank", "affine space of rank >= r", [&] {
      return Result{to_json(build_affine_minrank(make_algebra(ao), n, p, r)), 0};
    });
    add_algebra_options(sc, ao);
    sc->add_option("--n", n);
    sc->add_option("--p", p);
    sc->add_option("--r", r);
    sc = leaf(con, "affine-nonsingular", "joint of P_i + SH_{n_i}(D) with P_i = I", [&] {
      AlgebraPtr alg = make_algebra(ao);
      std::vector<DMatrix> ps;
      for (const auto& part : split(partition.empty() ? std::to_string(n) : partition, ','))
        ps.push_back(DMatrix::identity(alg, std::stoul(part)));
      return Result{to_json(build_affine_nonsingular(alg, ps, profile_of(alg), g.budget)), 0};
    });
    add_algebra_options(sc, ao);
    sc->add_option("--n", n);
    sc->add_option("--partition", partition, "comma separated block sizes");
    sc = leaf(con, "diag-model", "F I_n + i H_n(D) over F(i)", [&] {
      AlgebraPtr alg = make_algebra(ao);
      return Result{to_json(diag_model_C(alg, n, profile_of(alg))), 0};
    });
    add_algebra_options(sc, ao);
    sc->add_option("--n", n);
    sc = leaf(con, "sb", "b-symmetric endomorphisms", [&] {
      Field F = field_from_json(Json(ao.field));
      Matrix b = matrix_from_json(F, read_json_file(in_file), "");
      return Result{to_json(semisimple_space_Sb(b, g.budget)), 0};
    });
    sc->add_option("--field", ao.field);
    with_in(sc);
  }

  // verify
  CLI::App* ver = app.add_subcommand("verify", "verify properties");
  ver->require_subcommand(1);
  {
    auto* sc = leaf(ver, "spectrum", "trivial spectrum", [&] {
      Rng rng(g.seed);
      SpectrumVerdict v = has_trivial_spectrum(space_in(), g.budget, rng);
      return Result{to_json(v), exit_code(v.verdict)};
    });
    with_in(sc);
    sc = leaf(ver, "minrank", "rank lower bound of an affine space", [&] {
      Rng rng(g.seed);
      MinrankVerdict v = verify_minrank(affine_from_json(read_json_file(in_file)), r, g.budget, rng);
      return Result{to_json(v), exit_code(v.verdict)};
    });
    with_in(sc);
    sc->add_option("--r", r);
    sc = leaf(ver, "deep-intransitive", "deep intransitivity", [&] {
      Rng rng(g.seed);
      IntransitivityVerdict v = is_deeply_intransitive(space_in(), g.budget, rng);
      return Result{to_json(v), exit_code(v.verdict)};
    });
    with_in(sc);
    sc = leaf(ver, "primitive", "primitive intransitivity", [&] {
      Rng rng(g.seed);
      OperatorSpace s = space_in();
      IntransitivityVerdict v = is_primitively_intransitive(s, g.budget, rng);
      Json j = to_json(v);
      j["weak"] = to_json(is_weakly_primitively_intransitive(s, g.budget, rng));
      return Result{j, exit_code(v.verdict)};
    });
    with_in(sc);
    sc = leaf(ver, "atkinson", "dimension bounds on deeply intransitive spaces", [&] {
      Rng rng(g.seed);
      return Result{to_json(verify_atkinson_bounds(space_in(), g.budget, rng)), 0};
    });
    with_in(sc);
    sc = leaf(ver, "idempotent-property", "full rank 1 idempotent property", [&] {
      Rng rng(g.seed);
      IdempotentVerdict v = has_full_rank1_idempotent_property(space_in(), g.budget, rng);
      return Result{to_json(v), exit_code(v.verdict)};
    });
    with_in(sc);
    sc = leaf(ver, "equivalence", "P' - alpha Q^* P Q in SH_n(D)", [&] {
      Json j = read_json_file(in_file);
      if (!j.contains("algebra")) fail(Errc::InvalidInput, "/: missing \"algebra\"");
      AlgebraPtr alg = algebra_from_json(j["algebra"], "/algebra");
      auto get = [&](const char* k) {
        if (!j.contains(k)) fail(Errc::InvalidInput, std::string("/: missing \"") + k + "\"");
        return dmatrix_from_json(alg, j[k], std::string("/") + k);
      };
      if (!j.contains("alpha")) fail(Errc::InvalidInput, "/: missing \"alpha\"");
      bool ok = verify_equivalence_certificate(get("P"), get("P2"), scalar_from_json(alg->base(), j["alpha"], "/alpha"),
                                               get("Q"), profile_of(alg));
      return Result{Json{{"verdict", ok ? "Certified" : "Refuted"}}, ok ? 0 : 1};
    });
    with_in(sc);
  }

  // alternator
  CLI::App* alt = app.add_subcommand("alternator", "alternators of operator spaces");
  alt->require_subcommand(1);
  with_in(leaf(alt, "compute", "basis of Alt(S)", [&] {
    auto a = alternator_space(space_in());
    Json j;
    j["dim"] = a.size();
    j["basis"] = Json::array();
    for (const auto& m : a) j["basis"].push_back(to_json(m));
    return Result{j, 0};
  }));
  with_in(leaf(alt, "detect-type", "quadratic type from the unique alternator",
               [&] { return Result{to_json(detect_quadratic_type(space_in(), g.budget)), 0}; }));

  // generic
  CLI::App* gen = app.add_subcommand("generic", "generic matrix machinery");
  gen->require_subcommand(1);
  with_in(leaf(gen, "rank", "rank of the generic matrix", [&] {
    Rng rng(g.seed);
    PolyRank pr = poly_rank(generic_of(space_in()), rng);
    return Result{to_json(pr), exit_code(pr.verdict)};
  }));
  with_in(leaf(gen, "catchers", "catchers against alternators", [&] {
    AlternatorCatcherReport rep = alternator_catcher_check(space_in());
    return Result{to_json(rep), rep.ok() ? 0 : 4};
  }));
  {
    auto* sc = leaf(gen, "fa-check", "block identities of bounded-rank spaces containing J_r", [&] {
      Rng rng(g.seed);
      return Result{to_json(flanders_atkinson_check(space_in(), r, rng)), 0};
    });
    with_in(sc);
    sc->add_option("--r", r);
  }

  // classify
  CLI::App* cls = app.add_subcommand("classify", "classification pipeline");
  cls->require_subcommand(1);
  with_in(leaf(cls, "optimal", "classify an optimal trivial-spectrum space", [&] {
    Rng rng(g.seed);
    ClassificationReport rep = classify_optimal(space_in(), g.budget, rng);
    return Result{to_json(rep), exit_code(rep.verdict)};
  }));

  // search
  CLI::App* sea = app.add_subcommand("search", "exhaustive oracles");
  sea->require_subcommand(1);
  {
    auto oracle = [&](const std::string& name, const std::string& desc,
                      std::function<OracleResult(const AlgebraPtr&, std::size_t, std::uint64_t)> fn) {
      auto* sc = leaf(sea, name, desc, [&, fn] {
        OracleResult res = fn(make_algebra(ao), n, g.budget);
        return Result{to_json(res), exit_code(res.verdict)};
      });
      add_algebra_options(sc, ao);
      sc->add_option("--n", n);
    };
    oracle("maxdim-trivspec", "largest trivial-spectrum subspace", exhaustive_max_trivspec);
    oracle("maxdim-diag", "largest all-diagonalisable subspace", exhaustive_max_diagonalisable);
    oracle("maxdim-semisimple", "largest all-semisimple subspace", exhaustive_max_semisimple);
  }

  // report
  CLI::App* rep = app.add_subcommand("report", "reports");
  rep->require_subcommand(1);
  leaf(rep, "bundle", "fixed bundle of small computations", [&] { return bundle(g); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  Json out;
  out["schema"] = kSchema;
  out["command"] = command;
  out["seed"] = g.seed;
  out["budget"] = g.budget;
  out["deterministic"] = g.deterministic;
  int code = 0;
  try {
    Result res = action();
    out["result"] = std::move(res.body);
    code = res.code;
  } catch (const Error& e) {
    out["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
    code = code_for(e.code());
  } catch (const std::exception& e) {
    out["error"] = {{"code", "Internal"}, {"message", e.what()}};
    code = 4;
  }
  out["exit_code"] = code;
  if (g.format == "text") {
    print_text(out, std::cout);
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return code;
}
