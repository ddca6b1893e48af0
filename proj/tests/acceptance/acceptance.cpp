// One PASS/FAIL line per acceptance criterion.  The exit status is nonzero
// only when a criterion outside kKnownUnattainable fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "../support/oracles.hpp"

using namespace trivspec;

namespace {

// Criteria that cannot hold over F_25 with n = 2: e(X^* P X) is a quadratic
// form in 4 variables over F_5, hence isotropic, so no twisted SH_2(F_25) has
// trivial spectrum and P + SH_2(F_25) always contains a singular matrix.
const std::set<std::string> kKnownUnattainable = {"4", "5", "9b"};

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string g_cli;
int g_unexpected = 0;

void run(const std::string& id, const std::string& name, double limit_s, const std::function<Outcome()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const Error& e) {
    o = {false, std::string("error ") + errc_name(e.code()) + ": " + e.what()};
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.pass && secs > limit_s) {
    o.pass = false;
    o.detail += "; over time limit";
  }
  const bool known = kKnownUnattainable.count(id) > 0;
  if (!o.pass && !known) ++g_unexpected;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s / %.0f s", secs, limit_s);
  std::cout << (o.pass ? "PASS " : "FAIL ") << id << " " << name << " (" << buf << ")"
            << (!o.pass && known ? " [known unattainable]" : "") << ": " << o.detail << std::endl;
}

DMatrix random_invertible(const AlgebraPtr& alg, std::size_t n, Rng& rng) {
  while (true) {
    DMatrix m = DMatrix::from_flat(alg, n, n, rng.vec(alg->base(), n * n * alg->degree()));
    if (rank_D(m) == n) return m;
  }
}

Matrix random_invertible_F(const Field& f, std::size_t n, Rng& rng) {
  while (true) {
    Matrix m = Matrix::from_rows(f, [&] {
      std::vector<Vec> r;
      for (std::size_t i = 0; i < n; ++i) r.push_back(rng.vec(f, n));
      return r;
    }(), n);
    if (rank(m) == n) return m;
  }
}

Outcome c1() {
  for (std::uint64_t m = 0; m <= 20; ++m)
    for (std::uint64_t n = 0; n <= 20; ++n)
      for (std::uint64_t d = 1; d <= 8; ++d)
        if (alpha(m + n, d) != alpha(m, d) + alpha(n, d) + m * n * d)
          return {false, "fails at m=" + std::to_string(m) + " n=" + std::to_string(n) + " d=" + std::to_string(d)};
  return {true, "21 x 21 x 8 triples"};
}

Outcome c2() {
  Rng rng(2);
  Field F2s = Field::rational_functions(2), Q = Field::rationals();
  struct Backend {
    std::string name;
    AlgebraPtr alg;
    std::size_t max_n;
  };
  std::vector<Backend> backends = {
      {"F3", Algebra::trivial(Field::prime(3)), 3},
      {"F5", Algebra::trivial(Field::prime(5)), 3},
      {"F25/F5", Algebra::default_extension(Field::prime(5), 2), 2},
      {"Q", Algebra::trivial(Q), 3},
      {"H/Q", Algebra::quaternion(Q, Q.from_int(-1), Q.from_int(-1)), 2},
      {"Q(i)/Q", Algebra::quadratic(Q, Q.zero(), Q.from_int(-1)), 2},
      {"F2(s)(t)", Algebra::hyper_radicial(F2s, F2s.parse_scalar("s")), 2},
  };
  std::size_t checked = 0;
  for (const auto& b : backends) {
    Profile prof = standard_profile(*b.alg);
    for (std::size_t n = 1; n <= b.max_n; ++n) {
      const std::uint64_t a = alpha(n, b.alg->degree());
      std::size_t dims[3] = {construct_triangular_model(b.alg, n).dim(), construct_SH(b.alg, n, prof).dim(),
                             twisted_SH(random_invertible(b.alg, n, rng), prof).dim()};
      for (auto dm : dims)
        if (dm != a)
          return {false, b.name + " n=" + std::to_string(n) + ": dim " + std::to_string(dm) + " != " + std::to_string(a)};
      checked += 3;
    }
  }
  return {true, std::to_string(checked) + " constructions of dimension alpha(n,d)"};
}

Outcome c3() {
  std::ostringstream msg;
  struct Case {
    std::string name;
    AlgebraPtr alg;
    std::size_t n;
  };
  std::vector<Case> cases = {{"Mat2(F3)", Algebra::trivial(Field::prime(3)), 2},
                             {"Mat2(F2)", Algebra::trivial(Field::prime(2)), 2},
                             {"Mat1(F9)/F3", Algebra::default_extension(Field::prime(3), 2), 1},
                             {"Mat1(F4)/F2", Algebra::default_extension(Field::prime(2), 2), 1}};
  for (const auto& c : cases) {
    OracleResult r = exhaustive_max_trivspec(c.alg, c.n, kDefaultBudget);
    const std::uint64_t a = alpha(c.n, c.alg->degree());
    msg << c.name << " max " << r.max_dim << "; ";
    if (r.verdict != Verdict::Certified || r.max_dim != 1 || r.max_dim != a) return {false, msg.str()};
  }
  SubspaceCount cnt = count_trivspec_subspaces(Algebra::trivial(Field::prime(5)), 2, 2, kDefaultBudget);
  msg << "Mat2(F5): " << cnt.total << " planes, " << cnt.passing << " with trivial spectrum";
  return {cnt.total == 806 && cnt.passing == 0, msg.str()};
}

Outcome c4() {
  AlgebraPtr f25 = Algebra::default_extension(Field::prime(5), 2);
  Profile prof = standard_profile(*f25);
  Rng rng(4);
  std::ostringstream msg;
  bool ok = true;
  auto check = [&](const std::string& name, const OperatorSpace& s) {
    SpectrumVerdict v = has_trivial_spectrum(s, kDefaultBudget, rng);
    std::uint64_t witnesses = oracle::count_fixed_elements(s);
    msg << name << ": dim " << s.dim() << ", " << verdict_name(v.verdict) << ", " << witnesses
        << " of 625 elements have a fixed vector; ";
    ok = ok && s.dim() == 4 && v.verdict == Verdict::Certified && v.checked == 625 && witnesses == 0;
  };
  check("SH2(F25)", construct_SH(f25, 2, prof));
  check("random twisted SH", twisted_SH(random_invertible(f25, 2, rng), prof));
  return {ok, msg.str()};
}

Outcome c5() {
  AlgebraPtr f25 = Algebra::default_extension(Field::prime(5), 2);
  Profile prof = standard_profile(*f25);
  const Matrix frob = oracle::frobenius_matrix(*f25);
  Rng rng(5);
  int good = 0;
  std::string first_failure;
  for (int t = 0; t < 50; ++t) {
    DMatrix p = random_invertible(f25, 2, rng), q = random_invertible(f25, 2, rng);
    OperatorSpace s = twisted_SH(p, prof).conjugated(q);
    std::string why;
    try {
      ClassificationReport rep = classify_optimal(s, kDefaultBudget, rng);
      if (rep.blocks.size() != 1 || rep.blocks[0].tag != "separable-quadratic") {
        why = "wrong block structure";
      } else if (alternator_space(s).size() != 1) {
        why = "dim Alt != 1";
      } else if (!rep.blocks[0].profile || rep.blocks[0].profile->sigma != frob) {
        why = "sigma is not the Frobenius";
      } else {
        const DMatrix& b = rep.blocks[0].form->gram;
        DMatrix qt = q * rep.basis;
        auto a = find_equivalence_scalar(p, b, qt, prof);
        if (!a || !verify_equivalence_certificate(p, b, *a, qt, prof)) why = "recovered form not equivalent to P";
      }
    } catch (const Error& e) {
      why = std::string(errc_name(e.code())) + ": " + e.what();
    }
    if (why.empty()) {
      ++good;
    } else if (first_failure.empty()) {
      first_failure = "first failure (trial " + std::to_string(t) + ") " + why;
    }
  }
  return {good == 50, std::to_string(good) + "/50 round trips" + (first_failure.empty() ? "" : "; " + first_failure)};
}

Outcome c6() {
  AlgebraPtr f343 = Algebra::default_extension(Field::prime(7), 3);
  Rng rng(6);
  OperatorSpace model = construct_triangular_model(f343, 2);
  std::ostringstream msg;
  bool ok = true;
  for (const auto& s : {model, model.conjugated(random_invertible(f343, 2, rng))}) {
    ClassificationReport rep = classify_optimal(s, kDefaultBudget, rng);
    bool shape = rep.blocks.size() == 2;
    for (const auto& b : rep.blocks) shape = shape && b.size == 1 && b.tag == "hyperplane" && b.dim == 2;
    msg << "partition [";
    for (std::size_t i = 0; i < rep.partition.size(); ++i) msg << (i ? "," : "") << rep.partition[i];
    msg << "] " << verdict_name(rep.verdict) << ", " << rep.spectrum.checked << " elements; ";
    ok = ok && shape && rep.verdict == Verdict::Certified;
  }
  return {ok, msg.str()};
}

Outcome c7() {
  Rng rng(7);
  int good = 0, total = 0;
  std::string first_failure;
  auto one = [&](const std::string& name, const OperatorSpace& a, std::size_t n, std::size_t d) {
    ++total;
    std::string why;
    try {
      if (a.dim() != alpha(n, d)) {
        why = "dim " + std::to_string(a.dim());
      } else if (is_deeply_intransitive(a, kDefaultBudget, rng).verdict != Verdict::Certified) {
        why = "not certified deeply intransitive";
      } else if (alternator_space(a).size() != 1) {
        why = "dim Alt != 1";
      } else {
        AtkinsonReport rep = verify_atkinson_bounds(a, kDefaultBudget, rng);
        if (!rep.a.holds || !rep.b.holds || !rep.c.holds) why = "Atkinson clause fails";
      }
    } catch (const Error& e) {
      why = std::string(errc_name(e.code())) + ": " + e.what();
    }
    if (why.empty()) {
      ++good;
    } else if (first_failure.empty()) {
      first_failure = name + " " + why;
    }
  };
  AlgebraPtr f5 = Algebra::trivial(Field::prime(5));
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 1 + t % 3;
    Matrix g = random_invertible_F(f5->base(), n, rng);
    one("F5 n=" + std::to_string(n), alternating_maps(g, f5, n, n, true), n, 1);
  }
  AlgebraPtr f25 = Algebra::default_extension(Field::prime(5), 2);
  Profile prof = standard_profile(*f25);
  for (int t = 0; t < 20; ++t) {
    Matrix g = bilinear_from_sesquilinear(random_invertible(f25, 2, rng), prof);
    one("F25 n=2", alternating_maps(g, f25, 2, 2, true), 2, 2);
  }
  return {good == total, std::to_string(good) + "/" + std::to_string(total) + " spaces" +
                             (first_failure.empty() ? "" : "; first failure " + first_failure)};
}

Outcome c8() {
  Rng rng(8);
  AlgebraPtr f5 = Algebra::trivial(Field::prime(5));
  int fuzz_ok = 0, fuzz_total = 0;
  std::uint64_t seed = 0;
  while (fuzz_total < 30) {
    std::size_t rows = 2 + seed % 3, cols = 2 + (seed / 3) % 3;
    OperatorSpace s = random_space_fuzzer(f5, rows, cols, 1, seed++)[0];
    if (s.dim() == 0 || !is_target_reduced(s)) continue;
    ++fuzz_total;
    if (alternator_catcher_check(s).ok()) ++fuzz_ok;
  }
  int fa_ok = 0;
  std::string fa_failure;
  Field f7 = Field::prime(7);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 3 + t % 2, p = 3 + (t / 2) % 2, r = 1 + (t / 4) % 2;
    try {
      flanders_atkinson_check(random_compression_space(f7, n, p, r, rng), r, rng);
      ++fa_ok;
    } catch (const Error& e) {
      if (fa_failure.empty()) fa_failure = std::string("; first failure ") + errc_name(e.code()) + ": " + e.what();
    }
  }
  return {fuzz_ok == 30 && fa_ok == 50, "catchers " + std::to_string(fuzz_ok) + "/30 (seeds 0.." +
                                            std::to_string(seed - 1) + "), Flanders-Atkinson " + std::to_string(fa_ok) +
                                            "/50" + fa_failure};
}

Outcome c9a() {
  Rng rng(9);
  AffineSpace a = build_affine_minrank(Algebra::trivial(Field::prime(7)), 3, 3, 2);
  const std::size_t codim = 9 - a.direction.dim();
  MinrankVerdict v = verify_minrank(a, 2, kDefaultBudget, rng);
  std::size_t brute = oracle::min_rank_affine(a);
  std::ostringstream msg;
  msg << "codim " << codim << ", " << verdict_name(v.verdict) << " over " << v.checked
      << " elements, minimum rank " << brute;
  return {codim == 3 && v.verdict == Verdict::Certified && v.checked == 117649 && brute >= 2, msg.str()};
}

Outcome c9b() {
  AlgebraPtr f25 = Algebra::default_extension(Field::prime(5), 2);
  Profile prof = standard_profile(*f25);
  Rng rng(90);
  NonisotropyResult ni = is_e_nonisotropic(DMatrix::identity(f25, 2), prof, kDefaultBudget);
  std::string note = std::string("e(X^* X) is ") + verdict_name(ni.verdict) + " as nonisotropic";
  AffineSpace a = build_affine_nonsingular(f25, {DMatrix::identity(f25, 2)}, prof, kDefaultBudget);
  MinrankVerdict v = verify_minrank(a, 2, kDefaultBudget, rng);
  return {v.verdict == Verdict::Certified && v.checked == 625,
          note + "; " + verdict_name(v.verdict) + " over " + std::to_string(v.checked) + " elements"};
}

Outcome c10() {
  Field Q = Field::rationals();
  AlgebraPtr qi = Algebra::quadratic(Q, Q.zero(), Q.from_int(-1));
  AlgebraPtr ham = Algebra::quaternion(Q, Q.from_int(-1), Q.from_int(-1));
  std::ostringstream msg;
  bool ok = true;
  auto fail_with = [&](const std::string& s) {
    ok = false;
    msg << "FAILED " << s << "; ";
  };
  const std::size_t h_qi = hermitian_space(qi, 2, standard_profile(*qi)).dim();
  const std::size_t h_ham = hermitian_space(ham, 2, standard_profile(*ham)).dim();
  msg << "H2(Q(i)) dim " << h_qi << ", H2(H) dim " << h_ham << "; ";
  if (h_qi != 4 || h_ham != 6) fail_with("Hermitian dimensions");

  for (const auto& alg : {qi, ham}) {
    Profile prof = standard_profile(*alg);
    for (std::size_t n = 1; n <= 3; ++n)
      if (orthogonal_complement(hermitian_space(alg, n, prof)) != oracle::skew_hermitian_space(alg, n, prof.sigma))
        fail_with("complement of H_" + std::to_string(n) + " over " + alg->name());
  }
  msg << "complements of H_n (n<=3) are skew-Hermitian; ";

  // Finite backends: whenever the idempotent property holds, the complement
  // has trivial spectrum.
  Rng rng(10);
  int instances = 0;
  std::vector<OperatorSpace> spaces;
  AlgebraPtr f3 = Algebra::trivial(Field::prime(3)), f25 = Algebra::default_extension(Field::prime(5), 2);
  spaces.push_back(OperatorSpace::full(f3, 2, 2));
  spaces.push_back(OperatorSpace::full(f25, 2, 2));
  spaces.push_back(hermitian_space(f25, 1, standard_profile(*f25)));
  spaces.push_back(hermitian_space(f25, 2, standard_profile(*f25)));
  for (std::uint64_t seed = 0; seed < 40; ++seed) spaces.push_back(random_space_fuzzer(f3, 2, 2, 1, seed, 3)[0]);
  for (std::uint64_t seed = 0; seed < 10; ++seed) spaces.push_back(random_space_fuzzer(f25, 1, 1, 1, seed)[0]);
  for (const auto& s : spaces) {
    if (has_full_rank1_idempotent_property(s, kDefaultBudget, rng).verdict != Verdict::Certified) continue;
    ++instances;
    if (has_trivial_spectrum(orthogonal_complement(s), kDefaultBudget, rng).verdict != Verdict::Certified)
      fail_with("idempotent property without trivial-spectrum complement");
  }
  msg << instances << " idempotent-property spaces with trivial-spectrum complement; ";
  if (instances < 3) fail_with("too few idempotent-property instances");

  OperatorSpace dm = diag_model_C(qi, 3, standard_profile(*qi));
  ElementwiseVerdict ss = all_semisimple(dm, kDefaultBudget, rng, 200);
  msg << "diag model dim " << dm.dim() << ", " << ss.checked << " samples semisimple; ";
  if (dm.dim() != 10 || ss.witness || ss.checked != 200) fail_with("diag model");

  Field F5 = Field::prime(5);
  Matrix b = Matrix::identity(F5, 2);
  b(1, 1) = F5.from_int(2);
  OperatorSpace sb = semisimple_space_Sb(b, kDefaultBudget);
  ElementwiseVerdict sbv = all_semisimple(sb, kDefaultBudget, rng);
  msg << "S_b dim " << sb.dim() << ", " << verdict_name(sbv.verdict) << " over " << sbv.checked << "; ";
  if (sb.dim() != 3 || sbv.verdict != Verdict::Certified || sbv.checked != 125) fail_with("S_b");

  for (auto [q, n] : {std::pair<std::uint64_t, std::size_t>{2, 2}, {3, 2}}) {
    MotzkinTausskyReport mt = motzkin_taussky_finite(q, n, kDefaultBudget);
    msg << "MT(" << q << "," << n << ") " << verdict_name(mt.verdict) << " over " << mt.pairs << " pairs, "
        << mt.hypothesis_pairs << " meeting the hypothesis; ";
    if (mt.verdict != Verdict::Certified || mt.pairs != ipow(q, 2 * n * n)) fail_with("Motzkin-Taussky");
  }
  return {ok, msg.str()};
}

Outcome c11() {
  Rng rng(11);
  int good = 0;
  for (int t = 0; t < 100; ++t) {
    AlgebraPtr alg = Algebra::default_extension(Field::prime(t % 2 ? 5 : 3), 2);
    const std::size_t n = 1 + (t / 2) % 3, N = 2 * n;
    Vec f;
    do {
      f = rng.vec(alg->base(), N);
    } while (is_zero_vec(f));
    FSubspace u0 = FSubspace::span(alg->base(), N, kernel(Matrix::from_rows(alg->base(), {f}, N)));
    if (socle(alg, n, u0).dim() == n - 1) ++good;
  }
  return {good == 100, std::to_string(good) + "/100 hyperplanes"};
}

Outcome c12() {
  Field Q = Field::rationals(), F2s = Field::rational_functions(2);
  struct Case {
    std::string name;
    AlgebraPtr alg;
    std::string tag;
    Matrix sigma;
  };
  AlgebraPtr f25 = Algebra::default_extension(Field::prime(5), 2);
  auto conj = [](const Field& f, std::size_t d) {
    Matrix m = Matrix::identity(f, d).scaled(-f.one());
    m(0, 0) = f.one();
    return m;
  };
  std::vector<Case> cases = {
      {"F25/F5", f25, "separable-quadratic", oracle::frobenius_matrix(*f25)},
      {"H/Q", Algebra::quaternion(Q, Q.from_int(-1), Q.from_int(-1)), "quaternion", conj(Q, 4)},
      {"Q(i)/Q", Algebra::quadratic(Q, Q.zero(), Q.from_int(-1)), "separable-quadratic", conj(Q, 2)},
      {"F2(s)(t)", Algebra::hyper_radicial(F2s, F2s.parse_scalar("s")), "hyper-radicial", Matrix::identity(F2s, 2)},
  };
  std::ostringstream msg;
  bool ok = true;
  // q(x) = x sigma(x), read off the unit coordinate, as an upper triangular form.
  auto norm_of = [](const Algebra& a, const Matrix& sigma) {
    const std::size_t d = a.degree();
    auto n = [&](const Vec& x) { return a.mul(x, apply(sigma, x))[0]; };
    QuadForm q{Matrix(a.base(), d, d)};
    for (std::size_t i = 0; i < d; ++i) {
      q.coeffs(i, i) = n(a.basis(i));
      for (std::size_t j = i + 1; j < d; ++j)
        q.coeffs(i, j) = n(add(a.basis(i), a.basis(j))) - n(a.basis(i)) - n(a.basis(j));
    }
    return q;
  };
  for (const auto& c : cases) {
    CompositionClassification cc = classify_composition_form(*c.alg, norm_of(*c.alg, c.sigma));
    const bool good = type_tag(cc.profile.type) == c.tag && cc.profile.sigma == c.sigma;
    msg << c.name << " " << type_tag(cc.profile.type) << (good ? "" : " (wrong)") << "; ";
    ok = ok && good;
  }
  QuadForm bad = norm_of(*f25, oracle::frobenius_matrix(*f25));
  bad.coeffs(0, 1) = bad.coeffs(0, 1) + f25->base().one();
  try {
    classify_composition_form(*f25, bad);
    msg << "perturbed form accepted";
    ok = false;
  } catch (const Error& e) {
    msg << "perturbed form rejected with " << errc_name(e.code());
    ok = ok && e.code() == Errc::NotMultiplicative;
  }
  return {ok, msg.str()};
}

std::string run_cli(const std::string& args) {
  std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) fail(Errc::Internal, "cannot start " + g_cli);
  std::string out;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, k);
  pclose(pipe);
  return out;
}

Outcome c13() {
  if (g_cli.empty()) return {false, "no CLI path given"};
  std::string tmp = "acceptance_triangular_f343.json";
  {
    FILE* f = std::fopen(tmp.c_str(), "w");
    std::string text =
        to_json(construct_triangular_model(Algebra::default_extension(Field::prime(7), 3), 2)).dump();
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
  }
  const std::vector<std::string> commands = {
      "report bundle --seed 7",
      "search maxdim-trivspec --field fp:3 --degree 1 --n 2",
      "construct sh --field fp:5 --degree 2 --n 2",
      "construct twisted-sh --field fp:5 --degree 2 --n 2 --random --seed 3",
      "classify optimal --in " + tmp + " --seed 11",
      "verify deep-intransitive --in " + tmp + " --seed 5",
  };
  for (const auto& c : commands) {
    std::string a = run_cli(c), b = run_cli(c);
    if (a.empty() || a != b) return {false, "output differs for: " + c};
  }
  std::remove(tmp.c_str());
  return {true, std::to_string(commands.size()) + " commands byte-identical on repeat"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  run("1", "alpha identity", 1, c1);
  run("2", "constructor dimensions", 10, c2);
  run("3", "oracle maximum dimension", 60, c3);
  run("4", "exhaustive spectrum of SH2(F25)", 10, c4);
  run("5", "classification round trip over F25", 120, c5);
  run("6", "non-quadratic flag recovery over F343", 120, c6);
  run("7", "intransitivity suite", 180, c7);
  run("8", "generic machinery", 120, c8);
  run("9a", "affine min-rank over F7", 120, c9a);
  run("9b", "affine nonsingular over F25", 120, c9b);
  run("10", "Hermitian and semisimple suite", 180, c10);
  run("11", "socle of hyperplanes", 30, c11);
  run("12", "composition classifier", 10, c12);
  run("13", "determinism", 120, c13);
  std::cout << (g_unexpected ? "UNEXPECTED FAILURES: " + std::to_string(g_unexpected) : std::string("no unexpected failures"))
            << std::endl;
  return g_unexpected ? 1 : 0;
}
