// Command line surface for the Schubert variety toolkit: classification,
// singular loci, Kazhdan-Lusztig ideals, Groebner runs, Hilbert series,
// Kazhdan-Lusztig polynomials, pattern searches and batch sweeps.
//
// Exit codes: 0 success, 1 sweep/check failure, 2 usage error,
// 3 internal cross-check mismatch.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "schub/groebner.hpp"
#include "schub/hecke.hpp"
#include "schub/klideal.hpp"
#include "schub/singclass.hpp"

using namespace schub;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string format = "text";
  bool oracle = false;
};

json pword(const Permutation& p) { return json(p.word()); }

json witness_json(const std::optional<PropertyWitness>& w) {
  if (!w) return nullptr;
  return json{{"kind", w->kind}, {"pattern", w->pattern}, {"positions", w->positions}};
}

void emit(const json& j, const Options& opt, const std::string& text) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int run_classify(const std::string& warg, const Options& opt) {
  Permutation w = Permutation::parse(warg);
  SingularityReport rep = classify(w);
  if (opt.oracle) {
    const Permutation id = Permutation::identity(w.n());
    if (rep.smooth != (reflection_count(id, w) == w.length())) {
      std::cerr << "oracle mismatch: pattern smoothness vs transposition count\n";
      return 3;
    }
  }
  json j{{"schema", 1},
         {"command", "classify"},
         {"w", pword(w)},
         {"w_oneline", w.str()},
         {"smooth", rep.smooth},
         {"gorenstein", rep.gorenstein},
         {"lci", rep.lci},
         {"factorial", rep.factorial},
         {"witnesses",
          json{{"smooth", witness_json(rep.smooth_witness)},
               {"gorenstein", witness_json(rep.gorenstein_witness)},
               {"lci", witness_json(rep.lci_witness)},
               {"factorial", witness_json(rep.factorial_witness)}}}};
  std::ostringstream os;
  os << "w          " << w.str() << "\n"
     << "smooth     " << (rep.smooth ? "yes" : "no") << "\n"
     << "gorenstein " << (rep.gorenstein ? "yes" : "no") << "\n"
     << "lci        " << (rep.lci ? "yes" : "no") << "\n"
     << "factorial  " << (rep.factorial ? "yes" : "no") << "\n";
  emit(j, opt, os.str());
  return 0;
}

int run_singlocus(const std::string& warg, const Options& opt) {
  Permutation w = Permutation::parse(warg);
  auto loc = singular_locus(w);
  if (opt.oracle) {
    std::vector<Permutation> sing;
    for (const auto& v : bruhat_interval(Permutation::identity(w.n()), w))
      if (!is_smooth_at(v, w)) sing.push_back(v);
    std::vector<Permutation> maximal;
    for (const auto& z : sing) {
      bool dominated = false;
      for (const auto& y : sing)
        if (!(y == z) && bruhat_leq(z, y)) {
          dominated = true;
          break;
        }
      if (!dominated) maximal.push_back(z);
    }
    std::sort(maximal.begin(), maximal.end());
    if (maximal != loc) {
      std::cerr << "oracle mismatch: interval-pattern locus vs transposition-count locus\n";
      std::cerr << "  families:";
      for (const auto& c : loc) std::cerr << " " << c.str();
      std::cerr << "\n  oracle:  ";
      for (const auto& c : maximal) std::cerr << " " << c.str();
      std::cerr << "\n";
      return 3;
    }
  }
  json comps = json::array(), comps_oneline = json::array();
  std::ostringstream os;
  for (const auto& c : loc) {
    comps.push_back(pword(c));
    comps_oneline.push_back(c.str());
    os << c.str() << "\n";
  }
  if (loc.empty()) os << "(smooth)\n";
  emit(json{{"schema", 1},
            {"command", "singlocus"},
            {"w", pword(w)},
            {"w_oneline", w.str()},
            {"components", comps},
            {"components_oneline", comps_oneline},
            {"oracle_checked", opt.oracle}},
       opt, os.str());
  return 0;
}

int run_ideal(const std::string& varg, const std::string& warg, const Options& opt,
              const std::string& grading, const std::string& m2file) {
  Permutation v = Permutation::parse(varg), w = Permutation::parse(warg);
  IdealPresentation pres = kl_generators(v, w);
  if (!m2file.empty()) {
    std::ofstream out(m2file);
    if (!out) throw std::runtime_error("cannot write " + m2file);
    out << emit_macaulay2(v, w);
  }
  json vars = json::array(), gens = json::array(), degs = json::array();
  for (const auto& name : pres.ring->vars) vars.push_back(name);
  for (const auto& g : pres.generators) gens.push_back(g.str());
  if (grading == "torus") {
    for (const auto& d : pres.torus_deg) degs.push_back(d);
  } else {
    for (std::size_t i = 0; i < pres.ring->size(); ++i) degs.push_back(std::vector<int>{1});
  }
  std::ostringstream os;
  os << "ring ";
  for (const auto& name : pres.ring->vars) os << name << " ";
  os << "\n";
  if (pres.empty_variety) os << "empty variety (v is not below w)\n";
  for (const auto& g : pres.generators) os << g.str() << "\n";
  emit(json{{"schema", 1},
            {"command", "ideal"},
            {"v", pword(v)},
            {"w", pword(w)},
            {"v_oneline", v.str()},
            {"w_oneline", w.str()},
            {"empty_variety", pres.empty_variety},
            {"vars", vars},
            {"generators", gens},
            {"grading_kind", grading},
            {"grading", degs}},
       opt, os.str());
  return 0;
}

int run_groebner(const std::string& varg, const std::string& warg, const Options& opt) {
  Permutation v = Permutation::parse(varg), w = Permutation::parse(warg);
  IdealPresentation pres = kl_generators(v, w);
  json j{{"schema", 1},
         {"command", "groebner"},
         {"v", pword(v)},
         {"w", pword(w)},
         {"v_oneline", v.str()},
         {"w_oneline", w.str()}};
  std::ostringstream os;
  if (pres.generators.empty()) {
    j["defining_minors_groebner"] = true;
    j["initial_ideal"] = json::array();
    j["squarefree"] = true;
    j["components"] = json::array();
    os << "zero ideal\n";
    emit(j, opt, os.str());
    return 0;
  }
  TermOrder ord = kl_term_order(pres);
  bool gb = is_groebner(pres.generators, ord);
  j["defining_minors_groebner"] = gb;
  os << "defining minors are a Groebner basis: " << (gb ? "yes" : "no") << "\n";
  if (!gb) {
    std::cerr << "internal cross-check failed: defining minors are not a Groebner basis\n";
    emit(j, opt, os.str());
    return 3;
  }
  MonomialIdeal init = initial_ideal(pres.generators, ord);
  auto mono_str = [&](const Exponent& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) {
        if (!s.empty()) s += "*";
        s += pres.ring->vars[i];
      }
    return s;
  };
  json ij = json::array();
  for (const auto& e : init.gens()) ij.push_back(mono_str(e));
  j["initial_ideal"] = ij;
  j["squarefree"] = init.is_squarefree();
  os << "initial ideal:";
  for (const auto& e : init.gens()) os << " " << mono_str(e);
  os << "\nsquarefree: " << (init.is_squarefree() ? "yes" : "no") << "\n";
  json cj = json::array();
  if (init.is_squarefree()) {
    auto comps = prime_decomposition(init);
    os << "prime components (" << comps.size() << "):\n";
    for (const auto& c : comps) {
      json one = json::array();
      os << " ";
      for (int varid : c) {
        one.push_back(pres.ring->vars[varid]);
        os << " " << pres.ring->vars[varid];
      }
      os << "\n";
      cj.push_back(one);
    }
  }
  j["components"] = cj;
  emit(j, opt, os.str());
  return 0;
}

int run_hilbert(const std::string& varg, const std::string& warg, const Options& opt) {
  Permutation v = Permutation::parse(varg), w = Permutation::parse(warg);
  HilbertSeries hs = hilbert_series(v, w);  // throws CrossCheckError on mismatch
  json dens = json::array();
  std::ostringstream os;
  os << "numerator  " << hs.numerator.cleared_str() << "\n";
  for (const auto& f : hs.denom_factors) {
    dens.push_back(f.str());
    os << "denominator " << f.str() << "\n";
  }
  emit(json{{"schema", 1},
            {"command", "hilbert"},
            {"v", pword(v)},
            {"w", pword(w)},
            {"v_oneline", v.str()},
            {"w_oneline", w.str()},
            {"numerator", hs.numerator.cleared_str()},
            {"denominator_factors", dens}},
       opt, os.str());
  return 0;
}

int run_klpoly(const std::string& varg, const std::string& warg, const Options& opt) {
  Permutation v = Permutation::parse(varg), w = Permutation::parse(warg);
  KLTable table;
  auto p = kl_polynomial(v, w, table);
  auto r = r_polynomial(v, w, table);
  long long mu = mu_coefficient(v, w, table);
  std::ostringstream os;
  os << "P " << p.str() << "\nR " << r.str() << "\nmu " << mu << "\n";
  emit(json{{"schema", 1},
            {"command", "klpoly"},
            {"v", pword(v)},
            {"w", pword(w)},
            {"v_oneline", v.str()},
            {"w_oneline", w.str()},
            {"P", p.str()},
            {"R", r.str()},
            {"mu", mu}},
       opt, os.str());
  return 0;
}

int run_pattern(const std::vector<std::string>& args, const Options& opt) {
  std::ostringstream os;
  json embs = json::array();
  json j{{"schema", 1}, {"command", "pattern"}};
  if (args.size() == 2) {
    Permutation v = Permutation::parse(args[0]), w = Permutation::parse(args[1]);
    j["kind"] = "classical";
    j["v"] = pword(v);
    j["w"] = pword(w);
    for (const auto& phi : classical_embeddings(v, w)) {
      embs.push_back(json{{"phi", phi}});
      os << "phi";
      for (int x : phi) os << " " << x;
      os << "\n";
    }
  } else if (args.size() == 3) {
    Permutation u = Permutation::parse(args[0]), v = Permutation::parse(args[1]),
                w = Permutation::parse(args[2]);
    j["kind"] = "interval";
    j["u"] = pword(u);
    j["v"] = pword(v);
    j["w"] = pword(w);
    for (const auto& e : interval_embeddings(u, v, w)) {
      embs.push_back(json{{"phi", e.phi},
                          {"bottom", pword(e.bottom)},
                          {"bottom_oneline", e.bottom.str()}});
      os << "phi";
      for (int x : e.phi) os << " " << x;
      os << "  bottom " << e.bottom.str() << "\n";
    }
  } else {
    throw CLI::ValidationError("pattern", "expects `pattern V W` or `pattern U V W`");
  }
  if (embs.empty()) os << "(avoids)\n";
  j["embeddings"] = embs;
  emit(j, opt, os.str());
  return 0;
}

int run_sweep(int n, const std::string& check, const Options& opt) {
  auto perms = all_permutations(n);
  long done = 0, total = static_cast<long>(perms.size());
  auto progress = [&](long i) {
    if (i % 100 == 0) std::cerr << "sweep " << check << ": " << i << "/" << total << "\r";
  };
  bool ok = true;
  if (check == "smooth-triple") {
    KLTable table;
    const Permutation id = Permutation::identity(n);
    const auto one = LaurentPolynomial::one(q_ring());
    for (const auto& w : perms) {
      progress(done++);
      bool a = is_smooth(w);
      if (a != singular_locus(w).empty() || a != (reflection_count(id, w) == w.length()) ||
          a != (kl_polynomial(id, w, table) == one)) {
        ok = false;
        std::cerr << "\nmismatch at w = " << w.str() << "\n";
        break;
      }
    }
  } else if (check == "chain") {
    for (const auto& w : perms) {
      progress(done++);
      bool sm = is_smooth(w), go = is_gorenstein(w), lc = is_lci(w), fa = is_factorial(w);
      if ((sm && !(lc && fa)) || (lc && !go) || (fa && !go)) {
        ok = false;
        std::cerr << "\ncontainment chain fails at w = " << w.str() << "\n";
        break;
      }
    }
  } else if (check == "groebner") {
    for (const auto& v : perms) {
      progress(done++);
      for (const auto& w : perms) {
        if (!bruhat_leq(v, w)) continue;
        auto pres = kl_generators(v, w);
        if (pres.generators.empty()) continue;
        TermOrder ord = kl_term_order(pres);
        if (!is_groebner(pres.generators, ord) ||
            !initial_ideal(pres.generators, ord).is_squarefree()) {
          ok = false;
          std::cerr << "\nGroebner check fails at (" << v.str() << ", " << w.str() << ")\n";
          break;
        }
      }
      if (!ok) break;
    }
  } else if (check == "hilbert") {
    for (const auto& v : perms) {
      progress(done++);
      for (const auto& w : perms) {
        if (!bruhat_leq(v, w)) continue;
        try {
          hilbert_series(v, w);
        } catch (const std::exception& e) {
          ok = false;
          std::cerr << "\n" << e.what() << "\n";
          break;
        }
      }
      if (!ok) break;
    }
  } else {
    throw CLI::ValidationError("--check",
                               "one of smooth-triple, chain, groebner, hilbert");
  }
  std::cerr << "\n";
  emit(json{{"schema", 1},
            {"command", "sweep"},
            {"check", check},
            {"n", n},
            {"ok", ok}},
       opt,
       "sweep " + check + " n=" + std::to_string(n) + ": " + (ok ? "ok" : "FAILED") + "\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert variety singularities via Kazhdan-Lusztig ideals"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--oracle", opt.oracle, "recompute answers through independent oracles");

  std::string warg, varg, grading = "torus", m2file, check = "smooth-triple";
  std::vector<std::string> pattern_args;
  int sweep_n = 5;

  auto* classify_cmd = app.add_subcommand("classify", "singularity report for X_w");
  classify_cmd->add_option("w", warg, "permutation")->required();

  auto* singlocus_cmd = app.add_subcommand("singlocus", "maximal singular components of X_w");
  singlocus_cmd->add_option("w", warg, "permutation")->required();

  auto* ideal_cmd = app.add_subcommand("ideal", "Kazhdan-Lusztig ideal I_{v,w}");
  ideal_cmd->add_option("v", varg, "bottom permutation")->required();
  ideal_cmd->add_option("w", warg, "top permutation")->required();
  ideal_cmd->add_option("--grading", grading, "grading for the dump")
      ->check(CLI::IsMember({"standard", "torus"}));
  ideal_cmd->add_option("--emit-m2", m2file, "write a Macaulay2 script to FILE");

  auto* groebner_cmd = app.add_subcommand("groebner", "Groebner run for I_{v,w}");
  groebner_cmd->add_option("v", varg, "bottom permutation")->required();
  groebner_cmd->add_option("w", warg, "top permutation")->required();

  auto* hilbert_cmd = app.add_subcommand("hilbert", "multigraded Hilbert series of R/I_{v,w}");
  hilbert_cmd->add_option("v", varg, "bottom permutation")->required();
  hilbert_cmd->add_option("w", warg, "top permutation")->required();

  auto* klpoly_cmd = app.add_subcommand("klpoly", "Kazhdan-Lusztig and R polynomials");
  klpoly_cmd->add_option("v", varg, "bottom permutation")->required();
  klpoly_cmd->add_option("w", warg, "top permutation")->required();

  auto* pattern_cmd = app.add_subcommand("pattern", "classical or interval embeddings");
  pattern_cmd->add_option("perms", pattern_args, "V W (classical) or U V W (interval)")
      ->expected(2, 3);

  auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive property sweeps over S_n");
  sweep_cmd->add_option("--n", sweep_n, "symmetric group size")->capture_default_str();
  sweep_cmd->add_option("--check", check, "smooth-triple | chain | groebner | hilbert");

  for (auto* sub : {classify_cmd, singlocus_cmd, ideal_cmd, groebner_cmd, hilbert_cmd, klpoly_cmd,
                    pattern_cmd, sweep_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(warg, opt);
    if (singlocus_cmd->parsed()) return run_singlocus(warg, opt);
    if (ideal_cmd->parsed()) return run_ideal(varg, warg, opt, grading, m2file);
    if (groebner_cmd->parsed()) return run_groebner(varg, warg, opt);
    if (hilbert_cmd->parsed()) return run_hilbert(varg, warg, opt);
    if (klpoly_cmd->parsed()) return run_klpoly(varg, warg, opt);
    if (pattern_cmd->parsed()) return run_pattern(pattern_args, opt);
    if (sweep_cmd->parsed()) return run_sweep(sweep_n, check, opt);
  } catch (const CrossCheckError& e) {
    std::cerr << "cross-check failure: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
