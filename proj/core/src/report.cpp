#include "gft/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include "gft/functorial.hpp"
#include "gft/lattice.hpp"
#include "gft/radicals.hpp"

namespace gft {

namespace {

using nlohmann::ordered_json;

std::string set_brief(const Ctx& ctx, const ElemSet& s) {
  std::ostringstream out;
  out << "order " << s.count() << " <";
  auto gens = minimal_gens(ctx, s);
  if (gens.empty()) out << "()";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out << ", ";
    out << to_cycles(ctx->perm(gens[i]));
  }
  out << '>';
  return out.str();
}

/// Lazily computed, possibly cap-limited value shared between checks.
template <typename T>
class Lazy {
 public:
  const T& get(const std::function<T()>& compute) {
    if (!tried_) {
      tried_ = true;
      try {
        value_ = compute();
      } catch (const CapError& e) {
        cap_message_ = e.what();
      }
    }
    if (!value_) throw CapError(cap_message_);
    return *value_;
  }

 private:
  bool tried_ = false;
  std::optional<T> value_;
  std::string cap_message_;
};

struct Work {
  const CatalogEntry* entry;
  Caps caps;
  Ctx ctx;
  LocalGroup g;

  Lazy<ElemSet> fit_, fstar_, ftilde_, phi_;
  Lazy<std::vector<ElemSet>> subs_;
  Lazy<int> hstar_;

  Work(const CatalogEntry& e, const Caps& c)
      : entry(&e), caps(c), ctx(make_ctx(e.group, c)), g(local_group(ctx)) {}

  const ElemSet& fit() {
    return fit_.get([&] { return fitting(g); });
  }
  const ElemSet& fstar() {
    return fstar_.get([&] { return f_star(g, caps); });
  }
  const ElemSet& ftilde() {
    return ftilde_.get([&] { return f_tilde(g, caps); });
  }
  const ElemSet& phi() {
    return phi_.get([&] { return frattini(g, caps); });
  }
  const std::vector<ElemSet>& subs() {
    return subs_.get([&] { return all_subgroups(g, caps); });
  }
  int hstar() {
    return hstar_.get([&] { return h_star(g, caps); });
  }
};

enum class St { Pass, Fail, Skip };

struct CheckOut {
  St st = St::Pass;
  std::string detail;
};

CheckOut pass(std::string detail = "") { return {St::Pass, std::move(detail)}; }
CheckOut fail(std::string detail) { return {St::Fail, std::move(detail)}; }

struct Counters {
  int passed = 0, failed = 0, skipped = 0;
};

template <typename Fn>
void run_check(ordered_json& checks, Counters& counters,
               const std::string& suite, const std::string& name, Fn&& fn) {
  CheckOut out;
  try {
    out = fn();
  } catch (const CapError& e) {
    out = {St::Skip, std::string("cap: ") + e.what()};
  }
  const char* status = out.st == St::Pass   ? "PASS"
                       : out.st == St::Fail ? "FAIL"
                                            : "SKIPPED";
  switch (out.st) {
    case St::Pass: ++counters.passed; break;
    case St::Fail: ++counters.failed; break;
    case St::Skip: ++counters.skipped; break;
  }
  ordered_json rec;
  rec["suite"] = suite;
  rec["check"] = name;
  rec["status"] = status;
  if (!out.detail.empty()) rec["detail"] = out.detail;
  checks.push_back(std::move(rec));
}

// ---------------------------------------------------------------------------
// radicals-agreement

void suite_radicals(Work& w, ordered_json& checks, Counters& c) {
  const std::string suite = "radicals-agreement";
  const Ctx& ctx = w.ctx;

  run_check(checks, c, suite, "fitting-agreement", [&] {
    const ElemSet& f = w.fit();
    if (f != fitting_oracle(w.g)) return fail("fitting != join of nilpotent normals");
    if (f != fitting_by_centralizers(w.g))
      return fail("fitting != intersection of chief-factor centralizers");
    return pass(set_brief(ctx, f));
  });

  run_check(checks, c, suite, "fstar-agreement", [&] {
    const ElemSet& f = w.fstar();
    if (f != f_star_oracle(w.g)) return fail("f_star != largest normal quasinilpotent");
    if (f != f_star_by_innerisers(w.g))
      return fail("f_star != intersection of chief-factor innerisers");
    return pass(set_brief(ctx, f));
  });

  run_check(checks, c, suite, "ftilde-agreement", [&] {
    const ElemSet& f = w.ftilde();
    if (f != f_tilde_forster(w.g, w.caps))
      return fail("f_tilde != preimage of Fstar(G/Phi)");
    if (f != f_tilde_by_innerisers(w.g, w.caps))
      return fail("f_tilde != intersection of innerisers over a Phi-series");
    return pass(set_brief(ctx, f));
  });

  run_check(checks, c, suite, "sandwich-f-fstar", [&] {
    if (!w.fit().subset_of(w.fstar())) return fail("F not inside Fstar");
    return pass();
  });
  run_check(checks, c, suite, "sandwich-fstar-ftilde", [&] {
    if (!w.fstar().subset_of(w.ftilde())) return fail("Fstar not inside Ftilde");
    return pass();
  });

  run_check(checks, c, suite, "fstar-self-centralizing", [&] {
    ElemSet cent = centralizer_in(ctx, w.g, minimal_gens(ctx, w.fstar()));
    if (!cent.subset_of(w.fstar()))
      return fail("C_G(Fstar) = " + set_brief(ctx, cent) + " escapes Fstar");
    return pass();
  });
  run_check(checks, c, suite, "ftilde-self-centralizing", [&] {
    ElemSet cent = centralizer_in(ctx, w.g, minimal_gens(ctx, w.ftilde()));
    if (!cent.subset_of(w.ftilde()))
      return fail("C_G(Ftilde) = " + set_brief(ctx, cent) + " escapes Ftilde");
    return pass();
  });

  run_check(checks, c, suite, "fstar-nontrivial", [&] {
    if (!w.g.is_trivial() && w.fstar().count() == 1)
      return fail("nontrivial group with trivial Fstar");
    return pass();
  });

  run_check(checks, c, suite, "soluble-collapse", [&] {
    if (!is_soluble(w.g)) return pass("insoluble; not applicable");
    if (w.fit() != w.fstar()) return fail("soluble group with F != Fstar");
    if (w.fit() != w.ftilde()) return fail("soluble group with F != Ftilde");
    return pass();
  });

  run_check(checks, c, suite, "fitting-mod-frattini", [&] {
    LocalQuotient q = make_quotient(w.g, w.phi(), w.caps);
    ElemSet fq = fitting(q.target);
    if (q.preimage(fq) != w.fit())
      return fail("preimage of F(G/Phi) differs from F(G)");
    ElemSet ab_soc = q.qctx->trivial_set();
    for (const auto& n : minimal_normal_subgroups(q.target))
      if (elements_abelian(q.qctx, n))
        ab_soc = join_sets(q.qctx, ab_soc, n, &q.target.elems);
    if (fq != ab_soc)
      return fail("F(G/Phi) differs from the abelian socle of G/Phi");
    return pass();
  });

  run_check(checks, c, suite, "qn-pick-independence", [&] {
    for (const auto& n : normal_lattice(w.g).members) {
      LocalGroup sub = sub_local(ctx, n);
      if (is_quasinilpotent(sub, ChiefPick::SmallestOrder) !=
          is_quasinilpotent(sub, ChiefPick::LargestOrder))
        return fail("chief-series-dependent quasinilpotence on " +
                    set_brief(ctx, n));
    }
    return pass();
  });

  run_check(checks, c, suite, "gamma-class-radical-fstar", [&] {
    ExprPtr e = make_builtin(BuiltinKind::Fstar);
    if (gamma_class_radical(e, w.g, w.caps) !=
        evaluate(make_omega(e), w.g, w.caps))
      return fail("class radical of Fstar differs from Fstar^inf");
    return pass();
  });
  run_check(checks, c, suite, "gamma-class-radical-ftilde", [&] {
    ExprPtr e = make_builtin(BuiltinKind::Ftilde);
    if (gamma_class_radical(e, w.g, w.caps) !=
        evaluate(make_omega(e), w.g, w.caps))
      return fail("class radical of Ftilde differs from Ftilde^inf");
    return pass();
  });

  run_check(checks, c, suite, "relabel-invariance", [&] {
    int deg = w.entry->group.degree();
    std::vector<int> img(deg);
    for (int i = 0; i < deg; ++i) img[i] = deg - 1 - i;
    Perm rho(img);
    Perm rho_inv = rho.inverse();
    std::vector<Perm> gens2;
    for (const auto& p : w.entry->group.generators())
      gens2.push_back(conjugate(p, rho));
    Group g2(deg, gens2);
    Ctx c2 = make_ctx(g2, w.caps);
    ElemSet v2 = f_star(local_group(c2), w.caps);
    ElemSet expected(c2->size());
    for (int i : w.fstar().to_vector()) {
      int j = c2->index_of(conjugate(ctx->perm(i), rho));
      if (j < 0) return fail("relabeled group is not the conjugate group");
      expected.set(j);
    }
    if (v2 != expected) return fail("Fstar is not conjugation-equivariant");
    return pass();
  });
}

// ---------------------------------------------------------------------------
// axioms

void suite_axioms(Work& w, ordered_json& checks, Counters& c) {
  const std::string suite = "axioms";

  auto axiom_check = [&](const std::string& name, const ExprPtr& e,
                         const std::set<int>& which) {
    run_check(checks, c, suite, name, [&]() -> CheckOut {
      AxiomReport r = check_axioms(e, w.g, which, w.caps);
      for (int a : which)
        if (!r.passed(a)) return fail(*r.failures[a - 1]);
      return pass();
    });
  };

  ExprPtr fstar = make_builtin(BuiltinKind::Fstar);
  ExprPtr ftilde = make_builtin(BuiltinKind::Ftilde);
  axiom_check("Fstar-F1-F2-F3-F5", fstar, {1, 2, 3, 5});
  axiom_check("Fstar-F4", fstar, {4});  // needs Frattini; may skip on cap
  axiom_check("Ftilde-F1-F4", ftilde, {1, 2, 3, 4});

  for (const auto& primes :
       std::vector<std::set<std::uint64_t>>{{}, {2}, {3}, {2, 3}}) {
    ExprPtr e = make_star(make_phi_pi(primes), fstar);
    axiom_check(print_expr(e) + "-F1-F4", e, {1, 2, 3, 4});
  }

  if (w.entry->name == "S3") {
    run_check(checks, c, suite, "negative-control-Triv-F3", [&]() -> CheckOut {
      AxiomReport r = check_axioms(make_builtin(BuiltinKind::Triv), w.g, {3},
                                   w.caps);
      if (r.passed(3)) return fail("Triv unexpectedly passes F3 on S3");
      return pass("witness: " + *r.failures[2]);
    });
  }
  if (w.entry->name == "S4") {
    run_check(checks, c, suite, "negative-control-Id-F4", [&]() -> CheckOut {
      AxiomReport r = check_axioms(make_builtin(BuiltinKind::Id), w.g, {4},
                                   w.caps);
      if (r.passed(4)) return fail("Id unexpectedly passes F4 on S4");
      return pass("witness: " + *r.failures[3]);
    });
  }
}

// ---------------------------------------------------------------------------
// theorem4: Ftilde(G) = G  <=>  M(G) = Phi(G)

void suite_theorem4(Work& w, ordered_json& checks, Counters& c) {
  run_check(checks, c, "theorem4", "ftilde-whole-iff-m-equals-phi", [&] {
    bool lhs = w.ftilde() == w.g.elems;
    bool rhs = m_intersection(w.g) == w.phi();
    if (lhs != rhs)
      return fail(std::string("Ftilde(G)=G is ") + (lhs ? "true" : "false") +
                  " but M(G)=Phi(G) is " + (rhs ? "true" : "false"));
    return pass(lhs ? "both sides hold" : "both sides fail");
  });
}

// ---------------------------------------------------------------------------
// theorem7: h_Ftilde <= h_gamma <= 2 h_Ftilde

void suite_theorem7(Work& w, ordered_json& checks, Counters& c) {
  for (const char* text :
       {"Ftilde", "Phi_pi{2} * Fstar", "Phi_pi{3} * Fstar"}) {
    run_check(checks, c, "theorem7", std::string("bounds-") + text, [&] {
      Verdict v = verify_theorem7(w.g, parse_functorial(text), w.caps);
      return v.pass ? pass(v.detail) : fail(v.detail);
    });
  }
}

// ---------------------------------------------------------------------------
// theorem8 (+ Lemma 12) over mutually permutable pairs

void suite_theorem8(Work& w, ordered_json& checks, Counters& c) {
  run_check(checks, c, "theorem8", "height-bounds-all-pairs", [&] {
    auto pairs = find_mutually_permutable(w.g, w.caps);
    for (const auto& p : pairs) {
      Verdict v = verify_theorem8(w.g, p, w.caps);
      if (!v.pass)
        return fail("pair (" + set_brief(w.ctx, p.a) + ", " +
                    set_brief(w.ctx, p.b) + "): " + v.detail);
    }
    return pass(std::to_string(pairs.size()) + " mutually permutable pairs");
  });

  run_check(checks, c, "theorem8", "lemma12-quasinilpotent-pairs", [&] {
    auto pairs = find_mutually_permutable(w.g, w.caps);
    int hits = 0;
    for (const auto& p : pairs) {
      if (!is_quasinilpotent(sub_local(w.ctx, p.a)) ||
          !is_quasinilpotent(sub_local(w.ctx, p.b)))
        continue;
      ++hits;
      if (w.hstar() > 2)
        return fail("quasinilpotent pair (" + set_brief(w.ctx, p.a) + ", " +
                    set_brief(w.ctx, p.b) + ") but h* = " +
                    std::to_string(w.hstar()));
    }
    return pass(std::to_string(hits) + " quasinilpotent pairs");
  });
}

// ---------------------------------------------------------------------------
// theorem9: direct products

void suite_theorem9(Work& w, ordered_json& checks, Counters& c) {
  if (w.entry->product_factors.empty()) return;
  run_check(checks, c, "theorem9", "direct-product-height", [&] {
    std::vector<ElemSet> factors;
    for (const auto& fg : w.entry->product_factors) {
      std::vector<int> gens;
      for (const auto& p : fg.generators()) {
        int id = w.ctx->index_of(p);
        if (id < 0) return fail("factor generators escape the product");
        gens.push_back(id);
      }
      factors.push_back(closure(w.ctx, gens, &w.g.elems));
    }
    Verdict v = verify_theorem9(w.g, factors, w.caps);
    return v.pass ? pass(v.detail) : fail(v.detail);
  });
}

// ---------------------------------------------------------------------------
// nilpotency-criteria (Theorems 10-11)

void suite_nilpotency(Work& w, ordered_json& checks, Counters& c) {
  run_check(checks, c, "nilpotency-criteria", "six-way-agreement", [&] {
    NilpotencyVerdicts v = verify_nilpotency_criteria(w.g, w.caps);
    std::ostringstream out;
    out << (v.nilpotent ? "nilpotent" : "non-nilpotent")
        << "; maximals-ftilde=" << v.maximals_ftilde_subnormal
        << " abnormals-fstar=" << v.abnormals_fstar_subnormal
        << " sylow-normalizers=" << v.sylow_normalizers_fstar_subnormal
        << " cyclic-primary=" << v.cyclic_primary_fstar_subnormal
        << " sylows=" << v.sylows_fstar_subnormal;
    if (!v.all_agree()) return fail("criteria disagree: " + out.str());
    return pass(out.str());
  });
}

// ---------------------------------------------------------------------------
// lattice-distributivity (Theorem 1) and omega idempotence (Prop 2(4))

void suite_lattice(Work& w, ordered_json& checks, Counters& c) {
  const std::string suite = "lattice-distributivity";
  std::vector<ExprPtr> family{
      parse_functorial("Fstar"), parse_functorial("Ftilde"),
      parse_functorial("Phi_pi{2} * Fstar"),
      parse_functorial("Phi_pi{3} * Fstar")};

  run_check(checks, c, suite, "values-distributive", [&] {
    if (!values_lattice_distributive(w.g, family, w.caps))
      return fail("a distributive law fails on the value closure");
    return pass();
  });

  run_check(checks, c, suite, "fstar-zero-element", [&] {
    for (const auto& e : family) {
      ExprPtr fstar = make_builtin(BuiltinKind::Fstar);
      if (evaluate(make_circ(fstar, e), w.g, w.caps) != w.fstar())
        return fail("gamma(Fstar(G)) != Fstar(G) for gamma = " + print_expr(e));
      if (evaluate(make_circ(e, fstar), w.g, w.caps) != w.fstar())
        return fail("Fstar(gamma(G)) != Fstar(G) for gamma = " + print_expr(e));
    }
    return pass();
  });

  run_check(checks, c, suite, "phi-star-ftilde", [&] {
    ExprPtr e = make_star(make_builtin(BuiltinKind::Phi),
                          make_builtin(BuiltinKind::Ftilde));
    if (evaluate(e, w.g, w.caps) != w.ftilde())
      return fail("Phi * Ftilde differs from Ftilde");
    return pass();
  });

  for (const char* text : {"Ftilde^inf", "(Phi_pi{2} * Fstar)^inf"}) {
    run_check(checks, c, suite, std::string("omega-idempotent-") + text, [&] {
      ExprPtr e = parse_functorial(text);
      ElemSet v = evaluate(e, w.g, w.caps);
      if (evaluate(e, sub_local(w.ctx, v), w.caps) != v)
        return fail("omega value is not a fixed point of itself");
      return pass("order " + std::to_string(v.count()));
    });
  }
}

// ---------------------------------------------------------------------------
// residual-lemma10 (+ Lemma 11 series consistency)

void suite_residual(Work& w, ordered_json& checks, Counters& c) {
  const std::string suite = "residual-lemma10";

  run_check(checks, c, suite, "residual-height-drop", [&] {
    if (w.g.is_trivial()) return pass("trivial group; not applicable");
    ElemSet r = quasinilpotent_residual(w.g, w.caps);
    int hr = h_star(sub_local(w.ctx, r), w.caps);
    if (hr != w.hstar() - 1)
      return fail("h*(residual) = " + std::to_string(hr) + " but h*(G) - 1 = " +
                  std::to_string(w.hstar() - 1));
    return pass("h* drops " + std::to_string(w.hstar()) + " -> " +
                std::to_string(hr));
  });

  run_check(checks, c, suite, "lemma11-series-terms", [&] {
    GammaSeries s = gamma_series(w.g, make_builtin(BuiltinKind::Fstar), w.caps);
    int h = s.height();
    if (h != w.hstar()) return fail("series length differs from h*");
    for (int n = 0; n <= h + 1; ++n) {
      bool term_is_g = s.terms[std::min(n, h)] == w.g.elems;
      if (term_is_g != (h <= n))
        return fail("Fstar-series term " + std::to_string(n) +
                    " disagrees with the height comparison");
    }
    return pass("h* = " + std::to_string(h));
  });
}

}  // namespace

std::vector<std::string> all_suite_names() {
  return {"radicals-agreement", "axioms",      "theorem4",
          "theorem7",           "theorem8",    "theorem9",
          "nilpotency-criteria", "lattice-distributivity",
          "residual-lemma10"};
}

RunResult run_suites(const std::vector<CatalogEntry>& catalog,
                     const RunOptions& options) {
  std::vector<std::string> suites =
      options.suites.empty() ? all_suite_names() : options.suites;
  auto enabled = [&](const char* name) {
    return std::find(suites.begin(), suites.end(), name) != suites.end();
  };
  for (const auto& s : suites) {
    auto all = all_suite_names();
    if (std::find(all.begin(), all.end(), s) == all.end())
      throw DomainError("unknown suite '" + s + "'");
  }

  RunResult result;
  ordered_json groups = ordered_json::array();
  ordered_json timing = ordered_json::object();
  auto run_started = std::chrono::system_clock::now();

  for (const auto& entry : catalog) {
    auto t0 = std::chrono::steady_clock::now();
    Counters counters;
    Work w(entry, options.caps);
    ordered_json checks = ordered_json::array();

    if (enabled("radicals-agreement")) suite_radicals(w, checks, counters);
    if (enabled("axioms")) suite_axioms(w, checks, counters);
    if (enabled("theorem4")) suite_theorem4(w, checks, counters);
    if (enabled("theorem7")) suite_theorem7(w, checks, counters);
    if (enabled("theorem8")) suite_theorem8(w, checks, counters);
    if (enabled("theorem9")) suite_theorem9(w, checks, counters);
    if (enabled("nilpotency-criteria")) suite_nilpotency(w, checks, counters);
    if (enabled("lattice-distributivity")) suite_lattice(w, checks, counters);
    if (enabled("residual-lemma10")) suite_residual(w, checks, counters);

    ordered_json rec;
    rec["name"] = entry.name;
    rec["order"] = entry.group.order();
    rec["degree"] = entry.group.degree();
    ordered_json radicals;
    radicals["F"] = set_brief(w.ctx, w.fit());
    radicals["Fstar"] = set_brief(w.ctx, w.fstar());
    try {
      radicals["Ftilde"] = set_brief(w.ctx, w.ftilde());
    } catch (const CapError& e) {
      radicals["Ftilde"] = std::string("SKIPPED: ") + e.what();
    }
    radicals["h_star"] = w.hstar();
    rec["radicals"] = std::move(radicals);
    rec["checks"] = std::move(checks);
    rec["pass"] = counters.passed;
    rec["fail"] = counters.failed;
    rec["skipped"] = counters.skipped;
    groups.push_back(std::move(rec));

    result.passed += counters.passed;
    result.failed += counters.failed;
    result.skipped += counters.skipped;

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    timing[entry.name] = static_cast<std::int64_t>(ms);
  }

  ordered_json report;
  report["tool_version"] = kToolVersion;
  report["caps"] = {{"max_elements", options.caps.max_elements},
                    {"max_subgroup_order", options.caps.max_subgroup_order},
                    {"max_degree", options.caps.max_degree}};
  report["suites"] = suites;
  report["groups"] = std::move(groups);
  report["summary"] = {{"pass", result.passed},
                       {"fail", result.failed},
                       {"skipped", result.skipped}};
  if (options.with_timing) {
    ordered_json t;
    t["started"] = static_cast<std::int64_t>(
        std::chrono::duration_cast<std::chrono::seconds>(
            run_started.time_since_epoch())
            .count());
    t["per_group_ms"] = std::move(timing);
    report["timing"] = std::move(t);
  }
  result.report = std::move(report);
  return result;
}

}  // namespace gft
