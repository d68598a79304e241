#include "pfister/scenarios.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "pfister/abstract_tight.hpp"
#include "pfister/error.hpp"
#include "pfister/kernels.hpp"
#include "pfister/linkage.hpp"
#include "pfister/oracle.hpp"
#include "pfister/parse.hpp"
#include "pfister/valuation.hpp"

namespace pfister {

Json ScenarioConfig::to_json() const {
  Json j;
  j["field"] = field.name();
  j["seed"] = seed;
  j["trials"] = trials;
  j["degree_bound"] = degree_bound;
  j["n"] = n;
  j["s"] = s;
  j["samples"] = samples;
  j["pairs"] = pairs;
  return j;
}

namespace {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() { return state_ = kernels::splitmix64(state_); }
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

// Nonconstant polynomial over F_2 with 1..max_terms terms.
FieldElement random_poly(const RingPtr& ring, Gen& g, int max_terms = 3, int max_deg = 2) {
  for (;;) {
    std::vector<Poly::Term> terms;
    const auto k = 1 + g.below(static_cast<std::uint64_t>(max_terms));
    for (std::uint64_t t = 0; t < k; ++t) {
      Exponents e{};
      for (std::size_t v = 0; v < ring->num_vars(); ++v)
        e[v] = static_cast<std::uint16_t>(g.below(static_cast<std::uint64_t>(max_deg) + 1));
      terms.push_back({e, 1});
    }
    Poly p = Poly::from_terms(ring, std::move(terms));
    if (!p.is_zero() && !p.is_constant()) return FieldElement(std::move(p));
  }
}

// x^e with exponents in [-2, 2], not constant.
FieldElement random_laurent(const RingPtr& ring, Gen& g) {
  for (;;) {
    FieldElement f = FieldElement::one(ring);
    for (std::size_t v = 0; v < ring->num_vars(); ++v)
      f *= FieldElement::variable(ring, v).pow(static_cast<int>(g.below(5)) - 2);
    if (!f.is_constant()) return f;
  }
}

std::vector<FieldElement> vars(const RingPtr& ring) {
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) out.push_back(FieldElement::variable(ring, i));
  return out;
}

std::vector<std::string> names(const std::string& prefix, int from, int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(from + i));
  return out;
}

FieldElement subset_product(const std::vector<FieldElement>& xs, std::uint32_t mask, const RingPtr& ring) {
  FieldElement p = FieldElement::one(ring);
  for (std::size_t i = 0; i < xs.size(); ++i)
    if ((mask >> i) & 1u) p *= xs[i];
  return p;
}

Json strings(const std::vector<FieldElement>& xs) {
  Json j = Json::array();
  for (const auto& x : xs) j.push_back(x.to_string());
  return j;
}

LinkageOptions link_opts(const ScenarioConfig& cfg) {
  LinkageOptions o;
  o.trials = cfg.trials;
  o.spec.seed = cfg.seed;
  o.spec.field = cfg.field;
  o.spec.exec = cfg.exec;
  o.search.seed = cfg.seed;
  o.search.exec = cfg.exec;
  o.search.degree_bound = cfg.degree_bound;
  return o;
}

IsotropyOptions search_opts(const ScenarioConfig& cfg) {
  IsotropyOptions o;
  o.seed = cfg.seed;
  o.exec = cfg.exec;
  o.degree_bound = cfg.degree_bound;
  return o;
}

// Specialization evidence that claim is hyperbolic. Passes when no trial
// refutes it and every trial found a point without poles.
Json evidence(const QuadraticForm& claim, const ScenarioConfig& cfg, std::size_t cross_checks, bool& ok) {
  SpecializationOptions so;
  so.trials = cfg.trials;
  so.seed = cfg.seed;
  so.field = cfg.field;
  so.exec = cfg.exec;
  so.exhaustive_cross_checks = cross_checks;
  try {
    const EvidenceReport e = specialization_witt_evidence(claim, so);
    ok = claim.empty() || (e.passes == e.trials && e.cross_checked == std::min(cross_checks, e.passes));
    Json j = e.to_json();
    j["status"] = "pass";
    j["dimension"] = claim.dimension();
    return j;
  } catch (const RefutedError& e) {
    ok = false;
    Json j;
    j["status"] = "refuted";
    j["trial"] = e.trial();
    j["point"] = e.point();
    j["field_degree"] = e.field_degree();
    return j;
  }
}

// Formal normal form and specialization evidence for a claimed relation.
void relation_claims(Report& r, const std::string& id, const std::string& statement, const SymbolSum& sum,
                     const ScenarioConfig& cfg, std::size_t cross_checks) {
  const SymbolSum nf = normalize(sum);
  Json d;
  d["sum"] = sum.to_string();
  d["normal_form"] = nf.serialize();
  r.add(id + ".formal", statement + " (normal form is 0)", Provenance::Computed, nf.empty(), d);
  bool ok = false;
  Json e = evidence(sum.expand(), cfg, cross_checks, ok);
  r.add(id + ".specializations", statement + " (Witt index at finite-field points)", Provenance::Evidence, ok, e);
}

SymbolSum sum_of(std::size_t fold, std::initializer_list<QPfisterSymbol> terms) {
  return SymbolSum(fold, std::vector<QPfisterSymbol>(terms));
}

Report scenario_rels(const ScenarioConfig& cfg) {
  Report r("rels", cfg.to_json());
  const RingPtr ring = make_ring({"x", "y", "z", "w"});
  Gen g(cfg.seed ^ 0x7265'6c73ull);
  for (int i = 0; i < 3; ++i) {
    const std::string tag = std::to_string(i);
    FieldElement a = random_poly(ring, g), b = random_poly(ring, g), b2 = random_poly(ring, g);
    // One instance with rational entries.
    if (i == 2) {
      a = a / random_poly(ring, g, 2, 1);
      b2 = b2 / random_poly(ring, g, 2, 1);
    }
    const QPfisterSymbol ab({a, b}), ba({b, a}), ab2({a, b2});
    const std::string ent = "a=" + a.to_string() + ", b=" + b.to_string() + ", b'=" + b2.to_string();
    relation_claims(r, "symmetry." + tag, "((a,b)) + ((b,a)) = 0 for " + ent, sum_of(2, {ab, ba}), cfg, cfg.trials);
    if ((b + b2).is_zero()) continue;
    relation_claims(r, "additivity." + tag, "((a,b)) + ((a,b')) + ((a,b+b')) = 0 for " + ent,
                    sum_of(2, {ab, ab2, QPfisterSymbol({a, b + b2})}), cfg, cfg.trials);
    relation_claims(r, "alternating." + tag, "((a,a)) = 0 for " + ent, sum_of(2, {QPfisterSymbol({a, a})}), cfg,
                    cfg.trials);
  }
  // The calculus must not kill a generic symbol.
  const auto x = FieldElement::variable(ring, 0), y = FieldElement::variable(ring, 1);
  const PfisterForm xy = QPfisterSymbol({x, y}).to_pfister();
  const Decision d = monice_certificate(monice_betas(xy), MonomialValuation(ring));
  const bool kept = !normalize(sum_of(2, {QPfisterSymbol({x, y})})).empty();
  r.add("generic.nonzero", "((x,y)) is anisotropic and survives normalization", Provenance::Certified,
        d.is_certified() && kept, d.to_json());
  return r;
}

Report scenario_multiadd(const ScenarioConfig& cfg) {
  Report r("multiadd", cfg.to_json());
  const RingPtr ring = make_ring({"x", "y", "z", "w"});
  Gen g(cfg.seed ^ 0x6d61'6464ull);
  for (std::size_t n : {std::size_t{3}, std::size_t{4}}) {
    for (int i = 0; i < 2; ++i) {
      const std::string tag = std::to_string(n) + "." + std::to_string(i);
      std::vector<FieldElement> e;
      for (std::size_t k = 0; k < n; ++k) e.push_back(random_poly(ring, g, 2));
      const QPfisterSymbol base(e);
      const std::string ent = "entries " + strings(e).dump();

      const std::size_t slot = g.below(n);
      const FieldElement u = random_poly(ring, g, 2);
      if (!(e[slot] + u).is_zero()) {
        auto eu = e, esum = e;
        eu[slot] = u;
        esum[slot] = e[slot] + u;
        relation_claims(r, "additivity." + tag,
                        std::to_string(n) + "-fold additivity in slot " + std::to_string(slot) + ", " + ent,
                        sum_of(n, {base, QPfisterSymbol(eu), QPfisterSymbol(esum)}), cfg, cfg.trials);
      }

      const std::size_t p = g.below(n), q = (p + 1 + g.below(n - 1)) % n;
      auto ealt = e;
      ealt[q] = ealt[p];
      relation_claims(r, "alternating." + tag,
                      std::to_string(n) + "-fold symbol with entries " + std::to_string(p) + " and " +
                          std::to_string(q) + " equal vanishes, " + ent,
                      sum_of(n, {QPfisterSymbol(ealt)}), cfg, cfg.trials);

      std::vector<std::size_t> perm(n);
      for (std::size_t k = 0; k < n; ++k) perm[k] = k;
      for (std::size_t k = n - 1; k > 0; --k) std::swap(perm[k], perm[g.below(k + 1)]);
      if (perm[0] == 0) std::swap(perm[0], perm[1]);
      std::vector<FieldElement> ep;
      for (auto k : perm) ep.push_back(e[k]);
      relation_claims(r, "symmetry." + tag, std::to_string(n) + "-fold symbol is symmetric, " + ent,
                      sum_of(n, {base, QPfisterSymbol(ep)}), cfg, cfg.trials);
    }
  }
  return r;
}

Report scenario_main8(const ScenarioConfig& cfg) {
  const int n = cfg.n;
  if (n < 2 || n > 6) throw Error(ErrorCode::InvalidArgument, "main8 needs 2 <= n <= 6");
  Report r("main8", cfg.to_json());
  const RingPtr ring = make_ring(names("a", 0, n + 1));
  const auto a = vars(ring);
  const auto psis = leave_one_out_family(a);
  const std::size_t m = psis.size();

  RepresentativeMap reps;
  std::size_t single = 0;
  Json failures = Json::array();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1u) idx.push_back(i);
    const QPfisterSymbol rep = subset_sum_symbol(psis, idx);
    reps.emplace(mask, rep.to_pfister());
    SymbolSum check(static_cast<std::size_t>(n));
    check += rep;
    for (auto i : idx) check += psis[i];
    if (normalize(check).empty())
      ++single;
    else
      failures.push_back({{"mask", mask}, {"representative", rep.to_string()}});
  }
  Json fam = Json::array();
  for (const auto& p : psis) fam.push_back(p.to_string());
  r.add("subset_sums", "every nonempty subset sum of the family reduces to a single symbol", Provenance::Computed,
        single == (1u << m) - 1, {{"family", fam}, {"subsets", (1u << m) - 1}, {"single", single}, {"failures", failures}});

  std::vector<PfisterForm> forms;
  for (const auto& p : psis) forms.push_back(p.to_pfister());
  LinkageOptions lo = link_opts(cfg);
  lo.trials = 0;
  const LinkageReport lr = strong_tightness_ladder(PfisterSet::general(forms, reps), lo);
  r.add("strongly_tight", "the family is strongly tight (every Sigma over a subset of size > 1 normalizes to 0)",
        Provenance::Computed, lr.strongly_tight == Tri::True, lr.to_json());
  r.add("sigma_zero", "Sigma of the whole family normalizes to 0", Provenance::Computed,
        lr.sigma && lr.sigma->normal_form.empty(),
        {{"normal_form", lr.sigma ? Json(lr.sigma->normal_form.serialize()) : Json()}});

  const ObstructionReport ob = common_subform_obstruction(psis, MonomialValuation(ring));
  r.add("no_common_subform",
        "the value sets mod 2 of the forms meet only in 0, so no 2-dimensional subform is common to all",
        Provenance::Certified, ob.established && ob.intersection.rank() == 0,
        ob.to_json(static_cast<std::size_t>(n + 1)));
  r.cite("not_linked", "a strongly tight set of n+1 forms that is not linked", {"subset_sums", "strongly_tight", "no_common_subform"});
  return r;
}

Report scenario_counter36(const ScenarioConfig& cfg) {
  const int n = cfg.n, s = cfg.s;
  if (n < 2 || s < 1 || s > 6 || n + s - 1 > static_cast<int>(kMaxVars))
    throw Error(ErrorCode::InvalidArgument, "counter36 needs n >= 2, 1 <= s <= 6 and n + s - 1 <= 10");
  Report r("counter36", cfg.to_json());
  std::vector<std::string> vn = names("b", 1, s);
  for (auto& x : names("a", 1, n - 1)) vn.push_back(x);
  const RingPtr ring = make_ring(vn);
  const auto all = vars(ring);
  const std::vector<FieldElement> betas(all.begin(), all.begin() + s);
  const std::vector<FieldElement> as(all.begin() + s, all.end());
  const PfisterForm phi{std::vector<FieldElement>(as.begin(), as.end() - 1), as.back()};
  const PfisterSet set = PfisterSet::right_linked(betas, phi);

  bool share = true;
  for (const auto& f : set.forms) share &= f.quad == phi.quad && std::equal(phi.slots.begin(), phi.slots.end(), f.slots.begin() + 1);
  r.add("right_linked", "all forms share the right factor " + phi.to_string(), Provenance::Computed, share,
        set.to_json());

  const LinkageOptions lo = link_opts(cfg);
  const SigmaInvariant sg = sigma(set, lo);
  const auto fold = static_cast<std::size_t>(n + s - 1);
  r.add("closed_form.fold", "Sigma has the class of an (n+s-1)-fold form", Provenance::Computed,
        sg.closed_form && sg.closed_form->fold() == fold,
        {{"closed_form", sg.closed_form ? sg.closed_form->to_string() : ""}, {"fold", fold}});
  r.add("closed_form.formal", "sum over subsets of <<beta_S>> equals <<beta_1, ..., beta_s>> in W(F)",
        Provenance::Computed, sg.closed_form_formal);
  const Json& ev = sg.evidence.at("closed_form_difference");
  r.add("closed_form.specializations", "symbolic Sigma matches the closed form at finite-field points",
        Provenance::Evidence, ev.at("status") == "pass", ev);

  // Sum over T of <<alpha beta_T>> = <<beta_1..beta_t>> + <<alpha, beta_1..beta_t>>.
  {
    const RingPtr ir = make_ring({"x", "y1", "y2", "y3", "y4"});
    const auto iv = vars(ir);
    Json rows = Json::array();
    bool all_ok = true;
    for (std::size_t t = 1; t <= 4; ++t) {
      const std::vector<FieldElement> bs(iv.begin() + 1, iv.begin() + 1 + static_cast<long>(t));
      BilinearWittSum w(ir);
      for (std::uint32_t mask = 0; mask < (1u << t); ++mask) w.add_pfister({iv[0] * subset_product(bs, mask, ir)});
      w.add_pfister(bs);
      std::vector<FieldElement> ab{iv[0]};
      ab.insert(ab.end(), bs.begin(), bs.end());
      w.add_pfister(ab);
      rows.push_back({{"t", t}, {"zero", w.is_zero()}});
      all_ok &= w.is_zero();
    }
    r.add("induction_identity", "subset-sum induction identity holds in W(F) for t = 1..4", Provenance::Computed,
          all_ok, rows);
  }

  const MonomialValuation val(ring);
  const Decision cert = monice_certificate(monice_betas(*sg.closed_form), val);
  r.add("sigma_nonzero", "Sigma is an anisotropic Pfister form over F, hence nonzero", Provenance::Certified,
        cert.is_certified(), cert.to_json());

  const auto alphas = [&] {
    auto v = phi.slots;
    v.push_back(phi.quad);
    return v;
  }();
  std::size_t pairs = 0, not_left = 0;
  Json undecided = Json::array();
  for (std::uint32_t p = 1; p < (1u << s); ++p)
    for (std::uint32_t q = p + 1; q < (1u << s); ++q) {
      ++pairs;
      LinkageOptions plo = lo;
      plo.trials = 0;
      const LinkDecision d =
          pair_left_linkage_rightlinked(subset_product(betas, p, ring), subset_product(betas, q, ring), alphas, plo);
      if (d.linked == Tri::False)
        ++not_left;
      else
        undecided.push_back({{"masks", {p, q}}, {"decision", d.to_json()}});
    }
  r.add("pairs_not_left_linked", "no two elements of the generated group are left-linked over F", Provenance::Certified,
        pairs == not_left, {{"pairs", pairs}, {"certified", not_left}, {"other", undecided}});

  LinkageOptions llo = lo;
  llo.trials = 0;
  const LinkageReport lr = strong_tightness_ladder(set, llo);
  r.add("not_strongly_tight", "the set is not strongly tight over F", Provenance::Certified,
        s < 2 ? lr.strongly_tight == Tri::True : lr.strongly_tight == Tri::False, lr.to_json());

  r.cite("over_K", "over the field of the example, Sigma vanishes while no two forms are left-linked",
         {"closed_form.fold", "closed_form.formal", "closed_form.specializations", "sigma_nonzero",
          "pairs_not_left_linked"});
  r.note("the example counts n+s entries for Sigma; the closed form construction gives n+s-1, which is what is "
         "computed here");
  return r;
}

QuadraticForm forms_sum(std::initializer_list<QuadraticForm> fs) {
  QuadraticForm out;
  for (const auto& f : fs) out = orth_sum(out, f);
  return out;
}

Report scenario_pairs(const ScenarioConfig& cfg) {
  Report r("pairs", cfg.to_json());
  const IsotropyOptions so = search_opts(cfg);
  LinkageOptions lo = link_opts(cfg);
  lo.trials = 0;

  {
    const RingPtr ring = make_ring({"a", "b"});
    const auto a = FieldElement::variable(ring, 0), b = FieldElement::variable(ring, 1);
    const QuaternionAlgebra q{a, b};
    const Decision in = insep_pair_test(q, q, so), sp = sep_pair_test(q, q, so);
    r.add("equal.left", "a quaternion algebra is left-linked to itself (Alb' isotropic)", Provenance::Computed,
          in.is_witness(), in.to_json());
    r.add("equal.right", "a quaternion algebra is right-linked to itself (Alb isotropic)", Provenance::Computed,
          sp.is_witness(), sp.to_json());
    const LinkDecision tf = pair_left_linkage_rightlinked(b, b, {a}, lo);
    const LinkDecision fv = faivre_pair_criterion(norm_pfister(q), norm_pfister(q));
    r.add("equal.criteria", "both pair criteria report the equal pair as left-linked", Provenance::Computed,
          tf.linked == Tri::True && fv.linked == Tri::True, {{"twoforms", tf.to_json()}, {"faivre", fv.to_json()}});
  }
  {
    const RingPtr ring = make_ring({"a1", "b1", "a2", "b2"});
    const auto v = vars(ring);
    const QuaternionAlgebra q1{v[0], v[1]}, q2{v[2], v[3]};
    const Decision in = insep_pair_test(q1, q2, so, false), sp = sep_pair_test(q1, q2, so, false);
    r.add("generic.not_left", "generic algebras are not left-linked (Alb' anisotropic)", Provenance::Certified,
          in.is_certified(), in.to_json());
    r.add("generic.not_right", "generic algebras are not right-linked (Alb anisotropic)", Provenance::Certified,
          sp.is_certified(), sp.to_json());
  }
  {
    const RingPtr ring = make_ring({"a1", "a2", "b"});
    const auto v = vars(ring);
    const QuaternionAlgebra q1{v[0], v[2]}, q2{v[1], v[2]};
    const Decision in = insep_pair_test(q1, q2, so), sp = sep_pair_test(q1, q2, so);
    r.add("shared_beta.left", "algebras with a common beta are left-linked (Alb' isotropic)", Provenance::Computed,
          in.is_witness(), in.to_json());
    r.add("shared_beta.right", "left-linked algebras are right-linked (Alb isotropic)", Provenance::Computed,
          sp.is_witness(), sp.to_json());
    const LinkageReport lr = strong_tightness_ladder(PfisterSet::left_linked({v[0], v[1]}, {v[2]}, ring), lo);
    r.add("shared_beta.strongly_tight", "a left-linked pair is strongly tight with Sigma normalizing to 0",
          Provenance::Computed, lr.strongly_tight == Tri::True && lr.sigma_zero == Tri::True, lr.to_json());
  }
  {
    const RingPtr ring = make_ring({"a", "b", "c"});
    const auto v = vars(ring);
    const auto &a = v[0], &b = v[1], &c = v[2];
    const QuaternionAlgebra q2{b, c}, q3{b, a * c};
    const Decision sp = sep_pair_test(q2, q3, so);
    r.add("right_only.right", "[b,c) and [b,ac) are right-linked (Alb isotropic)", Provenance::Computed,
          sp.is_witness(), sp.to_json());
    const Decision in = insep_pair_test(q2, q3, so, false);
    r.add("right_only.not_left", "[b,c) and [b,ac) are not left-linked (Alb' anisotropic)", Provenance::Certified,
          in.is_certified(), in.to_json());
    const LinkDecision tf = pair_left_linkage_rightlinked(c, a * c, {b}, lo);
    const LinkDecision fv = faivre_pair_criterion(norm_pfister(q2), norm_pfister(q3));
    r.add("right_only.twoforms", "the right-linked pair criterion certifies that they are not left-linked",
          Provenance::Certified, tf.linked == Tri::False, tf.to_json());
    r.add("right_only.consistent", "the pair criteria do not contradict the Albert form verdicts",
          Provenance::Computed, fv.linked != Tri::True && (tf.linked == Tri::False) == in.is_certified(),
          {{"faivre", fv.to_json()}});
  }
  return r;
}

Report scenario_ladder_fuzz(const ScenarioConfig& cfg) {
  Report r("ladder-fuzz", cfg.to_json());
  tight::FuzzOptions fo;
  fo.samples = cfg.samples;
  fo.seed = cfg.seed;
  fo.exec = cfg.exec;
  const tight::FuzzReport fr = tight::fuzz(fo);
  r.add("prep", "almost strongly tight sets are strongly tight exactly when Sigma vanishes", Provenance::Computed,
        fr.prep.violations == 0 && fr.prep.sets_checked > 0, fr.prep.to_json());
  r.add("ladder", "tight sets are strongly tight exactly when every Sigma over a subset vanishes",
        Provenance::Computed, fr.ladder.violations == 0 && fr.ladder.sets_checked > 0, fr.ladder.to_json());
  r.note("configurations: " + std::to_string(fr.configurations) + ", samples without a spanning P: " +
         std::to_string(fr.unsampled));
  if (fr.prep.infeasible_skipped > 0)
    r.note("skipped " + std::to_string(fr.prep.infeasible_skipped) +
           " (V, U) configurations that admit no spanning P with one element per coset");
  return r;
}

Report scenario_updim(const ScenarioConfig& cfg) {
  const int s = cfg.s;
  if (s < 1 || s > 6) throw Error(ErrorCode::InvalidArgument, "updim needs 1 <= s <= 6");
  Report r("updim", cfg.to_json());
  LinkageOptions lo = link_opts(cfg);
  const auto bound = std::size_t{1} << (s + 1);
  {
    std::vector<std::string> vn = names("b", 1, s);
    vn.push_back("a");
    const RingPtr ring = make_ring(vn);
    const auto v = vars(ring);
    const std::vector<FieldElement> betas(v.begin(), v.begin() + s);
    const PfisterForm phi{{}, v.back()};
    const DimBoundReport d = dim_bound_check(right_linked_representatives(betas, phi), static_cast<std::size_t>(s),
                                             std::nullopt, lo);
    r.add("generic.dimension", "Sigma of a right-linked 2-fold set has a representative of dimension 2^(s+1)",
          Provenance::Computed, d.ok() && d.dimension == bound, d.to_json());
    r.add("generic.equivalence", "the representative is Witt equivalent to the symbolic Sigma", Provenance::Evidence,
          d.evidence.at("witt_equivalence").at("status") == "pass", d.evidence);
  }
  if (s >= 2) {
    std::vector<std::string> vn{"x", "y"};
    for (auto& z : names("z", 3, s - 2)) vn.push_back(z);
    const RingPtr ring = make_ring(vn);
    const auto betas = vars(ring);
    const auto &x = betas[0], &y = betas[1];
    const FieldElement q = x * y * (x + y);
    const PfisterForm phi{{}, q};
    LinkageOptions plo = lo;
    plo.trials = 0;
    plo.search_degree = cfg.degree_bound;
    const LinkDecision pair = pair_left_linkage_rightlinked(x, y, {q}, plo);
    r.add("pair.left_linked", "<<x>> (x) phi and <<y>> (x) phi are left-linked for phi = [1, xy(x+y)]",
          Provenance::Computed, pair.linked == Tri::True, pair.to_json());
    const DimBoundReport d =
        dim_bound_check(right_linked_representatives(betas, phi), static_cast<std::size_t>(s), std::pair{1u, 2u}, lo);
    r.add("pair.dimension", "with a left-linked pair the representative has dimension at most 2^(s+1) - 6",
          Provenance::Computed, d.ok() && d.bound == bound - 6, d.to_json());
    r.add("pair.cancellation", "the three summands of the pair cancel", Provenance::Computed, d.cancellation_formal,
          {{"formal", d.cancellation_formal}});
    const PfisterSet set = PfisterSet::right_linked(betas, phi);
    const SigmaInvariant sg = sigma(set, lo);
    const SymbolSum closed(static_cast<std::size_t>(s + 1), {QPfisterSymbol::from_pfister(*sg.closed_form)});
    r.add("pair.sigma_zero", "Sigma of the set normalizes to 0", Provenance::Computed,
          normalize(closed).empty() && sg.closed_form_formal,
          {{"closed_form", sg.closed_form->to_string()}, {"normal_form", normalize(closed).serialize()}});
    if (s == 3) {
      try {
        const AnnihilatorReport ar = annihilator_identity_check({x, y, x * y}, phi, plo);
        r.add("annihilator", "<<x>>, <<y>>, <<xy>> tensored with phi add up with their product to 0",
              ar.formal ? Provenance::Computed : Provenance::Evidence, ar.holds(), ar.to_json());
      } catch (const Error& e) {
        r.add("annihilator", "<<x>>, <<y>>, <<xy>> tensored with phi add up with their product to 0",
              Provenance::Computed, false, {{"error", e.what()}});
      }
    }
  }
  return r;
}

Report scenario_triple(const ScenarioConfig& cfg) {
  Report r("triple", cfg.to_json());
  const RingPtr ring = make_ring({"a", "b", "c"});
  const auto v = vars(ring);
  const auto &a = v[0], &b = v[1], &c = v[2];
  const FieldElement one = FieldElement::one(ring), zero = FieldElement::zero(ring);
  const PfisterForm phi1{{c}, a}, phi2{{c}, b}, phi3{{a * c}, b}, phi23{{a}, b};

  r.add("phi1_phi2.left", "phi1 and phi2 share the bilinear factor <<c>>", Provenance::Computed,
        phi1.slots == phi2.slots, {{"phi1", phi1.to_string()}, {"phi2", phi2.to_string()}});
  // a N(x, y) = N(a y, x + y) for N = [1, a].
  const PfisterForm phi1b{{a * c}, a};
  const std::vector<std::vector<FieldElement>> cols{
      {one, zero, zero, zero}, {zero, one, zero, zero}, {zero, zero, zero, one}, {zero, zero, a, one}};
  const bool iso = verify_isometry(expand(phi1), expand(phi1b), cols);
  r.add("phi1.isometry", "phi1 is isometric to [[ac, a]]", Provenance::Computed, iso,
        {{"target", phi1b.to_string()}, {"map", "(x0, y0, x1, y1) -> (x0, y0, a y1, x1 + y1)"}});
  r.add("phi1_phi3.left", "phi1 and phi3 share the bilinear factor <<ac>>", Provenance::Computed,
        iso && phi1b.slots == phi3.slots, {{"phi3", phi3.to_string()}});
  r.add("phi2_phi3.right", "phi2 and phi3 share the quadratic factor [1, b]", Provenance::Computed,
        phi2.quad == phi3.quad);

  BilinearWittSum w(ring);
  w.add_pfister({c});
  w.add_pfister({a * c});
  w.add_pfister({a});
  w.add_pfister({c, a * c});
  r.add("phi23.formal", "<<c>> + <<ac>> = <<a>> + <<c, ac>>, so phi2 + phi3 = phi23 modulo a 3-fold form",
        Provenance::Computed, w.is_zero());
  bool ok = false;
  const PfisterForm rest{{c, a * c}, b};
  Json e = evidence(forms_sum({expand(phi2), expand(phi3), expand(phi23), expand(rest)}), cfg, 0, ok);
  r.add("phi23.specializations", "phi2 + phi3 + phi23 + [[c, ac, b]] is hyperbolic at finite-field points",
        Provenance::Evidence, ok, e);

  const QuadraticForm alb = albert_form(QuaternionAlgebra{a, c}, QuaternionAlgebra{b, a});
  const QuadraticForm literal(
      {BinaryBlock{one, a, c}, BinaryBlock{one, b, a}, BinaryBlock{one, a + b, one}});
  r.add("alb.shape", "Alb = c[1,a] _|_ a[1,b] _|_ [1,a+b]", Provenance::Computed, alb == literal,
        {{"alb", alb.to_string()}});
  const MonomialValuation val(ring);
  const Decision m2 = monice2_certificate(a, b, a + b, val);
  r.add("alb.monice2", "a[1,b] _|_ [1,a+b] is anisotropic", Provenance::Certified,
        m2.is_certified() && m2.matrix_rank() == 2, m2.to_json());
  const Decision vc = value_class_certificate(alb, val);
  r.add("alb.anisotropic", "Alb is anisotropic", Provenance::Certified, vc.is_certified(), vc.to_json());
  const Decision sr = isotropy_search(alb, search_opts(cfg));
  r.add("alb.search", "bounded isotropy search finds no witness for Alb", Provenance::Computed, !sr.is_witness(),
        sr.to_json());

  r.cite("phi1_phi23.not_right", "phi1 and phi23 are not right-linked over F",
         {"alb.shape", "alb.monice2", "alb.anisotropic"});
  r.cite("over_E", "over the function field of Alb the triple is tight and Sigma is not in I_q^4",
         {"phi1_phi2.left", "phi1.isometry", "phi1_phi3.left", "phi2_phi3.right", "phi23.formal",
          "phi23.specializations", "alb.shape", "alb.monice2", "alb.anisotropic", "alb.search"});
  r.note("the base change to the function field of Alb is not computed");
  return r;
}

Report scenario_witt_kernel(const ScenarioConfig& cfg) {
  Report r("witt-kernel", cfg.to_json());
  for (int k : {1, 2}) {
    const FiniteField f = FiniteField::standard(k);
    const std::uint32_t q = f.order();
    std::uint64_t forms = 0, disagreements = 0;
    Json first = nullptr;
    for (std::size_t blocks = 1; blocks <= 3; ++blocks) {
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < 2 * blocks; ++i) total *= q;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        FiniteBlockForm fb{f, {}};
        std::uint64_t t = idx;
        for (std::size_t i = 0; i < blocks; ++i) {
          FiniteBlock b;
          b.a = static_cast<FiniteField::Element>(t % q);
          t /= q;
          b.b = static_cast<FiniteField::Element>(t % q);
          t /= q;
          fb.blocks.push_back(b);
        }
        const WittClassFinite w = witt_decompose_finite(fb);
        const FiniteForm dense = fb.to_dense();
        const std::size_t idx_ex = exhaustive_witt_index(dense, cfg.exec);
        const bool iso_ex = exhaustive_isotropic(dense, cfg.exec);
        ++forms;
        if (idx_ex != w.witt_index || iso_ex != (w.dim_anisotropic < w.dimension)) {
          if (disagreements++ == 0)
            first = {{"form", fb.to_string()}, {"witt_index", w.witt_index}, {"exhaustive_index", idx_ex}};
        }
      }
    }
    r.add("F" + std::to_string(q), "Arf classification matches exhaustive search on every [a,b] sum of dim <= 6 over " + f.name(),
          Provenance::Computed, disagreements == 0,
          {{"forms", forms}, {"disagreements", disagreements}, {"first", first}});
  }
  return r;
}

Report scenario_cross_criteria(const ScenarioConfig& cfg) {
  Report r("cross-criteria", cfg.to_json());
  const RingPtr ring = make_ring({"a", "b", "c"});
  const auto v = vars(ring);
  Gen g(cfg.seed ^ 0x6372'6f73ull);
  LinkageOptions lo = link_opts(cfg);
  lo.trials = 0;
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t contradictions = 0;
  Json first = nullptr;
  for (std::size_t i = 0; i < cfg.pairs; ++i) {
    const std::uint64_t mode = i % 5;
    auto pick = [&] { return g.below(2) ? random_laurent(ring, g) : random_poly(ring, g, 2, 2); };
    const FieldElement alpha = pick(), beta = pick();
    FieldElement gamma = pick();
    std::vector<FieldElement> alphas{alpha};
    if (mode == 1) gamma = beta;
    if (mode == 2) gamma = beta * pick().square();
    if (mode == 3) gamma = beta * alpha;
    if (mode == 4) alphas.insert(alphas.begin(), pick());
    if (gamma.is_zero()) gamma = beta;
    std::vector<FieldElement> s1{beta}, s2{gamma};
    s1.insert(s1.end(), alphas.begin(), alphas.end() - 1);
    s2.insert(s2.end(), alphas.begin(), alphas.end() - 1);
    const PfisterForm p1{s1, alphas.back()}, p2{s2, alphas.back()};
    const LinkDecision tf = pair_left_linkage_rightlinked(beta, gamma, alphas, lo);
    const LinkDecision fv = faivre_pair_criterion(p1, p2);
    ++counts[std::string("twoforms.") + to_string(tf.linked)];
    ++counts[std::string("faivre.") + to_string(fv.linked)];
    const bool clash = (tf.linked == Tri::True && fv.linked == Tri::False) ||
                       (tf.linked == Tri::False && fv.linked == Tri::True);
    if (clash && contradictions++ == 0)
      first = {{"phi", p1.to_string()}, {"psi", p2.to_string()}, {"twoforms", tf.to_json()}, {"faivre", fv.to_json()}};
  }
  Json d;
  for (const auto& [k, n] : counts) d[k] = n;
  d["pairs"] = cfg.pairs;
  d["contradictions"] = contradictions;
  d["first"] = first;
  r.add("consistent", "the two pair criteria never return contradictory verdicts", Provenance::Computed,
        contradictions == 0, d);
  r.add("decided", "both criteria decide some pairs", Provenance::Computed,
        counts["twoforms.true"] > 0 && counts["twoforms.false"] > 0 && counts["faivre.true"] > 0, d);
  return r;
}

bool is_symbol_text(const std::string& t) {
  const auto p = t.find_first_not_of(' ');
  return p != std::string::npos && (t.compare(p, 2, "((") == 0 || t.substr(p) == "0") && t.find("_|_") == std::string::npos;
}

Report scenario_custom(const Json& def, const ScenarioConfig& cfg) {
  Json params = cfg.to_json();
  params["definition"] = def;
  Report r("custom", params);
  std::vector<std::string> vn;
  if (def.contains("variables")) {
    vn = def.at("variables").get<std::vector<std::string>>();
  } else {
    for (const auto& c : def.at("claims"))
      for (auto& id : collect_identifiers(c.at("hyperbolic").get<std::string>()))
        if (std::find(vn.begin(), vn.end(), id) == vn.end()) vn.push_back(id);
  }
  const FiniteField coef = def.contains("coefficients")
                               ? FiniteField::from_spec(def.at("coefficients").get<std::string>())
                               : FiniteField::standard(1);
  const RingPtr ring = make_ring(vn, coef);
  for (const auto& c : def.at("claims")) {
    const auto id = c.at("id").get<std::string>();
    const auto text = c.at("hyperbolic").get<std::string>();
    QuadraticForm form;
    if (is_symbol_text(text)) {
      const SymbolSum sum = parse_symbol_sum(text, ring, c.value("fold", std::size_t{0}));
      if (is_formally_hyperbolic(sum))
        r.add(id + ".formal", text + " normalizes to 0", Provenance::Computed, true);
      else
        r.note(id + ": the calculus does not reduce " + text + " to 0");
      form = sum.expand();
    } else {
      form = parse_form(text, ring);
    }
    bool ok = false;
    Json e = evidence(form, cfg, c.value("cross_checks", std::size_t{0}), ok);
    r.add(id + ".specializations", text + " is hyperbolic at finite-field points", Provenance::Evidence, ok, e);
  }
  return r;
}

using Runner = std::function<Report(const ScenarioConfig&)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r{
      {"rels", scenario_rels},           {"multiadd", scenario_multiadd},
      {"main8", scenario_main8},         {"counter36", scenario_counter36},
      {"pairs", scenario_pairs},         {"ladder-fuzz", scenario_ladder_fuzz},
      {"updim", scenario_updim},         {"triple", scenario_triple},
      {"witt-kernel", scenario_witt_kernel}, {"cross-criteria", scenario_cross_criteria},
  };
  return r;
}

}  // namespace

std::vector<std::string> scenario_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  out.push_back("custom");
  return out;
}

Report run_scenario(const std::string& name, const ScenarioConfig& cfg) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(cfg);
  if (name == "custom") throw Error(ErrorCode::InvalidArgument, "custom scenarios are read from a definition file");
  throw Error(ErrorCode::UnknownScenario, "unknown scenario '" + name + "'");
}

Report run_scenario_file(const Json& def, ScenarioConfig cfg) {
  const auto name = def.at("scenario").get<std::string>();
  if (def.contains("field")) cfg.field = FiniteField::from_spec(def.at("field").get<std::string>());
  if (def.contains("seed")) cfg.seed = def.at("seed").get<std::uint64_t>();
  if (def.contains("trials")) cfg.trials = def.at("trials").get<std::size_t>();
  if (def.contains("degree_bound")) cfg.degree_bound = def.at("degree_bound").get<int>();
  if (def.contains("n")) cfg.n = def.at("n").get<int>();
  if (def.contains("s")) cfg.s = def.at("s").get<int>();
  if (def.contains("samples")) cfg.samples = def.at("samples").get<std::uint64_t>();
  if (def.contains("pairs")) cfg.pairs = def.at("pairs").get<std::size_t>();
  if (name == "custom") return scenario_custom(def, cfg);
  return run_scenario(name, cfg);
}

}  // namespace pfister
