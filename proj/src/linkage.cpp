#include "pfister/linkage.hpp"

#include <bit>

#include "pfister/error.hpp"

namespace pfister {

const char* to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

Json to_json(Tri t) { return to_string(t); }

const char* to_string(PfisterSet::Kind k) {
  switch (k) {
    case PfisterSet::Kind::General: return "general";
    case PfisterSet::Kind::RightLinked: return "right-linked";
    case PfisterSet::Kind::LeftLinked: return "left-linked";
  }
  return "general";
}

namespace {

std::vector<FieldElement> concat(std::vector<FieldElement> a, const std::vector<FieldElement>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

FieldElement subset_product(const std::vector<FieldElement>& xs, std::uint32_t mask, const RingPtr& ring) {
  FieldElement p = FieldElement::one(ring);
  for (std::size_t i = 0; i < xs.size(); ++i)
    if ((mask >> i) & 1u) p *= xs[i];
  return p;
}

Json evidence_or_refutation(const QuadraticForm& claim, const LinkageOptions& opts) {
  SpecializationOptions so = opts.spec;
  so.trials = opts.trials;
  try {
    Json j = specialization_witt_evidence(claim, so).to_json();
    j["status"] = "pass";
    return j;
  } catch (const RefutedError& e) {
    Json j;
    j["status"] = "refuted";
    j["trial"] = e.trial();
    j["point"] = e.point();
    j["field_degree"] = e.field_degree();
    return j;
  }
}

Json forms_json(const std::vector<PfisterForm>& forms) {
  Json a = Json::array();
  for (const auto& f : forms) a.push_back(f.to_string());
  return a;
}

Json elements_json(const std::vector<FieldElement>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.to_string());
  return a;
}

SymbolSum sum_of(const std::vector<PfisterForm>& forms, std::size_t fold) {
  SymbolSum s(fold);
  for (const auto& f : forms) s += QPfisterSymbol::from_pfister(f);
  return s;
}

}  // namespace

PfisterSet PfisterSet::right_linked(std::vector<FieldElement> betas, PfisterForm phi) {
  PfisterSet s;
  s.kind = Kind::RightLinked;
  s.n = phi.fold() + 1;
  for (const auto& b : betas) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroScalar, "beta must be nonzero");
    s.forms.push_back(PfisterForm{concat({b}, phi.slots), phi.quad});
  }
  s.betas = std::move(betas);
  s.phi = std::move(phi);
  return s;
}

PfisterSet PfisterSet::left_linked(std::vector<FieldElement> alphas, std::vector<FieldElement> b_slots, RingPtr ring) {
  PfisterSet s;
  s.kind = Kind::LeftLinked;
  s.n = b_slots.size() + 1;
  for (const auto& a : alphas) {
    require_same_ring(a.ring(), ring);
    s.forms.push_back(PfisterForm{b_slots, a});
  }
  s.alphas = std::move(alphas);
  s.b_slots = std::move(b_slots);
  return s;
}

PfisterSet PfisterSet::general(std::vector<PfisterForm> forms, std::optional<RepresentativeMap> reps) {
  if (forms.empty()) throw Error(ErrorCode::InvalidArgument, "empty set");
  PfisterSet s;
  s.kind = Kind::General;
  s.n = forms.front().fold();
  for (const auto& f : forms)
    if (f.fold() != s.n) throw Error(ErrorCode::DimensionMismatch, "forms of different folds");
  s.forms = std::move(forms);
  s.supplied = std::move(reps);
  return s;
}

RepresentativeMap PfisterSet::representatives() const {
  switch (kind) {
    case Kind::RightLinked: return right_linked_representatives(betas, *phi);
    case Kind::LeftLinked: return left_linked_representatives(alphas, b_slots);
    case Kind::General: break;
  }
  if (!supplied) throw Error(ErrorCode::MissingRepresentatives, "general set needs caller-supplied representatives");
  for (std::uint32_t mask = 1; mask < (1u << forms.size()); ++mask)
    if (!supplied->count(mask))
      throw Error(ErrorCode::MissingRepresentatives, "no representative for subset mask " + std::to_string(mask));
  return *supplied;
}

Json PfisterSet::to_json() const {
  Json j;
  j["kind"] = to_string(kind);
  j["n"] = n;
  j["forms"] = forms_json(forms);
  if (kind == Kind::RightLinked) {
    j["betas"] = elements_json(betas);
    j["phi"] = phi->to_string();
  } else if (kind == Kind::LeftLinked) {
    j["alphas"] = elements_json(alphas);
    j["b"] = elements_json(b_slots);
  }
  return j;
}

Json SigmaInvariant::to_json() const {
  Json j;
  j["terms"] = symbolic.terms().size();
  j["symbolic"] = symbolic.to_string();
  j["normal_form"] = normal_form.to_string();
  j["normal_form_zero"] = normal_form.empty();
  if (closed_form) {
    j["closed_form"] = closed_form->to_string();
    j["closed_form_fold"] = closed_form->fold();
    j["closed_form_formal"] = closed_form_formal;
  }
  j["evidence"] = evidence;
  return j;
}

SigmaInvariant sigma(const PfisterSet& set, const LinkageOptions& opts) {
  const RepresentativeMap reps = set.representatives();
  SymbolSum symbolic(set.n);
  for (const auto& [mask, rep] : reps) symbolic += QPfisterSymbol::from_pfister(rep);
  SigmaInvariant out{symbolic, normalize(symbolic), std::nullopt, false, Json::object()};
  if (set.kind == PfisterSet::Kind::RightLinked) {
    const RingPtr ring = set.phi->ring();
    PfisterForm closed{concat(set.betas, set.phi->slots), set.phi->quad};
    // sum over nonempty S of <<beta_S>> = <<beta_1, ..., beta_s>> in W(F).
    BilinearWittSum w(ring);
    for (std::uint32_t mask = 1; mask < (1u << set.betas.size()); ++mask)
      w.add_pfister({subset_product(set.betas, mask, ring)});
    w.add_pfister(set.betas);
    out.closed_form_formal = w.is_zero();
    if (opts.trials > 0)
      out.evidence["closed_form_difference"] = evidence_or_refutation(orth_sum(symbolic.expand(), expand(closed)), opts);
    out.closed_form = std::move(closed);
  }
  if (opts.trials > 0 && set.kind != PfisterSet::Kind::General && !out.normal_form.empty())
    out.evidence["finite_field_class"] = evidence_or_refutation(symbolic.expand(), opts);
  return out;
}

Json LinkDecision::to_json() const {
  Json j;
  j["linked"] = pfister::to_json(linked);
  j["route"] = route;
  j["detail"] = detail;
  return j;
}

LinkDecision pair_left_linkage_rightlinked(const FieldElement& beta, const FieldElement& gamma,
                                           const std::vector<FieldElement>& alphas, const LinkageOptions& opts) {
  if (alphas.empty()) throw Error(ErrorCode::InvalidArgument, "need at least the [1, alpha] slot");
  std::vector<FieldElement> slots{gamma, beta};
  slots.insert(slots.end(), alphas.begin(), alphas.end() - 1);
  const PfisterForm pi{slots, alphas.back()};
  LinkDecision d;
  d.detail["pi"] = pi.to_string();
  if (pfister_formally_hyperbolic(pi)) {
    d.linked = Tri::True;
    d.route = "pi formally hyperbolic";
    return d;
  }
  const MonomialValuation v(pi.ring());
  bool has_zero = pi.quad.is_zero();
  for (const auto& s : pi.slots) has_zero |= s.is_zero();
  if (!has_zero) {
    Decision m = monice_certificate(monice_betas(pi), v);
    if (m.is_certified()) {
      d.linked = Tri::False;
      d.route = "pi anisotropic (monice)";
      d.detail["certificate"] = m.to_json();
      return d;
    }
    Decision vc = value_class_certificate(expand(pi), v);
    if (vc.is_certified()) {
      d.linked = Tri::False;
      d.route = "pi anisotropic (value classes)";
      d.detail["certificate"] = vc.to_json();
      return d;
    }
  }
  if (opts.search_degree >= 0) {
    IsotropyOptions io = opts.search;
    io.degree_bound = opts.search_degree;
    Decision s = isotropy_search(expand(pi), io);
    d.detail["search"] = s.to_json();
    if (s.is_witness()) {
      d.linked = Tri::True;
      d.route = "pi isotropic (witness)";
      return d;
    }
  }
  d.route = "undecided";
  return d;
}

QuadraticForm pure_subform_of(const PfisterForm& p) {
  if (p.slots.empty()) throw Error(ErrorCode::NotPfisterShape, "pure subform needs a bilinear slot");
  const std::vector<FieldElement> rest(p.slots.begin() + 1, p.slots.end());
  return pure_subform(BilinearDiag::pfister(rest, p.ring()), p.slots.front(), p.quad);
}

LinkDecision faivre_pair_criterion(const PfisterForm& phi, const PfisterForm& psi, const FaivreOptions& opts) {
  if (phi.fold() != psi.fold()) throw Error(ErrorCode::DimensionMismatch, "forms of different folds");
  const std::size_t n = phi.fold();
  const std::size_t bound = (std::size_t{1} << (n - 1)) - 1;
  const QuadraticForm sum = orth_sum(pure_subform_of(phi), pure_subform_of(psi));
  const WittBound wb = witt_index_lower_bound(sum);
  LinkDecision d;
  d.detail["bound"] = bound;
  d.detail["witt_index_lower_bound"] = wb.hyperbolic_planes;
  d.detail["radical"] = wb.radical;
  if (wb.hyperbolic_planes >= bound) {
    d.linked = Tri::True;
    d.route = "witt index lower bound";
  } else {
    d.route = "lower bound below threshold";
  }
  if (opts.corroboration_trials > 0) {
    Json runs = Json::array();
    const std::size_t m = phi.ring()->num_vars();
    std::size_t done = 0;
    for (std::uint64_t t = 0; done < opts.corroboration_trials && t < 16 * opts.corroboration_trials; ++t) {
      try {
        const auto pt = sample_point(m, opts.spec.field, opts.spec.seed, t, 0);
        const FiniteBlockForm fb = specialize(sum, pt, opts.spec.field);
        const std::size_t iw = exhaustive_witt_index(fb.to_dense(), opts.spec.exec);
        runs.push_back({{"trial", t}, {"witt_index", iw}, {"meets_bound", iw >= bound}});
        ++done;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::PoleAtPoint) throw;
      }
    }
    d.detail["finite_field_runs"] = runs;
  }
  return d;
}

void LinkageReport::check_consistency() const {
  if (strongly_tight == Tri::True && tight == Tri::False)
    throw Error(ErrorCode::InvalidArgument, "strongly tight but not tight");
  if (strongly_tight == Tri::True && sigma_zero == Tri::False)
    throw Error(ErrorCode::InvalidArgument, "strongly tight but Sigma certified nonzero");
  if (left_linked == Tri::True && right_linked == Tri::False)
    throw Error(ErrorCode::InvalidArgument, "left-linked but not right-linked");
  for (const auto& p : pairwise) {
    if (!p.contains("twoforms") || !p.contains("faivre")) continue;
    const auto a = p["twoforms"]["linked"].get<std::string>();
    const auto b = p["faivre"]["linked"].get<std::string>();
    if ((a == "true" && b == "false") || (a == "false" && b == "true"))
      throw Error(ErrorCode::InvalidArgument, "pair criteria disagree");
  }
}

Json LinkageReport::to_json() const {
  Json j;
  j["set"] = name;
  j["n"] = n;
  j["s"] = s;
  j["tight"] = pfister::to_json(tight);
  j["strongly_tight"] = pfister::to_json(strongly_tight);
  j["left_linked"] = pfister::to_json(left_linked);
  j["right_linked"] = pfister::to_json(right_linked);
  j["sigma_zero"] = pfister::to_json(sigma_zero);
  Json subs = Json::array();
  for (const auto& x : subsets)
    subs.push_back({{"mask", x.mask}, {"zero", pfister::to_json(x.zero)}, {"route", x.route}, {"value", x.value}});
  j["subsets"] = subs;
  j["pairwise"] = pairwise;
  j["sigma"] = sigma ? sigma->to_json() : Json(nullptr);
  j["certificates"] = certificates;
  j["notes"] = notes;
  return j;
}

Tri subset_sums_are_single_symbols(const PfisterSet& set) {
  const RepresentativeMap reps = set.representatives();
  for (const auto& [mask, rep] : reps) {
    SymbolSum s(set.n);
    for (std::size_t i = 0; i < set.size(); ++i)
      if ((mask >> i) & 1u) s += QPfisterSymbol::from_pfister(set.forms[i]);
    s += QPfisterSymbol::from_pfister(rep);
    if (!is_formally_hyperbolic(s)) return Tri::Unknown;
  }
  return Tri::True;
}

LinkageReport strong_tightness_ladder(const PfisterSet& set, const LinkageOptions& opts) {
  LinkageReport r;
  r.n = set.n;
  r.s = set.size();
  const RepresentativeMap reps = set.representatives();
  const bool right = set.kind == PfisterSet::Kind::RightLinked;
  bool all_zero = true, some_nonzero = false;
  for (std::uint32_t mask = 1; mask < (1u << r.s); ++mask) {
    if (std::popcount(mask) < 2) continue;
    SubsetSigma ss;
    ss.mask = mask;
    if (right) {
      std::vector<FieldElement> sub;
      for (std::size_t i = 0; i < r.s; ++i)
        if ((mask >> i) & 1u) sub.push_back(set.betas[i]);
      const PfisterForm closed{concat(sub, set.phi->slots), set.phi->quad};
      ss.value = closed.to_string();
      if (pfister_formally_hyperbolic(closed)) {
        ss.zero = Tri::True;
        ss.route = "closed form hyperbolic";
      } else {
        const Decision m = monice_certificate(monice_betas(closed), MonomialValuation(closed.ring()));
        if (m.is_certified()) {
          ss.zero = Tri::False;
          ss.route = "closed form anisotropic (monice)";
          r.certificates.push_back({{"mask", mask}, {"decision", m.to_json()}});
        } else {
          ss.route = "undecided";
        }
      }
    } else {
      SymbolSum sub(set.n);
      for (std::uint32_t t = mask; t; t = (t - 1) & mask) sub += QPfisterSymbol::from_pfister(reps.at(t));
      const SymbolSum nf = normalize(sub);
      ss.value = nf.to_string();
      if (nf.empty()) {
        ss.zero = Tri::True;
        ss.route = "normal form";
      } else {
        ss.route = "undecided";
      }
    }
    all_zero &= ss.zero == Tri::True;
    some_nonzero |= ss.zero == Tri::False;
    r.subsets.push_back(ss);
  }
  r.strongly_tight = some_nonzero ? Tri::False : (all_zero ? Tri::True : Tri::Unknown);
  const Tri direct = subset_sums_are_single_symbols(set);
  r.certificates.push_back({{"direct_subset_sums_single_symbols", pfister::to_json(direct)}});
  if (direct == Tri::True) {
    if (r.strongly_tight == Tri::False) throw Error(ErrorCode::InvalidArgument, "ladder contradicts direct check");
    r.strongly_tight = Tri::True;
  }

  if (set.kind != PfisterSet::Kind::General) {
    r.tight = Tri::True;
    r.notes.push_back(std::string("tight by construction (") + to_string(set.kind) + " representatives)");
  }
  if (r.strongly_tight == Tri::True) r.tight = Tri::True;

  r.sigma = sigma(set, opts);
  if (r.sigma->normal_form.empty() || (r.sigma->closed_form && pfister_formally_hyperbolic(*r.sigma->closed_form))) {
    r.sigma_zero = Tri::True;
  } else if (r.sigma->closed_form && r.s >= 1) {
    const Decision m =
        monice_certificate(monice_betas(*r.sigma->closed_form), MonomialValuation(r.sigma->closed_form->ring()));
    if (m.is_certified()) r.sigma_zero = Tri::False;
  }

  if (right) {
    const auto alphas = concat(set.phi->slots, {set.phi->quad});
    for (std::size_t i = 0; i < r.s; ++i)
      for (std::size_t j = i + 1; j < r.s; ++j) {
        Json p;
        p["pair"] = {i, j};
        p["twoforms"] = pair_left_linkage_rightlinked(set.betas[i], set.betas[j], alphas, opts).to_json();
        p["faivre"] = faivre_pair_criterion(set.forms[i], set.forms[j]).to_json();
        r.pairwise.push_back(p);
      }
    r.right_linked = Tri::True;
  } else if (set.kind == PfisterSet::Kind::LeftLinked) {
    r.left_linked = Tri::True;
    r.right_linked = Tri::True;
  }
  if (right && r.s == 2) {
    const auto v = r.pairwise.front()["twoforms"]["linked"].get<std::string>();
    r.left_linked = v == "true" ? Tri::True : (v == "false" ? Tri::False : Tri::Unknown);
  }
  if (r.s >= 3 && set.kind != PfisterSet::Kind::LeftLinked)
    r.notes.push_back(
        "left-linkage of the whole set is not decided: a right-linked, pairwise left-linked set is not known to be "
        "left-linked");
  r.check_consistency();
  return r;
}

std::string QuaternionAlgebra::to_string() const { return "[" + alpha.to_string() + ", " + beta.to_string() + ")"; }

PfisterForm norm_pfister(const QuaternionAlgebra& q) {
  if (q.beta.is_zero()) throw Error(ErrorCode::ZeroScalar, "quaternion algebra needs beta != 0");
  return PfisterForm{{q.beta}, q.alpha};
}

QPfisterSymbol norm_form(const QuaternionAlgebra& q) { return QPfisterSymbol::from_pfister(norm_pfister(q)); }

QuadraticForm albert_form(const QuaternionAlgebra& q1, const QuaternionAlgebra& q2) {
  const RingPtr ring = q1.alpha.ring();
  const FieldElement one = FieldElement::one(ring);
  QuadraticForm f = orth_sum(QuadraticForm::scaled_binary(q1.beta, one, q1.alpha),
                             QuadraticForm::scaled_binary(q2.beta, one, q2.alpha));
  return orth_sum(f, QuadraticForm::binary(one, q1.alpha + q2.alpha));
}

QuadraticForm albert_prime_form(const QuaternionAlgebra& q1, const QuaternionAlgebra& q2) {
  const RingPtr ring = q1.alpha.ring();
  const FieldElement one = FieldElement::one(ring);
  QuadraticForm f = orth_sum(QuadraticForm::scaled_binary(q1.beta, one, q1.alpha),
                             QuadraticForm::scaled_binary(q2.beta, one, q2.alpha));
  return orth_sum(f, QuadraticForm::unary(one));
}

namespace {

Decision isotropy_decision(const QuadraticForm& f, const IsotropyOptions& search, bool run_search) {
  const Decision vc = value_class_certificate(f, MonomialValuation(f.ring()));
  if (vc.is_certified()) return vc;
  if (!run_search) return Decision::unknown("certificate does not apply; search disabled", vc.hypotheses());
  return isotropy_search(f, search);
}

}  // namespace

Decision insep_pair_test(const QuaternionAlgebra& q1, const QuaternionAlgebra& q2, const IsotropyOptions& search,
                         bool run_search) {
  return isotropy_decision(albert_prime_form(q1, q2), search, run_search);
}

Decision sep_pair_test(const QuaternionAlgebra& q1, const QuaternionAlgebra& q2, const IsotropyOptions& search,
                       bool run_search) {
  return isotropy_decision(albert_form(q1, q2), search, run_search);
}

Json TripleSigma::to_json() const {
  Json j = sigma.to_json();
  if (reduced) {
    j["reduced"] = reduced->to_string();
    j["reduced_terms"] = reduced->terms().size();
  }
  return j;
}

TripleSigma triple_sigma(const PfisterForm& phi1, const PfisterForm& phi2, const PfisterForm& phi3,
                         const TripleRepresentatives& reps, const LinkageOptions& opts) {
  if (!reps.q12 || !reps.q13 || !reps.q23 || !reps.q123)
    throw Error(ErrorCode::MissingRepresentatives, "triple sigma needs all product representatives");
  const std::size_t n = phi1.fold();
  const SymbolSum symbolic = sum_of({phi1, phi2, phi3, *reps.q12, *reps.q13, *reps.q23, *reps.q123}, n);
  TripleSigma out{SigmaInvariant{symbolic, normalize(symbolic), std::nullopt, false, Json::object()}, std::nullopt};
  if (opts.trials > 0) out.sigma.evidence["finite_field_class"] = evidence_or_refutation(symbolic.expand(), opts);
  const bool ll12 = is_formally_hyperbolic(sum_of({phi1, phi2, *reps.q12}, n));
  const bool ll13 = is_formally_hyperbolic(sum_of({phi1, phi3, *reps.q13}, n));
  out.sigma.evidence["phi1_phi2_additive"] = ll12;
  out.sigma.evidence["phi1_phi3_additive"] = ll13;
  if (ll12 && ll13) {
    SymbolSum reduced = sum_of({phi1, *reps.q23, *reps.q123}, n);
    if (!is_formally_hyperbolic(symbolic + reduced))
      throw Error(ErrorCode::InvalidArgument, "reduction does not match the full sum");
    out.reduced = std::move(reduced);
  }
  return out;
}

Json DimBoundReport::to_json() const {
  Json j;
  j["s"] = s;
  j["summands"] = summands;
  j["dimension"] = dimension;
  j["bound"] = bound;
  j["ok"] = ok();
  j["cancellation_formal"] = cancellation_formal;
  j["representative"] = representative.to_string();
  j["evidence"] = evidence;
  return j;
}

DimBoundReport dim_bound_check(const RepresentativeMap& reps, std::size_t s,
                               std::optional<std::pair<std::uint32_t, std::uint32_t>> left_linked_pair,
                               const LinkageOptions& opts) {
  if (s == 0 || s > 10) throw Error(ErrorCode::InvalidArgument, "s out of range");
  std::vector<PfisterForm> all;
  for (std::uint32_t mask = 1; mask < (1u << s); ++mask) {
    auto it = reps.find(mask);
    if (it == reps.end()) throw Error(ErrorCode::MissingRepresentatives, "missing subset representative");
    if (it->second.fold() != 2) throw Error(ErrorCode::NotPfisterShape, "dimension bound needs 2-fold summands");
    all.push_back(it->second);
  }
  DimBoundReport r;
  r.s = s;
  r.bound = std::size_t{1} << (s + 1);
  std::vector<bool> keep(all.size(), true);
  if (left_linked_pair) {
    const auto [m1, m2] = *left_linked_pair;
    const std::uint32_t m3 = m1 ^ m2;
    if (m1 == 0 || m2 == 0 || m1 == m2 || m1 >= (1u << s) || m2 >= (1u << s))
      throw Error(ErrorCode::InvalidArgument, "pair must be two distinct nonempty subsets");
    const SymbolSum triple = sum_of({all[m1 - 1], all[m2 - 1], all[m3 - 1]}, 2);
    r.cancellation_formal = is_formally_hyperbolic(triple);
    if (!r.cancellation_formal && opts.trials > 0)
      r.evidence["cancellation"] = evidence_or_refutation(triple.expand(), opts);
    keep[m1 - 1] = keep[m2 - 1] = keep[m3 - 1] = false;
    r.bound -= 6;
  }
  const RingPtr ring = all.front().ring();
  const FieldElement one = FieldElement::one(ring);
  QuadraticForm rep;
  FieldElement merged = FieldElement::zero(ring);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!keep[i]) continue;
    ++r.summands;
    // <<b>> (x) [1, a] = [1, a] _|_ b[1, a]; the [1, a] halves merge.
    rep = orth_sum(rep, QuadraticForm::scaled_binary(all[i].slots.front(), one, all[i].quad));
    merged += all[i].quad;
  }
  rep = orth_sum(rep, QuadraticForm::binary(one, merged));
  r.dimension = rep.dimension();
  if (opts.trials > 0) r.evidence["witt_equivalence"] = evidence_or_refutation(orth_sum(sum_of(all, 2).expand(), rep), opts);
  r.representative = std::move(rep);
  return r;
}

Json AnnihilatorReport::to_json() const {
  Json j;
  Json ps = Json::array();
  for (const auto& p : pairs) ps.push_back(p.to_json());
  j["pairs"] = ps;
  j["formal"] = formal;
  j["evidence"] = evidence ? evidence->to_json() : Json(nullptr);
  j["holds"] = holds();
  return j;
}

AnnihilatorReport annihilator_identity_check(const std::vector<FieldElement>& alphas, const PfisterForm& psi,
                                             const LinkageOptions& opts) {
  if (alphas.empty()) throw Error(ErrorCode::InvalidArgument, "no alphas");
  AnnihilatorReport r;
  const auto psi_entries = concat(psi.slots, {psi.quad});
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (std::size_t j = i + 1; j < alphas.size(); ++j) {
      LinkDecision d = pair_left_linkage_rightlinked(alphas[i], alphas[j], psi_entries, opts);
      if (d.linked != Tri::True)
        throw Error(ErrorCode::HypothesesUnverified,
                    "pair " + std::to_string(i) + "," + std::to_string(j) + " not certified left-linked");
      r.pairs.push_back(std::move(d));
    }
  const std::size_t n = psi.fold() + 1;
  SymbolSum sum(n);
  for (const auto& a : alphas) sum += QPfisterSymbol::from_pfister(PfisterForm{concat({a}, psi.slots), psi.quad});
  const FieldElement prod = product(alphas, psi.ring());
  sum += QPfisterSymbol::from_pfister(PfisterForm{concat({prod}, psi.slots), psi.quad});
  r.formal = is_formally_hyperbolic(sum);
  if (!r.formal) {
    SpecializationOptions so = opts.spec;
    so.trials = opts.trials;
    r.evidence = specialization_witt_evidence(sum, so);
  }
  return r;
}

bool verify_isometry(const QuadraticForm& phi, const QuadraticForm& psi,
                     const std::vector<std::vector<FieldElement>>& columns) {
  const std::size_t n = psi.dimension(), m = phi.dimension();
  if (columns.size() != n) throw Error(ErrorCode::DimensionMismatch, "need one column per coordinate of psi");
  const RingPtr ring = psi.ring();
  auto unit = [&](std::size_t i) {
    std::vector<FieldElement> e(n, FieldElement::zero(ring));
    e[i] = FieldElement::one(ring);
    return e;
  };
  auto add = [](std::vector<FieldElement> a, const std::vector<FieldElement>& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
  };
  for (const auto& c : columns)
    if (c.size() != m) throw Error(ErrorCode::DimensionMismatch, "column length differs from dim phi");
  std::vector<FieldElement> q_psi, q_phi;
  for (std::size_t i = 0; i < n; ++i) {
    q_psi.push_back(evaluate(psi, unit(i)));
    q_phi.push_back(evaluate(phi, columns[i]));
    if (q_psi[i] != q_phi[i]) return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const FieldElement b_psi = evaluate(psi, add(unit(i), unit(j))) + q_psi[i] + q_psi[j];
      const FieldElement b_phi = evaluate(phi, add(columns[i], columns[j])) + q_phi[i] + q_phi[j];
      if (b_psi != b_phi) return false;
    }
  return true;
}

}  // namespace pfister
