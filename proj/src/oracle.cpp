#include "pfister/oracle.hpp"

#include <algorithm>

#include "pfister/error.hpp"
#include "pfister/kernels.hpp"

namespace pfister {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedAnisotropic: return "CertifiedAnisotropic";
    case Verdict::IsotropicWitness: return "IsotropicWitness";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

Decision Decision::certified(std::string lemma, Json hypotheses, std::size_t matrix_rank) {
  Decision d;
  d.verdict_ = Verdict::CertifiedAnisotropic;
  d.lemma_ = std::move(lemma);
  d.hypotheses_ = std::move(hypotheses);
  d.matrix_rank_ = matrix_rank;
  return d;
}

Decision Decision::witness(const QuadraticForm& phi, std::vector<FieldElement> w, Json evidence) {
  const bool nonzero = std::any_of(w.begin(), w.end(), [](const FieldElement& x) { return !x.is_zero(); });
  if (!nonzero) throw Error(ErrorCode::InvalidArgument, "isotropy witness must be nonzero");
  if (!evaluate(phi, w).is_zero()) throw Error(ErrorCode::InvalidArgument, "claimed witness is not isotropic");
  Decision d;
  d.verdict_ = Verdict::IsotropicWitness;
  d.lemma_ = "witness";
  d.witness_ = std::move(w);
  if (evidence.contains("seed")) d.seed_ = evidence["seed"].get<std::uint64_t>();
  if (evidence.contains("trials")) d.trials_ = evidence["trials"].get<std::uint64_t>();
  d.hypotheses_ = std::move(evidence);
  return d;
}

Decision Decision::unknown(std::string reason, Json evidence) {
  Decision d;
  d.verdict_ = Verdict::Unknown;
  d.lemma_ = "none";
  evidence["reason"] = std::move(reason);
  if (evidence.contains("seed")) d.seed_ = evidence["seed"].get<std::uint64_t>();
  if (evidence.contains("trials")) d.trials_ = evidence["trials"].get<std::uint64_t>();
  d.hypotheses_ = std::move(evidence);
  return d;
}

Json Decision::to_json() const {
  Json j;
  j["verdict"] = to_string(verdict_);
  j["lemma"] = lemma_;
  j["hypotheses"] = hypotheses_;
  j["matrix_rank"] = matrix_rank_;
  j["trials"] = trials_;
  j["seed"] = seed_ ? Json(*seed_) : Json(nullptr);
  if (verdict_ == Verdict::IsotropicWitness) {
    Json w = Json::array();
    for (const auto& x : witness_) w.push_back(x.to_string());
    j["witness"] = w;
  }
  return j;
}

std::vector<FieldElement> monice_betas(const PfisterForm& p) {
  std::vector<FieldElement> betas{p.quad};
  betas.insert(betas.end(), p.slots.begin(), p.slots.end());
  return betas;
}

std::vector<FieldElement> monice_betas(const QPfisterSymbol& s) { return monice_betas(s.to_pfister()); }

namespace {

struct MoniceCheck {
  bool negative = false;
  std::size_t rank = 0;
  std::vector<std::uint32_t> classes;
  Json hypotheses;
};

MoniceCheck check_monice(const std::vector<FieldElement>& betas, const MonomialValuation& v) {
  MoniceCheck c;
  Json bs = Json::array(), nus = Json::array(), mods = Json::array();
  for (const auto& b : betas) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroScalar, "monice hypotheses need nonzero betas");
    const GammaValue g = v.value(b);
    c.classes.push_back(v.class_of(g).bits);
    bs.push_back(b.to_string());
    nus.push_back(g.comps);
    mods.push_back(v.class_of(g).to_string(v.rank()));
  }
  c.negative = !betas.empty() && v.value(betas.front()).is_negative();
  c.rank = f2_rank(c.classes);
  c.hypotheses["betas"] = bs;
  c.hypotheses["nu"] = nus;
  c.hypotheses["nu_mod2"] = mods;
  c.hypotheses["nu_beta1_negative"] = c.negative;
  c.hypotheses["independent_mod2"] = c.rank == betas.size();
  return c;
}

}  // namespace

Decision monice_certificate(const std::vector<FieldElement>& betas, const MonomialValuation& v) {
  if (betas.empty()) return Decision::unknown("empty slot list");
  MoniceCheck c = check_monice(betas, v);
  if (c.negative && c.rank == betas.size()) return Decision::certified("monice", c.hypotheses, c.rank);
  Json ev = c.hypotheses;
  ev["matrix_rank"] = c.rank;
  return Decision::unknown(c.negative ? "valuation classes dependent mod 2" : "nu(beta_1) is not negative", ev);
}

F2Span value_set_mod2(const std::vector<FieldElement>& betas, const MonomialValuation& v) {
  if (betas.empty()) return F2Span();
  MoniceCheck c = check_monice(betas, v);
  if (!(c.negative && c.rank == betas.size()))
    throw Error(ErrorCode::HypothesesUnverified, "monice hypotheses fail; value set not computed");
  return F2Span(c.classes);
}

Json ObstructionReport::to_json(std::size_t rank) const {
  Json j;
  j["established"] = established;
  Json sets = Json::array();
  for (const auto& s : value_sets) {
    Json b = Json::array();
    for (auto x : s.basis()) b.push_back(GammaClass{x}.to_string(rank));
    sets.push_back(b);
  }
  j["value_sets"] = sets;
  Json inter = Json::array();
  for (auto x : intersection.basis()) inter.push_back(GammaClass{x}.to_string(rank));
  j["intersection_basis"] = inter;
  j["intersection_rank"] = intersection.rank();
  Json certs = Json::array();
  for (const auto& c : certificates) certs.push_back(c.to_json());
  j["certificates"] = certs;
  return j;
}

ObstructionReport common_subform_obstruction(const std::vector<QPfisterSymbol>& psis, const MonomialValuation& v) {
  ObstructionReport r;
  for (const auto& psi : psis) {
    const auto betas = monice_betas(psi);
    Decision d = monice_certificate(betas, v);
    if (!d.is_certified())
      throw Error(ErrorCode::HypothesesUnverified, "form " + psi.to_string() + " fails the monice hypotheses");
    r.certificates.push_back(d);
    r.value_sets.push_back(value_set_mod2(betas, v));
  }
  if (r.value_sets.empty()) return r;
  r.intersection = r.value_sets.front();
  for (std::size_t i = 1; i < r.value_sets.size(); ++i) r.intersection = r.intersection.intersect(r.value_sets[i]);
  // A common binary subform U would give nonzero classes in every value set
  // (every restriction to a 2-dimensional subspace takes a value outside 2 Gamma).
  r.established = r.intersection.rank() == 0;
  return r;
}

Decision monice2_certificate(const FieldElement& alpha, const FieldElement& beta, const FieldElement& gamma,
                             const MonomialValuation& v) {
  if (alpha.is_zero() || beta.is_zero() || gamma.is_zero())
    return Decision::unknown("monice2 needs nonzero alpha, beta, gamma");
  const GammaValue nb = v.value(beta), ng = v.value(gamma), na = v.value(alpha);
  const bool equal = nb == ng;
  const bool negative = nb.is_negative();
  const std::size_t rank = f2_rank({v.class_of(na).bits, v.class_of(nb).bits});
  Json h;
  h["alpha"] = alpha.to_string();
  h["beta"] = beta.to_string();
  h["gamma"] = gamma.to_string();
  h["nu_alpha"] = na.comps;
  h["nu_beta"] = nb.comps;
  h["nu_gamma"] = ng.comps;
  h["nu_beta_eq_nu_gamma"] = equal;
  h["nu_beta_negative"] = negative;
  h["independent_mod2"] = rank == 2;
  if (equal && negative && rank == 2) return Decision::certified("monice2", h, rank);
  h["matrix_rank"] = rank;
  return Decision::unknown("monice2 hypotheses fail", h);
}

Decision value_class_certificate(const QuadraticForm& phi, const MonomialValuation& v) {
  if (phi.empty()) return Decision::unknown("zero form");
  std::vector<std::vector<std::uint32_t>> sets;
  Json pieces = Json::array();
  for (const auto& blk : phi.blocks()) {
    Json p;
    if (const auto* u = std::get_if<UnaryBlock>(&blk)) {
      if (u->a.is_zero()) return Decision::unknown("zero unary block");
      const auto c = v.value_mod2(u->a).bits;
      sets.push_back({c});
      p["block"] = "<" + u->a.to_string() + ">";
      p["classes"] = {GammaClass{c}.to_string(v.rank())};
    } else {
      const auto& b = std::get<BinaryBlock>(blk);
      if (b.a.is_zero() || b.b.is_zero()) return Decision::unknown("binary block is hyperbolic");
      // s[a, b] = (s a)[1, a b]
      const FieldElement c = b.scale * b.a;
      const FieldElement d = b.a * b.b;
      const GammaValue nd = v.value(d);
      const auto cd = v.class_of(nd).bits;
      p["block"] = "<" + c.to_string() + ">*[1," + d.to_string() + "]";
      p["nu_d"] = nd.comps;
      if (!nd.is_negative() || cd == 0) {
        p["ok"] = false;
        pieces.push_back(p);
        Json ev;
        ev["pieces"] = pieces;
        return Decision::unknown("block fails nu(d) < 0 with nu(d) odd", ev);
      }
      const auto cc = v.value_mod2(c).bits;
      sets.push_back({cc, cc ^ cd});
      p["classes"] = {GammaClass{cc}.to_string(v.rank()), GammaClass{cc ^ cd}.to_string(v.rank())};
    }
    p["ok"] = true;
    pieces.push_back(p);
  }
  std::vector<std::uint32_t> all;
  for (const auto& s : sets) all.insert(all.end(), s.begin(), s.end());
  std::vector<std::uint32_t> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  const bool disjoint = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  Json h;
  h["pieces"] = pieces;
  h["classes_disjoint"] = disjoint;
  if (disjoint) return Decision::certified("valuation-classes", h, all.size());
  return Decision::unknown("value classes of blocks overlap", h);
}

std::vector<FiniteField::Element> sample_point(std::size_t num_vars, const FiniteField& f, std::uint64_t seed,
                                               std::uint64_t trial, std::uint64_t attempt) {
  std::vector<FiniteField::Element> pt(num_vars);
  const std::uint64_t mask = f.order() - 1;
  for (std::size_t i = 0; i < num_vars; ++i) {
    const std::uint64_t h =
        kernels::splitmix64(seed ^ kernels::splitmix64(trial * 0x100000001B3ull + attempt * 0x9E37ull + i));
    pt[i] = static_cast<FiniteField::Element>(h & mask);
  }
  return pt;
}

Json EvidenceReport::to_json() const {
  Json j;
  j["trials"] = trials;
  j["passes"] = passes;
  j["rejected"] = rejected;
  j["cross_checked"] = cross_checked;
  j["seed"] = seed;
  j["field"] = field;
  return j;
}

EvidenceReport specialization_witt_evidence(const QuadraticForm& claim, const SpecializationOptions& opts) {
  EvidenceReport rep;
  rep.trials = opts.trials;
  rep.seed = opts.seed;
  rep.field = opts.field.name();
  if (claim.empty()) {
    rep.passes = opts.trials;
    return rep;
  }
  const std::size_t m = claim.ring()->num_vars();
  enum : std::int8_t { kPass = 0, kRejected = 1, kFail = 2 };
  std::vector<std::int8_t> status(opts.trials, kRejected);
  std::vector<std::uint64_t> used_attempt(opts.trials, 0);
  auto run_trial = [&](std::size_t t) {
    for (std::size_t a = 0; a < opts.max_attempts; ++a) {
      const auto pt = sample_point(m, opts.field, opts.seed, t, a);
      try {
        const FiniteBlockForm fb = specialize(claim, pt, opts.field);
        const WittClassFinite w = witt_decompose_finite(fb);
        status[t] = (2 * w.witt_index == w.dimension) ? kPass : kFail;
        used_attempt[t] = a;
        return;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::PoleAtPoint) {
          status[t] = kFail;
          used_attempt[t] = a;
          return;
        }
      }
    }
  };
  if (opts.exec == Exec::Parallel) {
    const auto n = static_cast<std::int64_t>(opts.trials);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t t = 0; t < n; ++t) run_trial(static_cast<std::size_t>(t));
  } else {
    for (std::size_t t = 0; t < opts.trials; ++t) run_trial(t);
  }
  for (std::size_t t = 0; t < opts.trials; ++t) {
    if (status[t] == kFail) {
      const auto pt = sample_point(m, opts.field, opts.seed, t, used_attempt[t]);
      throw RefutedError("claimed Witt-trivial form " + claim.to_string() + " is not hyperbolic at trial " +
                             std::to_string(t),
                         pt, opts.field.degree(), t);
    }
    if (status[t] == kPass) {
      ++rep.passes;
      if (rep.cross_checked < opts.exhaustive_cross_checks) {
        const auto pt = sample_point(m, opts.field, opts.seed, t, used_attempt[t]);
        const FiniteBlockForm fb = specialize(claim, pt, opts.field);
        if (2 * exhaustive_witt_index(fb.to_dense(), opts.exec) != fb.dimension())
          throw Error(ErrorCode::InvalidArgument, "Arf classification disagrees with exhaustive Witt index");
        ++rep.cross_checked;
      }
    } else {
      ++rep.rejected;
    }
  }
  return rep;
}

EvidenceReport specialization_witt_evidence(const SymbolSum& claim, const SpecializationOptions& opts) {
  return specialization_witt_evidence(claim.expand(), opts);
}

}  // namespace pfister
