#include "pfister/abstract_tight.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

#include "pfister/error.hpp"
#include "pfister/kernels.hpp"

namespace pfister::tight {

TightContext TightContext::make(int dim, const std::vector<std::uint32_t>& u_generators,
                                const std::vector<std::uint32_t>& p_list) {
  if (dim < 1 || dim > kMaxDim) throw Error(ErrorCode::InvalidContext, "dim_V must be in 1..12");
  const std::uint32_t size = 1u << dim;
  TightContext c;
  c.dim_ = dim;
  for (auto g : u_generators) {
    if (g >= size) throw Error(ErrorCode::InvalidContext, "U generator outside V");
    c.u_.insert(g);
  }
  c.in_p_.assign(size, 0);
  for (auto p : p_list) {
    if (p >= size) throw Error(ErrorCode::InvalidContext, "element of P outside V");
    c.in_p_[p] = 1;
  }
  if (!c.in_p_[0]) throw Error(ErrorCode::InvalidContext, "P must contain 0");
  if (f2_rank(p_list) != static_cast<std::size_t>(dim)) throw Error(ErrorCode::InvalidContext, "P does not span V");
  std::vector<std::int64_t> by_coset(size, -1);
  for (std::uint32_t v = 0; v < size; ++v) {
    if (!c.in_p_[v]) continue;
    const std::uint32_t k = c.u_.reduce(v);
    if (by_coset[k] >= 0)
      throw Error(ErrorCode::InvalidContext, "coset of U contains two elements of P: " + std::to_string(by_coset[k]) +
                                                 " and " + std::to_string(v));
    by_coset[k] = v;
  }
  c.rep_.resize(size);
  c.in_u_.resize(size);
  for (std::uint32_t v = 0; v < size; ++v) {
    const std::uint32_t k = c.u_.reduce(v);
    c.rep_[v] = by_coset[k];
    c.in_u_[v] = k == 0;
  }
  return c;
}

std::vector<std::uint32_t> TightContext::p_list() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < in_p_.size(); ++v)
    if (in_p_[v]) out.push_back(v);
  return out;
}

Json TightContext::to_json() const {
  Json j;
  j["dim_V"] = dim_;
  j["U_basis"] = u_.basis();
  j["P_list"] = p_list();
  return j;
}

TightContext TightContext::from_json(const Json& j) {
  return make(j.at("dim_V").get<int>(), j.at("U_basis").get<std::vector<std::uint32_t>>(),
              j.at("P_list").get<std::vector<std::uint32_t>>());
}

namespace {

void require_in_p(const TightContext& ctx, const std::vector<std::uint32_t>& s) {
  for (auto x : s)
    if (x >= (1u << ctx.dim()) || !ctx.in_p(x)) throw Error(ErrorCode::InvalidArgument, "S must be a subset of P");
}

// sums[mask] = sum of s_i over the bits of mask.
std::vector<std::uint32_t> subset_sums(const std::vector<std::uint32_t>& s) {
  std::vector<std::uint32_t> sums(std::size_t{1} << s.size(), 0);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t m = 0; m < (std::size_t{1} << i); ++m) sums[m | (std::size_t{1} << i)] = sums[m] ^ s[i];
  return sums;
}

// In place: f[M] = sum of f[T] over T subset of M.
void subset_transform(std::vector<std::uint32_t>& f, std::size_t k) {
  for (std::size_t b = 0; b < k; ++b)
    for (std::size_t m = 0; m < f.size(); ++m)
      if (m >> b & 1) f[m] ^= f[m ^ (std::size_t{1} << b)];
}

}  // namespace

bool is_tight(const TightContext& ctx, const std::vector<std::uint32_t>& s) {
  require_in_p(ctx, s);
  for (auto x : subset_sums(s))
    if (ctx.p_rep(x) < 0) return false;
  return true;
}

bool is_strongly_tight(const TightContext& ctx, const std::vector<std::uint32_t>& s) {
  require_in_p(ctx, s);
  for (auto x : subset_sums(s))
    if (!ctx.in_p(x)) return false;
  return true;
}

std::uint32_t sigma_abstract(const TightContext& ctx, const std::vector<std::uint32_t>& s) {
  if (!is_tight(ctx, s)) throw Error(ErrorCode::NotTight, "Sigma is defined for tight sets only");
  std::uint32_t sigma = 0;
  for (auto x : subset_sums(s)) sigma ^= static_cast<std::uint32_t>(ctx.p_rep(x));
  return sigma;
}

bool is_almost_strongly_tight(const TightContext& ctx, const std::vector<std::uint32_t>& s) {
  if (!is_tight(ctx, s)) return false;
  const auto sums = subset_sums(s);
  for (std::size_t m = 0; m + 1 < sums.size(); ++m)
    if (!ctx.in_p(sums[m])) return false;
  return true;
}

VerifyReport& VerifyReport::operator+=(const VerifyReport& o) {
  contexts += o.contexts;
  sets_checked += o.sets_checked;
  dependent_skipped += o.dependent_skipped;
  infeasible_skipped += o.infeasible_skipped;
  violations += o.violations;
  if (first_violation.is_null() && !o.first_violation.is_null()) first_violation = o.first_violation;
  return *this;
}

Json VerifyReport::to_json() const {
  Json j;
  j["contexts"] = contexts;
  j["sets_checked"] = sets_checked;
  j["dependent_sets"] = dependent_skipped;
  j["infeasible_configurations"] = infeasible_skipped;
  j["violations"] = violations;
  j["first_violation"] = first_violation;
  return j;
}

namespace {

// Depth-first walk over the tight subsets of P, extending the table of
// subset sums one element at a time.
struct Walker {
  const TightContext& ctx;
  std::vector<std::uint32_t> p;
  std::size_t max_size;
  bool prep_mode, ladder_mode;
  VerifyReport prep, ladder;
  std::vector<std::uint32_t> chosen;
  std::vector<std::uint32_t> sums{0};
  std::vector<std::uint32_t> basis;  // xor basis of chosen
  std::vector<std::uint32_t> reps;

  static void violation(VerifyReport& rep, const std::string& what, const std::vector<std::uint32_t>& s,
                        const TightContext& ctx) {
    ++rep.violations;
    if (rep.first_violation.is_null()) {
      Json j;
      j["what"] = what;
      j["S"] = s;
      j["context"] = ctx.to_json();
      rep.first_violation = j;
    }
  }

  void check() {
    const std::size_t k = chosen.size();
    const std::size_t full = sums.size() - 1;
    const bool dependent = basis.size() < k;
    reps.resize(sums.size());
    bool strongly = true, almost = true;
    for (std::size_t m = 0; m < sums.size(); ++m) {
      reps[m] = static_cast<std::uint32_t>(ctx.p_rep(sums[m]));
      const bool inp = ctx.in_p(sums[m]);
      strongly &= inp;
      if (m != full) almost &= inp;
    }
    subset_transform(reps, k);  // reps[M] = Sigma_{S_M}
    if (prep_mode) {
      ++prep.sets_checked;
      prep.dependent_skipped += dependent;
      if (almost && strongly != (reps[full] == 0))
        violation(prep, "almost strongly tight: strongly tight != (Sigma = 0)", chosen, ctx);
    }
    if (ladder_mode) {
      ++ladder.sets_checked;
      ladder.dependent_skipped += dependent;
      bool all_zero = true;
      for (std::size_t m = 0; m < sums.size(); ++m)
        if (std::popcount(m) > 1) all_zero &= reps[m] == 0;
      if (strongly != all_zero) violation(ladder, "tight: strongly tight != (all subset Sigmas vanish)", chosen, ctx);
      // |<S>| > 2 forces Sigma_S into U.
      if (basis.size() >= 2 && !ctx.in_u(reps[full])) violation(ladder, "Sigma_S outside U", chosen, ctx);
      if (strongly && reps[full] != 0) violation(ladder, "strongly tight with nonzero Sigma", chosen, ctx);
    }
  }

  void walk(std::size_t start) {
    if (chosen.size() >= 2) check();
    if (chosen.size() == max_size) return;
    for (std::size_t i = start; i < p.size(); ++i) {
      const std::size_t old = sums.size();
      bool tight = true;
      sums.resize(2 * old);
      for (std::size_t m = 0; m < old; ++m) {
        sums[old + m] = sums[m] ^ p[i];
        tight &= ctx.p_rep(sums[old + m]) >= 0;
      }
      // Tightness passes to subsets, so non-tight sets have no tight supersets.
      if (tight) {
        std::uint32_t r = p[i];
        for (auto b : basis) r = std::min(r, r ^ b);
        if (r) basis.push_back(r);
        chosen.push_back(p[i]);
        walk(i + 1);
        chosen.pop_back();
        if (r) basis.pop_back();
      }
      sums.resize(old);
    }
  }
};

Walker run(const TightContext& ctx, std::size_t max_size, bool prep, bool ladder) {
  if (max_size > 10) throw Error(ErrorCode::InvalidArgument, "max set size is 10");
  Walker w{ctx, ctx.p_list(), max_size, prep, ladder, {}, {}, {}, {0}, {}, {}};
  w.prep.contexts = w.ladder.contexts = 1;
  w.walk(0);
  return w;
}

}  // namespace

VerifyReport verify_prep(const TightContext& ctx, std::size_t max_size) { return run(ctx, max_size, true, false).prep; }
VerifyReport verify_ladder(const TightContext& ctx, std::size_t max_size) {
  return run(ctx, max_size, false, true).ladder;
}
std::pair<VerifyReport, VerifyReport> verify_both(const TightContext& ctx, std::size_t max_size) {
  Walker w = run(ctx, max_size, true, true);
  return {std::move(w.prep), std::move(w.ladder)};
}

std::vector<std::vector<std::uint32_t>> subspaces(int d, int max_dim, int max_codim) {
  // Reduced echelon bases are canonical, so distinct bases are distinct spaces.
  std::vector<std::vector<std::uint32_t>> out;
  const std::uint32_t size = 1u << d;
  std::vector<std::vector<std::uint32_t>> frontier{{}};
  for (int k = 0; k <= d; ++k) {
    if (k <= max_dim || d - k <= max_codim) out.insert(out.end(), frontier.begin(), frontier.end());
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& basis : frontier) {
      const F2Span span(basis);
      for (std::uint32_t v = 1; v < size; ++v) {
        if (span.contains(v)) continue;
        F2Span bigger = span;
        bigger.insert(v);
        next.push_back(bigger.basis());
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  return out;
}

bool sample_p(int d, const F2Span& u, std::uint64_t seed, std::vector<std::uint32_t>& p) {
  const std::uint32_t size = 1u << d;
  const auto u_elems = u.elements();
  std::vector<std::uint32_t> cosets;
  for (std::uint32_t v = 1; v < size; ++v)
    if (u.reduce(v) == v) cosets.push_back(v);
  const int regime = static_cast<int>(seed % 4);
  for (std::uint64_t attempt = 0; attempt < 32; ++attempt) {
    std::uint64_t state = kernels::splitmix64(seed * 0x9E3779B97F4A7C15ull + attempt);
    auto next = [&]() { return state = kernels::splitmix64(state); };
    p.assign(1, 0);
    for (auto c : cosets) {
      if (regime == 0 && (next() & 1)) continue;
      std::uint32_t shift = 0;
      // Regimes 2 and 3 stay close to the reduced representatives.
      if (regime <= 1 || (regime == 2 && (next() & 1)) || (regime == 3 && next() % 4 == 0))
        shift = u_elems[next() % u_elems.size()];
      p.push_back(c ^ shift);
    }
    if (f2_rank(p) == static_cast<std::size_t>(d)) return true;
  }
  return false;
}

Json FuzzReport::to_json() const {
  Json j;
  j["configurations"] = configurations;
  j["unsampled"] = unsampled;
  j["prep"] = prep.to_json();
  j["ladder"] = ladder.to_json();
  return j;
}

FuzzReport fuzz(const FuzzOptions& opts) {
  struct Job {
    int d;
    std::vector<std::uint32_t> u;
  };
  FuzzReport out;
  std::vector<Job> jobs;
  for (int d = 1; d <= opts.max_dim_v; ++d) {
    for (auto& u : subspaces(d, opts.max_dim_u, opts.max_codim_u)) {
      ++out.configurations;
      const int codim = d - static_cast<int>(u.size());
      // P \ {0} needs d independent elements in distinct nonzero cosets.
      if ((1 << codim) - 1 < d) {
        ++out.prep.infeasible_skipped;
        ++out.ladder.infeasible_skipped;
        continue;
      }
      jobs.push_back({d, std::move(u)});
    }
  }
  const std::uint64_t total = jobs.size() * opts.samples;
  std::vector<VerifyReport> prep(total), ladder(total);
  auto one = [&](std::uint64_t idx) {
    const Job& job = jobs[idx / opts.samples];
    const std::uint64_t seed = kernels::splitmix64(opts.seed ^ (idx * 0x2545F4914F6CDD1Dull));
    const F2Span u(job.u);
    std::vector<std::uint32_t> p;
    if (!sample_p(job.d, u, seed, p)) return;
    const TightContext ctx = TightContext::make(job.d, job.u, p);
    std::tie(prep[idx], ladder[idx]) = verify_both(ctx, opts.max_set_size);
    if (!prep[idx].first_violation.is_null()) prep[idx].first_violation["seed"] = seed;
    if (!ladder[idx].first_violation.is_null()) ladder[idx].first_violation["seed"] = seed;
  };
  if (opts.exec == Exec::Parallel) {
    const auto n = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) one(static_cast<std::uint64_t>(i));
  } else {
    for (std::uint64_t i = 0; i < total; ++i) one(i);
  }
  for (std::uint64_t i = 0; i < total; ++i) {
    out.unsampled += prep[i].contexts == 0;
    out.prep += prep[i];
    out.ladder += ladder[i];
  }
  return out;
}

}  // namespace pfister::tight
