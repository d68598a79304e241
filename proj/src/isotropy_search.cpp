#include <algorithm>

#include "pfister/error.hpp"
#include "pfister/kernels.hpp"
#include "pfister/oracle.hpp"

namespace pfister {

namespace {

// Exponent vectors of total degree <= d, constant first.
std::vector<Exponents> monomials_up_to(std::size_t m, int d) {
  std::vector<Exponents> out;
  Exponents e{};
  auto rec = [&](auto&& self, std::size_t var, int left) -> void {
    if (var == m) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[var] = static_cast<std::uint16_t>(k);
      self(self, var + 1, left - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, d);
  std::stable_sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
    int da = 0, db = 0;
    for (auto x : a) da += x;
    for (auto x : b) db += x;
    return da < db;
  });
  return out;
}

}  // namespace

Decision isotropy_search(const QuadraticForm& phi, const IsotropyOptions& opts) {
  if (phi.empty()) return Decision::unknown("zero-dimensional form");
  const RingPtr ring = phi.ring();
  const std::size_t m = ring->num_vars();
  const std::size_t dim = phi.dimension();
  if (dim > kernels::kMaxDenseDim) throw Error(ErrorCode::InvalidArgument, "form too large for isotropy search");
  const FiniteField target = ring->field.degree() > 1 ? ring->field : FiniteField::standard(16);

  // Sample points avoiding poles, with the dense specialized form at each.
  std::vector<std::vector<FiniteField::Element>> points;
  std::vector<FiniteForm> dense;
  for (std::uint64_t attempt = 0; points.size() < opts.sample_points; ++attempt) {
    if (attempt > 64 * opts.sample_points) throw Error(ErrorCode::PoleAtPoint, "could not find pole-free sample points");
    auto pt = sample_point(m, target, opts.seed ^ 0x150ull, points.size(), attempt);
    try {
      dense.push_back(specialize(phi, pt, target).to_dense());
      points.push_back(std::move(pt));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PoleAtPoint) throw;
    }
  }

  Json searched = Json::array();
  for (int d = 0; d <= opts.degree_bound; ++d) {
    const auto monos = monomials_up_to(m, d);
    const std::size_t n_mon = monos.size();
    if (n_mon > 64) break;
    kernels::IsoScan scan;
    scan.field = target;
    scan.dim = dim;
    scan.num_monomials = n_mon;
    scan.num_points = points.size();
    scan.seed = kernels::splitmix64(opts.seed + static_cast<std::uint64_t>(d));
    for (const auto& pt : points) {
      for (const auto& e : monos) {
        FiniteField::Element v = 1;
        for (std::size_t i = 0; i < m; ++i) v = target.mul(v, target.pow(pt[i], e[i]));
        scan.monomial_values.push_back(v);
      }
    }
    for (const auto& f : dense)
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) scan.coef.push_back(j >= i ? f.coef(i, j) : 0);
    const std::size_t bits = n_mon * dim;
    scan.exhaustive = bits <= static_cast<std::size_t>(opts.exhaustive_bits);
    const std::uint64_t end = scan.exhaustive ? (std::uint64_t{1} << bits) : opts.random_samples;

    std::uint64_t begin = 0, false_positives = 0;
    while (begin < end) {
      const auto hit = opts.exec == Exec::Parallel ? kernels::scan_parallel(scan, begin, end)
                                                   : kernels::scan_serial(scan, begin, end);
      if (!hit) break;
      std::vector<std::uint64_t> masks(dim);
      scan.masks(*hit, masks.data());
      std::vector<FieldElement> w;
      for (std::size_t j = 0; j < dim; ++j) {
        std::vector<Poly::Term> terms;
        for (std::size_t t = 0; t < n_mon; ++t)
          if (masks[j] >> t & 1) terms.push_back({monos[t], 1});
        w.emplace_back(Poly::from_terms(ring, std::move(terms)));
      }
      if (evaluate(phi, w).is_zero()) {
        Json ev;
        ev["degree"] = d;
        ev["mode"] = scan.exhaustive ? "exhaustive" : "random";
        ev["index"] = *hit;
        ev["false_positives"] = false_positives;
        ev["seed"] = opts.seed;
        return Decision::witness(phi, std::move(w), ev);
      }
      ++false_positives;
      begin = *hit + 1;
    }
    Json s;
    s["degree"] = d;
    s["mode"] = scan.exhaustive ? "exhaustive" : "random";
    s["candidates"] = end;
    s["false_positives"] = false_positives;
    searched.push_back(s);
  }
  Json ev;
  ev["searched"] = searched;
  ev["seed"] = opts.seed;
  return Decision::unknown("no witness within the search bounds", ev);
}

}  // namespace pfister
