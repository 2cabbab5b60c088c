#include "ncx/polyfactor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <unordered_set>

#include "ncx/spectral.hpp"

namespace ncx {

namespace {

using C = std::complex<double>;

void require_poly(const NPolynomial& poly) {
  if (poly.degree() < 1) {
    throw DomainError("polynomial degree must be at least 1");
  }
  for (const auto& a : poly.coefficients) {
    if (a.variant() != poly.variant || a.dim() != poly.n) {
      throw DimensionMismatch(
          "polynomial coefficients must share dimension and variant");
    }
  }
}

// p(z) for the monic polynomial with trailing coefficients c (a_1..a_m).
C eval_monic(const std::vector<C>& c, C z) {
  C acc(1.0, 0.0);
  for (const C& a : c) acc = acc * z + a;
  return acc;
}

C eval_monic_derivative(const std::vector<C>& c, C z) {
  const int m = static_cast<int>(c.size());
  C acc(static_cast<double>(m), 0.0);
  for (int j = 1; j < m; ++j)
    acc = acc * z + static_cast<double>(m - j) * c[static_cast<std::size_t>(j - 1)];
  return acc;
}

// Residual scale sum_j |c_j| max(1,|z|)^(m-j); accepting |p(z)| below
// factor_tol times this is the double-precision rooting limit.
double residual_scale(const std::vector<C>& c, C z) {
  const double az = std::max(1.0, std::abs(z));
  double scale = 1.0;
  for (const C& a : c) scale = scale * az + std::abs(a);
  return std::max(scale, 1.0);
}

std::vector<C> durand_kerner(const std::vector<C>& c,
                             const Tolerances& tol) {
  const int m = static_cast<int>(c.size());
  std::vector<C> z(static_cast<std::size_t>(m));
  double big = 0.0;
  for (const C& a : c) big = std::max(big, std::abs(a));
  const double radius = 1.0 + big;

  std::uint64_t lcg = 0x9e3779b97f4a7c15ULL;  // deterministic restarts
  auto jitter = [&lcg]() {
    lcg = lcg * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(lcg >> 11) * 0x1.0p-53 - 0.5;
  };

  for (int attempt = 0; attempt < 4; ++attempt) {
    const C seed(0.4, 0.9);
    C w(1.0, 0.0);
    for (int j = 0; j < m; ++j) {
      w *= seed;
      z[static_cast<std::size_t>(j)] =
          attempt == 0 ? w : radius * C(jitter(), jitter());
    }
    bool settled = false;
    for (int it = 0; it < 500 && !settled; ++it) {
      double worst = 0.0;
      for (int j = 0; j < m; ++j) {
        C denom(1.0, 0.0);
        for (int i = 0; i < m; ++i) {
          if (i == j) continue;
          denom *= z[static_cast<std::size_t>(j)] - z[static_cast<std::size_t>(i)];
        }
        if (std::abs(denom) < 1e-300) {
          z[static_cast<std::size_t>(j)] += C(1e-8 * radius, 1e-8 * radius);
          continue;
        }
        const C delta = eval_monic(c, z[static_cast<std::size_t>(j)]) / denom;
        z[static_cast<std::size_t>(j)] -= delta;
        worst = std::max(worst, std::abs(delta) /
                                    std::max(1.0, std::abs(z[static_cast<std::size_t>(j)])));
      }
      settled = worst < 1e-14;
    }
    // Newton polish
    for (int j = 0; j < m; ++j) {
      for (int it = 0; it < 3; ++it) {
        const C d = eval_monic_derivative(c, z[static_cast<std::size_t>(j)]);
        if (std::abs(d) < 1e-300) break;
        z[static_cast<std::size_t>(j)] -=
            eval_monic(c, z[static_cast<std::size_t>(j)]) / d;
      }
    }
    bool ok = true;
    for (int j = 0; j < m; ++j) {
      const C r = z[static_cast<std::size_t>(j)];
      if (std::abs(eval_monic(c, r)) > tol.factor_tol * residual_scale(c, r)) {
        ok = false;
        break;
      }
    }
    if (ok) return z;
  }
  throw NotConverged("polynomial root refinement failed to meet factor_tol");
}

// Cluster nearby roots to their centroid so multiplicities are stable.
void cluster_roots(std::vector<C>& z) {
  const double rel = 1e-6;
  const int m = static_cast<int>(z.size());
  std::vector<int> group(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) group[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const double scale =
          std::max({1.0, std::abs(z[static_cast<std::size_t>(i)]),
                    std::abs(z[static_cast<std::size_t>(j)])});
      if (std::abs(z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]) <=
          rel * scale) {
        const int gi = group[static_cast<std::size_t>(i)];
        const int gj = group[static_cast<std::size_t>(j)];
        for (int& g : group)
          if (g == gj) g = gi;
      }
    }
  }
  for (int g = 0; g < m; ++g) {
    C sum(0.0, 0.0);
    int count = 0;
    for (int i = 0; i < m; ++i) {
      if (group[static_cast<std::size_t>(i)] == g) {
        sum += z[static_cast<std::size_t>(i)];
        ++count;
      }
    }
    if (count == 0) continue;
    const C centroid = sum / static_cast<double>(count);
    for (int i = 0; i < m; ++i)
      if (group[static_cast<std::size_t>(i)] == g)
        z[static_cast<std::size_t>(i)] = centroid;
  }
}

// Real-coefficient slots: snap near-real roots onto the axis and force the
// remaining roots into exact conjugate pairs.
void snap_real_slot(std::vector<C>& z, const Tolerances& tol) {
  const int m = static_cast<int>(z.size());
  for (C& r : z) {
    if (std::abs(r.imag()) <
        tol.factor_tol * std::max(1.0, std::abs(r)) * 10.0) {
      r = C(r.real(), 0.0);
    }
  }
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  for (int i = 0; i < m; ++i) {
    if (used[static_cast<std::size_t>(i)] ||
        z[static_cast<std::size_t>(i)].imag() == 0.0)
      continue;
    int best = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (int j = i + 1; j < m; ++j) {
      if (used[static_cast<std::size_t>(j)] ||
          z[static_cast<std::size_t>(j)].imag() == 0.0)
        continue;
      const double dist = std::abs(z[static_cast<std::size_t>(j)] -
                                   std::conj(z[static_cast<std::size_t>(i)]));
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best < 0) continue;  // left as-is; assembly will reject if needed
    const C mean = 0.5 * (z[static_cast<std::size_t>(i)] +
                          std::conj(z[static_cast<std::size_t>(best)]));
    z[static_cast<std::size_t>(i)] = mean;
    z[static_cast<std::size_t>(best)] = std::conj(mean);
    used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(best)] = true;
  }
}

struct SlotLayout {
  bool has_plus = false;
  bool has_minus = false;
  int pairs = 0;
  int count() const { return (has_plus ? 1 : 0) + (has_minus ? 1 : 0) + pairs; }
};

SlotLayout layout_of(Variant variant, int n) {
  SlotLayout l;
  l.has_plus = variant == Variant::polar;
  l.has_minus = has_v_minus(variant, n);
  l.pairs = num_pairs(variant, n);
  return l;
}

bool lex_less(const C& a, const C& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

std::string factor_key(const NComplex& value) {
  std::string key;
  char buf[32];
  for (int p = 0; p < value.dim(); ++p) {
    std::snprintf(buf, sizeof buf, "%.17g,", value[p]);
    key += buf;
  }
  return key;
}

// Builds an NComplex whose spectral slots carry the given per-slot values
// (slot order: plus, minus, pairs).
NComplex number_from_slots(Variant variant, int n, const SlotLayout& layout,
                           const std::vector<C>& values) {
  Spectrum s;
  s.variant = variant;
  s.n = n;
  std::size_t i = 0;
  if (layout.has_plus) s.v_plus = values[i++].real();
  if (layout.has_minus) s.v_minus = values[i++].real();
  for (int k = 0; k < layout.pairs; ++k) s.pairs.push_back(values[i++]);
  return from_spectrum(s);
}

}  // namespace

std::vector<SlotPolynomial> component_polynomials(const NPolynomial& poly) {
  require_poly(poly);
  const SlotLayout layout = layout_of(poly.variant, poly.n);
  std::vector<SlotPolynomial> slots;
  slots.reserve(static_cast<std::size_t>(layout.count()));
  if (layout.has_plus) slots.push_back({SlotKind::plus, 0, {}});
  if (layout.has_minus) slots.push_back({SlotKind::minus, 0, {}});
  for (int k = 1; k <= layout.pairs; ++k)
    slots.push_back({SlotKind::pair_plane, k, {}});

  for (const auto& a : poly.coefficients) {
    const Spectrum s = to_spectrum(a);
    std::size_t i = 0;
    if (layout.has_plus) slots[i++].coefficients.emplace_back(*s.v_plus, 0.0);
    if (layout.has_minus) slots[i++].coefficients.emplace_back(*s.v_minus, 0.0);
    for (int k = 1; k <= layout.pairs; ++k)
      slots[i++].coefficients.push_back(s.pairs[static_cast<std::size_t>(k - 1)]);
  }
  return slots;
}

ComponentRoots roots(const NPolynomial& poly, const Tolerances& tol) {
  const auto slots = component_polynomials(poly);
  ComponentRoots out;
  for (const auto& slot : slots) {
    std::vector<C> z = durand_kerner(slot.coefficients, tol);
    cluster_roots(z);
    if (slot.kind != SlotKind::pair_plane) snap_real_slot(z, tol);
    std::sort(z.begin(), z.end(), lex_less);
    out.slots.push_back({slot.kind, slot.pair_index, std::move(z)});
  }
  return out;
}

namespace {

// One root choice per slot per factor position, plus the conjugate-fusion
// bookkeeping needed for polar plus/minus slots with complex roots.
class Assembler {
 public:
  Assembler(Variant variant, int n, const SlotLayout& layout, int degree)
      : variant_(variant), n_(n), layout_(layout), m_(degree) {}

  // assignment[s][p] = root of slot s placed at factor position p.
  // Returns false when the per-slot conjugate pairs cannot be aligned.
  bool assemble(const std::vector<const std::vector<C>*>& assignment,
                Factorization& out) const {
    std::vector<int> partner(static_cast<std::size_t>(m_), -1);
    const int real_slots = (layout_.has_plus ? 1 : 0) + (layout_.has_minus ? 1 : 0);
    for (int s = 0; s < real_slots; ++s) {
      const auto& roots = *assignment[static_cast<std::size_t>(s)];
      for (int p = 0; p < m_; ++p) {
        if (roots[static_cast<std::size_t>(p)].imag() == 0.0) continue;
        const C want = std::conj(roots[static_cast<std::size_t>(p)]);
        if (partner[static_cast<std::size_t>(p)] >= 0) {
          const int q = partner[static_cast<std::size_t>(p)];
          if (roots[static_cast<std::size_t>(q)] != want) return false;
          continue;
        }
        int q = -1;
        for (int candidate = p + 1; candidate < m_; ++candidate) {
          if (partner[static_cast<std::size_t>(candidate)] < 0 &&
              roots[static_cast<std::size_t>(candidate)] == want) {
            q = candidate;
            break;
          }
        }
        if (q < 0) return false;
        partner[static_cast<std::size_t>(p)] = q;
        partner[static_cast<std::size_t>(q)] = p;
      }
    }
    // paired positions whose other real-slot roots are real still need a
    // real quadratic there, which two reals always give

    const int slot_count = layout_.count();
    std::vector<C> values(static_cast<std::size_t>(slot_count));
    out.linear_roots.clear();
    out.quadratic_factors.clear();
    out.mixed = false;
    for (int p = 0; p < m_; ++p) {
      if (partner[static_cast<std::size_t>(p)] < 0) {
        for (int s = 0; s < slot_count; ++s)
          values[static_cast<std::size_t>(s)] =
              (*assignment[static_cast<std::size_t>(s)])[static_cast<std::size_t>(p)];
        out.linear_roots.push_back(
            number_from_slots(variant_, n_, layout_, values));
      } else if (partner[static_cast<std::size_t>(p)] > p) {
        const int q = partner[static_cast<std::size_t>(p)];
        std::vector<C> b(static_cast<std::size_t>(slot_count));
        std::vector<C> cc(static_cast<std::size_t>(slot_count));
        for (int s = 0; s < slot_count; ++s) {
          const C rp =
              (*assignment[static_cast<std::size_t>(s)])[static_cast<std::size_t>(p)];
          const C rq =
              (*assignment[static_cast<std::size_t>(s)])[static_cast<std::size_t>(q)];
          b[static_cast<std::size_t>(s)] = -(rp + rq);
          cc[static_cast<std::size_t>(s)] = rp * rq;
        }
        out.quadratic_factors.push_back(
            {number_from_slots(variant_, n_, layout_, b),
             number_from_slots(variant_, n_, layout_, cc)});
        out.mixed = true;
      }
    }
    return true;
  }

 private:
  Variant variant_;
  int n_;
  SlotLayout layout_;
  int m_;
};

std::string factorization_key(const Factorization& f) {
  std::vector<std::string> parts;
  for (const auto& r : f.linear_roots) parts.push_back("L:" + factor_key(r));
  for (const auto& q : f.quadratic_factors)
    parts.push_back("Q:" + factor_key(q.b) + "|" + factor_key(q.c));
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& p : parts) key += p + ";";
  return key;
}

constexpr long kProbeCap = 1'000'000;

}  // namespace

std::vector<Factorization> factorizations(const NPolynomial& poly, long limit,
                                          const Tolerances& tol) {
  if (limit < 1) throw DomainError("factorizations: limit must be positive");
  const ComponentRoots component = roots(poly, tol);
  const SlotLayout layout = layout_of(poly.variant, poly.n);
  const int m = poly.degree();
  const int slot_count = layout.count();

  // Distinct orderings of each slot's root multiset, canonical (sorted)
  // ordering first.
  std::vector<std::vector<std::vector<C>>> perms(
      static_cast<std::size_t>(slot_count));
  bool fusion_possible = false;
  for (int s = 0; s < slot_count; ++s) {
    std::vector<C> base = component.slots[static_cast<std::size_t>(s)].roots;
    std::sort(base.begin(), base.end(), lex_less);
    if (component.slots[static_cast<std::size_t>(s)].kind !=
        SlotKind::pair_plane) {
      for (const C& r : base)
        if (r.imag() != 0.0) fusion_possible = true;
    }
    do {
      perms[static_cast<std::size_t>(s)].push_back(base);
      // memory guard for extreme degrees; counts stay exact through m = 8
      if (perms[static_cast<std::size_t>(s)].size() >= 50000) break;
    } while (std::next_permutation(base.begin(), base.end(), lex_less));
  }

  // When the first slot's roots are all distinct and no fusion can occur,
  // pinning that slot to its canonical ordering enumerates each factor
  // multiset exactly once; otherwise fall back to keyed deduplication.
  bool pivot_distinct = true;
  const auto& pivot = perms[0].front();
  for (int p = 0; p + 1 < m; ++p) {
    if (pivot[static_cast<std::size_t>(p)] == pivot[static_cast<std::size_t>(p + 1)])
      pivot_distinct = false;
  }
  const bool fast_path = pivot_distinct && !fusion_possible;

  std::vector<long> odometer(static_cast<std::size_t>(slot_count), 0);
  const Assembler assembler(poly.variant, poly.n, layout, m);
  std::unordered_set<std::string> seen;
  std::vector<Factorization> out;
  long probes = 0;

  while (true) {
    std::vector<const std::vector<C>*> assignment(
        static_cast<std::size_t>(slot_count));
    for (int s = 0; s < slot_count; ++s)
      assignment[static_cast<std::size_t>(s)] =
          &perms[static_cast<std::size_t>(s)]
               [static_cast<std::size_t>(odometer[static_cast<std::size_t>(s)])];
    Factorization f;
    if (assembler.assemble(assignment, f)) {
      bool fresh = true;
      if (!fast_path) fresh = seen.insert(factorization_key(f)).second;
      if (fresh) {
        f.ordering_id = static_cast<long>(out.size());
        out.push_back(std::move(f));
        if (static_cast<long>(out.size()) >= limit) break;
      }
    }
    if (++probes >= kProbeCap) break;

    // advance the odometer; the pinned pivot slot does not spin on the fast
    // path
    int s = slot_count - 1;
    const int lowest = fast_path ? 1 : 0;
    for (; s >= lowest; --s) {
      if (++odometer[static_cast<std::size_t>(s)] <
          static_cast<long>(perms[static_cast<std::size_t>(s)].size()))
        break;
      odometer[static_cast<std::size_t>(s)] = 0;
    }
    if (s < lowest) break;
  }
  return out;
}

long count_factorizations(const NPolynomial& poly, long limit,
                          const Tolerances& tol) {
  return static_cast<long>(factorizations(poly, limit, tol).size());
}

NPolynomial expand(const Factorization& f, Variant variant, int n) {
  // descending powers, c[0] = 1
  std::vector<NComplex> c{NComplex::one(variant, n)};
  const NComplex zero = NComplex::zero(variant, n);
  for (const auto& r : f.linear_roots) {
    std::vector<NComplex> next(c.size() + 1, zero);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] = next[i] + c[i];
      next[i + 1] = next[i + 1] - mul(r, c[i]);
    }
    c = std::move(next);
  }
  for (const auto& q : f.quadratic_factors) {
    std::vector<NComplex> next(c.size() + 2, zero);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] = next[i] + c[i];
      next[i + 1] = next[i + 1] + mul(q.b, c[i]);
      next[i + 2] = next[i + 2] + mul(q.c, c[i]);
    }
    c = std::move(next);
  }
  NPolynomial out;
  out.variant = variant;
  out.n = n;
  out.coefficients.assign(c.begin() + 1, c.end());
  return out;
}

}  // namespace ncx
