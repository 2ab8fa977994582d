#include "apolar/ci_certifier.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <random>

namespace apolar {

namespace {

void require_homogeneous_nonzero(const MultiPoly& H, const char* who) {
  if (H.is_zero()) throw InvalidInput(std::string(who) + ": zero polynomial");
  if (!H.is_homogeneous()) throw InvalidInput(std::string(who) + ": inhomogeneous polynomial");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Uniform integer in [-bound, bound], rejection-sampled so the distribution
/// and the byte stream are identical on every platform.
int draw_coefficient(std::mt19937_64& rng, int bound) {
  const std::uint64_t range = 2 * static_cast<std::uint64_t>(bound) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / range * range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<int>(x % range) - bound;
}

/// Forms of equal degree that are linearly dependent (or any zero form)
/// generate an ideal needing at most n generators, which in n+1 variables can
/// never be m-primary; such a draw fails condition (i) with no matrix work.
bool obviously_not_regular(const std::vector<MultiPoly>& forms) {
  for (const auto& f : forms)
    if (f.is_zero()) return true;
  std::map<int, std::vector<const MultiPoly*>> by_degree;
  for (const auto& f : forms) by_degree[f.degree()].push_back(&f);
  for (const auto& [d, group] : by_degree) {
    if (group.size() < 2) continue;
    RowSpace space(monomial_count(forms.front().n_vars(), d));
    for (const MultiPoly* f : group)
      if (!space.insert(poly_coords(*f, d))) return true;
  }
  return false;
}

}  // namespace

CIType CIType::from_degrees(std::vector<int> degrees) {
  if (degrees.empty()) throw InvalidInput("empty degree list");
  std::sort(degrees.begin(), degrees.end());
  if (degrees.front() < 1) throw InvalidInput("type degrees must be positive");
  CIType t;
  t.socle_degree = std::accumulate(degrees.begin(), degrees.end(), 0) -
                   static_cast<int>(degrees.size());
  t.paper_conforming = degrees.front() >= 2;
  t.degrees = std::move(degrees);
  return t;
}

std::vector<CIType> feasible_types(int s, int n) {
  if (s < 1 || n < 0) throw InvalidInput("feasible_types: s >= 1 and n >= 0 required");
  std::vector<CIType> out;
  std::vector<int> current(static_cast<std::size_t>(n) + 1);
  const int total = s + n + 1;
  // nondecreasing tuples, d_i >= 2, in lexicographic order
  auto recurse = [&](auto&& self, int pos, int minimum, int remaining) -> void {
    const int slots = n + 1 - pos;
    if (slots == 0) {
      if (remaining == 0) out.push_back(CIType::from_degrees(current));
      return;
    }
    for (int d = minimum; d * slots <= remaining; ++d) {
      current[static_cast<std::size_t>(pos)] = d;
      self(self, pos + 1, d, remaining - d);
    }
  };
  recurse(recurse, 0, 2, total);
  return out;
}

bool CICertificate::condition_ii() const {
  for (const auto& r : residues)
    if (!r.is_zero()) return false;
  return true;
}

CICertificate verify_certificate(const MultiPoly& H, std::span<const MultiPoly> f) {
  require_homogeneous_nonzero(H, "verify_certificate");
  const int n = H.n_vars();
  if (static_cast<int>(f.size()) != n)
    throw InvalidInput("verify_certificate: expected exactly " + std::to_string(n) +
                       " forms");
  for (const auto& g : f) {
    if (g.n_vars() != n) throw InvalidInput("verify_certificate: mixed variable counts");
    if (g.is_zero()) throw InvalidInput("verify_certificate: zero form");
    if (!g.is_homogeneous())
      throw InvalidInput("verify_certificate: inhomogeneous form");
  }

  CICertificate cert;
  cert.generators.assign(f.begin(), f.end());
  std::vector<int> degrees;
  degrees.reserve(f.size());
  for (const auto& g : f) degrees.push_back(g.degree());
  cert.type = CIType::from_degrees(degrees);
  cert.degree_consistent = H.degree() == cert.type.socle_degree;

  cert.regseq = is_regular_sequence(FormSystem(cert.generators));
  cert.residues.reserve(f.size());
  for (const auto& g : f) cert.residues.push_back(contract(g, H));
  cert.jacobian_contraction = contract(det(jacobian(f)), H);

  const bool conditions = cert.condition_i() && cert.condition_ii() && cert.condition_iii();
  if (conditions && !cert.degree_consistent)
    throw InternalError(
        "all certificate conditions hold but deg H != sum(d_i) - (n+1); "
        "this contradicts the characterization");
  cert.valid = conditions && cert.degree_consistent;
  return cert;
}

CIDecision is_complete_intersection(const MultiPoly& H) {
  require_homogeneous_nonzero(H, "is_complete_intersection");
  const int n = H.n_vars();
  MinimalGenerators gens = minimal_generators(H);

  CIDecision decision;
  if (static_cast<int>(gens.generators.size()) == n) {
    decision.is_ci = true;
    decision.certificate = verify_certificate(H, gens.polys());
    // n+1 minimal generators of the m-primary ideal Ann(H) form a system of
    // parameters, hence a regular sequence; the certificate must agree.
    if (!decision.certificate->valid)
      throw InternalError("minimal generator count is n+1 but the certificate fails");
  } else {
    decision.is_ci = false;
    decision.refutation_degrees = gens.degrees();
    if (n == 3 && decision.refutation_degrees->size() % 2 == 0)
      throw InternalError("even minimal generator count for a 3-variable Gorenstein ideal");
  }
  return decision;
}

SampleReport sample_ci_witness(const MultiPoly& H, const CIType& type, int trials,
                               std::uint64_t seed) {
  require_homogeneous_nonzero(H, "sample_ci_witness");
  const int n = H.n_vars();
  if (static_cast<int>(type.degrees.size()) != n)
    throw InvalidInput("sample_ci_witness: type length must equal variable count");
  if (H.degree() != type.socle_degree)
    throw InvalidInput("sample_ci_witness: deg H does not match the type's socle degree");
  if (trials < 0) throw InvalidInput("negative trial count");

  SampleReport report;
  report.seed = seed;

  std::vector<std::vector<MultiPoly>> bases;
  bases.reserve(type.degrees.size());
  for (int d : type.degrees) {
    GradedBasis b = annihilator_piece(H, d);
    if (b.dim() == 0) {
      report.note = "annihilator slice of degree " + std::to_string(d) +
                    " is zero; no draw can satisfy the annihilation condition";
      return report;
    }
    bases.push_back(b.polys());
  }

  constexpr int kBound = 10;
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (trial + 1))));
    std::vector<MultiPoly> draw;
    draw.reserve(bases.size());
    for (const auto& basis : bases) {
      MultiPoly f(n);
      for (const auto& b : basis) {
        const int c = draw_coefficient(rng, kBound);
        if (c != 0) f = add(f, scale(c, b));
      }
      draw.push_back(std::move(f));
    }
    ++report.trials;

    if (obviously_not_regular(draw)) continue;
    if (!is_regular_sequence(FormSystem(draw)).regular) continue;
    ++report.z1_count;

    if (contract(det(jacobian(draw)), H).is_zero()) continue;
    ++report.witness_count;
    if (!report.first_witness) {
      if (!verify_certificate(H, draw).valid)
        throw InternalError("sampled witness fails certificate verification");
      report.first_witness = draw;
    }
  }
  return report;
}

bool lemma_ku_check(std::span<const MultiPoly> k_gens, std::span<const MultiPoly> j_gens,
                    int s) {
  if (k_gens.empty() || j_gens.empty()) throw InvalidInput("empty generator list");
  if (s < 0) throw InvalidInput("negative socle degree");

  // precondition: (K) inside (J) slice-wise up to degree s+1
  for (int d = 0; d <= s + 1; ++d) {
    GradedBasis kd = ideal_piece(k_gens, d);
    GradedBasis jd = ideal_piece(j_gens, d);
    if (!jd.space().contains(kd.space()))
      throw InvalidInput("lemma_ku_check: (K) is not contained in (J) at degree " +
                         std::to_string(d));
  }
  // precondition: S/(K) Gorenstein of socle degree s
  if (inverse_system_top(k_gens, s).dim() != 1)
    throw InvalidInput("lemma_ku_check: S/(K) is not Gorenstein of the stated socle degree");

  if (socle_piece(j_gens, s).dim() == 0) return false;

  // the collapse K = J is now forced; re-check slice-wise before answering
  for (int d = 0; d <= s + 1; ++d) {
    if (!(ideal_piece(k_gens, d) == ideal_piece(j_gens, d)))
      throw InternalError("socle is nonzero in the socle degree but the ideals differ");
  }
  return true;
}

}  // namespace apolar
