#include "apolar/regular_sequence.hpp"

#include <algorithm>
#include <numeric>

namespace apolar {

FormSystem::FormSystem(std::vector<MultiPoly> forms) : forms_(std::move(forms)) {
  if (forms_.empty()) throw InvalidInput("form system: empty");
  n_vars_ = forms_.front().n_vars();
  if (static_cast<int>(forms_.size()) != n_vars_)
    throw InvalidInput("form system needs exactly as many forms as variables");
  degrees_.reserve(forms_.size());
  for (const auto& f : forms_) {
    if (f.n_vars() != n_vars_) throw InvalidInput("form system: mixed variable counts");
    if (f.is_zero()) throw InvalidInput("form system: zero form");
    if (!f.is_homogeneous()) throw InvalidInput("form system: inhomogeneous form");
    if (f.degree() < 1) throw InvalidInput("form system: constant form");
    degrees_.push_back(f.degree());
  }
}

int FormSystem::critical_degree() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), 0) - (n_vars_ - 1);
}

int FormSystem::socle_degree() const { return critical_degree() - 1; }

GradedBasis ideal_piece(std::span<const MultiPoly> gens, int d) {
  if (gens.empty()) throw InvalidInput("ideal_piece: empty generator list");
  if (d < 0) throw InvalidInput("negative degree");
  const int n = gens.front().n_vars();
  std::vector<MultiPoly> members;
  for (const auto& g : gens) {
    if (g.n_vars() != n) throw InvalidInput("ideal_piece: mixed variable counts");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw InvalidInput("ideal_piece: inhomogeneous generator");
    const int dg = g.degree();
    if (dg > d) continue;
    for (const auto& m : monomials(n, d - dg))
      members.push_back(mul(MultiPoly::monomial(m), g));
  }
  return GradedBasis::from_polys(n, d, members);
}

std::vector<int> quotient_hf(std::span<const MultiPoly> gens, int up_to) {
  if (gens.empty()) throw InvalidInput("quotient_hf: empty generator list");
  const int n = gens.front().n_vars();
  std::vector<int> hf;
  hf.reserve(static_cast<std::size_t>(up_to) + 1);
  for (int d = 0; d <= up_to; ++d)
    hf.push_back(static_cast<int>(monomial_count(n, d)) -
                 static_cast<int>(ideal_piece(gens, d).dim()));
  return hf;
}

RatMat macaulay_matrix(const FormSystem& sys, int d) {
  const int max_deg = *std::max_element(sys.degrees().begin(), sys.degrees().end());
  if (d < max_deg) throw InvalidInput("macaulay matrix degree below the largest form degree");
  const int n = sys.n_vars();
  Index rows = 0;
  for (int deg : sys.degrees()) rows += monomial_count(n, d - deg);
  const Index cols = monomial_count(n, d);
  RatMat m(rows, cols);
  Index r = 0;
  for (std::size_t i = 0; i < sys.forms().size(); ++i) {
    for (const auto& mono : monomials(n, d - sys.degrees()[i])) {
      m.row(r++) = poly_coords(mul(MultiPoly::monomial(mono), sys.forms()[i]), d);
    }
  }
  return m;
}

RankWitness is_regular_sequence(const FormSystem& sys) {
  const int D = sys.critical_degree();
  RatMat m = macaulay_matrix(sys, D);
  RankWitness w;
  w.degree = D;
  w.rows = m.rows();
  w.cols = m.cols();
  w.rank = rank_with_modular_shortcut(m);
  w.regular = w.rank == w.cols;
  return w;
}

std::vector<long long> ci_hilbert_series(const std::vector<int>& degrees, int n_vars,
                                         int up_to) {
  // numerator prod_i (1 - t^d_i), truncated
  std::vector<long long> series(static_cast<std::size_t>(up_to) + 1, 0);
  series[0] = 1;
  for (int d : degrees) {
    for (int k = up_to; k >= d; --k)
      series[static_cast<std::size_t>(k)] -= series[static_cast<std::size_t>(k - d)];
  }
  // divide by (1 - t)^n_vars: repeated prefix sums
  for (int i = 0; i < n_vars; ++i)
    for (int k = 1; k <= up_to; ++k)
      series[static_cast<std::size_t>(k)] += series[static_cast<std::size_t>(k - 1)];
  return series;
}

}  // namespace apolar
