#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apolar/regular_sequence.hpp"

namespace apolar {

/// Degree type (d_0 <= ... <= d_n) of a complete intersection in n+1
/// variables; the socle degree is s = sum(d_i) - (n+1). The classical
/// convention asks for every d_i >= 2; types violating it (H missing some
/// variable) are still mathematically fine and carried with
/// paper_conforming = false.
struct CIType {
  std::vector<int> degrees;  // nondecreasing
  int socle_degree = 0;
  bool paper_conforming = false;

  static CIType from_degrees(std::vector<int> degrees);
  bool operator==(const CIType& o) const {
    return degrees == o.degrees && socle_degree == o.socle_degree;
  }
};

/// All feasible types for socle degree s in n+1 variables: nondecreasing
/// tuples with d_i >= 2 and sum = s+n+1, in lexicographic order.
std::vector<CIType> feasible_types(int s, int n);

/// Full witness that the annihilator of H is the complete intersection cut
/// out by the given forms:
///   (i)   the forms are a regular sequence (Macaulay rank witness),
///   (ii)  every form annihilates H (contraction residues all zero),
///   (iii) det(Jacobian) o H is a nonzero scalar.
/// Validity additionally requires deg H = sum(d_i) - (n+1); when the three
/// conditions hold that identity is a theorem, so it is re-checked as a
/// self-test.
struct CICertificate {
  std::vector<MultiPoly> generators;
  CIType type;
  bool degree_consistent = false;
  RankWitness regseq;               // condition (i)
  std::vector<MultiPoly> residues;  // condition (ii), f_i o H
  MultiPoly jacobian_contraction = MultiPoly(1);  // condition (iii), det(Jac(f)) o H
  bool valid = false;

  bool condition_i() const { return regseq.regular; }
  bool condition_ii() const;
  bool condition_iii() const { return !jacobian_contraction.is_zero(); }
};

CICertificate verify_certificate(const MultiPoly& H, std::span<const MultiPoly> f);

/// Outcome of the decision procedure. Exactly one of certificate/refutation
/// is set; the refutation is the minimal-generator degree multiset, whose
/// size differs from n+1.
struct CIDecision {
  bool is_ci = false;
  std::optional<CICertificate> certificate;
  std::optional<std::vector<int>> refutation_degrees;
};

/// Decides via the minimal generator count: Ann(H) is m-primary, and an
/// m-primary ideal in n+1 variables minimally generated by n+1 forms is cut
/// out by a system of parameters, hence a regular sequence. On the CI branch
/// the certificate built from those generators is verified at runtime.
CIDecision is_complete_intersection(const MultiPoly& H);

/// Randomized search for a certificate of the given type: each form is drawn
/// as a random integer combination (coefficients uniform on [-B, B], B = 10)
/// of a basis of Ann(H)_(d_i), so condition (ii) holds by construction.
/// z1_count = draws that are regular sequences; witness_count = those whose
/// Jacobian determinant does not annihilate H. Deterministic per seed: trial
/// k draws from an independent substream derived from (seed, k).
struct SampleReport {
  int trials = 0;
  int z1_count = 0;
  int witness_count = 0;
  std::optional<std::vector<MultiPoly>> first_witness;
  std::uint64_t seed = 0;
  std::string note;
};

SampleReport sample_ci_witness(const MultiPoly& H, const CIType& type, int trials,
                               std::uint64_t seed);

/// Gorenstein containment collapse: given (K) contained in (J) slice-wise up
/// to degree s+1 with S/(K) Gorenstein of socle degree s, a nonzero degree-s
/// socle in S/(J) forces K = J. Returns whether that socle is nonzero, and
/// when it is, re-checks the forced slice-wise equality before answering.
bool lemma_ku_check(std::span<const MultiPoly> k_gens, std::span<const MultiPoly> j_gens,
                    int s);

}  // namespace apolar
