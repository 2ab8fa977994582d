#include "apolar/monomial.hpp"

#include "apolar/errors.hpp"

namespace apolar {

namespace {

void enumerate(int n_vars, int d, Exponents& prefix, std::vector<Exponents>& out) {
  if (n_vars == 1) {
    prefix.push_back(d);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = d; e >= 0; --e) {
    prefix.push_back(e);
    enumerate(n_vars - 1, d - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Exponents> monomials(int n_vars, int d) {
  if (n_vars < 1) throw InvalidInput("variable count must be at least 1");
  if (d < 0) throw InvalidInput("negative degree");
  std::vector<Exponents> out;
  out.reserve(static_cast<std::size_t>(monomial_count(n_vars, d)));
  Exponents prefix;
  enumerate(n_vars, d, prefix, out);
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: r is binomial(n, i+1) * ... running product
  }
  return r;
}

long long monomial_count(int n_vars, int d) {
  return binomial(n_vars - 1 + d, d).convert_to<long long>();
}

}  // namespace apolar
