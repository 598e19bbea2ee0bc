#ifndef POLCURVE_TESTS_WEIGHT_ORACLE_HPP
#define POLCURVE_TESTS_WEIGHT_ORACLE_HPP

namespace polcurve::tests {

// Direct enumeration of the minimal-weight monomial basis of degree m in
// three variables: every monomial divisible by x2^2 x3 reduces against the
// cubic relation whose leading term it is, so the greedy lowest-weight
// spanning set is exactly the non-divisible monomials. Returns their total
// weight; `count` receives the basis size (always 3m).
long long brute_force_weight(long long w1, long long w2, long long w3, long long m,
                             long long* count = nullptr);

}  // namespace polcurve::tests

#endif
