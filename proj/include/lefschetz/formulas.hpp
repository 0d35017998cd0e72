#ifndef LEFSCHETZ_FORMULAS_HPP
#define LEFSCHETZ_FORMULAS_HPP

#include <gmpxx.h>

#include "lefschetz/linalg.hpp"

namespace lefschetz {

/// H(n) = 0! 1! ... (n-1)!.
BigInt hyperfactorial(long n);

/// Plane partitions in an a x b x c box.
BigInt macmahon(long a, long b, long c);

/// Direct count of a x b arrays with entries in 0..c, weakly decreasing along
/// rows and columns. Requires a*b <= 16.
BigInt plane_partition_oracle(long a, long b, long c);

/// n x n matrix with entry (i, j) = C(p, q+j-i) for j <= m and C(p, q+r+j-i)
/// for j > m (1-based indices).
IntMatrix split_binom_matrix(long p, long q, long r, long m, long n);

/// Closed form for det split_binom_matrix(p, q, r, m, n); needs p >= q + r.
BigInt split_binom_det(long p, long q, long r, long m, long n);

/// Tilings of the hexagon T_d(x^a, y^b, z^c), d = (a+b+c)/2.
BigInt ci_enumeration(long a, long b, long c);

/// Hexagon with the x^a corner puncture replaced by a smaller hexagon:
/// T_d(x^{a+alpha}, y^b, z^c, x^a y^beta, x^a z^gamma).
BigInt ci_nest_enumeration(long a, long b, long c, long alpha, long beta, long gamma);

/// Tilings of T_d(x^a, y^b, z^c, x^alpha y^beta), d = (a+b+c+alpha+beta)/3.
BigInt two_mahonian_enumeration(long a, long b, long c, long alpha, long beta, long d);

/// |det Z(T_d(x^a, y^b, z^c, x^i y^{d-1-i}))| for a+b+c odd, d = (a+b+c-1)/2.
BigInt type_one_odd_minor(long a, long b, long c, long i);

/// The same quantity in its printed simplified shape. Kept for comparison:
/// it disagrees with the product above, e.g. at (3, 3, 3, 1).
mpq_class type_one_odd_minor_simplified(long a, long b, long c, long i);

/// Throws InternalError if some prime factor of n exceeds bound.
void require_prime_factors_at_most(const BigInt& n, long bound, const char* what);

}  // namespace lefschetz

#endif  // LEFSCHETZ_FORMULAS_HPP
