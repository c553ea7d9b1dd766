#pragma once

#include "skein/diagram/diagram.hpp"
#include "skein/report.hpp"
#include "skein/surface/skein_vector.hpp"

namespace skein {

/// Representative of a over representative of b, all crossings marked.
MarkedDiagram product_diagram(const CurveClass& a, const CurveClass& b);

/// Exact product a * b in the skein algebra: the bracket of the product diagram.
LaurentVector star_laurent(const CurveClass& a, const CurveClass& b);

/// a * b to order K in h, i.e. sum of lambda_j(a,b) h^j.
SeriesVector star(const CurveClass& a, const CurveClass& b, unsigned order);
/// Bilinear extension; coefficients multiply as truncated series.
SeriesVector star(const SeriesVector& a, const SeriesVector& b, unsigned order);

/// lambda_k(a,b) by the bracket of the product diagram. The resolution formula
/// sum_j (phi_j)_* chi(P_{k-2j}) is evaluated alongside; TheoremViolation if they differ.
RationalVector lambda_k(const CurveClass& a, const CurveClass& b, int k);
std::vector<RationalVector> lambda_series(const CurveClass& a, const CurveClass& b, int max_order);

/// lambda_1(a,b) equals the crossing-sum form and is antisymmetric.
CheckReport goldman_check(const CurveClass& a, const CurveClass& b);

/// lambda_k(b,a) = (-1)^k lambda_k(a,b) for k <= K.
CheckReport hermitian_check(const CurveClass& a, const CurveClass& b, int max_order);

/// (a*b)*c = a*(b*c) to order K.
CheckReport associativity_check(const CurveClass& a, const CurveClass& b, const CurveClass& c, int max_order);

/// lambda_k(Ma, Mb) = M lambda_k(a,b) for k <= K, and bracket(M D) = M bracket(D) on the
/// product diagram.
CheckReport sl2z_equivariance_check(const IntMatrix2& m, const CurveClass& a, const CurveClass& b, int max_order);

}  // namespace skein
