#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "penner/matrix.hpp"
#include "penner/poly.hpp"

// Arithmetic over F_p for word-sized primes p < 2^31.
namespace penner::modp {

using u64 = std::uint64_t;
using PolyP = std::vector<u64>;  // constant term first, no trailing zeros

u64 inv(u64 a, u64 p);
u64 powm(u64 a, u64 e, u64 p);

// `count` consecutive primes greater than or equal to `start`.
std::vector<u64> primes_from(u64 start, std::size_t count);

PolyP reduce(const IntPoly& f, u64 p);
PolyP mul(const PolyP& a, const PolyP& b, u64 p);
PolyP rem(PolyP a, const PolyP& b, u64 p);
PolyP quo(PolyP a, const PolyP& b, u64 p);
PolyP gcd(PolyP a, PolyP b, u64 p);  // monic
PolyP derivative(const PolyP& a, u64 p);
bool is_squarefree(const PolyP& f, u64 p);

// Degrees of the irreducible factors of a monic squarefree f over F_p,
// ascending (distinct-degree factorisation).
std::vector<int> factor_degrees(const PolyP& f, u64 p);

// det(xI - A) mod p via reduction to upper Hessenberg form.
PolyP charpoly(const IntMatrix& a, u64 p);

}  // namespace penner::modp
