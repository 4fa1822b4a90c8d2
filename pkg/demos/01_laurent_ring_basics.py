#!/usr/bin/env python3
# Coefficient fields and the Laurent operator ring.
#
# Operators are finite sums of monomials X^a with exponents anywhere in
# Z^r, so a kernel can reach backwards and forwards along every axis.

from bishift import (
    LaurentPoly,
    PrimeField,
    RationalField,
    format_poly,
    parse_poly,
)

# --- three coefficient fields -------------------------------------------

Q = RationalField()
GF7 = PrimeField(7)

half = Q.value(1, 2)
third = Q.value(1, 3)
print("exact rationals:   1/2 + 1/3 =", Q.format_value(half + third))
print("GF(7):             3 * 5     =", GF7.format_value(GF7.value(3) * GF7.value(5)))
print("GF(7):             1/3       =", GF7.format_value(GF7.value(3).inverse()))

# --- sparse Laurent polynomials ------------------------------------------

d = parse_poly("5*X^-1 - 3*X^2", 1, Q)
print("\noperator d      =", format_poly(d))
print("coefficient d_-1 =", Q.format_value(d.coeff((-1,))))
print("coefficient d_0  =", Q.format_value(d.coeff((0,))))

# ring arithmetic keeps the sparse map canonical: like terms combine and
# zeros disappear
a = parse_poly("X^-1 + X", 1, Q)
print("\n(X^-1 + X)^2    =", format_poly(a * a))
print("d - d           =", format_poly(d - d))

# several axes work the same way; exponent vectors live in Z^2 here
e = parse_poly("X1^-1*X2 + 3*X1^2*X2^-2", 2, Q)
print("two axes        =", format_poly(e))
print("support         =", sorted(e.support()))

# characteristic 2 makes doubled terms vanish
GF2 = PrimeField(2)
f = parse_poly("X^-1", 1, GF2)
print("\nover GF(2), X^-1 + X^-1 =", format_poly(f + f))
