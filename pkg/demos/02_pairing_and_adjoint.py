#!/usr/bin/env python3
# The pairing <d, W>, the shift action, and the adjoint identity.
#
# A signal W assigns a sample to every lattice point; pairing it with an
# operator d sums d_a * W_a over d's finite support.  The shift action
# (d o W)_b = sum_a d_a * W_(a+b) reads past and future samples, and the
# pairing makes that action the adjoint of multiplication:
#
#     <c * d, W> = <c, d o W>

import random

from bishift import (
    FiniteSeq,
    PeriodicSeq,
    RationalField,
    check_adjoint,
    parse_poly,
    scalar_product,
    shift,
)
from bishift.selftest import random_finite_seq, random_poly

Q = RationalField()

# --- two worked pairings --------------------------------------------------

d = parse_poly("X^-1 + 2*X^2", 1, Q)
w = FiniteSeq(1, Q, {(-1,): 3, (2,): 4})
print("<X^-1 + 2*X^2, W> = 1*3 + 2*4 =", Q.format_value(scalar_product(d, w)))

d2 = parse_poly("X^-1 + X", 1, Q)
w2 = FiniteSeq(1, Q, {(-1,): 1, (1,): 2})
print("<X^-1 + X, Y^-1 + 2Y> = 1*1 + 1*2 =", Q.format_value(scalar_product(d2, w2)))

# --- the shift reads ahead -------------------------------------------------

w3 = FiniteSeq(1, Q, {(0,): 10, (1,): 20, (2,): 30})
moved = shift(parse_poly("X", 1, Q), w3)
print("\nshift by X: sample at k becomes old sample at k+1")
for k in range(-1, 3):
    print(f"  k={k:+d}: {Q.format_value(moved.coeff((k,)))}")

# periodic signals shift cyclically on their fundamental domain
p = PeriodicSeq(1, Q, (3,), [7, 8, 9])
print("periodic (7,8,9) shifted by X ->",
      [Q.format_value(v) for v in shift(parse_poly("X", 1, Q), p).values])

# --- adjoint identity, spot-checked randomly -------------------------------

rng = random.Random(2)
trials = 500
ok = sum(
    check_adjoint(
        random_poly(rng, 2, Q),
        random_poly(rng, 2, Q),
        random_finite_seq(rng, 2, Q),
    )
    for _ in range(trials)
)
print(f"\nadjoint identity held in {ok}/{trials} random rank-2 trials")
