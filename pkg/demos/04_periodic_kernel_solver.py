#!/usr/bin/env python3
# Behaviours: signal sets cut out by operator matrices, solved exactly
# on period lattices.
#
# A matrix R of Laurent operators defines the behaviour of all signal
# vectors W with R o W = 0.  Restricted to signals with period N the
# condition becomes a finite linear system over the field, so the
# solution space has an exact basis and dimension.

import json
import tempfile
from pathlib import Path

from bishift import (
    PeriodicSeq,
    PrimeField,
    enumerate_periodic_vectors,
    kernel_dimension,
    parse_system,
    periodic_kernel_basis,
)
from bishift import io as formats

GF2 = PrimeField(2)

# --- the two-sided difference system ---------------------------------------

difference = parse_system(
    json.dumps(
        {"rank": 1, "field": "gf:2", "k": 1, "l": 1, "entries": [["X - X^-1"]]}
    )
)

# solutions satisfy W_(n+1) = W_(n-1): even and odd samples each stay
# constant, so the solution space on any even lattice is 2-dimensional
for n in (2, 4, 6):
    print(f"difference system, period {n}: dimension", kernel_dimension(difference, (n,)))

alternating = PeriodicSeq(1, GF2, (2,), [1, 0])
print("alternating 1,0,1,0,... is a member:", difference.contains(alternating))

# cross-check by brute force: count members among all period-4 signals
members = [
    w for w in enumerate_periodic_vectors(difference, (4,)) if difference.contains(w)
]
print(f"brute force over 16 period-4 candidates: {len(members)} members (= 2^2)")

# --- a two-component behaviour ---------------------------------------------

system = parse_system(
    json.dumps(
        {
            "rank": 1,
            "field": "gf:3",
            "k": 2,
            "l": 2,
            "entries": [["X + X^-1", "1"], ["0", "X^-1 - 1"]],
        }
    )
)

result = periodic_kernel_basis(system, (4,))
print(f"\ntwo-component system on the period-4 lattice: dimension {result.dimension}")
for i, vec in enumerate(result.basis):
    w1 = [system.field.format_value(v) for v in vec[0].values]
    w2 = [system.field.format_value(v) for v in vec[1].values]
    print(f"  basis[{i}]: W1={w1}  W2={w2}")
# the second row of the matrix forces W2 to be constant, visible above

# --- kernel reports ----------------------------------------------------------

workdir = Path(tempfile.mkdtemp(prefix="kernels-"))
report = workdir / "report.json"
formats.write_kernel_report(result, report)
replayed = formats.read_kernel_report(report)
print(f"\nreport written to {report}")
print("replayed basis vectors all verify:",
      all(system.contains(vec) for vec in replayed.basis))
