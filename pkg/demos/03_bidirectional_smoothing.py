#!/usr/bin/env python3
# Case study: a two-sided smoothing filter on a short signal.
#
# The kernel (1/2)X^-1 + (1/2)X averages each sample's two neighbours,
# one from the past and one from the future, which no causal filter can
# do.  The interior of the classic demo table comes out as (1, 2, 1);
# note that the defining sum also produces honest edge samples 1/2 and
# 3/2 just outside the input's support.

import tempfile
from pathlib import Path

from bishift import FiniteSeq, RationalField, parse_poly, shift
from bishift import io as formats
from bishift.cli import main

Q = RationalField()

signal = FiniteSeq(1, Q, {(-1,): 1, (0,): 2, (1,): 3})
kernel = parse_poly("1/2*X^-1 + 1/2*X", 1, Q)
smoothed = shift(kernel, signal)

print("k     input  output")
for k in range(-3, 4):
    print(
        f"{k:+d}     {Q.format_value(signal.coeff((k,))):<5}  "
        f"{Q.format_value(smoothed.coeff((k,)))}"
    )

# the same run through the command-line front end, via CSV files
workdir = Path(tempfile.mkdtemp(prefix="smoothing-"))
inp = workdir / "input.csv"
out = workdir / "output.csv"
formats.write_seq_csv(inp, signal)

code = main(
    [
        "filter",
        "--kernel", "1/2*X^-1 + 1/2*X",
        "--input", str(inp),
        "--output", str(out),
    ]
)
print(f"\ncli exit code {code}; {out} contains:")
print(out.read_text(), end="")

# an antisymmetric kernel gives a centred difference instead
velocity = shift(parse_poly("1/2*X - 1/2*X^-1", 1, Q), signal)
print("\ncentred difference of the same signal:")
for k in sorted(velocity.support()):
    print(f"  k={k[0]:+d}: {Q.format_value(velocity.coeff(k))}")
