"""The pairing between operator kernels and signals, and the shift action.

The pairing of a Laurent polynomial d with a signal W is the finite sum
of d_a * W_a over the support of d.  The shift action of d on W is

    (d o W)_b = sum over a of d_a * W_(a+b)

which reads future as well as past samples (the index is a + b, not
a - b; the action is correlation-flavoured, and the sign convention is
load-bearing: it is exactly what makes the shift the adjoint of
multiplication under the pairing).
"""

from __future__ import annotations

from ._sparse import require_same_context
from .errors import DimensionMismatchError
from .fields import FieldValue
from .laurent import LaurentPoly, PolyMatrix
from .sequences import FiniteSeq, PeriodicSeq, SeqVector


def scalar_product(d: LaurentPoly, w) -> FieldValue:
    """Pairing <d, W> = sum of d_a * W_a; finite because d has finite support."""
    if not isinstance(d, LaurentPoly):
        raise TypeError("first pairing argument must be a LaurentPoly")
    if not isinstance(w, (FiniteSeq, PeriodicSeq)):
        raise TypeError("second pairing argument must be a signal")
    require_same_context(d, w)
    field = d.field
    total = field.zero
    for alpha, c in d.terms.items():
        total = field.add(total, field.mul(c, w.coeff(alpha)))
    return total


def _shift_finite(d: LaurentPoly, w: FiniteSeq) -> FiniteSeq:
    field = d.field
    acc = {}
    for alpha, da in d.terms.items():
        for idx, wv in w.terms.items():
            beta = tuple(x - y for x, y in zip(idx, alpha))
            p = field.mul(da, wv)
            cur = acc.get(beta)
            acc[beta] = p if cur is None else field.add(cur, p)
    terms = {k: v for k, v in acc.items() if not field.is_zero(v)}
    return FiniteSeq._wrap(w.rank, field, terms)


def _shift_periodic(d: LaurentPoly, w: PeriodicSeq) -> PeriodicSeq:
    field = d.field
    values = []
    for beta in w.domain():
        s = field.zero
        for alpha, da in d.terms.items():
            idx = tuple(a + b for a, b in zip(alpha, beta))
            s = field.add(s, field.mul(da, w.coeff(idx)))
        values.append(s)
    return PeriodicSeq(w.rank, field, w.periods, values)


def shift(d: LaurentPoly, w):
    """Apply the shift operator of ``d`` to a signal.

    Finite-support signals stay finite-support (the result lives inside
    the Minkowski difference supp(W) - supp(d)); periodic signals keep
    their period lattice.
    """
    if not isinstance(d, LaurentPoly):
        raise TypeError("shift kernel must be a LaurentPoly")
    require_same_context(d, w)
    if isinstance(w, FiniteSeq):
        return _shift_finite(d, w)
    if isinstance(w, PeriodicSeq):
        return _shift_periodic(d, w)
    raise TypeError(f"cannot shift a {type(w).__name__}")


def shift_matrix(r: PolyMatrix, w: SeqVector) -> SeqVector:
    """Componentwise matrix action: row i yields sum_j of R_ij applied to W_j."""
    if not isinstance(r, PolyMatrix):
        raise TypeError("expected a PolyMatrix")
    if not isinstance(w, SeqVector):
        raise TypeError("expected a SeqVector")
    if r.cols != len(w):
        raise DimensionMismatchError(
            f"matrix has {r.cols} columns but the signal vector has {len(w)}"
        )
    out = []
    for i in range(r.rows):
        if w.kind == "periodic":
            row_sum = PeriodicSeq.zero(w.rank, w.field, w.periods)
        else:
            row_sum = FiniteSeq.zero(w.rank, w.field)
        for j in range(r.cols):
            row_sum = row_sum + shift(r.entry(i, j), w[j])
        out.append(row_sum)
    return SeqVector(out)


def check_adjoint(c: LaurentPoly, d: LaurentPoly, w) -> bool:
    """Whether <c * d, W> equals <c, d o W>.

    The two sides go through disjoint code paths (polynomial product
    versus shift), so this is a meaningful consistency check rather than
    a tautology.
    """
    lhs = scalar_product(c * d, w)
    rhs = scalar_product(c, shift(d, w))
    return c.field.eq(lhs, rhs)
