"""Computable two-sided signals.

The space of all doubly-infinite Laurent series over Z^r has no finite
description, so this module offers the two subclasses every operation
in the package can actually evaluate:

* :class:`FiniteSeq`, signals with finite support (sparse map), and
* :class:`PeriodicSeq`, signals invariant under a full-rank period
  lattice, stored densely on the fundamental domain.

Monomials correspond to Kronecker deltas, which makes finite-support
signals and Laurent polynomials the same data seen from two sides;
:func:`poly_to_seq` and :func:`seq_to_poly` realize that identification
exactly.
"""

from __future__ import annotations

import itertools
import math
from types import MappingProxyType

from ._sparse import (
    add_terms,
    canonical_terms,
    coerce_value,
    exponent_tuple,
    neg_terms,
    require_same_context,
    scale_terms,
    terms_equal,
)
from .errors import (
    MixedFieldError,
    PeriodMismatchError,
    RankMismatchError,
    RepresentationMismatchError,
)
from .fields import FieldValue
from .laurent import LaurentPoly


class FiniteSeq:
    """Signal with finitely many nonzero samples, in canonical sparse form."""

    __slots__ = ("rank", "field", "_terms")

    def __init__(self, rank, field, terms=None):
        if not isinstance(rank, int) or rank < 1:
            raise ValueError(f"rank must be a positive int, got {rank!r}")
        self.rank = rank
        self.field = field
        self._terms = canonical_terms(rank, field, terms or {})

    @classmethod
    def _wrap(cls, rank, field, terms):
        obj = object.__new__(cls)
        obj.rank = rank
        obj.field = field
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, rank, field):
        return cls(rank, field)

    @classmethod
    def delta(cls, rank, field, alpha, value=None):
        """The Kronecker delta at ``alpha`` (scaled by ``value`` if given)."""
        return cls(rank, field, {tuple(alpha): field.one if value is None else value})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def coeff(self, alpha) -> FieldValue:
        a = exponent_tuple(alpha, self.rank)
        return self._terms.get(a, self.field.zero)

    def support(self):
        return frozenset(self._terms)

    def sorted_support(self):
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other):
        if not isinstance(other, FiniteSeq):
            if isinstance(other, PeriodicSeq):
                raise RepresentationMismatchError(
                    "cannot add a periodic signal to a finite-support signal"
                )
            return NotImplemented
        require_same_context(self, other)
        return FiniteSeq._wrap(
            self.rank, self.field, add_terms(self.field, self._terms, other._terms)
        )

    def __sub__(self, other):
        if not isinstance(other, FiniteSeq):
            if isinstance(other, PeriodicSeq):
                raise RepresentationMismatchError(
                    "cannot subtract a periodic signal from a finite-support signal"
                )
            return NotImplemented
        require_same_context(self, other)
        return FiniteSeq._wrap(
            self.rank,
            self.field,
            add_terms(self.field, self._terms, other._terms, negate_b=True),
        )

    def __neg__(self):
        return FiniteSeq._wrap(self.rank, self.field, neg_terms(self.field, self._terms))

    def __mul__(self, other):
        if isinstance(other, (FieldValue, int)):
            c = self.field.value(other)
            return FiniteSeq._wrap(
                self.rank, self.field, scale_terms(self.field, self._terms, c)
            )
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FiniteSeq):
            return NotImplemented
        if self.rank != other.rank or self.field != other.field:
            return False
        return terms_equal(self.field, self._terms, other._terms)

    __hash__ = None

    def __repr__(self):
        shown = {
            k: self.field.format_value(v) for k, v in sorted(self._terms.items())
        }
        return f"FiniteSeq(rank={self.rank}, field={self.field.spec()}, terms={shown})"


class PeriodicSeq:
    """Signal invariant under the lattice N_1 Z x ... x N_r Z.

    Samples are stored densely over the fundamental domain
    [0, N_1) x ... x [0, N_r) in row-major order, axis 1 slowest.
    """

    __slots__ = ("rank", "field", "periods", "values", "_strides")

    def __init__(self, rank, field, periods, values):
        if not isinstance(rank, int) or rank < 1:
            raise ValueError(f"rank must be a positive int, got {rank!r}")
        periods = tuple(periods)
        if len(periods) != rank:
            raise RankMismatchError(
                f"{len(periods)} periods given for rank {rank}"
            )
        for n in periods:
            if not isinstance(n, int) or n < 1:
                raise ValueError(f"periods must be ints >= 1, got {n!r}")
        size = math.prod(periods)
        vals = tuple(coerce_value(field, v) for v in values)
        if len(vals) != size:
            raise ValueError(
                f"{len(vals)} values given for a fundamental domain of size {size}"
            )
        self.rank = rank
        self.field = field
        self.periods = periods
        self.values = vals
        strides = [1] * rank
        for i in range(rank - 2, -1, -1):
            strides[i] = strides[i + 1] * periods[i + 1]
        self._strides = tuple(strides)

    @classmethod
    def zero(cls, rank, field, periods):
        return cls(rank, field, periods, [field.zero] * math.prod(tuple(periods)))

    def domain(self):
        """Fundamental-domain index tuples in storage order."""
        return itertools.product(*(range(n) for n in self.periods))

    def flat_index(self, alpha) -> int:
        a = exponent_tuple(alpha, self.rank)
        return sum(
            (x % n) * s for x, n, s in zip(a, self.periods, self._strides)
        )

    def coeff(self, alpha) -> FieldValue:
        return self.values[self.flat_index(alpha)]

    def is_zero(self) -> bool:
        return all(self.field.is_zero(v) for v in self.values)

    def _require_compatible(self, other):
        require_same_context(self, other)
        if self.periods != other.periods:
            raise PeriodMismatchError(
                f"periods {self.periods} do not match {other.periods}"
            )

    def __add__(self, other):
        if not isinstance(other, PeriodicSeq):
            if isinstance(other, FiniteSeq):
                raise RepresentationMismatchError(
                    "cannot add a finite-support signal to a periodic signal"
                )
            return NotImplemented
        self._require_compatible(other)
        f = self.field
        return PeriodicSeq(
            self.rank,
            f,
            self.periods,
            [f.add(a, b) for a, b in zip(self.values, other.values)],
        )

    def __sub__(self, other):
        if not isinstance(other, PeriodicSeq):
            if isinstance(other, FiniteSeq):
                raise RepresentationMismatchError(
                    "cannot subtract a finite-support signal from a periodic signal"
                )
            return NotImplemented
        self._require_compatible(other)
        f = self.field
        return PeriodicSeq(
            self.rank,
            f,
            self.periods,
            [f.sub(a, b) for a, b in zip(self.values, other.values)],
        )

    def __neg__(self):
        f = self.field
        return PeriodicSeq(self.rank, f, self.periods, [f.neg(v) for v in self.values])

    def __mul__(self, other):
        if isinstance(other, (FieldValue, int)):
            c = self.field.value(other)
            f = self.field
            return PeriodicSeq(
                self.rank, f, self.periods, [f.mul(c, v) for v in self.values]
            )
        return NotImplemented

    __rmul__ = __mul__

    def tile(self, factors) -> PeriodicSeq:
        """The same signal declared on the refined lattice ``periods * factors``."""
        factors = tuple(factors)
        if len(factors) != self.rank:
            raise RankMismatchError(f"{len(factors)} factors given for rank {self.rank}")
        for m in factors:
            if not isinstance(m, int) or m < 1:
                raise ValueError(f"tile factors must be ints >= 1, got {m!r}")
        new_periods = tuple(n * m for n, m in zip(self.periods, factors))
        out = PeriodicSeq.zero(self.rank, self.field, new_periods)
        values = [self.coeff(idx) for idx in out.domain()]
        return PeriodicSeq(self.rank, self.field, new_periods, values)

    def __eq__(self, other):
        if not isinstance(other, PeriodicSeq):
            return NotImplemented
        if (
            self.rank != other.rank
            or self.field != other.field
            or self.periods != other.periods
        ):
            return False
        return all(self.field.eq(a, b) for a, b in zip(self.values, other.values))

    __hash__ = None

    def __repr__(self):
        shown = [self.field.format_value(v) for v in self.values]
        return (
            f"PeriodicSeq(rank={self.rank}, field={self.field.spec()}, "
            f"periods={self.periods}, values={shown})"
        )


class SeqVector:
    """Fixed-length vector of signals sharing rank, field and representation."""

    __slots__ = ("components",)

    def __init__(self, components):
        comps = tuple(components)
        if not comps:
            raise ValueError("signal vector needs at least one component")
        first = comps[0]
        if not isinstance(first, (FiniteSeq, PeriodicSeq)):
            raise TypeError("components must be FiniteSeq or PeriodicSeq")
        for c in comps[1:]:
            if type(c) is not type(first):
                raise RepresentationMismatchError(
                    "all components must share one representation"
                )
            if c.rank != first.rank:
                raise RankMismatchError("components disagree on rank")
            if c.field != first.field:
                raise MixedFieldError("components disagree on field")
            if isinstance(first, PeriodicSeq) and c.periods != first.periods:
                raise PeriodMismatchError("components disagree on periods")
        self.components = comps

    @property
    def rank(self):
        return self.components[0].rank

    @property
    def field(self):
        return self.components[0].field

    @property
    def kind(self):
        return "periodic" if isinstance(self.components[0], PeriodicSeq) else "finite"

    @property
    def periods(self):
        c = self.components[0]
        return c.periods if isinstance(c, PeriodicSeq) else None

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def __eq__(self, other):
        if not isinstance(other, SeqVector):
            return NotImplemented
        return len(self) == len(other) and all(
            a == b for a, b in zip(self.components, other.components)
        )

    __hash__ = None

    def __repr__(self):
        return f"SeqVector({list(self.components)!r})"


def poly_to_seq(d: LaurentPoly) -> FiniteSeq:
    """Read a Laurent polynomial as the finite-support signal X^a -> delta_a."""
    return FiniteSeq._wrap(d.rank, d.field, dict(d.terms))


def seq_to_poly(w: FiniteSeq) -> LaurentPoly:
    """Inverse of :func:`poly_to_seq`; exact on every finite-support signal."""
    return LaurentPoly._wrap(w.rank, w.field, dict(w.terms))


def periodize(w: FiniteSeq, periods) -> PeriodicSeq:
    """Fold a finite-support signal onto a period lattice.

    Each fundamental-domain sample collects the (finite) sum of all
    samples of ``w`` congruent to it modulo the periods.
    """
    out = PeriodicSeq.zero(w.rank, w.field, tuple(periods))
    field = w.field
    acc = list(out.values)
    for alpha, v in w.terms.items():
        i = out.flat_index(alpha)
        acc[i] = field.add(acc[i], v)
    return PeriodicSeq(w.rank, field, out.periods, acc)
