"""Sparse multivariate Laurent polynomials and matrices over them.

A Laurent polynomial in ``r`` variables is a finite map from exponent
vectors in Z^r to nonzero field values.  Exponents may be negative, so
there is no natural dense layout; the sparse map is the representation
of record, with lexicographically sorted exponents used whenever a
deterministic order is needed.
"""

from __future__ import annotations

from types import MappingProxyType

from ._sparse import (
    add_terms,
    canonical_terms,
    exponent_tuple,
    neg_terms,
    require_same_context,
    scale_terms,
    terms_equal,
)
from .errors import MixedFieldError, RaggedMatrixError, RankMismatchError
from .fields import FieldValue


class LaurentPoly:
    """Element of F[X_1, X_1^-1, ..., X_r, X_r^-1] in canonical sparse form."""

    __slots__ = ("rank", "field", "_terms")

    def __init__(self, rank, field, terms=None):
        if not isinstance(rank, int) or rank < 1:
            raise ValueError(f"rank must be a positive int, got {rank!r}")
        self.rank = rank
        self.field = field
        self._terms = canonical_terms(rank, field, terms or {})

    @classmethod
    def _wrap(cls, rank, field, terms):
        # trusted constructor: terms already canonical
        obj = object.__new__(cls)
        obj.rank = rank
        obj.field = field
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, rank, field):
        return cls(rank, field)

    @classmethod
    def constant(cls, rank, field, value):
        return cls(rank, field, {(0,) * rank: value})

    @classmethod
    def one(cls, rank, field):
        return cls.constant(rank, field, field.one)

    @classmethod
    def monomial(cls, rank, field, alpha, value=None):
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
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        require_same_context(self, other)
        return LaurentPoly._wrap(
            self.rank, self.field, add_terms(self.field, self._terms, other._terms)
        )

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        require_same_context(self, other)
        return LaurentPoly._wrap(
            self.rank,
            self.field,
            add_terms(self.field, self._terms, other._terms, negate_b=True),
        )

    def __neg__(self):
        return LaurentPoly._wrap(self.rank, self.field, neg_terms(self.field, self._terms))

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            require_same_context(self, other)
            field = self.field
            acc = {}
            for a, ca in self._terms.items():
                for b, cb in other._terms.items():
                    k = tuple(x + y for x, y in zip(a, b))
                    p = field.mul(ca, cb)
                    cur = acc.get(k)
                    acc[k] = p if cur is None else field.add(cur, p)
            terms = {k: v for k, v in acc.items() if not field.is_zero(v)}
            return LaurentPoly._wrap(self.rank, field, terms)
        if isinstance(other, (FieldValue, int)):
            c = self.field.value(other)
            return LaurentPoly._wrap(
                self.rank, self.field, scale_terms(self.field, self._terms, c)
            )
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (FieldValue, int)):
            return self.__mul__(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.rank != other.rank or self.field != other.field:
            return False
        return terms_equal(self.field, self._terms, other._terms)

    __hash__ = None

    def __repr__(self):
        shown = {
            k: self.field.format_value(v) for k, v in sorted(self._terms.items())
        }
        return f"LaurentPoly(rank={self.rank}, field={self.field.spec()}, terms={shown})"

    def __str__(self):
        from .parsing import format_poly

        return format_poly(self)


class PolyMatrix:
    """Rectangular grid of Laurent polynomials sharing one rank and field."""

    __slots__ = ("rows", "cols", "rank", "field", "_entries")

    def __init__(self, entries):
        grid = tuple(tuple(row) for row in entries)
        if not grid or not grid[0]:
            raise RaggedMatrixError("matrix needs at least one row and one column")
        width = len(grid[0])
        for row in grid:
            if len(row) != width:
                raise RaggedMatrixError(
                    f"row of length {len(row)} in a matrix of width {width}"
                )
        first = grid[0][0]
        if not isinstance(first, LaurentPoly):
            raise TypeError("matrix entries must be LaurentPoly")
        for row in grid:
            for e in row:
                if not isinstance(e, LaurentPoly):
                    raise TypeError("matrix entries must be LaurentPoly")
                if e.rank != first.rank:
                    raise RankMismatchError("matrix entries disagree on rank")
                if e.field != first.field:
                    raise MixedFieldError("matrix entries disagree on field")
        self.rows = len(grid)
        self.cols = width
        self.rank = first.rank
        self.field = first.field
        self._entries = grid

    @property
    def entries(self):
        return self._entries

    def entry(self, i, j) -> LaurentPoly:
        return self._entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self._entries == other._entries

    __hash__ = None

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols}, rank={self.rank}, field={self.field.spec()})"
