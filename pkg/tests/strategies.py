"""Hypothesis strategies for the algebraic property tests."""

import hypothesis.strategies as st

from bishift.fields import PrimeField, RationalField
from bishift.laurent import LaurentPoly
from bishift.sequences import FiniteSeq

EXACT_FIELDS = [RationalField(), PrimeField(2), PrimeField(7)]

exact_fields = st.sampled_from(EXACT_FIELDS)


def exponents(rank, span=4):
    return st.tuples(*([st.integers(-span, span)] * rank))


def payloads(field):
    if isinstance(field, PrimeField):
        return st.integers(0, field.p - 1)
    return st.fractions(min_value=-5, max_value=5, max_denominator=9)


def term_maps(rank, field, max_size=6, span=4):
    return st.dictionaries(exponents(rank, span), payloads(field), max_size=max_size)


@st.composite
def poly_triples(draw, max_rank=3):
    rank = draw(st.integers(1, max_rank))
    field = draw(exact_fields)
    terms = term_maps(rank, field)
    return (
        LaurentPoly(rank, field, draw(terms)),
        LaurentPoly(rank, field, draw(terms)),
        LaurentPoly(rank, field, draw(terms)),
    )


@st.composite
def poly_with_seq(draw, max_rank=3):
    rank = draw(st.integers(1, max_rank))
    field = draw(exact_fields)
    d = LaurentPoly(rank, field, draw(term_maps(rank, field)))
    w = FiniteSeq(rank, field, draw(term_maps(rank, field)))
    return d, w


@st.composite
def single_polys(draw, max_rank=3):
    rank = draw(st.integers(1, max_rank))
    field = draw(exact_fields)
    return LaurentPoly(rank, field, draw(term_maps(rank, field)))
