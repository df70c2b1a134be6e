"""Tiny chain-expression language for the command line.

Tokens, separated by whitespace or juxtaposed:

    e[uud]     column basis spinor for the bitcode (u/d, or arrows)
    e[uud]'    the matching row spinor (metric-dressed)
    g[2]       chiral vector of plane 2
    g[2bar]    its barred partner
    g[+2]      orthonormal plus vector of plane 2
    g[-2]      orthonormal minus vector of plane 2

A sequence of tokens denotes the product chain, reduced left to right.
"""

from __future__ import annotations

import re

from .bitcodes import Bitcode
from .elements import Element, row_of, simplify_chain

_TOKEN = re.compile(r"e\[([^\]]+)\](')?|g\[([^\]]+)\]|(\S)")


def parse_chain(rep, text):
    """Parse a chain expression into a list of elements."""
    elements = []
    for match in _TOKEN.finditer(text):
        spinor_bits, primed, gamma_spec, stray = match.groups()
        if stray is not None:
            raise ValueError(f"unexpected character {stray!r} in chain expression")
        if spinor_bits is not None:
            code = Bitcode.from_string(spinor_bits)
            column = Element.basis_spinor(rep, code)
            elements.append(row_of(rep, column) if primed else column)
        else:
            elements.append(Element.multivector(rep, _gamma_token(rep, gamma_spec)))
    if not elements:
        raise ValueError("empty chain expression")
    return elements


def _gamma_token(rep, spec):
    spec = spec.strip()
    if spec.startswith("+"):
        return rep.gamma_plus(int(spec[1:]))
    if spec.startswith("-"):
        return rep.gamma_minus(int(spec[1:]))
    if spec.endswith("bar"):
        return rep.gamma_chiral(int(spec[:-3]), barred=True)
    return rep.gamma_chiral(int(spec))


def evaluate_chain(rep, text, forbidden_as_zero=False):
    return simplify_chain(parse_chain(rep, text), forbidden_as_zero=forbidden_as_zero)
