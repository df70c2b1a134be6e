"""Basis blades and the spinor-outer-product <-> multivector dictionary.

Chiral basis blades are wedges of the 2n chiral generators taken in the
canonical order g_1 < g_1bar < g_2 < ... ; orthonormal blades are wedges
of distinct orthonormal axes.  Because factors from different planes
anticommute with vanishing dot products, a canonical chiral blade
factorises into a matrix product of per-plane factors, the paired factor
being g_k g_kbar - 1.

The two directions of the dictionary are:

  * every matrix decomposes exactly over basis blades, the coefficient of
    a blade being trace(raised_blade @ m) / 2**n;
  * every matrix decomposes exactly over the basis outer products
    e_a e_b., each of which has a single nonzero entry, so that direction
    is a direct read-off against the metric's sign pattern.

Raising a blade bars every chiral index (k <-> kbar), applies the metric
sign to orthonormal indices, and reverses the factor order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bitcodes import Bitcode, all_bitcodes
from .elements import outer_product, row_of
from .matrices import Matrix
from .scalars import HALF, ONE, Scalar, ZERO

CHIRAL = "chiral"
ORTHONORMAL = "orthonormal"


@dataclass(frozen=True)
class BladeIndex:
    """Canonically ordered multi-index of distinct generators."""

    kind: str
    factors: tuple  # chiral: ((k, barred), ...); orthonormal: (axis, ...)

    def __post_init__(self):
        if self.kind not in (CHIRAL, ORTHONORMAL):
            raise ValueError(f"unknown blade kind {self.kind!r}")
        if len(set(self.factors)) != len(self.factors):
            raise ValueError("repeated generator in blade index")
        if tuple(sorted(self.factors, key=_factor_key)) != self.factors:
            raise ValueError("blade index not in canonical order")

    @property
    def grade(self):
        return len(self.factors)

    def reversal_sign(self):
        return -1 if (self.grade // 2) % 2 else 1

    def label(self):
        if not self.factors:
            return "unit"
        if self.kind == CHIRAL:
            return "^".join(f"g{k}bar" if barred else f"g{k}" for k, barred in self.factors)
        return "^".join(f"e{a}" for a in self.factors)

    def k_charge(self, k):
        """Net charge of plane k: +1 per unbarred k index, -1 per barred."""
        if self.kind != CHIRAL:
            return 0
        charge = 0
        for kk, barred in self.factors:
            if kk == k:
                charge += -1 if barred else 1
        return charge


def _factor_key(f):
    return f


def chiral_blade(factors):
    canon, sign = canonicalize(factors)
    if sign != 1:
        raise ValueError("factors not in canonical order; use canonicalize()")
    return BladeIndex(CHIRAL, canon)


def canonicalize(factors):
    """Sort generator factors, tracking the permutation sign."""
    items = list(factors)
    sign = 1
    for i in range(1, len(items)):
        j = i
        while j > 0 and _factor_key(items[j - 1]) > _factor_key(items[j]):
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(items, items[1:]):
        if a == b:
            raise ValueError("repeated generator in blade")
    return tuple(items), sign


def all_chiral_blades(rep):
    """All 4**n basis blades over the representation's chiral generators."""
    gens = []
    for k in range(1, rep.n_bits + 1):
        gens.append((k, False))
        gens.append((k, True))
    blades = []
    for p in range(len(gens) + 1):
        for combo in combinations(gens, p):
            blades.append(BladeIndex(CHIRAL, combo))
    return blades


def blade_matrix(rep, blade):
    """Exact matrix of a canonical basis blade."""
    cached = rep._blade_cache.get(blade)
    if cached is not None:
        return cached
    if blade.kind == CHIRAL:
        m = _chiral_blade_matrix(rep, blade)
    else:
        m = Matrix.identity(rep.dim)
        for axis in blade.factors:
            m = m @ rep.gamma(axis)
    rep._blade_cache[blade] = m
    return m


def _plane_factor(rep, k, flags):
    if len(flags) == 2:
        g = rep.gamma_chiral(k)
        gb = rep.gamma_chiral(k, barred=True)
        return g @ gb - Matrix.identity(rep.dim)  # the paired wedge
    return rep.gamma_chiral(k, barred=flags[0])


def _chiral_blade_matrix(rep, blade):
    # peel off the last plane so prefixes are shared through the cache
    per_plane = {}
    for k, barred in blade.factors:
        per_plane.setdefault(k, []).append(barred)
    if not per_plane:
        return Matrix.identity(rep.dim)
    last = max(per_plane)
    prefix_factors = tuple(f for f in blade.factors if f[0] != last)
    prefix = blade_matrix(rep, BladeIndex(CHIRAL, prefix_factors))
    return prefix @ _plane_factor(rep, last, per_plane[last])


def raised_blade_matrix(rep, blade):
    """Matrix of the index-raised blade (bar, metric signs, reversed order)."""
    cached = rep._raised_cache.get(blade)
    if cached is not None:
        return cached
    if blade.kind == CHIRAL:
        barred = [(k, not b) for k, b in blade.factors]
        canon, sign = canonicalize(barred)
        m = blade_matrix(rep, BladeIndex(CHIRAL, canon))
        s = sign * blade.reversal_sign()
    else:
        m = blade_matrix(rep, blade)
        s = blade.reversal_sign()
        for axis in blade.factors:
            if rep.signature.is_timelike(axis):
                s = -s
    out = m.scale(Scalar(s)) if s != 1 else m
    rep._raised_cache[blade] = out
    return out


# -- outer-product basis ------------------------------------------------------


def metric_column_map(rep):
    """For each bitcode b, the (column, sign) of the single nonzero of e_b. ."""
    if rep._colmap is not None:
        return rep._colmap
    out = {}
    for b in all_bitcodes(rep.n_bits):
        row = rep.eps.rows[b.index()]
        hits = [(j, s) for j, s in enumerate(row) if not s.is_zero()]
        if len(hits) != 1:
            raise AssertionError("metric row is not a signed unit row")
        out[b] = hits[0]
    rep._colmap = out
    return out


def spinor_outer_decompose(rep, m):
    """Coefficients c[(a, b)] with m = sum c * e_a e_b. ; exact read-off."""
    if m.nrows != rep.dim or m.ncols != rep.dim:
        raise ValueError("matrix dimension does not match the representation")
    colmap = metric_column_map(rep)
    by_column = {col: (b, sign) for b, (col, sign) in colmap.items()}
    out = {}
    for i, j, value in m.nonzero_items():
        a = rep.bitcode_of_index(i)
        b, sign = by_column[j]
        out[(a, b)] = value * sign
    return out


def outer_basis_matrix(rep, a, b):
    """The matrix e_a e_b. (single nonzero entry)."""
    return outer_product(rep, rep.basis_spinor(a), rep.basis_spinor(b)).payload


def reconstruct_from_outer(rep, coeffs):
    # each e_a e_b. has one nonzero entry, so accumulate by position
    colmap = metric_column_map(rep)
    grid = [[ZERO] * rep.dim for _ in range(rep.dim)]
    for (a, b), c in coeffs.items():
        j, sign = colmap[b]
        i = rep.spinor_index(a)
        grid[i][j] = grid[i][j] + c * sign
    return Matrix(grid)


# -- blade decomposition ------------------------------------------------------


def blade_coefficient(rep, blade, m):
    """Coefficient of a basis blade in m: trace(raised_blade @ m) / 2**n."""
    raised = raised_blade_matrix(rep, blade)
    acc = ZERO
    for i, j, v in m.nonzero_items():
        r = raised.rows[j][i]
        if not r.is_zero():
            acc = acc + r * v
    return acc * rep.inv_dim


def _candidate_blades(rep, m):
    """Blades whose support pattern can meet the nonzero entries of m.

    Per plane k the entry pattern (row bit, column bit) admits: the
    unbarred generator for up<-down, the barred one for down<-up, and
    either nothing or the full pair on the diagonal.
    """
    n = rep.n_bits
    seen = set()
    out = []
    for i, j, _ in m.nonzero_items():
        a = rep.bitcode_of_index(i)
        b = rep.bitcode_of_index(j)
        choices = []
        for k in range(1, n + 1):
            ra, rb = a.bit(k), b.bit(k)
            if ra and not rb:
                choices.append((((k, False),),))
            elif rb and not ra:
                choices.append((((k, True),),))
            else:
                choices.append(((), ((k, False), (k, True))))
        stack = [()]
        for opts in choices:
            stack = [acc + opt for acc in stack for opt in opts]
        for factors in stack:
            blade = BladeIndex(CHIRAL, factors)
            if blade not in seen:
                seen.add(blade)
                out.append(blade)
    return out


def decompose_multivector(rep, m, all_blades=False):
    """Exact blade coefficients of a square matrix.

    Covers the 2**(2n) chiral basis blades of the built even algebra; for
    odd dimension in project mode that is the quotient basis with the
    chiral operator identified with one.
    """
    if m.nrows != rep.dim or m.ncols != rep.dim:
        raise ValueError("matrix dimension does not match the representation")
    blades = all_chiral_blades(rep) if all_blades else _candidate_blades(rep, m)
    out = {}
    for blade in blades:
        c = blade_coefficient(rep, blade, m)
        if not c.is_zero():
            out[blade] = c
    return out


def reconstruct_from_blades(rep, coeffs):
    grid = [[ZERO] * rep.dim for _ in range(rep.dim)]
    for blade, c in coeffs.items():
        for i, j, v in blade_matrix(rep, blade).nonzero_items():
            grid[i][j] = grid[i][j] + c * v
    return Matrix(grid)


def gamma_coefficients(rep, blade, a, b):
    """The paired expansion coefficients between outer products and blades.

    Returns (upper, lower): upper is the blade coefficient of e_a e_b.,
    lower the (a, b) outer coefficient of the blade, fixed by

        upper = row(e_b) @ raised_blade @ e_a / 2**n
        lower = sign(eps^2) * row(raised e_a) @ blade @ raised e_b
    """
    eps_sign = Scalar(rep.metric_square_sign)
    ea = rep.basis_spinor(a)
    eb = rep.basis_spinor(b)
    raised = raised_blade_matrix(rep, blade)
    upper = (row_of(rep, eb).payload @ (raised @ ea))[0, 0] * Scalar(
        1, 0, 0, 0, rep.dim
    )
    ra = rep.eps @ ea
    rb = rep.eps @ eb
    lower = eps_sign * ((ra.transpose() @ rep.eps) @ (blade_matrix(rep, blade) @ rb))[
        0, 0
    ]
    return upper, lower


def trace_outer(rep, x):
    """Trace of an outer product; equals the scalar product psi . chi."""
    m = x.payload if hasattr(x, "payload") else x
    return m.trace()


# -- chirality -----------------------------------------------------------------


def chiral_projector(rep, handedness):
    """(1 +- kappa)/2; right-handed is the + sign."""
    if rep.is_odd and rep.odd_mode == "project":
        raise ValueError(
            "chirality projectors need an even representation or an embedded odd one"
        )
    sign = ONE if handedness in ("right", "R", "+", 1) else -ONE
    ident = Matrix.identity(rep.dim)
    return (ident + rep.kappa.scale(sign)).scale(HALF)


def chiral_project(rep, m, handedness):
    return chiral_projector(rep, handedness) @ m


def verify_isomorphism(rep):
    """Round-trip every basis blade and every basis outer product.

    Returns {"dim", "blades_checked", "outer_checked", "failures": [...]}.
    """
    failures = []
    blades = all_chiral_blades(rep)
    for blade in blades:
        m = blade_matrix(rep, blade)
        coeffs = spinor_outer_decompose(rep, m)
        if reconstruct_from_outer(rep, coeffs) != m:
            failures.append(f"blade {blade.label()} failed the outer round trip")
    codes = all_bitcodes(rep.n_bits)
    outer_count = 0
    for a in codes:
        for b in codes:
            outer_count += 1
            m = outer_basis_matrix(rep, a, b)
            coeffs = decompose_multivector(rep, m)
            if reconstruct_from_blades(rep, coeffs) != m:
                failures.append(f"outer product ({a}, {b}) failed the blade round trip")
    return {
        "dim": rep.dim,
        "blades_checked": len(blades),
        "outer_checked": outer_count,
        "failures": failures,
    }
