"""Mod-8 classification tables, computed from the built matrices.

Three tables are generated from first principles and never hard-coded:

  * metric table: the sign of eps^2 (equivalently the symmetry of eps)
    for both metric variants, per total dimension N;
  * commutation table: the single global sign s with gamma^T eps =
    s eps gamma over all basis vectors, per N and metric variant;
  * conjugation table: the symmetry of the conjugation operator per
    signature, which depends only on K - M mod 8.

The period-8 checker asserts row equality at keys eight apart over a
range of at least nine consecutive values.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .matrices import Matrix
from .representation import RepConfig, Signature, build_representation
from .scalars import ONE


@dataclass(frozen=True)
class MetricRow:
    N: int
    sq_standard: int
    sq_alternative: int

    @property
    def key(self):
        return self.N


@dataclass(frozen=True)
class CommutationRow:
    N: int
    sign_standard: int
    sign_alternative: int

    @property
    def key(self):
        return self.N


@dataclass(frozen=True)
class ConjugationRow:
    difference: int  # K - M
    signatures: tuple
    sym_standard: int
    sym_alternative: int

    @property
    def key(self):
        return self.difference


def _square_sign(m):
    s = (m @ m).scalar_multiple_of_identity()
    if s == ONE:
        return 1
    if s == -ONE:
        return -1
    raise AssertionError("matrix square is not +-identity")


def _symmetry_sign(m):
    if m.transpose() == m:
        return 1
    if m.transpose() == -m:
        return -1
    raise AssertionError("matrix is neither symmetric nor antisymmetric")


def _rep_for(n):
    return build_representation(RepConfig(Signature(spacelike=n)))


def metric_symmetry_table(n_max, n_min=1):
    """Sign of eps^2 per dimension; equals the symmetry sign of eps."""
    rows = []
    for n in range(n_min, n_max + 1):
        rep = _rep_for(n)
        sq_std = _square_sign(rep.eps_std)
        sq_alt = _square_sign(rep.eps_alt)
        if _symmetry_sign(rep.eps_std) != sq_std or _symmetry_sign(rep.eps_alt) != sq_alt:
            raise AssertionError("metric symmetry disagrees with its square")
        rows.append(MetricRow(n, sq_std, sq_alt))
    return rows


def commutation_sign(rep, eps):
    """The global sign s with gamma^T eps = s eps gamma for every vector."""
    sign = None
    for a in range(1, rep.N + 1):
        g = rep.gamma_spacelike_form(a)
        lhs = g.transpose() @ eps
        if lhs == eps @ g:
            s = 1
        elif lhs == -(eps @ g):
            s = -1
        else:
            raise AssertionError("vector transpose law has no uniform sign")
        if sign is None:
            sign = s
        elif sign != s:
            raise AssertionError("transpose sign differs between basis vectors")
    return sign


def gamma_commutation_table(n_max, n_min=1):
    rows = []
    for n in range(n_min, n_max + 1):
        rep = _rep_for(n)
        rows.append(
            CommutationRow(
                n,
                commutation_sign(rep, rep.eps_std),
                commutation_sign(rep, rep.eps_alt),
            )
        )
    return rows


def _conjugation_symmetry(spacelike, timelike, metric):
    rep = build_representation(
        RepConfig(Signature(spacelike=spacelike, timelike=timelike), metric=metric)
    )
    return _symmetry_sign(rep.C)


def conjugation_symmetry_table(d_min, d_max, samples_per_row=2):
    """Symmetry of the conjugation operator, keyed by K - M.

    Each row is computed for `samples_per_row` distinct signatures with
    the same difference and the agreement is asserted, so dependence on
    K - M alone is verified rather than assumed.
    """
    rows = []
    for d in range(d_min, d_max + 1):
        m0 = max(0, -d)
        if d + 2 * m0 < 1:
            m0 += 1
        sigs = tuple((d + m, m) for m in range(m0, m0 + samples_per_row))
        syms_std = [_conjugation_symmetry(k, m, "standard") for k, m in sigs]
        syms_alt = [_conjugation_symmetry(k, m, "alternative") for k, m in sigs]
        if len(set(syms_std)) != 1 or len(set(syms_alt)) != 1:
            raise AssertionError(
                f"conjugation symmetry is not constant across signatures with K-M={d}"
            )
        rows.append(ConjugationRow(d, sigs, syms_std[0], syms_alt[0]))
    return rows


def period8_check(rows):
    """Verify row(key) == row(key + 8) over the supplied rows.

    Requires at least nine consecutive keys; returns a report dict with
    any violations listed.
    """
    by_key = {r.key: r for r in rows}
    keys = sorted(by_key)
    if len(keys) < 9 or keys != list(range(keys[0], keys[0] + len(keys))):
        raise ValueError("period-8 check needs >= 9 consecutive keys")
    violations = []
    compared = 0
    for k in keys:
        if k + 8 not in by_key:
            continue
        compared += 1
        a, b = by_key[k], by_key[k + 8]
        da, db = asdict(a), asdict(b)
        for fieldname in da:
            if fieldname in ("N", "difference", "signatures"):
                continue
            if da[fieldname] != db[fieldname]:
                violations.append(
                    f"{fieldname} differs between keys {k} and {k + 8}: "
                    f"{da[fieldname]} vs {db[fieldname]}"
                )
    return {"pairs_compared": compared, "violations": violations, "ok": not violations}


# -- rendering -----------------------------------------------------------------


def _sign_char(s):
    return "+" if s > 0 else "-"


def render_markdown(rows, title, value_fields, key_name):
    """Paper-style layout: one column per key mod 8, verified periodic."""
    keys = sorted({r.key for r in rows})
    by_mod = {}
    for r in rows:
        by_mod.setdefault(r.key % 8, []).append(r)
    lines = [f"### {title}", ""]
    header = [f"{key_name} mod 8"] + [str(m) for m in range(8)]
    lines.append("| " + " | ".join(header) + " |")
    lines.append("|" + "---|" * len(header))
    for field_name, label in value_fields:
        cells = [label]
        for m in range(8):
            group = by_mod.get(m, [])
            values = {getattr(r, field_name) for r in group}
            if not group:
                cells.append("")
            elif len(values) == 1:
                cells.append(_sign_char(values.pop()))
            else:
                cells.append("!")  # aperiodic entry; should not happen
        lines.append("| " + " | ".join(cells) + " |")
    lines.append("")
    lines.append(f"({key_name} range {keys[0]}..{keys[-1]}, computed exactly)")
    return "\n".join(lines)


def render_csv(rows, value_fields, key_name):
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([key_name] + [f for f, _ in value_fields])
    for r in sorted(rows, key=lambda r: r.key):
        writer.writerow([r.key] + [getattr(r, f) for f, _ in value_fields])
    return buf.getvalue()


def rows_to_json(rows):
    return [asdict(r) for r in sorted(rows, key=lambda r: r.key)]

METRIC_FIELDS = (("sq_standard", "standard"), ("sq_alternative", "alternative"))
COMMUTATION_FIELDS = (("sign_standard", "standard"), ("sign_alternative", "alternative"))
CONJUGATION_FIELDS = (("sym_standard", "standard"), ("sym_alternative", "alternative"))
