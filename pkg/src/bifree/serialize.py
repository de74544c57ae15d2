"""JSON encoding of scalars, series and two-band laws.

Exact scalars are written as rational strings (``"7/6"``, ``"3"``); float
scalars as JSON numbers, or ``[re, im]`` pairs when complex.  Output is
deterministic so that exact-mode files can be diffed byte for byte.
"""

import json
from fractions import Fraction

from .distributions import TwoBand
from .errors import PreconditionError
from .series import Series1, Series2

EXACT = "exact"
FLOAT = "float"


class InputFormatError(ValueError):
    """A JSON document does not have the expected shape."""


def scalar_to_json(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, complex):
        return x.real if x.imag == 0 else [x.real, x.imag]
    return x


def scalar_from_json(v, mode=EXACT):
    if isinstance(v, bool):
        raise InputFormatError(f"not a scalar: {v!r}")
    if isinstance(v, list):
        if len(v) != 2:
            raise InputFormatError(f"complex scalars are [re, im], got {v!r}")
        if mode == EXACT:
            raise InputFormatError("complex scalars need --mode float")
        return complex(float(v[0]), float(v[1]))
    try:
        if isinstance(v, str):
            q = Fraction(v.strip())
        elif isinstance(v, int):
            q = Fraction(v)
        elif isinstance(v, float):
            # shortest repr, so 0.1 reads as 1/10
            q = Fraction(repr(v))
        else:
            raise InputFormatError(f"not a scalar: {v!r}")
    except (ValueError, ZeroDivisionError) as exc:
        raise InputFormatError(f"not a scalar: {v!r}") from exc
    return q if mode == EXACT else float(q)


def series_to_json(f, kind=None):
    if isinstance(f, Series1):
        obj = {"vars": ["z"], "order": f.order,
               "coeffs": [scalar_to_json(x) for x in f]}
    elif isinstance(f, Series2):
        obj = {"vars": ["z", "w"], "order": f.order,
               "coeffs": [[scalar_to_json(x) for x in r] for r in f.coeffs]}
    else:
        raise TypeError("expected Series1 or Series2")
    if kind is not None:
        obj = {"kind": kind, **obj}
    return obj


def series_from_json(obj, mode=EXACT):
    try:
        names = obj["vars"]
        order = int(obj["order"])
        coeffs = obj["coeffs"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputFormatError(f"malformed series object: {exc}") from exc
    if names == ["z"]:
        return Series1([scalar_from_json(x, mode) for x in coeffs], order=order)
    if names == ["z", "w"]:
        return Series2([[scalar_from_json(x, mode) for x in r] for r in coeffs],
                       order=order)
    raise InputFormatError(f"unsupported vars {names!r}")


def twoband_to_json(d, **extra):
    return {**extra, "order": d.order,
            "moments": [[scalar_to_json(x) for x in r] for r in d.m]}


def table_to_json(table, **extra):
    return {**extra, "moments": [[scalar_to_json(x) for x in r] for r in table]}


def twoband_from_json(obj, mode=EXACT, order=None):
    """Parse a two-band law.

    Accepted shapes: ``{"order", "moments"}`` (a moment table at least
    ``(order+1) x (order+1)``; extra rows/columns are dropped),
    ``{"order", "atoms": [[x, y, w], ...]}`` and
    ``{"order", "factorizing": {"left": [...], "right": [...]}}``.
    ``order`` overrides the file's own order.
    """
    if not isinstance(obj, dict):
        raise InputFormatError("two-band document must be a JSON object")
    n = order if order is not None else obj.get("order")
    if "moments" in obj:
        rows = obj["moments"]
        if n is None:
            n = len(rows) - 1
        n = int(n)
        if len(rows) < n + 1 or any(len(r) < n + 1 for r in rows[: n + 1]):
            raise PreconditionError(f"moment table is smaller than order {n}")
        m = [[scalar_from_json(x, mode) for x in r[: n + 1]] for r in rows[: n + 1]]
        return TwoBand(m)
    if n is None:
        raise InputFormatError("'order' is required for parametric laws")
    n = int(n)
    if "atoms" in obj:
        atoms = [[scalar_from_json(v, mode) for v in a] for a in obj["atoms"]]
        if any(len(a) != 3 for a in atoms):
            raise InputFormatError("each atom is [x, y, weight]")
        return TwoBand.from_atoms(atoms, n)
    if "factorizing" in obj:
        fac = obj["factorizing"]
        left = [scalar_from_json(v, mode) for v in fac["left"]]
        right = [scalar_from_json(v, mode) for v in fac["right"]]
        if min(len(left), len(right)) < n + 1:
            raise PreconditionError(f"marginal lists are shorter than order {n}")
        return TwoBand.factorizing(left, right, n)
    raise InputFormatError("expected one of 'moments', 'atoms', 'factorizing'")


def dumps(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def load(path):
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputFormatError(f"{path}: {exc}") from exc
