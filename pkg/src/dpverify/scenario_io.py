"""JSON encodings of field elements, polynomials, points and linear maps."""

from __future__ import annotations

from fractions import Fraction

from .polyalg import MPoly, PolyRing


class SchemaError(ValueError):
    """A scenario document does not match the expected layout."""


def elem_to_json(x):
    return x.serialize()


def elem_from_json(v, field):
    if isinstance(v, bool):
        raise SchemaError(f"bad field element {v!r}")
    if isinstance(v, (int, str)):
        try:
            return field(Fraction(v))
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad rational {v!r}") from exc
    if isinstance(v, list):
        if len(v) > field.degree:
            raise SchemaError(f"too many power-basis coefficients in {v!r}")
        try:
            return field.from_coeffs([Fraction(c) for c in v])
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise SchemaError(f"bad coefficient list {v!r}") from exc
    raise SchemaError(f"bad field element {v!r}")


def poly_to_json(p: MPoly):
    from .polyalg import order_key
    key = order_key("grevlex", p.ring.weights)
    return [[p.terms[m].serialize(), list(m)] for m in sorted(p.terms, key=key, reverse=True)]


def poly_from_json(data, ring: PolyRing) -> MPoly:
    if not isinstance(data, list):
        raise SchemaError("polynomial must be a list of [coefficient, exponents]")
    terms = {}
    for item in data:
        if not isinstance(item, list) or len(item) != 2:
            raise SchemaError(f"bad polynomial term {item!r}")
        c, e = item
        if not isinstance(e, list) or len(e) != ring.nvars or not all(
                isinstance(x, int) and x >= 0 for x in e):
            raise SchemaError(f"bad exponent vector {e!r}")
        e = tuple(e)
        v = elem_from_json(c, ring.field)
        v = terms.get(e, ring.field.zero) + v
        if v:
            terms[e] = v
        else:
            terms.pop(e, None)
    return MPoly(ring, terms)


def point_to_json(p):
    return [c.serialize() for c in p.coords]


def point_from_json(data, field, weights):
    from .projspace import WProjPoint
    if not isinstance(data, list) or len(data) != len(weights):
        raise SchemaError(f"bad point {data!r}")
    return WProjPoint([elem_from_json(c, field) for c in data], weights, field)


def linmap_to_json(g):
    return g.serialize()


def linmap_from_json(data, field):
    from .projspace import WLinMap
    if not isinstance(data, dict) or "block" not in data:
        raise SchemaError(f"bad linear map {data!r}")
    blk = [[elem_from_json(x, field) for x in row] for row in data["block"]]
    n = len(blk)
    if any(len(r) != n for r in blk):
        raise SchemaError("linear map block must be square")
    heavy = [elem_from_json(h, field) for h in data.get("heavy", [])]
    return WLinMap(blk, heavy, field)
