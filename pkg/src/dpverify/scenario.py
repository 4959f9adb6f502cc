"""Scenario documents: a surface, its group data, named points and maps, pencils,
auxiliary models and the list of claims to verify."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dfield
from importlib import resources
from pathlib import Path

from .delpezzo import DelPezzoSurface
from .exactalg import field_from_descriptor
from .gaction import ClosureBoundExceeded, ProjGroup
from .polyalg import PolyRing
from .projspace import RationalMap
from .scenario_io import (SchemaError, linmap_from_json, point_from_json, poly_from_json)

CLAIM_KINDS = (
    "smoothness", "generator-preserves", "group-order", "fixed-locus", "orbit-table",
    "eckardt", "line-count", "conic-pair", "tangent-condition", "bitangent",
    "involution-identity", "equivariance", "translation", "nontorsion",
    "normalizer-order", "normalizer-fingerprint", "base-locus-admissible-count",
)

NAMES = ("t0", "t1", "t2", "t3")


def weights_for(degree: int):
    if degree == 3:
        return (1, 1, 1, 1)
    if degree == 2:
        return (1, 1, 1, 2)
    raise SchemaError(f"unsupported degree {degree!r}")


def _require(doc, key, where):
    if key not in doc:
        raise SchemaError(f"{where}: missing key {key!r}")
    return doc[key]


@dataclass
class Model:
    """A second coordinate model (own field and equation) carrying extra groups."""
    name: str
    field: object
    ring: PolyRing
    degree: int
    F: object
    surface: DelPezzoSurface
    groups: dict


@dataclass
class SurfaceScenario:
    type_id: str
    label: str
    degree: int
    field: object
    ring: PolyRing
    parameters: dict
    F: object
    surface: DelPezzoSurface
    generators: list
    ambient_generators: list
    points: dict
    maps: dict
    pencils: dict
    models: dict
    claims: list
    document: dict = dfield(repr=False)
    _groups: dict = dfield(default_factory=dict, repr=False)

    @property
    def weights(self):
        return self.ring.weights

    def group(self, ref: str) -> ProjGroup:
        """Group by reference: "G", "Aut" or "model:NAME:GROUP"."""
        if ref not in self._groups:
            gens = self.group_generators(ref)
            try:
                self._groups[ref] = ProjGroup(gens) if gens else None
            except ClosureBoundExceeded as exc:
                # remembered so later claims on the same group fail fast
                self._groups[ref] = exc
        g = self._groups[ref]
        if isinstance(g, ClosureBoundExceeded):
            raise g
        if g is None:
            raise SchemaError(f"group {ref!r} has no generators")
        return g

    def group_generators(self, ref: str) -> list:
        if ref == "G":
            return self.generators
        if ref == "Aut":
            return self.ambient_generators
        if ref.startswith("model:"):
            _, mname, gname = ref.split(":", 2)
            try:
                return self.models[mname].groups[gname]
            except KeyError:
                raise SchemaError(f"unknown group reference {ref!r}") from None
        raise SchemaError(f"unknown group reference {ref!r}")

    def surface_for(self, ref: str) -> DelPezzoSurface:
        if ref.startswith("model:"):
            return self.models[ref.split(":")[1]].surface
        return self.surface

    def point(self, name: str):
        try:
            return self.points[name]
        except KeyError:
            raise SchemaError(f"unknown point {name!r}") from None

    def map(self, name: str) -> RationalMap:
        try:
            return self.maps[name]
        except KeyError:
            raise SchemaError(f"unknown map {name!r}") from None


def _parse_model(name, doc) -> Model:
    where = f"model {name!r}"
    field = field_from_descriptor(_require(doc, "field", where))
    degree = _require(doc, "degree", where)
    ring = PolyRing(field, NAMES, weights_for(degree))
    F = poly_from_json(_require(doc, "surface", where), ring)
    S = DelPezzoSurface(F, check_smooth=False)
    groups = {g: [linmap_from_json(m, field) for m in gens]
              for g, gens in doc.get("groups", {}).items()}
    return Model(name, field, ring, degree, F, S, groups)


def load_document(doc: dict) -> SurfaceScenario:
    """Parse a scenario document.  Smoothness and invariance are left to the claims."""
    if not isinstance(doc, dict):
        raise SchemaError("scenario must be a JSON object")
    type_id = _require(doc, "type_id", "scenario")
    where = f"scenario {type_id!r}"
    try:
        field = field_from_descriptor(_require(doc, "field", where))
    except (KeyError, ValueError, TypeError) as exc:
        raise SchemaError(f"{where}: bad field descriptor") from exc
    degree = doc.get("degree", 3)
    ring = PolyRing(field, NAMES, weights_for(degree))
    F = poly_from_json(_require(doc, "surface", where), ring)
    try:
        S = DelPezzoSurface(F, check_smooth=False)
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc
    gens = [linmap_from_json(g, field) for g in _require(doc, "generators", where)]
    amb = [linmap_from_json(g, field) for g in doc.get("ambient_generators", [])]
    for g in gens + amb:
        if len(g.block) + len(g.heavy) != 4 or g.weights != ring.weights:
            raise SchemaError(f"{where}: generator does not match the ambient weights")
    points = {k: point_from_json(v, field, ring.weights) for k, v in doc.get("points", {}).items()}
    maps = {}
    for k, comps in doc.get("maps", {}).items():
        if not isinstance(comps, list) or len(comps) != 4:
            raise SchemaError(f"{where}: map {k!r} needs four components")
        maps[k] = RationalMap([poly_from_json(c, ring) for c in comps])
    pencils = dict(doc.get("pencils", {}))
    models = {k: _parse_model(k, v) for k, v in doc.get("models", {}).items()}
    claims = _require(doc, "claims", where)
    if not isinstance(claims, list):
        raise SchemaError(f"{where}: claims must be a list")
    for n, c in enumerate(claims):
        if not isinstance(c, dict) or "kind" not in c:
            raise SchemaError(f"{where}: claim {n} has no kind")
        if c["kind"] not in CLAIM_KINDS:
            raise SchemaError(f"{where}: claim {n} has unknown kind {c['kind']!r}")
        if "expected" not in c:
            raise SchemaError(f"{where}: claim {n} has no expected value")
    return SurfaceScenario(type_id=type_id, label=doc.get("label", type_id), degree=degree,
                           field=field, ring=ring, parameters=dict(doc.get("parameters", {})),
                           F=F, surface=S, generators=gens, ambient_generators=amb,
                           points=points, maps=maps, pencils=pencils, models=models,
                           claims=claims, document=doc)


def load_path(path) -> SurfaceScenario:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}:{exc.lineno}: {exc.msg}") from exc
    try:
        return load_document(doc)
    except SchemaError as exc:
        raise SchemaError(f"{path}: {exc}") from exc


def shipped_scenarios() -> list:
    """Paths of the scenario files bundled with the package, in file-name order."""
    base = resources.files("dpverify") / "scenarios"
    return sorted((p for p in base.iterdir() if p.name.endswith(".json")), key=lambda p: p.name)


def file_stem(type_id: str) -> str:
    """File name used for a type id: E6(a1) -> E6a1, A1^7 -> A1_7, 2A3+A1 -> 2A3A1."""
    return (type_id.replace("(", "").replace(")", "").replace("^", "_")
            .replace("+", ""))
