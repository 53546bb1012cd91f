"""Bundled Seifert data for the genus-eight base knot of the default configuration.

The dataset ships the 16x16 Seifert matrix, the lift classes of the nine
infection curves (raw, in y-coordinates, and reduced to the four homology
generators), the dependent-generator reduction table, the rewritten condition
table, and the default companion profile. Everything is validated at load
time against facts that a correct transcription must satisfy, so a corrupted
data file fails loudly with the specific broken invariant.

The same JSON schema doubles as the infection-configuration format consumed
by the CLI, so alternate base knots can be swapped in.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .cover import Character, CoverPresentation, HomologyClass, double_cover_presentation
from .errors import InputError
from .infection import InfectionConfig, InfectionSite
from .intmatrix import IntMatrix, in_column_image
from .knots import SeifertKnot, parse_knot_expr


@dataclass(frozen=True)
class BaseKnotDataset:
    name: str
    seifert: SeifertKnot
    cover: CoverPresentation
    generators: tuple
    y_reduction: dict
    z_raw: dict
    z_reduced: dict
    condition_rewrite: dict
    modulus: int
    scale_c: int | None
    sites: tuple

    def infection_config(self, scale_c="default") -> InfectionConfig:
        if scale_c == "default":
            scale_c = self.scale_c
        return InfectionConfig(base=self.cover, sites=self.sites,
                               modulus=self.modulus, scale_c=scale_c)

    def generator_values(self, chi: Character) -> tuple:
        """The character's values on the homology generators, in listed order."""
        return tuple(chi.values[g] for g in self.generators)


def bundled_path():
    return resources.files("knotgenus").joinpath("data/base_knot.json")


def _as_vector(obj, n: int, what: str) -> tuple:
    if not isinstance(obj, (list, tuple)) or len(obj) != n:
        raise InputError(f"{what}: expected an integer vector of length {n}")
    return tuple(int(x) for x in obj)


def load_base_knot_dataset(path=None) -> BaseKnotDataset:
    """Load and validate a base-knot dataset (the bundled one by default)."""
    if path is None:
        raw = json.loads(bundled_path().read_text(encoding="utf-8"))
    else:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    return _build_dataset(raw)


@lru_cache(maxsize=1)
def bundled_dataset() -> BaseKnotDataset:
    return load_base_knot_dataset()


def _build_dataset(raw: dict) -> BaseKnotDataset:
    try:
        A = IntMatrix.from_json_obj(raw["seifert_matrix"])
    except KeyError as exc:
        raise InputError(f"dataset missing key {exc}") from exc
    n = A.rows

    expected = raw.get("expected", {})
    inter = (A - A.transpose()).det()
    want_det = int(expected.get("intersection_det", 1))
    if abs(inter) != want_det:
        raise InputError(
            f"dataset validation failed: |det(A - A^T)| = {abs(inter)}, expected {want_det}")

    seifert = SeifertKnot(A)
    cover = double_cover_presentation(seifert)
    if "invariant_factors" in expected:
        want = tuple(int(x) for x in expected["invariant_factors"])
        if cover.invariant_factors != want:
            raise InputError(
                "dataset validation failed: invariant factors "
                f"{cover.invariant_factors} != expected {want}")

    generators = tuple(int(g) for g in raw.get("generators", ()))
    rel = cover.relation_matrix

    def gen_lift(coeffs) -> list:
        v = [0] * n
        for g, c in zip(generators, coeffs):
            v[g] += int(c)
        return v

    y_reduction = {}
    for key, coeffs in raw.get("y_reduction", {}).items():
        i = int(key)
        coeffs = _as_vector(coeffs, len(generators), f"y_reduction[{key}]")
        diff = gen_lift(coeffs)
        diff[i] -= 1
        if not in_column_image(rel, diff):
            raise InputError(
                f"dataset validation failed: y_reduction row {i} does not hold "
                "in the cover homology")
        y_reduction[i] = coeffs

    z_raw = {}
    z_reduced = {}
    for label, vec in raw.get("z_raw", {}).items():
        z_raw[label] = HomologyClass(_as_vector(vec, n, f"z_raw[{label}]"))
    for label, coeffs in raw.get("z_reduced", {}).items():
        if label not in z_raw:
            raise InputError(f"z_reduced[{label}] has no matching raw vector")
        coeffs = _as_vector(coeffs, len(generators), f"z_reduced[{label}]")
        diff = gen_lift(coeffs)
        for k, c in enumerate(z_raw[label].coefficients):
            diff[k] -= c
        if not in_column_image(rel, diff):
            raise InputError(
                f"dataset validation failed: z_reduced[{label}] disagrees with "
                "the raw class in the cover homology")
        z_reduced[label] = coeffs

    condition_rewrite = {}
    for cname, alts in raw.get("condition_rewrite", {}).items():
        if cname == "comment":
            continue
        condition_rewrite[cname] = tuple(
            _as_vector(alt, len(generators), f"condition_rewrite[{cname}]")
            for alt in alts)

    modulus = int(raw.get("modulus", 9))
    scale_raw = raw.get("scale_c", "symbolic")
    scale_c = None if scale_raw == "symbolic" else int(scale_raw)

    sites = []
    for s in raw.get("sites", ()):
        z = _resolve_class(s["z"], z_raw, n, "z")
        zp = s.get("z_prime")
        zp = None if zp is None else _resolve_class(zp, z_raw, n, "z_prime")
        sites.append(InfectionSite(
            label=int(s["label"]),
            z=z,
            z_prime=zp,
            companion=parse_knot_expr(s["companion"]),
            copies_per_c=int(s.get("copies_per_c", 1)),
        ))

    return BaseKnotDataset(
        name=str(raw.get("name", "unnamed dataset")),
        seifert=seifert,
        cover=cover,
        generators=generators,
        y_reduction=y_reduction,
        z_raw=z_raw,
        z_reduced=z_reduced,
        condition_rewrite=condition_rewrite,
        modulus=modulus,
        scale_c=scale_c,
        sites=tuple(sites),
    )


def _resolve_class(ref, z_raw: dict, n: int, what: str) -> HomologyClass:
    if isinstance(ref, str):
        if ref not in z_raw:
            raise InputError(f"site {what} refers to unknown class {ref!r}")
        return z_raw[ref]
    return HomologyClass(_as_vector(ref, n, f"site {what}"))


def load_infection_config(path=None, scale_c="default") -> InfectionConfig:
    """Convenience: dataset file -> InfectionConfig (bundled file by default)."""
    ds = bundled_dataset() if path is None else load_base_knot_dataset(path)
    return ds.infection_config(scale_c=scale_c)
