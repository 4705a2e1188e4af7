"""Homogeneous spaces G/H, their isotropy modules and Einstein constants,
plus the TOML space-config reader.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .embeddings import EmbeddingError, EmbeddingSpec, restriction_from_defining
from .reductive import HDecomposition, SubalgebraSpec
from .rootsystem import InvalidLieType, LieType


class NotEinstein(ValueError):
    """Isotropy summands with different Casimir constants."""

    def __init__(self, values):
        self.values = values
        listing = ", ".join(f"{format_weight_key(w)}: {c}" for w, c in values)
        super().__init__(f"standard metric is not Einstein; Casimir values {listing}")


class ConfigError(ValueError):
    """Invalid space configuration, with the offending field path."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


@dataclass
class SpaceSpec:
    name: str
    g: LieType
    embedding: EmbeddingSpec
    family: str | None = None
    parameters: tuple = ()
    sphere: bool = False
    provenance: str = "tabulated"
    notes: str = ""
    expected_E: Fraction | None = None

    @property
    def h(self) -> SubalgebraSpec:
        return self.embedding.h


@dataclass
class EinsteinData:
    isotropy: HDecomposition
    common_casimir: Fraction
    einstein_constant: Fraction
    dim_m: int
    summands: list = field(default_factory=list)


def format_weight_key(w) -> str:
    return "(" + "; ".join(",".join(str(x) for x in part) for part in w) + ")"


def isotropy(space: SpaceSpec) -> HDecomposition:
    try:
        return dict(space.embedding.isotropy)
    except KeyError as exc:
        raise EmbeddingError(f"restricted adjoint module lacks {exc}") from None


_EINSTEIN_CACHE: dict = {}


def einstein_check(space: SpaceSpec) -> EinsteinData:
    """Common Casimir constant c of the isotropy summands and E = 1/4 + c/2."""
    emb = space.embedding
    hit = _EINSTEIN_CACHE.get(emb.key)
    if hit is not None:
        return hit
    m = isotropy(space)
    dim_m = emb.h.decomposition_dim(m)
    if dim_m != emb.g.dim - emb.h.dim:
        raise EmbeddingError(f"isotropy module has dimension {dim_m}, expected {emb.g.dim - emb.h.dim}")
    values = sorted(((w, emb.casimir_h(w)) for w in m), key=lambda t: (t[1], t[0]))
    distinct = {c for _, c in values}
    if len(distinct) != 1:
        raise NotEinstein(values)
    c = values[0][1]
    data = EinsteinData(m, c, Fraction(1, 4) + c / 2, dim_m, values)
    _EINSTEIN_CACHE[emb.key] = data
    return data


# ---------------------------------------------------------------------------
# config files

_TOP_KEYS = {"name", "family", "parameters", "sphere", "notes", "provenance", "g", "h"}
_G_KEYS = {"series", "rank"}
_H_KEYS = {"simple", "torus_rank", "defining", "restriction_matrix"}
_SIMPLE_KEYS = {"series", "rank", "defining"}
_DEFINING_KEYS = {"weights", "torus", "multiplicity"}


def _reject_unknown(table: dict, allowed: set, path: str):
    for key in table:
        if key not in allowed:
            raise ConfigError(f"{path}.{key}" if path else key, "unknown key")


def _require(table: dict, key: str, path: str):
    if key not in table:
        raise ConfigError(f"{path}.{key}" if path else key, "missing")
    return table[key]


def _int_list(value, path) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise ConfigError(path, "expected a list of integers")
    return list(value)


def _lie_type(table, path) -> LieType:
    if not isinstance(table, dict):
        raise ConfigError(path, "expected a table with series and rank")
    _reject_unknown(table, _G_KEYS | ({"defining"} if path.startswith("h.simple") else set()), path)
    series = _require(table, "series", path)
    rank = _require(table, "rank", path)
    if not isinstance(series, str) or not isinstance(rank, int):
        raise ConfigError(path, "series must be a string and rank an integer")
    try:
        return LieType(series.upper(), rank)
    except InvalidLieType as exc:
        raise ConfigError(path, str(exc)) from None


def space_from_dict(data: dict[str, Any]) -> SpaceSpec:
    _reject_unknown(data, _TOP_KEYS, "")
    name = _require(data, "name", "")
    if not isinstance(name, str) or not name:
        raise ConfigError("name", "expected a nonempty string")
    g = _lie_type(_require(data, "g", ""), "g")
    h_table = _require(data, "h", "")
    if not isinstance(h_table, dict):
        raise ConfigError("h", "expected a table")
    _reject_unknown(h_table, _H_KEYS, "h")
    simple_raw = h_table.get("simple", [])
    if not isinstance(simple_raw, list):
        raise ConfigError("h.simple", "expected a list of tables")
    simple = []
    per_component = []
    for i, entry in enumerate(simple_raw):
        path = f"h.simple[{i}]"
        if not isinstance(entry, dict):
            raise ConfigError(path, "expected a table")
        _reject_unknown(entry, _SIMPLE_KEYS, path)
        t = _lie_type({k: v for k, v in entry.items() if k != "defining"}, path)
        simple.append(t)
        defs = entry.get("defining", [])
        if not isinstance(defs, list):
            raise ConfigError(f"{path}.defining", "expected a list of weights")
        for j, w in enumerate(defs):
            w = _int_list(w, f"{path}.defining[{j}]")
            if len(w) != t.rank or min(w) < 0:
                raise ConfigError(f"{path}.defining[{j}]", f"not a dominant weight of {t}")
            per_component.append((i, w))
    torus = h_table.get("torus_rank", 0)
    if not isinstance(torus, int) or torus < 0:
        raise ConfigError("h.torus_rank", "expected a nonnegative integer")
    try:
        h = SubalgebraSpec(tuple(simple), torus)
    except ValueError as exc:
        raise ConfigError("h", str(exc)) from None
    if h.rank > g.rank:
        raise ConfigError("h", f"rank {h.rank} exceeds the rank of {g}")

    defining = []
    for i, w in per_component:
        parts = [tuple([0] * t.rank) for t in simple]
        parts[i] = tuple(w)
        defining.append((h.make(parts), 1))
    for j, entry in enumerate(h_table.get("defining", [])):
        path = f"h.defining[{j}]"
        if not isinstance(entry, dict):
            raise ConfigError(path, "expected a table with weights, torus, multiplicity")
        _reject_unknown(entry, _DEFINING_KEYS, path)
        weights = _require(entry, "weights", path)
        if not isinstance(weights, list) or len(weights) != len(simple):
            raise ConfigError(f"{path}.weights", f"expected {len(simple)} component weights")
        parts = [tuple(_int_list(w, f"{path}.weights[{k}]")) for k, w in enumerate(weights)]
        parts.append(tuple(_int_list(entry.get("torus", [0] * torus), f"{path}.torus")))
        mult = entry.get("multiplicity", 1)
        if not isinstance(mult, int) or mult < 1:
            raise ConfigError(f"{path}.multiplicity", "expected a positive integer")
        try:
            defining.append((h.make(parts), mult))
        except ValueError as exc:
            raise ConfigError(path, str(exc)) from None

    matrix = h_table.get("restriction_matrix")
    try:
        if matrix is not None:
            if defining:
                raise ConfigError("h", "give either defining modules or restriction_matrix")
            if not isinstance(matrix, list):
                raise ConfigError("h.restriction_matrix", "expected a list of rows")
            rows = [_int_list(r, f"h.restriction_matrix[{i}]") for i, r in enumerate(matrix)]
            emb = EmbeddingSpec(g, h, rows)
        elif defining:
            emb = restriction_from_defining(g, h, defining)
        else:
            raise ConfigError("h", "needs defining modules or restriction_matrix")
    except EmbeddingError as exc:
        raise ConfigError("h", str(exc)) from None

    params = data.get("parameters", [])
    sphere = data.get("sphere", False)
    if not isinstance(sphere, bool):
        raise ConfigError("sphere", "expected a boolean")
    return SpaceSpec(name=name, g=g, embedding=emb, family=data.get("family"),
                     parameters=tuple(_int_list(params, "parameters")), sphere=sphere,
                     provenance=str(data.get("provenance", "user")), notes=str(data.get("notes", "")))


def load_space(text: str) -> SpaceSpec:
    """Parse a TOML space config."""
    try:
        import tomllib
    except ModuleNotFoundError:  # Python < 3.11
        import tomli as tomllib
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError("", f"parse error: {exc}") from None
    return space_from_dict(data)
