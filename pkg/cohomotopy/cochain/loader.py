# cohomotopy\cohomotopy\cochain\loader.py

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from ..algebra import IntegerMatrix, PresentedAbelianGroup
from ..errors import CohomotopyError, ParseError, RangeError
from ..utils.config import EngineConstants, SchemaConstants
from .datum import MAP_TYPES, CohomologyDatum, HomologyData, OperationOverrides, StructureTag
from .ring import RingGenerator, RingPresentation, ingest_ring
from .wu import derive_wu_actions

logger = logging.getLogger(__name__)

OVERRIDE_KEYS = {
    "thetaImage": "theta_image",
    "thetaTrivial": "theta_trivial",
    "thetaTrivialN": "theta_trivial_n",
    "thetaKernelN": "theta_kernel_n",
    "phiTrivial": "phi_trivial",
    "phiImage": "phi_image",
    "tTrivial": "t_trivial",
    "threePrimaryEpsilon": "three_primary_epsilon",
}


# Field readers

def _require(data: dict, key: str, kind: type, field: str):
    if key not in data:
        raise ParseError(f"Missing required key '{key}'", field=field)
    return _typed(data[key], kind, f"{field}.{key}" if field else key)


def _typed(value, kind: type, field: str):
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise ParseError(f"Expected an integer, got {value!r}", field=field)
    if kind is not int and not isinstance(value, kind):
        raise ParseError(f"Expected {kind.__name__}, got {type(value).__name__}", field=field)
    return value


def _tri_state(value, field: str) -> Optional[bool]:
    if value is None or isinstance(value, bool):
        return value
    raise ParseError(f"Expected true, false or null, got {value!r}", field=field)


def _degree(key: str, field: str) -> int:
    try:
        return int(key)
    except ValueError:
        raise ParseError(f"Degree key '{key}' is not an integer", field=field) from None


def _vector(value, field: str) -> Tuple[int, ...]:
    _typed(value, list, field)
    return tuple(_typed(x, int, field) for x in value)


def _vectors(value, field: str) -> List[Tuple[int, ...]]:
    _typed(value, list, field)
    return [_vector(v, f"{field}[{k}]") for k, v in enumerate(value)]


def parse_matrix(rows: Any, shape: Tuple[int, int], field: str) -> IntegerMatrix:
    """Row-major integer matrix with the expected (rows, cols)."""
    _typed(rows, list, field)
    r, c = shape
    if c == 0 and len(rows) in (0, r) and all(row == [] for row in rows):
        return IntegerMatrix.zeros(r, c)
    if len(rows) != r:
        raise ParseError(f"Expected {r} rows, got {len(rows)}", field=field)
    for k, row in enumerate(rows):
        _typed(row, list, field)
        if len(row) != c:
            raise ParseError(f"Row {k} has {len(row)} entries, expected {c}", field=field)
        for x in row:
            _typed(x, int, field)
    return IntegerMatrix(r, c, rows)


def parse_group(spec: Any, field: str, prefix: str = "g") -> PresentedAbelianGroup:
    """{"free": r, "torsion": [...]} or {"generators": [...], "relations": [[...]]}."""
    _typed(spec, dict, field)
    if "generators" in spec:
        names = [str(x) for x in _typed(spec["generators"], list, f"{field}.generators")]
        rows = spec.get("relations", [])
        _typed(rows, list, f"{field}.relations")
        cols = len(rows[0]) if rows else 0
        return PresentedAbelianGroup(names, parse_matrix(rows or [[] for _ in names], (len(names), cols),
                                                         f"{field}.relations"))
    free = _typed(spec.get("free", 0), int, f"{field}.free")
    torsion = [_typed(t, int, f"{field}.torsion") for t in _typed(spec.get("torsion", []), list, f"{field}.torsion")]
    if free < 0 or any(t < 2 for t in torsion):
        raise ParseError("Free rank must be nonnegative and torsion orders at least 2", field=field)
    return PresentedAbelianGroup.from_invariants(free, torsion, prefix=prefix)


def parse_ring(spec: Any) -> RingPresentation:
    field = "ring"
    _typed(spec, dict, field)
    generators = []
    for k, g in enumerate(_require(spec, "generators", list, field)):
        where = f"ring.generators[{k}]"
        _typed(g, dict, where)
        generators.append(RingGenerator(str(_require(g, "name", str, where)), _require(g, "degree", int, where)))
    truncations = {str(k): _typed(v, int, f"ring.truncations.{k}")
                   for k, v in _typed(spec.get("truncations", {}), dict, "ring.truncations").items()}
    squares = {}
    for name, values in _typed(spec.get("squares", {}), dict, "ring.squares").items():
        for i, terms in _typed(values, dict, f"ring.squares.{name}").items():
            where = f"ring.squares.{name}.{i}"
            squares[(name, _degree(i, where))] = [str(t) for t in _typed(terms, list, where)]
    w2 = spec.get("w2")
    w3 = spec.get("w3")
    return RingPresentation(
        generators=generators,
        truncations=truncations,
        squares=squares,
        top=spec.get("top"),
        w2=None if w2 is None else [str(t) for t in _typed(w2, list, "ring.w2")],
        w3=None if w3 is None else [str(t) for t in _typed(w3, list, "ring.w3")],
    )


def parse_homology(spec: Any) -> HomologyData:
    field = "homology"
    _typed(spec, dict, field)
    h1 = parse_group(spec.get("H1", {}), "homology.H1", prefix="a")
    h2 = parse_group(spec.get("H2", {}), "homology.H2", prefix="b")
    h3 = parse_group(spec.get("H3", {}), "homology.H3", prefix="c")
    h1_mod2 = _typed(spec.get("H1mod2", 0), int, "homology.H1mod2")
    h3_mod2 = _typed(spec.get("H3mod2", 0), int, "homology.H3mod2")

    def matrix(key: str, shape: Tuple[int, int]) -> IntegerMatrix:
        if key in spec:
            return parse_matrix(spec[key], shape, f"homology.{key}")
        if shape[0] and shape[1]:
            raise ParseError(f"Missing homology map {key}", field=f"homology.{key}")
        return IntegerMatrix.zeros(*shape)

    return HomologyData(
        h1=h1, h2=h2, h3=h3, h1_mod2=h1_mod2, h3_mod2=h3_mod2,
        cap_w2=matrix("capW2", (h1_mod2, h3.num_generators)),
        cap_w2_mod2=matrix("capW2Mod2", (h1_mod2, h3_mod2)),
        pairing_w2=matrix("pairingW2", (1, h2.num_generators)),
        bockstein=matrix("bockstein", (h2.num_generators, h3_mod2)),
    )


def parse_overrides(spec: Any) -> OperationOverrides:
    _typed(spec, dict, "overrides")
    unknown = set(spec) - set(OVERRIDE_KEYS)
    if unknown:
        raise ParseError(f"Unknown override keys {sorted(unknown)}", field="overrides")
    values: Dict[str, Any] = {}
    for key, attribute in OVERRIDE_KEYS.items():
        if key not in spec:
            continue
        field = f"overrides.{key}"
        value = spec[key]
        if key == "thetaImage":
            values[attribute] = {_degree(d, field): _vectors(vs, f"{field}.{d}")
                                 for d, vs in _typed(value, dict, field).items()}
        elif key in ("thetaKernelN", "phiImage"):
            values[attribute] = None if value is None else _vectors(value, field)
        elif key == "threePrimaryEpsilon":
            if value not in (None, 0, 1) or isinstance(value, bool):
                raise ParseError("threePrimaryEpsilon must be 0, 1 or null", field=field)
            values[attribute] = value
        else:
            values[attribute] = _tri_state(value, field)
    return OperationOverrides(**values)


# Datum

def parse_datum(data: Any, source: str = "<input>") -> CohomologyDatum:
    """Build a validated-shape datum from its JSON object."""
    _typed(data, dict, "")
    version = data.get("schemaVersion", SchemaConstants.SCHEMA_VERSION)
    if version != SchemaConstants.SCHEMA_VERSION:
        raise ParseError(f"Unsupported schemaVersion {version}, expected {SchemaConstants.SCHEMA_VERSION}",
                         field="schemaVersion")
    name = str(data.get("name", Path(source).stem))
    dimension = _require(data, "dimension", int, "")
    codimension = _require(data, "codimension", int, "")
    if codimension not in EngineConstants.SUPPORTED_CODIMENSIONS:
        raise ParseError(f"Codimension {codimension} is not supported", field="codimension")
    try:
        structure = StructureTag.parse(_require(data, "structure", str, ""))
    except ValueError as e:
        raise ParseError(str(e), field="structure") from None
    n = dimension - codimension
    if n < codimension + 2:
        raise RangeError(f"{name}: dimension {dimension} is outside the stable range for codimension {codimension}")

    integral: Dict[int, PresentedAbelianGroup] = {}
    mod2: Dict[int, int] = {}
    mod3: Dict[int, int] = {}
    basis: Dict[int, List[str]] = {}
    for key, block in _typed(data.get("degrees", {}), dict, "degrees").items():
        degree = _degree(key, "degrees")
        where = f"degrees.{key}"
        _typed(block, dict, where)
        if "integral" in block:
            integral[degree] = parse_group(block["integral"], f"{where}.integral", prefix=f"z{degree}_")
        if "mod2" in block:
            mod2[degree] = _typed(block["mod2"], int, f"{where}.mod2")
        if "mod3" in block:
            mod3[degree] = _typed(block["mod3"], int, f"{where}.mod3")
        if "basis" in block:
            basis[degree] = [str(b) for b in _typed(block["basis"], list, f"{where}.basis")]

    datum = CohomologyDatum(name=name, dimension=dimension, codimension=codimension, structure=structure,
                            integral=integral, mod2=mod2, mod3=mod3, basis=basis,
                            notes=[str(x) for x in _typed(data.get("notes", []), list, "notes")])
    zero_fill = _tri_state(data.get("zeroFill"), "zeroFill") is True
    filled = []
    for degree in datum.window:
        if degree not in integral:
            integral[degree] = PresentedAbelianGroup.zero()
            filled.append(degree)
            if degree not in mod2 and "ring" not in data:
                mod2[degree] = 0
    if filled and not zero_fill:
        logger.warning(f"[INGEST] {name}: degrees {filled} are absent and taken as zero; "
                       f"list them or set zeroFill")

    ring_maps = {}
    ring_w2 = ring_w3 = None
    if "ring" in data:
        try:
            ingestion = ingest_ring(parse_ring(data["ring"]), datum.window, dimension)
        except ParseError:
            raise
        except (CohomotopyError, ValueError) as e:
            raise ParseError(str(e), field="ring") from None
        for degree, rank in ingestion.ranks.items():
            if degree in mod2 and mod2[degree] != rank:
                raise ParseError(f"mod2 rank {mod2[degree]} disagrees with the ring rank {rank}",
                                 field=f"degrees.{degree}.mod2")
            mod2[degree] = rank
            basis.setdefault(degree, ingestion.basis[degree])
        ring_maps = ingestion.maps
        ring_w2, ring_w3 = ingestion.w2, ingestion.w3

    maps: Dict[Tuple[str, int], IntegerMatrix] = {}
    for map_name, entries in _typed(data.get("maps", {}), dict, "maps").items():
        if map_name not in MAP_TYPES:
            raise ParseError(f"Unknown map '{map_name}'. Available: {list(MAP_TYPES)}", field="maps")
        for key, rows in _typed(entries, dict, f"maps.{map_name}").items():
            degree = _degree(key, f"maps.{map_name}")
            where = f"maps.{map_name}.{key}"
            try:
                shape = datum.map_shape(map_name, degree)
            except CohomotopyError as e:
                raise ParseError(str(e), field=where) from None
            maps[(map_name, degree)] = parse_matrix(rows, shape, where)
    for key, matrix in ring_maps.items():
        if key not in maps:
            maps[key] = matrix
        elif not (maps[key] - matrix).reduce(2).is_zero():
            logger.warning(f"[INGEST] {name}: explicit {key[0]} in degree {key[1]} disagrees with the ring; "
                           f"using the explicit matrix")
    datum.maps = maps

    characteristic = _typed(data.get("characteristic", {}), dict, "characteristic")
    datum.w2 = _vector(characteristic["w2"], "characteristic.w2") if "w2" in characteristic else ring_w2
    datum.w3 = _vector(characteristic["w3"], "characteristic.w3") if "w3" in characteristic else ring_w3
    datum.p1_mod3_trivial = _tri_state(characteristic.get("p1Mod3Trivial"), "characteristic.p1Mod3Trivial")
    if structure is StructureTag.STRING:
        if datum.p1_mod3_trivial is False:
            raise ParseError("A String manifold has p1 = 0", field="characteristic.p1Mod3Trivial")
        datum.p1_mod3_trivial = True

    if "homology" in data:
        datum.homology = parse_homology(data["homology"])
    if "overrides" in data:
        datum.overrides = parse_overrides(data["overrides"])

    datum = derive_wu_actions(datum, strict=False)
    logger.info(f"[INGEST] {name}: dimension {dimension}, codimension {codimension}, {structure.value}")
    return datum


def _read_json(path: Union[str, Path]) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Cannot read {path}: {e.strerror}") from None
    if not text.strip():
        raise ParseError(f"Empty input file {path.name}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Malformed JSON in {path.name}: {e.msg}", line=e.lineno, column=e.colno) from None


def load_datum(path: Union[str, Path]) -> CohomologyDatum:
    data = _read_json(path)
    if isinstance(data, list):
        raise ParseError(f"{Path(path).name} holds a batch; load it with load_data")
    return parse_datum(data, source=str(path))


def load_data(path: Union[str, Path]) -> List[CohomologyDatum]:
    """Every datum in a file: a single object or a JSON array of them."""
    data = _read_json(path)
    if isinstance(data, list):
        return [parse_datum(entry, source=f"{path}[{k}]") for k, entry in enumerate(data)]
    return [parse_datum(data, source=str(path))]


class DatumBuilder:
    """Builder for small cohomology data with a fluent interface."""

    def __init__(self, name: str, dimension: int, codimension: int, structure: str = "Oriented"):
        self.data: Dict[str, Any] = {
            "schemaVersion": SchemaConstants.SCHEMA_VERSION,
            "name": name,
            "dimension": dimension,
            "codimension": codimension,
            "structure": structure,
            "degrees": {},
            "maps": {},
            "characteristic": {},
            "zeroFill": True,
        }

    def _degree_block(self, degree: int) -> dict:
        return self.data["degrees"].setdefault(str(degree), {})

    def with_integral(self, degree: int, free: int = 0, torsion: Sequence[int] = ()) -> 'DatumBuilder':
        self._degree_block(degree)["integral"] = {"free": free, "torsion": list(torsion)}
        return self

    def with_presentation(self, degree: int, generators: Sequence[str],
                          relations: Sequence[Sequence[int]]) -> 'DatumBuilder':
        self._degree_block(degree)["integral"] = {"generators": list(generators),
                                                  "relations": [list(r) for r in relations]}
        return self

    def with_mod2(self, degree: int, rank: int) -> 'DatumBuilder':
        self._degree_block(degree)["mod2"] = rank
        return self

    def with_mod3(self, degree: int, rank: int) -> 'DatumBuilder':
        self._degree_block(degree)["mod3"] = rank
        return self

    def with_map(self, name: str, degree: int, rows: Sequence[Sequence[int]]) -> 'DatumBuilder':
        self.data["maps"].setdefault(name, {})[str(degree)] = [list(r) for r in rows]
        return self

    def with_characteristic(self, **kwargs) -> 'DatumBuilder':
        """w2, w3 as lists; p1Mod3Trivial as a tri-state."""
        self.data["characteristic"].update(kwargs)
        return self

    def with_ring(self, ring: dict) -> 'DatumBuilder':
        self.data["ring"] = ring
        return self

    def with_homology(self, homology: dict) -> 'DatumBuilder':
        self.data["homology"] = homology
        return self

    def with_overrides(self, **kwargs) -> 'DatumBuilder':
        self.data.setdefault("overrides", {}).update(kwargs)
        return self

    def to_json(self) -> dict:
        return json.loads(json.dumps(self.data))

    def build(self) -> CohomologyDatum:
        return parse_datum(self.to_json(), source=self.data["name"])

    @classmethod
    def create(cls, name: str, dimension: int, codimension: int, structure: str = "Oriented") -> 'DatumBuilder':
        return cls(name, dimension, codimension, structure)
