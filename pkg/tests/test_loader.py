# cohomotopy\tests\test_loader.py

import json
import logging

import pytest

from cohomotopy.algebra import GroupInvariants, IntegerMatrix
from cohomotopy.cochain import (
    DatumBuilder, StructureTag, derive_wu_actions, load_data, load_datum, op_kernel, op_quotient, parse_datum,
)
from cohomotopy.errors import MissingDataError, ParseError, RangeError


def _minimal(**updates) -> dict:
    data = {
        "schemaVersion": 1,
        "name": "minimal",
        "dimension": 7,
        "codimension": 2,
        "structure": "Spin",
        "degrees": {"7": {"integral": {"free": 1}, "mod2": 1}},
        "maps": {"rho2": {"7": [[1]]}},
    }
    data.update(updates)
    return data


def test_load_sphere(corpus):
    datum = corpus("sphere-n2")

    assert datum.n == 5
    assert datum.window == range(4, 8)
    assert datum.structure is StructureTag.SPIN
    assert datum.integral[7].invariants == GroupInvariants(1, ())
    assert datum.integral[5].is_trivial()
    assert datum.mod2_rank(5) == 0


def test_ring_fills_mod2_data(corpus):
    datum = corpus("dold-m3")

    assert datum.mod2_rank(7) == 3
    assert datum.basis[7] == ["c^3*d^2", "c^3*a", "c*d*a"]
    assert datum.w2 == (1, 1)
    assert datum.has_map("sq2sq1", 8)
    assert datum.integral[7].invariants == GroupInvariants(2, (2,))


def test_wu_fills_squares_without_a_ring():
    datum = parse_datum(_minimal(degrees={
        "5": {"integral": {"free": 1}, "mod2": 1},
        "7": {"integral": {"free": 1}, "mod2": 1},
    }, maps={"rho2": {"5": [[1]], "7": [[1]]}}))

    assert datum.matrix("sq2", 5) == IntegerMatrix.zeros(1, 1)
    assert datum.has_map("sq2sq1", 4)


def test_missing_map_is_reported():
    datum = parse_datum(_minimal(degrees={"6": {"integral": {"free": 1}, "mod2": 1},
                                          "7": {"integral": {"free": 1}, "mod2": 1}}))

    with pytest.raises(MissingDataError):
        datum.matrix("rho2", 6)


def test_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"dimension": 7,\n "codimension": }', encoding="utf-8")

    with pytest.raises(ParseError) as excinfo:
        load_datum(path)
    assert excinfo.value.line == 2


def test_empty_file(tmp_path):
    path = tmp_path / "empty.json"
    path.write_text("  \n", encoding="utf-8")

    with pytest.raises(ParseError):
        load_datum(path)


@pytest.mark.parametrize("updates, field", [
    ({"dimension": "seven"}, "dimension"),
    ({"codimension": 4}, "codimension"),
    ({"structure": "Pin"}, "structure"),
    ({"schemaVersion": 2}, "schemaVersion"),
    ({"maps": {"rho2": {"7": [[1, 0]]}}}, "maps.rho2.7"),
    ({"maps": {"sq3": {"4": [[0]]}}}, "maps"),
    ({"overrides": {"thetaImages": {}}}, "overrides"),
    ({"overrides": {"threePrimaryEpsilon": 2}}, "overrides.threePrimaryEpsilon"),
    ({"degrees": {"7": {"integral": {"torsion": [1]}}}}, "degrees.7.integral"),
    ({"zeroFill": "yes"}, "zeroFill"),
])
def test_schema_violations(updates, field):
    with pytest.raises(ParseError) as excinfo:
        parse_datum(_minimal(**updates))
    assert excinfo.value.field == field


def test_missing_dimension():
    data = _minimal()
    del data["dimension"]

    with pytest.raises(ParseError) as excinfo:
        parse_datum(data)
    assert excinfo.value.field == ""
    assert "dimension" in str(excinfo.value)


def test_stable_range_is_enforced():
    with pytest.raises(RangeError):
        parse_datum(_minimal(dimension=5))
    with pytest.raises(RangeError):
        parse_datum(_minimal(dimension=7, codimension=3))


def test_string_manifolds_have_trivial_p1():
    data = _minimal(structure="String", dimension=8, codimension=3,
                    characteristic={"p1Mod3Trivial": False})

    with pytest.raises(ParseError):
        parse_datum(data)
    data["characteristic"] = {}
    assert parse_datum(data).p1_mod3_trivial is True


def test_batches(tmp_path):
    path = tmp_path / "batch.json"
    path.write_text(json.dumps([_minimal(name="one"), _minimal(name="two")]), encoding="utf-8")

    assert [d.name for d in load_data(path)] == ["one", "two"]
    with pytest.raises(ParseError):
        load_datum(path)


def test_explicit_map_wins_over_ring(corpus, caplog):
    with caplog.at_level(logging.WARNING, logger="cohomotopy"):
        datum = corpus("dold-m3-corrupt-sq2")

    assert datum.matrix("sq2", 6).to_lists() == [[0, 1, 0], [0, 0, 1]]
    assert "disagrees with the ring" in caplog.text


def test_builder():
    datum = (DatumBuilder.create("built", 7, 2, "Spin")
             .with_integral(5, free=1)
             .with_mod2(5, 1)
             .with_integral(7, free=1)
             .with_mod2(7, 1)
             .with_map("rho2", 5, [[1]])
             .with_map("rho2", 7, [[1]])
             .with_characteristic(w2=[], w3=[])
             .with_overrides(thetaTrivial=True)
             .build())

    assert datum.name == "built"
    assert datum.overrides.theta_trivial is True
    assert datum.w2_is_zero() is True
    assert datum.summary()["window"] == [4, 7]


def test_wu_derivation_is_idempotent(corpus):
    once = derive_wu_actions(corpus("s2xsn"), strict=False)

    assert derive_wu_actions(once, strict=False) is once


def test_wu_derivation_skips_complexes(corpus):
    cw = corpus("cw-nonsplit")

    assert derive_wu_actions(cw) is cw


def test_integral_square_kernel_and_quotient(corpus):
    datum = corpus("cp2xs")
    kernel = op_kernel(datum, "Sq2Z", 7)

    assert kernel.contains((2,))
    assert not kernel.contains((1,))
    assert op_quotient(datum, "Sq2Z", 7).is_trivial()


def test_absent_degrees_are_reported(caplog):
    with caplog.at_level(logging.WARNING, logger="cohomotopy"):
        datum = parse_datum(_minimal())

    assert datum.integral_group(5).is_trivial()
    assert "degrees [4, 5, 6] are absent" in caplog.text

    caplog.clear()
    with caplog.at_level(logging.WARNING, logger="cohomotopy"):
        parse_datum(_minimal(zeroFill=True))
    assert "absent" not in caplog.text
