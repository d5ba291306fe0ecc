"""Text formats: parse/serialize round trips and error reporting."""

import numpy as np
import pytest

from bitopdual.errors import ParseError
from bitopdual.formats import (
    parse_algebra_text,
    parse_lattice_text,
    parse_model_text,
    parse_space_text,
    serialize_lattice,
    serialize_model,
    serialize_powerset_algebra,
    serialize_space,
    space_to_object,
)
from bitopdual.lattice import boolean_cube, chain, diamond, product_of_chains
from bitopdual.mvalgebra import box_from_frame, powerset_algebra, self_algebra

DIAMOND_TEXT = """\
elements: 4
covers:
0 < 1
0 < 2
1 < 3
2 < 3
"""


def test_parse_lattice():
    lat = parse_lattice_text(DIAMOND_TEXT)
    assert lat.n == 4
    assert np.array_equal(lat.leq, diamond().leq)


def test_lattice_round_trip():
    for lat in (chain(2), chain(5), diamond(), boolean_cube(3), product_of_chains([2, 3])):
        again = parse_lattice_text(serialize_lattice(lat))
        assert np.array_equal(again.leq, lat.leq)


def test_parse_lattice_errors():
    with pytest.raises(ParseError):
        parse_lattice_text("")
    with pytest.raises(ParseError):
        parse_lattice_text("covers:\n0 < 1\n")
    with pytest.raises(ParseError) as err:
        parse_lattice_text("elements: 2\ncovers:\n0 1\n")
    assert err.value.line == 3


def test_parse_powerset_algebra(tmp_path):
    (tmp_path / "d.lat").write_text(DIAMOND_TEXT)
    text = serialize_powerset_algebra("d.lat", 2, [(0, 1)])
    alg = parse_algebra_text(text, base_dir=str(tmp_path))
    ref = box_from_frame(diamond(), 2, [(0, 1)])
    assert alg.same_tables(ref)


def test_parse_algebra_tables(tmp_path):
    (tmp_path / "c.lat").write_text("elements: 2\ncovers:\n0 < 1\n")
    alg = self_algebra(chain(2))
    rows = lambda tab: "\n".join(" ".join(str(int(v)) for v in row) for row in tab)  # noqa: E731
    text = "\n".join(
        [
            "tables L=c.lat",
            "carrier: 2",
            "bottom: 0",
            "top: 1",
            "meet:",
            rows(alg.meet),
            "join:",
            rows(alg.join),
            "implies:",
            rows(alg.implies),
            "t:",
            rows(alg.t),
        ]
    )
    again = parse_algebra_text(text, base_dir=str(tmp_path))
    assert again.same_tables(alg)


def test_space_round_trip():
    text = """\
points: 3
tau1:
{0,1}
{2}
tau2:
{0}
{1,2}
R:
0 1
1 2
alpha:
0 -> {0}
"""
    space, rel, alpha = parse_space_text(text)
    assert space.n == 3
    assert rel == (0b010, 0b100, 0)
    assert alpha == {0: 0b001}
    again_text = serialize_space(space, rel=rel, alpha=alpha)
    space2, rel2, alpha2 = parse_space_text(again_text)
    assert space2 == space and rel2 == rel and alpha2 == alpha


def test_space_to_object_defaults_to_trivial_alpha():
    space, rel, alpha = parse_space_text("points: 2\ntau1:\n{0}\n{1}\ntau2:\n{0}\n{1}\n")
    obj = space_to_object(space, chain(2), alpha, rel)
    assert obj.alpha[-1] == 0b11 and all(a == 0 for a in obj.alpha[:-1])


def test_model_round_trip():
    text = """\
worlds: 2
R:
0 1
val:
p @ 0 = 1
p @ 1 = 0
"""
    model = parse_model_text(text)
    assert model.n_worlds == 2 and model.rel == (0b10, 0)
    assert model.valuation["p"] == (1, 0)
    again = parse_model_text(serialize_model(model))
    assert again == model


def test_model_requires_total_valuation():
    with pytest.raises(ParseError):
        parse_model_text("worlds: 2\nval:\np @ 0 = 1\n")


def test_empty_files_rejected():
    for parser in (parse_lattice_text, parse_model_text):
        with pytest.raises(ParseError):
            parser("   \n# comment only\n")
    with pytest.raises(ParseError):
        parse_algebra_text("")
    with pytest.raises(ParseError):
        parse_space_text("")
