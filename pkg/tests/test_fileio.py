from __future__ import annotations

import json

import pytest
from hypothesis import given

from sset1 import corpus
from sset1.constructors import simplicial_sphere, standard_simplex
from sset1.core import identity
from sset1.fileio import (
    FormatError,
    load_map,
    load_presentation,
    load_square,
    map_to_obj,
    parse_map,
    parse_presentation,
    presentation_to_obj,
    save_presentation,
    serialize_map,
    serialize_presentation,
)
from sset1.lifting import solve_lifting

from test_core import ordered_complexes


def _on_disk(root):
    return {p.relative_to(root).as_posix(): p.read_text(encoding="utf-8") for p in root.rglob("*.json")}


def test_bundled_corpus_is_current(corpus_dir):
    assert _on_disk(corpus_dir) == corpus.files()


@pytest.mark.parametrize("rel", sorted(p for p in corpus.files() if "/" not in p))
def test_presentation_round_trip_is_byte_identical(corpus_dir, rel):
    text = (corpus_dir / rel).read_text(encoding="utf-8")
    X = parse_presentation(text)
    assert serialize_presentation(X) == text
    assert X == corpus.space(rel[:-5])


@pytest.mark.parametrize("rel", sorted(p for p in corpus.files() if p.startswith("maps/")))
def test_map_round_trip(corpus_dir, rel):
    path = corpus_dir / rel
    f = load_map(path)
    obj = json.loads(path.read_text(encoding="utf-8"))
    assert serialize_map(f, obj["source"], obj["target"]) == path.read_text(encoding="utf-8")
    assert f.assignment == corpus.corpus_map(path.stem).assignment


def test_write_corpus(tmp_path):
    written = corpus.write_corpus(tmp_path)
    assert len(written) == len(corpus.files())
    assert _on_disk(tmp_path) == corpus.files()


@given(ordered_complexes())
def test_random_presentations_round_trip(X):
    text = serialize_presentation(X)
    assert serialize_presentation(parse_presentation(text)) == text


def test_save_and_load(tmp_path):
    p = tmp_path / "s2.json"
    save_presentation(simplicial_sphere(2), p)
    assert load_presentation(p) == simplicial_sphere(2)


# -- rejection ------------------------------------------------------------------------


def _triangle_obj():
    return presentation_to_obj(standard_simplex(2))


def test_rejects_non_decreasing_word():
    obj = presentation_to_obj(simplicial_sphere(2))
    obj["dimensions"][-1]["simplices"][0]["faces"][0]["word"] = [0, 1]
    with pytest.raises(FormatError, match="admissibility rule"):
        parse_presentation(json.dumps(obj))


def test_rejects_dangling_target():
    obj = _triangle_obj()
    obj["dimensions"][1]["simplices"][0]["faces"][0]["target"] = "ghost"
    with pytest.raises(FormatError, match="ghost") as e:
        parse_presentation(json.dumps(obj))
    assert "dimensions[1].simplices[0].faces[0]" in str(e.value)


def test_reports_json_position():
    with pytest.raises(FormatError) as e:
        parse_presentation('{\n  "name": "x",\n  "dimensions": [,]\n}')
    assert (e.value.line, e.value.column) == (3, 18)
    assert "line 3, column 18" in str(e.value)


def test_rejects_identity_violation():
    obj = _triangle_obj()
    fs = obj["dimensions"][2]["simplices"][0]["faces"]
    fs[0], fs[1] = fs[1], fs[0]
    with pytest.raises(FormatError, match="simplicial identity"):
        parse_presentation(json.dumps(obj))


@pytest.mark.parametrize(
    "mutate, needle",
    [
        (lambda o: o.pop("name"), "name"),
        (lambda o: o.update(extra=1), "unknown keys"),
        (lambda o: o.update(basepoint="zz"), "basepoint"),
        (lambda o: o["dimensions"][1]["simplices"][0]["faces"].pop(), "needs 2 faces"),
        (lambda o: o["dimensions"][0]["simplices"].append({"id": "0", "faces": []}), "duplicate id"),
        (lambda o: o["dimensions"].append({"dim": 1, "simplices": []}), "listed twice"),
    ],
)
def test_structural_errors(mutate, needle):
    obj = _triangle_obj()
    mutate(obj)
    with pytest.raises(FormatError, match=needle):
        parse_presentation(json.dumps(obj))


def test_missing_file(tmp_path):
    with pytest.raises(FormatError, match="cannot read"):
        load_presentation(tmp_path / "nope.json")


# -- maps -------------------------------------------------------------------------------


CLASH = {
    "name": "clash",
    "dimensions": [
        {"dim": 0, "simplices": [{"id": "a", "faces": []}, {"id": "b", "faces": []}]},
        {"dim": 1, "simplices": [{"id": "a", "faces": [{"word": [], "target": "b"}, {"word": [], "target": "a"}]}]},
    ],
}


def test_map_needs_dim_when_ids_clash():
    X = parse_presentation(json.dumps(CLASH))
    obj = map_to_obj(identity(X))
    assert all("dim" in row for row in obj["assignment"] if row["from"] == "a")
    assert parse_map(json.dumps(obj)).assignment == identity(X).assignment
    for row in obj["assignment"]:
        row.pop("dim", None)
    with pytest.raises(FormatError, match="add \"dim\""):
        parse_map(json.dumps(obj))


def test_map_inline_round_trip():
    f = corpus.corpus_map("d2_to_s2")
    g = parse_map(serialize_map(f))
    assert g.assignment == f.assignment and g.target == f.target


def test_map_rejects_non_simplicial_assignment():
    obj = map_to_obj(corpus.corpus_map("j21"))
    obj["assignment"][0]["to"] = "2"
    with pytest.raises(FormatError, match="simplicial map check"):
        parse_map(json.dumps(obj))


def test_map_rejects_unknown_target():
    obj = map_to_obj(corpus.corpus_map("j21"))
    obj["assignment"][0]["to"] = "9"
    with pytest.raises(FormatError, match="no 0-simplex '9'"):
        parse_map(json.dumps(obj))


def test_load_square(corpus_dir):
    sq = load_square(corpus_dir / "squares" / "horn_eee.json")
    assert solve_lifting(sq) is None
    sq = load_square(corpus_dir / "squares" / "boundary_d1.json")
    assert solve_lifting(sq) is not None


def test_square_must_commute(tmp_path, corpus_dir):
    obj = {
        "i": str(corpus_dir / "maps" / "i1.json"),
        "p": str(corpus_dir / "maps" / "id_s2.json"),
        "top": str(corpus_dir / "maps" / "i1.json"),
        "bottom": str(corpus_dir / "maps" / "d1_to_point.json"),
    }
    p = tmp_path / "sq.json"
    p.write_text(json.dumps(obj), encoding="utf-8")
    with pytest.raises(FormatError):
        load_square(p)
