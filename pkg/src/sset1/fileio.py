"""JSON files for presentations, maps and lifting squares.

Serialization is canonical (sorted keys, sorted ids, two-space indent,
trailing newline) so files round-trip byte for byte.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .core import (
    InvalidMap,
    SimplexRef,
    SimplicialMap,
    SSet,
    SSetError,
    check_map,
    is_admissible,
    validate,
)

Ref = Union[str, Path, dict]


class FormatError(SSetError):
    """A malformed or invalid file; ``where`` locates the problem."""

    def __init__(self, message: str, where: str = "", line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.message = message
        self.where = where
        self.line = line
        self.column = column
        self.file: str | None = None

    def __str__(self) -> str:
        parts = [self.file] if self.file else []
        if self.line is not None:
            parts.append(f"line {self.line}, column {self.column}")
        if self.where:
            parts.append(self.where)
        return ": ".join(parts + [self.message])


def _loads(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        err = FormatError(e.msg, line=e.lineno, column=e.colno)
        err.file = source
        raise err from None


def _read(path: str | Path) -> Any:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        err = FormatError(f"cannot read file ({e.strerror})")
        err.file = str(p)
        raise err from None
    return _loads(text, str(p))


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# -- presentations ------------------------------------------------------------


def _expect(cond: bool, msg: str, where: str) -> None:
    if not cond:
        raise FormatError(msg, where)


def _int_list(v: Any, where: str) -> list[int]:
    _expect(isinstance(v, list) and all(type(x) is int for x in v), "expected a list of integers", where)
    return v


def presentation_from_obj(obj: Any) -> SSet:
    _expect(isinstance(obj, dict), "expected a JSON object", "$")
    unknown = set(obj) - {"name", "basepoint", "dimensions"}
    _expect(not unknown, f"unknown keys {sorted(unknown)}", "$")
    name = obj.get("name")
    _expect(isinstance(name, str), "missing string 'name'", "$.name")
    bp = obj.get("basepoint")
    _expect(bp is None or isinstance(bp, str), "basepoint must be a string", "$.basepoint")
    dims = obj.get("dimensions")
    _expect(isinstance(dims, list), "missing list 'dimensions'", "$.dimensions")

    entries: dict[int, list[tuple[str, list, str]]] = {}
    for a, block in enumerate(dims):
        w = f"$.dimensions[{a}]"
        _expect(isinstance(block, dict), "expected an object", w)
        d = block.get("dim")
        _expect(type(d) is int and d >= 0, "'dim' must be a non-negative integer", f"{w}.dim")
        _expect(d not in entries, f"dimension {d} listed twice", f"{w}.dim")
        sims = block.get("simplices")
        _expect(isinstance(sims, list), "missing list 'simplices'", f"{w}.simplices")
        entries[d] = []
        seen = set()
        for b, s in enumerate(sims):
            ws = f"{w}.simplices[{b}]"
            _expect(isinstance(s, dict), "expected an object", ws)
            ident = s.get("id")
            _expect(isinstance(ident, str) and ident != "", "missing string 'id'", f"{ws}.id")
            _expect(ident not in seen, f"duplicate id {ident!r} in dimension {d} (ids are unique per dimension)", f"{ws}.id")
            seen.add(ident)
            fs = s.get("faces", [])
            _expect(isinstance(fs, list), "'faces' must be a list", f"{ws}.faces")
            entries[d].append((ident, fs, ws))

    ids = {d: {e[0] for e in es} for d, es in entries.items()}
    gens = {d: [e[0] for e in es] for d, es in entries.items()}
    faces = {}
    for d, es in entries.items():
        for ident, fs, ws in es:
            want = d + 1 if d > 0 else 0
            _expect(len(fs) == want, f"a {d}-simplex needs {want} faces d_0..d_{d}, got {len(fs)}" if d else "a vertex has no faces", f"{ws}.faces")
            refs = []
            for c, f in enumerate(fs):
                wf = f"{ws}.faces[{c}]"
                _expect(isinstance(f, dict) and set(f) == {"word", "target"}, "a face is {\"word\": [...], \"target\": id}", wf)
                word = tuple(_int_list(f["word"], f"{wf}.word"))
                _expect(
                    is_admissible(word) and all(x >= 0 for x in word),
                    f"word {list(word)} violates the admissibility rule (indices strictly decreasing, non-negative)",
                    f"{wf}.word",
                )
                base = d - 1 - len(word)
                _expect(base >= 0, f"word {list(word)} is too long for a face of a {d}-simplex", f"{wf}.word")
                _expect(not word or word[0] <= d - 2, f"s_{word[0] if word else 0} is out of range in dimension {d - 1}", f"{wf}.word")
                t = f["target"]
                _expect(isinstance(t, str), "target must be a string id", f"{wf}.target")
                _expect(t in ids.get(base, ()), f"dangling face: no {base}-simplex with id {t!r}", f"{wf}.target")
                refs.append(SimplexRef(word, t, base))
            if d:
                faces[(d, ident)] = tuple(refs)
    _expect(bp is None or bp in ids.get(0, ()), f"basepoint {bp!r} is not a vertex", "$.basepoint")
    X = SSet.build(name, gens, faces, bp)
    issues = validate(X)
    if issues:
        raise FormatError(f"{issues[0].detail} (simplicial identity check)", f"simplex {issues[0].where!r}")
    X._cache["valid"] = True
    return X


def presentation_to_obj(X: SSet) -> dict:
    dims = []
    for d in range(X.top_dim + 1):
        sims = []
        for i in X.gens(d):
            fs = [{"target": f.target, "word": list(f.word)} for f in X.faces.get((d, i), ())]
            sims.append({"faces": fs, "id": i})
        dims.append({"dim": d, "simplices": sims})
    out: dict[str, Any] = {"dimensions": dims, "name": X.name}
    if X.basepoint is not None:
        out["basepoint"] = X.basepoint
    return out


def parse_presentation(text: str, source: str = "<input>") -> SSet:
    return presentation_from_obj(_loads(text, source))


def serialize_presentation(X: SSet) -> str:
    return dumps(presentation_to_obj(X))


def load_presentation(path: str | Path) -> SSet:
    try:
        return presentation_from_obj(_read(path))
    except FormatError as e:
        e.file = e.file or str(path)
        raise


def save_presentation(X: SSet, path: str | Path) -> None:
    Path(path).write_text(serialize_presentation(X), encoding="utf-8")


# -- maps ---------------------------------------------------------------------


def _resolve_space(ref: Any, base_dir: Path, where: str) -> SSet:
    if isinstance(ref, dict):
        return presentation_from_obj(ref)
    _expect(isinstance(ref, str), "expected a file path or an inline presentation", where)
    return load_presentation(base_dir / ref)


def map_from_obj(obj: Any, base_dir: str | Path = ".") -> SimplicialMap:
    base_dir = Path(base_dir)
    _expect(isinstance(obj, dict), "expected a JSON object", "$")
    for k in ("source", "target", "assignment"):
        _expect(k in obj, f"missing {k!r}", "$")
    X = _resolve_space(obj["source"], base_dir, "$.source")
    Y = _resolve_space(obj["target"], base_dir, "$.target")
    rows = obj["assignment"]
    _expect(isinstance(rows, list), "'assignment' must be a list", "$.assignment")
    assignment = {}
    for a, row in enumerate(rows):
        w = f"$.assignment[{a}]"
        _expect(isinstance(row, dict) and {"from", "word", "to"} <= set(row), "an entry is {\"from\", \"word\", \"to\"}", w)
        src = row["from"]
        dims = [d for d in X.generators if src in X.gens(d)]
        if "dim" in row:
            _expect(row["dim"] in dims, f"{X.name} has no {row['dim']}-simplex {src!r}", f"{w}.dim")
            d = row["dim"]
        else:
            _expect(dims, f"{X.name} has no simplex {src!r}", f"{w}.from")
            _expect(len(dims) == 1, f"id {src!r} occurs in dimensions {dims}; add \"dim\"", f"{w}.from")
            d = dims[0]
        _expect((d, src) not in assignment, f"{src!r} assigned twice", w)
        word = tuple(_int_list(row["word"], f"{w}.word"))
        _expect(is_admissible(word), f"word {list(word)} violates the admissibility rule", f"{w}.word")
        base = d - len(word)
        _expect(base >= 0 and (not word or word[0] <= d - 1), f"word {list(word)} does not fit dimension {d}", f"{w}.word")
        _expect(Y.has(base, row["to"]), f"{Y.name} has no {base}-simplex {row['to']!r}", f"{w}.to")
        assignment[(d, src)] = SimplexRef(word, row["to"], base)
    f = SimplicialMap(X, Y, assignment)
    issues = check_map(f)
    if issues:
        raise FormatError(f"{issues[0].detail} (simplicial map check)", f"generator {issues[0].where!r}")
    return f


def map_to_obj(f: SimplicialMap, source: Ref | None = None, target: Ref | None = None) -> dict:
    X = f.source
    rows = []
    for d, i in X.keys():
        v = f.assignment[(d, i)]
        row = {"from": i, "to": v.target, "word": list(v.word)}
        if sum(i in X.gens(e) for e in X.generators) > 1:
            row["dim"] = d
        rows.append(row)
    return {
        "assignment": rows,
        "source": str(source) if source is not None and not isinstance(source, dict) else (source or presentation_to_obj(f.source)),
        "target": str(target) if target is not None and not isinstance(target, dict) else (target or presentation_to_obj(f.target)),
    }


def parse_map(text: str, base_dir: str | Path = ".", source: str = "<input>") -> SimplicialMap:
    return map_from_obj(_loads(text, source), base_dir)


def serialize_map(f: SimplicialMap, source: Ref | None = None, target: Ref | None = None) -> str:
    return dumps(map_to_obj(f, source, target))


def load_map(path: str | Path) -> SimplicialMap:
    p = Path(path)
    try:
        return map_from_obj(_read(p), p.parent)
    except FormatError as e:
        e.file = e.file or str(p)
        raise


def _resolve_map(ref: Any, base_dir: Path, where: str) -> SimplicialMap:
    if isinstance(ref, dict):
        return map_from_obj(ref, base_dir)
    _expect(isinstance(ref, str), "expected a map file path or an inline map", where)
    return load_map(base_dir / ref)


def load_square(path: str | Path):
    from .lifting import LiftingSquare

    p = Path(path)
    obj = _read(p)
    _expect(isinstance(obj, dict), "expected a JSON object", "$")
    parts = {}
    for k in ("i", "p", "top", "bottom"):
        _expect(k in obj, f"missing {k!r}", "$")
        parts[k] = _resolve_map(obj[k], p.parent, f"$.{k}")
    sq = LiftingSquare(**parts)
    try:
        return sq.check()
    except InvalidMap as e:
        raise FormatError(str(e), "$") from None
