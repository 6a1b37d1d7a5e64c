"""The bundled corpus of small simplicial sets, maps and lifting squares.

Everything is generated deterministically from the constructors; the JSON
files under ``corpus/`` are exactly ``write_corpus`` output.
"""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import Callable

from .constructors import (
    boundary_complex,
    horn_complex,
    point,
    rp2_model,
    simplicial_sphere,
    standard_simplex,
)
from .core import (
    SimplicialMap,
    SSet,
    constant_map,
    ensure_map,
    gen,
    identity,
    total_degeneracy,
    wedge,
)
from .fileio import dumps, map_to_obj, serialize_presentation
from .functors import reduce1, reduce1_map

SPACE_BUILDERS: dict[str, Callable[[], SSet]] = {
    "point": point,
    "d1": lambda: standard_simplex(1),
    "d2": lambda: standard_simplex(2),
    "d3": lambda: standard_simplex(3),
    "bd1": lambda: boundary_complex(1).space,
    "bd2": lambda: boundary_complex(2).space,
    "bd3": lambda: boundary_complex(3).space,
    "horn20": lambda: horn_complex(2, 0).space,
    "horn21": lambda: horn_complex(2, 1).space,
    "horn22": lambda: horn_complex(2, 2).space,
    "horn30": lambda: horn_complex(3, 0).space,
    "s1": lambda: simplicial_sphere(1),
    "s2": lambda: simplicial_sphere(2),
    "s3": lambda: simplicial_sphere(3),
    "s4": lambda: simplicial_sphere(4),
    "rp2": rp2_model,
    "s2vs2": lambda: wedge(simplicial_sphere(2), simplicial_sphere(2), "S2vS2").space,
    "r1horn21": lambda: reduce1(horn_complex(2, 1).space).space,
    "r1horn30": lambda: reduce1(horn_complex(3, 0).space).space,
    "r1d3": lambda: reduce1(standard_simplex(3)).space,
}


@lru_cache(maxsize=None)
def space(stem: str) -> SSet:
    return SPACE_BUILDERS[stem]()


def spaces() -> dict[str, SSet]:
    return {k: space(k) for k in SPACE_BUILDERS}


def _retarget(f: SimplicialMap, source: str, target: str) -> SimplicialMap:
    return ensure_map(SimplicialMap(space(source), space(target), dict(f.assignment)))


def _horn_top(n: int) -> SimplicialMap:
    """The horn in S^(n-1) all of whose faces are the top simplex."""
    H = horn_complex(n, 0).space
    S = space(f"s{n - 1}")
    top = S.gens(n - 1)[0]
    a = {k: gen(top, k[0]) if k[0] == n - 1 else total_degeneracy("*", k[0]) for k in H.keys()}
    return ensure_map(SimplicialMap(H, S, a))


MAP_BUILDERS: dict[str, tuple[str, str, Callable[[], SimplicialMap]]] = {
    "i1": ("bd1", "d1", lambda: boundary_complex(1).map),
    "j20": ("horn20", "d2", lambda: horn_complex(2, 0).map),
    "j21": ("horn21", "d2", lambda: horn_complex(2, 1).map),
    "j22": ("horn22", "d2", lambda: horn_complex(2, 2).map),
    "j30": ("horn30", "d3", lambda: horn_complex(3, 0).map),
    "i2": ("bd2", "d2", lambda: boundary_complex(2).map),
    "i3": ("bd3", "d3", lambda: boundary_complex(3).map),
    "d2_to_s2": ("d2", "s2", lambda: reduce1(standard_simplex(2)).map),
    "r1j21": ("r1horn21", "s2", lambda: reduce1_map(horn_complex(2, 1).map)),
    "r1j30": ("r1horn30", "r1d3", lambda: reduce1_map(horn_complex(3, 0).map)),
    "rp2_to_point": ("rp2", "point", lambda: constant_map(space("rp2"), point(), "0")),
    "s2_to_point": ("s2", "point", lambda: constant_map(space("s2"), point(), "0")),
    "s3_to_point": ("s3", "point", lambda: constant_map(space("s3"), point(), "0")),
    "d3_to_point": ("d3", "point", lambda: constant_map(space("d3"), point(), "0")),
    "d1_to_point": ("d1", "point", lambda: constant_map(space("d1"), point(), "0")),
    "id_s2": ("s2", "s2", lambda: identity(space("s2"))),
    "horn30_to_s2": ("horn30", "s2", lambda: _horn_top(3)),
}


@lru_cache(maxsize=None)
def corpus_map(stem: str) -> SimplicialMap:
    src, dst, build = MAP_BUILDERS[stem]
    return _retarget(build(), src, dst)


def maps() -> dict[str, SimplicialMap]:
    return {k: corpus_map(k) for k in MAP_BUILDERS}


# square name -> map stems for i, p, top, bottom
SQUARES: dict[str, dict[str, str]] = {
    "horn_eee": {"i": "j30", "p": "s2_to_point", "top": "horn30_to_s2", "bottom": "d3_to_point"},
    "boundary_d1": {"i": "i1", "p": "d1_to_point", "top": "i1", "bottom": "d1_to_point"},
}


def files() -> dict[str, str]:
    """Relative path -> file contents for the whole corpus."""
    out = {}
    for stem, X in spaces().items():
        out[f"{stem}.json"] = serialize_presentation(X)
    for stem, (src, dst, _) in MAP_BUILDERS.items():
        out[f"maps/{stem}.json"] = dumps(map_to_obj(corpus_map(stem), f"../{src}.json", f"../{dst}.json"))
    for stem, parts in SQUARES.items():
        out[f"squares/{stem}.json"] = dumps({k: f"../maps/{v}.json" for k, v in parts.items()})
    return out


def write_corpus(directory: str | Path) -> list[Path]:
    root = Path(directory)
    written = []
    for rel, text in sorted(files().items()):
        p = root / rel
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(text, encoding="utf-8")
        written.append(p)
    return written
