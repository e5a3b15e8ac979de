"""Pitch-class arithmetic and tone-name parsing (C = 0, ..., B = 11)."""
from __future__ import annotations

import re
from typing import Iterable

NAMES = ("C", "C#", "D", "Eb", "E", "F", "F#", "G", "Ab", "A", "Bb", "B")

_LETTERS = {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}
_ACCIDENTALS = {"#": 1, "♯": 1, "b": -1, "♭": -1, "": 0}
_TONE_RE = re.compile(r"^([A-Ga-g])(#|♯|b|♭)?$")


class ToneNameError(ValueError):
    pass


def parse_tone(name: str) -> int:
    """``"C#"``, ``"Db"``, ``"D♭"`` -> pitch class.  Sharps and flats are synonyms."""
    m = _TONE_RE.match(name.strip())
    if not m:
        raise ToneNameError(f"unrecognised tone name {name!r}")
    return (_LETTERS[m.group(1).upper()] + _ACCIDENTALS[m.group(2) or ""]) % 12


def parse_tones(names: Iterable[str]) -> tuple[int, ...]:
    return tuple(parse_tone(n) for n in names)


def name(pc: int) -> str:
    return NAMES[pc % 12]


def names(pcs: Iterable[int]) -> str:
    return ",".join(name(p) for p in pcs)


def pcset(pcs: Iterable[int]) -> frozenset[int]:
    return frozenset(p % 12 for p in pcs)


def transpose(pcs: Iterable[int], interval: int) -> frozenset[int]:
    return frozenset((p + interval) % 12 for p in pcs)


def sorted_tuple(pcs: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(pcs))
