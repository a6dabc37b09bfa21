"""Statistics attached to enumerated objects.

A single record type serves every family; fields that do not apply to
an object stay None and are dropped from the JSON form.
"""

from __future__ import annotations

from dataclasses import dataclass, fields


@dataclass(frozen=True)
class StatVector:
    inv: int | None = None
    inv_prime: int | None = None
    inv_j: int | None = None
    inv_prime_i: int | None = None
    minima: int | None = None
    maxima: int | None = None
    top_minima: int | None = None
    top_maxima: int | None = None
    bottom_minima: int | None = None
    bottom_maxima: int | None = None
    top_entry: int | None = None
    bottom_row: tuple | None = None
    # corner flags: the weight splices treat the designated bottom corner
    # separately from the other extremes
    bottom_right_max: bool | None = None
    bottom_left_min: bool | None = None

    def as_dict(self):
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if v is None:
                continue
            out[f.name] = list(v) if isinstance(v, tuple) else v
        return out
