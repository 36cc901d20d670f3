"""
Cycle files: a one-line JSON header, then the compressed cyclic string as
space-separated integers, then optionally one object per line.

    {"family": "perms", "m": 6, "n": 3, "params": {"n": 3}, "s": 1}
    0 1 0 2 1 0 1 2 2 0 2 1
    0 1 0
    ...

The JSON form carries the same fields: ``{"header": ..., "body": [...],
"objects": [[...], ...]}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import ParameterError, Word
from .engine import OverlapCycle, decode_compressed


class CycleFileError(ParameterError):
    pass


@dataclass
class CycleFile:
    family: str
    params: dict
    n: int
    s: int
    body: Word
    objects: tuple[Word, ...] | None = None

    @property
    def m(self) -> int:
        return len(self.body) // (self.n - self.s)

    @classmethod
    def from_cycle(cls, cycle: OverlapCycle, family: str, params: dict, expand: bool = False) -> "CycleFile":
        return cls(family, dict(params), cycle.n, cycle.s, cycle.compressed,
                   cycle.objects if expand else None)

    def header(self) -> dict:
        return {"family": self.family, "params": self.params, "n": self.n, "s": self.s, "m": self.m}

    def to_cycle(self) -> OverlapCycle:
        """Objects come from the expanded list when present, else from the body."""
        if self.objects is not None:
            return OverlapCycle(self.s, self.n, self.objects)
        return OverlapCycle.from_compressed(self.body, self.n, self.s)

    def dumps(self, fmt: str = "text") -> str:
        if fmt == "json":
            doc = {"header": self.header(), "body": list(self.body)}
            if self.objects is not None:
                doc["objects"] = [list(o) for o in self.objects]
            return json.dumps(doc, sort_keys=True) + "\n"
        lines = [json.dumps(self.header(), sort_keys=True), " ".join(map(str, self.body))]
        if self.objects is not None:
            lines.extend(" ".join(map(str, o)) for o in self.objects)
        return "\n".join(lines) + "\n"


def _ints(line: str, what: str) -> Word:
    try:
        return tuple(int(x) for x in line.split())
    except ValueError:
        raise CycleFileError(f"{what} is not a list of integers: {line[:60]!r}") from None


def loads(text: str) -> CycleFile:
    text = text.strip()
    if not text:
        raise CycleFileError("empty cycle file")
    first, _, rest = text.partition("\n")
    try:
        head = json.loads(first)
    except json.JSONDecodeError:
        try:
            head = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CycleFileError(f"header is not JSON: {exc}") from None
    if not isinstance(head, dict):
        raise CycleFileError("header must be a JSON object")

    if "header" in head:
        doc = head
        head = doc["header"]
        body = tuple(doc.get("body", ()))
        objects = doc.get("objects")
        objects = tuple(tuple(o) for o in objects) if objects is not None else None
    else:
        lines = [ln for ln in rest.splitlines() if ln.strip()]
        if not lines:
            raise CycleFileError("missing body line")
        body = _ints(lines[0], "body")
        objects = tuple(_ints(ln, f"object line {i + 3}") for i, ln in enumerate(lines[1:])) or None

    try:
        cf = CycleFile(str(head["family"]), dict(head.get("params", {})), int(head["n"]), int(head["s"]),
                       tuple(int(x) for x in body), objects)
        m = int(head["m"])
    except (KeyError, TypeError, ValueError) as exc:
        raise CycleFileError(f"bad header: {exc}") from None
    if not 1 <= cf.s < cf.n:
        raise CycleFileError(f"header has s={cf.s} outside [1, n-1] for n={cf.n}")
    step = cf.n - cf.s
    if len(cf.body) != m * step:
        raise CycleFileError(f"body has {len(cf.body)} symbols, header promises m*(n-s) = {m * step}")
    if cf.objects is not None and len(cf.objects) != m:
        raise CycleFileError(f"{len(cf.objects)} expanded objects, header promises {m}")
    decode_compressed(cf.body, cf.n, cf.s)
    return cf
