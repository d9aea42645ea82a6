"""Audit records for the catalog coloring procedures.

A trace is a flat list of steps.  Colors in the trace are always given in
the *original* color names of the assignment, so a trace can be replayed
against the assignment it came from without knowing about any renaming
done along the way.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..cover import MatchingAssignment
from ..errors import InternalConsistencyError
from ..transform import has_property_P


_VERTEX_KEYS = ("vertex",)
_LIST_KEYS = ("triangle", "src", "dst")


def _step_vertices(step: dict) -> set:
    out = {step[k] for k in _VERTEX_KEYS if k in step}
    for k in _LIST_KEYS:
        out.update(step.get(k, ()))
    for e in step.get("edges", ()):
        out.update(e)
    return out


@dataclass
class ColoringTrace:
    entry: str = ""
    steps: list = field(default_factory=list)

    def add(self, op: str, **data) -> None:
        self.steps.append({"op": op, **data})

    # inspection -------------------------------------------------------
    def tests(self) -> list:
        """(label, result) of every property-P test in order."""
        return [(s["label"], s["P"]) for s in self.steps if s["op"] == "test"]

    def branches(self) -> list:
        return [s["name"] for s in self.steps if s["op"] == "branch"]

    def final_coloring(self) -> dict:
        col = {}
        for s in self.steps:
            if s["op"] == "color":
                col[s["vertex"]] = s["color"]
            elif s["op"] == "uncolor":
                col.pop(s["vertex"], None)
        return col

    def relabeled(self, f, drop=()) -> "ColoringTrace":
        """Copy with every vertex name sent through ``f``.  Steps naming a
        vertex in ``drop`` are left out."""
        drop = set(drop)
        out = ColoringTrace(self.entry)
        for s in self.steps:
            names = _step_vertices(s)
            if names & drop:
                continue
            t = dict(s)
            for key in _VERTEX_KEYS:
                if key in t:
                    t[key] = f(t[key])
            for key in _LIST_KEYS:
                if key in t:
                    t[key] = [f(x) for x in t[key]]
            if "edges" in t:
                t["edges"] = [[f(a), f(b)] for a, b in t["edges"]]
            out.steps.append(t)
        return out

    def extend(self, other: "ColoringTrace") -> None:
        self.steps.extend(other.steps)

    # serialisation ----------------------------------------------------
    def to_dict(self) -> dict:
        def clean(x):
            if isinstance(x, dict):
                return {str(k): clean(v) for k, v in x.items()}
            if isinstance(x, (list, tuple)):
                return [clean(v) for v in x]
            if isinstance(x, (int, float, bool, str)) or x is None:
                return x
            return str(x)
        return {"entry": self.entry, "steps": clean(self.steps)}

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=1) + "\n"


def replay(trace: ColoringTrace, m: MatchingAssignment) -> dict:
    """Re-run the color and test steps of ``trace`` against ``m``.

    Every colored vertex must take a color from its residual list at that
    moment, every recorded property-P outcome must match a fresh test,
    and the result must be a full coloring.  Returns the coloring.
    """
    col: dict = {}
    for i, s in enumerate(trace.steps):
        op = s["op"]
        if op == "color":
            v, c = s["vertex"], s["color"]
            if v in col:
                raise InternalConsistencyError(f"step {i}: {v!r} colored twice", trace)
            if c not in m.residual(v, col):
                raise InternalConsistencyError(
                    f"step {i}: color {c!r} not available at {v!r}", trace)
            col[v] = c
        elif op == "uncolor":
            col.pop(s["vertex"])
        elif op == "test":
            if has_property_P(m, tuple(s["triangle"])) != s["P"]:
                raise InternalConsistencyError(f"step {i}: property P outcome differs", trace)
    if set(col) != set(m.host.vertices):
        raise InternalConsistencyError("replay leaves vertices uncolored", trace)
    return col
