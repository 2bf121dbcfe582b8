"""Edge-indexed curvature values with CSV/JSON serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .graphs import Edge, canon_edge

METHODS = ("FRC", "AFRC3", "AFRC4", "AFRC5", "ORC")


@dataclass(frozen=True)
class CurvatureVector:
    """Map edge -> curvature value, tagged with the method that produced it."""

    method: str
    values: dict[Edge, float]

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown curvature method {self.method!r}")

    def __getitem__(self, e: Edge) -> float:
        return self.values[canon_edge(*e)]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def edges(self) -> list[Edge]:
        return sorted(self.values)

    def as_array(self) -> np.ndarray:
        """Values in canonical edge order."""
        return np.asarray([self.values[e] for e in self.edges], dtype=float)

    def to_csv(self, float_format: str = "%.12g") -> str:
        lines = [f"# method={self.method}", "u,v,value"]
        for u, v in self.edges:
            lines.append(f"{u},{v},{float_format % self.values[(u, v)]}")
        return "\n".join(lines) + "\n"

    def to_json(self, float_digits: int = 12) -> str:
        rows = [
            [u, v, float(f"%.{float_digits}g" % self.values[(u, v)])]
            for u, v in self.edges
        ]
        return json.dumps({"method": self.method, "values": rows})

    @staticmethod
    def from_csv(text: str) -> "CurvatureVector":
        method = None
        values: dict[Edge, float] = {}
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line.lstrip("#").strip()
                if body.startswith("method="):
                    method = body.split("=", 1)[1]
                continue
            if line == "u,v,value":
                continue
            u, v, val = line.split(",")
            values[canon_edge(int(u), int(v))] = float(val)
        if method is None:
            raise ValueError("missing '# method=...' header")
        return CurvatureVector(method, values)

    @staticmethod
    def from_json(text: str) -> "CurvatureVector":
        obj = json.loads(text)
        values = {canon_edge(int(u), int(v)): float(x) for u, v, x in obj["values"]}
        return CurvatureVector(obj["method"], values)
