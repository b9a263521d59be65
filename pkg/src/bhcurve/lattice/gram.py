"""Assembling Gram matrices from a configuration, and their lattice invariants."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from ..errors import WitnessUnavailable
from .configs import CurveConfig
from .intmat import artin_sigma, bareiss_det, inertia
from .surfaces import SurfaceCurve, ambient_meet, exceptional_meet, node_contribution
from .tables import QUARTIC_GRAM, SEXTIC_GRAM


@dataclass
class GramMatrix:
    labels: tuple[str, ...]
    rows: list[list[int | None]]
    mode: str
    provenance: dict = dc_field(default_factory=dict)  # (i, j) -> short rule/witness text

    @property
    def complete(self) -> bool:
        return all(x is not None for row in self.rows for x in row)

    def entry(self, a: str, b: str):
        return self.rows[self.labels.index(a)][self.labels.index(b)]

    def to_json(self) -> str:
        return json.dumps({"labels": list(self.labels), "rows": self.rows, "mode": self.mode}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "GramMatrix":
        d = json.loads(text)
        return cls(tuple(d["labels"]), d["rows"], d["mode"])

    def to_text(self) -> str:
        w = max(len(lab) for lab in self.labels)
        lines = []
        for lab, row in zip(self.labels, self.rows):
            cells = " ".join(f"{'?' if x is None else x:>2}" for x in row)
            lines.append(f"{lab:<{w}}  {cells}")
        return "\n".join(lines)


def intersection_number(cfg: CurveConfig, A: SurfaceCurve, B: SurfaceCurve) -> tuple[int, str]:
    """A . B on the resolution for two distinct curves of the configuration."""
    S = cfg.surface
    if A.exceptional and B.exceptional:
        na, pa = cfg.exceptional_chain[A.label]
        nb, pb = cfg.exceptional_chain[B.label]
        if na != nb:
            return 0, "different nodes"
        return (1 if abs(pa - pb) == 1 else 0), "A-chain"
    if A.exceptional or B.exceptional:
        E, C = (A, B) if A.exceptional else (B, A)
        nd = E.node
        if S.d == 2:
            return exceptional_meet(S, C, nd)
        if nd not in S.nodes_on(C):
            return 0, "misses node"
        # A_3 labeling: L_tau meets exactly E_tau
        return (1 if C.tau == E.tau else 0), "labeling rule"
    total = 0
    notes = []
    for rec in ambient_meet(S, A, B):
        if rec.node is not None:
            if S.d == 2:
                m, how = node_contribution(S, A, B, rec.node)
            else:
                # distinct labels hit distinct chain ends; equal labels hit E_tau at distinct points
                m, how = 0, "A3 rule"
            total += m
            notes.append(how)
        elif rec.multiplicity is None:
            raise WitnessUnavailable(f"{A.label} . {B.label} at {rec.point}")
        else:
            total += rec.multiplicity
            notes.append(rec.witness)
    return total, ",".join(notes) or "disjoint"


def gram_assemble(cfg: CurveConfig, mode: str = "computed", labels=None) -> GramMatrix:
    """Gram matrix of the selected curves.

    ``table_replay`` returns the stored fixture; ``computed`` derives every
    off-diagonal entry from the geometry.  Entries whose witness cannot be
    certified are left as ``None``.
    """
    labels = tuple(labels) if labels is not None else cfg.selected
    if mode == "table_replay":
        if labels != cfg.selected:
            raise ValueError("table replay is only defined for the selected labels")
        table = QUARTIC_GRAM if cfg.name == "quartic" else SEXTIC_GRAM
        return GramMatrix(labels, [list(r) for r in table], mode)
    if mode != "computed":
        raise ValueError(f"unknown mode {mode!r}")
    n = len(labels)
    rows: list[list[int | None]] = [[-2 if i == j else 0 for j in range(n)] for i in range(n)]
    prov = {}
    for i in range(n):
        for j in range(i + 1, n):
            try:
                v, how = intersection_number(cfg, cfg[labels[i]], cfg[labels[j]])
            except WitnessUnavailable as exc:
                v, how = None, f"unavailable: {exc}"
            rows[i][j] = rows[j][i] = v
            prov[(i, j)] = how
    return GramMatrix(labels, rows, mode, prov)


@dataclass(frozen=True)
class LatticeInvariants:
    determinant: int
    artin_sigma: int | None
    signature: tuple[int, int]


def lattice_invariants(G, p: int) -> LatticeInvariants:
    """Determinant, Artin invariant (from det = -p^(2 sigma)) and signature."""
    rows = G.rows if isinstance(G, GramMatrix) else G
    if any(x is None for r in rows for x in r):
        raise ValueError("matrix has uncomputed entries")
    det = bareiss_det(rows)
    pos, neg, _ = inertia(rows)
    return LatticeInvariants(det, artin_sigma(det, p), (pos, neg))
