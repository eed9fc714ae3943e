# -*- coding: utf-8 -*-
"""Verificação de TD-sets, códigos abertos separadores e IO-codes."""
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

import pandas as pd

from iocodes.processamento.errors import UniverseMismatch
from iocodes.processamento.models import Graph, VertexSet, find_open_twins, iter_bits


@dataclass(frozen=True)
class NotTotallyDominated:
    vertex: int

    def to_dict(self) -> dict:
        return {"kind": "not_totally_dominated", "vertex": self.vertex}


@dataclass(frozen=True)
class NotSeparated:
    u: int
    v: int

    def to_dict(self) -> dict:
        return {"kind": "not_separated", "pair": [self.u, self.v]}


Violation = Union[NotTotallyDominated, NotSeparated]


@dataclass(frozen=True)
class Verdict:
    """Resultado de uma verificação; ``violation`` existe se e somente se ``ok`` é falso."""

    ok: bool
    violation: Optional[Violation] = None

    def __post_init__(self):
        if self.ok != (self.violation is None):
            raise ValueError("Verdict inconsistente: ok deve equivaler à ausência de violação")

    def to_dict(self) -> dict:
        return {"ok": self.ok, "violation": self.violation.to_dict() if self.violation else None}


OK = Verdict(True)


def _check_universe(G: Graph, S: VertexSet) -> None:
    if S.universe != G.n:
        raise UniverseMismatch(f"Código construído para n={S.universe}, grafo tem n={G.n}")


def signatures(G: Graph, S: VertexSet) -> List[int]:
    """Máscaras ``N(v) ∩ S`` para todo vértice ``v``."""
    _check_universe(G, S)
    return [mask & S.mask for mask in G.masks]


def undominated_vertex(masks: Sequence[int], code: int) -> Optional[int]:
    for v, mask in enumerate(masks):
        if not mask & code:
            return v
    return None


def colliding_pair(masks: Sequence[int], code: int) -> Optional[Tuple[int, int]]:
    """Menor par (lexicográfico) de vértices com a mesma assinatura."""
    first_seen: Dict[int, int] = {}
    best = None
    for v, mask in enumerate(masks):
        signature = mask & code
        if signature in first_seen:
            pair = (first_seen[signature], v)
            if best is None or pair < best:
                best = pair
        else:
            first_seen[signature] = v
    return best


def is_io_code_mask(masks: Sequence[int], code: int) -> bool:
    """Versão rápida (sem testemunha) usada pelos solvers."""
    seen = set()
    for mask in masks:
        signature = mask & code
        if not signature or signature in seen:
            return False
        seen.add(signature)
    return True


def is_total_dominating(G: Graph, S: VertexSet) -> Verdict:
    _check_universe(G, S)
    v = undominated_vertex(G.masks, S.mask)
    return OK if v is None else Verdict(False, NotTotallyDominated(v))


def is_separating_open_code(G: Graph, S: VertexSet) -> Verdict:
    _check_universe(G, S)
    pair = colliding_pair(G.masks, S.mask)
    return OK if pair is None else Verdict(False, NotSeparated(*pair))


def is_io_code(G: Graph, S: VertexSet) -> Verdict:
    """TD-set e código separador; a dominação total é verificada primeiro."""
    verdict = is_total_dominating(G, S)
    if not verdict.ok:
        return verdict
    return is_separating_open_code(G, S)


def io_code_obstruction(G: Graph) -> Optional[Tuple[int, ...]]:
    """Vértice isolado ``(v,)`` ou primeiro par de gêmeos abertos; ``None`` se existe IO-code."""
    for v, mask in enumerate(G.masks):
        if not mask:
            return (v,)
    twins = find_open_twins(G)
    return twins[0] if twins else None


def admits_io_code(G: Graph) -> bool:
    return io_code_obstruction(G) is None


def signature_table(G: Graph, S: VertexSet) -> pd.DataFrame:
    """Tabela por vértice: vizinhança, assinatura ``N(v) ∩ S`` e colisões."""
    sigs = signatures(G, S)
    grupos: Dict[int, List[int]] = {}
    for v, sig in enumerate(sigs):
        grupos.setdefault(sig, []).append(v)
    linhas = []
    for v, sig in enumerate(sigs):
        linhas.append({
            "vertex": v,
            "in_code": v in S,
            "neighborhood": " ".join(str(w) for w in iter_bits(G.masks[v])),
            "signature": " ".join(str(w) for w in iter_bits(sig)),
            "dominated": bool(sig),
            "collides_with": " ".join(str(w) for w in grupos[sig] if w != v),
        })
    return pd.DataFrame(linhas, columns=["vertex", "in_code", "neighborhood", "signature", "dominated", "collides_with"])
