# -*- coding: utf-8 -*-
"""Cálculo exato de γ^IOC: oráculo por força bruta e branch-and-bound.

Um IO-code é um conjunto que intercepta todos os "requisitos": cada
vizinhança ``N(v)`` (dominação total) e cada diferença simétrica
``N(u) △ N(v)`` (separação). O branch-and-bound resolve esse problema de
transversal mínimo com propagação unitária e um limite inferior de
requisitos disjuntos.
"""
import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from iocodes import settings
from iocodes.processamento.errors import NoCode, TooLarge
from iocodes.processamento.models import Graph, VertexSet, iter_bits, mask_of, support_mask
from iocodes.services.verification import io_code_obstruction, is_io_code_mask


class Method(str, Enum):
    ORACLE = "oracle"
    BRANCH_AND_BOUND = "branch_and_bound"


@dataclass(frozen=True)
class SolveResult:
    gamma: int
    code: VertexSet
    nodes_explored: int
    method: Method
    wall_time_ms: float = 0.0

    def to_dict(self) -> dict:
        return {
            "gamma": self.gamma,
            "code": self.code.to_list(),
            "nodes_explored": self.nodes_explored,
            "method": self.method.value,
            "wall_time_ms": round(self.wall_time_ms, 3),
        }


def _require_code(G: Graph) -> None:
    witness = io_code_obstruction(G)
    if witness is None:
        return
    if len(witness) == 1:
        raise NoCode(f"Vértice isolado {witness[0]}: não existe IO-code", witness)
    raise NoCode(f"Gêmeos abertos {witness[0]} e {witness[1]}: não existe IO-code", witness)


def solve_oracle(G: Graph, max_n: Optional[int] = None) -> SolveResult:
    """Enumera subconjuntos em ordem de cardinalidade; o primeiro IO-code é ótimo."""
    cap = settings.ORACLE_MAX_N if max_n is None else max_n
    if G.n > cap:
        raise TooLarge(f"Oráculo limitado a n <= {cap}, recebido n={G.n}")
    _require_code(G)
    inicio = time.perf_counter()
    masks = G.masks
    checked = 0
    for size in range(G.n + 1):
        for combo in combinations(range(G.n), size):
            checked += 1
            code = mask_of(combo)
            if is_io_code_mask(masks, code):
                elapsed = (time.perf_counter() - inicio) * 1000
                return SolveResult(size, VertexSet(code, G.n), checked, Method.ORACLE, elapsed)
    raise RuntimeError("Oráculo não encontrou código apesar de o grafo admitir um")


def requirements(G: Graph) -> List[int]:
    """Requisitos minimais (sem duplicatas nem superconjuntos), ordenados por tamanho."""
    masks = G.masks
    raw = set(masks)
    for u in range(G.n):
        for v in range(u + 1, G.n):
            raw.add(masks[u] ^ masks[v])
    kept: List[int] = []
    for req in sorted(raw, key=lambda r: (r.bit_count(), r)):
        if not any(req & k == k for k in kept):
            kept.append(req)
    return kept


class LowerBound(ABC):
    @abstractmethod
    def estimate(self, available: Sequence[int]) -> int:
        """Quantos vértices ainda são necessários, dadas as opções de cada requisito aberto."""


class TrivialBound(LowerBound):
    def estimate(self, available: Sequence[int]) -> int:
        return 1 if available else 0


class DisjointRequirementsBound(LowerBound):
    """Conta requisitos abertos com opções duas a duas disjuntas (guloso, menores primeiro)."""

    def estimate(self, available: Sequence[int]) -> int:
        used = 0
        count = 0
        for options in sorted(available, key=int.bit_count):
            if not options & used:
                used |= options
                count += 1
        return count


class BranchAndBoundSolver:
    """
    Branch-and-bound sobre os requisitos do grafo.

    Args:
        graph (Graph): Grafo que admite IO-code.
        bound (LowerBound): Estratégia de limite inferior.
    """

    def __init__(self, graph: Graph, bound: Optional[LowerBound] = None):
        self.graph = graph
        self.bound = bound or DisjointRequirementsBound()
        self.reqs = requirements(graph)
        self.covers = [0] * graph.n
        for i, req in enumerate(self.reqs):
            for x in iter_bits(req):
                self.covers[x] |= 1 << i
        self.nodes = 0
        self.best_mask: Optional[int] = None
        self.best_size = graph.n + 1
        self.stop_at_first = False

    def _propagate(self, chosen: int, banned: int, open_reqs: int) -> Optional[Tuple[int, int]]:
        """Força vértices de requisitos com uma única opção; ``None`` se algum ficou sem opção."""
        changed = True
        while changed:
            changed = False
            for i in iter_bits(open_reqs):
                if not open_reqs >> i & 1:
                    continue
                options = self.reqs[i] & ~banned
                if not options:
                    return None
                if options & (options - 1) == 0:
                    x = options.bit_length() - 1
                    chosen |= options
                    open_reqs &= ~self.covers[x]
                    changed = True
        return chosen, open_reqs

    def _greedy(self) -> int:
        chosen = support_mask(self.graph)
        open_reqs = (1 << len(self.reqs)) - 1
        for x in iter_bits(chosen):
            open_reqs &= ~self.covers[x]
        while open_reqs:
            x = max(range(self.graph.n), key=lambda v: ((self.covers[v] & open_reqs).bit_count(), -v))
            chosen |= 1 << x
            open_reqs &= ~self.covers[x]
        masks = self.graph.masks
        for x in sorted(iter_bits(chosen), reverse=True):
            if is_io_code_mask(masks, chosen & ~(1 << x)):
                chosen &= ~(1 << x)
        return chosen

    def _branch(self, chosen: int, banned: int, open_reqs: int) -> None:
        self.nodes += 1
        state = self._propagate(chosen, banned, open_reqs)
        if state is None:
            return
        chosen, open_reqs = state
        size = chosen.bit_count()
        if not open_reqs:
            if size < self.best_size:
                self.best_size = size
                self.best_mask = chosen
            return
        available = [self.reqs[i] & ~banned for i in iter_bits(open_reqs)]
        if size + self.bound.estimate(available) >= self.best_size:
            return
        pivot = min(available, key=lambda opts: (opts.bit_count(), opts))
        candidates = sorted(iter_bits(pivot), key=lambda v: (-(self.covers[v] & open_reqs).bit_count(), v))
        for x in candidates:
            self._branch(chosen | 1 << x, banned, open_reqs & ~self.covers[x])
            if self.stop_at_first and self.best_mask is not None:
                return
            banned |= 1 << x

    def run(self, limit: Optional[int] = None) -> Optional[int]:
        """Busca um código de tamanho mínimo; com ``limit``, qualquer código de tamanho <= limit."""
        n = self.graph.n
        if limit is None:
            incumbent = self._greedy()
            self.best_mask = incumbent
            self.best_size = incumbent.bit_count()
        else:
            self.stop_at_first = True
            self.best_size = limit + 1
        chosen = support_mask(self.graph)
        open_reqs = (1 << len(self.reqs)) - 1
        for x in iter_bits(chosen):
            open_reqs &= ~self.covers[x]
        if n and self.reqs:
            self._branch(chosen, 0, open_reqs)
        elif limit is not None and limit >= 0:
            self.best_mask = 0
        return self.best_mask


def solve(G: Graph, bound: Optional[LowerBound] = None) -> SolveResult:
    """γ^IOC exato por branch-and-bound, com suportes forçados e incumbente guloso."""
    _require_code(G)
    inicio = time.perf_counter()
    solver = BranchAndBoundSolver(G, bound)
    code = solver.run()
    if code is None or not is_io_code_mask(G.masks, code):
        raise RuntimeError("Branch-and-bound terminou sem código válido")
    elapsed = (time.perf_counter() - inicio) * 1000
    logging.debug(f"solve: n={G.n} gamma={code.bit_count()} nós={solver.nodes} em {elapsed:.1f} ms")
    return SolveResult(code.bit_count(), VertexSet(code, G.n), solver.nodes, Method.BRANCH_AND_BOUND, elapsed)


def solve_with_budget(G: Graph, max_size: int) -> Optional[VertexSet]:
    """Decisão exata: algum IO-code com no máximo ``max_size`` vértices, ou ``None``."""
    _require_code(G)
    if max_size < 0:
        return None
    solver = BranchAndBoundSolver(G)
    code = solver.run(limit=max_size)
    logging.debug(f"solve_with_budget: n={G.n} limite={max_size} nós={solver.nodes} encontrado={code is not None}")
    return None if code is None else VertexSet(code, G.n)
