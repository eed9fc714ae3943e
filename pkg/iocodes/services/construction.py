# -*- coding: utf-8 -*-
"""Construtores de IO-codes com garantia de limite, com um trace auditável dos casos aplicados.

O construtor de árvores remove peças pendentes com código conhecido (membros de 𝒯,
estrelas subdivididas, P_5 e T_3* no fim de um caminho mais longo) e resolve o resto
recursivamente. O construtor de grafos apaga arestas de ciclos induzidos enquanto o
grafo continua sem gêmeos e, quando isso não é possível, apaga um vértice de grau 2
do ciclo. Todo resultado é verificado no final.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from iocodes import settings
from iocodes.processamento.errors import (
    BadParam,
    ConstructionError,
    DegreeExceeded,
    Disconnected,
    FourCyclePresent,
    NoCode,
    NotATree,
    TooSmall,
)
from iocodes.processamento.models import (
    Graph,
    VertexSet,
    delete_edge,
    find_induced_cycle,
    has_four_cycle,
    induced_subgraph,
    is_connected,
    is_tree,
    iter_bits,
    longest_path_in_tree,
    mask_of,
    max_degree,
)
from iocodes.services.families import canonical_set_at, decompose_at, gen_star_plus_edge
from iocodes.services.solver_service import solve, solve_oracle
from iocodes.services.verification import io_code_obstruction, is_io_code


class BoundStatus(str, Enum):
    WITHIN_BOUND = "within_bound"
    EXCEPTIONAL_STAR = "exceptional_star"
    VIOLATION = "violation"


def check_bound(n: int, size: int, delta: int, is_star: Optional[bool] = None) -> BoundStatus:
    """Compara ``size`` com (2Δ−1)n/(2Δ) em aritmética inteira.

    ``is_star`` afirma (ou nega) que o grafo é T_Δ; ``None`` aceita a igualdade
    excepcional sempre que a aritmética a permite (n = 2Δ+1, size = 2Δ).
    """
    if 2 * delta * size <= (2 * delta - 1) * n:
        return BoundStatus.WITHIN_BOUND
    if is_star is not False and size * (2 * delta + 1) == 2 * delta * n and n == 2 * delta + 1:
        return BoundStatus.EXCEPTIONAL_STAR
    return BoundStatus.VIOLATION


class CaseKind(str, Enum):
    FAMILY = "family"
    DIAMETER_FOUR = "diameter_four"
    STAR_EDGE = "star_edge"
    STAR_COMPONENT = "star_component"
    DEGREE_CASE = "degree_case"
    PATH_END = "path_end"
    REST_STAR = "rest_star"
    TWIN_REPAIR = "twin_repair"
    ACYCLIC = "acyclic"
    BASE_PATTERN = "base_pattern"
    STAR_PLUS_EDGE = "star_plus_edge"
    EDGE_DELETION = "edge_deletion"
    VERTEX_DELETION = "vertex_deletion"
    FALLBACK = "fallback"


@dataclass(frozen=True)
class TraceStep:
    case: CaseKind
    order: int
    contributed: Tuple[int, ...] = ()
    details: Dict[str, object] = field(default_factory=dict)
    depth: int = 0
    warning: Optional[str] = None

    def to_dict(self) -> dict:
        data = {
            "case": self.case.value,
            "order": self.order,
            "depth": self.depth,
            "contributed": list(self.contributed),
            "details": self.details,
        }
        if self.warning:
            data["warning"] = self.warning
        return data


@dataclass
class ConstructionTrace:
    steps: List[TraceStep] = field(default_factory=list)
    exceptional: bool = False
    bound_status: Optional[BoundStatus] = None

    def record(self, step: TraceStep) -> None:
        self.steps.append(step)

    def replay(self) -> frozenset:
        """União dos códigos parciais; coincide com o código final."""
        return frozenset(v for step in self.steps for v in step.contributed)

    @property
    def warnings(self) -> List[str]:
        return [step.warning for step in self.steps if step.warning]

    @property
    def max_depth(self) -> int:
        return max((step.depth for step in self.steps), default=0)

    def to_dict(self) -> dict:
        return {
            "exceptional": self.exceptional,
            "bound_status": self.bound_status.value if self.bound_status else None,
            "steps": [step.to_dict() for step in self.steps],
        }


@dataclass(frozen=True)
class RootedTreeView:
    """Árvore (restrita a ``alive``) enraizada: pais, filhos, profundidades, alturas e D[v]."""

    tree: Graph
    alive: int
    root: int
    parent: Dict[int, int]
    children: Dict[int, List[int]]
    depth: Dict[int, int]
    height: Dict[int, int]
    subtree: Dict[int, int]


def root_tree(T: Graph, root: int, alive: Optional[int] = None) -> RootedTreeView:
    alive = T.full_mask if alive is None else alive
    parent = {root: -1}
    depth = {root: 0}
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in iter_bits(T.masks[v] & alive):
            if w not in depth:
                parent[w] = v
                depth[w] = depth[v] + 1
                order.append(w)
                queue.append(w)
    children: Dict[int, List[int]] = {v: [] for v in order}
    for v in order[1:]:
        children[parent[v]].append(v)
    height: Dict[int, int] = {}
    subtree: Dict[int, int] = {}
    for v in reversed(order):
        height[v] = max((height[c] + 1 for c in children[v]), default=0)
        mask = 1 << v
        for c in children[v]:
            mask |= subtree[c]
        subtree[v] = mask
    return RootedTreeView(T, alive, root, parent, children, depth, height, subtree)


class _Fallback(Exception):
    """Caso dado como inalcançável; o nível atual recorre ao solver exato."""


def _degree(G: Graph, v: int, alive: int) -> int:
    return (G.masks[v] & alive).bit_count()


def _twins(G: Graph, alive: int) -> List[Tuple[int, int]]:
    groups: Dict[int, List[int]] = {}
    for v in iter_bits(alive):
        groups.setdefault(G.masks[v] & alive, []).append(v)
    return sorted(
        (g[i], g[j]) for g in groups.values() for i in range(len(g)) for j in range(i + 1, len(g))
    )


def _is_io_code_within(G: Graph, alive: int, code: int) -> bool:
    seen = set()
    for v in iter_bits(alive):
        signature = G.masks[v] & code
        if not signature or signature in seen:
            return False
        seen.add(signature)
    return True


def _star_center(G: Graph, alive: int, k: Optional[int] = None) -> Optional[int]:
    """Centro, se ``alive`` induz uma estrela subdividida T_k (k qualquer >= 2 se omitido)."""
    size = alive.bit_count()
    if size < 5 or size % 2 == 0:
        return None
    arms = (size - 1) // 2
    if k is not None and arms != k:
        return None
    for c in iter_bits(alive):
        if _degree(G, c, alive) != arms:
            continue
        ok = True
        for s in iter_bits(G.masks[c] & alive):
            if _degree(G, s, alive) != 2:
                ok = False
                break
            other = G.masks[s] & alive & ~(1 << c)
            if _degree(G, other.bit_length() - 1, alive) != 1:
                ok = False
                break
        if ok:
            return c
    return None


def is_subdivided_star(G: Graph, delta: int) -> bool:
    """G ≅ T_Δ (a exceção do limite)."""
    return is_tree(G) and _star_center(G, G.full_mask, delta) is not None


def _leaves(G: Graph, alive: int) -> List[int]:
    return [v for v in iter_bits(alive) if _degree(G, v, alive) == 1]


class TreeCodeBuilder:
    """
    Constrói um IO-code de uma árvore sem gêmeos abertos respeitando o limite (2Δ−1)n/(2Δ).

    Args:
        tree (Graph): Grafo que contém a árvore; só os vértices em ``alive`` são considerados.
        delta (int): O Δ do limite.
        trace (ConstructionTrace): Destino dos passos.
        depth (int): Profundidade inicial (usada quando chamado pelo construtor de grafos).
    """

    def __init__(self, tree: Graph, delta: int, trace: ConstructionTrace, depth: int = 0):
        self.tree = tree
        self.delta = delta
        self.trace = trace
        self.base_depth = depth

    def code(self, alive: int) -> int:
        return self._code(alive, self.base_depth)

    def _record(self, case: CaseKind, alive: int, code: int, depth: int, **details) -> None:
        self.trace.record(TraceStep(case, alive.bit_count(), tuple(iter_bits(code)), details, depth))

    def _code(self, alive: int, depth: int) -> int:
        if depth > self.tree.n + self.tree.edge_count:
            raise ConstructionError("Recursão excedeu n + m níveis", self.trace)
        mark = len(self.trace.steps)
        try:
            if alive.bit_count() < 5 or _twins(self.tree, alive):
                raise _Fallback("subárvore pequena ou com gêmeos")
            return self._dispatch(alive, depth)
        except _Fallback as e:
            del self.trace.steps[mark:]
            return _exact_fallback(self.tree, alive, depth, str(e), self.trace)

    def _dispatch(self, alive: int, depth: int) -> int:
        T = self.tree
        for root in iter_bits(alive):
            found = decompose_at(T, root, alive)
            if found is not None:
                code = canonical_set_at(T, root, alive).mask
                self._record(CaseKind.FAMILY, alive, code, depth, root=root, vector=list(found[0].as_tuple()))
                return code

        view = induced_subgraph(T, iter_bits(alive))
        path = [view.to_old[v] for v in longest_path_in_tree(view.graph)]
        if len(path) - 1 == 4:
            return self._diameter_four(alive, path, depth)

        edge = self._star_edge(alive)
        if edge is not None:
            v1, v2, piece = edge
            return self._split_off(alive, piece, v1, v2, CaseKind.STAR_EDGE, depth, edge=[v1, v2])

        reduction = self._star_component(alive)
        if reduction is not None:
            v1, v2, piece, component = reduction
            self._record(CaseKind.STAR_COMPONENT, alive, 0, depth, component_center=v1, edge=[v1, v2])
            return self._split_off(alive, piece, v1, v2, CaseKind.STAR_EDGE, depth, edge=[v1, v2])

        return self._longest_path(alive, path, depth)

    def _diameter_four(self, alive: int, path: List[int], depth: int) -> int:
        T = self.tree
        center = path[2]
        leaf_neighbors = [w for w in iter_bits(T.masks[center] & alive) if _degree(T, w, alive) == 1]
        excluded = leaf_neighbors[0] if leaf_neighbors else _leaves(T, alive)[0]
        code = alive & ~(1 << excluded)
        if not _is_io_code_within(T, alive, code):
            raise _Fallback("diâmetro 4 sem forma T_k / T_k*")
        self._record(CaseKind.DIAMETER_FOUR, alive, code, depth, center=center, excluded=excluded)
        return code

    def _star_piece(self, alive: int, v1: int, v2: int) -> Optional[int]:
        """Máscara de F_1 se a componente de ``v1`` em T − v1v2 é T_k centrada em v1, 2 <= k <= Δ−1."""
        T = self.tree
        arms = T.masks[v1] & alive & ~(1 << v2)
        k = arms.bit_count()
        if not 2 <= k <= self.delta - 1:
            return None
        piece = (1 << v1) | arms
        for s in iter_bits(arms):
            if _degree(T, s, alive) != 2:
                return None
            leaf = T.masks[s] & alive & ~(1 << v1)
            if _degree(T, leaf.bit_length() - 1, alive) != 1:
                return None
            piece |= leaf
        return piece

    def _star_edge(self, alive: int) -> Optional[Tuple[int, int, int]]:
        T = self.tree
        best = None
        for a in iter_bits(alive):
            for b in iter_bits(T.masks[a] & alive):
                piece = self._star_piece(alive, a, b)
                if piece is None:
                    continue
                key = (piece.bit_count(), min(a, b), max(a, b), a)
                if best is None or key < best[0]:
                    best = (key, a, b, piece)
        if best is None:
            return None
        return best[1], best[2], best[3]

    def _star_component(self, alive: int) -> Optional[Tuple[int, int, int, int]]:
        """Aresta xy cuja remoção deixa uma componente T_Δ; reduz à peça T_{Δ−1} do centro."""
        T = self.tree
        for x in iter_bits(alive):
            for y in iter_bits(T.masks[x] & alive):
                component = root_tree(T, x, alive & ~(1 << y)).subtree[x]
                center = _star_center(T, component, self.delta)
                if center is None:
                    continue
                v2 = x if T.masks[x] & (1 << center) else (T.masks[x] & component).bit_length() - 1
                piece = self._star_piece(alive, center, v2)
                if piece is not None:
                    return center, v2, piece, component
        return None

    def _split_off(self, alive: int, piece: int, root: int, attach: int, case: CaseKind,
                   depth: int, piece_code: Optional[int] = None, **details) -> int:
        """Código da peça pendente (enraizada em ``root``, ligada a ``attach``) unido ao do resto."""
        T = self.tree
        if piece_code is None:
            piece_code = canonical_set_at(T, root, piece).mask
        if not piece_code >> root & 1:
            raise _Fallback("raiz da peça fora do código da peça")
        rest = alive & ~piece
        self._record(case, alive, piece_code, depth, piece_root=root, attach=attach,
                     piece_order=piece.bit_count(), **details)
        if rest.bit_count() <= 4:
            raise _Fallback(f"resto de ordem {rest.bit_count()}")
        twins = _twins(T, rest)
        if not twins:
            center = _star_center(T, rest, self.delta)
            if center is not None:
                return piece_code | self._rest_star(rest, attach, center, depth + 1)
            return piece_code | self._code(rest, depth + 1)
        if _degree(T, attach, rest) != 1 or any(attach not in pair for pair in twins):
            raise _Fallback("gêmeos no resto que não envolvem o vértice de ligação")
        trimmed = rest & ~(1 << attach)
        if trimmed.bit_count() <= 4:
            raise _Fallback(f"resto reparado de ordem {trimmed.bit_count()}")
        twin = next(u if v == attach else v for u, v in twins)
        self._record(CaseKind.TWIN_REPAIR, rest, 0, depth + 1, removed=attach, twin=twin)
        if _star_center(T, trimmed, self.delta) is not None:
            code = trimmed & ~(1 << twin)
            self._record(CaseKind.REST_STAR, trimmed, code, depth + 2, excluded=[twin])
            return piece_code | code
        return piece_code | self._code(trimmed, depth + 2)

    def _rest_star(self, rest: int, attach: int, center: int, depth: int) -> int:
        """Resto ≅ T_Δ: exclui a folha de ``attach`` e mais uma (suporte) ou uma folha ≠ attach."""
        T = self.tree
        leaves = _leaves(T, rest)
        if T.masks[attach] & (1 << center):
            own = (T.masks[attach] & rest & ~(1 << center)).bit_length() - 1
            other = next(l for l in leaves if l != own)
            excluded = [own, other]
        else:
            excluded = [next(l for l in leaves if l != attach)]
        code = rest
        for v in excluded:
            code &= ~(1 << v)
        self._record(CaseKind.REST_STAR, rest, code, depth, center=center, excluded=excluded)
        return code

    def _longest_path(self, alive: int, path: List[int], depth: int) -> int:
        T = self.tree
        d = len(path) - 1
        if d < 5:
            raise _Fallback(f"diâmetro {d} sem regra aplicável")
        view = root_tree(T, path[-1], alive)
        deep = [v for v in iter_bits(alive) if view.depth[v] + view.height[v] == d]

        for level, minimum in ((2, 4), (3, 3), (4, 3)):
            for c in deep:
                if view.depth[c] != d - level or _degree(T, c, alive) < minimum:
                    continue
                piece = view.subtree[c]
                if decompose_at(T, c, piece) is not None:
                    return self._split_off(alive, piece, c, view.parent[c], CaseKind.DEGREE_CASE, depth,
                                           level=level)
                for x in view.children[c]:
                    inner = view.subtree[x]
                    if decompose_at(T, x, inner) is not None:
                        return self._split_off(alive, inner, x, c, CaseKind.DEGREE_CASE, depth, level=level)
                raise _Fallback(f"subárvore de grau alto no nível {level} fora de 𝒯")

        v = path
        piece = view.subtree[v[4]]
        if piece.bit_count() == 5:
            piece_code = mask_of(v[1:5])
        elif piece.bit_count() == 6 and _degree(T, v[2], alive) == 3:
            piece_code = mask_of(v[:5])
        else:
            raise _Fallback("subárvore final não é P_5 nem T_3*")
        if not _is_io_code_within(T, piece, piece_code):
            raise _Fallback("código da subárvore final inválido")
        return self._split_off(alive, piece, v[4], v[5], CaseKind.PATH_END, depth, piece_code=piece_code,
                               path=v[:5])


def _exact_fallback(G: Graph, alive: int, depth: int, reason: str, trace: ConstructionTrace) -> int:
    sub = induced_subgraph(G, iter_bits(alive))
    if io_code_obstruction(sub.graph) is not None:
        raise ConstructionError(f"Subinstância sem IO-code ({reason})", trace)
    logging.warning(f"Construção recorreu ao solver exato: {reason} (ordem {sub.graph.n})")
    result = solve_oracle(sub.graph) if sub.graph.n <= settings.ORACLE_MAX_N else solve(sub.graph)
    code = 0
    for v in result.code:
        code |= 1 << sub.to_old[v]
    trace.record(TraceStep(CaseKind.FALLBACK, sub.graph.n, tuple(iter_bits(code)), {"reason": reason}, depth,
                           warning=reason))
    return code


def _finish(G: Graph, code: int, delta: int, exceptional: bool, trace: ConstructionTrace) -> VertexSet:
    S = VertexSet(code, G.n)
    verdict = is_io_code(G, S)
    if not verdict.ok:
        raise ConstructionError(f"Código construído inválido: {verdict.violation}", trace)
    if trace.replay() != S.members:
        raise ConstructionError("Trace não reproduz o código final", trace)
    status = check_bound(G.n, len(S), delta, is_star=exceptional)
    trace.exceptional = status == BoundStatus.EXCEPTIONAL_STAR
    trace.bound_status = status
    if status == BoundStatus.VIOLATION:
        raise ConstructionError(f"Código de tamanho {len(S)} excede o limite para n={G.n}, Δ={delta}", trace)
    return S


def _check_common(G: Graph, delta: int) -> None:
    if delta < 3:
        raise BadParam(f"Δ deve ser >= 3, recebido {delta}")
    if G.n == 0 or not is_connected(G):
        raise Disconnected("O construtor exige um grafo conexo")
    witness = io_code_obstruction(G)
    if witness is not None:
        raise NoCode(f"O grafo não admite IO-code (testemunha {witness})", witness)


def construct_tree_code(T: Graph, delta: int) -> Tuple[VertexSet, ConstructionTrace]:
    """IO-code de uma árvore sem gêmeos com |S| <= (2Δ−1)n/(2Δ), salvo T ≅ T_Δ (sinalizado)."""
    _check_common(T, delta)
    if not is_tree(T):
        raise NotATree("construct_tree_code exige uma árvore")
    if T.n < 5:
        raise TooSmall(f"A árvore precisa de ao menos 5 vértices, recebido {T.n}")
    if max_degree(T) > delta:
        raise DegreeExceeded(f"Grau máximo {max_degree(T)} excede Δ={delta}")
    trace = ConstructionTrace()
    code = TreeCodeBuilder(T, delta, trace).code(T.full_mask)
    exceptional = is_subdivided_star(T, delta)
    S = _finish(T, code, delta, exceptional, trace)
    logging.debug(f"construct_tree_code: n={T.n} |S|={len(S)} passos={len(trace.steps)}")
    return S, trace


def _pattern(graph: Graph, code: Tuple[int, ...]) -> Tuple[nx.Graph, frozenset]:
    return graph.to_networkx(), frozenset(code)


def _base_patterns() -> List[Tuple[str, nx.Graph, frozenset]]:
    paw = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    patterns = [("paw", *_pattern(paw, (0, 1, 2)))]
    for variant in ("G1", "G2", "G3"):
        graph, spec = gen_star_plus_edge(variant, 2)
        patterns.append((f"{variant}-2", *_pattern(graph, spec.reference_code)))
    return patterns


def _match(sub: Graph, pattern: nx.Graph, code: frozenset) -> Optional[List[int]]:
    """Transporta ``code`` de ``pattern`` para ``sub`` por um isomorfismo, se existir."""
    matcher = GraphMatcher(sub.to_networkx(), pattern)
    if not matcher.is_isomorphic():
        return None
    return sorted(v for v, image in matcher.mapping.items() if image in code)


class GraphCodeBuilder:
    """Construtor para grafos conexos, sem gêmeos e sem 4-ciclos."""

    def __init__(self, delta: int, trace: ConstructionTrace):
        self.delta = delta
        self.trace = trace
        self.patterns = _base_patterns()

    def code(self, G: Graph, alive: int, depth: int = 0) -> int:
        if depth > 2 * (G.n + G.edge_count):
            raise ConstructionError("Recursão excedeu o limite de profundidade", self.trace)
        mark = len(self.trace.steps)
        try:
            return self._dispatch(G, alive, depth)
        except _Fallback as e:
            del self.trace.steps[mark:]
            return _exact_fallback(G, alive, depth, str(e), self.trace)

    def _record(self, case: CaseKind, alive: int, code: int, depth: int, **details) -> None:
        self.trace.record(TraceStep(case, alive.bit_count(), tuple(iter_bits(code)), details, depth))

    def _dispatch(self, G: Graph, alive: int, depth: int) -> int:
        if _twins(G, alive):
            raise _Fallback("subgrafo com gêmeos abertos")
        sub = induced_subgraph(G, iter_bits(alive))
        if sub.graph.edge_count == sub.graph.n - 1:
            self._record(CaseKind.ACYCLIC, alive, 0, depth)
            return TreeCodeBuilder(G, self.delta, self.trace, depth + 1).code(alive)

        if sub.graph.n <= 5:
            for name, pattern, pattern_code in self.patterns:
                found = _match(sub.graph, pattern, pattern_code)
                if found is not None:
                    code = 0
                    for v in found:
                        code |= 1 << sub.to_old[v]
                    self._record(CaseKind.BASE_PATTERN, alive, code, depth, pattern=name)
                    return code

        cycle = [sub.to_old[v] for v in find_induced_cycle(sub.graph)]
        for i, u in enumerate(cycle):
            v = cycle[(i + 1) % len(cycle)]
            reduced = delete_edge(G, u, v)
            if _twins(reduced, alive):
                continue
            if _star_center(reduced, alive, self.delta) is not None:
                return self._star_plus_edge(G, alive, depth, (u, v))
            self._record(CaseKind.EDGE_DELETION, alive, 0, depth, edge=[u, v], cycle=cycle)
            return self.code(reduced, alive, depth + 1)

        supports = 0
        for x in iter_bits(alive):
            if _degree(G, x, alive) == 1:
                supports |= G.masks[x] & alive
        for v0 in sorted(cycle):
            if _degree(G, v0, alive) != 2:
                continue
            if (G.masks[v0] & alive) & ~supports == 0:
                self._record(CaseKind.VERTEX_DELETION, alive, 0, depth, vertex=v0, cycle=cycle)
                return self.code(G, alive & ~(1 << v0), depth + 1)
        raise _Fallback("ciclo sem vértice de grau 2 entre suportes")

    def _star_plus_edge(self, G: Graph, alive: int, depth: int, edge: Tuple[int, int]) -> int:
        sub = induced_subgraph(G, iter_bits(alive))
        for variant in ("G1", "G2", "G3"):
            pattern_graph, spec = gen_star_plus_edge(variant, self.delta)
            found = _match(sub.graph, *_pattern(pattern_graph, spec.reference_code))
            if found is not None:
                code = 0
                for v in found:
                    code |= 1 << sub.to_old[v]
                self._record(CaseKind.STAR_PLUS_EDGE, alive, code, depth, variant=variant, edge=list(edge))
                return code
        raise _Fallback("T_Δ mais uma aresta fora dos padrões G1/G2/G3")


def _is_paw(G: Graph) -> bool:
    paw = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    return G.n == 4 and nx.is_isomorphic(G.to_networkx(), paw.to_networkx())


def construct_graph_code(G: Graph, delta: int) -> Tuple[VertexSet, ConstructionTrace]:
    """IO-code de um grafo conexo, sem gêmeos e sem 4-ciclos, dentro do limite (2Δ−1)n/(2Δ).

    A pata (n = 4) é aceita como caso base.
    """
    _check_common(G, delta)
    if has_four_cycle(G):
        raise FourCyclePresent("O grafo contém um 4-ciclo")
    if G.n < 5 and not _is_paw(G):
        raise TooSmall(f"O grafo precisa de ao menos 5 vértices, recebido {G.n}")
    if max_degree(G) > delta:
        raise DegreeExceeded(f"Grau máximo {max_degree(G)} excede Δ={delta}")
    trace = ConstructionTrace()
    code = GraphCodeBuilder(delta, trace).code(G, G.full_mask)
    exceptional = is_subdivided_star(G, delta)
    S = _finish(G, code, delta, exceptional, trace)
    logging.debug(f"construct_graph_code: n={G.n} |S|={len(S)} passos={len(trace.steps)}")
    return S, trace
