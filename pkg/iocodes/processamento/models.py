# -*- coding: utf-8 -*-
"""Modelos de grafo: ``Graph`` imutável, ``VertexSet`` e as operações estruturais.

Vértices são índices densos ``0..n-1``. As vizinhanças são guardadas como
máscaras de bits (``int`` do Python), o que torna interseções e comparações
de assinaturas ``N(v) ∩ S`` operações de palavra.
"""
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from iocodes.processamento.errors import (
    BadParam,
    Disconnected,
    EmptyGraph,
    InvalidVertex,
    NotATree,
    NotPresent,
    UniverseMismatch,
)


def iter_bits(mask: int) -> Iterator[int]:
    """Itera os índices dos bits ligados de ``mask`` em ordem crescente."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Grafo simples, não direcionado e imutável.

    Args:
        n (int): Número de vértices.
        edges (Iterable[Tuple[int, int]]): Arestas ``(u, v)``; repetições são ignoradas.
    """

    __slots__ = ("_n", "_masks", "_m")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]] = ()):
        if n < 0:
            raise BadParam(f"Número de vértices inválido: {n}")
        masks = [0] * n
        for u, v in edges:
            for x in (u, v):
                if not 0 <= x < n:
                    raise InvalidVertex(f"Vértice {x} fora do intervalo 0..{n - 1}")
            if u == v:
                raise BadParam(f"Laço no vértice {u} não é permitido")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._n = n
        self._masks = tuple(masks)
        self._m = sum(m.bit_count() for m in masks) // 2

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        """Constrói a partir de máscaras de vizinhança já simétricas."""
        graph = cls.__new__(cls)
        graph._n = len(masks)
        graph._masks = tuple(masks)
        graph._m = sum(m.bit_count() for m in masks) // 2
        return graph

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> "Graph":
        nodes = sorted(nx_graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls(len(nodes), ((index[u], index[v]) for u, v in nx_graph.edges()))

    @property
    def n(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return self._m

    m = edge_count

    @property
    def masks(self) -> Tuple[int, ...]:
        return self._masks

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def vertices(self) -> range:
        return range(self._n)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise InvalidVertex(f"Vértice {v} fora do intervalo 0..{self._n - 1}")

    def mask(self, v: int) -> int:
        self.check_vertex(v)
        return self._masks[v]

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.mask(v)))

    def degree(self, v: int) -> int:
        return self.mask(v).bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.mask(u) >> v & 1) if 0 <= v < self._n else False

    def edges(self) -> List[Tuple[int, int]]:
        """Arestas ``(u, v)`` com ``u < v`` em ordem lexicográfica."""
        return [(u, v) for u in range(self._n) for v in iter_bits(self._masks[u] >> (u + 1) << (u + 1))]

    def degrees(self) -> List[int]:
        return [m.bit_count() for m in self._masks]

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self._n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._masks == other._masks

    def __hash__(self) -> int:
        return hash(self._masks)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


@dataclass(frozen=True)
class VertexSet:
    """Conjunto de vértices (código candidato) construído sobre um universo ``n``."""

    mask: int
    universe: int

    def __post_init__(self):
        if self.mask >> self.universe:
            raise InvalidVertex(f"Conjunto contém vértices fora de 0..{self.universe - 1}")

    @classmethod
    def of(cls, universe: int, members: Iterable[int]) -> "VertexSet":
        members = list(members)
        for v in members:
            if not 0 <= v < universe:
                raise InvalidVertex(f"Vértice {v} fora do intervalo 0..{universe - 1}")
        return cls(mask_of(members), universe)

    @classmethod
    def full(cls, universe: int) -> "VertexSet":
        return cls((1 << universe) - 1, universe)

    @property
    def members(self) -> FrozenSet[int]:
        return frozenset(iter_bits(self.mask))

    def to_list(self) -> List[int]:
        return list(iter_bits(self.mask))

    def _check(self, other: "VertexSet") -> None:
        if self.universe != other.universe:
            raise UniverseMismatch(f"Universos diferentes: {self.universe} e {other.universe}")

    def union(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.mask | other.mask, self.universe)

    def intersection(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.mask & other.mask, self.universe)

    def difference(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.mask & ~other.mask, self.universe)

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __le__ = issubset

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()}, universe={self.universe})"


class VertexTag(str, Enum):
    LEAF = "leaf"
    SUPPORT = "support"
    STRONG_SUPPORT = "strong_support"
    INTERNAL = "internal"


@dataclass(frozen=True)
class Component:
    """Componente conexa com as tabelas de tradução de índices nos dois sentidos."""

    graph: Graph
    to_old: Tuple[int, ...]
    to_new: Dict[int, int]


def open_neighborhood(G: Graph, v: int) -> VertexSet:
    return VertexSet(G.mask(v), G.n)


def max_degree(G: Graph) -> int:
    if G.n == 0:
        raise EmptyGraph("Grafo vazio não tem grau máximo")
    return max(G.degrees())


def min_degree(G: Graph) -> int:
    if G.n == 0:
        raise EmptyGraph("Grafo vazio não tem grau mínimo")
    return min(G.degrees())


def find_open_twins(G: Graph) -> List[Tuple[int, int]]:
    """Todos os pares ``(u, v)``, ``u < v``, com ``N(u) = N(v)``, em ordem lexicográfica."""
    groups: Dict[int, List[int]] = {}
    for v, mask in enumerate(G.masks):
        groups.setdefault(mask, []).append(v)
    pairs = [
        (members[i], members[j])
        for members in groups.values()
        for i in range(len(members))
        for j in range(i + 1, len(members))
    ]
    return sorted(pairs)


def has_four_cycle(G: Graph) -> bool:
    """Verdadeiro se dois vértices distintos têm pelo menos dois vizinhos em comum."""
    masks = G.masks
    for u in range(G.n):
        for v in range(u + 1, G.n):
            if (masks[u] & masks[v]).bit_count() >= 2:
                return True
    return False


def component_masks(G: Graph) -> List[int]:
    """Máscaras das componentes conexas, ordenadas pelo menor vértice."""
    remaining = G.full_mask
    found = []
    while remaining:
        seed = remaining & -remaining
        reached = seed
        frontier = seed
        while frontier:
            grown = 0
            for v in iter_bits(frontier):
                grown |= G.masks[v]
            frontier = grown & ~reached
            reached |= frontier
        found.append(reached)
        remaining &= ~reached
    return found


def is_connected(G: Graph) -> bool:
    return len(component_masks(G)) <= 1


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> Component:
    """Subgrafo induzido, reindexado em ordem crescente dos vértices originais."""
    to_old = tuple(sorted(set(vertices)))
    to_new = {old: new for new, old in enumerate(to_old)}
    keep = mask_of(to_old)
    masks = [mask_of(to_new[u] for u in iter_bits(G.masks[old] & keep)) for old in to_old]
    return Component(Graph.from_masks(masks), to_old, to_new)


def components(G: Graph) -> List[Component]:
    return [induced_subgraph(G, iter_bits(mask)) for mask in component_masks(G)]


def classify_vertices(G: Graph) -> List[FrozenSet[VertexTag]]:
    degrees = G.degrees()
    leaves = mask_of(v for v, d in enumerate(degrees) if d == 1)
    tags = []
    for v in G.vertices():
        current = set()
        if degrees[v] == 1:
            current.add(VertexTag.LEAF)
        elif degrees[v] >= 2:
            current.add(VertexTag.INTERNAL)
        leaf_neighbors = (G.masks[v] & leaves).bit_count()
        if leaf_neighbors >= 1:
            current.add(VertexTag.SUPPORT)
        if leaf_neighbors >= 2:
            current.add(VertexTag.STRONG_SUPPORT)
        tags.append(frozenset(current))
    return tags


def support_mask(G: Graph) -> int:
    """Máscara dos vértices suporte (vizinhos de alguma folha)."""
    mask = 0
    for v in G.vertices():
        if G.masks[v].bit_count() == 1:
            mask |= G.masks[v]
    return mask


def bfs_distances(G: Graph, source: int) -> List[int]:
    """Distâncias a partir de ``source``; ``-1`` para vértices inalcançáveis."""
    G.check_vertex(source)
    dist = [-1] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in iter_bits(G.masks[v]):
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _require_connected(G: Graph) -> None:
    if G.n == 0:
        raise EmptyGraph("Grafo vazio")
    if not is_connected(G):
        raise Disconnected("Grafo desconexo")


def diameter(G: Graph) -> int:
    _require_connected(G)
    return max(max(bfs_distances(G, v)) for v in G.vertices())


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.edge_count == G.n - 1 and is_connected(G)


def is_forest(G: Graph) -> bool:
    return G.edge_count == G.n - len(component_masks(G))


def _farthest(dist: List[int]) -> int:
    far = max(dist)
    return dist.index(far)


def path_between(G: Graph, source: int, target: int) -> List[int]:
    """Um caminho mínimo de ``source`` a ``target`` (único em árvores)."""
    dist = bfs_distances(G, target)
    if dist[source] < 0:
        raise Disconnected(f"Não há caminho entre {source} e {target}")
    path = [source]
    while path[-1] != target:
        here = path[-1]
        path.append(next(w for w in iter_bits(G.masks[here]) if dist[w] == dist[here] - 1))
    return path


def longest_path_in_tree(T: Graph) -> List[int]:
    """Caminho mais longo por dupla busca em largura, desempate pelo menor índice."""
    _require_connected(T)
    if T.edge_count != T.n - 1:
        raise NotATree("O grafo contém ciclos")
    start = _farthest(bfs_distances(T, 0))
    end = _farthest(bfs_distances(T, start))
    return path_between(T, start, end)


def delete_edge(G: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < G.n and 0 <= v < G.n and G.has_edge(u, v)):
        raise NotPresent(f"Aresta ({u}, {v}) não existe")
    masks = list(G.masks)
    masks[u] &= ~(1 << v)
    masks[v] &= ~(1 << u)
    return Graph.from_masks(masks)


def delete_vertex(G: Graph, v: int) -> Tuple[Graph, Dict[int, int]]:
    """Remove ``v`` e reindexa; devolve o grafo e o mapa antigo→novo."""
    if not 0 <= v < G.n:
        raise NotPresent(f"Vértice {v} não existe")
    component = induced_subgraph(G, (x for x in G.vertices() if x != v))
    return component.graph, component.to_new


def _shortest_cycle_through(G: Graph, root: int) -> Optional[List[int]]:
    dist = [-1] * G.n
    parent = [-1] * G.n
    branch = [-1] * G.n
    dist[root] = 0
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in iter_bits(G.masks[x]):
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                parent[y] = x
                branch[y] = y if x == root else branch[x]
                queue.append(y)
    best = None
    for x, y in G.edges():
        if root in (x, y) or dist[x] < 0 or parent[x] == y or parent[y] == x:
            continue
        if branch[x] == branch[y]:
            continue
        length = dist[x] + dist[y] + 1
        if best is None or length < best[0]:
            best = (length, x, y)
    if best is None:
        return None
    _, x, y = best
    down = [x]
    while down[-1] != root:
        down.append(parent[down[-1]])
    up = [y]
    while parent[up[-1]] != root:
        up.append(parent[up[-1]])
    return down[::-1] + up


def find_induced_cycle(G: Graph) -> Optional[List[int]]:
    """Menor ciclo pelo vértice de menor índice que está em algum ciclo (sem cordas)."""
    for root in G.vertices():
        cycle = _shortest_cycle_through(G, root)
        if cycle is not None:
            return cycle
    return None
