# -*- coding: utf-8 -*-
"""Enumeração exaustiva de árvores livres e grafos pequenos, formas canônicas e instâncias aleatórias."""
from functools import lru_cache
from itertools import permutations
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple

import networkx as nx
import numpy as np

from iocodes import settings
from iocodes.processamento.errors import BadParam, NotATree
from iocodes.processamento.graph_file_service import format_graph6
from iocodes.processamento.models import Graph, is_tree, iter_bits, longest_path_in_tree, mask_of


# Sequências de níveis: pré-ordem com profundidades, subárvores em ordem lexicográfica decrescente.

def level_sequence_to_graph(layout: List[int]) -> Graph:
    """Árvore de uma sequência de níveis; o pai de ``i`` é o último vértice anterior um nível acima."""
    last_at_level: List[int] = []
    edges = []
    for i, level in enumerate(layout):
        del last_at_level[level:]
        if level:
            edges.append((last_at_level[level - 1], i))
        last_at_level.append(i)
    return Graph(len(layout), edges)


def _next_rooted_tree(layout: List[int]) -> Optional[List[int]]:
    """Sucessor (ordem decrescente) entre as sequências canônicas de árvores enraizadas."""
    p = len(layout) - 1
    while p > 0 and layout[p] == 1:
        p -= 1
    if p == 0:
        return None
    q = p - 1
    while layout[q] != layout[p] - 1:
        q -= 1
    successor = list(layout)
    for i in range(p, len(successor)):
        successor[i] = successor[i - p + q]
    return successor


def _split(layout: List[int]) -> Tuple[List[int], List[int]]:
    """Separa a primeira subárvore da raiz do restante da árvore."""
    m = len(layout)
    for i in range(2, len(layout)):
        if layout[i] == 1:
            m = i
            break
    left = [level - 1 for level in layout[1:m]]
    rest = [0] + layout[m:]
    return left, rest


def is_free_canonical(layout: List[int]) -> bool:
    """A raiz é um centro e, no caso bicentral, a metade escolhida é a menor."""
    if len(layout) <= 1:
        return True
    left, rest = _split(layout)
    left_height, rest_height = max(left), max(rest)
    if left_height < rest_height:
        return True
    if left_height > rest_height:
        return False
    if len(left) != len(rest):
        return len(left) < len(rest)
    return left <= rest


def enumerate_level_sequences(n: int) -> Iterator[List[int]]:
    layout = list(range(n))
    while layout is not None:
        if is_free_canonical(layout):
            yield layout
        layout = _next_rooted_tree(layout)


def enumerate_trees(n: int, max_n: Optional[int] = None) -> Iterator[Graph]:
    """Todas as árvores livres com ``n`` vértices, uma por classe de isomorfismo.

    Args:
        n (int): Ordem das árvores.
        max_n (int, opcional): Limite superior; padrão ``settings.TREE_MAX_N``.
    """
    cap = settings.TREE_MAX_N if max_n is None else max_n
    if not 1 <= n <= cap:
        raise BadParam(f"enumerate_trees exige 1 <= n <= {cap}, recebido {n}")
    for layout in enumerate_level_sequences(n):
        yield level_sequence_to_graph(layout)


def _rooted_sequence(T: Graph, root: int, parent: int) -> List[int]:
    subtrees = sorted(
        (_rooted_sequence(T, child, root) for child in iter_bits(T.masks[root]) if child != parent),
        reverse=True,
    )
    layout = [0]
    for sub in subtrees:
        layout.extend(level + 1 for level in sub)
    return layout


def tree_canonical_sequence(T: Graph) -> List[int]:
    """A sequência de níveis que ``enumerate_trees`` produziria para a classe de T."""
    if not is_tree(T):
        raise NotATree("Forma canônica de árvore exige uma árvore")
    path = longest_path_in_tree(T)
    d = len(path) - 1
    centers = [path[d // 2]] if d % 2 == 0 else [path[d // 2], path[d // 2 + 1]]
    candidates = [_rooted_sequence(T, c, -1) for c in centers]
    for layout in candidates:
        if is_free_canonical(layout):
            return layout
    raise RuntimeError("Nenhuma sequência canônica encontrada")


@lru_cache(maxsize=None)
def _permutation_table(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.intp).reshape(-1, n)


def adjacency_matrix(G: Graph) -> np.ndarray:
    matrix = np.zeros((G.n, G.n), dtype=np.uint8)
    for u, v in G.edges():
        matrix[u, v] = matrix[v, u] = 1
    return matrix


def canonical_key(G: Graph) -> Tuple[int, Tuple[int, ...]]:
    """Menor palavra do triângulo superior sobre todas as permutações, e a permutação que a realiza."""
    n = G.n
    if n <= 1:
        return 0, tuple(range(n))
    table = _permutation_table(n)
    matrix = adjacency_matrix(G)
    permuted = matrix[table[:, :, None], table[:, None, :]]
    rows, cols = np.triu_indices(n, 1)
    bits = permuted[:, rows, cols].astype(np.int64)
    weights = np.left_shift(np.int64(1), np.arange(bits.shape[1] - 1, -1, -1, dtype=np.int64))
    codes = bits @ weights
    best = int(np.argmin(codes))
    return int(codes[best]), tuple(int(x) for x in table[best])


def canonical_relabeling(G: Graph) -> Graph:
    _, order = canonical_key(G)
    position = {old: new for new, old in enumerate(order)}
    return Graph(G.n, ((position[u], position[v]) for u, v in G.edges()))


def _refine(G: Graph, cells: List[List[int]]) -> List[List[int]]:
    """Refina a partição ordenada até ficar equitativa; subcélulas ordenadas pelo perfil de vizinhos."""
    while True:
        cell_masks = [mask_of(cell) for cell in cells]
        refined: List[List[int]] = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            profiles: Dict[Tuple[int, ...], List[int]] = {}
            for v in cell:
                profile = tuple((G.masks[v] & m).bit_count() for m in cell_masks)
                profiles.setdefault(profile, []).append(v)
            refined.extend(profiles[key] for key in sorted(profiles))
        if len(refined) == len(cells):
            return refined
        cells = refined


def _ordered_code(G: Graph, order: List[int]) -> Tuple[int, ...]:
    position = {old: new for new, old in enumerate(order)}
    return tuple(mask_of(position[u] for u in iter_bits(G.masks[v])) for v in order)


def _individualize(G: Graph, cells: List[List[int]]) -> Tuple[Tuple[int, ...], List[int]]:
    cells = _refine(G, cells)
    target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
    if target is None:
        order = [cell[0] for cell in cells]
        return _ordered_code(G, order), order
    best = None
    for v in cells[target]:
        rest = [u for u in cells[target] if u != v]
        candidate = _individualize(G, cells[:target] + [[v], rest] + cells[target + 1:])
        if best is None or candidate[0] < best[0]:
            best = candidate
    return best


def refined_canonical_relabeling(G: Graph) -> Graph:
    """Forma canônica por refinamento de partições com individualização.

    Explora todos os ramos (sem poda por automorfismos): exato para qualquer n,
    mas exponencial em grafos muito simétricos.
    """
    if G.n == 0:
        return G
    _, order = _individualize(G, [list(range(G.n))])
    position = {old: new for new, old in enumerate(order)}
    return Graph(G.n, ((position[u], position[v]) for u, v in G.edges()))


def canonical_graph6(G: Graph, max_n: Optional[int] = None) -> str:
    """graph6 canônico: árvores pela sequência de níveis, grafos pequenos por permutação,
    os demais por refinamento de partições."""
    cap = settings.CANONICAL_MAX_N if max_n is None else max_n
    if G.n and is_tree(G):
        return format_graph6(level_sequence_to_graph(tree_canonical_sequence(G)))
    if G.n <= cap:
        return format_graph6(canonical_relabeling(G))
    return format_graph6(refined_canonical_relabeling(G))


def _connected_masks(masks: List[int]) -> bool:
    if not masks:
        return True
    reached = frontier = 1
    while frontier:
        grown = 0
        for v in iter_bits(frontier):
            grown |= masks[v]
        frontier = grown & ~reached
        reached |= frontier
    return reached == (1 << len(masks)) - 1


def _four_cycle_masks(masks: List[int]) -> bool:
    n = len(masks)
    return any((masks[u] & masks[v]).bit_count() >= 2 for u in range(n) for v in range(u + 1, n))


def enumerate_small_graphs(
    n: int,
    connected: bool = False,
    twin_free: bool = False,
    c4_free: bool = False,
    dedup: bool = False,
    filters: Iterable[Callable[[Graph], bool]] = (),
    max_n: Optional[int] = None,
) -> Iterator[Graph]:
    """Todos os grafos rotulados em ``n`` vértices por subconjuntos de arestas, filtrados.

    Com ``dedup``, emite um representante canônico por classe de isomorfismo, na ordem
    da primeira ocorrência.
    """
    cap = settings.GRAPH_MAX_N if max_n is None else max_n
    if not 0 <= n <= cap:
        raise BadParam(f"enumerate_small_graphs exige 0 <= n <= {cap}, recebido {n}")
    extra = list(filters)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    seen = set()
    for subset in range(1 << len(pairs)):
        masks = [0] * n
        for i in iter_bits(subset):
            u, v = pairs[i]
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        if twin_free and len(set(masks)) != n:
            continue
        if c4_free and _four_cycle_masks(masks):
            continue
        if connected and not _connected_masks(masks):
            continue
        G = Graph.from_masks(masks)
        if extra and not all(check(G) for check in extra):
            continue
        if dedup:
            key, _ = canonical_key(G)
            if key in seen:
                continue
            seen.add(key)
            G = canonical_relabeling(G)
        yield G


def random_tree(n: int, seed: Optional[int] = None) -> Graph:
    """Árvore rotulada uniforme via sequência de Prüfer."""
    if n < 1:
        raise BadParam(f"random_tree exige n >= 1, recebido {n}")
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = np.random.default_rng(seed)
    sequence = rng.integers(0, n, size=n - 2).tolist()
    return Graph.from_networkx(nx.from_prufer_sequence(sequence))


def random_graph(n: int, p: float, seed: Optional[int] = None) -> Graph:
    """G(n, p) com gerador numpy semeado."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise BadParam(f"Parâmetros inválidos para G(n, p): n={n}, p={p}")
    rng = np.random.default_rng(seed)
    rows, cols = np.triu_indices(n, 1)
    keep = rng.random(rows.size) < p
    return Graph(n, zip(rows[keep].tolist(), cols[keep].tolist()))
