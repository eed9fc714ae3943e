# -*- coding: utf-8 -*-
"""Geradores das famílias nomeadas, a família 𝒯 = {T(r;k)} e seus conjuntos canônicos.

Rotulagem: o centro (ou a raiz) recebe o índice 0; os anexos seguem a ordem
dos tipos e, dentro de cada tipo, a ordem de criação.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Tuple

from iocodes.processamento.errors import BadParam, NotATree, NotInFamily
from iocodes.processamento.models import Graph, VertexSet, is_tree, iter_bits

# Vetores fora de ℕ⋆⁶. O último não aparece na lista original, mas T(r;0,0,0,0,1,0)
# tem r e a folha do anexo Tipo 5 como gêmeos abertos.
EXCLUDED_VECTORS = frozenset({
    (1, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0),
    (1, 1, 0, 0, 0, 0),
    (0, 0, 0, 0, 1, 0),
})

# Vértices por anexo e o índice (dentro do anexo) da folha excluída do conjunto canônico.
ATTACHMENT_SIZES = (1, 2, 3, 4, 4, 5)
EXCLUDED_ROLE = {3: 2, 4: 3, 5: 1, 6: 2}


@dataclass(frozen=True)
class AttachmentVector:
    k1: int = 0
    k2: int = 0
    k3: int = 0
    k4: int = 0
    k5: int = 0
    k6: int = 0

    @classmethod
    def of(cls, values) -> "AttachmentVector":
        values = tuple(int(x) for x in values)
        if len(values) != 6:
            raise NotInFamily(f"Vetor de anexos precisa de 6 entradas, recebido {values}")
        return cls(*values)

    def as_tuple(self) -> Tuple[int, ...]:
        return (self.k1, self.k2, self.k3, self.k4, self.k5, self.k6)

    @property
    def total(self) -> int:
        return sum(self.as_tuple())

    @property
    def order(self) -> int:
        return 1 + sum(size * count for size, count in zip(ATTACHMENT_SIZES, self.as_tuple()))

    def is_valid(self) -> bool:
        values = self.as_tuple()
        return (
            all(x >= 0 for x in values)
            and self.k1 in (0, 1)
            and self.total >= 1
            and values not in EXCLUDED_VECTORS
        )

    def validate(self) -> None:
        if not self.is_valid():
            raise NotInFamily(f"Vetor {self.as_tuple()} não pertence a ℕ⋆⁶")

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.as_tuple()) + ")"


class FamilyKind(str, Enum):
    SUBDIVIDED_STAR = "subdivided-star"
    REDUCED_SUBDIVIDED_STAR = "reduced-subdivided-star"
    FAMILY_T = "family-t"
    TIGHT_TREE_PAIR = "tight-tree-pair"
    SUBCUBIC_GP = "subcubic-gp"
    GP_TREE = "gp-tree"
    STAR_PLUS_EDGE = "star-plus-edge"


@dataclass(frozen=True)
class FamilySpec:
    """Descritor de uma instância gerada: parâmetros, vértices distinguidos e código de referência."""

    kind: FamilyKind
    n: int
    params: Dict[str, object] = field(default_factory=dict)
    distinguished: Dict[str, object] = field(default_factory=dict)
    reference_code: Optional[Tuple[int, ...]] = None

    def reference_set(self) -> Optional[VertexSet]:
        if self.reference_code is None:
            return None
        return VertexSet.of(self.n, self.reference_code)

    def to_dict(self) -> dict:
        params = {k: (v.as_tuple() if isinstance(v, AttachmentVector) else v) for k, v in self.params.items()}
        return {
            "kind": self.kind.value,
            "n": self.n,
            "params": params,
            "distinguished": self.distinguished,
            "reference_code": list(self.reference_code) if self.reference_code is not None else None,
        }


def _all_but(n: int, *excluded: int) -> Tuple[int, ...]:
    return tuple(v for v in range(n) if v not in excluded)


def gen_subdivided_star(delta: int) -> Tuple[Graph, FamilySpec]:
    """T_Δ: centro 0, suportes 1..Δ e folhas Δ+1..2Δ (folha de ``i`` é ``Δ+i``)."""
    if delta < 2:
        raise BadParam(f"Δ deve ser >= 2, recebido {delta}")
    n = 2 * delta + 1
    edges = [(0, i) for i in range(1, delta + 1)] + [(i, delta + i) for i in range(1, delta + 1)]
    spec = FamilySpec(
        FamilyKind.SUBDIVIDED_STAR,
        n,
        {"delta": delta},
        {"center": 0, "supports": list(range(1, delta + 1)), "leaves": list(range(delta + 1, n))},
        _all_but(n, delta + 1),
    )
    return Graph(n, edges), spec


def gen_reduced_subdivided_star(delta: int) -> Tuple[Graph, FamilySpec]:
    """T_Δ*: T_Δ sem a folha do suporte 1, que passa a ser a folha vizinha do centro."""
    if delta < 2:
        raise BadParam(f"Δ deve ser >= 2, recebido {delta}")
    n = 2 * delta
    edges = [(0, i) for i in range(1, delta + 1)] + [(i, delta + i - 1) for i in range(2, delta + 1)]
    # T_2* é o P_4, cujo único IO-code é V.
    reference = _all_but(n, 1) if delta >= 3 else tuple(range(n))
    spec = FamilySpec(
        FamilyKind.REDUCED_SUBDIVIDED_STAR,
        n,
        {"delta": delta},
        {"center": 0, "center_leaf": 1, "supports": list(range(2, delta + 1)), "leaves": list(range(delta + 1, n))},
        reference,
    )
    return Graph(n, edges), spec


class _Builder:
    def __init__(self):
        self.n = 1
        self.edges: List[Tuple[int, int]] = []

    def new(self, parent: int) -> int:
        v = self.n
        self.n += 1
        self.edges.append((parent, v))
        return v


def _attach(builder: _Builder, root: int, kind: int) -> List[int]:
    """Cria um anexo do tipo ``kind`` ligado a ``root``; devolve os vértices em ordem de papel."""
    if kind == 1:
        return [builder.new(root)]
    if kind in (2, 3, 4):
        chain = [builder.new(root)]
        for _ in range(kind - 1):
            chain.append(builder.new(chain[-1]))
        return chain
    if kind == 5:
        support = builder.new(root)
        leaf = builder.new(support)
        other = builder.new(support)
        return [support, leaf, other, builder.new(other)]
    link = builder.new(root)
    center = builder.new(link)
    leaf = builder.new(center)
    middle = builder.new(center)
    return [link, center, leaf, middle, builder.new(middle)]


def _canonical_from_attachments(vertices: Iterable[int], root: int, vector: AttachmentVector,
                                attachments: Dict[int, List[List[int]]]) -> Tuple[int, ...]:
    values = vector.as_tuple()
    if values == (1, 0, 1, 0, 0, 0):
        return tuple(v for v in vertices if v != attachments[3][0][2])
    if values == (1, 0, 0, 0, 1, 0):
        return tuple(v for v in vertices if v != attachments[5][0][1])
    chosen = {root}
    for index, (link, leaf) in enumerate(attachments[2]):
        chosen.add(link)
        if vector.k1 == 1 or index > 0:
            chosen.add(leaf)
    for kind, role in EXCLUDED_ROLE.items():
        for members in attachments[kind]:
            chosen.update(v for i, v in enumerate(members) if i != role)
    return tuple(sorted(chosen))


def build_family_tree(k) -> Tuple[Graph, FamilySpec]:
    """T(r;k) a partir da raiz 0, aplicando k_i anexos do Tipo i."""
    vector = k if isinstance(k, AttachmentVector) else AttachmentVector.of(k)
    vector.validate()
    builder = _Builder()
    attachments: Dict[int, List[List[int]]] = {t: [] for t in range(1, 7)}
    for kind, count in enumerate(vector.as_tuple(), start=1):
        for _ in range(count):
            attachments[kind].append(_attach(builder, 0, kind))
    code = _canonical_from_attachments(range(builder.n), 0, vector, attachments)
    spec = FamilySpec(
        FamilyKind.FAMILY_T,
        builder.n,
        {"vector": vector},
        {"root": 0, "attachments": {f"type{t}": members for t, members in attachments.items()}},
        code,
    )
    return Graph(builder.n, builder.edges), spec


def canonical_set(spec: FamilySpec) -> VertexSet:
    """Conjunto canônico de uma árvore da família 𝒯 gerada por ``build_family_tree``."""
    if spec.kind != FamilyKind.FAMILY_T:
        raise NotInFamily(f"Especificação do tipo {spec.kind.value} não descreve T(r;k)")
    vector = spec.params["vector"]
    vector.validate()
    attachments = {t: spec.distinguished["attachments"][f"type{t}"] for t in range(1, 7)}
    code = _canonical_from_attachments(range(spec.n), spec.distinguished["root"], vector, attachments)
    return VertexSet.of(spec.n, code)


def _branch(T: Graph, root: int, link: int, alive: int, limit: int = 5) -> Optional[List[int]]:
    """Vértices do ramo de ``link`` (sem passar por ``root``); ``None`` se passar de ``limit``."""
    seen = 1 << link
    order = [link]
    blocked = alive & ~(1 << root)
    i = 0
    while i < len(order):
        for w in iter_bits(T.masks[order[i]] & blocked & ~seen):
            seen |= 1 << w
            order.append(w)
            if len(order) > limit:
                return None
        i += 1
    return order


def _children(T: Graph, v: int, parent: int, alive: int) -> List[int]:
    return list(iter_bits(T.masks[v] & alive & ~(1 << parent)))


def _match_attachment(T: Graph, root: int, link: int, alive: int) -> Optional[Tuple[int, List[int]]]:
    """Reconhece o ramo de ``link`` como um dos seis tipos; devolve (tipo, vértices por papel)."""
    branch = _branch(T, root, link, alive)
    if branch is None:
        return None
    size = len(branch)
    kids = _children(T, link, root, alive)
    if size == 1:
        return 1, [link]
    if len(kids) == 1:
        chain = [link]
        prev = root
        while True:
            nxt = _children(T, chain[-1], prev, alive)
            if len(nxt) != 1:
                break
            prev = chain[-1]
            chain.append(nxt[0])
        if len(chain) == size and size in (2, 3, 4) and not _children(T, chain[-1], prev, alive):
            return size, chain
        if size == 5:
            center = kids[0]
            below = _children(T, center, link, alive)
            if len(below) == 2:
                leaves = [c for c in below if not _children(T, c, center, alive)]
                inner = [c for c in below if _children(T, c, center, alive)]
                if len(leaves) == 1 and len(inner) == 1:
                    tail = _children(T, inner[0], center, alive)
                    if len(tail) == 1 and not _children(T, tail[0], inner[0], alive):
                        return 6, [link, center, leaves[0], inner[0], tail[0]]
        return None
    if size == 4 and len(kids) == 2:
        leaves = [c for c in kids if not _children(T, c, link, alive)]
        inner = [c for c in kids if _children(T, c, link, alive)]
        if len(leaves) == 1 and len(inner) == 1:
            tail = _children(T, inner[0], link, alive)
            if len(tail) == 1:
                return 5, [link, leaves[0], inner[0], tail[0]]
    return None


def decompose_at(T: Graph, root: int, alive: Optional[int] = None) -> Optional[Tuple[AttachmentVector, Dict[int, List[List[int]]]]]:
    """Decompõe a árvore (restrita a ``alive``) em anexos da raiz; ``None`` se algum ramo não casa."""
    alive = T.full_mask if alive is None else alive
    attachments: Dict[int, List[List[int]]] = {t: [] for t in range(1, 7)}
    for link in iter_bits(T.masks[root] & alive):
        match = _match_attachment(T, root, link, alive)
        if match is None:
            return None
        kind, members = match
        attachments[kind].append(members)
    counts = AttachmentVector.of(len(attachments[t]) for t in range(1, 7))
    if not counts.is_valid():
        return None
    return counts, attachments


def recognize_family(T: Graph) -> Optional[Tuple[int, AttachmentVector]]:
    """Primeira raiz (menor índice) para a qual T ≅ T(r;k) com k ∈ ℕ⋆⁶."""
    if not is_tree(T):
        raise NotATree("recognize_family exige uma árvore conexa")
    for root in T.vertices():
        found = decompose_at(T, root)
        if found is not None:
            return root, found[0]
    return None


def canonical_set_at(T: Graph, root: int, alive: Optional[int] = None) -> VertexSet:
    """Conjunto canônico de T (ou da subárvore ``alive``) vista como T(root;k), nos rótulos de T.

    Entre anexos do Tipo 2, o de menor índice de ligação perde a folha quando k1 = 0.
    """
    alive = T.full_mask if alive is None else alive
    found = decompose_at(T, root, alive)
    if found is None:
        raise NotInFamily(f"A árvore não é T(r;k) com raiz {root}")
    vector, attachments = found
    for kind in (2, 3, 4, 5, 6):
        attachments[kind].sort()
    code = _canonical_from_attachments(iter_bits(alive), root, vector, attachments)
    return VertexSet.of(T.n, code)


def gen_tight_tree_pair(delta: int) -> Tuple[Graph, FamilySpec]:
    """Duas cópias de T_Δ* ligadas pelas folhas vizinhas dos centros; n = 4Δ."""
    if delta < 3:
        raise BadParam(f"Δ deve ser >= 3, recebido {delta}")
    half, _ = gen_reduced_subdivided_star(delta)
    size = half.n
    edges = list(half.edges()) + [(u + size, v + size) for u, v in half.edges()] + [(1, size + 1)]
    n = 2 * size
    spec = FamilySpec(
        FamilyKind.TIGHT_TREE_PAIR,
        n,
        {"delta": delta},
        {"centers": [0, size], "joined_leaves": [1, size + 1]},
        _all_but(n, 1, size + 1),
    )
    return Graph(n, edges), spec


def _gadget_labels(p: int) -> Dict[str, List[int]]:
    return {name: [6 * i + offset for i in range(p)] for offset, name in enumerate("uvwxyz")}


def _gp_edges(p: int) -> List[Tuple[int, int]]:
    edges = []
    for i in range(p):
        u, v, w, x, y, z = (6 * i + offset for offset in range(6))
        edges += [(u, v), (v, w), (w, x), (x, y), (w, z)]
    return edges


def gen_subcubic_gp(p: int) -> Tuple[Graph, FamilySpec]:
    """G_p: ciclo u_1…u_p com um T_3* por vértice; o gadget i ocupa os índices 6i..6i+5 (u,v,w,x,y,z)."""
    if p < 3 or p == 4:
        raise BadParam(f"G_p exige p >= 3 e p != 4, recebido {p}")
    n = 6 * p
    labels = _gadget_labels(p)
    edges = _gp_edges(p) + [(labels["u"][i], labels["u"][(i + 1) % p]) for i in range(p)]
    spec = FamilySpec(
        FamilyKind.SUBCUBIC_GP,
        n,
        {"p": p},
        {**labels, "cycle": labels["u"]},
        _all_but(n, *labels["z"]),
    )
    return Graph(n, edges), spec


def gen_gp_tree(p: int) -> Tuple[Graph, FamilySpec]:
    """G_p sem a aresta u_1u_p do ciclo: uma árvore que também atinge 5n/6."""
    if p < 3 or p == 4:
        raise BadParam(f"G_p exige p >= 3 e p != 4, recebido {p}")
    n = 6 * p
    labels = _gadget_labels(p)
    edges = _gp_edges(p) + [(labels["u"][i], labels["u"][i + 1]) for i in range(p - 1)]
    spec = FamilySpec(FamilyKind.GP_TREE, n, {"p": p}, labels, _all_but(n, *labels["z"]))
    return Graph(n, edges), spec


STAR_PLUS_EDGE_VARIANTS = ("G1", "G2", "G3")


def gen_star_plus_edge(variant: str, k: int) -> Tuple[Graph, FamilySpec]:
    """T_k mais uma aresta: G1 entre dois suportes, G2 entre duas folhas, G3 do centro a uma folha.

    Rótulos como em T_k: centro 0, suportes 1..k, folha de ``i`` em ``k+i``.
    """
    variant = variant.upper()
    if variant not in STAR_PLUS_EDGE_VARIANTS:
        raise BadParam(f"Variante desconhecida: {variant}")
    if k < 2:
        raise BadParam(f"k deve ser >= 2, recebido {k}")
    base, _ = gen_subdivided_star(k)
    n = base.n
    u1, u2, uk = k + 1, k + 2, 2 * k
    if variant == "G1":
        extra, reference = (1, 2), _all_but(n, u1, u2)
    elif variant == "G2":
        extra = (u1, u2)
        # Com k = 2 o grafo é o C_5, que precisa de 4 vértices.
        reference = _all_but(n, 1, u1) if k >= 3 else _all_but(n, u1)
    else:
        extra, reference = (0, uk), _all_but(n, u1)
    spec = FamilySpec(
        FamilyKind.STAR_PLUS_EDGE,
        n,
        {"variant": variant, "k": k},
        {"center": 0, "supports": list(range(1, k + 1)), "leaves": list(range(k + 1, n)), "added_edge": list(extra)},
        reference,
    )
    return Graph(n, list(base.edges()) + [extra]), spec
