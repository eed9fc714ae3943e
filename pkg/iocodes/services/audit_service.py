# -*- coding: utf-8 -*-
"""Auditoria em lote: γ^IOC exato e construtores certificados sobre espaços enumerados de instâncias."""
import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional

import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from tqdm import tqdm

from iocodes import settings
from iocodes.processamento.errors import BadParam, ConstructionError
from iocodes.processamento.models import Graph, VertexSet, has_four_cycle, is_connected, is_tree, max_degree
from iocodes.services.construction import (
    BoundStatus,
    check_bound,
    construct_graph_code,
    construct_tree_code,
    is_subdivided_star,
)
from iocodes.services.enumeration import canonical_graph6, enumerate_small_graphs, enumerate_trees, random_graph
from iocodes.services.families import gen_reduced_subdivided_star, gen_subcubic_gp, gen_subdivided_star, gen_tight_tree_pair
from iocodes.services.solver_service import solve, solve_oracle, solve_with_budget
from iocodes.services.verification import admits_io_code, is_io_code

# Configurar logging
logging.basicConfig(level=settings.LOG_LEVEL)

RECORD_COLUMNS = [
    "instance_id", "n", "m", "max_degree", "delta", "twin_free", "c4_free", "gamma",
    "constructor_size", "bound_status", "constructor_status", "is_extremal", "witness_code",
]


@dataclass(frozen=True)
class AuditRecord:
    """Resultado de uma instância auditada.

    ``constructor_size`` é -1 quando o construtor falhou; isso conta como violação.
    """

    instance_id: str
    n: int
    m: int
    max_degree: int
    delta: int
    twin_free: bool
    c4_free: bool
    gamma: int
    constructor_size: int
    bound_status: BoundStatus
    constructor_status: Optional[BoundStatus]
    is_extremal: bool
    witness_code: VertexSet

    @property
    def is_violation(self) -> bool:
        return (
            self.bound_status == BoundStatus.VIOLATION
            or self.constructor_size < 0
            or self.constructor_status == BoundStatus.VIOLATION
        )

    def to_dict(self) -> dict:
        return {
            "instance_id": self.instance_id,
            "n": self.n,
            "m": self.m,
            "max_degree": self.max_degree,
            "delta": self.delta,
            "twin_free": self.twin_free,
            "c4_free": self.c4_free,
            "gamma": self.gamma,
            "constructor_size": self.constructor_size,
            "bound_status": self.bound_status.value,
            "constructor_status": self.constructor_status.value if self.constructor_status else "",
            "is_extremal": self.is_extremal,
            "witness_code": " ".join(str(v) for v in self.witness_code.to_list()),
        }


@dataclass
class AuditResult:
    records: List[AuditRecord]
    summary: Dict[str, object] = field(default_factory=dict)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([r.to_dict() for r in self.records], columns=RECORD_COLUMNS)


def audit_instance(G: Graph, delta: Optional[int] = None, construct: bool = True) -> AuditRecord:
    """Audita um grafo conexo sem gêmeos: γ exato, limite e (opcionalmente) o construtor."""
    degree = max_degree(G)
    bound_delta = max(3, degree) if delta is None else delta
    c4_free = not has_four_cycle(G)
    star = is_subdivided_star(G, bound_delta)
    result = solve(G)
    status = check_bound(G.n, result.gamma, bound_delta, is_star=star)
    extremal = status == BoundStatus.WITHIN_BOUND and 2 * bound_delta * result.gamma == (2 * bound_delta - 1) * G.n

    constructor_size, constructor_status = result.gamma, None
    if construct and c4_free and degree <= bound_delta:
        builder = construct_tree_code if is_tree(G) else construct_graph_code
        try:
            code, trace = builder(G, bound_delta)
            constructor_size, constructor_status = len(code), trace.bound_status
        except ConstructionError as e:
            logging.error(f"Construtor falhou em {canonical_graph6(G)}: {str(e)}")
            constructor_size = -1

    return AuditRecord(
        instance_id=canonical_graph6(G),
        n=G.n,
        m=G.edge_count,
        max_degree=degree,
        delta=bound_delta,
        twin_free=True,
        c4_free=c4_free,
        gamma=result.gamma,
        constructor_size=constructor_size,
        bound_status=status,
        constructor_status=constructor_status,
        is_extremal=extremal,
        witness_code=result.code,
    )


def summarize(records: List[AuditRecord], runtime: float, **extra) -> Dict[str, object]:
    summary = {
        "instances": len(records),
        "violations": sum(r.is_violation for r in records),
        "exceptional": sum(r.bound_status == BoundStatus.EXCEPTIONAL_STAR for r in records),
        "extremal": sum(r.is_extremal for r in records),
        "runtime": round(runtime, 3),
    }
    summary.update(extra)
    return summary


class AuditService:
    """
    Executa auditorias sobre árvores, grafos e famílias extremais.

    Args:
        workers (int): Processos do joblib; 1 roda no processo atual.
        progress (bool): Exibir barra de progresso (tqdm).
    """

    def __init__(self, workers: Optional[int] = None, progress: bool = False):
        self.workers = settings.WORKERS if workers is None else workers
        self.progress = progress

    def _run(self, graphs: List[Graph], delta: Optional[int], desc: str) -> List[AuditRecord]:
        iterator = tqdm(graphs, desc=desc, disable=not self.progress)
        return Parallel(n_jobs=self.workers)(delayed(audit_instance)(G, delta) for G in iterator)

    def audit_trees(self, n_max: int, delta: Optional[int] = None) -> AuditResult:
        """Todas as árvores sem gêmeos com 5 <= n <= n_max (e Δ(T) <= delta, se dado)."""
        if not 5 <= n_max <= 16:
            raise BadParam(f"audit_trees exige 5 <= n_max <= 16, recebido {n_max}")
        if delta is not None and delta < 3:
            raise BadParam(f"Δ deve ser >= 3, recebido {delta}")
        logging.info(f"Auditoria de árvores iniciada: n_max={n_max}, Δ={delta}")
        inicio = time.perf_counter()
        trees = [
            T
            for n in range(5, n_max + 1)
            for T in enumerate_trees(n, max_n=n_max)
            if admits_io_code(T) and (delta is None or max_degree(T) <= delta)
        ]
        records = self._run(trees, delta, "árvores")
        summary = summarize(records, time.perf_counter() - inicio, n_max=n_max, delta=delta, seed=None)
        logging.info(f"Auditoria de árvores concluída: {summary}")
        return AuditResult(records, summary)

    def audit_graphs(self, n_max: int, delta: Optional[int] = None, samples: int = 200,
                     seed: Optional[int] = None) -> AuditResult:
        """Grafos conexos, sem gêmeos e sem 4-ciclos: exaustivo até ``GRAPH_MAX_N``, amostrado acima."""
        if n_max < 5:
            raise BadParam(f"audit_graphs exige n_max >= 5, recebido {n_max}")
        if delta is not None and delta < 3:
            raise BadParam(f"Δ deve ser >= 3, recebido {delta}")
        seed = settings.AUDIT_SEED if seed is None else seed
        logging.info(f"Auditoria de grafos iniciada: n_max={n_max}, Δ={delta}")
        inicio = time.perf_counter()
        degree_ok = [] if delta is None else [lambda G: max_degree(G) <= delta]
        graphs: List[Graph] = []
        sampled = False
        for n in range(5, n_max + 1):
            if n <= settings.GRAPH_MAX_N:
                graphs.extend(enumerate_small_graphs(n, connected=True, twin_free=True, c4_free=True, dedup=True,
                                                     filters=degree_ok))
            else:
                sampled = True
                graphs.extend(sample_graphs(n, samples, seed + n, degree_ok))
        records = self._run(graphs, delta, "grafos")
        summary = summarize(records, time.perf_counter() - inicio, n_max=n_max, delta=delta,
                            seed=seed if sampled else None)
        logging.info(f"Auditoria de grafos concluída: {summary}")
        return AuditResult(records, summary)

    def verify_tight_families(self, delta_max: int, p_max: int, exact_p_max: Optional[int] = None,
                              decide: Iterable[int] = ()) -> pd.DataFrame:
        """Confere os valores exatos de T_Δ, T_Δ*, T_{1,2} e G_p.

        Args:
            delta_max (int): Maior Δ verificado (a partir de 3).
            p_max (int): Maior p de G_p (p = 4 é pulado).
            exact_p_max (int, opcional): Resolver G_p exatamente até este p; padrão ``GP_EXACT_MAX_P``.
            decide (Iterable[int]): Valores de p em que ``solve_with_budget(G_p, 5p−1)`` certifica o limite inferior.

        Returns:
            pd.DataFrame: Uma linha por verificação, com coluna ``ok``.
        """
        if delta_max < 3 or p_max < 3:
            raise BadParam(f"verify_tight_families exige Δ_max >= 3 e p_max >= 3, recebido {delta_max}, {p_max}")
        exact_p_max = settings.GP_EXACT_MAX_P if exact_p_max is None else exact_p_max
        decide = set(decide)
        linhas = []

        def add(family, param, G, spec, expected, measured, method):
            reference = spec.reference_set()
            reference_ok = reference is None or is_io_code(G, reference).ok
            linhas.append({
                "family": family, "param": param, "n": G.n, "expected": expected, "measured": measured,
                "method": method, "reference_size": len(reference) if reference else None,
                "ok": measured == expected and reference_ok,
            })

        for delta in range(3, delta_max + 1):
            for family, generator, expected in (
                ("subdivided-star", gen_subdivided_star, 2 * delta),
                ("reduced-subdivided-star", gen_reduced_subdivided_star, 2 * delta - 1),
                ("tight-tree-pair", gen_tight_tree_pair, 4 * delta - 2),
            ):
                G, spec = generator(delta)
                add(family, delta, G, spec, expected, solve(G).gamma, "solve")

        for p in range(3, p_max + 1):
            if p == 4:
                continue
            G, spec = gen_subcubic_gp(p)
            add("subcubic-gp", p, G, spec, 5 * p, len(spec.reference_set()), "reference")
            if p <= exact_p_max:
                add("subcubic-gp", p, G, spec, 5 * p, solve(G).gamma, "solve")
            if p <= exact_p_max or p in decide:
                logging.info(f"Decidindo γ^IOC(G_{p}) <= {5 * p - 1}")
                below = solve_with_budget(G, 5 * p - 1)
                add("subcubic-gp", p, G, spec, "none", "none" if below is None else len(below), "budget")
        return pd.DataFrame(linhas)

    def audit_oracle_agreement(self, graphs: Iterable[Graph]) -> pd.DataFrame:
        """Compara ``solve`` com ``solve_oracle`` instância a instância."""
        linhas = []
        for G in tqdm(list(graphs), desc="oráculo", disable=not self.progress):
            fast, slow = solve(G), solve_oracle(G)
            linhas.append({
                "instance_id": canonical_graph6(G),
                "n": G.n,
                "gamma": fast.gamma,
                "oracle_gamma": slow.gamma,
                "agree": fast.gamma == slow.gamma and is_io_code(G, fast.code).ok,
            })
        return pd.DataFrame(linhas, columns=["instance_id", "n", "gamma", "oracle_gamma", "agree"])


def sample_graphs(n: int, count: int, seed: int, filters: Iterable[Callable[[Graph], bool]] = (),
                  c4_free: bool = True, attempts: int = 200) -> List[Graph]:
    """Até ``count`` grafos G(n, p) conexos e sem gêmeos, com sementes derivadas de ``seed``."""
    rng = np.random.default_rng(seed)
    checks = list(filters)
    found: List[Graph] = []
    for _ in range(count * attempts):
        if len(found) == count:
            break
        p = float(rng.uniform(1.5, 3.0)) / n
        G = random_graph(n, min(p, 1.0), seed=int(rng.integers(2 ** 32)))
        if not is_connected(G) or not admits_io_code(G):
            continue
        if c4_free and has_four_cycle(G):
            continue
        if all(check(G) for check in checks):
            found.append(G)
    return found


def random_twin_free_graphs(count: int, n_min: int, n_max: int, seed: Optional[int] = None) -> List[Graph]:
    """Grafos conexos sem gêmeos (4-ciclos permitidos) para comparar solver e oráculo."""
    seed = settings.AUDIT_SEED if seed is None else seed
    rng = np.random.default_rng(seed)
    graphs: List[Graph] = []
    while len(graphs) < count:
        n = int(rng.integers(n_min, n_max + 1))
        graphs.extend(sample_graphs(n, 1, int(rng.integers(2 ** 32)), c4_free=False))
    return graphs
