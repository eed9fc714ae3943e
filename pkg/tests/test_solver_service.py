import numpy as np
import pytest

from iocodes.processamento.errors import NoCode, TooLarge
from iocodes.processamento.models import Graph, support_mask
from iocodes.services.enumeration import enumerate_small_graphs, enumerate_trees
from iocodes.services.families import gen_reduced_subdivided_star, gen_subdivided_star, gen_tight_tree_pair
from iocodes.services.solver_service import (
    DisjointRequirementsBound,
    Method,
    TrivialBound,
    requirements,
    solve,
    solve_oracle,
    solve_with_budget,
)
from iocodes.services.audit_service import random_twin_free_graphs
from iocodes.services.verification import admits_io_code, is_io_code
from tests.settings import SEED

BASE_CASES = {
    "P2": (Graph(2, [(0, 1)]), 2),
    "K3": (Graph(3, [(0, 1), (1, 2), (0, 2)]), 2),
    "P4": (Graph(4, [(0, 1), (1, 2), (2, 3)]), 4),
    "P5": (Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)]), 4),
    "paw": (Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)]), 3),
    "C5": (Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]), 4),
}


@pytest.mark.parametrize("nome", sorted(BASE_CASES))
def test_valores_base(nome):
    G, gamma = BASE_CASES[nome]
    exato = solve(G)
    assert exato.gamma == gamma
    assert exato.method == Method.BRANCH_AND_BOUND
    assert is_io_code(G, exato.code).ok
    assert solve_oracle(G).gamma == gamma


def test_sem_codigo_informa_testemunha():
    with pytest.raises(NoCode) as ctx:
        solve(Graph(3, [(0, 1), (1, 2)]))
    assert ctx.value.witness == (0, 2)
    with pytest.raises(NoCode) as ctx:
        solve_oracle(Graph(3, [(0, 1)]))
    assert ctx.value.witness == (2,)


def test_oraculo_limitado():
    with pytest.raises(TooLarge):
        solve_oracle(BASE_CASES["P5"][0], max_n=4)


def test_orcamento():
    p5 = BASE_CASES["P5"][0]
    assert solve_with_budget(p5, 3) is None
    code = solve_with_budget(p5, 4)
    assert len(code) == 4 and is_io_code(p5, code).ok
    assert solve_with_budget(p5, -1) is None


@pytest.mark.parametrize("delta", range(2, 7))
def test_estrelas_subdivididas(delta):
    G, _ = gen_subdivided_star(delta)
    assert solve(G).gamma == 2 * delta
    if delta >= 3:
        H, _ = gen_reduced_subdivided_star(delta)
        assert solve(H).gamma == 2 * delta - 1


def test_requisitos_minimais():
    G, _ = gen_subdivided_star(4)
    reqs = requirements(G)
    assert len(set(reqs)) == len(reqs)
    for a in reqs:
        for b in reqs:
            assert a == b or a & b != a


def test_limite_de_requisitos_disjuntos():
    assert DisjointRequirementsBound().estimate([0b011, 0b100, 0b110]) == 2
    assert TrivialBound().estimate([0b1]) == 1
    assert TrivialBound().estimate([]) == 0


def test_suportes_sempre_no_codigo():
    for G in random_twin_free_graphs(30, 5, 10, seed=SEED):
        assert support_mask(G) & ~solve(G).code.mask == 0


def test_limites_concordam():
    G, _ = gen_subdivided_star(5)
    assert solve(G, TrivialBound()).gamma == solve(G).gamma


def test_concorda_com_oraculo():
    rng = np.random.default_rng(SEED)
    for G in random_twin_free_graphs(40, 5, 10, seed=int(rng.integers(2 ** 32))):
        exato = solve(G)
        assert exato.gamma == solve_oracle(G).gamma
        assert exato.to_dict()["gamma"] == len(exato.code)


@pytest.mark.slow
def test_concorda_com_oraculo_grafos_maiores():
    for G in random_twin_free_graphs(500, 11, 14, seed=SEED):
        assert solve(G).gamma == solve_oracle(G).gamma


def instancias_auditadas(n_arvores, n_grafos):
    for n in range(5, n_arvores + 1):
        yield from (T for T in enumerate_trees(n) if admits_io_code(T))
    for n in range(5, n_grafos + 1):
        yield from enumerate_small_graphs(n, connected=True, twin_free=True, dedup=True)


def test_concorda_com_oraculo_em_instancias_auditadas():
    for G in instancias_auditadas(10, 6):
        assert solve(G).gamma == solve_oracle(G).gamma


@pytest.mark.slow
def test_concorda_com_oraculo_em_grafos_de_ordem_7():
    for G in enumerate_small_graphs(7, connected=True, twin_free=True, dedup=True):
        assert solve(G).gamma == solve_oracle(G).gamma


def orcamento_exato(G):
    gamma = solve(G).gamma
    assert solve_with_budget(G, gamma - 1) is None
    code = solve_with_budget(G, gamma)
    assert code is not None
    assert len(code) <= gamma and is_io_code(G, code).ok


@pytest.mark.parametrize("delta", [3, 4])
def test_orcamento_nas_familias(delta):
    for generator in (gen_subdivided_star, gen_reduced_subdivided_star, gen_tight_tree_pair):
        G, _ = generator(delta)
        orcamento_exato(G)


def test_orcamento_em_instancias_auditadas():
    for G in instancias_auditadas(9, 6):
        orcamento_exato(G)
    for G in random_twin_free_graphs(20, 8, 12, seed=SEED):
        orcamento_exato(G)
