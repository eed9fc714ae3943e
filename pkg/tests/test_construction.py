import pytest

from iocodes.processamento.errors import (
    BadParam,
    DegreeExceeded,
    FourCyclePresent,
    NoCode,
    NotATree,
    TooSmall,
)
from iocodes.processamento.models import Graph, max_degree
from iocodes.services.construction import (
    BoundStatus,
    CaseKind,
    check_bound,
    construct_graph_code,
    construct_tree_code,
    is_subdivided_star,
    root_tree,
)
from iocodes.services.enumeration import enumerate_small_graphs, enumerate_trees
from iocodes.services.families import (
    gen_gp_tree,
    gen_star_plus_edge,
    gen_subcubic_gp,
    gen_subdivided_star,
    gen_tight_tree_pair,
)
from iocodes.services.verification import admits_io_code, is_io_code


def cases(trace):
    return [step.case for step in trace.steps]


def assert_certified(G, delta, code, trace):
    assert is_io_code(G, code).ok
    assert trace.replay() == code.members
    assert trace.bound_status == check_bound(G.n, len(code), delta, is_star=is_subdivided_star(G, delta))
    assert trace.bound_status != BoundStatus.VIOLATION


class TestCheckBound:

    def test_dentro_do_limite(self):
        assert check_bound(8, 7, 4) == BoundStatus.WITHIN_BOUND
        assert check_bound(12, 10, 3) == BoundStatus.WITHIN_BOUND

    def test_estrela_excepcional(self):
        assert check_bound(9, 8, 4) == BoundStatus.EXCEPTIONAL_STAR
        assert check_bound(9, 8, 4, is_star=True) == BoundStatus.EXCEPTIONAL_STAR
        assert check_bound(9, 8, 4, is_star=False) == BoundStatus.VIOLATION

    def test_violacao(self):
        assert check_bound(10, 10, 3) == BoundStatus.VIOLATION


@pytest.fixture
def p5():
    return Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])


def test_p5(p5):
    code, trace = construct_tree_code(p5, 3)
    assert len(code) == 4
    assert cases(trace) == [CaseKind.FAMILY]
    assert_certified(p5, 3, code, trace)


@pytest.mark.parametrize("delta", [3, 4, 5])
def test_estrela_subdividida_e_excecao(delta):
    T, _ = gen_subdivided_star(delta)
    code, trace = construct_tree_code(T, delta)
    assert len(code) == 2 * delta
    assert trace.exceptional
    assert trace.bound_status == BoundStatus.EXCEPTIONAL_STAR


def test_estrela_com_delta_maior_nao_e_excecao():
    T, _ = gen_subdivided_star(3)
    code, trace = construct_tree_code(T, 4)
    assert not trace.exceptional
    assert trace.bound_status == BoundStatus.WITHIN_BOUND


def test_fim_do_caminho_mais_longo():
    T, spec = gen_gp_tree(3)
    code, trace = construct_tree_code(T, 3)
    assert CaseKind.PATH_END in cases(trace)
    assert len(code) == 15
    assert_certified(T, 3, code, trace)


def test_resto_isomorfo_a_estrela():
    # T_2 centrada em 0 ligada ao suporte 5 de um T_3 centrado em 6.
    T = Graph(12, [(0, 1), (0, 2), (1, 3), (2, 4), (0, 5), (5, 6), (6, 7), (6, 8), (5, 9), (7, 10), (8, 11)])
    code, trace = construct_tree_code(T, 3)
    assert cases(trace) == [CaseKind.STAR_EDGE, CaseKind.REST_STAR]
    assert code.to_list() == [0, 1, 2, 4, 5, 6, 7, 8, 11]
    assert_certified(T, 3, code, trace)


def test_reparo_de_gemeos():
    # Removendo a T_2 centrada em 0, o vértice 5 vira folha gêmea de 7.
    T = Graph(12, [(0, 1), (0, 2), (1, 3), (2, 4), (0, 5), (5, 6), (6, 7), (6, 8), (8, 9), (9, 10), (10, 11)])
    code, trace = construct_tree_code(T, 3)
    assert CaseKind.TWIN_REPAIR in cases(trace)
    assert 5 not in code
    assert_certified(T, 3, code, trace)


def test_par_justo(p5):
    T, _ = gen_tight_tree_pair(3)
    code, trace = construct_tree_code(T, 3)
    assert len(code) == 10
    assert_certified(T, 3, code, trace)


def test_erros_de_arvore(p5):
    with pytest.raises(NoCode):
        construct_tree_code(Graph(3, [(0, 1), (1, 2)]), 3)
    with pytest.raises(TooSmall):
        construct_tree_code(Graph(4, [(0, 1), (1, 2), (2, 3)]), 3)
    with pytest.raises(NotATree):
        construct_tree_code(Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]), 3)
    with pytest.raises(DegreeExceeded):
        construct_tree_code(gen_subdivided_star(4)[0], 3)
    with pytest.raises(BadParam):
        construct_tree_code(p5, 2)


def test_trace_serializavel(p5):
    _, trace = construct_tree_code(p5, 3)
    data = trace.to_dict()
    assert data["bound_status"] == "within_bound"
    assert data["steps"][0]["case"] == "family"
    assert trace.warnings == []


def test_visao_enraizada(p5):
    view = root_tree(p5, 0)
    assert view.depth[4] == 4
    assert view.height[0] == 4
    assert view.subtree[2] == 0b11100
    assert view.children[1] == [2]


@pytest.mark.parametrize("n", range(5, 12))
def test_todas_as_arvores_sem_gemeos(n):
    for T in enumerate_trees(n):
        if not admits_io_code(T):
            continue
        delta = max(3, max_degree(T))
        code, trace = construct_tree_code(T, delta)
        assert_certified(T, delta, code, trace)
        assert trace.max_depth <= T.n


@pytest.mark.slow
@pytest.mark.parametrize("n", range(12, 15))
def test_todas_as_arvores_sem_gemeos_exaustivo(n):
    test_todas_as_arvores_sem_gemeos(n)


class TestGrafos:

    def test_c5_e_pata(self):
        c5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
        code, trace = construct_graph_code(c5, 3)
        assert len(code) == 4
        assert cases(trace) == [CaseKind.BASE_PATTERN]
        paw = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
        code, trace = construct_graph_code(paw, 3)
        assert code.to_list() == [0, 1, 2]

    def test_arvore_delegada(self, p5):
        code, trace = construct_graph_code(p5, 3)
        assert cases(trace)[0] == CaseKind.ACYCLIC
        assert len(code) == 4

    def test_remocao_de_aresta(self):
        G, _ = gen_subcubic_gp(3)
        code, trace = construct_graph_code(G, 3)
        assert cases(trace)[0] == CaseKind.EDGE_DELETION
        assert len(code) == 15
        assert_certified(G, 3, code, trace)

    def test_remocao_de_vertice(self):
        # C6 com folhas nos vértices ímpares: toda remoção de aresta cria gêmeos.
        G = Graph(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 6), (3, 7), (5, 8)])
        code, trace = construct_graph_code(G, 3)
        assert cases(trace)[0] == CaseKind.VERTEX_DELETION
        assert trace.steps[0].details["vertex"] == 0
        assert_certified(G, 3, code, trace)

    @pytest.mark.parametrize("variant", ["G1", "G2"])
    def test_estrela_mais_aresta(self, variant):
        G, _ = gen_star_plus_edge(variant, 3)
        code, trace = construct_graph_code(G, 3)
        assert len(code) <= 5
        assert_certified(G, 3, code, trace)

    def test_erros(self):
        with pytest.raises(FourCyclePresent):
            construct_graph_code(
                Graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6), (3, 7)]), 3)
        with pytest.raises(NoCode):
            construct_graph_code(Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), 3)
        with pytest.raises(TooSmall):
            construct_graph_code(Graph(4, [(0, 1), (1, 2), (2, 3)]), 3)

    @pytest.mark.parametrize("n", range(5, 7))
    def test_todos_os_grafos_pequenos(self, n):
        for G in enumerate_small_graphs(n, connected=True, twin_free=True, c4_free=True, dedup=True):
            delta = max(3, max_degree(G))
            code, trace = construct_graph_code(G, delta)
            assert_certified(G, delta, code, trace)

    @pytest.mark.slow
    def test_todos_os_grafos_de_ordem_7(self):
        self.test_todos_os_grafos_pequenos(7)
