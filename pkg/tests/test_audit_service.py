import importlib
import json
import logging

import pandas as pd
import pytest

from iocodes import settings
from iocodes.processamento import graph_file_service
from iocodes.processamento.errors import BadParam
from iocodes.processamento.models import Graph
from iocodes.services import persistencia
from iocodes.services.audit_service import (
    RECORD_COLUMNS,
    AuditService,
    audit_instance,
    random_twin_free_graphs,
    sample_graphs,
)
from iocodes.services.construction import BoundStatus
from iocodes.services.enumeration import canonical_graph6
from iocodes.services.families import gen_subdivided_star
from iocodes.services.persistencia import ReportPersistenceService
from iocodes.services.verification import is_io_code
from tests.settings import GRAPH_AUDIT_N, GRAPH_AUDIT_SLOW_N, SEED, TREE_AUDIT_N, TREE_AUDIT_SLOW_N


@pytest.fixture
def service():
    return AuditService(workers=1)


def test_instancia_estrela(service):
    T, _ = gen_subdivided_star(3)
    record = audit_instance(T, 3)
    assert record.gamma == 6
    assert record.bound_status == BoundStatus.EXCEPTIONAL_STAR
    assert record.constructor_status == BoundStatus.EXCEPTIONAL_STAR
    assert not record.is_extremal
    assert not record.is_violation


def test_arvores_n5(service):
    result = service.audit_trees(5, 3)
    assert len(result.records) == 1
    assert all(r.gamma >= 4 for r in result.records)


def test_arvores_ate_9(service):
    result = service.audit_trees(9, 3)
    assert result.summary["violations"] == 0
    assert result.summary["exceptional"] == 1
    estrela = [r for r in result.records if r.bound_status == BoundStatus.EXCEPTIONAL_STAR]
    assert estrela[0].n == 7
    for record in result.records:
        assert record.gamma <= record.constructor_size <= record.n


def test_arvores_extremais(service):
    result = service.audit_trees(12, 3)
    assert result.summary["violations"] == 0
    assert any(r.is_extremal and r.n == 12 for r in result.records)
    assert result.summary["extremal"] == sum(r.is_extremal for r in result.records)


def test_gamma_nao_depende_de_delta(service):
    menor = {r.instance_id: r.gamma for r in service.audit_trees(8, 3).records}
    maior = {r.instance_id: r.gamma for r in service.audit_trees(8, 4).records}
    assert set(menor) <= set(maior)
    for instance_id, gamma in menor.items():
        assert maior[instance_id] == gamma


def test_codigos_testemunha(service):
    for record in service.audit_trees(TREE_AUDIT_N, None).records:
        assert len(record.witness_code) == record.gamma
        assert record.delta == max(3, record.max_degree)
        assert not record.is_violation


def test_registro_verifica_testemunha():
    G = Graph(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 6), (3, 7), (5, 8)])
    record = audit_instance(G)
    assert is_io_code(G, record.witness_code).ok
    assert record.constructor_status == BoundStatus.WITHIN_BOUND


def test_parametros_invalidos(service):
    with pytest.raises(BadParam):
        service.audit_trees(4, 3)
    with pytest.raises(BadParam):
        service.audit_trees(17, 3)
    with pytest.raises(BadParam):
        service.audit_graphs(6, 2)


def test_grafos(service):
    result = service.audit_graphs(GRAPH_AUDIT_N, 3)
    assert result.summary["violations"] == 0
    assert result.summary["seed"] is None
    c5 = canonical_graph6(Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]))
    linha = [r for r in result.records if r.instance_id == c5]
    assert len(linha) == 1
    assert linha[0].gamma == 4
    assert linha[0].bound_status == BoundStatus.WITHIN_BOUND


@pytest.mark.slow
def test_grafos_exaustivo(service):
    result = service.audit_graphs(GRAPH_AUDIT_SLOW_N, 3)
    assert result.summary["violations"] == 0
    assert result.summary["exceptional"] == 1


@pytest.mark.slow
def test_arvores_exaustivo(service):
    result = service.audit_trees(TREE_AUDIT_SLOW_N, None)
    assert result.summary["violations"] == 0
    assert all(r.n == 2 * r.delta + 1 for r in result.records if r.bound_status == BoundStatus.EXCEPTIONAL_STAR)


def test_amostragem_semeada():
    a = sample_graphs(9, 5, SEED)
    b = sample_graphs(9, 5, SEED)
    assert a == b
    assert all(g.n == 9 for g in a)


def test_familias_justas(service):
    tabela = service.verify_tight_families(3, 3)
    assert tabela["ok"].all()
    estrela = tabela[(tabela["family"] == "subdivided-star") & (tabela["param"] == 3)]
    assert estrela["measured"].iloc[0] == 6
    gp = tabela[(tabela["family"] == "subcubic-gp") & (tabela["method"] == "solve")]
    assert gp["measured"].iloc[0] == 15


@pytest.mark.slow
def test_familias_justas_completo(service):
    tabela = service.verify_tight_families(5, 7, decide=[5])
    assert tabela["ok"].all()


def test_oraculo(service):
    tabela = service.audit_oracle_agreement(random_twin_free_graphs(15, 5, 9, seed=SEED))
    assert len(tabela) == 15
    assert tabela["agree"].all()


def test_paralelo_preserva_ordem():
    serial = AuditService(workers=1).audit_trees(8, 3)
    paralelo = AuditService(workers=2).audit_trees(8, 3)
    assert [r.to_dict() for r in serial.records] == [r.to_dict() for r in paralelo.records]


def test_persistencia(service, tmp_path):
    result = service.audit_trees(7, 3)
    csv_path, json_path = ReportPersistenceService(tmp_path / "relatorios").salvar_auditoria(result, "trees")
    tabela = pd.read_csv(csv_path)
    assert list(tabela.columns) == RECORD_COLUMNS
    assert len(tabela) == len(result.records)
    resumo = json.loads(json_path.read_text(encoding="utf-8"))
    assert resumo["violations"] == 0
    assert resumo["instances"] == len(result.records)


def test_persistencia_sem_diretorio():
    with pytest.raises(ValueError):
        ReportPersistenceService("")


@pytest.mark.parametrize("modulo", [graph_file_service, persistencia])
def test_nivel_de_log_vem_da_configuracao(modulo, monkeypatch):
    niveis = []
    monkeypatch.setattr(logging, "basicConfig", lambda **kwargs: niveis.append(kwargs.get("level")))
    importlib.reload(modulo)
    assert niveis == [settings.LOG_LEVEL]
