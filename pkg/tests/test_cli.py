import json
import os

import pandas as pd
import pytest

from iocodes.cli import main
from iocodes.processamento.graph_file_service import parse_edge_list
from tests.settings import EXEMPLO_DIR


def exemplo(nome):
    return os.path.join(EXEMPLO_DIR, nome)


def saida_json(capsys):
    return json.loads(capsys.readouterr().out)


def test_solve(capsys):
    assert main(["solve", exemplo("p5.edges")]) == 0
    dados = saida_json(capsys)
    assert dados["gamma"] == 4
    assert len(dados["code"]) == 4


def test_solve_com_orcamento(capsys):
    assert main(["solve", exemplo("c5.edges"), "--budget", "3"]) == 0
    assert saida_json(capsys)["found"] is False


def test_verify(capsys):
    assert main(["verify", exemplo("g3.edges"), exemplo("g3_sstar.code")]) == 0
    assert saida_json(capsys)["ok"] is True
    assert main(["verify", exemplo("p5.edges"), exemplo("p5_bad.code")]) == 1
    dados = saida_json(capsys)
    assert dados["violation"] == {"kind": "not_separated", "pair": [1, 3]}


def test_construct(capsys):
    assert main(["construct", exemplo("c5.edges")]) == 0
    dados = saida_json(capsys)
    assert dados["size"] == 4
    assert dados["bound_status"] == "within_bound"
    assert dados["trace"]["steps"][0]["case"] == "base_pattern"


def test_generate(capsys, tmp_path):
    sidecar = tmp_path / "estrela.json"
    assert main(["generate", "subdivided-star", "4", "--sidecar", str(sidecar)]) == 0
    G = parse_edge_list(capsys.readouterr().out)
    assert (G.n, G.edge_count) == (9, 8)
    spec = json.loads(sidecar.read_text(encoding="utf-8"))
    assert len(spec["reference_code"]) == 8


def test_generate_parametros_errados(capsys):
    assert main(["generate", "subdivided-star"]) == 2
    assert "erro:" in capsys.readouterr().err
    assert main(["generate", "subdivided-star", "dois"]) == 2


def test_signature(capsys):
    assert main(["signature", exemplo("p5.edges"), exemplo("p5_bad.code")]) == 1
    assert "vertex" in capsys.readouterr().out


def test_arquivo_inexistente(capsys, tmp_path):
    assert main(["solve", str(tmp_path / "nao_existe.edges")]) == 2
    assert "erro:" in capsys.readouterr().err


def test_conteudo_invalido(capsys, tmp_path):
    ruim = tmp_path / "ruim.edges"
    ruim.write_text("0 1\n1 x\n", encoding="utf-8")
    assert main(["solve", str(ruim)]) == 2
    assert "erro:" in capsys.readouterr().err


def test_sem_codigo(capsys, tmp_path):
    p3 = tmp_path / "p3.edges"
    p3.write_text("0 1\n1 2\n", encoding="utf-8")
    assert main(["solve", str(p3)]) == 2


def test_audit(capsys, tmp_path):
    assert main(["audit", "trees", "--n-max", "6", "--workers", "1", "--out", str(tmp_path)]) == 0
    resumo = saida_json(capsys)
    assert resumo["violations"] == 0
    tabela = pd.read_csv(tmp_path / "trees.csv")
    assert len(tabela) == resumo["instances"]
    assert (tmp_path / "trees.json").exists()


def test_subcomando_obrigatorio():
    with pytest.raises(SystemExit):
        main([])
