# -*- coding: utf-8 -*-
import json
import logging
from pathlib import Path
from typing import Dict, Tuple

import pandas as pd

from iocodes import settings
from iocodes.services.audit_service import AuditResult

# Configurar logging
logging.basicConfig(level=settings.LOG_LEVEL)


class ReportPersistenceService:
    """
    Serviço para persistência dos relatórios de auditoria em arquivos planos.
    Cada auditoria gera um CSV (um registro por linha) e um resumo JSON.
    """

    def __init__(self, diretorio):
        if not diretorio:
            raise ValueError("Diretório de saída não foi fornecido")
        self.diretorio = Path(diretorio)
        self.diretorio.mkdir(parents=True, exist_ok=True)
        logging.info(f"ReportPersistenceService inicializado em: {self.diretorio}")

    def salvar_tabela(self, tabela: pd.DataFrame, nome: str) -> Path:
        caminho = self.diretorio / f"{nome}.csv"
        try:
            tabela.to_csv(caminho, index=False, lineterminator="\n")
            logging.info(f"Tabela salva em {caminho} ({len(tabela)} linhas)")
            return caminho
        except OSError as e:
            logging.error(f"Erro ao salvar tabela: {str(e)}")
            raise RuntimeError(f"Erro ao salvar tabela: {str(e)}") from e

    def salvar_resumo(self, resumo: Dict[str, object], nome: str) -> Path:
        caminho = self.diretorio / f"{nome}.json"
        try:
            caminho.write_text(json.dumps(resumo, indent=2, sort_keys=True) + "\n", encoding="utf-8")
            logging.info(f"Resumo salvo em {caminho}")
            return caminho
        except OSError as e:
            logging.error(f"Erro ao salvar resumo: {str(e)}")
            raise RuntimeError(f"Erro ao salvar resumo: {str(e)}") from e

    def salvar_auditoria(self, resultado: AuditResult, nome: str) -> Tuple[Path, Path]:
        """Salva ``<nome>.csv`` e ``<nome>.json``."""
        return self.salvar_tabela(resultado.to_frame(), nome), self.salvar_resumo(resultado.summary, nome)
