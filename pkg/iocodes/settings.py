# -*- coding: utf-8 -*-
"""Configuração via variáveis de ambiente (arquivo .env opcional)."""
import logging

from environs import Env

# Carregar variáveis de ambiente
env = Env()
env.read_env()

WORKERS = env.int("IOCODES_WORKERS", default=1)
ORACLE_MAX_N = env.int("IOCODES_ORACLE_MAX_N", default=24)
TREE_MAX_N = env.int("IOCODES_TREE_MAX_N", default=18)
GRAPH_MAX_N = env.int("IOCODES_GRAPH_MAX_N", default=7)
CANONICAL_MAX_N = env.int("IOCODES_CANONICAL_MAX_N", default=8)
GP_EXACT_MAX_P = env.int("IOCODES_GP_EXACT_MAX_P", default=3)
AUDIT_SEED = env.int("IOCODES_AUDIT_SEED", default=20240501)
LOG_LEVEL = env.log_level("IOCODES_LOG_LEVEL", default="INFO")

# Configurar logging
logging.basicConfig(level=LOG_LEVEL)
