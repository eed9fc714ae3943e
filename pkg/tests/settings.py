"""Settings module for the test suite."""
import os

EXEMPLO_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "iocodes", "exemplo")
SEED = 20240501
RANDOM_CASES = 60  # grafos aleatórios por propriedade
TREE_AUDIT_N = 10  # auditoria rápida; a exaustiva (n <= 14) é marcada como slow
TREE_AUDIT_SLOW_N = 14
GRAPH_AUDIT_N = 6
GRAPH_AUDIT_SLOW_N = 7
