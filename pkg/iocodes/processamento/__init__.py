"""Modelos de grafo e processamento de arquivos."""
