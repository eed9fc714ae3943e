# -*- coding: utf-8 -*-
"""Leitura e escrita de grafos e códigos: lista de arestas e graph6."""
import logging
import os
import re
from typing import List, Optional, Tuple

import networkx as nx

from iocodes import settings
from iocodes.processamento.errors import BadParam, ParseError
from iocodes.processamento.models import Graph, VertexSet

# Configurar logging
logging.basicConfig(level=settings.LOG_LEVEL)

GRAPH6_HEADER = ">>graph6<<"
HEADER_PATTERN = re.compile(r"^\s*#\s*n=(\d+)")


def parse_edge_list(texto: str, n: Optional[int] = None) -> Graph:
    """Interpreta uma lista de arestas ``u v`` por linha; ``#`` inicia comentário.

    Args:
        texto (str): Conteúdo do arquivo.
        n (int, opcional): Número de vértices; por padrão, o do cabeçalho ``# n=``
            ou maior índice + 1.

    Returns:
        Graph: O grafo lido.
    """
    edges: List[Tuple[int, int]] = []
    for numero, linha in enumerate(texto.splitlines(), start=1):
        if n is None:
            cabecalho = HEADER_PATTERN.match(linha)
            if cabecalho:
                n = int(cabecalho.group(1))
        conteudo = linha.split("#", 1)[0].strip()
        if not conteudo:
            continue
        partes = conteudo.split()
        if len(partes) != 2:
            raise ParseError(f"Esperado um par 'u v', encontrado {conteudo!r}", line=numero)
        try:
            u, v = int(partes[0]), int(partes[1])
        except ValueError as e:
            raise ParseError(f"Índice de vértice inválido em {conteudo!r}", line=numero) from e
        if u < 0 or v < 0:
            raise ParseError(f"Índice negativo em {conteudo!r}", line=numero)
        if u == v:
            raise ParseError(f"Laço no vértice {u}", line=numero)
        edges.append((u, v))
    maior = max((max(e) for e in edges), default=-1)
    total = maior + 1 if n is None else n
    if total <= maior:
        raise ParseError(f"Vértice {maior} excede n={total}")
    return Graph(total, edges)


def format_edge_list(G: Graph) -> str:
    linhas = [f"# n={G.n} m={G.edge_count}"]
    linhas += [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(linhas) + "\n"


def parse_graph6(texto: str) -> Graph:
    """Decodifica uma string graph6 (cabeçalho ``>>graph6<<`` opcional)."""
    dados = texto.strip()
    inicio = 0
    if dados.startswith(GRAPH6_HEADER):
        inicio = len(GRAPH6_HEADER)
    for posicao in range(inicio, len(dados)):
        if not 63 <= ord(dados[posicao]) <= 126:
            raise ParseError(f"Caractere inválido {dados[posicao]!r} em graph6", position=posicao)
    if inicio == len(dados):
        raise ParseError("String graph6 vazia", position=inicio)
    try:
        nx_graph = nx.from_graph6_bytes(dados[inicio:].encode("ascii"))
    except (nx.NetworkXError, ValueError) as e:
        raise ParseError(f"graph6 malformado: {str(e)}", position=len(dados)) from e
    return Graph.from_networkx(nx_graph)


def format_graph6(G: Graph) -> str:
    return nx.to_graph6_bytes(G.to_networkx(), header=False).decode("ascii").strip()


def parse_code(texto: str, universe: int) -> VertexSet:
    """Lê um código: índices separados por espaço, vírgula ou quebra de linha."""
    membros = []
    for numero, linha in enumerate(texto.splitlines(), start=1):
        conteudo = linha.split("#", 1)[0].replace(",", " ").split()
        for item in conteudo:
            try:
                v = int(item)
            except ValueError as e:
                raise ParseError(f"Índice inválido {item!r} no código", line=numero) from e
            if not 0 <= v < universe:
                raise ParseError(f"Vértice {v} fora de 0..{universe - 1}", line=numero)
            membros.append(v)
    return VertexSet.of(universe, membros)


def format_code(S: VertexSet) -> str:
    return " ".join(str(v) for v in S) + "\n"


class GraphFileService:
    """Serviço de leitura de arquivos de grafo, escolhendo o formato pela extensão ou pelo conteúdo."""

    def detectar_formato(self, caminho: str, texto: str) -> str:
        extensao = os.path.splitext(caminho)[1].lower()
        if extensao in (".g6", ".graph6"):
            return "g6"
        if extensao in (".edges", ".txt", ".el"):
            return "edges"
        linhas = [l for l in texto.splitlines() if l.strip() and not l.lstrip().startswith("#")]
        if len(linhas) == 1 and len(linhas[0].split()) == 1:
            return "g6"
        return "edges"

    def processar_arquivo(self, caminho: str, formato: Optional[str] = None) -> Graph:
        """
        Lê um grafo de ``caminho``.

        Args:
            caminho (str): Caminho do arquivo.
            formato (str, opcional): 'g6' ou 'edges'; detectado automaticamente se omitido.

        Returns:
            Graph: O grafo lido.
        """
        with open(caminho, "r", encoding="utf-8") as arquivo:
            texto = arquivo.read()
        formato = formato or self.detectar_formato(caminho, texto)
        logging.debug(f"Lendo {caminho} no formato {formato}")
        if formato == "g6":
            return parse_graph6(texto)
        if formato == "edges":
            return parse_edge_list(texto)
        raise BadParam(f"Formato não suportado: {formato}")

    def ler_codigo(self, caminho: str, universe: int) -> VertexSet:
        with open(caminho, "r", encoding="utf-8") as arquivo:
            return parse_code(arquivo.read(), universe)

    def emitir(self, G: Graph, formato: str = "edges") -> str:
        if formato == "g6":
            return format_graph6(G) + "\n"
        if formato == "edges":
            return format_edge_list(G)
        raise BadParam(f"Formato não suportado: {formato}")
