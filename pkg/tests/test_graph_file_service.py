import os
import unittest

from iocodes.processamento.errors import BadParam, ParseError
from iocodes.processamento.graph_file_service import (
    GraphFileService,
    format_edge_list,
    format_graph6,
    parse_code,
    parse_edge_list,
    parse_graph6,
)
from iocodes.processamento.models import Graph
from tests.settings import EXEMPLO_DIR


class TestListaDeArestas(unittest.TestCase):

    def test_comentarios_e_linhas_vazias(self):
        texto = "# triângulo com pendente\n0 1\n\n1 2  # aresta\n2 0\n2 3\n"
        G = parse_edge_list(texto)
        self.assertEqual(G.n, 4)
        self.assertEqual(G.edge_count, 4)

    def test_cabecalho_define_n(self):
        G = parse_edge_list("# n=6 m=1\n0 1\n")
        self.assertEqual(G.n, 6)
        self.assertEqual(parse_edge_list(format_edge_list(G)), G)

    def test_erros_com_linha(self):
        with self.assertRaises(ParseError) as ctx:
            parse_edge_list("0 1\n1 x\n")
        self.assertEqual(ctx.exception.line, 2)
        with self.assertRaises(ParseError) as ctx:
            parse_edge_list("0 1\n\n2 2\n")
        self.assertEqual(ctx.exception.line, 3)
        with self.assertRaises(ParseError):
            parse_edge_list("0 1 2\n")
        with self.assertRaises(ParseError):
            parse_edge_list("0 5\n", n=3)


class TestGraph6(unittest.TestCase):

    def test_ida_e_volta(self):
        G = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
        self.assertEqual(parse_graph6(format_graph6(G)), G)
        self.assertEqual(parse_graph6(">>graph6<<" + format_graph6(G) + "\n"), G)

    def test_caractere_invalido(self):
        with self.assertRaises(ParseError) as ctx:
            parse_graph6("D ?")
        self.assertEqual(ctx.exception.position, 1)

    def test_vazio(self):
        with self.assertRaises(ParseError):
            parse_graph6(">>graph6<<")


class TestCodigo(unittest.TestCase):

    def test_separadores(self):
        S = parse_code("0, 2\n4 # fim\n", 5)
        self.assertEqual(S.to_list(), [0, 2, 4])

    def test_fora_do_intervalo(self):
        with self.assertRaises(ParseError) as ctx:
            parse_code("0\n9\n", 5)
        self.assertEqual(ctx.exception.line, 2)


class TestGraphFileService(unittest.TestCase):

    def setUp(self):
        self.service = GraphFileService()

    def test_processar_arquivo_exemplo(self):
        G = self.service.processar_arquivo(os.path.join(EXEMPLO_DIR, "p5.edges"))
        self.assertEqual((G.n, G.edge_count), (5, 4))
        codigo = self.service.ler_codigo(os.path.join(EXEMPLO_DIR, "g3_sstar.code"), 18)
        self.assertEqual(len(codigo), 15)

    def test_detectar_formato(self):
        self.assertEqual(self.service.detectar_formato("x.g6", ""), "g6")
        self.assertEqual(self.service.detectar_formato("x.edges", ""), "edges")
        self.assertEqual(self.service.detectar_formato("x", "Dhc\n"), "g6")
        self.assertEqual(self.service.detectar_formato("x", "0 1\n1 2\n"), "edges")

    def test_formato_desconhecido(self):
        with self.assertRaises(BadParam):
            self.service.emitir(Graph(2, [(0, 1)]), "dot")


if __name__ == '__main__':
    unittest.main()
