# -*- coding: utf-8 -*-
"""Hierarquia de exceções do pacote."""


class IOCodeError(Exception):
    """Base de todos os erros do pacote."""


class InvalidVertex(IOCodeError, ValueError):
    pass


class EmptyGraph(IOCodeError, ValueError):
    pass


class Disconnected(IOCodeError, ValueError):
    pass


class NotATree(IOCodeError, ValueError):
    pass


class NotPresent(IOCodeError, ValueError):
    pass


class UniverseMismatch(IOCodeError, ValueError):
    pass


class TooLarge(IOCodeError, ValueError):
    pass


class BadParam(IOCodeError, ValueError):
    pass


class NotInFamily(IOCodeError, ValueError):
    pass


class TooSmall(IOCodeError, ValueError):
    pass


class DegreeExceeded(IOCodeError, ValueError):
    pass


class FourCyclePresent(IOCodeError, ValueError):
    pass


class NoCode(IOCodeError, ValueError):
    """O grafo não admite IO-code.

    Args:
        message (str): Descrição do problema.
        witness (tuple): Vértice isolado ``(v,)`` ou par de gêmeos abertos ``(u, v)``.
    """

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = tuple(witness)


class ParseError(IOCodeError, ValueError):
    """Entrada malformada; ``line`` (texto) ou ``position`` (byte, graph6) indicam onde."""

    def __init__(self, message: str, line: int = None, position: int = None):
        where = ""
        if line is not None:
            where = f" (linha {line})"
        elif position is not None:
            where = f" (byte {position})"
        super().__init__(f"{message}{where}")
        self.line = line
        self.position = position


class ConstructionError(IOCodeError, RuntimeError):
    """Falha interna de um construtor; o trace parcial acompanha a exceção."""

    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = trace
