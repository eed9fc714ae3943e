"""Main application package: códigos abertos identificadores (IO-codes) em grafos."""

__version__ = "0.1"
