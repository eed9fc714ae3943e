"""Serviços: verificação, solver exato, famílias, construção e auditoria."""
