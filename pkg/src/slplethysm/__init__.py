"""Plethysm S^k(gl_n), S^k(sl_n), their highest-weight vectors and Waring certificates."""

__version__ = "0.1.0"
