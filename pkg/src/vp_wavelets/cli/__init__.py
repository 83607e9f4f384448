"""Command-line interface and the expression language it samples."""

from .expr import ExprAst, compile_expr, evaluate_expr, format_expr, parse_expr

__all__ = ["ExprAst", "compile_expr", "evaluate_expr", "format_expr", "parse_expr"]
