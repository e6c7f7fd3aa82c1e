"""Declaration documents, expression evaluation and the ``msetmap`` command."""

from .document import Environment, MapDecl, MsetDecl, parse_document, render_document
from .expression import eval_expression, evaluate, render_value

__all__ = [
    "Environment",
    "MapDecl",
    "MsetDecl",
    "parse_document",
    "render_document",
    "eval_expression",
    "evaluate",
    "render_value",
]
