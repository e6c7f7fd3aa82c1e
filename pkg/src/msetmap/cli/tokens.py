"""Tokenizer shared by the document and expression parsers."""

from __future__ import annotations

import re
from typing import NamedTuple

from ..errors import ParseError

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#.*)
  | (?P<inv>\^-1)
  | (?P<arrow>->)
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<int>\d+)
  | (?P<punct>[{}(),/;:^=+\-&~])
    """,
    re.VERBOSE,
)


class Token(NamedTuple):
    kind: str  # name, int, or the literal text for punctuation
    text: str
    line: int
    column: int


def tokenize(text: str, line: int = 1) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos + 1)
        kind = match.lastgroup
        if kind in ("name", "int"):
            tokens.append(Token(kind, match.group(), line, pos + 1))
        elif kind == "inv":
            tokens.append(Token("^-1", "^-1", line, pos + 1))
        elif kind == "arrow":
            tokens.append(Token("->", "->", line, pos + 1))
        elif kind == "punct":
            tokens.append(Token(match.group(), match.group(), line, pos + 1))
        pos = match.end()
    return tokens


class Cursor:
    """Sequential reader over a token list with located errors."""

    def __init__(self, tokens: list, line: int = 1, end_column: int = 1):
        self.tokens = tokens
        self.i = 0
        self.line = line
        self.end_column = end_column

    def peek(self, offset: int = 0):
        j = self.i + offset
        return self.tokens[j] if j < len(self.tokens) else None

    def at(self, kind: str, offset: int = 0) -> bool:
        tok = self.peek(offset)
        return tok is not None and tok.kind == kind

    def error(self, message: str, tok=None):
        tok = tok if tok is not None else self.peek()
        if tok is None:
            return ParseError(message, self.line, self.end_column)
        return ParseError(message, tok.line, tok.column)

    def next(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise self.error("unexpected end of input")
        self.i += 1
        return tok

    def expect(self, kind: str, what: str = None) -> Token:
        tok = self.peek()
        if tok is None or tok.kind != kind:
            found = "end of input" if tok is None else repr(tok.text)
            raise self.error(f"expected {what or repr(kind)}, found {found}")
        self.i += 1
        return tok

    def accept(self, kind: str):
        if self.at(kind):
            return self.next()
        return None

    def done(self) -> bool:
        return self.i >= len(self.tokens)
