"""Tokenizer shared by the ``.exd`` document and scenario grammars."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import SpecSyntaxError

IDENT = "identifier"
INT = "integer"
EOF_KIND = "end of input"

_PUNCT = {"{", "}", ":", ";", ",", "=", "(", ")", "!", "&", "|"}
_IDENT_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")
_IDENT_CHARS = _IDENT_START | set("0123456789")
_DIGITS = set("0123456789")


@dataclass(frozen=True)
class Token:
    kind: str  # IDENT, INT, EOF_KIND, or the punctuation text itself
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i, n = 0, len(text)
    line, col = 1, 1
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
        elif ch in " \t\r":
            i += 1
            col += 1
        elif ch == "#":
            while i < n and text[i] != "\n":
                i += 1
        elif ch in _IDENT_START:
            j = i + 1
            while j < n and text[j] in _IDENT_CHARS:
                j += 1
            tokens.append(Token(IDENT, text[i:j], line, col))
            col += j - i
            i = j
        elif ch in _DIGITS:
            j = i + 1
            while j < n and text[j] in _DIGITS:
                j += 1
            if j < n and text[j] in _IDENT_START:
                raise SpecSyntaxError("identifiers cannot start with a digit", line, col)
            tokens.append(Token(INT, text[i:j], line, col))
            col += j - i
            i = j
        elif ch == "-":
            if text.startswith("->", i):
                tokens.append(Token("->", "->", line, col))
                i += 2
                col += 2
            else:
                raise SpecSyntaxError("stray '-'", line, col, frozenset({"->"}))
        elif ch in _PUNCT:
            tokens.append(Token(ch, ch, line, col))
            i += 1
            col += 1
        else:
            raise SpecSyntaxError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token(EOF_KIND, "", line, col))
    return tokens
