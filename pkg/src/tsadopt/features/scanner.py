"""Tolerant tokenizer for TypeScript source text.

Produces a flat token list for the contextual parser. Strings, templates,
comments, and regex literals are opaque: their contents can never leak
punctuator or keyword tokens. Template literals are split into
head/middle/tail parts around the embedded expressions, tracked with a
brace stack so nested substitutions close correctly.

`<` and `>` are always emitted as single-character punctuators; the parser
reassembles shift/comparison operators from adjacent tokens. This sidesteps
the classic `>>` ambiguity when closing nested type-argument lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class LexError(Exception):
    """Unterminated string/template/comment or similar lexical failure."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at offset {pos}")
        self.pos = pos


class TokenKind(Enum):
    IDENT = "identifier"
    KEYWORD = "keyword"
    PUNCT = "punctuator"
    STRING = "string"
    NUMBER = "number"
    REGEX = "regex"
    TEMPLATE_FULL = "template-full"
    TEMPLATE_HEAD = "template-head"
    TEMPLATE_MIDDLE = "template-middle"
    TEMPLATE_TAIL = "template-tail"
    COMMENT = "comment-skipped"


@dataclass(frozen=True, slots=True)
class Token:
    kind: TokenKind
    text: str
    start: int
    end: int
    newline_before: bool


# Reserved words that can never be identifiers. Contextual keywords
# (satisfies, accessor, override, type, as, static, ...) scan as IDENT
# and the parser decides from position.
RESERVED = frozenset(
    """
    break case catch class const continue debugger default delete do else
    enum export extends false finally for function if import in instanceof
    new null return super switch this throw true try typeof var void while
    with
    """.split()
)

# After these, a `/` is a division sign, not the start of a regex.
_VALUE_KEYWORDS = frozenset({"this", "super", "true", "false", "null"})
_NO_REGEX_PUNCT = frozenset({")", "]", "}", "++", "--"})

# Multi-character punctuators by length (maximal munch). `<`/`>` compounds
# are intentionally absent; see module docstring.
_PUNCT3 = ("...", "===", "!==", "**=", "&&=", "||=", "??=")
_PUNCT2 = (
    "=>", "==", "!=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
    "&&", "||", "??", "?.", "**", "++", "--",
)
_PUNCT1 = "{}()[];,.?:=!+-*/%&|^~<>@#"


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha() or ch in "_$" or ord(ch) > 127


def _is_ident_part(ch: str) -> bool:
    return ch.isalnum() or ch in "_$" or ord(ch) > 127


def _regex_allowed(prev: Token | None) -> bool:
    if prev is None:
        return True
    if prev.kind is TokenKind.KEYWORD:
        return prev.text not in _VALUE_KEYWORDS
    if prev.kind is TokenKind.PUNCT:
        return prev.text not in _NO_REGEX_PUNCT
    return False


def scan(source: str) -> list[Token]:
    """Tokenize source, skipping whitespace and comments.

    Raises LexError on unterminated strings, templates, regexes, or block
    comments; callers map that to a failed parse for the whole file.
    """
    tokens: list[Token] = []
    i = 0
    n = len(source)
    newline = False
    # One entry per open template substitution: count of unmatched `{`
    # inside it. A `}` at count zero resumes template scanning.
    template_stack: list[int] = []

    if source.startswith("﻿"):
        i = 1
    if source.startswith("#!", i):
        while i < n and source[i] != "\n":
            i += 1

    def emit(kind: TokenKind, start: int, end: int) -> None:
        nonlocal newline
        tokens.append(Token(kind, source[start:end], start, end, newline))
        newline = False

    while i < n:
        ch = source[i]

        if ch in " \t\r\f\v   ":
            i += 1
            continue
        if ch == "\n":
            newline = True
            i += 1
            continue

        if ch == "/" and i + 1 < n:
            nxt = source[i + 1]
            if nxt == "/":
                i += 2
                while i < n and source[i] != "\n":
                    i += 1
                continue
            if nxt == "*":
                end = source.find("*/", i + 2)
                if end < 0:
                    raise LexError("unterminated block comment", i)
                if "\n" in source[i:end]:
                    newline = True
                i = end + 2
                continue

        if _is_ident_start(ch) or (ch == "#" and i + 1 < n and _is_ident_start(source[i + 1])):
            start = i
            if ch == "#":
                i += 1
            i += 1
            while i < n and _is_ident_part(source[i]):
                i += 1
            word = source[start:i]
            emit(TokenKind.KEYWORD if word in RESERVED else TokenKind.IDENT, start, i)
            continue

        if ch.isdigit() or (ch == "." and i + 1 < n and source[i + 1].isdigit()):
            start = i
            i = _scan_number(source, i)
            emit(TokenKind.NUMBER, start, i)
            continue

        if ch in "'\"":
            start = i
            i = _scan_string(source, i)
            emit(TokenKind.STRING, start, i)
            continue

        if ch == "`":
            start = i
            i, kind = _scan_template(source, i + 1)
            if kind is TokenKind.TEMPLATE_HEAD:
                template_stack.append(0)
            emit(kind, start, i)
            continue

        if ch == "{":
            if template_stack:
                template_stack[-1] += 1
            emit(TokenKind.PUNCT, i, i + 1)
            i += 1
            continue

        if ch == "}":
            if template_stack and template_stack[-1] == 0:
                start = i
                i, kind = _scan_template(source, i + 1)
                if kind is TokenKind.TEMPLATE_FULL:
                    kind = TokenKind.TEMPLATE_TAIL
                    template_stack.pop()
                else:
                    kind = TokenKind.TEMPLATE_MIDDLE
                emit(kind, start, i)
                continue
            if template_stack:
                template_stack[-1] -= 1
            emit(TokenKind.PUNCT, i, i + 1)
            i += 1
            continue

        if ch == "/":
            prev = tokens[-1] if tokens else None
            if _regex_allowed(prev):
                end = _try_scan_regex(source, i)
                if end is not None:
                    emit(TokenKind.REGEX, i, end)
                    i = end
                    continue
            if source.startswith("/=", i):
                emit(TokenKind.PUNCT, i, i + 2)
                i += 2
            else:
                emit(TokenKind.PUNCT, i, i + 1)
                i += 1
            continue

        if ch == "?" and source.startswith("?.", i) and i + 2 < n and source[i + 2].isdigit():
            # `a?.5:b` is a conditional, not optional chaining
            emit(TokenKind.PUNCT, i, i + 1)
            i += 1
            continue

        for p in _PUNCT3:
            if source.startswith(p, i):
                emit(TokenKind.PUNCT, i, i + 3)
                i += 3
                break
        else:
            for p in _PUNCT2:
                if source.startswith(p, i):
                    emit(TokenKind.PUNCT, i, i + 2)
                    i += 2
                    break
            else:
                # Unknown characters become one-char punctuators; the
                # parser's recovery deals with them.
                emit(TokenKind.PUNCT, i, i + 1)
                i += 1

    return tokens


def _scan_string(source: str, i: int) -> int:
    quote = source[i]
    n = len(source)
    pos = i
    i += 1
    while i < n:
        ch = source[i]
        if ch == "\\":
            i += 2
            continue
        if ch == quote:
            return i + 1
        if ch == "\n":
            break
        i += 1
    raise LexError("unterminated string literal", pos)


def _scan_template(source: str, i: int) -> tuple[int, TokenKind]:
    """Scan template text from just past the opening delimiter.

    Returns (end, TEMPLATE_FULL) when closed by a backtick or
    (end, TEMPLATE_HEAD) when interrupted by `${`. The caller rebrands
    FULL/HEAD as TAIL/MIDDLE when resuming after a substitution.
    """
    n = len(source)
    pos = i - 1
    while i < n:
        ch = source[i]
        if ch == "\\":
            i += 2
            continue
        if ch == "`":
            return i + 1, TokenKind.TEMPLATE_FULL
        if ch == "$" and i + 1 < n and source[i + 1] == "{":
            return i + 2, TokenKind.TEMPLATE_HEAD
        i += 1
    raise LexError("unterminated template literal", pos)


def _try_scan_regex(source: str, i: int) -> int | None:
    """Scan a regex literal starting at `/`; None if it does not close."""
    n = len(source)
    j = i + 1
    in_class = False
    while j < n:
        ch = source[j]
        if ch == "\\":
            j += 2
            continue
        if ch == "\n":
            return None
        if in_class:
            if ch == "]":
                in_class = False
        elif ch == "[":
            in_class = True
        elif ch == "/":
            j += 1
            while j < n and _is_ident_part(source[j]):
                j += 1
            return j
        j += 1
    return None


def _scan_number(source: str, i: int) -> int:
    n = len(source)
    if source.startswith(("0x", "0X", "0b", "0B", "0o", "0O"), i):
        i += 2
        while i < n and (source[i].isalnum() or source[i] == "_"):
            i += 1
        return i
    while i < n and (source[i].isdigit() or source[i] == "_"):
        i += 1
    if i < n and source[i] == ".":
        i += 1
        while i < n and (source[i].isdigit() or source[i] == "_"):
            i += 1
    if i < n and source[i] in "eE":
        j = i + 1
        if j < n and source[j] in "+-":
            j += 1
        if j < n and source[j].isdigit():
            i = j
            while i < n and source[i].isdigit():
                i += 1
    if i < n and source[i] == "n":
        i += 1
    return i
