"""Tolerant recursive-descent parser that flags TypeScript syntax features.

No AST is built; the parser walks declarations, class bodies, import and
export clauses, expressions, and the type grammar deeply enough to tell
type position from expression position, recording feature flags as the
qualifying constructs are recognized.

Recovery: a parse failure bubbles to the top-level statement loop, which
skips ahead to the next `;`, closing `}`, or declaration keyword. Only
when that scan reaches end-of-input without a resync point is the file
reported as unparsed.

Disambiguation rules that must match the reference compiler:
  - `as` / `satisfies` are binary operators only with no preceding line
    break (otherwise semicolon insertion splits the statement).
  - class member modifiers other than `static` require the member name on
    the same line; `static` does not, and `static` + `{` is a class
    static block regardless of line breaks.
  - `infer X extends C` keeps the constraint only when conditional types
    are disallowed in the current context or the next token is not `?`;
    otherwise the `extends` belongs to an enclosing conditional type.
  - `import { type ... }` specifiers follow the compiler's lookahead
    dance: `{type}` and `{type as as}` and `{type as X}` bind `type` as a
    name, the other shapes mark the specifier type-only.
  - a template literal counts as a template literal type only when it has
    substitutions and sits in type position.

Speculative parses (expression type arguments, function-type parentheses,
infer constraints) snapshot both the cursor and the recorded flags, so a
rolled-back attempt leaves no trace.
"""

from __future__ import annotations

from .scanner import Token, TokenKind

# Flags a failed speculative parse; also drives top-level resynchronization.
class _ParseError(Exception):
    pass


_DECL_KEYWORDS = frozenset(
    """
    class function import export const let var interface type enum
    namespace module declare abstract async if for while do switch try
    return throw break continue debugger using
    """.split()
)

_ACCESS_MODIFIERS = frozenset({"public", "private", "protected"})
_MEMBER_MODIFIERS = _ACCESS_MODIFIERS | frozenset(
    {"readonly", "abstract", "declare", "override", "accessor", "async"}
)
_PARAM_MODIFIERS = _ACCESS_MODIFIERS | frozenset({"readonly", "override"})

_BINARY_PUNCT = frozenset(
    """
    + - * / % ** == != === !== & | ^ && || ?? = += -= *= /= %= **= &= |=
    ^= &&= ||= ??=
    """.split()
)
_SHORT_CIRCUIT_ASSIGN = frozenset({"&&=", "||=", "??="})

_PRIMARY_KEYWORDS = frozenset(
    {"this", "super", "true", "false", "null", "new", "function", "class",
     "import", "typeof", "void", "delete"}
)
# Words excluded here are strict-mode reserved and never start expressions
# in practice; excluding them keeps `extends B<T> implements I` parseable.
_NON_EXPR_WORDS = frozenset(
    {"implements", "interface", "package", "private", "protected", "public"}
)

_TEMPLATE_STARTS = (TokenKind.TEMPLATE_FULL, TokenKind.TEMPLATE_HEAD)

# `const` appears as a type name in `as const` assertions.
_SIMPLE_TYPE_KEYWORDS = frozenset(
    {"this", "true", "false", "null", "void", "const"}
)


def _is_expr_start(tok: Token | None) -> bool:
    if tok is None:
        return False
    if tok.kind in (TokenKind.NUMBER, TokenKind.STRING, TokenKind.REGEX,
                    TokenKind.TEMPLATE_FULL, TokenKind.TEMPLATE_HEAD):
        return True
    if tok.kind is TokenKind.IDENT:
        return tok.text not in _NON_EXPR_WORDS
    if tok.kind is TokenKind.KEYWORD:
        return tok.text in _PRIMARY_KEYWORDS
    return tok.text in {"(", "[", "{", "!", "~", "+", "-", "++", "--", "...", "<", "@"}


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.pos = 0
        self.flags: list[str] = []

    # -- cursor helpers ----------------------------------------------------

    def tok(self, k: int = 0) -> Token | None:
        i = self.pos + k
        return self.toks[i] if i < len(self.toks) else None

    def at_end(self) -> bool:
        return self.pos >= len(self.toks)

    def advance(self) -> Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def is_punct(self, text: str, k: int = 0) -> bool:
        t = self.tok(k)
        return t is not None and t.kind is TokenKind.PUNCT and t.text == text

    def word(self, k: int = 0) -> str | None:
        """Token text if it is identifier-like (identifier or keyword)."""
        t = self.tok(k)
        if t is not None and t.kind in (TokenKind.IDENT, TokenKind.KEYWORD):
            return t.text
        return None

    def is_word(self, text: str, k: int = 0) -> bool:
        return self.word(k) == text

    def newline_before(self, k: int = 0) -> bool:
        t = self.tok(k)
        return t is None or t.newline_before

    def eat_punct(self, text: str) -> bool:
        if self.is_punct(text):
            self.advance()
            return True
        return False

    def eat_word(self, text: str) -> bool:
        if self.is_word(text):
            self.advance()
            return True
        return False

    def expect_punct(self, text: str) -> None:
        if not self.eat_punct(text):
            raise _ParseError(f"expected {text!r}")

    def fail(self, why: str = "unexpected token") -> None:
        raise _ParseError(why)

    def is_name(self, k: int = 0) -> bool:
        """Identifier-like token usable as a property or specifier name."""
        t = self.tok(k)
        return t is not None and t.kind in (TokenKind.IDENT, TokenKind.KEYWORD)

    # -- speculation -------------------------------------------------------

    def mark(self) -> tuple[int, int]:
        return (self.pos, len(self.flags))

    def restore(self, m: tuple[int, int]) -> None:
        self.pos, nflags = m
        del self.flags[nflags:]

    def flag(self, fid: str) -> None:
        self.flags.append(fid)

    # -- module level --------------------------------------------------------

    def parse_module(self) -> bool:
        while not self.at_end():
            start = self.pos
            try:
                self.parse_statement()
            except _ParseError:
                if not self._resync():
                    return False
            if self.pos == start:
                self.pos += 1
        return True

    def _resync(self) -> bool:
        """Skip to the next top-level `;`, `}`, or declaration keyword.

        Fails only when end-of-input is reached while still inside an
        unclosed bracket, i.e. no top-level structure can be recovered.
        """
        depth = 0
        while not self.at_end():
            t = self.toks[self.pos]
            if t.kind is TokenKind.PUNCT:
                if t.text in "([{":
                    depth += 1
                elif t.text in ")]":
                    depth -= 1
                elif t.text == "}":
                    depth -= 1
                    if depth < 0:
                        self.pos += 1
                        return True
                elif t.text == ";" and depth <= 0:
                    self.pos += 1
                    return True
            elif depth <= 0 and t.kind is TokenKind.KEYWORD and t.text in _DECL_KEYWORDS:
                return True
            self.pos += 1
        return depth <= 0

    # -- statements ----------------------------------------------------------

    def parse_statement(self) -> None:
        t = self.tok()
        if t is None:
            self.fail("eof")
        if t.kind is TokenKind.PUNCT:
            if t.text == "{":
                self.parse_block()
                return
            if t.text == ";":
                self.advance()
                return
            if t.text == "@":
                self.parse_decorators()
                self.parse_statement()
                return
            self.parse_expression_statement()
            return

        w = t.text
        if t.kind is TokenKind.KEYWORD:
            handler = {
                "const": self._stmt_const, "var": self._stmt_var_let,
                "function": self._stmt_function, "class": self._stmt_class,
                "import": self._stmt_import, "export": self.parse_export,
                "if": self._stmt_if, "for": self._stmt_for,
                "while": self._stmt_while, "do": self._stmt_do,
                "switch": self._stmt_switch, "try": self._stmt_try,
                "return": self._stmt_return_throw, "throw": self._stmt_return_throw,
                "break": self._stmt_break_continue, "continue": self._stmt_break_continue,
                "debugger": self._stmt_debugger, "enum": self._stmt_enum,
                "with": self._stmt_with,
            }.get(w)
            if handler is not None:
                handler()
                return
            self.parse_expression_statement()
            return

        # contextual statement keywords (identifier tokens)
        if w == "let" and (self.is_name(1) or self.is_punct("[", 1) or self.is_punct("{", 1)):
            self.advance()
            self.parse_var_declarations()
            self.eat_semi()
            return
        if w == "using" and self.is_name(1) and not self.newline_before(1):
            self.advance()
            self.parse_var_declarations()
            self.eat_semi()
            return
        if w == "type" and self.is_name(1) and (self.is_punct("=", 2) or self.is_punct("<", 2)):
            self.parse_type_alias()
            return
        if w == "interface" and self.is_name(1):
            self.parse_interface()
            return
        if w in ("namespace", "module") and (self.is_name(1) or self._is_string(1)):
            self.parse_namespace()
            return
        if w == "declare" and not self.newline_before(1) and (
            self.is_name(1) or self._is_string(1)
        ):
            self.advance()
            self.parse_statement()
            return
        if w == "abstract" and self.is_word("class", 1) and not self.newline_before(1):
            self.advance()
            self._stmt_class()
            return
        if w == "async" and self.is_word("function", 1) and not self.newline_before(1):
            self.advance()
            self._stmt_function()
            return
        if w == "global" and self.is_punct("{", 1):
            self.advance()
            self.parse_block()
            return
        if self.is_punct(":", 1) and t.kind is TokenKind.IDENT:
            # labeled statement
            self.advance()
            self.advance()
            self.parse_statement()
            return
        self.parse_expression_statement()

    def _is_string(self, k: int = 0) -> bool:
        t = self.tok(k)
        return t is not None and t.kind is TokenKind.STRING

    def eat_semi(self) -> None:
        self.eat_punct(";")

    def parse_expression_statement(self) -> None:
        self.parse_expression()
        self.eat_semi()

    def parse_block(self) -> None:
        self.expect_punct("{")
        while not self.at_end() and not self.is_punct("}"):
            start = self.pos
            self.parse_statement()
            if self.pos == start:
                self.fail("no progress in block")
        self.expect_punct("}")

    def _stmt_const(self) -> None:
        if self.is_word("enum", 1):
            self.advance()
            self._stmt_enum()
            return
        self.advance()
        self.parse_var_declarations()
        self.eat_semi()

    def _stmt_var_let(self) -> None:
        self.advance()
        self.parse_var_declarations()
        self.eat_semi()

    def parse_var_declarations(self) -> None:
        while True:
            self.parse_binding()
            if self.eat_punct("!"):
                pass
            if self.eat_punct(":"):
                self.parse_type()
            if self.eat_punct("="):
                self.parse_assignment()
            if not self.eat_punct(","):
                break

    def parse_binding(self) -> None:
        if self.is_punct("["):
            self.advance()
            while not self.at_end() and not self.is_punct("]"):
                if self.eat_punct(","):
                    continue
                self.eat_punct("...")
                self.parse_binding()
                if self.eat_punct(":"):
                    self.parse_type()
                if self.eat_punct("="):
                    self.parse_assignment()
            self.expect_punct("]")
            return
        if self.is_punct("{"):
            self.advance()
            while not self.at_end() and not self.is_punct("}"):
                if self.eat_punct(","):
                    continue
                if self.eat_punct("..."):
                    self.parse_binding()
                    continue
                if self.is_punct("["):
                    self.advance()
                    self.parse_assignment()
                    self.expect_punct("]")
                elif self.is_name() or self._is_string() or self._is_number():
                    self.advance()
                else:
                    self.fail("bad object pattern")
                if self.eat_punct(":"):
                    self.parse_binding()
                if self.eat_punct("="):
                    self.parse_assignment()
            self.expect_punct("}")
            return
        if self.is_name():
            self.advance()
            return
        self.fail("expected binding")

    def _is_number(self, k: int = 0) -> bool:
        t = self.tok(k)
        return t is not None and t.kind is TokenKind.NUMBER

    def _stmt_function(self) -> None:
        self.advance()
        self.eat_punct("*")
        if self.is_name():
            self.advance()
        self.parse_function_rest()

    def parse_function_rest(self) -> None:
        if self.is_punct("<"):
            self.parse_type_params(allow_variance=False)
        self.parse_params()
        if self.eat_punct(":"):
            self.parse_return_type()
        if self.is_punct("{"):
            self.parse_block()
        else:
            self.eat_semi()

    def _stmt_class(self) -> None:
        self.parse_class()

    def parse_class(self) -> None:
        self.advance()  # class
        if self.is_name() and self.word() not in ("extends", "implements") and not self.is_punct("{"):
            self.advance()
        if self.is_punct("<"):
            self.parse_type_params(allow_variance=True)
        if self.eat_word("extends"):
            self.parse_heritage_expression()
        if self.eat_word("implements"):
            while True:
                self.parse_type()
                if not self.eat_punct(","):
                    break
        self.parse_class_body()

    def parse_heritage_expression(self) -> None:
        # `extends mixin(Base)<Args>` — a member/call chain whose trailing
        # type arguments are committed even before `{` or `implements`.
        self.parse_postfix(heritage=True)

    def parse_class_body(self) -> None:
        self.expect_punct("{")
        while not self.at_end() and not self.is_punct("}"):
            start = self.pos
            self.parse_class_member()
            if self.pos == start:
                self.fail("no progress in class body")
        self.expect_punct("}")

    def _can_follow_modifier(self, k: int) -> bool:
        t = self.tok(k)
        if t is None:
            return False
        if t.kind in (TokenKind.IDENT, TokenKind.KEYWORD, TokenKind.STRING, TokenKind.NUMBER):
            return True
        return t.kind is TokenKind.PUNCT and t.text in ("[", "*")

    def parse_class_member(self) -> None:
        if self.eat_punct(";"):
            return
        if self.is_punct("@"):
            self.parse_decorators()

        saw_accessor = False
        saw_override = False
        while True:
            w = self.word()
            if w == "static":
                if self.is_punct("{", 1):
                    # class static block; line breaks are irrelevant here
                    self.advance()
                    self.flag("f6")
                    self.parse_block()
                    return
                if self._can_follow_modifier(1):
                    self.advance()
                    continue
                break
            if w in _MEMBER_MODIFIERS:
                # the member name must start on the same line, else the
                # word is itself a member name (ASI)
                if not self.newline_before(1) and self._can_follow_modifier(1):
                    self.advance()
                    if w == "override":
                        saw_override = True
                    elif w == "accessor":
                        saw_accessor = True
                    continue
            break

        if self.is_word("get") or self.is_word("set"):
            if self._can_follow_modifier(1) and not self.is_punct("(", 1) and not self.is_punct("<", 1):
                self.advance()
                if saw_override:
                    self.flag("f7")
                self.parse_property_name()
                self.parse_function_rest()
                return

        self.eat_punct("*")
        if self.is_punct("(") or self.is_punct("<"):
            # rare: anonymous call shapes; treat as method without a name
            if saw_override:
                self.flag("f7")
            self.parse_function_rest()
            return
        if self.is_punct("["):
            # computed name or index signature
            if self.is_name(1) and self.is_punct(":", 2):
                self.advance()
                self.advance()
                self.advance()
                self.parse_type()
                self.expect_punct("]")
                if self.eat_punct(":"):
                    self.parse_type()
                self.eat_semi()
                return
            self.advance()
            self.parse_assignment()
            self.expect_punct("]")
        elif self.is_name() or self._is_string() or self._is_number():
            self.advance()
        else:
            self.fail("expected class member")

        if self.is_punct("(") or self.is_punct("<"):
            if saw_override:
                self.flag("f7")
            self.parse_function_rest()
            return
        # property declaration
        if saw_override:
            self.flag("f7")
        if saw_accessor:
            self.flag("f1")
        self.eat_punct("?") or self.eat_punct("!")
        if self.eat_punct(":"):
            self.parse_type()
        if self.eat_punct("="):
            self.parse_assignment()
        self.eat_semi()

    def parse_property_name(self) -> None:
        if self.is_punct("["):
            self.advance()
            self.parse_assignment()
            self.expect_punct("]")
        elif self.is_name() or self._is_string() or self._is_number():
            self.advance()
        else:
            self.fail("expected property name")

    def parse_decorators(self) -> None:
        while self.eat_punct("@"):
            self.parse_postfix()

    def _stmt_enum(self) -> None:
        self.advance()
        if self.is_name():
            self.advance()
        self.expect_punct("{")
        while not self.at_end() and not self.is_punct("}"):
            if self.eat_punct(","):
                continue
            if self.is_name() or self._is_string():
                self.advance()
            elif self.is_punct("["):
                self.advance()
                self.parse_assignment()
                self.expect_punct("]")
            else:
                self.fail("bad enum member")
            if self.eat_punct("="):
                self.parse_assignment()
        self.expect_punct("}")

    def parse_type_alias(self) -> None:
        self.advance()  # type
        self.advance()  # name
        if self.is_punct("<"):
            self.parse_type_params(allow_variance=True)
        self.expect_punct("=")
        self.parse_type()
        self.eat_semi()

    def parse_interface(self) -> None:
        self.advance()  # interface
        self.advance()  # name
        if self.is_punct("<"):
            self.parse_type_params(allow_variance=True)
        if self.eat_word("extends"):
            while True:
                self.parse_type()
                if not self.eat_punct(","):
                    break
        self.parse_object_type_body()

    def parse_namespace(self) -> None:
        self.advance()  # namespace / module
        if self._is_string():
            self.advance()
        else:
            self.advance()
            while self.eat_punct("."):
                if self.is_name():
                    self.advance()
        if self.is_punct("{"):
            self.parse_block()
        else:
            self.eat_semi()

    def _stmt_if(self) -> None:
        self.advance()
        self.expect_punct("(")
        self.parse_expression()
        self.expect_punct(")")
        self.parse_statement()
        if self.eat_word("else"):
            self.parse_statement()

    def _stmt_while(self) -> None:
        self.advance()
        self.expect_punct("(")
        self.parse_expression()
        self.expect_punct(")")
        self.parse_statement()

    def _stmt_do(self) -> None:
        self.advance()
        self.parse_statement()
        if self.eat_word("while"):
            self.expect_punct("(")
            self.parse_expression()
            self.expect_punct(")")
        self.eat_semi()

    def _stmt_for(self) -> None:
        self.advance()
        self.eat_word("await")
        self.expect_punct("(")
        if self.is_punct(";"):
            pass
        elif (
            self.is_word("const") or self.is_word("var")
            or (self.is_word("let") and (self.is_name(1) or self.is_punct("[", 1) or self.is_punct("{", 1)))
            or (self.is_word("using") and self.is_name(1))
        ):
            self.advance()
            self.parse_binding()
            if self.eat_punct(":"):
                self.parse_type()
            if self.eat_word("of"):
                self.parse_assignment()
            elif self.eat_word("in"):
                self.parse_expression()
            else:
                if self.eat_punct("="):
                    self.parse_assignment()
                while self.eat_punct(","):
                    self.parse_binding()
                    if self.eat_punct(":"):
                        self.parse_type()
                    if self.eat_punct("="):
                        self.parse_assignment()
        else:
            # `in` inside the head is consumed as a plain binary operator
            self.parse_expression()
            if self.eat_word("of"):
                self.parse_assignment()
        if self.is_punct(";"):
            self.advance()
            if not self.is_punct(";"):
                self.parse_expression()
            self.expect_punct(";")
            if not self.is_punct(")"):
                self.parse_expression()
        self.expect_punct(")")
        self.parse_statement()

    def _stmt_switch(self) -> None:
        self.advance()
        self.expect_punct("(")
        self.parse_expression()
        self.expect_punct(")")
        self.expect_punct("{")
        while not self.at_end() and not self.is_punct("}"):
            if self.eat_word("case"):
                self.parse_expression()
                self.expect_punct(":")
            elif self.eat_word("default"):
                self.expect_punct(":")
            else:
                start = self.pos
                self.parse_statement()
                if self.pos == start:
                    self.fail("no progress in switch")
        self.expect_punct("}")

    def _stmt_try(self) -> None:
        self.advance()
        self.parse_block()
        if self.eat_word("catch"):
            if self.eat_punct("("):
                self.parse_binding()
                if self.eat_punct(":"):
                    self.parse_type()
                self.expect_punct(")")
            self.parse_block()
        if self.eat_word("finally"):
            self.parse_block()

    def _stmt_return_throw(self) -> None:
        self.advance()
        if not self.newline_before() and not self.is_punct(";") and not self.is_punct("}") and not self.at_end():
            self.parse_expression()
        self.eat_semi()

    def _stmt_break_continue(self) -> None:
        self.advance()
        if self.is_name() and not self.newline_before():
            self.advance()
        self.eat_semi()

    def _stmt_debugger(self) -> None:
        self.advance()
        self.eat_semi()

    def _stmt_with(self) -> None:
        self.advance()
        self.expect_punct("(")
        self.parse_expression()
        self.expect_punct(")")
        self.parse_statement()

    # -- import / export -----------------------------------------------------

    def _stmt_import(self) -> None:
        if self.is_punct("(", 1) or self.is_punct(".", 1):
            self.parse_expression_statement()
            return
        self.advance()
        if self._is_string():
            self.advance()
            self.parse_assert_clause_opt()
            self.eat_semi()
            return

        if self.is_word("type") and self._import_clause_is_type_only():
            self.advance()

        if self.is_name():
            self.advance()
            if self.eat_punct("="):
                # import x = require("m") / import x = a.b.c
                if self.is_name():
                    self.advance()
                if self.eat_punct("("):
                    if self._is_string():
                        self.advance()
                    self.expect_punct(")")
                else:
                    while self.eat_punct("."):
                        if self.is_name():
                            self.advance()
                self.eat_semi()
                return
            self.eat_punct(",")
        if self.eat_punct("*"):
            self.eat_word("as")
            if self.is_name():
                self.advance()
        elif self.is_punct("{"):
            self.parse_named_specifiers()
        if self.eat_word("from") and self._is_string():
            self.advance()
        self.parse_assert_clause_opt()
        self.eat_semi()

    def _import_clause_is_type_only(self) -> bool:
        # After `import`, a leading `type` word marks a type-only clause
        # unless it is itself the default binding (`import type from "m"`).
        if self.is_punct("*", 1) or self.is_punct("{", 1):
            return True
        if self.is_name(1):
            if self.is_word("from", 1) and not (self.is_word("from", 2) or self.is_punct("=", 2)):
                return False
            return True
        return False

    def parse_named_specifiers(self) -> None:
        self.expect_punct("{")
        while not self.at_end() and not self.is_punct("}"):
            if self.eat_punct(","):
                continue
            self.parse_import_export_specifier()
        self.expect_punct("}")

    def parse_import_export_specifier(self) -> None:
        if self._is_string():
            # `export { "arbitrary name" as x }`
            self.advance()
            if self.eat_word("as") and (self.is_name() or self._is_string()):
                self.advance()
            return
        if not self.is_name():
            self.fail("expected specifier")
        first = self.advance().text
        if first == "type":
            if self.is_word("as"):
                self.advance()
                if self.is_word("as"):
                    self.advance()
                    if self.is_name():
                        # { type as as X } — type-only import of `as` renamed X
                        self.flag("f4")
                        self.advance()
                    # else: { type as as } — plain `type` renamed to `as`
                    return
                if self.is_name():
                    # { type as X } — plain `type` renamed to X
                    self.advance()
                    return
                # { type as } — type-only import named `as`
                self.flag("f4")
                return
            if self.is_name():
                # { type X } — type-only specifier
                self.flag("f4")
                self.advance()
                if self.eat_word("as") and (self.is_name() or self._is_string()):
                    self.advance()
                return
            return  # plain binding named `type`
        if self.eat_word("as") and (self.is_name() or self._is_string()):
            self.advance()

    def parse_assert_clause_opt(self) -> None:
        if self.is_word("assert") and not self.newline_before() and self.is_punct("{", 1):
            self.advance()
            self.flag("f5")
            self.advance()
            while not self.at_end() and not self.is_punct("}"):
                if self.eat_punct(","):
                    continue
                if self.is_name() or self._is_string():
                    self.advance()
                else:
                    self.fail("bad assert entry")
                if self.eat_punct(":"):
                    self.parse_assignment()
            self.expect_punct("}")

    def parse_export(self) -> None:
        self.advance()
        if self.eat_punct("="):
            self.parse_expression()
            self.eat_semi()
            return
        if self.eat_word("default"):
            if self.is_word("class"):
                self.parse_class()
            elif self.is_word("function") or (self.is_word("async") and self.is_word("function", 1)):
                self.eat_word("async")
                self._stmt_function()
            else:
                self.parse_assignment()
                self.eat_semi()
            return
        if self.is_word("type") and (self.is_punct("{", 1) or self.is_punct("*", 1)):
            self.advance()
        if self.eat_punct("*"):
            if self.eat_word("as") and self.is_name():
                self.advance()
            if self.eat_word("from") and self._is_string():
                self.advance()
            self.parse_assert_clause_opt()
            self.eat_semi()
            return
        if self.is_punct("{"):
            self.parse_named_specifiers()
            if self.eat_word("from") and self._is_string():
                self.advance()
            self.parse_assert_clause_opt()
            self.eat_semi()
            return
        # exported declaration
        self.parse_statement()

    # -- expressions -----------------------------------------------------------

    def parse_expression(self) -> None:
        self.parse_assignment()
        while self.eat_punct(","):
            self.parse_assignment()

    def parse_assignment(self) -> None:
        self.parse_binary()
        if self.is_punct("=>"):
            self.advance()
            self.parse_arrow_body()
            return
        if self.is_punct(":"):
            # possible arrow return annotation: `(a): T => ...`
            m = self.mark()
            self.advance()
            try:
                self.parse_return_type()
            except _ParseError:
                self.restore(m)
                return
            if self.is_punct("=>"):
                self.advance()
                self.parse_arrow_body()
            else:
                self.restore(m)

    def parse_arrow_body(self) -> None:
        if self.is_punct("{"):
            self.parse_block()
        else:
            self.parse_assignment()

    def parse_binary(self) -> None:
        self.parse_unary()
        while not self.at_end():
            t = self.tok()
            if t.kind is TokenKind.PUNCT:
                if t.text in ("<", ">"):
                    self.advance()
                    # glue adjacent <, >, = into shift/comparison operators
                    prev_end = t.end
                    while True:
                        nxt = self.tok()
                        if (nxt is not None and nxt.kind is TokenKind.PUNCT
                                and nxt.text in ("<", ">", "=") and nxt.start == prev_end):
                            prev_end = nxt.end
                            self.advance()
                        else:
                            break
                    self.parse_unary()
                    continue
                if t.text in _BINARY_PUNCT:
                    if t.text in _SHORT_CIRCUIT_ASSIGN:
                        self.flag("f12")
                    self.advance()
                    self.parse_unary()
                    continue
                if t.text == "?":
                    nxt = self.tok(1)
                    if nxt is not None and nxt.kind is TokenKind.PUNCT and nxt.text in (":", ",", ")"):
                        break  # optional-parameter marker, not a conditional
                    self.advance()
                    self.parse_assignment()
                    self.expect_punct(":")
                    self.parse_assignment()
                    continue
                break
            if t.kind is TokenKind.KEYWORD and t.text in ("in", "instanceof"):
                self.advance()
                self.parse_unary()
                continue
            if t.kind is TokenKind.IDENT and t.text in ("as", "satisfies") and not t.newline_before:
                self.advance()
                if t.text == "satisfies":
                    self.flag("f0")
                self.parse_type()
                continue
            break

    def parse_unary(self) -> None:
        t = self.tok()
        if t is None:
            self.fail("eof in expression")
        if t.kind is TokenKind.PUNCT:
            if t.text in ("!", "~", "+", "-", "++", "--", "..."):
                self.advance()
                self.parse_unary()
                return
            if t.text == "<":
                # old-style type assertion `<T>expr` (.ts files have no JSX)
                self.advance()
                self.parse_type()
                self.expect_punct(">")
                self.parse_unary()
                return
        elif t.kind is TokenKind.KEYWORD and t.text in ("typeof", "void", "delete"):
            self.advance()
            self.parse_unary()
            return
        elif t.kind is TokenKind.IDENT and t.text == "await" and not self._await_is_identifier():
            self.advance()
            self.parse_unary()
            return
        elif t.kind is TokenKind.IDENT and t.text == "yield":
            self.advance()
            self.eat_punct("*")
            nxt = self.tok()
            if nxt is not None and not nxt.newline_before and _is_expr_start(nxt):
                self.parse_assignment()
            return
        self.parse_postfix()

    def _await_is_identifier(self) -> bool:
        nxt = self.tok(1)
        return nxt is None or not _is_expr_start(nxt) or nxt.newline_before

    def parse_postfix(self, heritage: bool = False) -> None:
        self.parse_primary()
        while not self.at_end():
            t = self.tok()
            if t.kind is TokenKind.PUNCT:
                if t.text == ".":
                    self.advance()
                    if self.is_name():
                        self.advance()
                    else:
                        self.fail("expected member name")
                    continue
                if t.text == "?.":
                    self.advance()
                    if self.is_punct("("):
                        self.parse_paren_unit()
                    elif self.is_punct("["):
                        self.advance()
                        self.parse_expression()
                        self.expect_punct("]")
                    elif self.is_name():
                        self.advance()
                    continue
                if t.text == "[":
                    if t.newline_before and heritage:
                        break
                    self.advance()
                    self.parse_expression()
                    self.expect_punct("]")
                    continue
                if t.text == "(":
                    self.parse_paren_unit()
                    continue
                if t.text == "!" and not t.newline_before:
                    self.advance()
                    continue
                if t.text in ("++", "--") and not t.newline_before:
                    self.advance()
                    continue
                if t.text == "<":
                    if self._try_type_arguments_in_expression(heritage):
                        continue
                    break
                break
            if t.kind in _TEMPLATE_STARTS:
                self.parse_template_expression()
                continue
            break

    def _try_type_arguments_in_expression(self, heritage: bool) -> bool:
        """Speculatively parse `<TypeArgs>` after an expression.

        Commits when followed by `(` or a template (a call / tagged
        template), or — for instantiation expressions — by any token that
        cannot start an expression. Otherwise rewinds and lets `<` bind as
        a comparison operator.
        """
        m = self.mark()
        self.advance()  # <
        try:
            if not self.is_punct(">"):
                while True:
                    self.parse_type()
                    if not self.eat_punct(","):
                        break
            self.expect_punct(">")
        except _ParseError:
            self.restore(m)
            return False
        nxt = self.tok()
        if nxt is not None and (nxt.kind in _TEMPLATE_STARTS or (nxt.kind is TokenKind.PUNCT and nxt.text == "(")):
            return True
        if heritage:
            return True
        if nxt is not None and nxt.kind is TokenKind.PUNCT and nxt.text == "{":
            return True
        if _is_expr_start(nxt):
            self.restore(m)
            return False
        return True

    def parse_template_expression(self) -> None:
        t = self.advance()
        if t.kind is TokenKind.TEMPLATE_FULL:
            return
        while True:
            self.parse_expression()
            nxt = self.tok()
            if nxt is None:
                self.fail("unterminated template")
            if nxt.kind is TokenKind.TEMPLATE_MIDDLE:
                self.advance()
                continue
            if nxt.kind is TokenKind.TEMPLATE_TAIL:
                self.advance()
                return
            self.fail("expected template continuation")

    def parse_primary(self) -> None:
        t = self.tok()
        if t is None:
            self.fail("eof in expression")
        if t.kind in (TokenKind.NUMBER, TokenKind.STRING, TokenKind.REGEX):
            self.advance()
            return
        if t.kind in _TEMPLATE_STARTS:
            self.parse_template_expression()
            return
        if t.kind is TokenKind.PUNCT:
            if t.text == "(":
                self.parse_paren_unit()
                return
            if t.text == "[":
                self.advance()
                while not self.at_end() and not self.is_punct("]"):
                    if self.eat_punct(","):
                        continue
                    self.eat_punct("...")
                    self.parse_assignment()
                self.expect_punct("]")
                return
            if t.text == "{":
                self.parse_object_literal()
                return
            if t.text == "@":
                self.parse_decorators()
                self.parse_primary()
                return
            self.fail(f"unexpected {t.text!r}")
        w = t.text
        if t.kind is TokenKind.KEYWORD:
            if w == "function":
                self.advance()
                self.eat_punct("*")
                if self.is_name():
                    self.advance()
                self.parse_function_rest()
                return
            if w == "class":
                self.parse_class()
                return
            if w == "new":
                self.advance()
                if self.eat_punct("."):
                    if self.is_name():
                        self.advance()
                    return
                self.parse_postfix()
                return
            if w in _PRIMARY_KEYWORDS:
                self.advance()
                return
            self.fail(f"unexpected keyword {w!r}")
        # identifiers, including all contextual keywords
        if w == "async" and not self.newline_before(1) and self.is_word("function", 1):
            self.advance()
            self.advance()
            self.eat_punct("*")
            if self.is_name():
                self.advance()
            self.parse_function_rest()
            return
        self.advance()

    def parse_object_literal(self) -> None:
        self.expect_punct("{")
        while not self.at_end() and not self.is_punct("}"):
            if self.eat_punct(","):
                continue
            if self.eat_punct("..."):
                self.parse_assignment()
                continue
            if (self.is_word("get") or self.is_word("set")) and (
                self._can_follow_modifier(1) and not self.is_punct(":", 1)
                and not self.is_punct("(", 1) and not self.is_punct(",", 1)
                and not self.is_punct("}", 1)
            ):
                self.advance()
                self.parse_property_name()
                self.parse_function_rest()
                continue
            if self.is_word("async") and not self.newline_before(1) and (
                self._can_follow_modifier(1) and not self.is_punct(":", 1)
                and not self.is_punct("(", 1)
            ):
                self.advance()
            self.eat_punct("*")
            self.parse_property_name()
            if self.is_punct("(") or self.is_punct("<"):
                self.parse_function_rest()
                continue
            if self.eat_punct(":"):
                self.parse_assignment()
            elif self.eat_punct("="):
                # destructuring cover grammar `({a = 1} = ...)`
                self.parse_assignment()
        self.expect_punct("}")

    def parse_paren_unit(self) -> None:
        """Parenthesized expression, call arguments, or arrow parameters.

        One grammar covers all three: items may carry `?`, `: Type`, and
        `= default` suffixes, so annotated parameter lists parse without
        lookahead and annotation types still surface their flags.
        """
        self.expect_punct("(")
        while not self.at_end() and not self.is_punct(")"):
            if self.eat_punct(","):
                continue
            self.eat_punct("...")
            self.parse_assignment()
            if self.is_punct("?") and (
                self.is_punct(":", 1) or self.is_punct(",", 1) or self.is_punct(")", 1)
            ):
                self.advance()
            if self.eat_punct(":"):
                self.parse_type()
            if self.eat_punct("="):
                self.parse_assignment()
        self.expect_punct(")")

    # -- types -------------------------------------------------------------

    def parse_type(self, allow_conditional: bool = True) -> None:
        if self.is_word("new"):
            self._parse_constructor_type(abstract=False)
            return
        if self.is_word("abstract") and self.is_word("new", 1):
            self.advance()
            self._parse_constructor_type(abstract=True)
            return
        if self.is_punct("<"):
            self.parse_type_params(allow_variance=False)
            self.parse_params()
            self.expect_punct("=>")
            self.parse_type(allow_conditional)
            return
        if self.is_punct("("):
            m = self.mark()
            try:
                self.parse_params()
                self.expect_punct("=>")
            except _ParseError:
                self.restore(m)
            else:
                self.parse_return_type(allow_conditional)
                return
        self.parse_union_type(allow_conditional)
        if (
            allow_conditional
            and self.is_word("extends")
            and not self.newline_before()
        ):
            self.advance()
            self.parse_type(allow_conditional=False)
            self.expect_punct("?")
            self.parse_type()
            self.expect_punct(":")
            self.parse_type()

    def _parse_constructor_type(self, abstract: bool) -> None:
        if abstract:
            self.flag("f8")
        self.advance()  # new
        if self.is_punct("<"):
            self.parse_type_params(allow_variance=False)
        self.parse_params()
        self.expect_punct("=>")
        self.parse_type()

    def parse_return_type(self, allow_conditional: bool = True) -> None:
        # type predicates: `x is T`, `this is T`, `asserts x`, `asserts x is T`
        if self.is_word("asserts") and not self.newline_before(1) and self.is_name(1):
            self.advance()
            self.advance()
            if self.eat_word("is"):
                self.parse_type(allow_conditional)
            return
        if self.is_name() and self.is_word("is", 1) and not self.newline_before(1):
            self.advance()
            self.advance()
            self.parse_type(allow_conditional)
            return
        self.parse_type(allow_conditional)

    def parse_union_type(self, allow_conditional: bool) -> None:
        self.eat_punct("|")
        self.parse_intersection_type(allow_conditional)
        while self.eat_punct("|"):
            self.parse_intersection_type(allow_conditional)

    def parse_intersection_type(self, allow_conditional: bool) -> None:
        self.eat_punct("&")
        self.parse_type_operator(allow_conditional)
        while self.eat_punct("&"):
            self.parse_type_operator(allow_conditional)

    def parse_type_operator(self, allow_conditional: bool) -> None:
        if self.is_word("keyof") or self.is_word("unique") or self.is_word("readonly"):
            self.advance()
            self.parse_type_operator(allow_conditional)
            return
        if self.is_word("infer") and self.is_name(1):
            self.advance()
            self.advance()
            if self.is_word("extends") and not self.newline_before():
                # keep the constraint unless it would steal the `?` of an
                # enclosing conditional type
                m = self.mark()
                self.advance()
                try:
                    self.parse_type(allow_conditional=False)
                except _ParseError:
                    self.restore(m)
                    return
                if allow_conditional and self.is_punct("?"):
                    self.restore(m)
                else:
                    self.flag("f2")
            return
        self.parse_postfix_type()

    def parse_postfix_type(self) -> None:
        self.parse_primary_type()
        while self.is_punct("[") and not self.newline_before():
            self.advance()
            if self.is_punct("]"):
                self.advance()
            else:
                self.parse_type()
                self.expect_punct("]")

    def parse_primary_type(self) -> None:
        t = self.tok()
        if t is None:
            self.fail("eof in type")
        if t.kind is TokenKind.TEMPLATE_FULL:
            self.advance()
            return
        if t.kind is TokenKind.TEMPLATE_HEAD:
            self.parse_template_type()
            return
        if t.kind in (TokenKind.STRING, TokenKind.NUMBER):
            self.advance()
            return
        if t.kind is TokenKind.PUNCT:
            if t.text == "-" and self._is_number(1):
                self.advance()
                self.advance()
                return
            if t.text == "{":
                self.parse_object_type_body()
                return
            if t.text == "[":
                self.parse_tuple_type()
                return
            if t.text == "(":
                self.advance()
                self.parse_type()
                self.expect_punct(")")
                return
            self.fail(f"unexpected {t.text!r} in type")
        w = t.text
        if w == "typeof" and self.is_name(1):
            self.advance()
            self._parse_type_query_entity()
            return
        if w == "import" and self.is_punct("(", 1):
            self.advance()
            self.advance()
            if self._is_string():
                self.advance()
            self.expect_punct(")")
            while self.eat_punct("."):
                if self.is_name():
                    self.advance()
            if self.is_punct("<"):
                self.parse_type_argument_list()
            return
        if t.kind is TokenKind.KEYWORD and w not in _SIMPLE_TYPE_KEYWORDS and w != "typeof":
            self.fail(f"keyword {w!r} cannot start a type")
        # type reference: qualified name plus optional type arguments
        self.advance()
        while self.eat_punct("."):
            if self.is_name():
                self.advance()
            else:
                self.fail("expected qualified type name")
        if self.is_punct("<"):
            self.parse_type_argument_list()

    def _parse_type_query_entity(self) -> None:
        if self.is_word("import") and self.is_punct("(", 1):
            self.advance()
            self.advance()
            if self._is_string():
                self.advance()
            self.expect_punct(")")
        else:
            self.advance()
        while self.eat_punct("."):
            if self.is_name():
                self.advance()
        if self.is_punct("<"):
            self.parse_type_argument_list()

    def parse_type_argument_list(self) -> None:
        self.expect_punct("<")
        if not self.is_punct(">"):
            while True:
                self.parse_type()
                if not self.eat_punct(","):
                    break
        self.expect_punct(">")

    def parse_template_type(self) -> None:
        self.flag("f9")
        self.advance()  # head
        while True:
            self.parse_type()
            nxt = self.tok()
            if nxt is None:
                self.fail("unterminated template type")
            if nxt.kind is TokenKind.TEMPLATE_MIDDLE:
                self.advance()
                continue
            if nxt.kind is TokenKind.TEMPLATE_TAIL:
                self.advance()
                return
            self.fail("expected template type continuation")

    def parse_tuple_type(self) -> None:
        self.expect_punct("[")
        while not self.at_end() and not self.is_punct("]"):
            if self.eat_punct(","):
                continue
            self.eat_punct("...")
            if self.is_name() and (
                self.is_punct(":", 1)
                or (self.is_punct("?", 1) and self.is_punct(":", 2))
            ):
                self.flag("f11")
                self.advance()
                self.eat_punct("?")
                self.advance()  # :
                self.parse_type()
            else:
                self.parse_type()
                self.eat_punct("?")
        self.expect_punct("]")

    def parse_object_type_body(self) -> None:
        self.expect_punct("{")
        while not self.at_end() and not self.is_punct("}"):
            start = self.pos
            if self.eat_punct(";") or self.eat_punct(","):
                continue
            self._parse_type_member()
            if self.pos == start:
                self.fail("no progress in type body")
        self.expect_punct("}")

    def _is_mapped_type_start(self) -> bool:
        k = 0
        if self.is_punct("+", k) or self.is_punct("-", k):
            k += 1
        if self.is_word("readonly", k):
            k += 1
        return self.is_punct("[", k) and self.is_name(k + 1) and self.is_word("in", k + 2)

    def _parse_type_member(self) -> None:
        if self._is_mapped_type_start():
            self._parse_mapped_member()
            return
        if (self.is_punct("+") or self.is_punct("-")) and self.is_punct("?", 1):
            # stray mapped-optionality; tolerate
            self.advance()
            self.advance()
            return
        if self.is_word("readonly") and (
            self.is_punct("[", 1) or self.is_name(1) or self._is_string(1) or self._is_number(1)
        ):
            self.advance()
        if self.is_punct("["):
            if self.is_name(1) and self.is_punct(":", 2):
                # index signature
                self.advance()
                self.advance()
                self.advance()
                self.parse_type()
                self.expect_punct("]")
                if self.eat_punct(":"):
                    self.parse_type()
                return
            self.advance()
            self.parse_assignment()
            self.expect_punct("]")
            self._parse_member_tail()
            return
        if (self.is_word("get") or self.is_word("set")) and (
            self.is_name(1) or self._is_string(1) or self._is_number(1) or self.is_punct("[", 1)
        ):
            self.advance()
            self.parse_property_name()
            self.parse_params()
            if self.eat_punct(":"):
                self.parse_return_type()
            return
        if self.is_word("new") and (self.is_punct("(", 1) or self.is_punct("<", 1)):
            self.advance()
            self._parse_signature_tail()
            return
        if self.is_punct("(") or self.is_punct("<"):
            self._parse_signature_tail()
            return
        if self.is_name() or self._is_string() or self._is_number():
            self.advance()
            self._parse_member_tail()
            return
        self.fail("expected type member")

    def _parse_member_tail(self) -> None:
        self.eat_punct("?")
        if self.is_punct("(") or self.is_punct("<"):
            self._parse_signature_tail()
            return
        if self.eat_punct(":"):
            self.parse_type()

    def _parse_signature_tail(self) -> None:
        if self.is_punct("<"):
            self.parse_type_params(allow_variance=False)
        self.parse_params()
        if self.eat_punct(":"):
            self.parse_return_type()

    def _parse_mapped_member(self) -> None:
        if self.is_punct("+") or self.is_punct("-"):
            self.advance()
        self.eat_word("readonly")
        self.expect_punct("[")
        self.advance()  # binder name
        self.advance()  # in
        self.parse_type()
        if self.eat_word("as"):
            self.flag("f10")
            self.parse_type()
        self.expect_punct("]")
        if self.is_punct("+") or self.is_punct("-"):
            self.advance()
        self.eat_punct("?")
        if self.eat_punct(":"):
            self.parse_type()

    # -- signatures ----------------------------------------------------------

    def parse_type_params(self, allow_variance: bool) -> None:
        self.expect_punct("<")
        while not self.at_end() and not self.is_punct(">"):
            if self.eat_punct(","):
                continue
            while self.word() in ("in", "out", "const") and self.is_name(1):
                if self.word() in ("in", "out") and allow_variance:
                    self.flag("f3")
                self.advance()
            if self.is_name():
                self.advance()
            else:
                self.fail("expected type parameter")
            if self.eat_word("extends"):
                self.parse_type()
            if self.eat_punct("="):
                self.parse_type()
        self.expect_punct(">")

    def parse_params(self) -> None:
        self.expect_punct("(")
        while not self.at_end() and not self.is_punct(")"):
            if self.eat_punct(","):
                continue
            if self.is_punct("@"):
                self.parse_decorators()
            while self.word() in _PARAM_MODIFIERS and (
                self.is_name(1) or self.is_punct("[", 1) or self.is_punct("{", 1) or self.is_punct("...", 1)
            ):
                if self.word() == "override":
                    self.flag("f7")
                self.advance()
            self.eat_punct("...")
            self.parse_binding()
            self.eat_punct("?")
            if self.eat_punct(":"):
                self.parse_type()
            if self.eat_punct("="):
                self.parse_assignment()
        self.expect_punct(")")


def parse_flags(tokens: list[Token]) -> tuple[frozenset[str], bool]:
    """Run the tolerant parser; returns (feature flags, parsed_ok)."""
    p = _Parser(tokens)
    ok = p.parse_module()
    if not ok:
        return frozenset(), False
    return frozenset(p.flags), True
