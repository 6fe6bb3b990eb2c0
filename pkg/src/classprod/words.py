"""Parser for generator words like ``g0*g1^-2*g0``.

Elements on the command line are addressed by words over the group's
generator list (``g0``, ``g1``, ... in listed order, ``e`` for the
identity) rather than by enumeration indices, so the same word means the
same element on every run and in every backend.

Grammar::

    word  = term ("*" term)*
    term  = name ("^" signed-int)?
    name  = "e" | "g" digits
"""

from __future__ import annotations

import re

from .errors import UnknownGeneratorError, WordParseError
from .groups import Element, GroupHandle

_TOKEN = re.compile(r"(?P<name>e|g[0-9]+)|(?P<op>[*^])|(?P<int>-?[0-9]+)")


def _tokenize(word: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(word):
        if word[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(word, pos)
        if m is None:
            raise WordParseError(
                f"unexpected character {word[pos]!r}", position=pos)
        for kind in ("name", "op", "int"):
            text = m.group(kind)
            if text is not None:
                tokens.append((kind, text, m.start(kind)))
                break
        pos = m.end()
    return tokens


def parse_element_word(g: GroupHandle, word: str) -> Element:
    """Evaluate a generator word left-to-right under the group product."""
    if not word or not word.strip():
        raise WordParseError("empty element word", position=0)
    tokens = _tokenize(word)
    gens = g.generators
    acc = g._identity_raw

    def base_of(text: str, at: int) -> bytes:
        if text == "e":
            return g._identity_raw
        idx = int(text[1:])
        if idx >= len(gens):
            raise UnknownGeneratorError(
                f"generator {text!r} does not exist; this group has "
                f"{len(gens)} generator(s) g0..g{len(gens) - 1}", position=at)
        return gens[idx].encoding

    i = 0
    expect_term = True
    while i < len(tokens):
        kind, text, at = tokens[i]
        if expect_term:
            if kind != "name":
                raise WordParseError(
                    f"expected a generator name, found {text!r}", position=at)
            base = base_of(text, at)
            exponent = 1
            if i + 1 < len(tokens) and tokens[i + 1][0] == "op" \
                    and tokens[i + 1][1] == "^":
                if i + 2 >= len(tokens) or tokens[i + 2][0] != "int":
                    bad_at = (tokens[i + 2][2] if i + 2 < len(tokens)
                              else tokens[i + 1][2] + 1)
                    raise WordParseError(
                        "expected an integer exponent after '^'",
                        position=bad_at)
                exponent = int(tokens[i + 2][1])
                i += 2
            acc = g._mul(acc, g.power(Element(base), exponent).encoding)
            expect_term = False
        else:
            if kind != "op" or text != "*":
                raise WordParseError(
                    f"expected '*' between terms, found {text!r}", position=at)
            expect_term = True
        i += 1
    if expect_term:
        raise WordParseError("word ends with a dangling '*'",
                             position=len(word))
    return Element(acc)
