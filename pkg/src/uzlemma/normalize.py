"""Text normalization and tokenization.

Real-world Uzbek Latin text uses half a dozen code points for the two
apostrophe-like marks of the orthography.  ``normalize_text`` maps them to the
two official ones (U+02BB for the o‘/g‘ letter modifier, U+02BC for the
word-internal tutuq belgisi) and folds case, so that every later lookup sees
one spelling per word.  ``tokenize`` then splits the normalized text into
word, number, and punctuation tokens, and ``filter_tokens`` keeps only the
word tokens the lemmatizer cares about.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

TURNED_COMMA = "ʻ"  # letter modifier in o‘ / g‘
TUTUQ = "ʼ"  # word-internal apostrophe (tutuq belgisi)

# Code points accepted as apostrophe-like on input: right/left single
# quotation marks, the ASCII apostrophe, the grave accent, and the two
# canonical marks themselves.
_APOSTROPHE_LIKE = frozenset("’‘'`ʻʼ")
# The subset rewritten to TURNED_COMMA when it follows o or g.
_TURNED_AFTER_OG = frozenset("’‘'`ʻ")


class TokenKind(Enum):
    WORD = "word"
    NUMBER = "number"
    PUNCTUATION = "punctuation"


@dataclass(frozen=True, slots=True)
class Token:
    """One text unit: the exact input slice plus its normalized form.

    ``span`` holds (start, end) character offsets into the tokenized text, so
    ``text[span[0]:span[1]] == surface`` always holds.
    """

    surface: str
    normalized: str
    span: tuple[int, int]
    kind: TokenKind


def _is_letter(ch: str) -> bool:
    # The canonical apostrophes are Unicode letter modifiers (category Lm),
    # so ``isalpha`` alone would swallow them; they need positional rules.
    return ch.isalpha() and ch not in (TURNED_COMMA, TUTUQ)


def _is_digit(ch: str) -> bool:
    return "0" <= ch <= "9"


def normalize_text(raw: str) -> str:
    """Lowercase ``raw`` and canonicalize apostrophe-like code points.

    An apostrophe-like character directly after ``o`` or ``g`` becomes the
    turned-comma modifier; anywhere else it becomes the tutuq belgisi.  All
    substitutions are one code point for one code point; only case folding
    may change the length.  Idempotent.
    """
    out: list[str] = []
    for ch in raw:
        if ch in _APOSTROPHE_LIKE:
            prev = out[-1] if out else ""
            if prev in ("o", "g") and ch in _TURNED_AFTER_OG:
                out.append(TURNED_COMMA)
            else:
                out.append(TUTUQ)
        else:
            out.append(ch.lower())
    return "".join(out)


def tokenize(text: str) -> list[Token]:
    """Split normalized text into word / number / punctuation tokens.

    Tokens cover every non-whitespace character, in order.  A word run is
    letters plus canonical apostrophes in their legal positions (turned comma
    after o/g, tutuq between letters); a number run matches
    ``[0-9]+([.,][0-9]+)*``; anything else groups into punctuation runs.
    Adjacent runs of different kinds are separate tokens, so hyphenated pairs
    split at the hyphen and "16-bob" yields a number, a hyphen, and a word.
    """
    tokens: list[Token] = []
    n = len(text)
    i = 0
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if _is_digit(ch):
            j = i + 1
            while j < n and _is_digit(text[j]):
                j += 1
            while j + 1 < n and text[j] in ".," and _is_digit(text[j + 1]):
                j += 1
                while j < n and _is_digit(text[j]):
                    j += 1
            kind = TokenKind.NUMBER
        elif _is_letter(ch):
            j = i + 1
            while j < n:
                c = text[j]
                if _is_letter(c):
                    j += 1
                elif c == TURNED_COMMA and text[j - 1] in ("o", "g"):
                    j += 1
                elif c == TUTUQ and _is_letter(text[j - 1]) and j + 1 < n and _is_letter(text[j + 1]):
                    j += 1
                else:
                    break
            kind = TokenKind.WORD
        else:
            j = i + 1
            while j < n and not text[j].isspace() and not _is_letter(text[j]) and not _is_digit(text[j]):
                # A turned comma or tutuq glued to a following word still
                # belongs to the punctuation run: word runs never start with
                # an apostrophe.
                j += 1
            kind = TokenKind.PUNCTUATION
        surface = text[i:j]
        tokens.append(Token(surface=surface, normalized=surface, span=(i, j), kind=kind))
        i = j
    return tokens


def filter_tokens(tokens: list[Token]) -> list[Token]:
    """Keep only word tokens, preserving order."""
    return [t for t in tokens if t.kind is TokenKind.WORD]


def is_normalized_word_form(form: str) -> bool:
    """True when ``form`` is exactly one already-normalized word token."""
    if not form or normalize_text(form) != form:
        return False
    toks = tokenize(form)
    return len(toks) == 1 and toks[0].kind is TokenKind.WORD and toks[0].span == (0, len(form))
