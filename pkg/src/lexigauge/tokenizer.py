"""Symbol-stream tokenization.

A text is read as a stream of symbols: lower-cased words and individual
punctuation marks. Whitespace separates words and is discarded; characters
outside the word and punctuation alphabets act as separators too. The counts
collected here (symbols, words, phrase terminators, word characters) feed the
diversity, entropy, and readability computations downstream.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

# Marks counted as symbols in their own right. Everything else that is not a
# word character simply separates words.
PUNCTUATION = frozenset({".", ",", ";", ":", "?", "!", "…", "(", ")",
                         '"', "'", "—", "-"})

# Marks that end a phrase: period, colon, semicolon, question and exclamation
# marks, ellipsis.
PHRASE_TERMINATORS = frozenset({".", ":", ";", "?", "!", "…"})

# Typographic variants folded to the marks above before tokenizing.
_NORMALIZE = {
    "‘": "'", "’": "'",
    "“": '"', "”": '"',
}


class TokenKind(Enum):
    WORD = "word"
    PUNCTUATION = "punctuation"


@dataclass(frozen=True)
class SymbolToken:
    text: str
    kind: TokenKind


@dataclass(frozen=True)
class TokenizedText:
    """Symbol sequence plus the counts derived from it.

    L is the total symbol count, L_w the word count, L_ph the raw count of
    phrase-terminator tokens (no floor applied; see count_phrases), and L_CH
    the number of characters inside word tokens.
    """
    symbols: tuple[SymbolToken, ...]
    L: int
    L_w: int
    L_ph: int
    L_CH: int


def _is_word_char(ch: str) -> bool:
    return ch.isalnum()


def tokenize(raw: str, language=None) -> TokenizedText:
    """Convert raw text to the symbol stream.

    Words are case-folded to lower case. Apostrophes between two word
    characters stay inside the word ("don't"); any other apostrophe is a
    punctuation symbol. Hyphens always split words and are kept as symbols.
    A three-dot run collapses to one ellipsis symbol. The rules are language
    independent; the parameter is accepted so call sites can stay explicit
    about which text they are processing.
    """
    text = raw
    for src, dst in _NORMALIZE.items():
        text = text.replace(src, dst)
    text = text.replace("...", "…")

    symbols: list[SymbolToken] = []
    word: list[str] = []

    def flush() -> None:
        if word:
            symbols.append(SymbolToken("".join(word).lower(), TokenKind.WORD))
            word.clear()

    n = len(text)
    for i, ch in enumerate(text):
        if _is_word_char(ch):
            word.append(ch)
        elif ch == "'" and word and i + 1 < n and _is_word_char(text[i + 1]):
            # internal apostrophe: preceded and followed by word characters
            word.append(ch)
        elif ch in PUNCTUATION:
            flush()
            symbols.append(SymbolToken(ch, TokenKind.PUNCTUATION))
        else:
            flush()

    flush()

    L_w = sum(1 for s in symbols if s.kind is TokenKind.WORD)
    L_ph = sum(1 for s in symbols
               if s.kind is TokenKind.PUNCTUATION and s.text in PHRASE_TERMINATORS)
    L_CH = sum(len(s.text) for s in symbols if s.kind is TokenKind.WORD)
    return TokenizedText(symbols=tuple(symbols), L=len(symbols),
                         L_w=L_w, L_ph=L_ph, L_CH=L_CH)


def count_phrases(t: TokenizedText) -> int:
    """Phrase count used for words-per-phrase: floored at 1 for non-empty text
    so the ratio S = L_w / L_ph stays defined for terminator-free fragments."""
    if t.L_w == 0:
        return t.L_ph
    return max(t.L_ph, 1)


def estimate_syllables(t: TokenizedText, c_sy: float) -> float:
    """Estimated syllable count: word characters divided by the per-language
    average characters-per-syllable constant."""
    if c_sy <= 0:
        raise ValueError(f"c_sy must be positive, got {c_sy}")
    return t.L_CH / c_sy
