"""Reading-ease scores from tokenizer counts.

English texts score with the Flesch formula (res), Spanish with the
Szigriszt perspicuity formula (ipsz). Both are affine in the syllables-per-
word rate W and the words-per-phrase rate S and differ only in the phrase
coefficient, so ipsz - res = 0.015 * S identically. Scores are reported raw,
without clamping to [0, 100].

Syllables are estimated from character counts, L_SY = L_CH / C_SY, with a
per-language characters-per-syllable constant. C_SY_ALTERNATES carries other
published constants for sensitivity checks; the shipped presets use the
gualda values.
"""
from __future__ import annotations

from dataclasses import dataclass

from .models import LanguageParams
from .tokenizer import TokenizedText, count_phrases, estimate_syllables


@dataclass(frozen=True)
class ReadabilityInputs:
    W: float
    S: float


C_SY_ALTERNATES = {
    "gualda": {"English": 3.57, "Spanish": 2.94},
    "eaton": {"English": 1.69, "Spanish": 2.67},
    "irest": {"English": 3.15, "Spanish": 1.9},
}


def readability_inputs(t: TokenizedText, params: LanguageParams) -> ReadabilityInputs:
    """W = (L_CH / c_sy) / L_w and S = L_w / phrases, with the phrase count
    floored at 1 so unterminated text still scores."""
    if t.L_w == 0:
        raise ValueError("readability undefined for a text with no words")
    syllables = estimate_syllables(t, params.c_sy)
    return ReadabilityInputs(W=syllables / t.L_w, S=t.L_w / count_phrases(t))


def res(inputs: ReadabilityInputs) -> float:
    """Flesch reading ease: 206.835 - 84.6 W - 1.015 S."""
    return 206.835 - 84.6 * inputs.W - 1.015 * inputs.S


def ipsz(inputs: ReadabilityInputs) -> float:
    """Szigriszt perspicuity: 206.835 - 84.6 W - S."""
    return 206.835 - 84.6 * inputs.W - inputs.S


def score(inputs: ReadabilityInputs, params: LanguageParams, formula: str | None = None) -> float:
    """Language-dispatched score: res for English, ipsz for Spanish. Pass
    formula="res" or "ipsz" to cross-apply deliberately."""
    if formula is None:
        formula = "res" if params.language.code == "EN" else "ipsz"
    if formula == "res":
        return res(inputs)
    if formula == "ipsz":
        return ipsz(inputs)
    raise ValueError(f"unknown readability formula {formula!r}")
