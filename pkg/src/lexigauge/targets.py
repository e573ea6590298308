"""Verification targets recorded alongside the bundled reference tables.

The bundled metric tables ship with the summary statistics their original
analysis reported: per-group means and standard deviations, t-test p-values,
and correlation coefficients. The verify command recomputes every one of
these from the raw table rows and prints the deltas.

A minority of the recorded cells cannot be reproduced from the bundled rows
themselves; the recorded analysis evidently summarized a slightly different
snapshot of the underlying corpus than the rows that were published with it.
Those cells are enumerated in DOCUMENTED_DIVERGENCES / DIVERGENT_PVALUES and
are reported informationally instead of as failures. Everything else is
checked hard.

Group labels: en/es prefix for language; nobel/non for the laureate split;
all for the union of both splits.
"""
from __future__ import annotations

# (n, mean, std) per group for the three style coordinates.
RECORDED_GROUP_STATS = {
    "d_rel": {
        "en-nobel": (37, 0.02690, 0.152),
        "en-non": (101, -0.05741, 0.133),
        "es-nobel": (19, 0.07296, 0.097),
        "es-non": (117, -0.02339, 0.085),
    },
    "h_rel": {
        "en-nobel": (37, -0.00567, 0.0192),
        "en-non": (101, 0.00318, 0.0184),
        "es-nobel": (19, -0.01168, 0.0192),
        "es-non": (117, 0.00579, 0.0183),
    },
    "j": {
        "en-nobel": (37, -0.05779, 0.0994),
        "en-non": (101, 0.03232, 0.1768),
        "es-nobel": (19, -0.19167, 0.0561),
        "es-non": (117, -0.10382, 0.0856),
    },
}

# Recorded two-tailed p-values per coordinate. ("eq", v) compares against v;
# ("lt", bound) only asserts the recomputed value stays below bound.
RECORDED_PVALUES = {
    "d_rel": {
        "en nobel vs non": ("eq", 0.00186),
        "es nobel vs non": ("eq", 0.00001),
        "nobel en vs es": ("eq", 0.23604),
        "non en vs es": ("eq", 0.02340),
    },
    "h_rel": {
        "en nobel vs non": ("eq", 0.00659),
        "es nobel vs non": ("eq", 0.00005),
        "nobel en vs es": ("eq", 0.2067),
        "non en vs es": ("eq", 0.2852),
    },
    "j": {
        "en nobel vs non": ("eq", 0.00396),
        "es nobel vs non": ("eq", 0.00003),
        "nobel en vs es": ("lt", 0.00001),
        "non en vs es": ("lt", 0.00001),
    },
}

# (n, wqs_mean, wqs_std, readability_mean, readability_std, correlation).
RECORDED_SCALE_STATS = {
    "en-all": (138, 0.43, 1.09, 59.90, 10.52, -0.34),
    "en-nobel": (37, 0.90, 0.68, 56.91, 10.21, -0.38),
    "en-non": (101, 0.25, 1.16, 61.00, 10.47, -0.31),
    "es-all": (136, 0.25, 0.97, 61.03, 9.33, -0.15),
    "es-nobel": (19, 1.16, 0.75, 63.43, 7.45, -0.39),
    "es-non": (117, 0.11, 0.92, 60.64, 9.57, -0.19),
}

RECORDED_SCALE_PVALUES = {
    "en wqs nobel vs non": ("eq", 0.002),
    "en readability nobel vs non": ("eq", 0.043),
    "es wqs nobel vs non": ("lt", 0.0005),  # recorded as 0.000 at 3 decimals
    "es readability nobel vs non": ("eq", 0.229),
}

# Mean/std cells that do not recompute from the bundled rows (metric, group,
# field). The recomputed values are stable and the verify report prints them
# next to the recorded ones.
DOCUMENTED_DIVERGENCES = frozenset({
    ("d_rel", "en-nobel", "mean"),
    ("d_rel", "en-nobel", "std"),
    ("d_rel", "en-non", "mean"),
    ("d_rel", "en-non", "std"),
    ("d_rel", "es-nobel", "mean"),
    ("d_rel", "es-non", "mean"),
    ("h_rel", "es-nobel", "mean"),
    ("h_rel", "es-nobel", "std"),
})

# p-value cells that do not recompute to within the 20% relative band.
DIVERGENT_PVALUES = frozenset({
    ("d_rel", "nobel en vs es"),
    ("d_rel", "non en vs es"),
    ("h_rel", "en nobel vs non"),
    ("h_rel", "es nobel vs non"),
    ("h_rel", "nobel en vs es"),
    ("h_rel", "non en vs es"),
    ("j", "es nobel vs non"),
})

# The recorded per-row wqs column and the published scale coefficients do not
# agree everywhere. Row E1 is the canonical example: evaluating the
# verbatim-en preset on its printed (d_rel, h_rel, j) gives 0.0904, while the
# table records 0.6114. The scale evaluation is checked hard; the recorded
# column value is reported informationally.
E1_SCALE_CHECK = {
    "row": "E1",
    "point": (-0.1684, 0.0049, -0.1156),
    "expected": 0.0904,
    "tolerance": 0.0005,
    "recorded_column_value": 0.6114,
}

# Published unit direction vectors between the class centers, and the scale
# factors tying them to the preset weights (weights = scale * direction,
# component ratios agree to 4 significant figures).
RECORDED_DIRECTIONS = {
    "en": (0.68147, -0.07153, -0.72835),
    "es": (0.73241, -0.13280, -0.66779),
}
RECORDED_SCALE_FACTORS = {"en": 8.083, "es": 7.601}

GROUP_SIZES = {"en-nobel": 37, "en-non": 101, "es-nobel": 19, "es-non": 117}

# Base tolerances at --tolerance 1.0.
TOL_GROUP_CELL = 0.005      # absolute, mean/std of the style coordinates
TOL_SCALE_CELL = 0.02       # absolute, wqs/readability means, stds, correlations
TOL_PVALUE_REL = 0.20       # relative band on recomputed p-values
