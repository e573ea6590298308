"""
Vocabulary growth and entropy models, with fitting
==================================================
"""

import random

from lexigauge import (
    Language,
    entropy_model_predict,
    fit_entropy_model,
    fit_heaps,
    heaps_predict,
    load_language_params,
    relative_diversity,
    relative_entropy,
)

params = load_language_params()
en = params[Language.ENGLISH]
es = params[Language.SPANISH]
print(f"english growth: D = {en.heaps_c} * L^{en.heaps_beta}")
print(f"spanish growth: D = {es.heaps_c} * L^{es.heaps_beta}")

# Expected vocabulary size at a few text lengths.
for L in (1_000, 10_000, 100_000):
    print(f"  L={L:>7}: en {heaps_predict(en, L):8.1f}   es {heaps_predict(es, L):8.1f}")

# The entropy model ties h to d through a small exponent; the relative
# deviations d_rel and h_rel are what the style coordinates are built from.
print(f"\nenglish entropy model: h = d^{en.entropy_exponent}")
print(f"  h(d=0.5) = {entropy_model_predict(en, 0.5):.4f}")
D_m = heaps_predict(en, 2000)
h_m = entropy_model_predict(en, 700 / 2000)
print(f"a text with L=2000, D=700, h=0.92 sits at "
      f"d_rel={relative_diversity(700, D_m):+.4f}, "
      f"h_rel={relative_entropy(0.92, h_m):+.4f}")

# Fitting recovers generating parameters. Noiseless synthetic points first.
points = [(L, 3.1 * L**0.71) for L in (300, 800, 2000, 6000, 15000)]
c, beta = fit_heaps(points)
print(f"\nnoiseless fit: c={c:.6f} (true 3.1), beta={beta:.6f} (true 0.71)")

# With noise the least-squares objective still lands near the generator.
rng = random.Random(11)
noisy = [(L, D * (1 + rng.uniform(-0.05, 0.05))) for L, D in points]
c, beta = fit_heaps(noisy)
print(f"5% noise fit:  c={c:.4f}, beta={beta:.4f}")

e = fit_entropy_model([(d, d**0.16) for d in (0.05, 0.1, 0.3, 0.5, 0.8)])
print(f"entropy exponent fit: {e:.6f} (true 0.16)")
