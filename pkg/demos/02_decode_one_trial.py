"""Walk one decoding trial through every stage, for a qutrit color code.

Run:  python demos/02_decode_one_trial.py
"""

from planarqec import (
    build_color_code_666,
    classify_residual,
    compose,
    decode_gcc,
    extract,
    sample_error,
    trial_rng,
)

DIM = 3
code = build_color_code_666(9)
rng = trial_rng(master_seed=7, trial_index=0)

error = sample_error(code, p=0.06, dim=DIM, rng=rng)
print(f"sampled error on {len(error)} of {code.n_data} qudits: {error}")

syndrome = extract(code, error, DIM)
print(f"\nflagged stabilizers ({len(syndrome)}):")
for s, charge in sorted(syndrome.items()):
    print(f"  face {s:3d} color {int(code.stab_color[s])} charge {charge}")

correction = decode_gcc(code, syndrome, DIM)
print(f"\nGCC correction touches {len(correction)} qudits: {correction}")

residual = compose(error, correction, DIM)
assert extract(code, residual, DIM) == {}
verdict = classify_residual(code, residual, DIM)
print(f"\nresidual weight {verdict.residual_weight}, "
      f"logical failure: {verdict.failure}")
