"""Build both code families and poke at their structure.

Run:  python demos/01_build_and_inspect_codes.py
"""

import numpy as np

from planarqec import (
    build_color_code_666,
    build_surface_code,
    dual_distance,
    validate,
)

for d in (3, 5, 7):
    surf = build_surface_code(d)
    col = build_color_code_666(d)
    print(f"d={d}: surface has {surf.n_data} data qudits, "
          f"{surf.n_detectors} plaquettes + {surf.n_stab - surf.n_detectors} stars; "
          f"color code has {col.n_data} data qudits, {col.n_stab} faces")
    assert validate(surf) == [] and validate(col) == []

code = build_color_code_666(7)
print("\nboundaries:", [(b.node, b.side, b.color) for b in code.boundaries])
print("face colors:", np.bincount(code.stab_color))

# the signed incidence: around any internal data qudit the three faces see
# opposite parities, with the privileged color flipped
q = code.internal_data[0]
print(f"\ndata qudit {q} touches:",
      [(f, int(code.stab_color[f]), sign) for f, sign in code.data_checks[q]])

# hop distances on the dual lattice drive all decoding decisions
a, b = 0, code.n_stab - 1
print(f"dual distance between faces {a} and {b}: {dual_distance(code, a, b)}")
print(f"distance from face {a} to each boundary:",
      [dual_distance(code, a, bn.node) for bn in code.boundaries])
