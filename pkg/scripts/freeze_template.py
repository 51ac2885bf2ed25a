"""One-time generator for the frozen canonical landmark template.

Places the midpoint-identity frontal toy layout into the 80x80 canonical
frame (face width 62% of the frame, center column 40, center row 41) and
writes the literal into src/deid_forge/canonical_template.py.
"""
import sys
sys.path.insert(0, "src")
import numpy as np
from deid_forge import toyfaces

layout = toyfaces.face_layout(toyfaces.midpoint_identity(), mouth_curvature=0.0)
s_px = 0.5 * 0.62 * 80.0
pts = layout * s_px + np.array([40.0, 41.0])

lines = [
    '"""Frozen canonical face template (generated by scripts/freeze_template.py).',
    "",
    "Version 1: midpoint-identity frontal layout, face width 62% of the",
    "80x80 canonical frame, centered at column 40 / row 41. Symmetric under",
    "the iBUG left/right index swap by construction.",
    '"""',
    "",
    "CANONICAL_TEMPLATE_V1 = [",
]
for x, y in pts:
    lines.append(f"    [{float(x)!r}, {float(y)!r}],")
lines.append("]")
open("src/deid_forge/canonical_template.py", "w").write("\n".join(lines) + "\n")
print("wrote", len(pts), "points")
print("x range", pts[:,0].min(), pts[:,0].max())
print("y range", pts[:,1].min(), pts[:,1].max())
