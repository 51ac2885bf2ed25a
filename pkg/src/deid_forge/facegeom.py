"""Landmark-driven face alignment.

Estimates the least-squares affine transform between 68-point landmark
sets, warps face crops into a fixed 80x80 canonical frame, and warps
synthesized 64x64 faces back into the original image. All warps use
inverse mapping with bilinear interpolation and edge replication.

Coordinate convention: landmark (x, y) means column x, row y, with pixel
centers at integer coordinates.
"""

import json

import numpy as np

from .canonical_template import CANONICAL_TEMPLATE_V1
from .errors import (DegenerateLandmarksError, DegenerateTransformError,
                     InvalidDataError, ShapeError)

CANONICAL_SIZE = 80      # alignment target frame
NET_INPUT_SIZE = 64      # synthesizer input, center-cropped from the frame
CROP_OFFSET = (CANONICAL_SIZE - NET_INPUT_SIZE) // 2

# Normal-matrix condition number beyond which a landmark configuration is
# treated as collinear.
DEGENERACY_CONDITION = 1e12

N_LANDMARKS = 68

# iBUG index ranges.
JAW = slice(0, 17)
BROWS = slice(17, 27)
NOSE = slice(27, 36)
EYES = slice(36, 48)
MOUTH = slice(48, 68)


def _mirror_index():
    m = np.arange(N_LANDMARKS)
    swap = lambda a, b: (m.__setitem__(a, b), m.__setitem__(b, a))
    for i in range(8):
        swap(i, 16 - i)                    # jaw
    for k in range(5):
        swap(17 + k, 26 - k)               # brows
    swap(31, 35), swap(32, 34)             # nostril row
    for a, b in ((36, 45), (37, 44), (38, 43), (39, 42), (40, 47), (41, 46)):
        swap(a, b)                         # eyes
    for a, b in ((48, 54), (49, 53), (50, 52), (55, 59), (56, 58),
                 (60, 64), (61, 63), (65, 67)):
        swap(a, b)                         # mouth
    return m


# swapped[i] = original[IBUG_MIRROR[i]] pairs each landmark with its
# left/right counterpart (self-paired on the symmetry axis).
IBUG_MIRROR = _mirror_index()


class LandmarkSet:
    """68 ordered (x, y) landmark points, iBUG convention."""

    def __init__(self, points):
        pts = np.asarray(points, dtype=np.float64)
        if pts.shape != (N_LANDMARKS, 2):
            raise InvalidDataError(
                f"landmark set must be ({N_LANDMARKS}, 2), got {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise InvalidDataError("landmark coordinates must be finite")
        self.points = pts

    def mirrored(self, axis_x=None):
        """Reflection about a vertical axis, re-indexed so that left/right
        features swap roles (the mirror of a frontal face maps onto itself)."""
        if axis_x is None:
            axis_x = self.points[:, 0].mean()
        out = self.points[IBUG_MIRROR].copy()
        out[:, 0] = 2.0 * axis_x - out[:, 0]
        return LandmarkSet(out)

    def transformed(self, transform):
        return LandmarkSet(transform.apply(self.points))

    def __len__(self):
        return N_LANDMARKS


class AffineTransform:
    """2x3 row-major affine matrix [a b tx; c d ty], source -> destination."""

    def __init__(self, matrix):
        m = np.asarray(matrix, dtype=np.float64)
        if m.shape != (2, 3):
            raise ShapeError(f"affine matrix must be (2, 3), got {m.shape}")
        if abs(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]) < 1e-12:
            raise DegenerateTransformError("affine 2x2 block is singular")
        self.matrix = m

    @classmethod
    def identity(cls):
        return cls([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])

    @property
    def linear(self):
        return self.matrix[:, :2]

    @property
    def translation(self):
        return self.matrix[:, 2]

    def apply(self, points):
        pts = np.asarray(points, dtype=np.float64)
        return pts @ self.linear.T + self.translation

    def inverse(self):
        inv = np.linalg.inv(self.linear)
        return AffineTransform(np.hstack([inv, -(inv @ self.translation)[:, None]]))

    def compose(self, other):
        """self after other: (self.compose(other)).apply(p) == self(other(p))."""
        lin = self.linear @ other.linear
        t = self.linear @ other.translation + self.translation
        return AffineTransform(np.hstack([lin, t[:, None]]))


def estimate_affine(src, dst):
    """Least-squares affine mapping src landmark points onto dst.

    Solves the two decoupled 3-unknown normal-equation systems (one per
    output axis). Exact whenever an affine map relating the sets exists.
    Raises DegenerateLandmarksError when the source configuration is
    (near-)collinear, judged by the normal-matrix condition number.
    """
    p = src.points if isinstance(src, LandmarkSet) else np.asarray(src, float)
    q = dst.points if isinstance(dst, LandmarkSet) else np.asarray(dst, float)
    if p.shape != q.shape or p.ndim != 2 or p.shape[1] != 2 or p.shape[0] < 3:
        raise InvalidDataError("need matching (n>=3, 2) point arrays")

    ones = np.ones((p.shape[0], 1))
    design = np.hstack([p, ones])
    normal = design.T @ design
    if np.linalg.cond(normal) > DEGENERACY_CONDITION:
        raise DegenerateLandmarksError(
            "source landmarks are collinear or near-degenerate")

    # Solve in centered/scaled coordinates for accuracy, then denormalize.
    mu = p.mean(axis=0)
    scale = np.sqrt(((p - mu) ** 2).sum(axis=1).mean()) or 1.0
    pn = (p - mu) / scale
    dn = np.hstack([pn, ones])
    g = dn.T @ dn
    rhs = dn.T @ q
    sol = np.linalg.solve(g, rhs)            # (3, 2): rows a-ish, b-ish, t
    lin = sol[:2].T / scale
    t = sol[2] - lin @ mu
    return AffineTransform(np.hstack([lin, t[:, None]]))


def _sample_bilinear(img, sx, sy):
    """Sample img at float coords (sx, sy) with edge replication.

    Uses the lerp form v0 + f*(v1 - v0), which is bit-exact for constant
    neighborhoods and for integer coordinates.
    """
    h, w = img.shape[:2]
    x0 = np.floor(sx)
    y0 = np.floor(sy)
    fx = (sx - x0).astype(np.float32)
    fy = (sy - y0).astype(np.float32)
    x0 = x0.astype(np.int64)
    y0 = y0.astype(np.int64)
    x0c = np.clip(x0, 0, w - 1)
    x1c = np.clip(x0 + 1, 0, w - 1)
    y0c = np.clip(y0, 0, h - 1)
    y1c = np.clip(y0 + 1, 0, h - 1)
    if img.ndim == 3:
        fx = fx[..., None]
        fy = fy[..., None]
    v00 = img[y0c, x0c]
    v01 = img[y0c, x1c]
    v10 = img[y1c, x0c]
    v11 = img[y1c, x1c]
    top = v00 + fx * (v01 - v00)
    bot = v10 + fx * (v11 - v10)
    return top + fy * (bot - top)


def warp_image(img, transform, out_w, out_h):
    """Warp img by the affine transform onto an (out_h, out_w) canvas.

    The transform maps source pixel coordinates to destination coordinates;
    each output pixel inverse-samples the source bilinearly, replicating
    the nearest edge pixel outside the source bounds.
    """
    img = np.asarray(img, dtype=np.float32)
    inv = transform.inverse().matrix
    xs, ys = np.meshgrid(np.arange(out_w, dtype=np.float64),
                         np.arange(out_h, dtype=np.float64))
    sx = inv[0, 0] * xs + inv[0, 1] * ys + inv[0, 2]
    sy = inv[1, 0] * xs + inv[1, 1] * ys + inv[1, 2]
    return _sample_bilinear(img, sx, sy).astype(np.float32)


def canonical_template():
    """The 68-point frontal template in the 80x80 canonical frame."""
    return LandmarkSet(CANONICAL_TEMPLATE_V1)


def align_face(img, landmarks):
    """Warp a face into the canonical frame.

    Returns (80x80x3 image, AffineTransform); the transform maps original
    image coordinates to canonical-frame coordinates and is what
    unwarp_face later needs to place a synthesized face back.
    """
    transform = estimate_affine(landmarks, canonical_template())
    aligned = warp_image(img, transform, CANONICAL_SIZE, CANONICAL_SIZE)
    return aligned, transform


def center_crop_64(img80):
    """The synthesizer input: central 64x64 of the canonical frame."""
    o = CROP_OFFSET
    return img80[o:o + NET_INPUT_SIZE, o:o + NET_INPUT_SIZE]


def unwarp_face(face64, transform, orig_w, orig_h):
    """Place a synthesized 64x64 face back into original-image coordinates.

    The transform must be the one align_face returned. Returns
    (canvas [orig_h, orig_w, 3], valid [orig_h, orig_w] bool); pixels whose
    canonical-frame preimage falls outside the 64x64 crop carry no face
    content and are marked invalid for downstream masking.
    """
    face64 = np.asarray(face64, dtype=np.float32)
    if face64.shape[:2] != (NET_INPUT_SIZE, NET_INPUT_SIZE):
        raise ShapeError(f"expected {NET_INPUT_SIZE}x{NET_INPUT_SIZE} face, "
                         f"got {face64.shape}")
    m = transform.matrix
    xs, ys = np.meshgrid(np.arange(orig_w, dtype=np.float64),
                         np.arange(orig_h, dtype=np.float64))
    sx = m[0, 0] * xs + m[0, 1] * ys + m[0, 2] - CROP_OFFSET
    sy = m[1, 0] * xs + m[1, 1] * ys + m[1, 2] - CROP_OFFSET
    valid = ((sx >= 0.0) & (sx <= NET_INPUT_SIZE - 1) &
             (sy >= 0.0) & (sy <= NET_INPUT_SIZE - 1))
    canvas = _sample_bilinear(face64, sx, sy).astype(np.float32)
    canvas[~valid] = 0.0
    return canvas, valid


def load_landmark_file(path):
    """Read one landmark JSON file: {"image": name, "points": [[x,y] * 68]}."""
    with open(path, "r", encoding="utf-8") as fh:
        rec = json.load(fh)
    return _parse_record(rec, path)


def save_landmark_file(path, image_name, landmarks):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump({"image": image_name,
                   "points": landmarks.points.tolist()}, fh)
        fh.write("\n")


def iter_landmark_stream(path):
    """Yield (image_name, LandmarkSet) records from a JSON-lines stream."""
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield _parse_record(json.loads(line), path)


def _parse_record(rec, path):
    try:
        return rec["image"], LandmarkSet(rec["points"])
    except (KeyError, TypeError) as exc:
        raise InvalidDataError(f"malformed landmark record in {path}: {exc}")
