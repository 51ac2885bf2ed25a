"""Procedural toy-face generator.

Renders parametric vector faces (anti-aliased ellipses and arcs) together
with analytically computed 68-point landmark sets, so every downstream
stage — alignment, masking, training, verification — has exact ground
truth. Identity parameters control who the face is, attribute parameters
control everything a single photo could vary (expression, pose, lighting,
framing).

All rendering is deterministic: 4x supersampled coverage tests on pixel
centers, no randomness inside ``render_face``.
"""

from dataclasses import dataclass

import numpy as np

from . import facegeom
from .errors import InvalidParameterError
from .rng import STREAM_TOYFACE, stream

SUPERSAMPLE = 4

# Identity parameter ranges (normalized units; geometry is expressed in a
# face frame with half-width 1 and y pointing down). Geometry-bearing
# ranges are deliberately tight so every identity stays within the 0.5 px
# RMS alignment budget against the canonical template; identity signal for
# the verifier comes mostly from skin color and brow weight.
SKIN_RANGE = (0.35, 0.85)
ASPECT_RANGE = (1.10, 1.35)
EYE_SPACING_RANGE = (0.48, 0.52)
BROW_THICKNESS_RANGE = (0.025, 0.057)
NOSE_LENGTH_RANGE = (0.34, 0.38)

# Attribute parameter ranges.
CURVATURE_RANGE = (-1.0, 1.0)
ROTATION_RANGE = (-15.0, 15.0)
ILLUMINATION_RANGE = (0.7, 1.3)
JITTER_RANGE = (-4.0, 4.0)

# Vertical geometry lives in a unit-aspect frame; every y-coordinate of
# the layout and the drawing is multiplied by the identity's aspect, so
# aspect acts as an exact global y-scale (fully absorbed by alignment).
_EYE_ROW = -0.28          # eye-center y in the unit-aspect frame
_EYE_RX, _EYE_RY = 0.170, 0.085
_BROW_LIFT = 0.175        # brow row above the eye row
_MOUTH_ROW = 0.52         # mouth-center y
_MOUTH_HALFWIDTH = 0.34
_CORNER_LIFT = 0.031      # max mouth-corner displacement per unit curvature


@dataclass(frozen=True)
class IdentityParams:
    """Who the face is. All fields live in the documented ranges above."""

    skin: tuple          # (r, g, b) base skin color
    aspect: float        # head height / head width
    eye_spacing: float   # eye-center offset from the face axis, half-widths
    brow_thickness: float
    nose_length: float   # nose-root-to-tip distance, half-widths

    def validate(self):
        checks = [
            ("skin", min(self.skin), SKIN_RANGE),
            ("skin", max(self.skin), SKIN_RANGE),
            ("aspect", self.aspect, ASPECT_RANGE),
            ("eye_spacing", self.eye_spacing, EYE_SPACING_RANGE),
            ("brow_thickness", self.brow_thickness, BROW_THICKNESS_RANGE),
            ("nose_length", self.nose_length, NOSE_LENGTH_RANGE),
        ]
        for name, value, (lo, hi) in checks:
            if not (lo <= value <= hi):
                raise InvalidParameterError(
                    f"{name}={value} outside [{lo}, {hi}]")

    def as_vector(self):
        return np.array([*self.skin, self.aspect, self.eye_spacing,
                         self.brow_thickness, self.nose_length])


@dataclass(frozen=True)
class AttributeParams:
    """What a single photo varies: expression, pose, lighting, framing."""

    mouth_curvature: float = 0.0   # -1 frown .. 1 smile
    rotation_deg: float = 0.0      # in-plane head rotation
    illumination: float = 1.0      # global gain
    jitter: tuple = (0.0, 0.0)     # face-center translation, pixels

    def validate(self):
        checks = [
            ("mouth_curvature", self.mouth_curvature, CURVATURE_RANGE),
            ("rotation_deg", self.rotation_deg, ROTATION_RANGE),
            ("illumination", self.illumination, ILLUMINATION_RANGE),
            ("jitter", min(self.jitter), JITTER_RANGE),
            ("jitter", max(self.jitter), JITTER_RANGE),
        ]
        for name, value, (lo, hi) in checks:
            if not (lo <= value <= hi):
                raise InvalidParameterError(
                    f"{name}={value} outside [{lo}, {hi}]")


NEUTRAL_ATTRIBUTES = AttributeParams()


def midpoint_identity():
    """Identity at the center of every parameter range (template donor)."""
    mid = lambda r: 0.5 * (r[0] + r[1])
    return IdentityParams(
        skin=(mid(SKIN_RANGE),) * 3,
        aspect=mid(ASPECT_RANGE),
        eye_spacing=mid(EYE_SPACING_RANGE),
        brow_thickness=mid(BROW_THICKNESS_RANGE),
        nose_length=mid(NOSE_LENGTH_RANGE),
    )


def _brow_arch(rel):
    # rel: signed offset from the brow's own axis, negative toward the ear
    return 0.05 * (1.0 - (rel + 0.03) ** 2 * 4.0)


def _mouth_curves(mouth_curvature):
    """(upper, lower) outer-lip curve functions in the unit-aspect frame."""
    ym = _MOUTH_ROW
    lift = -_CORNER_LIFT * mouth_curvature   # smile pulls corners up (-y)

    def upper(x, w, depth):
        return ym - depth + (lift + depth) * (x / w) ** 2

    def lower(x, w, depth):
        return ym + depth + (lift - depth) * (x / w) ** 2

    return upper, lower, lift


def face_layout(identity, mouth_curvature=0.0):
    """68 iBUG-ordered landmark positions in the unit face frame.

    The frame has the face center at the origin, half-width 1 and y down;
    y-values are built at unit aspect and scaled by the identity's aspect
    at the end. Left/right features are built by mirroring shared
    formulas, so the layout is exactly symmetric under the iBUG left/right
    index swap.
    """
    es = identity.eye_spacing
    pts = np.zeros((68, 2))

    # Jaw 0-16: lower half of the head circle, left ear -> chin -> right.
    t = np.arange(17) * np.pi / 16.0
    pts[0:17, 0] = -np.cos(t)
    pts[0:17, 1] = np.sin(t)

    ey = _EYE_ROW
    yb = ey - _BROW_LIFT

    # Brows 17-26: five points on an arched span above each eye.
    span = np.linspace(-0.28, 0.22, 5)         # offsets from the eye axis
    arch = _brow_arch(span)
    pts[17:22, 0] = -es + span
    pts[17:22, 1] = yb - arch
    pts[22:27, 0] = (es - span)[::-1]
    pts[22:27, 1] = (yb - arch)[::-1]

    # Nose 27-30 bridge, 31-35 nostril row.
    root = ey + 0.05
    tip = ey + identity.nose_length
    pts[27:31, 0] = 0.0
    pts[27:31, 1] = np.linspace(root, tip, 4)
    pts[31:36, 0] = np.array([-0.14, -0.07, 0.0, 0.07, 0.14])
    pts[31:36, 1] = tip + 0.055

    # Eyes 36-47: six-point hexagons.
    hx = np.array([-_EYE_RX, -0.4 * _EYE_RX, 0.4 * _EYE_RX,
                   _EYE_RX, 0.4 * _EYE_RX, -0.4 * _EYE_RX])
    hy = np.array([0.0, -_EYE_RY, -_EYE_RY, 0.0, _EYE_RY, _EYE_RY])
    pts[36:42, 0] = -es + hx
    pts[36:42, 1] = ey + hy
    pts[42:48, 0] = es - hx[[3, 2, 1, 0, 5, 4]]
    pts[42:48, 1] = ey + hy[[3, 2, 1, 0, 5, 4]]

    # Mouth 48-67. Outer ring runs corner -> upper arc -> corner -> lower
    # arc (right to left); the inner ring repeats at 80 % scale.
    mw = _MOUTH_HALFWIDTH
    upper, lower, lift = _mouth_curves(mouth_curvature)
    ym = _MOUTH_ROW

    xo = np.array([-0.66, -0.33, 0.0, 0.33, 0.66]) * mw
    pts[48] = (-mw, ym + lift)
    pts[49:54, 0] = xo
    pts[49:54, 1] = upper(xo, mw, 0.070)
    pts[54] = (mw, ym + lift)
    pts[55:60, 0] = xo[::-1]
    pts[55:60, 1] = lower(xo[::-1], mw, 0.094)

    iw = 0.80 * mw
    xi = np.array([-0.40, 0.0, 0.40]) * mw
    pts[60] = (-iw, ym + lift * 0.8)
    pts[61:64, 0] = xi
    pts[61:64, 1] = upper(xi, iw, 0.025)
    pts[64] = (iw, ym + lift * 0.8)
    pts[65:68, 0] = xi[::-1]
    pts[65:68, 1] = lower(xi[::-1], iw, 0.037)

    pts[:, 1] *= identity.aspect
    return pts


def _frame_transform(size, attrs, face_scale):
    """Face-frame -> image transform as (scale_px, rotation, center)."""
    s_px = 0.5 * face_scale * size
    theta = np.deg2rad(attrs.rotation_deg)
    center = np.array([size / 2.0 + attrs.jitter[0],
                       size / 2.0 + attrs.jitter[1]])
    return s_px, theta, center


def _layout_to_pixels(layout, size, attrs, face_scale):
    s_px, theta, center = _frame_transform(size, attrs, face_scale)
    c, s = np.cos(theta), np.sin(theta)
    rot = np.array([[c, -s], [s, c]])
    return layout @ (s_px * rot.T) + center


def render_face(identity, attrs, size=128, face_scale=0.62):
    """Render one face; returns (image [size,size,3] float32, LandmarkSet).

    The landmark positions are computed from the same parameters and the
    same face-frame transform as the drawing, so they sit exactly on the
    rendered features under any rotation/translation.
    """
    identity.validate()
    attrs.validate()

    a = identity.aspect
    es = identity.eye_spacing
    layout = face_layout(identity, attrs.mouth_curvature)
    s_px, theta, center = _frame_transform(size, attrs, face_scale)

    # Supersampled pixel-center coordinates, pulled back into the
    # unit-aspect face frame (fy is divided by aspect, so all drawing uses
    # the same constants as the layout).
    n = size * SUPERSAMPLE
    u = (np.arange(n) + 0.5) / SUPERSAMPLE - 0.5
    gx, gy = np.meshgrid(u, u)
    dx, dy = gx - center[0], gy - center[1]
    c, s = np.cos(-theta), np.sin(-theta)
    fx = (c * dx - s * dy) / s_px
    fy = (s * dx + c * dy) / (s_px * a)

    def ellipse(cx, cy, rx, ry):
        return ((fx - cx) / rx) ** 2 + ((fy - cy) / ry) ** 2 <= 1.0

    skin = np.array(identity.skin)
    dark = skin * 0.25
    sclera = np.array([0.93, 0.93, 0.90])
    lip = np.clip(skin * [0.85, 0.55, 0.55] + [0.10, 0.0, 0.0], 0.0, 1.0)

    img = np.empty((n, n, 3))
    img[:] = [0.13, 0.145, 0.17]

    def paint(mask, color):
        img[mask] = color

    paint(ellipse(0.0, 0.0, 1.0, 1.0), skin)

    # Brows: band around the brow arch curve.
    ey = _EYE_ROW
    yb = ey - _BROW_LIFT
    for sign in (-1.0, 1.0):
        rel = fx * -sign + es                   # offset from that brow's axis
        inside_span = (rel >= -0.28) & (rel <= 0.22)
        curve = yb - _brow_arch(rel)
        band = np.abs(fy - curve) <= identity.brow_thickness
        paint(band & inside_span, dark)

    # Nose: shaded wedge down the axis plus a nostril bar.
    tip = ey + identity.nose_length
    wedge = (fy >= ey + 0.033) & (fy <= tip + 0.016) & \
            (np.abs(fx) <= 0.065 * (fy - ey - 0.033) / (tip - ey) + 0.012)
    paint(wedge, skin * 0.82)
    paint(ellipse(0.0, tip + 0.055, 0.15, 0.029), skin * 0.70)

    # Eyes: sclera + iris.
    for sign in (-1.0, 1.0):
        cx = sign * es
        paint(ellipse(cx, ey, _EYE_RX, _EYE_RY), sclera)
        paint(ellipse(cx, ey, 0.055, 0.045), dark)

    # Mouth: region between the outer lip curves.
    mw = _MOUTH_HALFWIDTH
    upper, lower, _ = _mouth_curves(attrs.mouth_curvature)
    within = np.abs(fx) <= mw
    paint(within & (fy >= upper(fx, mw, 0.070)) & (fy <= lower(fx, mw, 0.094)),
          lip)

    img = np.clip(img * attrs.illumination, 0.0, 1.0)
    # 4x4 box filter down to pixel resolution.
    img = img.reshape(size, SUPERSAMPLE, size, SUPERSAMPLE, 3).mean(axis=(1, 3))

    pix = _layout_to_pixels(layout, size, attrs, face_scale)
    return img.astype(np.float32), facegeom.LandmarkSet(pix)


def random_identity(rng):
    u = rng.uniform
    return IdentityParams(
        skin=(u(*SKIN_RANGE), u(*SKIN_RANGE), u(*SKIN_RANGE)),
        aspect=u(*ASPECT_RANGE),
        eye_spacing=u(*EYE_SPACING_RANGE),
        brow_thickness=u(*BROW_THICKNESS_RANGE),
        nose_length=u(*NOSE_LENGTH_RANGE),
    )


_RANGES = np.array([SKIN_RANGE, SKIN_RANGE, SKIN_RANGE, ASPECT_RANGE,
                    EYE_SPACING_RANGE, BROW_THICKNESS_RANGE,
                    NOSE_LENGTH_RANGE])


def identities_separated(a, b, min_params=2, min_fraction=0.2):
    """True when two identities differ in >= min_params parameters by
    >= min_fraction of each parameter's documented range."""
    gap = np.abs(a.as_vector() - b.as_vector())
    frac = gap / (_RANGES[:, 1] - _RANGES[:, 0])
    return int(np.sum(frac >= min_fraction)) >= min_params


def sample_identities(count, seed):
    """Draw identities that are pairwise separated (rejection sampling)."""
    rng = stream(seed, STREAM_TOYFACE, 0)
    out = []
    attempts = 0
    while len(out) < count:
        cand = random_identity(rng)
        attempts += 1
        if attempts > 10000:
            raise InvalidParameterError("could not separate identities")
        if all(identities_separated(cand, o) for o in out):
            out.append(cand)
    return out


def random_attributes(rng):
    u = rng.uniform
    return AttributeParams(
        mouth_curvature=u(*CURVATURE_RANGE),
        rotation_deg=u(*ROTATION_RANGE),
        illumination=u(*ILLUMINATION_RANGE),
        jitter=(u(*JITTER_RANGE), u(*JITTER_RANGE)),
    )


def generate_face_set(identity, n, seed, subject_id="toy", frame_size=128,
                      face_scale=0.62):
    """Render n faces of one identity and align them to the 80x80 canonical
    frame; returns a trainer.FaceSet carrying the aligned stack plus the
    source landmarks for provenance."""
    from .trainer import FaceSet

    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    faces = np.empty((n, facegeom.CANONICAL_SIZE, facegeom.CANONICAL_SIZE, 3),
                     dtype=np.float32)
    marks = []
    for k in range(n):
        attrs = random_attributes(stream(seed, STREAM_TOYFACE, 1, k))
        img, lms = render_face(identity, attrs, size=frame_size,
                               face_scale=face_scale)
        aligned, _ = facegeom.align_face(img, lms)
        faces[k] = aligned
        marks.append(lms)
    return FaceSet(subject_id=subject_id, faces=faces, landmarks=marks)
