"""Grayscale image model, PGM I/O and intensity histograms."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

NBINS = 256


class PgmError(ValueError):
    """Raised for malformed or unsupported PGM input."""


@dataclass(frozen=True, eq=False)
class GrayImage:
    """Row-major grid of intensities in [0, 255].

    Samples are held as float64 so centroid arithmetic stays real-valued;
    8-bit inputs are stored losslessly.
    """

    width: int
    height: int
    pixels: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ValueError(f"image dimensions must be positive, got {self.width}x{self.height}")
        px = np.array(self.pixels, dtype=np.float64).reshape(-1)
        if px.size != self.width * self.height:
            raise ValueError(
                f"expected {self.width * self.height} pixels, got {px.size}")
        if px.size and (not np.all(np.isfinite(px)) or px.min() < 0 or px.max() > 255):
            raise ValueError("intensities must lie in [0, 255]")
        px.setflags(write=False)
        object.__setattr__(self, "pixels", px)

    @classmethod
    def from_array(cls, arr) -> "GrayImage":
        arr = np.asarray(arr, dtype=np.float64)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-D array, got shape {arr.shape}")
        h, w = arr.shape
        return cls(w, h, arr)

    @property
    def size(self) -> int:
        return self.width * self.height

    @property
    def array(self) -> np.ndarray:
        """Read-only (height, width) view."""
        return self.pixels.reshape(self.height, self.width)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return (self.width == other.width and self.height == other.height
                and np.array_equal(self.pixels, other.pixels))

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False)
class Histogram:
    counts: np.ndarray

    def __post_init__(self) -> None:
        c = np.array(self.counts, dtype=np.int64).reshape(-1)
        if c.size != NBINS or np.any(c < 0):
            raise ValueError("histogram needs 256 non-negative counts")
        c.setflags(write=False)
        object.__setattr__(self, "counts", c)

    @property
    def total(self) -> int:
        return int(self.counts.sum())


def flatten(img: GrayImage) -> np.ndarray:
    """Row-major intensity vector; pixel (r, c) sits at index r*width + c."""
    return img.pixels


def compute_histogram(img: GrayImage) -> Histogram:
    bins = np.rint(img.pixels).astype(np.int64)
    return Histogram(np.bincount(bins, minlength=NBINS))


# -- PGM ---------------------------------------------------------------------

def _header_tokens(data: bytes, count: int) -> tuple[list[bytes], int]:
    """Read `count` whitespace-separated tokens, skipping '#' comments.

    Returns the tokens and the offset just past the last token.
    """
    tokens: list[bytes] = []
    pos, n = 0, len(data)
    while len(tokens) < count:
        while pos < n and data[pos:pos + 1].isspace():
            pos += 1
        if pos >= n:
            raise PgmError("truncated header")
        if data[pos:pos + 1] == b"#":
            eol = data.find(b"\n", pos)
            pos = n if eol < 0 else eol + 1
            continue
        start = pos
        while pos < n and not data[pos:pos + 1].isspace() and data[pos:pos + 1] != b"#":
            pos += 1
        tokens.append(data[start:pos])
    return tokens, pos


def _header_int(tok: bytes, what: str) -> int:
    if not tok.isdigit():
        raise PgmError(f"bad {what} in header: {tok!r}")
    return int(tok)


def decode_pgm(data: bytes) -> GrayImage:
    tokens, pos = _header_tokens(data, 4)
    magic = tokens[0]
    if magic not in (b"P2", b"P5"):
        raise PgmError(f"unsupported magic number {magic!r}; expected P2 or P5")
    width = _header_int(tokens[1], "width")
    height = _header_int(tokens[2], "height")
    maxval = _header_int(tokens[3], "maxval")
    if width == 0 or height == 0:
        raise PgmError("image dimensions must be positive")
    if maxval == 0:
        raise PgmError("maxval must be positive")
    if maxval > 255:
        raise PgmError(f"maxval {maxval} > 255: 16-bit PGM is not supported")
    npix = width * height

    if magic == b"P5":
        # exactly one whitespace byte separates maxval from the raster
        if pos >= len(data) or not data[pos:pos + 1].isspace():
            raise PgmError("missing whitespace after maxval")
        raster = data[pos + 1:pos + 1 + npix]
        if len(raster) < npix:
            raise PgmError(f"raster truncated: {len(raster)} of {npix} bytes")
        samples = np.frombuffer(raster, dtype=np.uint8)
    else:
        body = data[pos:]
        # comments are legal anywhere in plain PGM
        lines = [ln.split(b"#", 1)[0] for ln in body.splitlines()]
        fields = b" ".join(lines).split()
        if len(fields) < npix:
            raise PgmError(f"raster truncated: {len(fields)} of {npix} samples")
        try:
            samples = np.array([int(f) for f in fields[:npix]], dtype=np.int64)
        except ValueError as exc:
            raise PgmError(f"non-integer sample: {exc}") from None

    if samples.size and samples.max() > maxval:
        raise PgmError("sample exceeds maxval")
    return GrayImage(width, height, samples.astype(np.float64))


def encode_pgm(img: GrayImage) -> bytes:
    """Canonical P5 encoding: single-space header, maxval 255, round-half-even."""
    raster = np.clip(np.rint(img.pixels), 0, 255).astype(np.uint8)
    header = f"P5\n{img.width} {img.height}\n255\n".encode("ascii")
    return header + raster.tobytes()


def load_image(path: str | os.PathLike) -> GrayImage:
    with open(path, "rb") as fh:
        data = fh.read()
    return decode_pgm(data)


def save_image(img: GrayImage, path: str | os.PathLike) -> None:
    with open(path, "wb") as fh:
        fh.write(encode_pgm(img))
