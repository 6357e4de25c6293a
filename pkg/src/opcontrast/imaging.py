"""Netpbm images and the classical Michelson contrast.

Supports the four common PNM flavors: P2/P5 grayscale and P3/P6 RGB,
ASCII or binary raster, maxval up to 65535 (two-byte big-endian samples
in the binary forms). Samples are normalized by maxval, so every stored
value lies in [0, 1].

The Michelson contrast of a nonnegative sample collection equals the
operator contrast of the diagonal matrix carrying those samples (the
discrete multiplication operator), which is how the classical image
measure connects to the rest of the package.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blocks import ChannelStack, delta2_prime
from .contrast import delta2
from .errors import (
    BadMagicError,
    EmptyInputError,
    MaxvalOutOfRangeError,
    TruncatedDataError,
)
from .linalg import RectMatrix
from .report import Metric, ReportDocument

_MAGIC_KINDS = {b"P2": ("ascii", 1), b"P3": ("ascii", 3),
                b"P5": ("binary", 1), b"P6": ("binary", 3)}


@dataclass(frozen=True, eq=False)
class ImageChannels:
    """Decoded image: per-channel sample matrices scaled to [0, 1]."""

    width: int
    height: int
    samples: tuple[np.ndarray, ...]
    maxval: int = 255

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("image dimensions must be positive")
        if len(self.samples) not in (1, 3):
            raise ValueError("expected 1 (grayscale) or 3 (RGB) channels")
        if not 1 <= self.maxval <= 65535:
            raise ValueError(f"maxval {self.maxval} outside [1, 65535]")
        frozen = []
        for i, ch in enumerate(self.samples):
            a = np.asarray(ch, dtype=np.float64)
            if a.shape != (self.height, self.width):
                raise ValueError(
                    f"channel {i} has shape {a.shape}, expected "
                    f"({self.height}, {self.width})"
                )
            if a.min() < 0.0 or a.max() > 1.0:
                raise ValueError(f"channel {i} has samples outside [0, 1]")
            a = a.copy()
            a.setflags(write=False)
            frozen.append(a)
        object.__setattr__(self, "samples", tuple(frozen))

    @property
    def channels(self) -> int:
        return len(self.samples)


class _Cursor:
    """Byte-level reader that tracks the offset for diagnostics."""

    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def eof(self) -> bool:
        return self.pos >= len(self.data)

    def skip_header_space(self) -> None:
        while not self.eof():
            byte = self.data[self.pos]
            if byte in b" \t\r\n":
                self.pos += 1
            elif byte == ord("#"):
                while not self.eof() and self.data[self.pos] not in b"\r\n":
                    self.pos += 1
            else:
                return

    def read_token(self, what: str) -> tuple[bytes, int]:
        self.skip_header_space()
        if self.eof():
            raise TruncatedDataError(f"missing {what}", self.pos)
        start = self.pos
        while not self.eof() and self.data[self.pos] not in b" \t\r\n#":
            self.pos += 1
        return self.data[start:self.pos], start

    def read_int(self, what: str) -> tuple[int, int]:
        token, start = self.read_token(what)
        try:
            return int(token), start
        except ValueError:
            raise TruncatedDataError(
                f"bad {what} token {token!r}", start
            ) from None


def parse_pnm(data: bytes) -> ImageChannels:
    """Decode P2/P3/P5/P6 bytes into normalized channel matrices."""
    if len(data) < 2 or data[:1] != b"P":
        raise BadMagicError(f"not a PNM file (starts with {data[:2]!r})", 0)
    magic = data[:2]
    if magic not in _MAGIC_KINDS:
        raise BadMagicError(f"unsupported magic {magic!r}", 0)
    raster_kind, n_channels = _MAGIC_KINDS[magic]
    cur = _Cursor(data)
    cur.pos = 2
    width, _ = cur.read_int("width")
    height, _ = cur.read_int("height")
    maxval, maxval_at = cur.read_int("maxval")
    if width < 1 or height < 1:
        raise TruncatedDataError(f"bad dimensions {width} x {height}", maxval_at)
    if not 1 <= maxval <= 65535:
        raise MaxvalOutOfRangeError(f"maxval {maxval} outside [1, 65535]", maxval_at)
    count = width * height * n_channels

    if raster_kind == "ascii":
        values = np.empty(count, dtype=np.float64)
        for i in range(count):
            v, at = cur.read_int("sample")
            if not 0 <= v <= maxval:
                raise TruncatedDataError(
                    f"sample {v} outside [0, {maxval}]", at
                )
            values[i] = v
    else:
        # exactly one whitespace byte separates maxval from the raster
        if cur.eof() or data[cur.pos] not in b" \t\r\n":
            raise TruncatedDataError("missing raster separator", cur.pos)
        cur.pos += 1
        bytes_per = 2 if maxval > 255 else 1
        need = count * bytes_per
        raster = data[cur.pos:cur.pos + need]
        if len(raster) < need:
            raise TruncatedDataError(
                f"raster needs {need} bytes, found {len(raster)}",
                cur.pos + len(raster),
            )
        dtype = ">u2" if bytes_per == 2 else np.uint8
        values = np.frombuffer(raster, dtype=dtype).astype(np.float64)
        bad = np.nonzero(values > maxval)[0]
        if bad.size:
            raise TruncatedDataError(
                f"sample {int(values[bad[0]])} exceeds maxval {maxval}",
                cur.pos + int(bad[0]) * bytes_per,
            )

    planes = values.reshape(height, width, n_channels)
    samples = tuple(
        planes[:, :, c] / float(maxval) for c in range(n_channels)
    )
    return ImageChannels(
        width=width, height=height, samples=samples, maxval=maxval
    )


def write_pnm(img: ImageChannels, binary: bool = True) -> bytes:
    """Encode an image back to PNM bytes (inverse of parse_pnm)."""
    gray = img.channels == 1
    magic = (b"P5" if gray else b"P6") if binary else (b"P2" if gray else b"P3")
    quantized = [
        np.rint(ch * img.maxval).astype(np.uint32) for ch in img.samples
    ]
    interleaved = np.stack(quantized, axis=-1).reshape(-1)
    header = f"{magic.decode()}\n{img.width} {img.height}\n{img.maxval}\n"
    if binary:
        dtype = ">u2" if img.maxval > 255 else np.uint8
        return header.encode() + interleaved.astype(dtype).tobytes()
    body = "\n".join(" ".join(str(int(v)) for v in row)
                     for row in interleaved.reshape(img.height, -1))
    return header.encode() + body.encode() + b"\n"


def michelson_contrast(samples) -> float:
    """(max - min) / (max + min) of nonnegative samples.

    An all-zero collection returns 1, matching the operator convention
    for the zero matrix.
    """
    a = np.asarray(samples, dtype=np.float64).reshape(-1)
    if a.size == 0:
        raise EmptyInputError("need at least one sample")
    if a.min() < 0.0:
        raise ValueError(f"samples must be nonnegative, found {a.min()}")
    top, bottom = float(a.max()), float(a.min())
    if top == 0.0:
        return 1.0
    return (top - bottom) / (top + bottom)


def image_contrast_report(
    img: ImageChannels, mode: str, source: str = "<memory>"
) -> ReportDocument:
    """Per-channel contrast metrics of a decoded image.

    mode "michelson" reports the classical contrast per channel plus the
    channelwise maximum; mode "delta2" treats each channel matrix as an
    operator and reports its squared-singular-value contrast plus the
    channelwise supremum.
    """
    if mode not in ("michelson", "delta2"):
        raise ValueError(f"unknown mode {mode!r}")
    metrics = []
    if mode == "michelson":
        per_channel = [michelson_contrast(ch) for ch in img.samples]
        metrics.extend(
            Metric(name=f"michelson[{i}]", value=v, path="sample-range")
            for i, v in enumerate(per_channel)
        )
        metrics.append(
            Metric(
                name="michelson_overall",
                value=max(per_channel),
                path="channel-sup",
            )
        )
    else:
        rects = [RectMatrix(ch) for ch in img.samples]
        per_channel = [delta2(r) for r in rects]
        metrics.extend(
            Metric(name=f"delta2[{i}]", value=v, path="gram-spectral")
            for i, v in enumerate(per_channel)
        )
        metrics.append(
            Metric(
                name="delta2_prime",
                value=delta2_prime(ChannelStack(tuple(rects))),
                path="channel-sup",
            )
        )
    return ReportDocument(
        input={
            "source": source,
            "width": img.width,
            "height": img.height,
            "channels": img.channels,
            "maxval": img.maxval,
        },
        metrics=tuple(metrics),
        config={"mode": mode},
    )
