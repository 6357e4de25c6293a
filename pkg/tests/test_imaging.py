"""PNM decoding, Michelson contrast and image reports."""

import json

import numpy as np
import pytest

from opcontrast.contrast import delta
from opcontrast.errors import (
    BadMagicError,
    EmptyInputError,
    MaxvalOutOfRangeError,
    TruncatedDataError,
)
from opcontrast.imaging import (
    ImageChannels,
    image_contrast_report,
    michelson_contrast,
    parse_pnm,
    write_pnm,
)
from opcontrast.linalg import HermitianMatrix


def test_michelson_basic():
    assert michelson_contrast([0.2, 0.8]) == pytest.approx(0.6, abs=1e-15)
    assert michelson_contrast([0.4, 0.4, 0.4]) == 0.0
    assert michelson_contrast([0.0, 0.3]) == 1.0
    assert michelson_contrast([0.0, 0.0]) == 1.0


def test_michelson_rejects_bad_input():
    with pytest.raises(EmptyInputError):
        michelson_contrast([])
    with pytest.raises(ValueError):
        michelson_contrast([-0.1, 0.5])


def test_michelson_equals_diagonal_contrast():
    rng = np.random.default_rng(50)
    for _ in range(50):
        v = rng.uniform(0.0, 1.0, size=int(rng.integers(1, 65)))
        diag_value = delta(HermitianMatrix.diagonal(v)).value
        assert abs(michelson_contrast(v) - diag_value) <= 1e-12


def test_parse_p2():
    img = parse_pnm(b"P2\n2 1\n255\n0 255\n")
    assert (img.width, img.height, img.channels) == (2, 1, 1)
    assert img.samples[0].tolist() == [[0.0, 1.0]]


def test_parse_p2_with_comments():
    img = parse_pnm(b"P2\n# a comment\n2 2 # trailing\n# another\n4\n0 1 2 3\n")
    assert img.maxval == 4
    assert img.samples[0].tolist() == [[0.0, 0.25], [0.5, 0.75]]


def test_parse_p3_rgb():
    img = parse_pnm(b"P3\n3 1\n255\n255 0 0  0 255 0  0 0 255\n")
    assert img.channels == 3
    assert img.samples[0].tolist() == [[1.0, 0.0, 0.0]]
    assert img.samples[1].tolist() == [[0.0, 1.0, 0.0]]
    assert img.samples[2].tolist() == [[0.0, 0.0, 1.0]]


def test_parse_p5_binary():
    img = parse_pnm(b"P5\n2 2\n255\n" + bytes([0, 64, 128, 255]))
    assert img.samples[0][1, 1] == 1.0
    assert img.samples[0][0, 0] == 0.0


def test_parse_p6_binary_rgb():
    raster = bytes([255, 0, 0, 0, 255, 0, 0, 0, 255])
    img = parse_pnm(b"P6\n3 1\n255\n" + raster)
    assert img.channels == 3
    assert img.samples[0][0, 0] == 1.0


def test_parse_wide_maxval_big_endian():
    raster = (1000).to_bytes(2, "big") + (65535).to_bytes(2, "big")
    img = parse_pnm(b"P5\n2 1\n65535\n" + raster)
    assert img.samples[0][0, 0] == pytest.approx(1000 / 65535)
    assert img.samples[0][0, 1] == 1.0


def test_bad_magic_offsets():
    with pytest.raises(BadMagicError) as err:
        parse_pnm(b"P7\n1 1\n255\n\x00")
    assert err.value.offset == 0
    with pytest.raises(BadMagicError):
        parse_pnm(b"JUNK")


def test_truncated_raster_offset():
    # 11 header bytes, then two of the four raster bytes arrive
    with pytest.raises(TruncatedDataError) as err:
        parse_pnm(b"P5\n2 2\n255\n" + bytes([1, 2]))
    assert err.value.offset == 11 + 2
    with pytest.raises(TruncatedDataError):
        parse_pnm(b"P2\n2 2\n255\n0 1 2\n")


def test_maxval_out_of_range():
    with pytest.raises(MaxvalOutOfRangeError) as err:
        parse_pnm(b"P2\n1 1\n0\n0\n")
    assert err.value.offset == 7
    with pytest.raises(MaxvalOutOfRangeError):
        parse_pnm(b"P2\n1 1\n70000\n0\n")


def test_ascii_sample_above_maxval():
    with pytest.raises(TruncatedDataError):
        parse_pnm(b"P2\n1 1\n10\n11\n")


@pytest.mark.parametrize("binary", [True, False])
@pytest.mark.parametrize("maxval", [255, 4095])
def test_roundtrip_exact(binary, maxval):
    rng = np.random.default_rng(51)
    raw = rng.integers(0, maxval + 1, size=(4, 5, 3))
    img = ImageChannels(
        width=5,
        height=4,
        samples=tuple(raw[:, :, c] / maxval for c in range(3)),
        maxval=maxval,
    )
    again = parse_pnm(write_pnm(img, binary=binary))
    assert again.maxval == maxval
    for a, b in zip(img.samples, again.samples):
        assert np.array_equal(a, b)


def test_image_channels_validation():
    with pytest.raises(ValueError):
        ImageChannels(width=2, height=2, samples=(np.zeros((2, 2)),) * 2)
    with pytest.raises(ValueError):
        ImageChannels(width=2, height=2, samples=(np.full((2, 2), 1.5),))
    with pytest.raises(ValueError):
        ImageChannels(width=3, height=2, samples=(np.zeros((2, 2)),))


def test_constant_image_reports_zero():
    img = parse_pnm(b"P2\n2 2\n255\n128 128 128 128\n")
    doc = image_contrast_report(img, "michelson")
    assert all(m.value == 0.0 for m in doc.metrics)


def test_checkerboard_full_contrast():
    img = parse_pnm(b"P2\n2 2\n255\n0 255 255 0\n")
    doc = image_contrast_report(img, "michelson")
    assert doc.metrics[-1].value == 1.0


def test_delta2_mode_diagonal_samples():
    img = ImageChannels(
        width=2, height=2, samples=(np.array([[1.0, 0.0], [0.0, 0.5]]),)
    )
    doc = image_contrast_report(img, "delta2")
    by_name = {m.name: m.value for m in doc.metrics}
    assert by_name["delta2[0]"] == pytest.approx(3 / 5, abs=1e-12)
    assert by_name["delta2_prime"] == pytest.approx(3 / 5, abs=1e-12)


def test_report_json_is_sorted_and_lossless():
    img = parse_pnm(b"P2\n2 1\n255\n13 200\n")
    doc = image_contrast_report(img, "michelson")
    blob = doc.to_json()
    parsed = json.loads(blob)
    assert list(parsed) == sorted(parsed)
    value = parsed["metrics"][0]["value"]
    assert value == doc.metrics[0].value  # json round-trip keeps the double
    with pytest.raises(ValueError):
        image_contrast_report(img, "weber")
