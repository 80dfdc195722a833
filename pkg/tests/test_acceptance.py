"""Acceptance gate: one test per shipping criterion, tolerances pinned here.

Run with ``pytest tests/test_acceptance.py -v`` for one pass/fail line per
criterion (add ``-s`` to see the PASS summaries as they are produced).
"""

import math
import time

import numpy as np
import pytest

from stegbench import (
    BenchMode,
    CapacityError,
    Channel,
    CmaxMode,
    ExperimentSpec,
    Method,
    RgbImage,
    StegoKey,
    bytes_to_bits,
    capacity_bits,
    channel_for_index,
    default_karim_key,
    embed_bits,
    embed_message,
    emit_table,
    extract_lsb,
    extract_message,
    payload_capacity_bytes,
    psnr,
    replace_lsb,
    run_experiment,
    save_image,
)

ROUND_TRIP_PAIRS = 200
ROUND_TRIP_BUDGET_S = 30.0
PSNR_FLOOR_DB = 52.90
PSNR_EXPECTED_DB = 55.9
PSNR_EXPECTED_TOL_DB = 1.0
HALF_FLIP_RATE = 0.50
HALF_FLIP_TOL = 0.05
ORACLE_REL_TOL = 1e-9
ORACLE_PAIRS = 100

KEY = StegoKey.from_hex("5ec2e7")


def _random_cover(rng, max_side=64, min_side=6):
    width = int(rng.integers(min_side, max_side + 1))
    height = int(rng.integers(min_side, max_side + 1))
    return RgbImage(rng.integers(0, 256, size=(height, width, 3), dtype=np.uint8))


def test_criterion_01_round_trip_suite():
    """Every method recovers every message exactly, within the time budget."""
    rng = np.random.default_rng(0xC0DE)
    started = time.perf_counter()
    for method in Method:
        key = KEY if method is Method.KARIM else None
        for _ in range(ROUND_TRIP_PAIRS):
            cover = _random_cover(rng)
            size = int(rng.integers(0, payload_capacity_bytes(cover) + 1))
            message = rng.integers(0, 256, size=size, dtype=np.uint8).tobytes()
            stego = embed_message(cover, message, method, key).stego
            assert extract_message(stego, method, key) == message
    elapsed = time.perf_counter() - started
    assert elapsed < ROUND_TRIP_BUDGET_S
    print(f"acceptance criterion 01 PASS: {ROUND_TRIP_PAIRS} round trips per method "
          f"in {elapsed:.2f}s (budget {ROUND_TRIP_BUDGET_S:.0f}s)")


def test_criterion_02_worked_example_decimals():
    """The eight published sample values absorb "B" bit-exactly."""
    cover_samples = np.array([143, 134, 126, 99, 44, 134, 79, 127], dtype=np.uint8)
    message_bits = bytes_to_bits(b"B")
    stego_samples = replace_lsb(cover_samples, message_bits)
    assert stego_samples.tolist() == [142, 135, 126, 98, 44, 134, 79, 126]
    assert extract_lsb(stego_samples).tolist() == message_bits.tolist()
    print("acceptance criterion 02 PASS: worked-example decimals reproduced bit-exactly")


def test_criterion_03_channel_cycle_order():
    """Index walk selects R, G, B, R, G, B, ... with no counter reset."""
    got = [channel_for_index(i) for i in range(9)]
    assert got == [Channel.RED, Channel.GREEN, Channel.BLUE] * 3
    print("acceptance criterion 03 PASS: channel walk is R,G,B,R,G,B,R,G,B")


def test_criterion_04_psnr_floor_and_expected_band():
    """Full-capacity cyclic embedding cannot fall below the distortion floor."""
    rng = np.random.default_rng(404)
    cover = RgbImage(rng.integers(0, 256, size=(256, 256, 3), dtype=np.uint8))
    nbits = capacity_bits(cover)

    # adversarial payload: complement every scheduled LSB, forcing all
    # 65536 samples to move by one level - the worst case there is
    flat = cover.pixels.reshape(-1, 3)
    scheduled = flat[np.arange(nbits), np.arange(nbits) % 3]
    worst_payload = (1 - (scheduled & 1)).astype(np.uint8)
    report = embed_bits(cover, worst_payload, Method.CYCLIC)
    assert report.samples_changed == nbits
    worst = psnr(cover, report.stego, CmaxMode.FIXED_255).psnr_db
    assert worst >= PSNR_FLOOR_DB

    # typical payloads sit in the expected band around 55.9 dB
    band = []
    for seed in range(5):
        payload = np.random.default_rng(seed).integers(0, 2, size=nbits, dtype=np.uint8)
        stego = embed_bits(cover, payload, Method.CYCLIC).stego
        value = psnr(cover, stego, CmaxMode.FIXED_255).psnr_db
        assert abs(value - PSNR_EXPECTED_DB) <= PSNR_EXPECTED_TOL_DB
        band.append(value)
    print(f"acceptance criterion 04 PASS: worst case {worst:.4f} dB >= {PSNR_FLOOR_DB}, "
          f"random payloads {min(band):.2f}..{max(band):.2f} dB within "
          f"{PSNR_EXPECTED_DB}+/-{PSNR_EXPECTED_TOL_DB}")


def test_criterion_05_half_flip_statistic():
    """About half of all embedded positions actually change."""
    fractions = []
    for seed in range(3):
        rng = np.random.default_rng(seed + 50)
        cover = RgbImage(rng.integers(0, 256, size=(128, 128, 3), dtype=np.uint8))
        nbits = capacity_bits(cover)  # 16384 >= 10**4
        assert nbits >= 10**4
        payload = rng.integers(0, 2, size=nbits, dtype=np.uint8)
        report = embed_bits(cover, payload, Method.CYCLIC)
        fraction = report.samples_changed / report.bits_embedded
        assert abs(fraction - HALF_FLIP_RATE) <= HALF_FLIP_TOL
        fractions.append(fraction)
    print(f"acceptance criterion 05 PASS: flip fractions "
          f"{', '.join(f'{f:.4f}' for f in fractions)} within "
          f"{HALF_FLIP_RATE}+/-{HALF_FLIP_TOL}")


def test_criterion_06_metrics_match_independent_oracle():
    """Library MSE/PSNR agree with a brute-force double loop to 1e-9 relative."""

    def oracle(cover, stego, cmax_mode):
        ca, sa = cover.pixels, stego.pixels
        height, width, _ = ca.shape
        sums = [0, 0, 0]
        peak = 0
        for y in range(height):
            for x in range(width):
                for c in range(3):
                    a, b = int(ca[y, x, c]), int(sa[y, x, c])
                    sums[c] += (a - b) ** 2
                    peak = max(peak, a, b)
        channel_mse = [s / (width * height) for s in sums]
        combined = sum(channel_mse) / 3.0
        cmax = 255 if cmax_mode is CmaxMode.FIXED_255 else peak
        value = math.inf if combined == 0 else 10.0 * math.log10(cmax * cmax / combined)
        return channel_mse, combined, value, cmax

    def close(a, b):
        if math.isinf(a) or math.isinf(b):
            return a == b
        return abs(a - b) <= ORACLE_REL_TOL * max(1.0, abs(b))

    rng = np.random.default_rng(606)
    for i in range(ORACLE_PAIRS):
        cover = _random_cover(rng, max_side=12, min_side=1)
        if i % 5 == 0:
            stego = cover  # keep the infinite-PSNR branch honest
        else:
            stego = RgbImage(rng.integers(
                0, 256, size=cover.pixels.shape, dtype=np.uint8))
        mode = CmaxMode.FIXED_255 if i % 2 == 0 else CmaxMode.OBSERVED_MAX
        want_channels, want_mse, want_psnr, want_cmax = oracle(cover, stego, mode)
        report = psnr(cover, stego, mode)
        assert all(close(g, w) for g, w in zip(report.per_channel_mse, want_channels))
        assert close(report.mse, want_mse)
        assert close(report.psnr_db, want_psnr)
        assert report.cmax == want_cmax
    print(f"acceptance criterion 06 PASS: {ORACLE_PAIRS} image pairs match the "
          f"brute-force oracle to {ORACLE_REL_TOL} relative")


def test_criterion_07_psnr_trend_over_cipher_sizes(tmp_path):
    """Bigger ciphers never improve PSNR, for any method."""
    rng = np.random.default_rng(707)
    cover_path = tmp_path / "trend.png"
    save_image(RgbImage(rng.integers(0, 256, size=(256, 256, 3), dtype=np.uint8)),
               cover_path)
    spec = ExperimentSpec(
        mode=BenchMode.CIPHER,
        image_paths=(str(cover_path),),
        cipher_sizes_kb=(2, 4, 6, 8),
        methods=tuple(Method),
        seed=0,
        key=default_karim_key(0),
        cmax_mode=CmaxMode.FIXED_255,
    )
    table = run_experiment(spec)
    for method in Method:
        column = [table.cells[(row, method)] for row in table.rows]
        assert all(cell.error is None for cell in column), [c.error for c in column]
        values = [cell.psnr_db for cell in column]
        assert all(a >= b for a, b in zip(values, values[1:])), (method, values)
    print("acceptance criterion 07 PASS: PSNR non-increasing over 2,4,6,8 KB "
          "for every method")


def test_criterion_08_capacity_equality():
    """Exactly width*height bits fit; one more is refused."""
    for width, height in [(256, 256), (31, 17)]:
        cover = RgbImage(np.random.default_rng(808).integers(
            0, 256, size=(height, width, 3), dtype=np.uint8))
        limit = width * height
        assert capacity_bits(cover) == limit
        for method in Method:
            key = KEY if method is Method.KARIM else None
            assert embed_bits(cover, np.ones(limit, dtype=np.uint8), method,
                              key).bits_embedded == limit
            with pytest.raises(CapacityError):
                embed_bits(cover, np.ones(limit + 1, dtype=np.uint8), method, key)
    print("acceptance criterion 08 PASS: all methods accept exactly M*N bits "
          "and reject M*N+1")


def test_criterion_09_channel_discipline():
    """Each method writes only the planes its rule allows."""
    for seed in range(20):
        rng = np.random.default_rng(seed)
        cover = RgbImage(rng.integers(0, 256, size=(16, 16, 3), dtype=np.uint8))
        payload = rng.integers(0, 2, size=256, dtype=np.uint8)

        classic = embed_bits(cover, payload, Method.CLASSIC_LSB).stego
        assert np.array_equal(classic.plane(Channel.RED), cover.plane(Channel.RED))
        assert np.array_equal(classic.plane(Channel.GREEN), cover.plane(Channel.GREEN))

        karim = embed_bits(cover, payload, Method.KARIM, KEY).stego
        assert np.array_equal(karim.plane(Channel.RED), cover.plane(Channel.RED))

        cyclic = embed_bits(cover, payload, Method.CYCLIC).stego
        changed = (cyclic.pixels != cover.pixels).reshape(-1, 3)
        assert changed.sum(axis=1).max() <= 1
        for i in np.flatnonzero(changed.any(axis=1)):
            assert changed[i, int(channel_for_index(int(i)))]
    print("acceptance criterion 09 PASS: plane discipline held over 20 "
          "randomized 16x16 trials")


def test_criterion_10_bench_determinism(tmp_path):
    """Identical spec and seed emit byte-identical CSV."""
    rng = np.random.default_rng(1010)
    cover_path = tmp_path / "det.png"
    save_image(RgbImage(rng.integers(0, 256, size=(64, 64, 3), dtype=np.uint8)),
               cover_path)

    def fresh_run():
        spec = ExperimentSpec(
            mode=BenchMode.CIPHER,
            image_paths=(str(cover_path),),
            cipher_sizes_kb=(0, 0, 0),  # dedup labels must also be stable
            methods=tuple(Method),
            seed=42,
            key=default_karim_key(42),
            cmax_mode=CmaxMode.FIXED_255,
        )
        return emit_table(run_experiment(spec), "csv").encode()

    first, second = fresh_run(), fresh_run()
    assert first == second
    print("acceptance criterion 10 PASS: repeated runs emit byte-identical CSV "
          f"({len(first)} bytes)")
