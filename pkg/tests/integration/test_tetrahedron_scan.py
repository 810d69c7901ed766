"""Tetrahedron scans: center against vertices, a full coarse lattice, and reproducibility."""

import asyncio
import itertools

import numpy as np
import pytest

from pauli_forge.circuits import NoiseModel
from pauli_forge.pauli_algebra import tetrahedron_contains, tetrahedron_vertices
from pauli_forge.tomography import ScanConfig, ScanGrid, TomographyConfig, run_scan, write_scan_csv

HARDWARE_LIKE = NoiseModel(lambda_1q=0.002, lambda_2q=0.02, epsilon=0.01)

CENTER = [(0.0, 0.0, 0.0)] + [
    tuple(sign * 0.1 * (axis == i) for i in range(3)) for axis in range(3) for sign in (1.0, -1.0)
]


def _near_vertices():
    points = []
    for vertex in tetrahedron_vertices():
        signs = np.array(vertex)
        for offset in ((0.0, 0.0, 0.0), (0.0, 0.1, 0.1), (0.1, 0.0, 0.1), (0.1, 0.1, 0.0), (0.1, 0.1, 0.1)):
            points.append(tuple(float(x) for x in signs * (1.0 - np.array(offset))))
    return points


NEAR_VERTICES = _near_vertices()


def _scan(points, noise, shots, seed=2024):
    config = ScanConfig(
        grid=ScanGrid(points=points),
        noise=noise,
        tomography=TomographyConfig(shots=shots),
        seed=seed,
        jobs=4,
    )
    return asyncio.run(run_scan(config))


def _distance_to(record, target):
    return float(np.linalg.norm(record.tau.tau[1:] - np.array(target)))


def test_point_sets_are_where_they_claim():
    assert all(np.linalg.norm(p) <= 0.2 for p in CENTER)
    assert all(
        min(np.linalg.norm(np.array(p) - np.array(v)) for v in tetrahedron_vertices()) <= 0.2 + 1e-12
        for p in NEAR_VERTICES
    )


@pytest.mark.slow
def test_center_beats_vertices_under_hardware_noise():
    records = _scan(CENTER + NEAR_VERTICES, HARDWARE_LIKE, shots=8192)
    assert len(records) == len(CENTER) + len(NEAR_VERTICES)
    center = [r.f for r in records if _distance_to(r, (0.0, 0.0, 0.0)) <= 0.2]
    vertex = [
        r.f for r in records if any(_distance_to(r, v) <= 0.2 + 1e-12 for v in tetrahedron_vertices())
    ]
    assert len(center) == len(CENTER)
    assert len(vertex) == len(NEAR_VERTICES)
    assert np.mean(center) > np.mean(vertex)


@pytest.mark.parametrize("lambda_2q", [0.0, 0.02, 0.1])
def test_center_is_never_worse_than_a_vertex(lambda_2q):
    noise = NoiseModel(lambda_1q=lambda_2q / 10, lambda_2q=lambda_2q, epsilon=0.01)
    records = _scan([(0.0, 0.0, 0.0)] + list(tetrahedron_vertices()), noise, shots=None)
    center, vertices = records[0], records[1:]
    assert all(center.f >= v.f - 1e-8 for v in vertices)


def test_sampled_depolarizing_channel_is_close():
    records = _scan([(0.5, 0.5, 0.5)], NoiseModel(), shots=4096)
    assert records[0].f >= 0.95


def test_same_seed_gives_identical_csv(tmp_path):
    points = list(itertools.islice(NEAR_VERTICES, 3)) + CENTER[:2]
    first = write_scan_csv(_scan(points, HARDWARE_LIKE, shots=512, seed=11), tmp_path / "first.csv")
    second = write_scan_csv(_scan(points, HARDWARE_LIKE, shots=512, seed=11), tmp_path / "second.csv")
    assert first.read_bytes() == second.read_bytes()


def test_coarse_lattice_scan_end_to_end():
    grid = ScanGrid(tau3_slices=(0.0,), spacing=0.5)
    config = ScanConfig(
        grid=grid,
        tomography=TomographyConfig(shots=None),
        jobs=2,
        diamond_restarts=8,
        diamond_min_restarts=4,
        diamond_agreement=1e-6,
    )
    records = asyncio.run(run_scan(config))
    # on the tau3 = 0 slice the tetrahedron is the square |tau1| + |tau2| <= 1
    expected = [
        (t1, t2, 0.0)
        for t1 in (-1.0, -0.5, 0.0, 0.5, 1.0)
        for t2 in (-1.0, -0.5, 0.0, 0.5, 1.0)
        if abs(t1) + abs(t2) <= 1.0
    ]
    assert len(records) == len(expected) == 13
    np.testing.assert_allclose([r.tau.tau[1:] for r in records], expected, atol=1e-12)
    for record in records:
        assert tetrahedron_contains(record.tau)
        assert record.f == pytest.approx(1.0, abs=1e-8)
