import math

import numpy as np
import pytest

import timelock as tl


def test_synthetic_trial_defaults():
    t = tl.generate()
    assert len(t) == 8192
    assert t.f_samp == 2048.0
    assert t.nyquist == 1024.0
    assert [i for i, _ in t.events] == [2048, 4096, 6144]


def test_identity_warp():
    t = tl.generate(duration=1.0)
    p = tl.partition_from_events(t)
    n1 = p.t1[1] - p.t1[0]
    n2 = p.t2[1] - p.t2[0]
    spec = tl.plan_warp(p, n1, n2, 0.1, t.f_samp)
    rep = tl.warp_trial(t, p, spec)
    assert np.max(np.abs(rep.warped.samples - t.samples)) <= 1e-9
    for iv in rep.per_interval:
        assert iv.correlation == pytest.approx(1.0, abs=1e-12)
        assert iv.dtw.distance == 0.0


def test_contract_expand_quality():
    t = tl.generate(duration=2400 / 2048)
    p = tl.partition_from_events(t)
    spec = tl.plan_warp(p, 480, 720, 0.1, t.f_samp)
    assert spec.r1 == 1.25
    rep = tl.warp_trial(t, p, spec)
    assert len(rep.warped) == len(t)
    for iv in rep.per_interval:
        assert iv.correlation >= 0.85
        assert iv.dtw.similarity >= 0.99
        assert abs(iv.energy_ratio - 1.0) <= 0.01


def test_align_batch_matches_events():
    a = tl.generate(duration=1.0, event_fracs=(0.1, 0.4, 0.9))
    b = tl.generate(duration=1.0, event_fracs=(0.1, 0.6, 0.9))
    out = tl.align_batch([a, b])
    assert out[0].warped.events == out[1].warped.events


def test_resample_and_metrics():
    x = np.sin(2 * math.pi * 5 * np.arange(2048) / 2048)
    y = tl.resample(x, 4095)
    grid = np.arange(4095) * (2047 / 4094) / 2048
    inner = slice(64, -64)
    assert np.max(np.abs(y[inner] - np.sin(2 * math.pi * 5 * grid[inner]))) <= 1e-6
    assert tl.pearson([1, 2, 3], [2, 4, 7]) == pytest.approx(0.9933992677987828)
    r = tl.dtw([0, 0, 1, 1], [0, 1, 1])
    assert r.distance == 0.0
    assert r.path == [(0, 0), (1, 0), (2, 1), (3, 2)]
    assert r.cost_matrix.shape == (4, 3)
    assert tl.energy([3, 4]) == 25.0


def test_errors_carry_codes():
    with pytest.raises(tl.TimelockError) as e:
        tl.generate(f_samp=1024, f1=600, f2=700)
    assert e.value.code == "NyquistViolation"
    with pytest.raises(ValueError):
        tl.Trial([1.0, float("nan")], 2048.0)
    with pytest.raises(tl.TimelockError):
        tl.resample([1.0], 4)
