"""Event-locked trial warping by windowed-sinc resampling."""

from ._timelock import (
    DtwResult,
    IntervalReport,
    PadMode,
    Partition,
    SincConfig,
    TimelockError,
    Trial,
    WarpReport,
    WarpSpec,
    WindowKind,
    align_batch,
    dtw,
    energy,
    generate,
    partition_from_events,
    pearson,
    plan_warp,
    power,
    resample,
    resample_padded,
    warp_trial,
)

__all__ = [
    "DtwResult",
    "IntervalReport",
    "PadMode",
    "Partition",
    "SincConfig",
    "TimelockError",
    "Trial",
    "WarpReport",
    "WarpSpec",
    "WindowKind",
    "align_batch",
    "dtw",
    "energy",
    "generate",
    "partition_from_events",
    "pearson",
    "plan_warp",
    "power",
    "resample",
    "resample_padded",
    "warp_trial",
]
