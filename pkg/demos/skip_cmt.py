"""MeanFlow post-training with and without the consistency warm start.

Both runs start from the same flow-matching teacher. One goes through CMT first,
the other jumps straight to MFD (the pipeline refuses this unless asked). The
gradient-norm telemetry of the two MFD stages is summarized side by side.
"""
import tempfile
from pathlib import Path

from meanflow_lab.analysis import instability_summary
from meanflow_lab.pipeline import ExperimentConfig, run_cmt, run_mf, run_pretrain

root = Path(__file__).resolve().parents[1]
cfg = ExperimentConfig.load(root / "configs" / "desk.toml")
for stage, n in (("pretrain", 1500), ("cmt", 500), ("mfd", 500)):
    cfg.stages[stage].iterations = n

with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    teacher = run_pretrain(cfg)
    warm = run_cmt(cfg, teacher)
    run_mf(cfg, warm, teacher, "mfd", metrics_path=tmp / "with_cmt.csv")
    run_mf(cfg, teacher, teacher, "mfd", allow_no_cmt=True, metrics_path=tmp / "without_cmt.csv")
    for name in ("with_cmt", "without_cmt"):
        rep = instability_summary(tmp / f"{name}.csv", threshold=50.0)["mfd"]
        print(f"{name:>12}: max grad norm {rep['max_grad_norm']:.2f}, first step above 50: "
              f"{rep['first_spike']}, final loss {rep['final_loss']:.4f}")
