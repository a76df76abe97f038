import os
import subprocess
import sys
from pathlib import Path

from ascseq import kernel

ROOT = Path(__file__).resolve().parents[1]


def _backend_with(env_value):
    env = dict(os.environ)
    env.pop("ASCSEQ_PURE_PYTHON", None)
    if env_value is not None:
        env["ASCSEQ_PURE_PYTHON"] = env_value
    out = subprocess.run([sys.executable, "-c", "import ascseq; print(ascseq.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    return out.stdout.strip()


def test_fallback_forced_by_env():
    assert _backend_with("1") == "python"


def test_default_prefers_compiled_kernel():
    expected = "cython" if "cython" in kernel.backends() else "python"
    assert _backend_with(None) == expected
    assert _backend_with("0") == expected


def test_benchmark_runs(capsys):
    sys.path.insert(0, str(ROOT / "benchmarks"))
    try:
        import bench_kernels
        bench_kernels.main(["--nmax", "5", "--repeat", "1"])
    finally:
        sys.path.pop(0)
    out = capsys.readouterr().out
    assert "201,210" in out and out.count("\n") >= len(bench_kernels.CASES) + 1
