import os
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]


def backend_with(env_value):
    env = dict(os.environ)
    env.pop("GORLAB_PURE_PYTHON", None)
    if env_value is not None:
        env["GORLAB_PURE_PYTHON"] = env_value
    out = subprocess.run([sys.executable, "-c", "import gorlab; print(gorlab.BACKEND)"], env=env,
                         capture_output=True, text=True, check=True)
    return out.stdout.strip()


def test_fallback_forced_by_environment():
    assert backend_with("1") == "python"


def test_default_backend_is_compiled_when_built():
    try:
        import gorlab._kernels  # noqa: F401
    except ImportError:
        assert backend_with(None) == "python"
    else:
        assert backend_with(None) == "cython"


def test_fallback_backend_runs_a_classification():
    env = dict(os.environ, GORLAB_PURE_PYTHON="1")
    code = ("from gorlab import algebra_from_monomial_quotient, GF, trace_ideal_and_residue\n"
            "a = algebra_from_monomial_quotient(['x','y'], ['x^3','x^2*y','x*y^2','y^3'], GF(3))\n"
            "print(trace_ideal_and_residue(a)[1])")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "3"


def test_benchmark_smoke():
    sys.path.insert(0, str(ROOT / "benchmarks"))
    try:
        import bench_rref
    finally:
        sys.path.pop(0)
    rows = bench_rref.main(["--sizes", "8,16", "--primes", "2,7", "--repeat", "1"])
    assert len(rows) == 4
