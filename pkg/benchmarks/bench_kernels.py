"""Time the compiled kernels against the pure-numpy fallback.

Usage: python3 benchmarks/bench_kernels.py [--pixels N] [--normals K]
Both backends run in-process (the fallback is called directly), so the
comparison needs no reinstall or environment flag.

Measured on one core: the numpy MLV (BLAS matmul form) beats the compiled
scalar loop at every size, so skyps routes MLV through numpy always; GGX
shading has no matmul form and the compiled loop wins ~2x there.
"""
import argparse
import time

import numpy as np

from skyps import _kernels


def _time(fn, *args, repeats=3):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pixels", type=int, default=2048,
                    help="environment-map pixels (default 64x32)")
    ap.add_argument("--normals", type=int, default=8192)
    ap.add_argument("--maps", type=int, default=8)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    dirs = rng.normal(size=(args.pixels, 3))
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    normals = rng.normal(size=(args.normals, 3))
    normals /= np.linalg.norm(normals, axis=1, keepdims=True)
    lhats = rng.gamma(1.5, 2.0, size=(args.maps, args.pixels))
    lw = rng.gamma(1.5, 2.0, size=(args.pixels, 3))
    view = np.array([0.0, -1.0, 0.0])     # surface-to-camera
    rho_c = np.array([0.6, 0.5, 0.4])

    print(f"active backend: {_kernels.backend()}   "
          f"pixels={args.pixels} normals={args.normals} maps={args.maps}")
    rows = []

    t_np, ref = _time(_kernels._mlv_batch_np, lhats, dirs, normals)
    if _kernels._core is not None:
        lhatsT = np.ascontiguousarray(lhats.T)
        t_c, out = _time(_kernels._core.mlv_batch, lhatsT, dirs, normals)
        assert np.allclose(out, ref, rtol=1e-12, atol=1e-12)
    else:
        t_c = np.nan
    rows.append(("mlv_batch", t_c, t_np))

    t_np, ref = _time(_kernels._shade_ggx_np, lw, dirs, normals, view,
                      rho_c, 0.4, 0.5)
    if _kernels._core is not None:
        t_c, out = _time(_kernels._core.shade_ggx_batch, lw, dirs, normals,
                         view, rho_c, 0.4, 0.5)
        assert np.allclose(out, ref, rtol=1e-12, atol=1e-12)
    else:
        t_c = np.nan
    rows.append(("shade_ggx_batch", t_c, t_np))

    print(f"{'kernel':<16}{'cython':>10}{'numpy':>10}{'speedup':>9}")
    for name, t_c, t_np in rows:
        ratio = t_np / t_c if np.isfinite(t_c) else np.nan
        print(f"{name:<16}{1e3 * t_c:>9.1f}ms{1e3 * t_np:>8.1f}ms"
              f"{ratio:>8.1f}x")


if __name__ == "__main__":
    main()
