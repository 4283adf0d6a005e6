"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 20]

Shapes match one training step of the default network (12000 samples,
32 residual channels) and one second of 16 kHz audio for the F0 tracker.
"""
import argparse
import timeit

import numpy as np

from periodgrad import _kernels_py

try:
    from periodgrad import _kernels_c
except ImportError:
    _kernels_c = None


def cases(rng):
    a = rng.standard_normal((12000, 64)).astype(np.float32)
    _, th, sg = _kernels_py.gate_forward(a)
    dz = rng.standard_normal((12000, 32)).astype(np.float32)
    frames = rng.standard_normal((200, 640))
    step = rng.uniform(0, 0.2, 16000)
    return {
        "gate_forward (12000x64 f32)": lambda k: k.gate_forward(a),
        "gate_backward (12000x32 f32)": lambda k: k.gate_backward(dz, th, sg),
        "yin_cmnd (200 frames, lag 320)": lambda k: k.yin_cmnd(frames, 320),
        "phase_accumulate (16000)": lambda k: k.phase_accumulate(step),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args(argv)
    backends = [("python", _kernels_py)] + ([("cython", _kernels_c)] if _kernels_c else [])
    if _kernels_c is None:
        print("compiled extension not built; timing the numpy fallback only")
    print(f"{'kernel':34s}" + "".join(f"{name:>12s}" for name, _ in backends) + ("     speedup" if _kernels_c else ""))
    for label, fn in cases(np.random.default_rng(0)).items():
        times = []
        for _, mod in backends:
            fn(mod)
            times.append(min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat)))
        row = f"{label:34s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
