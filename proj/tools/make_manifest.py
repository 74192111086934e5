#!/usr/bin/env python3
"""Writes the acceptance corpus manifest (tests/corpus/manifest.txt).

Usage: make_manifest.py [p5color binary] > manifest.txt

With a p5color binary, er_rejection entries that fail to generate are
replaced by the next seed.
"""
import random
import subprocess
import sys


def generates(binary, fields):
    if binary is None:
        return True
    args = [binary, "gen", "--family", "er_rejection"]
    for key in ("n", "p", "seed"):
        args += ["--" + key, str(fields[key])]
    return subprocess.run(args, capture_output=True).returncode == 0


def main():
    binary = sys.argv[1] if len(sys.argv) > 1 else None
    rng = random.Random(20240517)
    lines = ["# id family key=value ...  (regenerate with tools/make_manifest.py)"]
    seed = 1000

    for i in range(150):
        n = rng.randint(4, 14)
        clique = rng.choice([0, 2, 3, 3, 4, 5])
        clique = min(clique, n)
        p = rng.choice([0.2, 0.35, 0.5, 0.7])
        seed += 1
        lines.append(f"split-{i:03d} split n={n} p={p} clique={clique} seed={seed}")

    for i in range(150):
        n = rng.randint(4, 14)
        p = rng.choice([0.3, 0.5, 0.7])
        seed += 1
        lines.append(f"cograph-{i:03d} cograph n={n} p={p} seed={seed}")

    for i in range(100):
        while True:
            parts = [rng.randint(1, 4) for _ in range(rng.randint(2, 5))]
            if sum(parts) <= 14:
                break
        seed += 1
        lines.append(f"multipartite-{i:03d} multipartite parts={','.join(map(str, parts))} seed={seed}")

    for i in range(120):
        n = rng.randint(5, 12)
        p = rng.choice([0.2, 0.3, 0.5, 0.7, 0.8])
        seed += 1
        while not generates(binary, {"n": n, "p": p, "seed": seed}):
            seed += 1
        lines.append(f"er-{i:03d} er_rejection n={n} p={p} seed={seed}")

    print("\n".join(lines))


if __name__ == "__main__":
    main()
