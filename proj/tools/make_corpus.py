"""Regenerates the bundled instance corpus under corpus/ (deterministic)."""

import itertools
import pathlib
import random

OUT = pathlib.Path(__file__).resolve().parent.parent / "corpus"


def write(name, n, comment, fields=(), couplings=()):
    lines = [f"# {comment}", f"n {n}"]
    lines += [f"h {x} {v!r}" for x, v in fields if v != 0]
    lines += [f"J {x} {y} {v!r}" for x, y, v in couplings]
    (OUT / name).write_text("\n".join(lines) + "\n")


def main():
    OUT.mkdir(exist_ok=True)
    rng = random.Random(20240611)

    write("single_field.txt", 1, "one spin in a unit field", fields=[(0, 1)])
    write("single_free.txt", 1, "one free spin")
    write("ferro2.txt", 2, "two-vertex ferromagnet, J = 1", couplings=[(0, 1, 1)])
    write("triangle_afm.txt", 3, "frustrated antiferromagnetic triangle",
          couplings=[(0, 1, -1), (0, 2, -1), (1, 2, -1)])
    write("mixed3.txt", 3, "three spins, mixed signs, integer fields",
          fields=[(0, 1), (2, -1)], couplings=[(0, 1, 2), (1, 2, -1), (0, 2, 1)])
    write("field_only4.txt", 4, "fields only",
          fields=[(0, 0.7), (1, -1.3), (2, 0.25), (3, 2.0)])
    write("random4.txt", 4, "complete graph, +-1 couplings, integer fields",
          fields=[(x, rng.choice([-1, 0, 1])) for x in range(4)],
          couplings=[(x, y, rng.choice([-1, 1])) for x, y in itertools.combinations(range(4), 2)])
    write("double_well4.txt", 4,
          "chain with a metastable well of depth 2: ground state +++-, trap ---+",
          fields=[(0, 1)], couplings=[(0, 1, 2), (1, 2, 2), (2, 3, -2)])
    write("ferro_path6.txt", 6, "ferromagnetic path, zero field",
          couplings=[(x, x + 1, 1) for x in range(5)])
    write("frustrated6.txt", 6, "ring of six with one antiferromagnetic bond and two chords",
          couplings=[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (0, 5, -1),
                     (0, 3, -1), (1, 4, 1)])
    write("gauss8.txt", 8, "sparse Gaussian couplings and fields",
          fields=[(x, round(rng.gauss(0, 0.5), 6)) for x in range(8)],
          couplings=[(x, y, round(rng.gauss(0, 1), 6))
                     for x, y in itertools.combinations(range(8), 2) if rng.random() < 0.4])
    write("sk10.txt", 10, "Sherrington-Kirkpatrick, +-1 couplings",
          couplings=[(x, y, rng.choice([-1, 1])) for x, y in itertools.combinations(range(10), 2)])
    write("field_only10.txt", 10, "fields only",
          fields=[(x, round(rng.uniform(-2, 2), 6)) for x in range(10)])
    write("ferro_zero7.txt", 7, "zero-coupling ferromagnet: listed edges with J = 0",
          couplings=[(x, x + 1, 0) for x in range(6)])


if __name__ == "__main__":
    main()
