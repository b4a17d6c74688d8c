"""Walk a qubit through the fuzzy pipeline: gate, fuzzify, defuzzify
both ways, then check a two-qubit state for entanglement.

The demo prepares |0>, applies a Hadamard gate, turns the amplitudes
into membership grades (|amplitude|^2), and collapses the fuzzy state
twice: once by argmax (deterministic, ties to 0) and once by a seeded
Born-rule draw.  It then estimates the Born frequency over many draws
and finishes with the amplitude-determinant entanglement test on a Bell
pair and on a product state.

Usage:
    python3 scripts/qubit_demo.py
    python3 scripts/qubit_demo.py --seed 7 --draws 500000
"""

import argparse
from dataclasses import dataclass

import numpy as np

from vagueq import (
    amplitude_determinant,
    apply_hadamard,
    bell_state,
    born_sample_many,
    defuzzify,
    fuzzify,
    is_entangled,
    ket0,
    tensor_product,
)


@dataclass(frozen=True)
class DemoConfig:
    seed: int = 0
    draws: int = 100000


def parse_args(argv=None) -> DemoConfig:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=0, help="seed for Born draws")
    p.add_argument("--draws", type=int, default=100000, help="Born sample size")
    ns = p.parse_args(argv)
    return DemoConfig(ns.seed, ns.draws)


def main(argv=None) -> int:
    cfg = parse_args(argv)

    state = apply_hadamard(ket0())
    print(f"H|0> amplitudes: a0 = {state.a0:.9f}, a1 = {state.a1:.9f}")

    fuzzy = fuzzify(state)
    print(f"membership grades: mu0 = {fuzzy.mu0:.9f}, mu1 = {fuzzy.mu1:.9f}")
    print(f"born_compatible = {fuzzy.born_compatible}")

    print(f"defuzzify argmax      -> {defuzzify(fuzzy, method='argmax')} "
          "(equal grades tie to 0)")
    print(f"defuzzify born seed={cfg.seed} -> "
          f"{defuzzify(fuzzy, method='born_sample', seed=cfg.seed)}")

    outcomes = born_sample_many(fuzzy, cfg.draws, seed=cfg.seed)
    freq0 = float(np.mean(outcomes == 0))
    print(f"born frequency of 0 over {cfg.draws} draws: {freq0:.5f}")

    print()
    bell = bell_state()
    print(f"bell pair: |det| = {abs(amplitude_determinant(bell)):.9f}, "
          f"entangled = {is_entangled(bell)}")
    product = tensor_product(apply_hadamard(ket0()), ket0())
    print(f"(H|0>) x |0>: |det| = {abs(amplitude_determinant(product)):.9f}, "
          f"entangled = {is_entangled(product)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
