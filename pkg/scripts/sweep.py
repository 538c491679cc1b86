"""Random sweep: how often inputs are proper and how much minimisation saves.

    python scripts/sweep.py --n 500 --seed 1 --max-dim 4
"""

import argparse
import collections
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from corpus import random_proper_rep, random_rep  # noqa: E402

from recseq.oracle import hankel_rank  # noqa: E402
from recseq.reduction import minimise  # noqa: E402
from recseq.regular import is_proper, minimise_regular  # noqa: E402


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=300)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-dim", type=int, default=4)
    parser.add_argument("--proper", action="store_true", help="sample proper representations only")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    drops = collections.Counter()
    improper = naive_wrong = 0
    start = time.perf_counter()
    for _ in range(args.n):
        q, d = rng.choice((2, 3)), rng.randint(0, args.max_dim)
        rep = (random_proper_rep if args.proper else random_rep)(rng, q, d)
        small = minimise(rep)
        assert hankel_rank(rep, small.dim) == small.dim
        seq = minimise_regular(rep)
        drops[(d, small.dim, seq.dim)] += 1
        if not is_proper(rep):
            improper += 1
            naive_wrong += small.dim != seq.dim
    elapsed = time.perf_counter() - start
    print(f"{args.n} representations in {elapsed:.1f}s; {improper} improper")
    print(f"improper inputs whose series dimension differs from their sequence dimension: {naive_wrong}")
    print("input dim -> series dim, sequence dim: count")
    for (d, s, r), c in sorted(drops.items()):
        print(f"  {d} -> {s}, {r}: {c}")


if __name__ == "__main__":
    main()
