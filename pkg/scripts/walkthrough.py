"""Walk through the two small worked examples and print what each step gives.

    python scripts/walkthrough.py
"""

from recseq import fixtures
from recseq.oracle import hankel_rank, words_up_to
from recseq.reduction import minimise
from recseq.regular import is_compatible_series, is_proper, minimise_regular, properise
from recseq.series import eval_sequence, eval_series


def show(rep):
    print(f"== {rep.name} (q={rep.q}, dim={rep.dim})")
    print(f"  proper: {is_proper(rep)}  compatible: {is_compatible_series(rep)}")
    vals = "".join(str(eval_series(rep, b)) for b in words_up_to(rep.q, 3))
    print(f"  series on words of length <= 3: {vals}")
    print(f"  sequence n=0..15: {[str(eval_sequence(rep, n)) for n in range(16)]}")
    print(f"  hankel rank L=0..3: {[hankel_rank(rep, L) for L in range(4)]}")
    small = minimise(rep)
    print(f"  minimise (series): dim {small.dim}")
    seq = minimise_regular(rep)
    print(f"  minimise_regular (sequence): dim {seq.dim}")
    if not is_proper(rep):
        print(f"  properise: dim {properise(rep).dim}, proper {is_proper(properise(rep))}")


if __name__ == "__main__":
    for make in fixtures.ALL.values():
        show(make())
