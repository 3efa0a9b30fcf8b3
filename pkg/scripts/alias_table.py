"""Print which sign twists fix each sample indecomposable, per algebra."""
from greenring.decompose import alias_sweep
from greenring.labels import format_label


def sign(t):
    return "".join("+" if s > 0 else "-" for s in t)


for alg in ("mabar", "DH4", "HH"):
    print(f"== {alg}")
    for fam, per in alias_sweep(alg).items():
        stabs = {frozenset(v) for v in per.values()}
        uniform = len(stabs) == 1
        rep = ", ".join(sorted(sign(t) for t in next(iter(stabs))))
        print(f"  {fam:7s} stabilizer {{{rep}}} over {len(per)} samples"
              + ("" if uniform else "  (NOT uniform: " + ", ".join(
                  f"{format_label(k)}:{sorted(map(sign, v))}" for k, v in per.items()) + ")"))
