"""Minimal semifree resolutions and regularity, step by step.

The running example is the square-zero algebra L = k[T]/(T^2) with T in
cohomological degree 1 and zero differential.  Its canonical module k
has a minimal semifree resolution with one new degree-0 generator per
stage, forever: degree-bounded but infinitely generated.  The script
builds six stages, prints the ledger, and reads off Koszulness and the
Ext regularity, then does the same over the polynomial algebras k[T]
with |T| = d, where two generators suffice and Extreg k = d - 1.

Run:  python3 demos/resolve_and_regularity.py
"""

from dgreg import canonical_k, ext_reg, extreg_symmetry, koszul_test, semifree_resolve
from dgreg.catalog import polynomial_algebra, square_zero_algebra


def show_ledger(res):
    for g in res.gens:
        row = res.diff.get(g.label, {})
        drow = " + ".join(
            f"({' + '.join(str(c) + '*' + a for a, c in combo.items())})*{h}"
            for h, combo in sorted(row.items())
        ) or "0"
        aug = res.aug.get(g.label, {})
        arow = " + ".join(f"{c}*{m}" for m, c in aug.items()) or "0"
        print(f"  {g.label}  degree {g.degree}  stage {g.stage}   d{g.label} = {drow}   eps({g.label}) = {arow}")


def main():
    print("== k over Lambda = k[T]/(T^2), |T| = 1 ==")
    Lam = square_zero_algebra()
    k = canonical_k(Lam, side="left")
    res = semifree_resolve(k, max_stages=6)
    show_ledger(res)
    print(f"  minimal: {res.minimal}; complete in window: {res.complete}")
    print(f"  Extreg k = {ext_reg(k, resolution=res)}")
    print(f"  Koszul? {koszul_test(Lam).value}")
    print()

    for d in (1, 2, 3):
        print(f"== k over k[T], |T| = {d} ==")
        P = polynomial_algebra(d)
        kp = canonical_k(P, side="left")
        resp = semifree_resolve(kp, max_stages=6)
        show_ledger(resp)
        print(f"  complete: {resp.complete}")
        print(f"  Extreg k = {ext_reg(kp, resolution=resp)}   (expected {d - 1})")
        print(f"  Koszul? {koszul_test(P).value}   (expected {d == 1})")
        sym = extreg_symmetry(P)
        print(f"  two-sided symmetry: left {sym['left']} = right {sym['right']}")
        print()


if __name__ == "__main__":
    main()
