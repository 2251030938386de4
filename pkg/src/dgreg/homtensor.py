"""Chain-level tensor and Hom against semifree ledgers.

With P a semifree left module with generator ledger, the complexes

    N  tensor_A  P   (N a right module)        and
    Hom_A(P, N)      (N a left module)

are degreewise computable: the underlying graded pieces are sums,
respectively products, of shifted copies of N indexed by generators.
The differentials combine d_N with the ledger's A-coefficients acting
on N; Koszul signs as documented on each function.
"""

from __future__ import annotations

from .ledger import SemifreeResolution
from .lincomb import cadd, czero
from .module import DGModule, LEFT, RIGHT
from .windows import GradedWindow, Trust


def _meet_gen_trust(trust: Trust, gens, n_trust: Trust, sign: int) -> Trust:
    """Trust of degrees j with j + sign*|g| inside n_trust for every g."""
    for g in gens:
        off = sign * g.degree
        lo = None if n_trust.lo is None else n_trust.lo - off
        hi = None if n_trust.hi is None else n_trust.hi - off
        trust = trust.meet(Trust(lo, hi))
    return trust


def realize_ledger(L: SemifreeResolution, window: GradedWindow, name: str | None = None) -> DGModule:
    """The free left module underlying a ledger, as a presentation.

    Basis of degree n: pairs b*g with b an algebra basis label of degree
    n - |g|.  d(b e_g) = d(b) e_g + (-1)^{|b|} sum_h (b a_{gh}) e_h; the
    left action is multiplication into the b coordinate.  Missing
    algebra products above the algebra window cap the trust.
    """
    A = L.algebra
    F = A.field
    lbl = {}
    basis: dict = {}
    for n in window.degrees():
        row = []
        for g in L.gens:
            for b in A.basis_at(n - g.degree):
                lab = f"{b}*{g.label}"
                lbl[(b, g.label)] = lab
                row.append(lab)
        if row:
            basis[n] = tuple(row)

    trust = _meet_gen_trust(Trust.everywhere(), L.gens, A.trust, -1)
    bound = L.ledger_bound
    if bound is not None:
        # unwritten future generators would populate degrees >= bound
        trust = trust.cap_hi(bound - 1)
    if L.gens:
        # the window may cut honest content of the free module
        a_top = A.trust.hi if A.trust.hi is not None else (max(A.basis) if A.basis else 0)
        if max(g.degree for g in L.gens) + a_top > window.hi:
            trust = trust.cap_hi(window.hi)
        if min(g.degree for g in L.gens) < window.lo:
            trust = trust.raise_lo(window.lo)
    cap = None

    def note_cap(n):
        nonlocal cap
        cap = n if cap is None else min(cap, n)

    diff = {}
    lact = {}
    for n, labels in basis.items():
        for g in L.gens:
            for b in A.basis_at(n - g.degree):
                # differential
                if n + 1 <= window.hi:
                    combo = czero()
                    ok = True
                    db = A.diff_of(b)
                    if db is None:
                        ok = False
                    else:
                        for b2, c in db.items():
                            combo = cadd(F, combo, {lbl[(b2, g.label)]: c})
                        sgn = F.sign(n - g.degree)
                        for h, acomb in L.diff.get(g.label, {}).items():
                            prod = A.mul_combo({b: F.one()}, n - g.degree, acomb,
                                               g.degree + 1 - L.degree_of(h))
                            if prod is None:
                                ok = False
                                break
                            for b2, c in prod.items():
                                key = (b2, h)
                                if key not in lbl:
                                    ok = False
                                    break
                                combo = cadd(F, combo, {lbl[key]: F.mul(sgn, c)})
                            if not ok:
                                break
                    if not ok:
                        note_cap(n)
                    elif combo:
                        diff[lbl[(b, g.label)]] = combo
                # left action
                for a in (l for dd in A.degrees() for l in A.basis_at(dd)):
                    da = A.degree_of(a)
                    if da == 0 and a == A.unit:
                        lact[(a, lbl[(b, g.label)])] = {lbl[(b, g.label)]: F.one()}
                        continue
                    if n + da > window.hi:
                        continue
                    prod = A.product(a, b)
                    if prod is None:
                        note_cap(n + da - 1)
                        continue
                    combo = czero()
                    for b2, c in prod.items():
                        combo = cadd(F, combo, {lbl[(b2, g.label)]: c})
                    if combo:
                        lact[(a, lbl[(b, g.label)])] = combo

    if cap is not None:
        trust = trust.cap_hi(cap)
    return DGModule(
        name=name or f"|{L.target.name if L.target else 'ledger'}|",
        algebra=A,
        side=LEFT,
        window=window,
        basis=basis,
        lact=lact,
        ract={},
        diff=diff,
        trust=trust,
    )


def hom_from_ledger(L: SemifreeResolution, N: DGModule, window: GradedWindow,
                    name: str | None = None):
    """The complex Hom_A(P, N) for a left-module ledger P and left module N.

    Degree-j part: product over generators g of N^{j+|g|}; the basis
    element (g : n) is the A-linear map e_g -> n (zero on other
    generators, extended by f(a p) = (-1)^{|f||a|} a f(p)).  Differential
    d(f) = d_N f - (-1)^{|f|} f d_P.  When N is a bimodule the output is
    a right module via (f.b)(e_g) = (-1)^{|b||g|} f(e_g) b.

    Returns (module, notes); notes flag window-relative trust.
    """
    A = L.algebra
    F = A.field
    if not N.has_left:
        raise ValueError("hom_from_ledger needs a left action on N")
    lbl = {}
    basis: dict = {}
    for j in window.degrees():
        row = []
        for g in L.gens:
            for n in N.basis_at(j + g.degree):
                lab = f"{g.label}|{n}"
                lbl[(g.label, n)] = lab
                row.append(lab)
        if row:
            basis[j] = tuple(row)

    trust = _meet_gen_trust(Trust.everywhere(), L.gens, N.trust, +1)
    notes = []
    if L.ledger_bound is not None:
        notes.append(
            f"ledger not known complete beyond degree {L.ledger_bound}; the complex "
            "models the derived functor up to the recorded frontier contributions"
        )

    # incoming ledger rows: for generator g', which g receive a_{g'g}?
    incoming: dict = {}
    for gp, row in L.diff.items():
        for h, acomb in row.items():
            incoming.setdefault(h, []).append((gp, acomb))

    cap = None

    def note_cap(j):
        nonlocal cap
        cap = j if cap is None else min(cap, j)

    diff = {}
    ract = {}
    for j, labels in basis.items():
        for g in L.gens:
            for n in N.basis_at(j + g.degree):
                if j + 1 <= window.hi:
                    combo = czero()
                    ok = True
                    dn = N.diff_of(n)
                    if dn is None:
                        ok = False
                    else:
                        for n2, c in dn.items():
                            key = (g.label, n2)
                            if key in lbl:
                                combo = cadd(F, combo, {lbl[key]: c})
                        for gp, acomb in incoming.get(g.label, []):
                            adeg = L.degree_of(gp) + 1 - g.degree
                            s = F.neg(F.sign(j * (1 + adeg)))
                            acted = N.lact_combo(acomb, adeg, {n: F.one()}, j + g.degree)
                            if acted is None:
                                ok = False
                                break
                            for n2, c in acted.items():
                                key = (gp, n2)
                                if key in lbl:
                                    combo = cadd(F, combo, {lbl[key]: F.mul(s, c)})
                    if not ok:
                        note_cap(j)
                    elif combo:
                        diff[lbl[(g.label, n)]] = combo
                if N.has_right:
                    for a in (l for dd in A.degrees() for l in A.basis_at(dd)):
                        da = A.degree_of(a)
                        if j + da > window.hi:
                            continue
                        acted = N.ract_combo({n: F.one()}, j + g.degree, {a: F.one()}, da)
                        if acted is None:
                            note_cap(j + da - 1)
                            continue
                        s = F.sign(da * g.degree)
                        combo = czero()
                        for n2, c in acted.items():
                            key = (g.label, n2)
                            if key in lbl:
                                combo = cadd(F, combo, {lbl[key]: F.mul(s, c)})
                        if combo:
                            ract[(lbl[(g.label, n)], a)] = combo

    if cap is not None:
        trust = trust.cap_hi(cap)
    out = DGModule(
        name=name or f"Hom({L.target.name if L.target else 'P'},{N.name})",
        algebra=A,
        side=RIGHT if N.has_right else LEFT,
        window=window,
        basis=basis,
        lact={},
        ract=ract,
        diff=diff,
        trust=trust,
    )
    if not N.has_right:
        # no module structure on the output: it is a bare complex; keep it
        # as a presentation with empty actions but mark the side left and
        # install the trivial unit action so validation is meaningful
        lact = {(A.unit, m): {m: F.one()} for row in basis.values() for m in row}
        out = DGModule(
            name=out.name, algebra=A, side=LEFT, window=window, basis=basis,
            lact=lact, ract={}, diff=diff, trust=trust,
        )
        out.structure_is_partial = True
    return out, notes


def tensor_module_ledger(N: DGModule, L: SemifreeResolution, window: GradedWindow,
                         name: str | None = None):
    """The complex N tensor_A P for a right module N and left-ledger P.

    Degree-n part: sum over generators g of N^{n-|g|}; basis element
    (n : g) is n tensor e_g.  d(n e_g) = (dn) e_g +
    (-1)^{|n|} sum_h (n a_{gh}) e_h.  When N is a bimodule the output is
    a left module via a (n e_g) = (a n) e_g.

    Returns (module, notes).
    """
    A = L.algebra
    F = A.field
    if not N.has_right:
        raise ValueError("tensor_module_ledger needs a right action on N")
    lbl = {}
    basis: dict = {}
    for n_deg in window.degrees():
        row = []
        for g in L.gens:
            for m in N.basis_at(n_deg - g.degree):
                lab = f"{m}|{g.label}"
                lbl[(m, g.label)] = lab
                row.append(lab)
        if row:
            basis[n_deg] = tuple(row)

    trust = _meet_gen_trust(Trust.everywhere(), L.gens, N.trust, -1)
    notes = []
    if L.ledger_bound is not None:
        notes.append(
            f"ledger not known complete beyond degree {L.ledger_bound}; the complex "
            "models the derived functor up to the recorded frontier contributions"
        )

    cap = None

    def note_cap(n):
        nonlocal cap
        cap = n if cap is None else min(cap, n)

    diff = {}
    lact = {}
    for n_deg, labels in basis.items():
        for g in L.gens:
            for m in N.basis_at(n_deg - g.degree):
                if n_deg + 1 <= window.hi:
                    combo = czero()
                    ok = True
                    dm = N.diff_of(m)
                    if dm is None:
                        ok = False
                    else:
                        for m2, c in dm.items():
                            key = (m2, g.label)
                            if key in lbl:
                                combo = cadd(F, combo, {lbl[key]: c})
                        sgn = F.sign(n_deg - g.degree)
                        for h, acomb in L.diff.get(g.label, {}).items():
                            acted = N.ract_combo({m: F.one()}, n_deg - g.degree, acomb,
                                                 g.degree + 1 - L.degree_of(h))
                            if acted is None:
                                ok = False
                                break
                            for m2, c in acted.items():
                                key = (m2, h)
                                if key in lbl:
                                    combo = cadd(F, combo, {lbl[key]: F.mul(sgn, c)})
                    if not ok:
                        note_cap(n_deg)
                    elif combo:
                        diff[lbl[(m, g.label)]] = combo
                if N.has_left:
                    for a in (l for dd in A.degrees() for l in A.basis_at(dd)):
                        da = A.degree_of(a)
                        if n_deg + da > window.hi:
                            continue
                        acted = N.lact_combo({a: F.one()}, da, {m: F.one()}, n_deg - g.degree)
                        if acted is None:
                            note_cap(n_deg + da - 1)
                            continue
                        combo = czero()
                        for m2, c in acted.items():
                            key = (m2, g.label)
                            if key in lbl:
                                combo = cadd(F, combo, {lbl[key]: c})
                        if combo:
                            lact[(a, lbl[(m, g.label)])] = combo

    if cap is not None:
        trust = trust.cap_hi(cap)
    side = LEFT if N.has_left else RIGHT
    if not N.has_left:
        ract = {(m, A.unit): {m: F.one()} for row in basis.values() for m in row}
    else:
        ract = {}
    out = DGModule(
        name=name or f"{N.name}(x){L.target.name if L.target else 'P'}",
        algebra=A,
        side=side,
        window=window,
        basis=basis,
        lact=lact,
        ract=ract,
        diff=diff,
        trust=trust,
    )
    if not N.has_left:
        out.structure_is_partial = True
    return out, notes
