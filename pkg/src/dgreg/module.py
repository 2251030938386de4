"""DG modules over a connected cochain DG algebra: presentations,
validation, cohomology, hard truncation, suspension, linear duals,
twists, morphisms, and mapping cones.

Sign conventions (fixed once, asserted by the test suite):

* differentials raise degree by 1;
* module Leibniz: d(am) = d(a)m + (-1)^{|a|} a d(m), and on the right
  d(ma) = d(m)a + (-1)^{|m|} m d(a);
* suspension S^n M has (S^n M)^j = M^{j+n} with differential and left
  action unchanged and right action scaled by (-1)^{n|a|};
* the k-linear dual M* has d(f) = -(-1)^{|f|} f d, right action
  (f.a)(m) = f(am) and left action (a.f)(m) = (-1)^{|a|} f(ma).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import DGAlgebra, ValidationReport, Violation
from .fields import FieldSpec
from .lincomb import cadd, ceq, cclean, cscale, czero, from_vector, to_vector
from .linalg import Echelon, Matrix, kernel_basis, image_basis, quotient_by
from .windows import GLOBAL_DEGREE_BOUND, GradedWindow, Trust, WindowError

LEFT, RIGHT, BI = "left", "right", "bi"


@dataclass
class DGModule:
    """A left/right/bi DG module presented degreewise on a finite window.

    ``lact[(a, m)]`` is the combination for a.m and ``ract[(m, a)]`` for
    m.a; entries with target degree above ``window.hi`` are unrecorded.
    """

    name: str
    algebra: DGAlgebra
    side: str
    window: GradedWindow
    basis: dict   # degree -> tuple of labels
    lact: dict    # (algebra label, module label) -> combination
    ract: dict    # (module label, algebra label) -> combination
    diff: dict    # module label -> combination
    trust: Trust = dc_field(default_factory=Trust.everywhere)

    def __post_init__(self):
        if self.side not in (LEFT, RIGHT, BI):
            raise ValueError(f"bad side {self.side!r}")
        self.basis = {d: tuple(lbls) for d, lbls in sorted(self.basis.items()) if lbls}
        self._deg = {}
        for d, lbls in self.basis.items():
            if not self.window.contains(d):
                raise WindowError(f"basis degree {d} outside window {self.window}")
            for lbl in lbls:
                if lbl in self._deg:
                    raise ValueError(f"duplicate module label {lbl!r}")
                self._deg[lbl] = d
        F = self.algebra.field
        self.lact = {k: v for k, v in ((k2, cclean(F, v2)) for k2, v2 in self.lact.items()) if v}
        self.ract = {k: v for k, v in ((k2, cclean(F, v2)) for k2, v2 in self.ract.items()) if v}
        self.diff = {k: v for k, v in ((k2, cclean(F, v2)) for k2, v2 in self.diff.items()) if v}

    # -- lookups ---------------------------------------------------------

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    def degree_of(self, lbl: str) -> int:
        return self._deg[lbl]

    def basis_at(self, d: int) -> tuple:
        return self.basis.get(d, ())

    def dim(self, d: int) -> int:
        return len(self.basis.get(d, ()))

    def degrees(self):
        return sorted(self.basis)

    def support(self):
        ds = self.degrees()
        return (ds[0], ds[-1]) if ds else None

    @property
    def complete(self) -> bool:
        return self.trust.is_everywhere

    @property
    def has_left(self) -> bool:
        return self.side in (LEFT, BI)

    @property
    def has_right(self) -> bool:
        return self.side in (RIGHT, BI)

    def total_dim(self) -> int:
        return sum(len(v) for v in self.basis.values())

    def act_left(self, a: str, m: str):
        target = self.algebra.degree_of(a) + self._deg[m]
        if target > self.window.hi:
            return czero() if self.trust.hi is None else None
        return self.lact.get((a, m), czero())

    def act_right(self, m: str, a: str):
        target = self.algebra.degree_of(a) + self._deg[m]
        if target > self.window.hi:
            return czero() if self.trust.hi is None else None
        return self.ract.get((m, a), czero())

    def diff_of(self, m: str):
        if self._deg[m] + 1 > self.window.hi:
            return czero() if self.trust.hi is None else None
        return self.diff.get(m, czero())

    def lact_combo(self, x, dx: int, m, dm: int):
        """a-combination times m-combination; None if any entry unrecorded."""
        if x is None or m is None:
            return None
        if dx + dm > self.window.hi:
            return czero() if self.trust.hi is None else None
        F = self.field
        out = czero()
        for a, ca in x.items():
            for b, cb in m.items():
                act = self.act_left(a, b)
                if act is None:
                    return None
                out = cadd(F, out, cscale(F, F.mul(ca, cb), act))
        return out

    def ract_combo(self, m, dm: int, x, dx: int):
        if m is None or x is None:
            return None
        if dx + dm > self.window.hi:
            return czero() if self.trust.hi is None else None
        F = self.field
        out = czero()
        for b, cb in m.items():
            for a, ca in x.items():
                act = self.act_right(b, a)
                if act is None:
                    return None
                out = cadd(F, out, cscale(F, F.mul(cb, ca), act))
        return out

    def diff_combo(self, m, dm: int):
        if m is None:
            return None
        if dm + 1 > self.window.hi:
            return czero() if self.trust.hi is None else None
        F = self.field
        out = czero()
        for b, cb in m.items():
            db = self.diff_of(b)
            if db is None:
                return None
            out = cadd(F, out, cscale(F, cb, db))
        return out

    def diff_matrix(self, d: int) -> Matrix:
        src, tgt = self.basis_at(d), self.basis_at(d + 1)
        F = self.field
        if not src or not tgt:
            return Matrix.zeros(F, len(tgt), len(src))
        cols = [to_vector(F, self.diff.get(b, {}), tgt) for b in src]
        rows = [[cols[j][i] for j in range(len(src))] for i in range(len(tgt))]
        return Matrix.from_rows(F, rows)

    def element(self, lbl: str) -> dict:
        return {lbl: self.field.one()}


def validate_module(M: DGModule) -> ValidationReport:
    """Check d^2, module Leibniz, action associativity, unit action, and
    (for bimodules) commutation of the two actions, on recorded entries."""
    A = M.algebra
    F = M.field
    out = []
    alg_labels = [lbl for d in A.degrees() for lbl in A.basis_at(d)]
    mod_labels = [lbl for d in M.degrees() for lbl in M.basis_at(d)]

    for m in mod_labels:
        d1 = M.diff_of(m)
        if d1 is None:
            continue
        d2 = M.diff_combo(d1, M.degree_of(m) + 1)
        if d2 is not None and d2:
            out.append(Violation("d-squared", (m,), "d(d(m)) is nonzero"))

    for m in mod_labels:
        want = {m: F.one()}
        if M.has_left:
            got = M.act_left(A.unit, m)
            if got is not None and not ceq(F, got, want):
                out.append(Violation("unit-action-left", (A.unit, m), "1.m differs from m"))
        if M.has_right:
            got = M.act_right(m, A.unit)
            if got is not None and not ceq(F, got, want):
                out.append(Violation("unit-action-right", (m, A.unit), "m.1 differs from m"))

    for a in alg_labels:
        da = A.degree_of(a)
        for m in mod_labels:
            dm = M.degree_of(m)
            if da + dm + 1 > M.window.hi:
                continue
            if M.has_left:
                am = M.act_left(a, m)
                lhs = M.diff_combo(am, da + dm)
                t1 = M.lact_combo(A.diff_of(a), da + 1, {m: F.one()}, dm)
                t2 = M.lact_combo({a: F.one()}, da, M.diff_of(m), dm + 1)
                if None not in (lhs, t1, t2):
                    rhs = cadd(F, t1, cscale(F, F.sign(da), t2))
                    if not ceq(F, lhs, rhs):
                        out.append(Violation("leibniz-left", (a, m), "d(am) != d(a)m + (-1)^|a| a d(m)"))
            if M.has_right:
                ma = M.act_right(m, a)
                lhs = M.diff_combo(ma, da + dm)
                t1 = M.ract_combo(M.diff_of(m), dm + 1, {a: F.one()}, da)
                t2 = M.ract_combo({m: F.one()}, dm, A.diff_of(a), da + 1)
                if None not in (lhs, t1, t2):
                    rhs = cadd(F, t1, cscale(F, F.sign(dm), t2))
                    if not ceq(F, lhs, rhs):
                        out.append(Violation("leibniz-right", (m, a), "d(ma) != d(m)a + (-1)^|m| m d(a)"))

    for a in alg_labels:
        for b in alg_labels:
            dab = A.degree_of(a) + A.degree_of(b)
            ab = A.product(a, b)
            for m in mod_labels:
                dm = M.degree_of(m)
                if dab + dm > M.window.hi or ab is None:
                    continue
                if M.has_left:
                    lhs = M.lact_combo(ab, dab, {m: F.one()}, dm)
                    inner = M.act_left(b, m)
                    rhs = None if inner is None else M.lact_combo({a: F.one()}, A.degree_of(a), inner, A.degree_of(b) + dm)
                    if None not in (lhs, rhs) and not ceq(F, lhs, rhs):
                        out.append(Violation("action-associativity-left", (a, b, m), "(ab)m != a(bm)"))
                if M.has_right:
                    lhs = M.ract_combo({m: F.one()}, dm, ab, dab)
                    inner = M.act_right(m, a)
                    rhs = None if inner is None else M.ract_combo(inner, dm + A.degree_of(a), {b: F.one()}, A.degree_of(b))
                    if None not in (lhs, rhs) and not ceq(F, lhs, rhs):
                        out.append(Violation("action-associativity-right", (m, a, b), "m(ab) != (ma)b"))

    if M.side == BI:
        for a in alg_labels:
            for m in mod_labels:
                for b in alg_labels:
                    if A.degree_of(a) + A.degree_of(b) + M.degree_of(m) > M.window.hi:
                        continue
                    am = M.act_left(a, m)
                    mb = M.act_right(m, b)
                    if am is None or mb is None:
                        continue
                    lhs = M.ract_combo(am, A.degree_of(a) + M.degree_of(m), {b: F.one()}, A.degree_of(b))
                    rhs = M.lact_combo({a: F.one()}, A.degree_of(a), mb, M.degree_of(m) + A.degree_of(b))
                    if None not in (lhs, rhs) and not ceq(F, lhs, rhs):
                        out.append(Violation("bimodule-commutation", (a, m, b), "(am)b != a(mb)"))

    return ValidationReport(M.name, out)


# -- cohomology ----------------------------------------------------------


@dataclass
class CohomologyReport:
    """Per-degree cohomology dimensions with chosen cocycle representatives.

    ``certified`` is the degree range on which the numbers agree with the
    unbounded object; representatives are coordinate vectors in the
    presentation's degreewise bases.
    """

    subject: str
    dims: dict          # degree -> dim (nonzero entries only)
    reps: dict          # degree -> list of coordinate vectors
    certified: Trust
    window: GradedWindow

    def dim(self, d: int) -> int:
        return self.dims.get(d, 0)

    def certified_dims(self) -> dict:
        return {d: n for d, n in self.dims.items() if self.certified.contains(d)}

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    @property
    def inf_degree(self):
        """inf of the support; +inf for zero cohomology."""
        nz = sorted(self.dims)
        return nz[0] if nz else float("inf")

    @property
    def sup_degree(self):
        nz = sorted(self.dims)
        return nz[-1] if nz else float("-inf")

    @property
    def inf_certified(self) -> bool:
        if self.certified.lo is not None:
            return False
        nz = sorted(self.dims)
        return bool(nz) or self.certified.hi is None

    @property
    def sup_certified(self) -> bool:
        if self.certified.hi is not None:
            return False
        nz = sorted(self.dims)
        return bool(nz) or self.certified.lo is None

    def to_json(self):
        return {
            "subject": self.subject,
            "dims": {str(d): n for d, n in sorted(self.dims.items())},
            "certified": self.certified.to_json(),
            "inf": _ext_json(self.inf_degree),
            "sup": _ext_json(self.sup_degree),
        }


def _ext_json(v):
    if v == float("inf"):
        return "+inf"
    if v == float("-inf"):
        return "-inf"
    return int(v)


def _complex_data(X):
    """Uniform access to (field, window, trust, basis_at, diff_matrix)."""
    if isinstance(X, DGAlgebra):
        return X.field, GradedWindow(min(0, X.window.lo), X.window.hi), X.trust, X.basis_at, X.diff_matrix, X.name
    return X.field, X.window, X.trust, X.basis_at, X.diff_matrix, X.name


def cohomology(X) -> CohomologyReport:
    """Degreewise ker/im dimensions with echelonized representatives.

    Certified at degree d when degrees d-1, d, d+1 are all trusted in the
    presentation (computing H costs one degree at each trust boundary).
    """
    F, window, trust, basis_at, diff_matrix, name = _complex_data(X)
    dims, reps = {}, {}
    for d in window.degrees():
        n = len(basis_at(d))
        if n == 0:
            continue
        d_out = diff_matrix(d)
        cocycles = kernel_basis(d_out) if d_out.nrows else [
            tuple(F.one() if i == j else F.zero() for j in range(n)) for i in range(n)
        ]
        d_in = diff_matrix(d - 1)
        boundaries = image_basis(d_in) if d_in.ncols else []
        quot = quotient_by(F, cocycles, boundaries)
        if quot.dim:
            dims[d] = quot.dim
            reps[d] = list(quot.representatives)
    # H at a trust boundary needs one degree of margin on that side
    certified = Trust(
        None if trust.lo is None else trust.lo + 1,
        None if trust.hi is None else trust.hi - 1,
    )
    return CohomologyReport(name, dims, reps, certified, window)


def h_dims_on(report: CohomologyReport, trust: Trust) -> dict:
    return {d: n for d, n in report.dims.items() if trust.contains(d)}


# -- constructions --------------------------------------------------------


def canonical_k(A: DGAlgebra, side: str = BI, name: str = "k") -> DGModule:
    """The canonical module A/A^{>=1}: one basis element in degree 0 on
    which every positive-degree algebra element acts by zero."""
    F = A.field
    lbl = "k0"
    lact, ract = {}, {}
    if side in (LEFT, BI):
        lact[(A.unit, lbl)] = {lbl: F.one()}
    if side in (RIGHT, BI):
        ract[(lbl, A.unit)] = {lbl: F.one()}
    return DGModule(
        name=name,
        algebra=A,
        side=side,
        window=GradedWindow(0, A.window.hi),
        basis={0: (lbl,)},
        lact=lact,
        ract=ract,
        diff={},
        trust=Trust.everywhere(),
    )


def free_module(A: DGAlgebra, name: str | None = None, side: str = BI) -> DGModule:
    """A as a DG (bi)module over itself."""
    lact = {}
    ract = {}
    for (a, b), combo in A.mul.items():
        if side in (LEFT, BI):
            lact[(a, b)] = dict(combo)
        if side in (RIGHT, BI):
            ract[(a, b)] = dict(combo)
    return DGModule(
        name=name or (A.name + "_free"),
        algebra=A,
        side=side,
        window=GradedWindow(A.window.lo, A.window.hi),
        basis=dict(A.basis),
        lact=lact,
        ract=ract,
        diff=dict(A.diff),
        trust=A.trust,
    )


@dataclass
class Truncation:
    sub: DGModule
    quot: DGModule
    inclusion: "ModuleMorphism"
    projection: "ModuleMorphism"


def hard_truncate(M: DGModule, level: int) -> Truncation:
    """The hard truncation M^{>= level} with its quotient M/M^{>= level}
    and the witnessing inclusion/projection chain maps."""
    F = M.field
    keep = {d: lbls for d, lbls in M.basis.items() if d >= level}
    drop = {d: lbls for d, lbls in M.basis.items() if d < level}
    kept = {lbl for lbls in keep.values() for lbl in lbls}

    def restrict(table, to_kept_keys):
        out = {}
        for key, combo in table.items():
            if not to_kept_keys(key):
                continue
            out[key] = combo
        return out

    def project(table, in_dropped):
        out = {}
        for key, combo in table.items():
            if not in_dropped(key):
                continue
            reduced = {lbl: c for lbl, c in combo.items() if lbl not in kept}
            if reduced:
                out[key] = reduced
        return out

    sub_window = GradedWindow(max(M.window.lo, level), M.window.hi)
    sub_trust = M.trust
    if M.trust.lo is None or M.trust.lo <= level:
        sub_trust = Trust(None, M.trust.hi)  # below level the truncation is zero by fiat
    sub = DGModule(
        name=f"{M.name}>= {level}".replace(" ", ""),
        algebra=M.algebra,
        side=M.side,
        window=sub_window if keep else GradedWindow(level, max(level, M.window.hi)),
        basis=keep,
        lact=restrict(M.lact, lambda k: k[1] in kept),
        ract=restrict(M.ract, lambda k: k[0] in kept),
        diff=restrict(M.diff, lambda k: k in kept),
        trust=sub_trust,
    )
    quot_window = GradedWindow(M.window.lo, min(M.window.hi, level - 1)) if drop else GradedWindow(M.window.lo, M.window.lo)
    quot_trust = Trust(M.trust.lo, None) if (M.trust.hi is None or M.trust.hi >= level - 1) else M.trust
    quot = DGModule(
        name=f"{M.name}/>={level}",
        algebra=M.algebra,
        side=M.side,
        window=quot_window,
        basis=drop,
        lact=project(M.lact, lambda k: k[1] not in kept),
        ract=project(M.ract, lambda k: k[0] not in kept),
        diff=project(M.diff, lambda k: k not in kept),
        trust=quot_trust,
    )
    incl = ModuleMorphism(sub, M, {lbl: {lbl: F.one()} for lbl in kept})
    proj = ModuleMorphism(
        M, quot, {lbl: ({lbl: F.one()} if lbl not in kept else {}) for lbl in M._deg}
    )
    return Truncation(sub, quot, incl, proj)


def suspend(M: DGModule, n: int, name: str | None = None) -> DGModule:
    """The n-fold suspension: (S^n M)^j = M^{j+n}.

    Differential and left action are carried over unchanged; the right
    action picks up the Koszul sign (-1)^{n|a|}.  H(S^n M)^j = H(M)^{j+n}.
    """
    if n == 0:
        return M
    F = M.field
    new_lo, new_hi = M.window.lo - n, M.window.hi - n
    if abs(new_lo) > GLOBAL_DEGREE_BOUND or abs(new_hi) > GLOBAL_DEGREE_BOUND:
        raise WindowError(f"suspension by {n} leaves the global degree bounds")
    basis = {d - n: lbls for d, lbls in M.basis.items()}
    ract = {}
    for (m, a), combo in M.ract.items():
        s = F.sign(n * M.algebra.degree_of(a))
        ract[(m, a)] = cscale(F, s, combo)
    return DGModule(
        name=name or f"S{n}({M.name})",
        algebra=M.algebra,
        side=M.side,
        window=GradedWindow(new_lo, new_hi),
        basis=basis,
        lact={k: dict(v) for k, v in M.lact.items()},
        ract=ract,
        diff={k: dict(v) for k, v in M.diff.items()},
        trust=M.trust.shift(n),
    )


def linear_dual(M: DGModule, name: str | None = None) -> DGModule:
    """The k-linear dual with sides swapped: (M*)^j = (M^{-j})*.

    d(f) = -(-1)^{|f|} f d; a left action on M induces the right action
    (f.a)(m) = f(am), a right action induces (a.f)(m) = (-1)^{|a|} f(ma).
    """
    F = M.field
    A = M.algebra
    dual_lbl = {lbl: lbl + "'" for lbl in M._deg}
    basis = {-d: tuple(dual_lbl[l] for l in lbls) for d, lbls in M.basis.items()}

    diff = {}
    for d, lbls in M.basis.items():
        below = M.basis_at(d - 1)
        if not below:
            continue
        for b in lbls:
            combo = {}
            for c in below:
                dc = M.diff.get(c, {})
                if b in dc:
                    # d(b')(c) = -(-1)^{|b'|} b'(dc), |b'| = -d
                    combo[dual_lbl[c]] = F.mul(F.neg(F.sign(d)), dc[b])
            combo = cclean(F, combo)
            if combo:
                diff[dual_lbl[b]] = combo

    lact, ract = {}, {}
    alg_labels = [lbl for dd in A.degrees() for lbl in A.basis_at(dd)]
    for d, lbls in M.basis.items():
        for a in alg_labels:
            da = A.degree_of(a)
            src = M.basis_at(d - da)  # (b'.a) lives in degree -d + da, evaluates on M^{d-da}
            if M.has_left and src:
                for b in lbls:
                    combo = {}
                    for c in src:
                        ac = M.act_left(a, c)
                        if ac and b in ac:
                            combo[dual_lbl[c]] = ac[b]
                    combo = cclean(F, combo)
                    if combo:
                        ract[(dual_lbl[b], a)] = combo
            if M.has_right and src:
                for b in lbls:
                    combo = {}
                    for c in src:
                        ca = M.act_right(c, a)
                        if ca and b in ca:
                            combo[dual_lbl[c]] = F.mul(F.sign(da), ca[b])
                    combo = cclean(F, combo)
                    if combo:
                        lact[(a, dual_lbl[b])] = combo

    side = {LEFT: RIGHT, RIGHT: LEFT, BI: BI}[M.side]
    return DGModule(
        name=name or f"{M.name}*",
        algebra=A,
        side=side,
        window=M.window.flip(),
        basis=basis,
        lact=lact,
        ract=ract,
        diff=diff,
        trust=M.trust.flip(),
    )


def twist(M: DGModule, alpha, name: str | None = None) -> DGModule:
    """Twist the right action by an algebra automorphism: m .' a = m . alpha(a)."""
    from .algebra import validate_automorphism

    if not M.has_right:
        raise ValueError("twist needs a right module structure")
    rep = validate_automorphism(alpha)
    if not rep.ok:
        raise ValueError(f"invalid automorphism: {rep.violations[0].detail}")
    F = M.field
    A = M.algebra
    ract = {}
    for d, lbls in M.basis.items():
        for a in [lbl for dd in A.degrees() for lbl in A.basis_at(dd)]:
            img = alpha.apply({a: F.one()})
            for m in lbls:
                out = M.ract_combo({m: F.one()}, d, img, A.degree_of(a))
                if out:
                    ract[(m, a)] = out
    return DGModule(
        name=name or f"{M.name}^tw",
        algebra=A,
        side=M.side,
        window=M.window,
        basis=dict(M.basis),
        lact={k: dict(v) for k, v in M.lact.items()},
        ract=ract,
        diff={k: dict(v) for k, v in M.diff.items()},
        trust=M.trust,
    )


# -- morphisms and cones ---------------------------------------------------


@dataclass
class ModuleMorphism:
    """A degree-0 A-linear chain map given on basis labels."""

    source: DGModule
    target: DGModule
    images: dict  # source label -> combination in target, same degree

    def apply(self, c: dict) -> dict:
        F = self.source.field
        out = czero()
        for lbl, s in c.items():
            out = cadd(F, out, cscale(F, s, self.images.get(lbl, {})))
        return out

    def validate(self) -> ValidationReport:
        M, N = self.source, self.target
        F = M.field
        A = M.algebra
        out = []
        for lbl in M._deg:
            img = self.images.get(lbl, {})
            d = M.degree_of(lbl)
            if any(N.degree_of(t) != d for t in img):
                out.append(Violation("degree", (lbl,), "image changes degree"))
        for lbl in M._deg:
            d = M.degree_of(lbl)
            dm = M.diff_of(lbl)
            lhs = None if dm is None else self.apply(dm)
            rhs = N.diff_combo(self.images.get(lbl, {}), d)
            if None not in (lhs, rhs) and not ceq(F, lhs, rhs):
                out.append(Violation("chain-map", (lbl,), "f(dm) != d(f(m))"))
        alg_labels = [l for dd in A.degrees() for l in A.basis_at(dd)]
        for a in alg_labels:
            for lbl in M._deg:
                if M.has_left and N.has_left:
                    am = M.act_left(a, lbl)
                    lhs = None if am is None else self.apply(am)
                    rhs = N.lact_combo({a: F.one()}, A.degree_of(a), self.images.get(lbl, {}), M.degree_of(lbl))
                    if None not in (lhs, rhs) and not ceq(F, lhs, rhs):
                        out.append(Violation("linearity", (a, lbl), "f(am) != a f(m)"))
                if M.has_right and N.has_right:
                    ma = M.act_right(lbl, a)
                    lhs = None if ma is None else self.apply(ma)
                    rhs = N.ract_combo(self.images.get(lbl, {}), M.degree_of(lbl), {a: F.one()}, A.degree_of(a))
                    if None not in (lhs, rhs) and not ceq(F, lhs, rhs):
                        out.append(Violation("linearity", (lbl, a), "f(ma) != f(m) a"))
        return ValidationReport(f"{M.name}->{N.name}", out)

    def h_isomorphism_degrees(self) -> dict:
        """Per-degree (rank, dim source H, dim target H) of the induced map."""
        F = self.source.field
        hs = cohomology(self.source)
        ht = cohomology(self.target)
        out = {}
        for d in sorted(set(hs.dims) | set(ht.dims)):
            src_reps = hs.reps.get(d, [])
            ech = Echelon(F, len(self.target.basis_at(d)))
            d_in = self.target.diff_matrix(d - 1)
            for col in range(d_in.ncols):
                ech.add(tuple(d_in.rows[i][col] for i in range(d_in.nrows)))
            img_ech = Echelon(F, len(self.target.basis_at(d)))
            rank_count = 0
            for rep in src_reps:
                vec = to_vector(
                    F,
                    self.apply(from_vector(F, rep, self.source.basis_at(d))),
                    self.target.basis_at(d),
                )
                residual = ech.reduce(vec)
                if img_ech.add(residual):
                    rank_count += 1
                ech.add(vec)
            out[d] = (rank_count, hs.dim(d), ht.dim(d))
        return out

    def is_quasi_iso_on(self, trust: Trust) -> bool:
        ranks = self.h_isomorphism_degrees()
        for d, (r, s, t) in ranks.items():
            if trust.contains(d) and not (r == s == t):
                return False
        return True


def cone_of(f: ModuleMorphism, name: str | None = None) -> DGModule:
    """The mapping cone of an A-linear chain map f: X -> Y.

    Underlying graded module Y + SX; d(y, x~) = (dy + f(x), -(dx)~);
    the left action on the shifted part carries the sign (-1)^{|a|},
    the right action none.
    """
    X, Y = f.source, f.target
    if X.algebra is not Y.algebra and X.algebra != Y.algebra:
        raise ValueError("cone needs modules over one algebra")
    if X.side != Y.side:
        raise ValueError("cone needs matching sides")
    F = X.field
    A = X.algebra
    sx = {lbl: lbl + "~" for lbl in X._deg}
    basis: dict = {}
    for d, lbls in Y.basis.items():
        basis.setdefault(d, []).extend(lbls)
    for d, lbls in X.basis.items():
        basis.setdefault(d - 1, []).extend(sx[l] for l in lbls)
    window = GradedWindow(
        min([Y.window.lo, X.window.lo - 1]), max([Y.window.hi, X.window.hi - 1])
    )

    diff = {k: dict(v) for k, v in Y.diff.items()}
    for lbl in X._deg:
        combo = dict(f.images.get(lbl, {}))
        dx = X.diff.get(lbl, {})
        for t, c in dx.items():
            combo[sx[t]] = F.neg(c)
        combo = cclean(F, combo)
        if combo:
            diff[sx[lbl]] = combo

    lact = {k: dict(v) for k, v in Y.lact.items()}
    ract = {k: dict(v) for k, v in Y.ract.items()}
    for (a, m), combo in X.lact.items():
        s = F.sign(A.degree_of(a))
        lact[(a, sx[m])] = cscale(F, s, {sx[t]: c for t, c in combo.items()})
    for (m, a), combo in X.ract.items():
        ract[(sx[m], a)] = {sx[t]: c for t, c in combo.items()}

    return DGModule(
        name=name or f"cone({f.source.name}->{f.target.name})",
        algebra=A,
        side=X.side,
        window=window,
        basis={d: tuple(v) for d, v in basis.items()},
        lact=lact,
        ract=ract,
        diff=diff,
        trust=X.trust.shift(1).meet(Y.trust),
    )


def left_restriction(M: DGModule) -> DGModule:
    """Forget the right action of a bimodule (identity on left modules)."""
    if M.side == LEFT:
        return M
    if not M.has_left:
        raise ValueError(f"{M.name} has no left structure")
    return DGModule(
        name=M.name, algebra=M.algebra, side=LEFT, window=M.window,
        basis=dict(M.basis), lact={k: dict(v) for k, v in M.lact.items()},
        ract={}, diff={k: dict(v) for k, v in M.diff.items()}, trust=M.trust,
    )


def zero_module(A: DGAlgebra, side: str = LEFT, name: str = "0") -> DGModule:
    return DGModule(
        name=name, algebra=A, side=side, window=GradedWindow(0, A.window.hi),
        basis={}, lact={}, ract={}, diff={}, trust=Trust.everywhere(),
    )


# -- opposite-algebra transport -------------------------------------------


def to_opposite(M: DGModule, A_op: DGAlgebra | None = None) -> DGModule:
    """Transport a right module to a left module over the opposite algebra
    (and vice versa) via a .op m = (-1)^{|a||m|} m a."""
    F = M.field
    A_op = A_op or M.algebra.opposite()
    lact, ract = {}, {}
    for (m, a), combo in M.ract.items():
        s = F.sign(M.algebra.degree_of(a) * M.degree_of(m))
        lact[(a, m)] = cscale(F, s, combo)
    for (a, m), combo in M.lact.items():
        s = F.sign(M.algebra.degree_of(a) * M.degree_of(m))
        ract[(m, a)] = cscale(F, s, combo)
    side = {LEFT: RIGHT, RIGHT: LEFT, BI: BI}[M.side]
    return DGModule(
        name=M.name + "_op",
        algebra=A_op,
        side=side,
        window=M.window,
        basis=dict(M.basis),
        lact=lact,
        ract=ract,
        diff={k: dict(v) for k, v in M.diff.items()},
        trust=M.trust,
    )


def double_dual_embedding(M: DGModule) -> ModuleMorphism:
    """The canonical chain map M -> (M*)* sending m to (-1)^{|m||f|} f(m);
    on basis labels it is the signed identification b -> (-1)^{|b|} (b')'."""
    dd = linear_dual(linear_dual(M))
    F = M.field
    images = {lbl: {lbl + "''": F.sign(M.degree_of(lbl))} for lbl in M._deg}
    return ModuleMorphism(M, dd, images)
