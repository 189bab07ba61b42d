"""Pointwise quadruple/triple conditions and the SRAR / RA2 deciders.

For a quadruple (x, y, z, w) the four products

    S = [(xy)z]w   T = x[(yz)w]   U = [(xw)z]y   V = x[(wz)y]

define the conditions D: S=T and U=V, E: S=V and T=U, F: S=U and T=V.
Setting w to the identity yields the primed conditions on triples

    D': (xy)z = x(yz) and (xz)y = x(zy)
    E': (xy)z = x(zy) and (xz)y = x(yz)
    F': (xy)z = (xz)y and x(yz) = x(zy)

and the companion conditions on triples

    A: (xy)z = x(yz) and (yx)z = y(xz)
    B: (xy)z = y(xz) and x(yz) = (yx)z
    C: (xy)z = (yx)z and x(yz) = y(xz)

with starred variants A*, B*, C* identical to D', E', F'.  A loop is SRAR
when it is right Bol and D/E/F covers every quadruple; it is RA2 when it
is Moufang and both the A/B/C and starred sets cover every triple.

Condition sets are frozensets over the letters "D","E","F" (triples use
the same letters for the primed conditions) or "A","B","C".  All scans
run in lexicographic element order and report the first gap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import LoopTable, LoopError, TheoremViolation, Witness
from .identities import IdentityId, check_identity, is_extra, is_moufang

COND_LETTERS = ("D", "E", "F")
PROFILE_KEYS = ("none", "D", "E", "F", "DE", "DF", "EF", "DEF")

# above this order the full n^4 coverage scans switch to the vectorized path
_PURE_SCAN_MAX_ORDER = 8


class NotSrar(LoopError):
    """Operation requires an SRAR loop."""


class NotBol(LoopError):
    """Operation requires a right Bol loop."""


@dataclass(frozen=True)
class QuadValues:
    """The four bracketed products of one quadruple (0-indexed elements)."""

    s: int
    t: int
    u: int
    v: int


@dataclass(frozen=True)
class TripleCoverage:
    """Which condition disjunctions hold at every triple."""

    def_everywhere: bool
    de_everywhere: bool
    df_everywhere: bool
    ef_everywhere: bool


@dataclass(frozen=True)
class TripleProfile:
    """Triple counts per realized subset of {D',E',F'}; total = n^3."""

    counts: dict[str, int]
    total: int


@dataclass(frozen=True)
class QuadProfile:
    """Quadruple counts per realized subset of {D,E,F}; total = n^4."""

    counts: dict[str, int]
    total: int


@dataclass(frozen=True)
class ImplicationCheck:
    hypothesis: bool
    conclusion: bool
    implication_ok: bool


@dataclass(frozen=True)
class MainTheoremReport:
    """The three pair-coverage implications for a right Bol loop."""

    de_implies_ra2_extra: ImplicationCheck
    df_implies_group: ImplicationCheck
    ef_implies_abelian: ImplicationCheck

    def all_ok(self) -> bool:
        return (
            self.de_implies_ra2_extra.implication_ok
            and self.df_implies_group.implication_ok
            and self.ef_implies_abelian.implication_ok
        )


def _implication(hypothesis: bool, conclusion: bool) -> ImplicationCheck:
    return ImplicationCheck(hypothesis, conclusion, (not hypothesis) or conclusion)


def subset_key(conds: frozenset[str]) -> str:
    """Canonical profile key for a condition subset ('none', 'D', ..., 'DEF')."""
    return "".join(c for c in COND_LETTERS if c in conds) or "none"


def quad_values(L: LoopTable, x: int, y: int, z: int, w: int) -> QuadValues:
    t = L.table
    s_ = t[t[t[x][y]][z]][w]
    t_ = t[x][t[t[y][z]][w]]
    u_ = t[t[t[x][w]][z]][y]
    v_ = t[x][t[t[w][z]][y]]
    return QuadValues(s_, t_, u_, v_)


def quad_conditions(L: LoopTable, x: int, y: int, z: int, w: int) -> frozenset[str]:
    q = quad_values(L, x, y, z, w)
    out = []
    if q.s == q.t and q.u == q.v:
        out.append("D")
    if q.s == q.v and q.t == q.u:
        out.append("E")
    if q.s == q.u and q.t == q.v:
        out.append("F")
    return frozenset(out)


def triple_conditions(L: LoopTable, x: int, y: int, z: int) -> frozenset[str]:
    t = L.table
    a = t[t[x][y]][z]
    b = t[x][t[y][z]]
    c = t[t[x][z]][y]
    d = t[x][t[z][y]]
    out = []
    if a == b and c == d:
        out.append("D")
    if a == d and c == b:
        out.append("E")
    if a == c and b == d:
        out.append("F")
    return frozenset(out)


def abc_conditions(
    L: LoopTable, x: int, y: int, z: int
) -> tuple[frozenset[str], frozenset[str]]:
    """The {A,B,C} set and the starred set of one triple.

    The starred set equals triple_conditions under A->D, B->E, C->F.
    """
    t = L.table
    p1 = t[t[x][y]][z]
    p2 = t[t[y][x]][z]
    p3 = t[x][t[y][z]]
    p4 = t[y][t[x][z]]
    plain = []
    if p1 == p3 and p2 == p4:
        plain.append("A")
    if p1 == p4 and p3 == p2:
        plain.append("B")
    if p1 == p2 and p3 == p4:
        plain.append("C")
    c = t[t[x][z]][y]
    d = t[x][t[z][y]]
    starred = []
    if p1 == p3 and c == d:
        starred.append("A")
    if p1 == d and p3 == c:
        starred.append("B")
    if p1 == c and p3 == d:
        starred.append("C")
    return frozenset(plain), frozenset(starred)


def _first_diff(vals: tuple[int, int, int, int]) -> tuple[int, int]:
    """First unequal pair among S,T,U,V in fixed pair order."""
    s, t, u, v = vals
    for a, b in ((s, t), (s, u), (s, v), (t, u), (t, v), (u, v)):
        if a != b:
            return a, b
    raise AssertionError("no differing pair in a non-covered quadruple")


def _first_quad_gap_pure(L: LoopTable) -> Witness | None:
    t = L.table
    n = L.order
    for x in range(n):
        tx = t[x]
        for y in range(n):
            ty = t[y]
            txy = t[tx[y]]
            for z in range(n):
                s_row = t[txy[z]]
                tyz = t[ty[z]]
                for w in range(n):
                    s = s_row[w]
                    t_ = tx[tyz[w]]
                    u = t[t[tx[w]][z]][y]
                    v = tx[t[t[w][z]][y]]
                    if (s == t_ and u == v) or (s == v and t_ == u) or (s == u and t_ == v):
                        continue
                    lhs, rhs = _first_diff((s, t_, u, v))
                    return Witness("def_coverage", (x, y, z, w), lhs, rhs)
    return None


def _quad_planes(T: np.ndarray, x: int, y: int):
    """S, T, U, V over the (z, w) plane for fixed x, y."""
    n = T.shape[0]
    s_plane = T[T[T[x, y]]]          # [z, w] = ((xy)z)w
    t_plane = T[x][T[T[y]]]          # [z, w] = x((yz)w)
    coly = T[:, y]
    u_plane = coly[T[T[x]].T]        # [z, w] = ((xw)z)y
    v_plane = T[x][coly[T.T]]        # [z, w] = x((wz)y)
    return s_plane, t_plane, u_plane, v_plane


def _first_quad_gap_vectorized(L: LoopTable) -> Witness | None:
    T = np.array(L.table, dtype=np.intp)
    n = L.order
    for x in range(n):
        for y in range(n):
            s, t_, u, v = _quad_planes(T, x, y)
            covered = ((s == t_) & (u == v)) | ((s == v) & (t_ == u)) | ((s == u) & (t_ == v))
            if covered.all():
                continue
            flat = int((~covered).argmax())
            z, w = divmod(flat, n)
            q = quad_values(L, x, y, z, w)
            lhs, rhs = _first_diff((q.s, q.t, q.u, q.v))
            return Witness("def_coverage", (x, y, z, w), lhs, rhs)
    return None


def first_quad_gap(L: LoopTable) -> Witness | None:
    """First quadruple whose D/E/F set is empty, scan order (x, y, z, w)."""
    if L.order <= _PURE_SCAN_MAX_ORDER:
        return _first_quad_gap_pure(L)
    return _first_quad_gap_vectorized(L)


def first_triple_gap(L: LoopTable) -> Witness | None:
    """First triple whose D'/E'/F' set is empty, scan order (x, y, z)."""
    t = L.table
    n = L.order
    for x in range(n):
        tx = t[x]
        for y in range(n):
            ty = t[y]
            txy = t[tx[y]]
            for z in range(n):
                a = txy[z]
                b = tx[ty[z]]
                c = t[tx[z]][y]
                d = tx[t[z][y]]
                if (a == b and c == d) or (a == d and c == b) or (a == c and b == d):
                    continue
                lhs, rhs = _first_diff((a, b, c, d))
                return Witness("def_prime_coverage", (x, y, z), lhs, rhs)
    return None


def first_abc_gap(L: LoopTable) -> Witness | None:
    """First triple whose {A,B,C} set is empty."""
    t = L.table
    n = L.order
    for x in range(n):
        tx = t[x]
        for y in range(n):
            ty = t[y]
            txy = t[tx[y]]
            tyx = t[ty[x]]
            for z in range(n):
                p1 = txy[z]
                p2 = tyx[z]
                p3 = tx[ty[z]]
                p4 = ty[tx[z]]
                if (p1 == p3 and p2 == p4) or (p1 == p4 and p3 == p2) or (p1 == p2 and p3 == p4):
                    continue
                lhs, rhs = _first_diff((p1, p2, p3, p4))
                return Witness("abc_coverage", (x, y, z), lhs, rhs)
    return None


def is_srar(L: LoopTable) -> tuple[bool, Witness | None]:
    """Right Bol plus D/E/F coverage of every quadruple.

    The Bol scan runs first (it is the cheaper one); the witness is the
    first Bol counterexample or, failing that, the first empty quadruple.
    """
    w = check_identity(L, IdentityId.RIGHT_BOL)
    if w is not None:
        return False, w
    gap = first_quad_gap(L)
    if gap is not None:
        return False, gap
    return True, None


def is_ra2(L: LoopTable) -> tuple[bool, Witness | None]:
    """Moufang plus nonempty {A,B,C} and starred sets at every triple."""
    w = check_identity(L, IdentityId.RIGHT_MOUFANG)
    if w is not None:
        return False, w
    gap = first_abc_gap(L)
    if gap is not None:
        return False, gap
    gap = first_triple_gap(L)
    if gap is not None:
        return False, gap
    return True, None


def triple_coverage(L: LoopTable) -> TripleCoverage:
    """Full triple scan for the four coverage flags."""
    t = L.table
    n = L.order
    deff = de = df = ef = True
    for x in range(n):
        tx = t[x]
        for y in range(n):
            ty = t[y]
            txy = t[tx[y]]
            for z in range(n):
                a = txy[z]
                b = tx[ty[z]]
                c = t[tx[z]][y]
                d = tx[t[z][y]]
                has_d = a == b and c == d
                has_e = a == d and c == b
                has_f = a == c and b == d
                if not (has_d or has_e or has_f):
                    deff = False
                if not (has_d or has_e):
                    de = False
                if not (has_d or has_f):
                    df = False
                if not (has_e or has_f):
                    ef = False
            if not (deff or de or df or ef):
                return TripleCoverage(False, False, False, False)
    return TripleCoverage(deff, de, df, ef)


def triple_profile(L: LoopTable) -> TripleProfile:
    """Count the triples realizing each subset of {D',E',F'}."""
    t = L.table
    n = L.order
    counts = [0] * 8
    for x in range(n):
        tx = t[x]
        for y in range(n):
            ty = t[y]
            txy = t[tx[y]]
            for z in range(n):
                a = txy[z]
                b = tx[ty[z]]
                c = t[tx[z]][y]
                d = tx[t[z][y]]
                code = 0
                if a == b and c == d:
                    code |= 1
                if a == d and c == b:
                    code |= 2
                if a == c and b == d:
                    code |= 4
                counts[code] += 1
    return TripleProfile(_profile_dict(counts), n**3)


def quad_profile(L: LoopTable) -> QuadProfile:
    """Count the quadruples realizing each subset of {D,E,F}."""
    n = L.order
    counts = [0] * 8
    if n <= _PURE_SCAN_MAX_ORDER:
        t = L.table
        for x in range(n):
            tx = t[x]
            for y in range(n):
                ty = t[y]
                txy = t[tx[y]]
                for z in range(n):
                    s_row = t[txy[z]]
                    tyz = t[ty[z]]
                    for w in range(n):
                        s = s_row[w]
                        t_ = tx[tyz[w]]
                        u = t[t[tx[w]][z]][y]
                        v = tx[t[t[w][z]][y]]
                        code = 0
                        if s == t_ and u == v:
                            code |= 1
                        if s == v and t_ == u:
                            code |= 2
                        if s == u and t_ == v:
                            code |= 4
                        counts[code] += 1
    else:
        T = np.array(L.table, dtype=np.intp)
        acc = np.zeros(8, dtype=np.int64)
        for x in range(n):
            for y in range(n):
                s, t_, u, v = _quad_planes(T, x, y)
                code = (
                    ((s == t_) & (u == v)) * 1
                    + ((s == v) & (t_ == u)) * 2
                    + ((s == u) & (t_ == v)) * 4
                )
                acc += np.bincount(code.ravel(), minlength=8)
        counts = [int(c) for c in acc]
    return QuadProfile(_profile_dict(counts), n**4)


def _profile_dict(counts: list[int]) -> dict[str, int]:
    # bit 1 = D, bit 2 = E, bit 4 = F; keys in canonical PROFILE_KEYS order
    by_code = {
        "none": counts[0], "D": counts[1], "E": counts[2], "DE": counts[3],
        "F": counts[4], "DF": counts[5], "EF": counts[6], "DEF": counts[7],
    }
    return {k: by_code[k] for k in PROFILE_KEYS}


def _require_bol(L: LoopTable) -> None:
    w = check_identity(L, IdentityId.RIGHT_BOL)
    if w is not None:
        raise NotBol(w.describe())


def lemma_allthree(L: LoopTable) -> Witness | None:
    """Check the all-three-or-exactly-one pattern on every quadruple.

    Requires an SRAR loop (raises NotSrar otherwise).  Returns None when
    every quadruple's condition set has size 3 or 1, else the first
    quadruple of size 0 or 2.
    """
    ok, w = is_srar(L)
    if not ok:
        raise NotSrar(w.describe() if w is not None else "not an SRAR loop")
    n = L.order
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for w_ in range(n):
                    conds = quad_conditions(L, x, y, z, w_)
                    if len(conds) in (0, 2):
                        q = quad_values(L, x, y, z, w_)
                        lhs, rhs = _first_diff((q.s, q.t, q.u, q.v))
                        return Witness("quad_all_three_or_one", (x, y, z, w_), lhs, rhs)
    return None


def lemma_lip_equiv(L: LoopTable) -> Witness | None:
    """Pairwise equivalence of x'(xy) = y and x(x'y) = y on a Bol loop."""
    _require_bol(L)
    t = L.table
    inv = L.rinv
    n = L.order
    for x in range(n):
        tx = t[x]
        tinv = t[inv[x]]
        for y in range(n):
            a = tinv[tx[y]]
            b = tx[tinv[y]]
            if (a == y) != (b == y):
                return Witness("lip_equiv", (x, y), a, b)
    return None


def lemma_key_mfg(L: LoopTable) -> bool:
    """Does every pair commute or satisfy x'(xy) = y?

    On a Bol loop a true hypothesis forces Moufang; that consequence is
    asserted and a failure raises TheoremViolation (an implementation
    bug, not a data error).
    """
    _require_bol(L)
    t = L.table
    inv = L.rinv
    n = L.order
    hypothesis = True
    for x in range(n):
        tx = t[x]
        tinv = t[inv[x]]
        for y in range(n):
            if tx[y] != t[y][x] and tinv[tx[y]] != y:
                hypothesis = False
                break
        if not hypothesis:
            break
    if hypothesis and not is_moufang(L):
        raise TheoremViolation("commute-or-lip hypothesis holds but the loop is not Moufang")
    return hypothesis


def thm_main_verify(L: LoopTable) -> MainTheoremReport:
    """The three pair-coverage implications on a Bol loop.

    (1) D'/E' coverage implies RA2 and extra; (2) D'/F' coverage implies
    a group; (3) E'/F' coverage implies an abelian group.  Conclusions
    are evaluated unconditionally so the report is complete.
    """
    _require_bol(L)
    cov = triple_coverage(L)
    associative = check_identity(L, IdentityId.ASSOCIATIVE) is None
    commutative = check_identity(L, IdentityId.COMMUTATIVE) is None
    ra2_extra = is_ra2(L)[0] and is_extra(L)
    return MainTheoremReport(
        de_implies_ra2_extra=_implication(cov.de_everywhere, ra2_extra),
        df_implies_group=_implication(cov.df_everywhere, associative),
        ef_implies_abelian=_implication(cov.ef_everywhere, associative and commutative),
    )


def cor_odd_verify(L: LoopTable) -> ImplicationCheck:
    """Odd order and SRAR must imply associativity."""
    hypothesis = L.order % 2 == 1 and is_srar(L)[0]
    conclusion = check_identity(L, IdentityId.ASSOCIATIVE) is None
    return _implication(hypothesis, conclusion)
