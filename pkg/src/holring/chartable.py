"""Exact complex character tables of finite groups.

Character values are cyclotomic numbers, never floats.  The generic
engine finds central characters as joint eigenvectors of the class
multiplication matrices over a prime field F_q with q = 1 mod exp(G),
then lifts values exactly by discrete Fourier inversion on cyclic
subgroups.  Closed forms cover cyclic, dihedral, affine and direct
product groups, plus the kernel-induction construction for Frobenius
groups; the independent routes are cross-checked in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CycloNum
from .groups import FiniteGroup


class Character:
    """An irreducible character: one cyclotomic value per conjugacy class."""

    __slots__ = ("group", "values", "degree", "_kernel")

    def __init__(self, group: FiniteGroup, values):
        vals = []
        for v in values:
            if not isinstance(v, CycloNum):
                v = CycloNum.rational(v)
            vals.append(v.minimal())
        self.group = group
        self.values = tuple(vals)
        d = self.values[0].as_rational()
        assert d is not None and d.denominator == 1 and d > 0
        self.degree = int(d)
        self._kernel = None

    def value_on(self, element_id: int) -> CycloNum:
        cls = self.group.classes()
        return self.values[cls.class_of[element_id]]

    @property
    def kernel(self) -> frozenset:
        if self._kernel is None:
            cls = self.group.classes()
            deg = CycloNum.rational(self.degree)
            ker = set()
            for ci, members in enumerate(cls.classes):
                if self.values[ci] == deg:
                    ker.update(members)
            self._kernel = frozenset(ker)
        return self._kernel

    @property
    def field_conductor(self) -> int:
        """Conductor of the field generated by all values."""
        return math.lcm(*(v.conductor for v in self.values))

    def inner(self, other: "Character") -> CycloNum:
        cls = self.group.classes()
        total = CycloNum.rational(0)
        for ci, size in enumerate(cls.sizes):
            total = total + self.values[ci] * other.values[ci].conjugate() * size
        return (total * Fraction(1, self.group.order)).minimal()

    def __eq__(self, other):
        return isinstance(other, Character) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"Character(degree={self.degree}, conductor={self.field_conductor})"


@dataclass(frozen=True)
class CharTable:
    group: FiniteGroup
    characters: tuple
    method: str

    def to_jsonable(self) -> dict:
        g = self.group
        cls = g.classes()
        return {
            "group": {"order": g.order, "family": g.family},
            "classes": [
                {
                    "representative": list(g.elements[rep]),
                    "size": cls.sizes[ci],
                    "element_order": g.element_order(rep),
                }
                for ci, rep in enumerate(cls.representatives)
            ],
            "characters": [
                {
                    "degree": ch.degree,
                    "field_conductor": ch.field_conductor,
                    "values": [
                        {"conductor": v.conductor, "text": v.to_text()}
                        for v in ch.values
                    ],
                }
                for ch in self.characters
            ],
        }


def _char_sort_key(ch: Character, exponent: int):
    key = []
    for v in ch.values:
        key.append(tuple(-c for c in v.embedded(exponent).c))
    return (ch.degree, key)


def _finish(group: FiniteGroup, chars: list, method: str) -> CharTable:
    k = len(group.classes().classes)
    assert len(chars) == k, f"expected {k} characters, built {len(chars)}"
    assert sum(ch.degree**2 for ch in chars) == group.order
    assert len(set(chars)) == k, "characters must be pairwise distinct"
    exponent = group.exponent()
    chars = sorted(chars, key=lambda ch: _char_sort_key(ch, exponent))
    return CharTable(group, tuple(chars), method)


# -- linear algebra and polynomial arithmetic over F_q -------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _find_modulus(exponent: int, order: int) -> int:
    q = exponent + 1
    while q <= 10**6:
        if q * q > 4 * order and _is_prime(q):
            return q
        q += exponent
    raise RuntimeError("no usable prime q = 1 mod exp(G) below 10^6")


def _primitive_root(q: int) -> int:
    fact = []
    m = q - 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            fact.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        fact.append(m)
    for g in range(2, q):
        if all(pow(g, (q - 1) // r, q) != 1 for r in fact):
            return g
    raise RuntimeError("no primitive root found")


def _fq_matvec(mat, vec, q):
    return [sum(row[t] * vec[t] for t in range(len(vec))) % q for row in mat]


def _fq_vecmat(vec, mat, q):
    width = len(mat[0])
    out = [0] * width
    for s, xs in enumerate(vec):
        if xs:
            row = mat[s]
            for t in range(width):
                out[t] = (out[t] + xs * row[t]) % q
    return out


def _fq_rref(rows, q):
    """(rref rows, transform, pivot columns) with transform * rows = rref."""
    m = [list(r) for r in rows]
    n = len(m)
    width = len(m[0])
    t = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    pivots = []
    row = 0
    for col in range(width):
        sel = next((r for r in range(row, n) if m[r][col] % q), None)
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        t[row], t[sel] = t[sel], t[row]
        inv = pow(m[row][col], q - 2, q)
        m[row] = [x * inv % q for x in m[row]]
        t[row] = [x * inv % q for x in t[row]]
        for r in range(n):
            if r != row and m[r][col] % q:
                f = m[r][col]
                m[r] = [(a - f * b) % q for a, b in zip(m[r], m[row])]
                t[r] = [(a - f * b) % q for a, b in zip(t[r], t[row])]
        pivots.append(col)
        row += 1
        if row == n:
            break
    return m[:row], t[:row], pivots


def _fq_kernel(mat, q):
    """Basis of the right kernel of mat."""
    n_rows = len(mat)
    n_cols = len(mat[0])
    rref, _, pivots = _fq_rref(mat, q) if n_rows else ([], [], [])
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n_cols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-rref[r][fc]) % q
        basis.append(v)
    return basis


def _ptrim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _pmul(a, b, q):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % q
    return _ptrim(out)


def _pdivmod(a, b, q):
    a = list(a)
    binv = pow(b[-1], q - 2, q)
    quo = [0] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * binv % q
        shift = len(a) - len(b)
        quo[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % q
        a.pop()
    return _ptrim(quo), _ptrim(a if any(a) else [0])


def _pgcd(a, b, q):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b != [0]:
        a, b = b, _pdivmod(a, b, q)[1]
    inv = pow(a[-1], q - 2, q)
    return [x * inv % q for x in a]


def _ppowmod(base, e, mod, q):
    result = [1]
    base = _pdivmod(base, mod, q)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, q), mod, q)[1]
        base = _pdivmod(_pmul(base, base, q), mod, q)[1]
        e >>= 1
    return result


def _fq_roots(f, q):
    """Roots of f, which must be squarefree and split over F_q."""
    inv = pow(f[-1], q - 2, q)
    f = [x * inv % q for x in f]
    roots = []
    stack = [f]
    while stack:
        g = stack.pop()
        d = len(g) - 1
        if d == 0:
            continue
        if d == 1:
            roots.append((-g[0]) % q)
            continue
        c = 0
        while True:
            h = _ppowmod([c, 1], (q - 1) // 2, g, q)
            h = _ptrim([(h[0] - 1) % q] + list(h[1:]))
            if h != [0]:
                s = _pgcd(g, h, q)
                if 0 < len(s) - 1 < d:
                    stack.append(s)
                    stack.append(_pdivmod(g, s, q)[0])
                    break
            c += 1
    assert len(roots) == len(f) - 1
    return sorted(roots)


def _fq_min_poly(step, dim, q):
    """Minimal polynomial of the linear map `step` on F_q^dim."""
    m = [1]
    for s in range(dim):
        if len(m) - 1 == dim:
            break
        v = [0] * dim
        v[s] = 1
        kry = [v]
        ann = None
        while ann is None:
            nxt = step(kry[-1])
            rref, trans, piv = _fq_rref(kry, q)
            coords = [nxt[p] for p in piv]
            if _fq_vecmat(coords, rref, q) == nxt:
                inbasis = _fq_vecmat(coords, trans, q)
                ann = [(-c) % q for c in inbasis] + [1]
            else:
                kry.append(nxt)
        g = _pgcd(m, ann, q)
        m = _pdivmod(_pmul(m, ann, q), g, q)[0]
    return m


# -- the generic engine ---------------------------------------------------


def dixon_table(group: FiniteGroup) -> CharTable:
    cls = group.classes()
    k = len(cls.classes)
    if k == 1:
        return CharTable(group, (Character(group, [CycloNum.rational(1)]),),
                         "generic")
    exponent = group.exponent()
    q = _find_modulus(exponent, group.order)
    reps = cls.representatives

    mats = []
    for i in range(k):
        a = [[0] * k for _ in range(k)]
        for kk in range(k):
            z = reps[kk]
            for x in cls.classes[i]:
                j = cls.class_of[group.mul(group.inv(x), z)]
                a[j][kk] += 1
        mats.append([[v % q for v in row] for row in a])

    # split F_q^k into the joint eigenspaces of the class matrices
    spaces = [[[1 if t == s else 0 for t in range(k)] for s in range(k)]]
    for i in range(1, k):
        if all(len(w) == 1 for w in spaces):
            break
        mat = mats[i]
        next_spaces = []
        for basis in spaces:
            d = len(basis)
            if d == 1:
                next_spaces.append(basis)
                continue
            rref, trans, piv = _fq_rref(basis, q)
            restricted = []
            for b in basis:
                img = _fq_matvec(mat, b, q)
                coords = [img[p] for p in piv]
                assert _fq_vecmat(coords, rref, q) == img
                restricted.append(_fq_vecmat(coords, trans, q))

            def step(x, r=restricted):
                return _fq_vecmat(x, r, q)

            minpoly = _fq_min_poly(step, d, q)
            if len(minpoly) - 1 == 1:
                next_spaces.append(basis)
                continue
            covered = 0
            for lam in _fq_roots(minpoly, q):
                shifted = [
                    [(restricted[s][t] - (lam if s == t else 0)) % q
                     for t in range(d)]
                    for s in range(d)
                ]
                transposed = [[shifted[s][t] for s in range(d)] for t in range(d)]
                eig = _fq_kernel(transposed, q)
                assert eig
                next_spaces.append([_fq_vecmat(x, basis, q) for x in eig])
                covered += len(eig)
            assert covered == d
        spaces = next_spaces
    if any(len(w) != 1 for w in spaces):
        raise RuntimeError("class matrices failed to separate the characters")

    inv_size = [pow(sz, q - 2, q) for sz in cls.sizes]
    jstar = [cls.class_of[group.inv(r)] for r in reps]
    omegas = []
    for (vec,) in spaces:
        assert vec[0] % q, "central character vanishes at the identity"
        scale = pow(vec[0], q - 2, q)
        omegas.append([x * scale % q for x in vec])

    root = _primitive_root(q)
    chars = []
    for om in omegas:
        s = sum(om[j] * om[jstar[j]] * inv_size[j] for j in range(k)) % q
        deg_sq = group.order * pow(s, q - 2, q) % q
        cands = [d for d in range(1, math.isqrt(group.order) + 1)
                 if d * d % q == deg_sq]
        assert len(cands) == 1, f"degree not uniquely determined: {cands}"
        deg = cands[0]
        class_vals = [deg * om[j] * inv_size[j] % q for j in range(k)]
        values = []
        for j in range(k):
            o = group.element_order(reps[j])
            zinv = pow(pow(root, (q - 1) // o, q), q - 2, q)
            series = [class_vals[cls.class_of[group.power(reps[j], t)]]
                      for t in range(o)]
            o_inv = pow(o, q - 2, q)
            coeffs = []
            for l in range(o):
                m_l = o_inv * sum(
                    series[t] * pow(zinv, l * t, q) for t in range(o)
                ) % q
                assert m_l <= deg, "root-of-unity multiplicity out of range"
                coeffs.append(m_l)
            assert sum(coeffs) == deg
            values.append(CycloNum(o, coeffs).minimal())
        chars.append(Character(group, values))
    return _finish(group, chars, "generic")


# -- closed forms ---------------------------------------------------------


def _rotation_logs(group: FiniteGroup, rot: int) -> dict:
    logs = {0: 0}
    x, t = 0, 0
    while True:
        x = group.mul(x, rot)
        t += 1
        if x == 0:
            break
        logs[x] = t
    return logs


def cyclic_table(group: FiniteGroup) -> CharTable:
    n = group.order
    cls = group.classes()
    logs = _rotation_logs(group, group.meta["rotation"]) if n > 1 else {0: 0}
    chars = []
    for j in range(n):
        values = [
            CycloNum.root_of_unity(n, j * logs[rep]).minimal()
            for rep in cls.representatives
        ]
        chars.append(Character(group, values))
    return _finish(group, chars, "closed")


def dihedral_table(group: FiniteGroup) -> CharTable:
    n = group.family["n"]
    cls = group.classes()
    refl = group.meta["reflection"]
    logs = _rotation_logs(group, group.meta["rotation"])
    kinds = []
    for rep in cls.representatives:
        if rep in logs:
            kinds.append(("rot", logs[rep]))
        else:
            kinds.append(("ref", logs[group.mul(rep, group.inv(refl))]))
    chars = []

    def linear(on_rot, on_ref):
        vals = [
            CycloNum.rational(on_rot(t) if kind == "rot" else on_ref(t))
            for kind, t in kinds
        ]
        chars.append(Character(group, vals))

    linear(lambda t: 1, lambda t: 1)
    linear(lambda t: 1, lambda t: -1)
    if n % 2 == 0:
        linear(lambda t: (-1) ** t, lambda t: (-1) ** t)
        linear(lambda t: (-1) ** t, lambda t: (-1) ** (t + 1))
    top = (n - 1) // 2 if n % 2 else n // 2 - 1
    for h in range(1, top + 1):
        vals = []
        for kind, t in kinds:
            if kind == "rot":
                v = CycloNum.root_of_unity(n, h * t) + \
                    CycloNum.root_of_unity(n, -h * t)
                vals.append(v.minimal())
            else:
                vals.append(CycloNum.rational(0))
        chars.append(Character(group, vals))
    return _finish(group, chars, "closed")


def affine_table(group: FiniteGroup) -> CharTable:
    q = group.family["q"]
    cls = group.classes()
    assert len(cls.classes) == q
    decomp = group.meta["decomp"]
    kernel = group.meta["kernel"]
    chars = []
    for j in range(q - 1):
        values = [
            CycloNum.root_of_unity(q - 1, j * decomp[rep][0]).minimal()
            for rep in cls.representatives
        ]
        chars.append(Character(group, values))
    big = []
    for rep in cls.representatives:
        if rep == 0:
            big.append(CycloNum.rational(q - 1))
        elif rep in kernel:
            big.append(CycloNum.rational(-1))
        else:
            big.append(CycloNum.rational(0))
    chars.append(Character(group, big))
    return _finish(group, chars, "closed")


def product_table(group: FiniteGroup) -> CharTable:
    left, right = group.meta["factors"]
    tl, tr = character_table(left), character_table(right)
    pair_of = group.meta["pair_of"]
    lcls, rcls = left.classes(), right.classes()
    pairs = []
    for rep in group.classes().representatives:
        i, j = pair_of[rep]
        pairs.append((lcls.class_of[i], rcls.class_of[j]))
    chars = []
    for x in tl.characters:
        for y in tr.characters:
            values = [(x.values[i] * y.values[j]).minimal() for i, j in pairs]
            chars.append(Character(group, values))
    return _finish(group, chars, "closed")


def induce_character(group: FiniteGroup, sub_group: FiniteGroup,
                     embed: list, psi: Character) -> Character:
    """Character of `group` induced from `psi` on a subgroup.

    `sub_group` and `embed` are as returned by subgroup_as_group.  The
    value at x is the average of psi over the conjugates of x landing in
    the subgroup.
    """
    inv_embed = {gid: hid for hid, gid in enumerate(embed)}
    hcls = sub_group.classes()
    values = []
    for rep in group.classes().representatives:
        total = CycloNum.rational(0)
        for t in range(group.order):
            y = group.mul(group.mul(group.inv(t), rep), t)
            hid = inv_embed.get(y)
            if hid is not None:
                total = total + psi.values[hcls.class_of[hid]]
        values.append((total * Fraction(1, sub_group.order)).minimal())
    return Character(group, values)


def frobenius_table(group: FiniteGroup) -> CharTable:
    """Table of a Frobenius group from its kernel and quotient.

    Characters are the inflations from G/N plus one induced character
    per orbit of nontrivial kernel characters under conjugation.
    """
    fk = group.frobenius_kernel_complement()
    if fk is None:
        raise ValueError("group has no Frobenius kernel")
    kernel, _ = fk
    cls = group.classes()

    qgroup, to_q = group.quotient(kernel.element_ids)
    qcls = qgroup.classes()
    chars = []
    for ch in character_table(qgroup).characters:
        values = [ch.values[qcls.class_of[to_q[rep]]]
                  for rep in cls.representatives]
        chars.append(Character(group, values))

    ngroup, embed = group.subgroup_as_group(kernel.element_ids)
    inv_embed = {gid: hid for hid, gid in enumerate(embed)}
    ncls = ngroup.classes()
    seen = set()
    for psi in character_table(ngroup).characters:
        if all(v.as_rational() == 1 for v in psi.values):
            continue
        sig = tuple(psi.values[ncls.class_of[h]] for h in range(ngroup.order))
        if sig in seen:
            continue
        for t in range(group.order):
            ti = group.inv(t)
            conj = tuple(
                sig[inv_embed[group.mul(group.mul(t, embed[h]), ti)]]
                for h in range(ngroup.order)
            )
            seen.add(conj)
        ind = induce_character(group, ngroup, embed, psi)
        assert ind.inner(ind).as_rational() == 1, "induced character not irreducible"
        chars.append(ind)
    return _finish(group, chars, "frobenius")


def character_table(group: FiniteGroup, method: str = "auto") -> CharTable:
    key = ("chartable", method)
    if key in group._cache:
        return group._cache[key]
    fam = (group.family or {}).get("family")
    if method == "auto":
        if fam == "cyclic":
            table = cyclic_table(group)
        elif fam == "dihedral":
            table = dihedral_table(group)
        elif fam == "affine":
            table = affine_table(group)
        elif fam == "product" and "factors" in group.meta:
            table = product_table(group)
        else:
            table = dixon_table(group)
    elif method == "generic":
        table = dixon_table(group)
    elif method == "frobenius":
        table = frobenius_table(group)
    elif method == "closed":
        if fam == "cyclic":
            table = cyclic_table(group)
        elif fam == "dihedral":
            table = dihedral_table(group)
        elif fam == "affine":
            table = affine_table(group)
        elif fam == "product" and "factors" in group.meta:
            table = product_table(group)
        else:
            raise ValueError(f"no closed form for family {fam!r}")
    else:
        raise ValueError(f"unknown method {method!r}")
    group._cache[key] = table
    return table
