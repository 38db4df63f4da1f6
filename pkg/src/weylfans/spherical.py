"""Colored cones and colored fans in the dual weight space.

Vectors here are written in fundamental-coweight coordinates, so the dual
weight lattice is the standard integer lattice: the i-th boundary divisor
maps to minus the i-th unit vector and the j-th color to the j-th column of
the Cartan matrix.  The valuation cone is the negative of the dominant
chamber.  Only the embeddings instantiated by group compactifications and
their contractions are modeled; colors are opaque symbols with a recorded
image in the lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, Mapping, Optional, Sequence

from .errors import InvalidInput, InvariantViolation
from .linalg import (
    Matrix,
    Vector,
    feasible,
    mat_vec,
    qv,
    smith_normal_form,
    vneg,
)
from .polyhedra import RationalCone, cone, contains, covered_by, faces, zero_cone
from .rootsys import RootSystem, build_root_system, longest_element
from .lattice import LatticeVector, fundamental_weight, to_basis, vector


def color_symbol(j: int) -> str:
    return f"D(w{j})"


def boundary_symbol(i: int) -> str:
    return f"D{i}"


def valuation_cone(rs: RootSystem) -> RationalCone:
    """The negative chamber cone spanned by the negated coweight basis vectors."""
    n = rs.rank
    return cone([vneg(_unit(n, i)) for i in range(n)], ambient_dim=n)


def _unit(n: int, i: int) -> Vector:
    return tuple(Q(1 if j == i else 0) for j in range(n))


def coroot_coords(rs: RootSystem, j: int) -> Vector:
    """The j-th simple coroot in coweight coordinates: a Cartan column."""
    return tuple(rs.cartan[i][j - 1] for i in range(rs.rank))


def standard_rho_table(rs: RootSystem) -> dict[str, Vector]:
    table = {}
    for i in range(1, rs.rank + 1):
        table[boundary_symbol(i)] = vneg(_unit(rs.rank, i - 1))
    for j in range(1, rs.rank + 1):
        table[color_symbol(j)] = coroot_coords(rs, j)
    return table


@dataclass(frozen=True)
class ColoredCone:
    cone: RationalCone
    colors: frozenset[str]

    def key(self):
        return (self.cone.gens, tuple(sorted(self.colors)))


@dataclass(frozen=True)
class ColoredFan:
    rank: int
    cones: tuple[ColoredCone, ...]
    valuation_cone: RationalCone
    rho_table: Mapping[str, Vector]
    colors: tuple[str, ...]  # the abstract color set of the open orbit
    boundary_names: Mapping[Vector, str]  # ray of the fan -> divisor symbol

    def boundary_divisors(self) -> tuple[tuple[str, Vector], ...]:
        out = []
        for cc in self.cones:
            if cc.cone.dim == 1:
                ray = cc.cone.gens[0]
                out.append((self.boundary_names[ray], ray))
        return tuple(sorted(set(out)))

    def is_strictly_convex(self) -> bool:
        return any(cc.cone.dim == 0 for cc in self.cones)


def _relint_meets_valuation(c: RationalCone, vcone: RationalCone) -> bool:
    """Exact test of relint(c) meeting the valuation cone."""
    if not c.gens:
        return True  # the origin lies in every cone
    if all(contains(vcone, g) for g in c.gens):
        return True  # the generator sum is an interior witness inside the cone
    n = c.ambient_dim
    k, m = len(c.gens), len(vcone.gens)
    eqs = []
    for coord in range(n):
        row = [g[coord] for g in c.gens] + [-v[coord] for v in vcone.gens]
        eqs.append((qv(row), Q(0)))
    ineqs = [(qv([1 if t == i else 0 for t in range(k + m)]), Q(1)) for i in range(k)]
    ineqs += [(qv([1 if t == k + j else 0 for t in range(k + m)]), Q(0)) for j in range(m)]
    return feasible(k + m, eqs, ineqs) is not None


def validate_colored_cone(cc: ColoredCone, vcone: RationalCone, rho: Mapping[str, Vector]) -> None:
    from .linalg import primitive_direction

    for d in cc.colors:
        if d not in rho:
            raise InvalidInput(f"color {d!r} has no recorded lattice image")
        if not contains(cc.cone, rho[d]):
            raise InvalidInput(f"color {d!r} maps outside its colored cone")
    color_rays = {primitive_direction(rho[d]) for d in cc.colors}
    for g in cc.cone.gens:
        if not contains(vcone, g) and primitive_direction(g) not in color_rays:
            raise InvalidInput(
                f"generator {g} is neither a valuation-cone element nor a color image"
            )
    if not _relint_meets_valuation(cc.cone, vcone):
        raise InvalidInput("colored cone has no interior valuation point")


def colored_faces(
    top: ColoredCone, vcone: RationalCone, rho: Mapping[str, Vector]
) -> list[ColoredCone]:
    """All colored faces of a colored cone: faces meeting the valuation cone,
    each carrying the colors whose image lands inside it."""
    out = []
    for f in faces(top.cone):
        if not _relint_meets_valuation(f, vcone):
            continue
        kept = frozenset(d for d in top.colors if contains(f, rho[d]))
        out.append(ColoredCone(cone=f, colors=kept))
    return out


def colored_fan_from_tops(
    rs: RootSystem,
    tops: Sequence[ColoredCone],
    boundary_names: Optional[Mapping[Vector, str]] = None,
    rho: Optional[Mapping[str, Vector]] = None,
    check_disjoint: bool = True,
) -> ColoredFan:
    """Close the given colored cones under colored faces and validate.

    Interior disjointness inside the valuation cone is automatic for faces
    of a single simplicial cone and is checked pairwise across distinct tops.
    """
    rho = dict(rho) if rho is not None else standard_rho_table(rs)
    vcone = valuation_cone(rs)
    collected: dict = {}
    for top in tops:
        validate_colored_cone(top, vcone, rho)
        for cc in colored_faces(top, vcone, rho):
            prev = collected.get(cc.cone.gens)
            if prev is not None and prev.colors != cc.colors:
                raise InvalidInput("one cone carries two different color sets")
            collected[cc.cone.gens] = cc
    cones = tuple(collected[k] for k in sorted(collected))
    if check_disjoint and len(tops) > 1:
        for i in range(len(cones)):
            for j in range(i + 1, len(cones)):
                if _relints_overlap_in_valuation(cones[i].cone, cones[j].cone, vcone):
                    raise InvalidInput("colored cones overlap inside the valuation cone")
    names = dict(boundary_names or {})
    for cc in cones:
        if cc.cone.dim == 1:
            ray = cc.cone.gens[0]
            if ray not in names:
                match = next(
                    (s for s, v in rho.items() if v == ray and not s.startswith("D(w")),
                    None,
                )
                names[ray] = match if match is not None else f"B{len(names) + 1}"
    return ColoredFan(
        rank=rs.rank,
        cones=cones,
        valuation_cone=vcone,
        rho_table=rho,
        colors=tuple(color_symbol(j) for j in range(1, rs.rank + 1)),
        boundary_names=names,
    )


def _relints_overlap_in_valuation(
    c1: RationalCone, c2: RationalCone, vcone: RationalCone
) -> bool:
    """Whether relint(c1), relint(c2) and the valuation cone share a point."""
    if c1.gens == c2.gens:
        return True
    if not c1.gens or not c2.gens:
        return False  # the origin is nobody's relative interior except its own
    n = c1.ambient_dim
    k1, k2, m = len(c1.gens), len(c2.gens), len(vcone.gens)
    total = k1 + k2 + m
    eqs = []
    for coord in range(n):
        row = (
            [g[coord] for g in c1.gens]
            + [-g[coord] for g in c2.gens]
            + [Q(0)] * m
        )
        eqs.append((qv(row), Q(0)))
    for coord in range(n):
        row = (
            [g[coord] for g in c1.gens]
            + [Q(0)] * k2
            + [-v[coord] for v in vcone.gens]
        )
        eqs.append((qv(row), Q(0)))
    ineqs = [(_unit(total, i), Q(1)) for i in range(k1 + k2)]
    ineqs += [(_unit(total, k1 + k2 + j), Q(0)) for j in range(m)]
    return feasible(total, eqs, ineqs) is not None


def wonderful_colored_fan(rs: RootSystem) -> ColoredFan:
    """The colored fan of the wonderful compactification: every colored face
    of the pair (valuation cone, no colors)."""
    top = ColoredCone(cone=valuation_cone(rs), colors=frozenset())
    return colored_fan_from_tops(rs, [top])


def chain_cone(rs: RootSystem, k: int) -> ColoredCone:
    """The k-th colored cone of the quotient-variety fan in type C."""
    gens = [vneg(_unit(rs.rank, 0))]
    colors = []
    for j in range(1, k):
        gens.append(coroot_coords(rs, j))
        colors.append(color_symbol(j))
    return ColoredCone(cone=cone(gens, ambient_dim=rs.rank), colors=frozenset(colors))


def z_colored_fan(n: int) -> ColoredFan:
    """Colored fan of the involution quotient of the doubled Lagrangian
    Grassmannian: a chain of colored cones over type C."""
    if n < 2:
        raise InvalidInput("the quotient fan needs rank at least 2")
    rs = build_root_system(f"C{n}")
    top = chain_cone(rs, n)
    f = colored_fan_from_tops(rs, [top], boundary_names={vneg(_unit(n, 0)): "Z1"})
    expected = {chain_cone(rs, k).key() for k in range(1, n + 1)}
    expected.add((zero_cone(n).gens, ()))
    if {cc.key() for cc in f.cones} != expected:
        raise InvariantViolation("quotient fan is not the expected chain of colored cones")
    return f


def blowup_chain_fans(n: int) -> list[ColoredFan]:
    """The colored fans of the successive contractions from the wonderful
    compactification of type C down to the involution quotient.

    The i-th fan is generated by the cone on the first i coroot columns,
    minus the first coweight, and the negated coweights past position i+1.
    """
    if n < 2:
        raise InvalidInput("the contraction chain needs rank at least 2")
    rs = build_root_system(f"C{n}")
    fans = []
    for i in range(n):
        gens = [coroot_coords(rs, j) for j in range(1, i + 1)]
        gens.append(vneg(_unit(n, 0)))
        gens += [vneg(_unit(n, t)) for t in range(i + 1, n)]
        colors = frozenset(color_symbol(j) for j in range(1, i + 1))
        top = ColoredCone(cone=cone(gens, ambient_dim=n), colors=colors)
        names = {vneg(_unit(n, 0)): boundary_symbol(1)}
        fans.append(colored_fan_from_tops(rs, [top], boundary_names=names))
    return fans


def extends_to_morphism(
    source: ColoredFan,
    target: ColoredFan,
    lattice_map: Optional[Matrix] = None,
    dominant_colors: Iterable[str] = (),
) -> bool:
    """Whether the identity on the open orbit extends equivariantly.

    True exactly when every source colored cone maps into some target
    colored cone whose colors absorb the non-dominant source colors.
    """
    dominant = frozenset(dominant_colors)

    def push(v: Vector) -> Vector:
        return mat_vec(lattice_map, v) if lattice_map is not None else v

    for cc in source.cones:
        mapped = [push(g) for g in cc.cone.gens]
        found = False
        for tc in target.cones:
            if all(contains(tc.cone, g) for g in mapped) and all(
                d in dominant or d in tc.colors for d in cc.colors
            ):
                found = True
                break
        if not found:
            return False
    return True


def is_complete_embedding(f: ColoredFan) -> bool:
    """Whether the valuation cone is covered by the fan's cones."""
    return covered_by(f.valuation_cone, [cc.cone for cc in f.cones])


def intermediate_colored_cones(
    rs: RootSystem,
    lower: ColoredCone,
    upper: ColoredCone,
) -> list[ColoredCone]:
    """Colored cones strictly between two given ones in the colored-face
    order, enumerated exhaustively from the faces of the upper cone."""
    rho = standard_rho_table(rs)
    vcone = valuation_cone(rs)
    out = []
    for cc in colored_faces(upper, vcone, rho):
        if cc.key() in (lower.key(), upper.key()):
            continue
        if _is_colored_face(lower, cc, vcone, rho) and _is_colored_face(cc, upper, vcone, rho):
            out.append(cc)
    return out


def _is_colored_face(a: ColoredCone, b: ColoredCone, vcone, rho) -> bool:
    if not set(a.cone.gens) <= set(b.cone.gens):
        return False
    if not _relint_meets_valuation(a.cone, vcone):
        return False
    return a.colors == frozenset(d for d in b.colors if contains(a.cone, rho[d]))


@dataclass(frozen=True)
class OrbitPoset:
    nodes: tuple[ColoredCone, ...]
    less_equal: tuple[tuple[bool, ...], ...]  # le[i][j]: node i is a colored face of node j

    def maximal_nodes(self) -> list[int]:
        n = len(self.nodes)
        return [
            j
            for j in range(n)
            if all(not self.less_equal[j][i] for i in range(n) if i != j)
        ]

    def is_chain(self) -> bool:
        n = len(self.nodes)
        return all(
            self.less_equal[i][j] or self.less_equal[j][i]
            for i in range(n)
            for j in range(n)
        )


def orbit_poset(f: ColoredFan) -> OrbitPoset:
    """The colored cones ordered by the colored-face relation."""
    nodes = f.cones
    le = tuple(
        tuple(
            _is_colored_face(a, b, f.valuation_cone, f.rho_table) for b in nodes
        )
        for a in nodes
    )
    return OrbitPoset(nodes=nodes, less_equal=le)


def closed_orbit_restriction(rs: RootSystem, k: int) -> tuple[LatticeVector, LatticeVector]:
    """The weight pair (-w0 . omega_k, omega_k) on the closed orbit."""
    if not 1 <= k <= rs.rank:
        raise InvalidInput(f"weight index {k} out of range for {rs.label}")
    w0 = longest_element(rs)
    omega = fundamental_weight(rs, k)
    left = vector(rs, vneg(w0.apply(omega.ambient())))
    return to_basis(left, "fund_weight"), to_basis(omega, "fund_weight")


# --- Picard presentations ----------------------------------------------------


@dataclass(frozen=True)
class DivisorLedger:
    """Named prime-divisor symbols with one integer relation row per weight."""

    symbols: tuple[str, ...]
    relations: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for row in self.relations:
            if len(row) != len(self.symbols):
                raise InvalidInput("relation length must match the symbol count")


@dataclass(frozen=True)
class PicardPresentation:
    free_rank: int
    torsion: tuple[int, ...]
    classes: Mapping[str, tuple]


def picard_presentation(ledger: DivisorLedger) -> PicardPresentation:
    """Cokernel of the relation matrix over the integers, with the image of
    every divisor symbol in invariant-factor coordinates."""
    s = len(ledger.symbols)
    if not ledger.relations:
        return PicardPresentation(
            free_rank=s,
            torsion=(),
            classes={sym: tuple([1 if i == j else 0 for i in range(s)]) for j, sym in enumerate(ledger.symbols)},
        )
    diag, t, t_inv = smith_normal_form([list(r) for r in ledger.relations])
    r = sum(1 for d in diag if d != 0)
    torsion_positions = [i for i in range(r) if diag[i] > 1]
    free_positions = list(range(r, s))
    raw = {}
    for j, sym in enumerate(ledger.symbols):
        coords = [t_inv[j][i] for i in range(s)]
        tor = tuple(coords[i] % diag[i] for i in torsion_positions)
        free = [coords[i] for i in free_positions]
        raw[sym] = (tor, free)
    # orient each free coordinate so the first symbol carrying it is positive
    for p in range(len(free_positions)):
        lead = next((raw[sym][1][p] for sym in ledger.symbols if raw[sym][1][p] != 0), 0)
        if lead < 0:
            for sym in ledger.symbols:
                raw[sym][1][p] = -raw[sym][1][p]
    classes = {sym: tor + tuple(free) for sym, (tor, free) in raw.items()}
    return PicardPresentation(
        free_rank=s - r,
        torsion=tuple(diag[i] for i in torsion_positions),
        classes=classes,
    )


def wonderful_divisor_ledger(rs: RootSystem) -> DivisorLedger:
    """Boundary divisors and colors of the wonderful compactification with
    the relations cut out by the simple roots."""
    n = rs.rank
    symbols = tuple(boundary_symbol(i) for i in range(1, n + 1)) + tuple(
        color_symbol(j) for j in range(1, n + 1)
    )
    rows = []
    for k in range(n):
        row = [-1 if i == k else 0 for i in range(n)]
        row += [int(rs.cartan[k][j]) for j in range(n)]
        rows.append(tuple(row))
    return DivisorLedger(symbols=symbols, relations=tuple(rows))


def spinor_divisor_ledger(rs: RootSystem) -> DivisorLedger:
    """The divisor ledger of the odd-rank spinor variety: one hyperplane
    symbol and the colors, with Cartan-pairing relation rows."""
    if rs.family != "B":
        raise InvalidInput("the spinor ledger is a type-B construction")
    n = rs.rank
    symbols = ("OG(1)",) + tuple(color_symbol(j) for j in range(1, n + 1))
    rows = []
    for k in range(n):
        row = [-1 if k == 0 else 0]
        row += [int(rs.cartan[k][j]) for j in range(n)]
        rows.append(tuple(row))
    return DivisorLedger(symbols=symbols, relations=tuple(rows))


@dataclass(frozen=True)
class FormalDivisor:
    terms: tuple[tuple[str, int], ...]

    def coefficient(self, symbol: str) -> int:
        for s, c in self.terms:
            if s == symbol:
                return c
        return 0


def anticanonical_divisor(f: ColoredFan, m_table: Mapping[str, int]) -> FormalDivisor:
    """The anticanonical divisor: color coefficients from the table, plus
    every boundary prime divisor once."""
    terms = []
    for d in f.colors:
        if d not in m_table:
            raise InvalidInput(f"missing anticanonical coefficient for color {d!r}")
        terms.append((d, int(m_table[d])))
    for name, _ray in f.boundary_divisors():
        terms.append((name, 1))
    return FormalDivisor(terms=tuple(terms))


def wonderful_anticanonical_divisor(rs: RootSystem) -> FormalDivisor:
    """Twice every color plus every boundary divisor."""
    f = wonderful_colored_fan(rs)
    return anticanonical_divisor(f, {d: 2 for d in f.colors})


def divisor_weight(rs: RootSystem, divisor: FormalDivisor) -> LatticeVector:
    """Weight-lattice image of a formal divisor on the wonderful
    compactification, where boundary divisors are simple roots and colors
    are fundamental weights."""
    coords = [Q(0)] * rs.rank
    for symbol, coeff in divisor.terms:
        if symbol.startswith("D(w"):
            j = int(symbol[3:-1])
            coords[j - 1] += coeff
        elif symbol.startswith("D"):
            i = int(symbol[1:])
            for t in range(rs.rank):
                coords[t] += coeff * rs.cartan[i - 1][t]
        else:
            raise InvalidInput(f"symbol {symbol!r} has no weight on this variety")
    return vector(rs, coords, "fund_weight")
