"""Named verification suites.

Each suite returns a SuiteReport whose checks carry a status (pass, fail or
skipped), a one-line message and machine-readable details. Everything is
deterministic for a fixed seed: all sampling goes through one random.Random.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import permutations
from math import comb
from typing import Callable

from . import braid as br
from . import catalog as cat
from . import exterior as ext
from . import mcg
from .lattice import smith_invariants
from .lie import htensor_in_Fmr, map_b_matrix, witt
from .words import ADMISSIBLE, LONGITUDE

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"

# Default resource budgets; the ranks suite only does linear algebra and may go one genus higher.
MAX_GENUS = 4
MAX_RANKS_GENUS = 5
MAX_DEGREE = 6
MAX_CUTOFF = 8


class BudgetError(ValueError):
    """Requested parameters exceed the configured resource budget."""


@dataclass
class Check:
    name: str
    status: str
    message: str = ""
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "message": self.message, "details": self.details}


@dataclass
class SuiteParams:
    genus: int = 3
    max_degree: int = 6
    cutoff: int = 8
    seed: int = 0
    samples: int = 4

    def to_json(self) -> dict:
        return {"genus": self.genus, "max_degree": self.max_degree, "cutoff": self.cutoff,
                "seed": self.seed, "samples": self.samples}


@dataclass
class SuiteReport:
    suite: str
    parameters: SuiteParams
    checks: list[Check]
    wall_time: float = 0.0

    @property
    def status(self) -> str:
        return PASS if all(c.status != FAIL for c in self.checks) else FAIL

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def to_json(self) -> dict:
        return {"suite": self.suite, "status": self.status, "parameters": self.parameters.to_json(),
                "wall_time": round(self.wall_time, 3), "checks": [c.to_json() for c in self.checks]}

    def format_table(self) -> str:
        width = max([len(c.name) for c in self.checks] + [5])
        lines = [f"suite {self.suite}: {self.status.upper()} ({self.wall_time:.1f}s)"]
        for c in self.checks:
            lines.append(f"  {c.status:<7} {c.name:<{width}}  {c.message}")
        return "\n".join(lines)


def _check(name: str, ok: bool, message: str = "", **details) -> Check:
    return Check(name, PASS if ok else FAIL, message, details)


def _skip(name: str, message: str) -> Check:
    return Check(name, SKIPPED, message)


# -- exact sequence ------------------------------------------------------------

def suite_exact_seq(p: SuiteParams, rng: random.Random) -> list[Check]:
    out = []
    for dim in range(2, 2 * p.genus + 1, 2):
        r = ext.exact_sequence_check(dim)
        d = r.details
        out.append(_check(f"exact sequence dim {dim}", r.ok and d["rank_wedge3"] == comb(dim, 3),
                          f"theta.eta=0: {d['composite_zero']}, rank image {d['rank_image']}, "
                          f"rank kernel {d['rank_kernel']}, C({dim},3) = {comb(dim, 3)}", **d))
    return out


# -- the subgroup K and the filtration K_m ---------------------------------------

def _wedge_text(v, genus: int) -> str:
    return ext.WedgeVector.from_vector(2 * genus, 3, v).format(genus)


def suite_kernel_K(p: SuiteParams, rng: random.Random) -> list[Check]:
    out = []
    for g in range(1, p.genus + 1):
        r = ext.K_generators_check(g)
        out.append(_check(f"K generated by four families g={g}", r.ok,
                          f"rank K {r.details['rank_K']}, rank generated {r.details['rank_generated']}",
                          **r.details))
        K1, K, K2 = ext.Km_lattice(g, 1), ext.kernel_K(g), ext.Km_lattice(g, 2)
        nested = K2 <= K <= K1
        w1, w2 = K1.witness_outside(K), K.witness_outside(K2)
        details = {"rank_K1": K1.rank, "rank_K": K.rank, "rank_K2": K2.rank}
        if w1 is not None:
            details["witness_K1_not_K"] = _wedge_text(w1, g)
        if w2 is not None:
            details["witness_K_not_K2"] = _wedge_text(w2, g)
        name = f"K_1 > K > K_2 g={g}"
        if g >= 3:
            ok = nested and w1 is not None and w2 is not None and w1 in K1 and w1 not in K \
                and w2 in K and w2 not in K2
            out.append(_check(name, ok, f"strict, witnesses {details.get('witness_K1_not_K')} and "
                                        f"{details.get('witness_K_not_K2')}", **details))
        else:
            out.append(_check(name, nested, f"nested; K = K_2: {K == K2} (strictness not expected)", **details))
    return out


def suite_km_filtration(p: SuiteParams, rng: random.Random) -> list[Check]:
    out = []
    for g in range(2, p.genus + 1):
        for m in (2, 3):
            r = ext.Km_generation_check(g, m)
            out.append(_check(f"K_{m} from (S-1)K_{m - 1} g={g}", r.ok,
                              f"inclusion {r.details['inclusion']}, rank K_{m} {r.details['rank_Km']}, "
                              f"rank generated {r.details['rank_generated']}", **r.details))
    # J_1 of m-fold commutators of L-twist generators lands in K_m.
    g = p.genus
    if g >= 2:
        for m in (2, 3):
            bad, nonzero = [], 0
            Km = ext.Km_lattice(g, m)
            for _ in range(p.samples):
                f = cat.iterated_L_commutator(g, m, rng, 2)
                tau = mcg.johnson_tau(f)
                nonzero += not tau.is_zero()
                if tau.vector() not in Km:
                    bad.append(f.label())
            out.append(_check(f"J_1 of {m}-fold L commutators in K_{m} g={g}", not bad,
                              f"{p.samples} samples, {nonzero} nonzero", failures=bad))
    return out


# -- the commutator identity and the extension of J --------------------------------

def worked_examples(genus: int = 3) -> list[dict]:
    """The four exterior-level commutator identities over every ordered triple of distinct handles."""
    g = genus
    X = lambda i: ext.x(i, g)  # noqa: E731
    Y = lambda i: ext.y(i, g)  # noqa: E731
    rows = []
    for i, j, k in permutations(range(1, g + 1), 3):
        cases = []
        # (1) y_k -> y_k + x_k moves x_i^x_j^y_k to x_i^x_j^x_k.
        A = [[0] * g for _ in range(g)]
        A[k - 1][k - 1] = 1
        cases.append((1, A, ext.w3(g, X(i), X(j), Y(k)), ext.w3(g, X(i), X(j), X(k))))
        A = [[0] * g for _ in range(g)]
        A[i - 1][i - 1] = 1
        # (2) y_i -> y_i + x_i moves y_i^x_j^y_k to x_i^x_j^y_k.
        cases.append((2, A, ext.w3(g, Y(i), X(j), Y(k)), ext.w3(g, X(i), X(j), Y(k))))
        # (3) the same map moves y_i^y_j^y_k to x_i^y_j^y_k.
        cases.append((3, A, ext.w3(g, Y(i), Y(j), Y(k)), ext.w3(g, X(i), Y(j), Y(k))))
        # (4) y_i -> y_i + x_j and y_j -> y_j + x_i.
        A = [[0] * g for _ in range(g)]
        A[i - 1][j - 1] = A[j - 1][i - 1] = 1
        rhs = ext.w3(g, Y(i), X(i), Y(k)) + ext.w3(g, X(j), Y(j), Y(k)) + ext.w3(g, X(j), X(i), Y(k))
        cases.append((4, A, ext.w3(g, Y(i), Y(j), Y(k)), rhs))
        for number, A, tau_h, expected in cases:
            got = ext.sp3_minus_one(ext.Bg_embed(A), tau_h, g)
            rows.append({"example": number, "triple": (i, j, k), "ok": got == expected,
                         "tau_h": tau_h.format(g), "got": got.format(g), "expected": expected.format(g)})
    return rows


def jcom_pairs(g: int, rng: random.Random, samples: int) -> list[dict]:
    return [mcg.jcom_check(f, h) for f, h in cat.catalog_pairs(g, rng, samples)]


def suite_jcom(p: SuiteParams, rng: random.Random) -> list[Check]:
    out = []
    if p.genus >= 3:
        rows = worked_examples(3)
        for number in (1, 2, 3, 4):
            mine = [r for r in rows if r["example"] == number]
            bad = [r for r in mine if not r["ok"]]
            first = mine[0]
            out.append(_check(f"worked example ({number})", not bad,
                              f"(f_*-1)({first['tau_h']}) = {first['got']} for {first['triple']}, "
                              f"{len(mine)} triples", failures=bad))
    else:
        out.append(_skip("worked examples", "need genus >= 3"))
    for g in range(2, p.genus + 1):
        rows = jcom_pairs(g, rng, p.samples)
        bad = [r for r in rows if not r["ok"]]
        nonzero = sum(r["rhs"] != "0" for r in rows)
        out.append(_check(f"tau([f,h]) = (f_*-1)tau(h) g={g}", not bad,
                          f"{len(rows)} pairs, {nonzero} with nonzero value", pairs=len(rows),
                          nonzero=nonzero, failures=bad[:5]))
        out.extend(_extension_checks(g, rng, p.samples))
    return out


def _jvalue_text(value, g: int) -> str:
    first, second = value
    return f"({first.format(g)}, {second or 0})"


def _extension_checks(g: int, rng: random.Random, samples: int) -> list[Check]:
    out = []
    gens = cat.twist_catalog(g, LONGITUDE) + cat.twist_catalog(g, ADMISSIBLE)
    bad = [f.label() for f in gens if not mcg.cal_J_is_zero(mcg.cal_J(f))]
    out.append(_check(f"extended J vanishes on L generators g={g}", not bad,
                      f"{len(gens)} generators", failures=bad))
    torelli = cat.torelli_catalog(g, LONGITUDE, rng, samples) + cat.torelli_catalog(g, ADMISSIBLE, rng, samples)
    bad, nonzero = [], 0
    for h in torelli:
        tau = mcg.johnson_tau(h)
        value = mcg.cal_J(h)
        nonzero += not mcg.cal_J_is_zero(value)
        if value[0] != ext.proj_p(tau, g) or value[1] != ext.contract_c_mod_L(tau, g):
            bad.append({"h": h.label(), "cal_J": _jvalue_text(value, g), "tau": tau.format(g)})
    out.append(_check(f"extended J = (p tau, c tau mod L) g={g}", not bad,
                      f"{len(torelli)} Torelli samples, {nonzero} with nonzero value", failures=bad))
    bad = []
    longitude_gens = cat.L_generators(g)
    for h in (t for t in torelli if t.boundary == LONGITUDE):
        f = rng.choice(longitude_gens)
        both = mcg.cal_J(mcg.compose(f, h))
        one, two = mcg.cal_J(f), mcg.cal_J(h)
        total = {k: one[1].get(k, 0) + two[1].get(k, 0) for k in set(one[1]) | set(two[1])}
        total = {k: v for k, v in total.items() if v}
        if both[0] != one[0] + two[0] or both[1] != total:
            bad.append(f"{f.label()} * {h.label()}")
    out.append(_check(f"extended J is additive on products g={g}", not bad, failures=bad))
    return out


# -- braids --------------------------------------------------------------------

def _product_samples(g: int, rng: random.Random, count: int) -> list[br.PureBraid]:
    return [br.random_product(g, rng.randint(1, 5), rng) for _ in range(count)]


def suite_braid_psi(p: SuiteParams, rng: random.Random) -> list[Check]:
    out = []
    for g in range(2, p.genus + 1):
        braids = br.artin_generators(g) + _product_samples(g, rng, max(20, p.samples))
        bad_matrix, bad_J, bad_hom = [], [], []
        for a in braids:
            f = br.psi(a)
            A = [[-c for c in row] for row in a.linking_matrix()]
            if mcg.symplectic_matrix(f) != ext.Bg_embed(A):
                bad_matrix.append(a.label())
            if not mcg.cal_J_is_zero(mcg.cal_J(f)):
                bad_J.append(a.label())
        for _ in range(p.samples):
            a, b = rng.sample(braids, 2)
            if br.psi(br.compose(a, b)).images != mcg.compose(br.psi(a), br.psi(b)).images:
                bad_hom.append(f"{a.label()} * {b.label()}")
        out.append(_check(f"psi matrix is (I -A; 0 I) g={g}", not bad_matrix,
                          f"{len(braids)} braids ({len(braids) - max(20, p.samples)} Artin generators)",
                          failures=bad_matrix))
        out.append(_check(f"extended J vanishes on psi images g={g}", not bad_J, failures=bad_J))
        out.append(_check(f"psi is a homomorphism g={g}", not bad_hom, f"{p.samples} pairs", failures=bad_hom))
    g = p.genus
    if g >= 3:
        out.extend(_psi_depth_checks(g, p, rng))
        out.append(_J_b_check(g, p, rng))
    else:
        out.append(_skip("J_{n-1}(psi) in L (x) L_n(L)", "need genus >= 3"))
    return out


def _psi_depth_checks(g: int, p: SuiteParams, rng: random.Random) -> list[Check]:
    out = []
    for n in range(2, min(4, p.max_degree) + 1):
        if n > p.cutoff:
            out.append(_skip(f"J_{n - 1}(psi) in L (x) L_{n}(L) depth {n}", f"cutoff {p.cutoff} below {n}"))
            continue
        bad, nonzero = [], 0
        for _ in range(p.samples):
            a = br.random_commutator_jet(g, n, rng, n)
            J = mcg.johnson_morita(br.psi_jet(a), n - 1)
            nonzero += bool(J.coords)
            if not J.in_lagrangian_part(g):
                bad.append(a.name)
        out.append(_check(f"J_{n - 1}(psi) in L (x) L_{n}(L) depth {n} g={g}", not bad,
                          f"{p.samples} samples, {nonzero} nonzero", failures=bad))
    # psi(a) lies in the kernel of tau exactly when the longitudes lie in the third LCS term.
    bad, seen = [], {True: 0, False: 0}
    for depth in (1, 2, 3, 4):
        for _ in range(p.samples):
            a = br.random_commutator_jet(g, depth, rng, 2)
            f = br.psi_jet(a)
            in_K = mcg.is_torelli(f) and mcg.johnson_tau(f).is_zero()
            deep = a.weight_degree().at_least(3)
            seen[deep] += 1
            if in_K != deep:
                bad.append({"braid": a.name, "depth_at_least_3": deep, "in_kernel": in_K})
    out.append(_check(f"psi(a) in kernel of tau iff depth >= 3 g={g}", not bad and all(seen.values()),
                      f"{seen[True]} deep and {seen[False]} shallow samples", failures=bad))
    return out


def _J_b_check(g: int, p: SuiteParams, rng: random.Random) -> Check:
    """Braid-side J_b against tau of the psi image, and additivity of J_b."""
    bad, values = [], []
    samples = [br.random_iterated_commutator(g, 2, rng) for _ in range(p.samples)]
    for a in samples:
        jb = br.lagrangian_wedge_to_H(br.J_b(a), g)
        values.append(jb)
        tau = mcg.johnson_tau(br.psi(a))
        # Under the orientation conventions fixed here the two sides differ by a global sign.
        if tau != -jb:
            bad.append({"braid": a.label(), "J_b": jb.format(g), "tau": tau.format(g)})
    for a, b in zip(samples, samples[1:]):
        if br.J_b(br.compose(a, b)) != br.J_b(a) + br.J_b(b):
            bad.append({"sum": f"{a.label()} * {b.label()}"})
    nonzero = sum(not v.is_zero() for v in values)
    return _check(f"tau(psi(a)) = -J_b(a) and J_b additive g={g}", not bad,
                  f"{len(samples)} depth-2 samples, {nonzero} nonzero", failures=bad)


def suite_braid_kappa(p: SuiteParams, rng: random.Random) -> list[Check]:
    out = []
    for g in range(2, min(p.genus, 3) + 1):
        braids = br.artin_generators(g) + [br.random_iterated_commutator(g, 2, rng) for _ in range(p.samples)]
        bad = []
        for a in braids:
            f = br.kappa(a)
            if not (mcg.is_torelli(f) and mcg.johnson_tau(f).is_zero()):
                bad.append(a.label())
        out.append(_check(f"kappa lands in kernel of tau g={g}", not bad,
                          f"{len(braids)} braids, boundary word preserved by construction", failures=bad))
        for n in range(1, 4):
            name = f"kappa depth {n} in weight {2 * n} and J_{2 * n} formula g={g}"
            if 2 * n + 1 > p.cutoff or 2 * n + 1 > p.max_degree + 1:
                out.append(_skip(name, f"needs cutoff {2 * n + 1} and degree {2 * n + 1}"))
                continue
            count = p.samples if n < 3 else max(1, p.samples // 2)
            bad, degrees = [], []
            for _ in range(count):
                a = br.random_commutator_jet(g, n, rng, 2 * n + 1)
                f = br.kappa_jet(a)
                d = mcg.weight_degree(f, 2 * n + 1)
                degrees.append(str(d))
                if not d.at_least(2 * n):
                    bad.append({"braid": a.name, "weight_degree": str(d)})
                    continue
                if mcg.johnson_morita(f, 2 * n) != br.kappa_J_formula(a, n):
                    bad.append({"braid": a.name, "formula": "mismatch"})
            out.append(_check(name, not bad, f"weight degrees {degrees}", failures=bad))
        for n in range(1, 4):
            if 2 * n > p.max_degree:
                continue
            r = br.delta_star_rank(g, n)
            out.append(_check(f"delta injective on degree {n} g={g}", r["injective"] and r["leading_terms_increasing"],
                              f"rank {r['rank']} = witt({g},{n}) = {r['witt']}", **r))
    return out


# -- ranks -----------------------------------------------------------------------

def kernel_b_rank(g: int, n: int) -> int:
    """Rank of the kernel of b on L (x) L_n(L), from the Smith normal form."""
    M = map_b_matrix(g, n, restricted_to_L=True)
    return M.ncols - len(smith_invariants(M))


def rank_difference_formula(g: int, n: int) -> int | None:
    if n == 3:
        return (g ** 3 - g) // 6
    if n == 4:
        return (g ** 3 - g) * (g - 2) // 8
    return None


def rank_rows(genus_range, degree_range) -> list[dict]:
    rows = []
    for g in genus_range:
        for n in degree_range:
            row = {"g": g, "n": n, "witt": witt(g, n), "r": br.rank_r(g, n),
                   "r_framed": br.rank_r(g, n, framed=True)}
            if n == 1 and g >= 1:
                row["rank_K"] = ext.kernel_K(g).rank
                row["rank_K_m"] = [ext.Km_lattice(g, m).rank for m in range(5)]
            if n >= 2:
                kb = kernel_b_rank(g, n)
                row["rank_ker_b"] = kb
                row["difference"] = kb - row["r"]
            rows.append(row)
    return rows


def suite_ranks(p: SuiteParams, rng: random.Random) -> list[Check]:
    out = []
    vals = {g: br.rank_r(g, 2) for g in range(1, 7)}
    out.append(_check("r(g,2) = C(g,3) for g <= 6", all(v == comb(g, 3) for g, v in vals.items()),
                      ", ".join(f"r({g},2)={v}" for g, v in vals.items()), values=vals))
    framed = {g: br.rank_r(g, 1, framed=True) for g in range(1, 7)}
    out.append(_check("framed r(g,1) = g(g+1)/2", all(v == g * (g + 1) // 2 for g, v in framed.items()),
                      ", ".join(f"{g}:{v}" for g, v in framed.items()), values=framed))
    for n in (3, 4):
        if n + 1 > p.max_degree:
            out.append(_skip(f"rank ker b - r(g,{n})", f"degree {n + 1} over budget {p.max_degree}"))
            continue
        got, bad = {}, []
        for g in range(2, p.genus + 1):
            diff = kernel_b_rank(g, n) - br.rank_r(g, n)
            got[g] = diff
            if diff != rank_difference_formula(g, n):
                bad.append(g)
        formula = "(g^3-g)/6" if n == 3 else "(g^3-g)(g-2)/8"
        out.append(_check(f"rank ker b - r(g,{n}) = {formula}", not bad,
                          ", ".join(f"g={g}: {d}" for g, d in got.items()), values=got, failures=bad))
    return out


# -- weight filtration -------------------------------------------------------------

def lcl_length(n: int) -> int:
    """Commutator length that forces weight degree n, never below 1."""
    return max(comb(n + 3, 2) - 6, 1)


def suite_weight_filtration(p: SuiteParams, rng: random.Random) -> list[Check]:
    out = []
    g = p.genus
    if g < 2:
        return [_skip("weight filtration", "need genus >= 2")]
    for n in (2, 3):
        q = lcl_length(n)
        name = f"{q}-fold L commutators have weight degree >= {n} g={g}"
        cutoff = n + 1
        if cutoff > p.cutoff:
            out.append(_skip(name, f"cutoff {p.cutoff} below {n + 1}"))
            continue
        bad, degrees = [], []
        for _ in range(p.samples):
            f = cat.iterated_L_commutator(g, q, rng, cutoff)
            d = mcg.weight_degree(f, cutoff)
            degrees.append(str(d))
            if not d.at_least(n):
                bad.append({"map": f.label(), "weight_degree": str(d)})
        out.append(_check(name, not bad, f"weight degrees {degrees} (decided up to cutoff {cutoff})",
                          failures=bad))
    for n, r in ((1, 1), (1, 2), (2, 1)):
        q = lcl_length(n)
        name = f"J_{n} of {q + r}-fold L commutators in F^{r}_{n + 1} g={g}"
        bad, nonzero = [], 0
        for _ in range(p.samples):
            f = cat.iterated_L_commutator(g, q + r, rng, n + 1)
            J = mcg.johnson_morita(f, n)
            nonzero += bool(J.coords)
            if not htensor_in_Fmr(J, g, r):
                bad.append({"map": f.label(), "J": J.format(g)})
        out.append(_check(name, not bad, f"{p.samples} samples, {nonzero} nonzero", failures=bad))
    return out


def audit_check() -> Check:
    """Every J_n computed so far satisfied b(J_n) = 0."""
    bad = [entry for entry in mcg.B_AUDIT if not entry[2]]
    return _check("b(J_n) = 0 for every computed J_n", bool(mcg.B_AUDIT) and not bad,
                  f"{len(mcg.B_AUDIT)} values audited", audited=len(mcg.B_AUDIT), failures=bad[:5])


SUITES: dict[str, Callable[[SuiteParams, random.Random], list[Check]]] = {
    "exact-seq": suite_exact_seq,
    "kernel-K": suite_kernel_K,
    "km-filtration": suite_km_filtration,
    "jcom": suite_jcom,
    "braid-psi": suite_braid_psi,
    "braid-kappa": suite_braid_kappa,
    "ranks": suite_ranks,
    "weight-filtration": suite_weight_filtration,
}


def check_budget(suite: str, p: SuiteParams) -> None:
    limit = MAX_RANKS_GENUS if suite == "ranks" else MAX_GENUS
    if not 1 <= p.genus <= limit:
        raise BudgetError(f"genus must lie in 1..{limit} for suite {suite}, got {p.genus}")
    if not 2 <= p.max_degree <= MAX_DEGREE:
        raise BudgetError(f"max degree must lie in 2..{MAX_DEGREE}, got {p.max_degree}")
    if not 2 <= p.cutoff <= MAX_CUTOFF:
        raise BudgetError(f"cutoff must lie in 2..{MAX_CUTOFF}, got {p.cutoff}")
    if p.samples < 1:
        raise BudgetError("samples must be positive")


def run_suite(suite: str, params: SuiteParams | None = None) -> SuiteReport:
    """Run one named suite, or every suite followed by the b(J_n) audit for ``all``."""
    p = params or SuiteParams()
    if suite != "all" and suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    names = list(SUITES) if suite == "all" else [suite]
    for name in names:
        check_budget(name if suite != "all" else "all", p)
    start = time.perf_counter()
    rng = random.Random(p.seed)
    checks: list[Check] = []
    for name in names:
        for c in SUITES[name](p, rng):
            if suite == "all":
                c.name = f"{name}: {c.name}"
            checks.append(c)
    if suite == "all":
        checks.append(audit_check())
    checks.sort(key=lambda c: c.name)
    return SuiteReport(suite, p, checks, time.perf_counter() - start)
